#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "weylkac/cartan.hpp"
#include "weylkac/rational.hpp"

namespace weylkac {

/// Truncated formal power series in the variables X_1..X_rank with exact
/// rational coefficients: a sparse map from exponent vectors of total degree
/// <= bound to nonzero coefficients in lowest terms. The truncation bound is
/// part of the value; binary operations demand equal ranks and bounds.
class TruncatedSeries {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    TruncatedSeries(int rank, std::int64_t bound);   // the zero series

    static TruncatedSeries zero(int rank, std::int64_t bound);
    static TruncatedSeries one(int rank, std::int64_t bound);
    static TruncatedSeries monomial(const ExponentVector& e, const Rational& coeff,
                                    std::int64_t bound);
    // Accumulates duplicates, drops zeros, checks degrees against the bound.
    static TruncatedSeries from_terms(int rank, std::int64_t bound,
                                      const std::vector<std::pair<ExponentVector, Rational>>& terms);

    int rank() const { return rank_; }
    std::int64_t bound() const { return bound_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const ExponentVector& e) const;
    Rational constant_term() const;
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool integral() const;   // every coefficient has denominator 1

    friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) {
        return f.rank_ == g.rank_ && f.bound_ == g.bound_ && f.terms_ == g.terms_;
    }

private:
    int rank_;
    std::int64_t bound_;
    TermMap terms_;
};

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries negate(const TruncatedSeries& f);
TruncatedSeries scale(const TruncatedSeries& f, const Rational& c);

// Convolution product, terms above the bound discarded.
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);

// f/g for g with nonzero constant term, by graded back-substitution;
// mul(div_by_unit(f, g), g) == f holds exactly up to the bound.
TruncatedSeries div_by_unit(const TruncatedSeries& f, const TruncatedSeries& g);

// -log f for f with constant term exactly 1: the series Σ_{k>=1} (1-f)^k / k,
// computed through the Euler-operator identity E(log f) = E(f)/f.
TruncatedSeries neg_log(const TruncatedSeries& f);

// Projection onto the monomials in which every variable appears.
TruncatedSeries regular_part(const TruncatedSeries& f);

// All regular terms of minimal total degree, graded-lex ascending; empty if
// the series has no regular term.
std::vector<std::pair<ExponentVector, Rational>>
min_regular_monomials(const TruncatedSeries& f);

// Lower the bound to new_bound <= bound(f), dropping terms above it.
TruncatedSeries truncate(const TruncatedSeries& f, std::int64_t new_bound);

inline TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) { return add(f, g); }
inline TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) { return sub(f, g); }
inline TruncatedSeries operator-(const TruncatedSeries& f) { return negate(f); }
inline TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) { return mul(f, g); }

/// Series file format (bit-exact, LF line endings, single ASCII spaces):
///
///   # weyl-series v1
///   # rank=<l> degree=<D>
///   <e_1> <e_2> ... <e_l> : <coeff>
///
/// one line per nonzero term, graded-lex ascending, coefficients in lowest
/// terms ("p" or "p/q" with q > 1).
void write_series(std::ostream& out, const TruncatedSeries& f);
TruncatedSeries read_series(std::istream& in);

} // namespace weylkac
