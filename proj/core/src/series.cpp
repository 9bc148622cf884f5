#include "weylkac/series.hpp"

#include <cassert>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "weylkac/errors.hpp"

namespace weylkac {

namespace {

void check_compatible(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.rank() != g.rank())
        throw Error(errc::rank_mismatch,
                    std::to_string(f.rank()) + " vs " + std::to_string(g.rank()));
    if (f.bound() != g.bound())
        throw Error(errc::bound_mismatch,
                    std::to_string(f.bound()) + " vs " + std::to_string(g.bound()));
}

struct VecHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (std::int64_t x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Above this many monomials the dense kernels fall back to pure map code.
constexpr std::size_t kDenseCap = 400000;

// All monomials of the given rank with total degree <= bound, graded-lex
// ascending, with O(1) index lookup. Index order equals term-map order.
class MonomialTable {
public:
    static std::optional<MonomialTable> build(int rank, std::int64_t bound) {
        Integer count = 1;   // C(bound + rank, rank)
        for (int i = 1; i <= rank; ++i) {
            count *= Integer(bound + i);
            count /= i;
        }
        if (count > static_cast<unsigned long>(kDenseCap)) return std::nullopt;

        MonomialTable t;
        t.monos_.reserve(count.get_ui());
        std::vector<std::int64_t> cur(static_cast<std::size_t>(rank), 0);
        for (std::int64_t d = 0; d <= bound; ++d) t.emit(cur, 0, d, d);
        t.lookup_.reserve(t.monos_.size() * 2);
        for (std::size_t i = 0; i < t.monos_.size(); ++i)
            t.lookup_.emplace(t.monos_[i], static_cast<std::uint32_t>(i));
        return t;
    }

    std::size_t size() const { return monos_.size(); }
    const std::vector<std::int64_t>& mono(std::size_t idx) const { return monos_[idx]; }
    std::int64_t degree(std::size_t idx) const { return degs_[idx]; }

    std::size_t index(const std::vector<std::int64_t>& e) const {
        auto it = lookup_.find(e);
        assert(it != lookup_.end());
        return it->second;
    }

private:
    void emit(std::vector<std::int64_t>& cur, std::size_t pos, std::int64_t rem, std::int64_t total) {
        if (pos + 1 == cur.size()) {
            cur[pos] = rem;
            monos_.push_back(cur);
            degs_.push_back(total);
            cur[pos] = 0;
            return;
        }
        for (std::int64_t e = 0; e <= rem; ++e) {
            cur[pos] = e;
            emit(cur, pos + 1, rem - e, total);
        }
        cur[pos] = 0;
    }

    std::vector<std::vector<std::int64_t>> monos_;
    std::vector<std::int64_t> degs_;
    std::unordered_map<std::vector<std::int64_t>, std::uint32_t, VecHash> lookup_;
};

TruncatedSeries make_series(int rank, std::int64_t bound, TruncatedSeries::TermMap terms);

// --- multiplication kernels ---------------------------------------------

TruncatedSeries mul_map(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries::TermMap out;
    for (const auto& [e1, c1] : f.terms()) {
        for (const auto& [e2, c2] : g.terms()) {
            if (e1.degree() + e2.degree() > f.bound()) break;   // g ascending by degree
            ExponentVector e = e1 + e2;
            Rational& slot = out[e];
            slot += c1 * c2;
            if (slot == 0) out.erase(e);
        }
    }
    return make_series(f.rank(), f.bound(), std::move(out));
}

TruncatedSeries mul_dense_int(const TruncatedSeries& f, const TruncatedSeries& g,
                              const MonomialTable& table) {
    std::vector<Integer> acc(table.size());
    std::vector<std::int64_t> scratch(static_cast<std::size_t>(f.rank()));
    for (const auto& [e1, c1] : f.terms()) {
        mpz_srcptr z1 = mpq_numref(c1.get_mpq_t());
        for (const auto& [e2, c2] : g.terms()) {
            if (e1.degree() + e2.degree() > f.bound()) break;
            for (int i = 0; i < f.rank(); ++i) scratch[static_cast<std::size_t>(i)] = e1[i] + e2[i];
            mpz_addmul(acc[table.index(scratch)].get_mpz_t(), z1,
                       mpq_numref(c2.get_mpq_t()));
        }
    }
    TruncatedSeries::TermMap out;
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (acc[i] != 0)
            out.emplace_hint(out.end(), ExponentVector(table.mono(i)), Rational(acc[i]));
    return make_series(f.rank(), f.bound(), std::move(out));
}

TruncatedSeries mul_dense_rat(const TruncatedSeries& f, const TruncatedSeries& g,
                              const MonomialTable& table) {
    std::vector<Rational> acc(table.size());
    std::vector<std::int64_t> scratch(static_cast<std::size_t>(f.rank()));
    for (const auto& [e1, c1] : f.terms()) {
        for (const auto& [e2, c2] : g.terms()) {
            if (e1.degree() + e2.degree() > f.bound()) break;
            for (int i = 0; i < f.rank(); ++i) scratch[static_cast<std::size_t>(i)] = e1[i] + e2[i];
            acc[table.index(scratch)] += c1 * c2;
        }
    }
    TruncatedSeries::TermMap out;
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (acc[i] != 0)
            out.emplace_hint(out.end(), ExponentVector(table.mono(i)), acc[i]);
    return make_series(f.rank(), f.bound(), std::move(out));
}

// --- division kernels -----------------------------------------------------

// Back-substitution in graded-lex order: repeatedly clear the minimal
// residual term t with q = r_t / g_0, pushing -q * X^t * (g - g_0) back into
// the residual. Every pushed term is strictly graded-greater than t.
TruncatedSeries div_map(const TruncatedSeries& f, const TruncatedSeries& g) {
    const Rational g0 = g.constant_term();
    const ExponentVector zero = ExponentVector::zeros(f.rank());
    TruncatedSeries::TermMap r = f.terms();
    TruncatedSeries::TermMap h;
    while (!r.empty()) {
        auto it = r.begin();
        ExponentVector t = it->first;
        Rational q = it->second / g0;
        r.erase(it);
        h.emplace_hint(h.end(), t, q);
        for (const auto& [s, gs] : g.terms()) {
            if (s == zero) continue;
            if (t.degree() + s.degree() > f.bound()) break;
            ExponentVector e = t + s;
            Rational& slot = r[e];
            slot -= q * gs;
            if (slot == 0) r.erase(e);
        }
    }
    return make_series(f.rank(), f.bound(), std::move(h));
}

template <typename Coeff>
TruncatedSeries div_dense(const TruncatedSeries& f, const TruncatedSeries& g,
                          const MonomialTable& table) {
    // Coeff = Integer only when f, g are integral and g_0 = ±1, so every
    // intermediate value stays integral.
    const Rational g0q = g.constant_term();

    std::vector<Coeff> r(table.size());
    for (const auto& [e, c] : f.terms()) {
        std::size_t idx = table.index(std::vector<std::int64_t>(e.exps().begin(), e.exps().end()));
        if constexpr (std::is_same_v<Coeff, Integer>)
            r[idx] = c.get_num();
        else
            r[idx] = c;
    }

    struct Tail {
        std::vector<std::int64_t> exps;
        std::int64_t degree;
        Coeff coeff;
    };
    std::vector<Tail> tail;
    for (const auto& [s, gs] : g.terms()) {
        if (s.degree() == 0) continue;
        Tail t;
        t.exps.assign(s.exps().begin(), s.exps().end());
        t.degree = s.degree();
        if constexpr (std::is_same_v<Coeff, Integer>)
            t.coeff = gs.get_num();
        else
            t.coeff = gs;
        tail.push_back(std::move(t));
    }

    const bool g0_is_one = (g0q == 1);
    TruncatedSeries::TermMap h;
    std::vector<std::int64_t> scratch(static_cast<std::size_t>(f.rank()));
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        if (r[idx] == 0) continue;
        Coeff q;
        if constexpr (std::is_same_v<Coeff, Integer>)
            q = g0_is_one ? r[idx] : Coeff(-r[idx]);
        else
            q = r[idx] / g0q;
        const auto& t = table.mono(idx);
        const std::int64_t tdeg = table.degree(idx);
        for (const Tail& s : tail) {
            if (tdeg + s.degree > f.bound()) break;
            for (std::size_t i = 0; i < scratch.size(); ++i) scratch[i] = t[i] + s.exps[i];
            std::size_t j = table.index(scratch);
            if constexpr (std::is_same_v<Coeff, Integer>)
                mpz_submul(r[j].get_mpz_t(), q.get_mpz_t(), s.coeff.get_mpz_t());
            else
                r[j] -= q * s.coeff;
        }
        h.emplace_hint(h.end(), ExponentVector(t), Rational(q));
    }
    return make_series(f.rank(), f.bound(), std::move(h));
}

} // namespace

// --- TruncatedSeries ------------------------------------------------------

TruncatedSeries::TruncatedSeries(int rank, std::int64_t bound) : rank_(rank), bound_(bound) {
    if (rank < 1)
        throw Error(errc::invalid_input, "series rank must be positive");
    if (bound < 0)
        throw Error(errc::invalid_input, "series bound must be non-negative");
}

TruncatedSeries TruncatedSeries::zero(int rank, std::int64_t bound) {
    return TruncatedSeries(rank, bound);
}

TruncatedSeries TruncatedSeries::one(int rank, std::int64_t bound) {
    TruncatedSeries s(rank, bound);
    s.terms_.emplace(ExponentVector::zeros(rank), Rational(1));
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const ExponentVector& e, const Rational& coeff,
                                          std::int64_t bound) {
    TruncatedSeries s(e.rank(), bound);
    if (e.degree() > bound)
        throw Error(errc::degree_above_bound,
                    "monomial degree " + std::to_string(e.degree()) + " > bound " + std::to_string(bound));
    if (coeff != 0) s.terms_.emplace(e, coeff);
    return s;
}

TruncatedSeries TruncatedSeries::from_terms(
    int rank, std::int64_t bound, const std::vector<std::pair<ExponentVector, Rational>>& terms) {
    TruncatedSeries s(rank, bound);
    for (const auto& [e, c] : terms) {
        if (e.rank() != rank)
            throw Error(errc::rank_mismatch, "term rank does not match series rank");
        if (e.degree() > bound)
            throw Error(errc::degree_above_bound,
                        "term degree " + std::to_string(e.degree()) + " > bound " + std::to_string(bound));
        Rational& slot = s.terms_[e];
        slot += c;
        if (slot == 0) s.terms_.erase(e);
    }
    return s;
}

Rational TruncatedSeries::coefficient(const ExponentVector& e) const {
    if (e.rank() != rank_)
        throw Error(errc::rank_mismatch, "exponent rank does not match series rank");
    if (e.degree() > bound_)
        throw Error(errc::degree_above_bound,
                    "degree " + std::to_string(e.degree()) + " > bound " + std::to_string(bound_));
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::constant_term() const {
    auto it = terms_.find(ExponentVector::zeros(rank_));
    return it == terms_.end() ? Rational(0) : it->second;
}

bool TruncatedSeries::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.degree() == 0 &&
           terms_.begin()->second == 1;
}

bool TruncatedSeries::integral() const {
    for (const auto& [e, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

namespace {

TruncatedSeries make_series(int rank, std::int64_t bound, TruncatedSeries::TermMap terms) {
    std::vector<std::pair<ExponentVector, Rational>> v;
    v.reserve(terms.size());
    for (auto& [e, c] : terms)
        if (c != 0) v.emplace_back(e, c);
    return TruncatedSeries::from_terms(rank, bound, v);
}

} // namespace

// --- arithmetic -----------------------------------------------------------

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
    check_compatible(f, g);
    TruncatedSeries::TermMap out = f.terms();
    for (const auto& [e, c] : g.terms()) {
        Rational& slot = out[e];
        slot += c;
        if (slot == 0) out.erase(e);
    }
    return make_series(f.rank(), f.bound(), std::move(out));
}

TruncatedSeries negate(const TruncatedSeries& f) {
    return scale(f, Rational(-1));
}

TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g) {
    return add(f, negate(g));
}

TruncatedSeries scale(const TruncatedSeries& f, const Rational& c) {
    TruncatedSeries::TermMap out;
    if (c != 0)
        for (const auto& [e, fc] : f.terms()) out.emplace_hint(out.end(), e, fc * c);
    return make_series(f.rank(), f.bound(), std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    check_compatible(f, g);
    if (f.is_zero() || g.is_zero()) return TruncatedSeries::zero(f.rank(), f.bound());
    auto table = MonomialTable::build(f.rank(), f.bound());
    if (!table) return mul_map(f, g);
    if (f.integral() && g.integral()) return mul_dense_int(f, g, *table);
    return mul_dense_rat(f, g, *table);
}

TruncatedSeries div_by_unit(const TruncatedSeries& f, const TruncatedSeries& g) {
    check_compatible(f, g);
    const Rational g0 = g.constant_term();
    if (g0 == 0)
        throw Error(errc::non_unit_divisor, "divisor has zero constant term");
    if (f.is_zero()) return TruncatedSeries::zero(f.rank(), f.bound());
    auto table = MonomialTable::build(f.rank(), f.bound());
    if (!table) return div_map(f, g);
    if (f.integral() && g.integral() && (g0 == 1 || g0 == -1))
        return div_dense<Integer>(f, g, *table);
    return div_dense<Rational>(f, g, *table);
}

TruncatedSeries neg_log(const TruncatedSeries& f) {
    if (f.constant_term() != 1)
        throw Error(errc::constant_term_not_one, "neg_log needs constant term exactly 1");
    // E(log f) = E(f)/f with the Euler operator E = Σ X_i ∂_i, which scales
    // each term by its total degree; so (-log f)_e = -(E(f)/f)_e / deg(e).
    std::vector<std::pair<ExponentVector, Rational>> euler;
    euler.reserve(f.term_count());
    for (const auto& [e, c] : f.terms())
        if (e.degree() > 0) euler.emplace_back(e, c * Rational(Integer(e.degree())));
    TruncatedSeries h = div_by_unit(TruncatedSeries::from_terms(f.rank(), f.bound(), euler), f);

    std::vector<std::pair<ExponentVector, Rational>> out;
    out.reserve(h.term_count());
    for (const auto& [e, c] : h.terms()) {
        assert(e.degree() >= 1);
        out.emplace_back(e, -c / Rational(Integer(e.degree())));
    }
    return TruncatedSeries::from_terms(f.rank(), f.bound(), out);
}

TruncatedSeries regular_part(const TruncatedSeries& f) {
    std::vector<std::pair<ExponentVector, Rational>> out;
    for (const auto& [e, c] : f.terms())
        if (e.is_regular()) out.emplace_back(e, c);
    return TruncatedSeries::from_terms(f.rank(), f.bound(), out);
}

std::vector<std::pair<ExponentVector, Rational>>
min_regular_monomials(const TruncatedSeries& f) {
    std::vector<std::pair<ExponentVector, Rational>> out;
    std::int64_t min_degree = -1;
    for (const auto& [e, c] : f.terms()) {   // graded ascending
        if (!e.is_regular()) continue;
        if (min_degree < 0) min_degree = e.degree();
        if (e.degree() > min_degree) break;
        out.emplace_back(e, c);
    }
    return out;
}

TruncatedSeries truncate(const TruncatedSeries& f, std::int64_t new_bound) {
    if (new_bound > f.bound())
        throw Error(errc::bound_mismatch, "cannot raise a truncation bound");
    std::vector<std::pair<ExponentVector, Rational>> out;
    for (const auto& [e, c] : f.terms()) {
        if (e.degree() > new_bound) break;
        out.emplace_back(e, c);
    }
    return TruncatedSeries::from_terms(f.rank(), new_bound, out);
}

// --- file format ------------------------------------------------------------

void write_series(std::ostream& out, const TruncatedSeries& f) {
    out << "# weyl-series v1\n";
    out << "# rank=" << f.rank() << " degree=" << f.bound() << "\n";
    for (const auto& [e, c] : f.terms()) {
        for (int i = 0; i < f.rank(); ++i) out << e[i] << ' ';
        out << ": " << rational_to_string(c) << "\n";
    }
}

namespace {

std::int64_t parse_int_token(const std::string& tok, const char* what) {
    if (tok.empty() || (tok.size() > 1 && tok.front() == '0') ||
        tok.find_first_not_of("0123456789") != std::string::npos)
        throw Error(errc::invalid_input, std::string("bad ") + what + " '" + tok + "'");
    try {
        return std::stoll(tok);
    } catch (const std::exception&) {
        throw Error(errc::invalid_input, std::string("bad ") + what + " '" + tok + "'");
    }
}

} // namespace

TruncatedSeries read_series(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "# weyl-series v1")
        throw Error(errc::invalid_input, "missing '# weyl-series v1' header");
    if (!std::getline(in, line))
        throw Error(errc::invalid_input, "missing rank/degree header");
    const std::string prefix = "# rank=";
    if (line.rfind(prefix, 0) != 0)
        throw Error(errc::invalid_input, "bad rank/degree header '" + line + "'");
    std::string rest = line.substr(prefix.size());
    auto sep = rest.find(" degree=");
    if (sep == std::string::npos)
        throw Error(errc::invalid_input, "bad rank/degree header '" + line + "'");
    std::int64_t rank = parse_int_token(rest.substr(0, sep), "rank");
    std::int64_t bound = parse_int_token(rest.substr(sep + 8), "degree");
    if (rank < 1 || rank > 1024)
        throw Error(errc::invalid_input, "rank out of range");

    std::vector<std::pair<ExponentVector, Rational>> acc;
    std::optional<ExponentVector> prev;
    while (std::getline(in, line)) {
        if (line.empty())
            throw Error(errc::invalid_input, "blank line in series file");
        auto colon = line.find(" : ");
        if (colon == std::string::npos)
            throw Error(errc::invalid_input, "malformed term line '" + line + "'");
        std::string left = line.substr(0, colon);
        std::string right = line.substr(colon + 3);

        std::vector<std::int64_t> exps;
        std::size_t pos = 0;
        while (pos <= left.size()) {
            auto space = left.find(' ', pos);
            std::string tok = left.substr(pos, space == std::string::npos ? std::string::npos : space - pos);
            exps.push_back(parse_int_token(tok, "exponent"));
            if (space == std::string::npos) break;
            pos = space + 1;
        }
        if (static_cast<std::int64_t>(exps.size()) != rank)
            throw Error(errc::invalid_input, "term has wrong rank: '" + line + "'");
        ExponentVector e{std::move(exps)};
        if (e.degree() > bound)
            throw Error(errc::invalid_input, "term degree exceeds bound: '" + line + "'");
        Rational c = parse_rational(right);
        if (c == 0)
            throw Error(errc::invalid_input, "zero coefficient stored: '" + line + "'");
        if (prev && !(*prev < e))
            throw Error(errc::invalid_input, "terms not in ascending graded-lex order");
        prev = e;
        acc.emplace_back(std::move(e), std::move(c));
    }
    return TruncatedSeries::from_terms(static_cast<int>(rank), bound, acc);
}

} // namespace weylkac
