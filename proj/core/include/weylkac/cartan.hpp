#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "weylkac/graph.hpp"
#include "weylkac/rational.hpp"

namespace weylkac {

/// Exponent vector of a monomial prod_i X_i^{e_i}: non-negative entries,
/// one per simple root. Ordered graded-lexicographically (total degree
/// first, then lex), which is the term order used everywhere.
class ExponentVector {
public:
    explicit ExponentVector(std::vector<std::int64_t> exps);
    static ExponentVector zeros(int rank);
    static ExponentVector ones(int rank);

    int rank() const { return static_cast<int>(exps_.size()); }
    std::int64_t degree() const { return degree_; }
    bool is_regular() const;   // every entry >= 1
    std::int64_t operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
    std::span<const std::int64_t> exps() const { return exps_; }

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
        return a.exps_ == b.exps_;
    }
    // graded-lex
    friend bool operator<(const ExponentVector& a, const ExponentVector& b);

    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);

private:
    std::vector<std::int64_t> exps_;
    std::int64_t degree_;
};

/// Dominant integral weight, stored as its coroot pairings m_i = <λ, α_i^∨>.
/// Two weights with equal pairings are the same weight here; that is the
/// restriction to the derived Cartan, which is all the numerator machinery
/// ever sees.
class DominantWeight {
public:
    explicit DominantWeight(std::vector<std::int64_t> coords);
    static DominantWeight zero(int rank);

    int rank() const { return static_cast<int>(coords_.size()); }
    std::int64_t operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    std::span<const std::int64_t> coords() const { return coords_; }

    friend bool operator==(const DominantWeight& a, const DominantWeight& b) {
        return a.coords_ == b.coords_;
    }
    // graded-lex, used for sorted display and multiset storage
    friend bool operator<(const DominantWeight& a, const DominantWeight& b);

private:
    std::vector<std::int64_t> coords_;
};

/// Generalized Cartan matrix together with a symmetrizer d (positive
/// rationals with d_i a_ij = d_j a_ji, normalized so min d_i = 1).
/// Instances only exist for matrices that passed validate_gcm, so every
/// CartanMatrix is symmetrizable by construction.
class CartanMatrix {
public:
    int rank() const { return static_cast<int>(a_.size()); }
    std::int64_t entry(int i, int j) const {
        return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const std::vector<std::vector<std::int64_t>>& entries() const { return a_; }
    const std::vector<Rational>& symmetrizer() const { return d_; }

    friend CartanMatrix validate_gcm(const std::vector<std::vector<std::int64_t>>& matrix);

private:
    CartanMatrix(std::vector<std::vector<std::int64_t>> a, std::vector<Rational> d)
        : a_(std::move(a)), d_(std::move(d)) {}

    std::vector<std::vector<std::int64_t>> a_;
    std::vector<Rational> d_;
};

enum class AlgebraType { finite, affine, indefinite };

const char* algebra_type_name(AlgebraType t);

// Checks the GCM axioms (2 on the diagonal, non-positive off-diagonal,
// symmetric zero pattern) and computes the symmetrizer by spanning-tree
// ratio propagation plus a full pairwise consistency check.
CartanMatrix validate_gcm(const std::vector<std::vector<std::int64_t>>& matrix);

// Edge {i,j} iff a_ij != 0, i != j.
DynkinGraph dynkin_graph(const CartanMatrix& A);

bool is_indecomposable(const CartanMatrix& A);

// Signs of the leading principal minors of the symmetrized matrix DA decide
// the type; requires an indecomposable matrix.
AlgebraType classify(const CartanMatrix& A);

// a_i = <λ+ρ, α_i^∨> = m_i + 1.
std::vector<std::int64_t> rho_shift(const DominantWeight& lambda);

// M^λ = prod X_i^{a_i}; always regular.
ExponentVector m_lambda(const DominantWeight& lambda);

// deg(λ) = Σ (m_i + 1).
std::int64_t deg_lambda(const DominantWeight& lambda);

} // namespace weylkac
