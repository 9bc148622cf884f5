#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "weylkac/cartan.hpp"
#include "weylkac/series.hpp"

namespace weylkac {

using WeightMultiset = std::multiset<DominantWeight>;

// Normalized character χ_λ = U_λ / U_0, truncated at degree_bound. All
// coefficients are weight multiplicities (non-negative integers).
TruncatedSeries character(const CartanMatrix& A, const DominantWeight& lambda,
                          std::int64_t degree_bound);

// Π_λ∈Λ U_λ; the empty product is 1.
TruncatedSeries numerator_product(const CartanMatrix& A, const WeightMultiset& weights,
                                  std::int64_t degree_bound);

// Recovers the unique multiset Λ with Π_λ∈Λ U_λ = P, by repeatedly reading
// off the minimal-degree regular monomial M^λ of −log(residual) and peeling
// the corresponding numerator. Requires an indecomposable A; P must have
// constant term 1 and integer coefficients. Callers wanting a guaranteed
// full peel should supply degree_bound >= Σ deg(λ_i).
WeightMultiset factorize_numerators(const CartanMatrix& A, const TruncatedSeries& P,
                                    std::int64_t degree_bound);

// Multiplies a normalized tensor character Π_{i<=n} χ_{λ_i} by U_0^n and
// delegates to factorize_numerators; checks that exactly n weights come back.
WeightMultiset factorize_tensor_character(const CartanMatrix& A, const TruncatedSeries& chi_product,
                                          int n, std::int64_t degree_bound);

struct LeadingTermReport {
    Rational coefficient;                 // coefficient of M^λ in (−log U_λ)^#
    std::vector<std::string> violations;  // empty iff the shape checks hold
};

// Checks that (−log U_λ)^# has no regular term of degree < deg(λ) and that
// the only possible term at degree deg(λ) sits at M^λ with a non-negative
// integer coefficient; returns that coefficient (0 when absent).
LeadingTermReport verify_leading_term(const CartanMatrix& A, const DominantWeight& lambda,
                                      std::int64_t degree_bound);

} // namespace weylkac
