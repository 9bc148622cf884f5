#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylkac/cartan.hpp"
#include "weylkac/series.hpp"

namespace weylkac {

/// One Weyl-group element's data, for a fixed dominant λ:
///   offset    c(w) with λ+ρ − w(λ+ρ) = Σ c_i α_i
///   pairings  v_i = <w(λ+ρ), α_i^∨>
///   length    l(w)
///   support   bitmask of the simple reflections occurring in w
///   sign      (−1)^length
struct WeylOrbitNode {
    ExponentVector offset;
    std::vector<Integer> pairings;
    int length;
    std::uint64_t support;
    int sign;
};

// Breadth-first enumeration of exactly {w in W : degree(c(w)) <= degree_bound},
// each element once, by left multiplication with simple reflections (child by
// letter i allowed when v_i > 0), deduplicated on the offset vector. Nodes
// come out in BFS discovery order, identity first.
std::vector<WeylOrbitNode> orbit_bfs(const CartanMatrix& A, const DominantWeight& lambda,
                                     std::int64_t degree_bound);

// Normalized Weyl numerator U_λ = Σ_w ε(w) X^{c(w)}, truncated at degree_bound.
// Integer coefficients, constant term 1.
TruncatedSeries numerator(const CartanMatrix& A, const DominantWeight& lambda,
                          std::int64_t degree_bound);

// Unbounded closure: the exact numerator polynomial when W is finite, with
// the bound set to the maximal occurring degree. Throws node_cap_exceeded
// when the closure passes node_cap nodes (infinite or too-large Weyl group).
TruncatedSeries full_numerator(const CartanMatrix& A, const DominantWeight& lambda,
                               std::size_t node_cap = 100000);

// Checks, on every non-identity node of orbit_bfs:
//   (a) support(w) == {i : c_i != 0}
//   (b) c_i >= a_i on the support, a = rho_shift(λ)
//   (c) totally disconnected support  =>  c_i == a_i on the support
//   (d) otherwise some β in the support has c_β > a_β
// Returns human-readable violation records; empty means all hold.
std::vector<std::string> verify_offset_laws(const CartanMatrix& A, const DominantWeight& lambda,
                                            std::int64_t degree_bound);

// Same checks over the full (finite) Weyl group.
std::vector<std::string> verify_offset_laws_full(const CartanMatrix& A,
                                                 const DominantWeight& lambda,
                                                 std::size_t node_cap = 100000);

// Multiplicity of the root Σ_i α_i: the coefficient of X_1···X_l in
// −log U_0 at bound l. Guaranteed a non-negative integer; anything else
// raises non_integral_coefficient.
std::int64_t mult_sum_simple_roots(const CartanMatrix& A);

// All positive roots of a finite-type algebra, as coordinate vectors over
// the simple roots, closed under simple reflections. Sorted graded-lex.
std::vector<ExponentVector> finite_positive_roots(const CartanMatrix& A,
                                                  std::size_t cap = 10000);

} // namespace weylkac
