#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "weylkac/graph.hpp"

namespace weylkac {

/// Ordered tuple of pairwise disjoint, non-empty, totally disconnected
/// (independent) vertex sets covering all vertices; parts as bitmasks.
using KPartition = std::vector<std::uint64_t>;

// All non-empty independent sets, as bitmasks, ascending.
std::vector<std::uint64_t> totally_disconnected_subsets(const DynkinGraph& g);

// c_k(G): the number of ordered k-partitions, counted by backtracking
// (vertices placed one at a time, branches without enough vertices left to
// fill the empty parts pruned).
long long count_k_partitions(const DynkinGraph& g, int k);

// Enumeration variant, for test fixtures.
std::vector<KPartition> enumerate_k_partitions(const DynkinGraph& g, int k);

// c(G) = (−1)^l Σ_{k=1}^{l} (−1)^k c_k(G)/k, evaluated in exact rationals;
// raises non_integral_result if the sum is not a non-negative integer.
long long c_direct(const DynkinGraph& g);

DynkinGraph delete_edge(const DynkinGraph& g, int i, int j);

// Replace the endpoints by one new vertex adjacent to the union of their
// former neighborhoods. Remaining vertices keep their relative order; the
// new vertex gets the last index.
DynkinGraph contract_edge(const DynkinGraph& g, int i, int j);

DynkinGraph delete_vertex(const DynkinGraph& g, int v);

// c(G) by deletion–contraction: disconnected -> 0, tree -> 1, otherwise
// recurse on the lexicographically smallest non-bridge edge. Memoized on
// the canonical form.
long long c_dc(const DynkinGraph& g);

// Remove degree-1 vertices, one at a time, until none remain; c(G) is
// preserved at every step.
DynkinGraph leaf_reduce(const DynkinGraph& g);

// Canonical labeling by iterative color refinement with individualization
// backtracking; equal strings iff the graphs are isomorphic.
std::string canonical_form(const DynkinGraph& g);

/// Graph file format (UTF-8, LF):
///
///   vertices <n>
///   edge <i> <j>
///
/// one `edge` line per edge, 0-indexed.
void write_graph_file(std::ostream& out, const DynkinGraph& g);
DynkinGraph read_graph_file(std::istream& in);

} // namespace weylkac
