#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace weylkac {

/// Simple undirected graph on at most 64 vertices, adjacency kept as one
/// bitmask per vertex. This is the graph underlying a Dynkin diagram: no
/// loops, no multi-edges, no edge decorations.
class DynkinGraph {
public:
    DynkinGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    bool has_edge(int i, int j) const;
    std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const;

    // Edges as {i, j} with i < j, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool connected() const;

    friend bool operator==(const DynkinGraph& a, const DynkinGraph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_;
    int edge_count_;
    std::vector<std::uint64_t> adj_;
};

} // namespace weylkac
