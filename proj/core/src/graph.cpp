#include "weylkac/graph.hpp"

#include <string>

#include "weylkac/errors.hpp"

namespace weylkac {

DynkinGraph::DynkinGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    : n_(vertex_count), edge_count_(0), adj_(static_cast<std::size_t>(vertex_count > 0 ? vertex_count : 0), 0) {
    if (n_ < 1 || n_ > 64)
        throw Error(errc::invalid_input, "vertex count must be in 1..64, got " + std::to_string(n_));
    for (auto [i, j] : edges) {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw Error(errc::invalid_input, "edge endpoint out of range");
        if (i == j)
            throw Error(errc::invalid_input, "loop edge at vertex " + std::to_string(i));
        if (has_edge(i, j))
            throw Error(errc::invalid_input, "repeated edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
        adj_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        adj_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
        ++edge_count_;
    }
}

bool DynkinGraph::has_edge(int i, int j) const {
    return (adj_[static_cast<std::size_t>(i)] >> j) & 1u;
}

int DynkinGraph::degree(int v) const {
    return __builtin_popcountll(adj_[static_cast<std::size_t>(v)]);
}

std::vector<std::pair<int, int>> DynkinGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

bool DynkinGraph::connected() const {
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1)
            next |= adj_[static_cast<std::size_t>(__builtin_ctzll(f))];
        frontier = next & ~seen;
        seen |= next;
    }
    std::uint64_t all = (n_ == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    return seen == all;
}

} // namespace weylkac
