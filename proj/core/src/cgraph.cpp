#include "weylkac/cgraph.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "weylkac/errors.hpp"
#include "weylkac/rational.hpp"

namespace weylkac {

namespace {

std::uint64_t reachable(const DynkinGraph& g, int start) {
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1)
            next |= g.neighbors(__builtin_ctzll(f));
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

void collect_independent(const DynkinGraph& g, int v, std::uint64_t chosen,
                         std::vector<std::uint64_t>& out) {
    if (v == g.vertex_count()) {
        if (chosen) out.push_back(chosen);
        return;
    }
    collect_independent(g, v + 1, chosen, out);
    if ((g.neighbors(v) & chosen) == 0)
        collect_independent(g, v + 1, chosen | (std::uint64_t{1} << v), out);
}

// Places vertices one at a time into the k ordered parts; a branch dies as
// soon as fewer vertices remain than parts still empty.
template <typename OnComplete>
void partition_backtrack(const DynkinGraph& g, int k, int v, std::vector<std::uint64_t>& parts,
                         int empty_parts, OnComplete&& on_complete) {
    const int n = g.vertex_count();
    if (n - v < empty_parts) return;
    if (v == n) {
        on_complete(parts);
        return;
    }
    for (int p = 0; p < k; ++p) {
        if (g.neighbors(v) & parts[static_cast<std::size_t>(p)]) continue;
        const bool was_empty = parts[static_cast<std::size_t>(p)] == 0;
        parts[static_cast<std::size_t>(p)] |= std::uint64_t{1} << v;
        partition_backtrack(g, k, v + 1, parts, empty_parts - (was_empty ? 1 : 0), on_complete);
        parts[static_cast<std::size_t>(p)] &= ~(std::uint64_t{1} << v);
    }
}

void check_k(const DynkinGraph& g, int k) {
    if (k < 1 || k > g.vertex_count())
        throw Error(errc::invalid_input, "k must be in 1..vertex_count, got " + std::to_string(k));
}

// --- canonical labeling ---------------------------------------------------

std::string encode(const DynkinGraph& g, const std::vector<int>& order) {
    std::string s = std::to_string(g.vertex_count());
    s += ':';
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            s += g.has_edge(order[i], order[j]) ? '1' : '0';
    return s;
}

// Splits color classes by the multiset of neighbor colors until stable; new
// color numbers follow the sorted order of (old color, neighbor multiset),
// so the result is independent of vertex labels.
void refine(const DynkinGraph& g, std::vector<int>& colors) {
    const int n = g.vertex_count();
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sigs(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig;
            sig.push_back(colors[static_cast<std::size_t>(v)]);
            for (std::uint64_t m = g.neighbors(v); m; m &= m - 1)
                sig.push_back(colors[static_cast<std::size_t>(__builtin_ctzll(m))]);
            std::sort(sig.begin() + 1, sig.end());
            sigs[static_cast<std::size_t>(v)] = {std::move(sig), v};
        }
        std::map<std::vector<int>, int> renumber;
        for (const auto& [sig, v] : sigs) renumber.emplace(sig, 0);
        int next = 0;
        for (auto& [sig, color] : renumber) color = next++;

        std::vector<int> fresh(static_cast<std::size_t>(n));
        for (const auto& [sig, v] : sigs) fresh[static_cast<std::size_t>(v)] = renumber[sig];

        // Splitting stopped when the class count is unchanged; one final
        // pass still applies the canonical renumbering.
        const int old_classes =
            static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
        colors = std::move(fresh);
        if (next == old_classes) return;
    }
}

std::string canonical_search(const DynkinGraph& g, std::vector<int> colors) {
    refine(g, colors);
    const int n = g.vertex_count();

    int branch_color = -1;
    for (int c = 0;; ++c) {
        int count = 0;
        for (int v = 0; v < n; ++v)
            if (colors[static_cast<std::size_t>(v)] == c) ++count;
        if (count == 0) break;
        if (count >= 2) {
            branch_color = c;
            break;
        }
    }

    if (branch_color < 0) {   // discrete: colors are a permutation
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] = v;
        return encode(g, order);
    }

    std::string best;
    for (int v = 0; v < n; ++v) {
        if (colors[static_cast<std::size_t>(v)] != branch_color) continue;
        std::vector<int> next = colors;
        next[static_cast<std::size_t>(v)] = -1;   // individualize; refine renumbers
        std::string candidate = canonical_search(g, std::move(next));
        if (best.empty() || candidate < best) best = std::move(candidate);
    }
    return best;
}

long long c_dc_rec(const DynkinGraph& g, std::map<std::string, long long>& memo) {
    std::string key = canonical_form(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    long long result;
    if (!g.connected()) {
        result = 0;
    } else if (g.edge_count() == g.vertex_count() - 1) {
        result = 1;   // tree, including the single vertex
    } else {
        std::pair<int, int> pick{-1, -1};
        for (auto [i, j] : g.edges()) {
            DynkinGraph del = delete_edge(g, i, j);
            if (reachable(del, i) & (std::uint64_t{1} << j)) {   // not a bridge: on a cycle
                pick = {i, j};
                break;
            }
        }
        assert(pick.first >= 0);
        result = c_dc_rec(delete_edge(g, pick.first, pick.second), memo) +
                 c_dc_rec(contract_edge(g, pick.first, pick.second), memo);
    }
    memo.emplace(std::move(key), result);
    return result;
}

} // namespace

std::vector<std::uint64_t> totally_disconnected_subsets(const DynkinGraph& g) {
    std::vector<std::uint64_t> out;
    collect_independent(g, 0, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

long long count_k_partitions(const DynkinGraph& g, int k) {
    check_k(g, k);
    long long count = 0;
    std::vector<std::uint64_t> parts(static_cast<std::size_t>(k), 0);
    partition_backtrack(g, k, 0, parts, k, [&](const std::vector<std::uint64_t>&) { ++count; });
    return count;
}

std::vector<KPartition> enumerate_k_partitions(const DynkinGraph& g, int k) {
    check_k(g, k);
    std::vector<KPartition> out;
    std::vector<std::uint64_t> parts(static_cast<std::size_t>(k), 0);
    partition_backtrack(g, k, 0, parts, k,
                        [&](const std::vector<std::uint64_t>& p) { out.push_back(p); });
    return out;
}

long long c_direct(const DynkinGraph& g) {
    const int n = g.vertex_count();
    Rational acc(0);
    for (int k = 1; k <= n; ++k) {
        long long ck = count_k_partitions(g, k);
        acc += make_rational((k % 2 == 0) ? ck : -ck, k);
    }
    if (n % 2 != 0) acc = -acc;
    if (!is_nonnegative_integer(acc))
        throw Error(errc::non_integral_result, "c(G) evaluated to " + rational_to_string(acc));
    return to_int64(Integer(acc.get_num()));
}

DynkinGraph delete_edge(const DynkinGraph& g, int i, int j) {
    if (i < 0 || i >= g.vertex_count() || j < 0 || j >= g.vertex_count() || !g.has_edge(i, j))
        throw Error(errc::not_an_edge, "{" + std::to_string(i) + "," + std::to_string(j) + "}");
    std::vector<std::pair<int, int>> edges;
    for (auto e : g.edges())
        if (!(e == std::pair{std::min(i, j), std::max(i, j)})) edges.push_back(e);
    return DynkinGraph(g.vertex_count(), edges);
}

DynkinGraph contract_edge(const DynkinGraph& g, int i, int j) {
    if (i < 0 || i >= g.vertex_count() || j < 0 || j >= g.vertex_count() || !g.has_edge(i, j))
        throw Error(errc::not_an_edge, "{" + std::to_string(i) + "," + std::to_string(j) + "}");
    const int n = g.vertex_count();
    const int r = n - 2;   // index of the merged vertex
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (v != i && v != j) remap[static_cast<std::size_t>(v)] = next++;

    std::set<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        const bool u_end = (u == i || u == j);
        const bool v_end = (v == i || v == j);
        if (u_end && v_end) continue;   // the contracted edge itself
        int a = u_end ? r : remap[static_cast<std::size_t>(u)];
        int b = v_end ? r : remap[static_cast<std::size_t>(v)];
        edges.emplace(std::min(a, b), std::max(a, b));
    }
    return DynkinGraph(n - 1, {edges.begin(), edges.end()});
}

DynkinGraph delete_vertex(const DynkinGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw Error(errc::invalid_input, "vertex out of range");
    if (g.vertex_count() == 1)
        throw Error(errc::invalid_input, "cannot delete the only vertex");
    std::vector<int> remap(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v) remap[static_cast<std::size_t>(u)] = next++;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
        if (a != v && b != v)
            edges.emplace_back(remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]);
    return DynkinGraph(g.vertex_count() - 1, edges);
}

long long c_dc(const DynkinGraph& g) {
    std::map<std::string, long long> memo;
    return c_dc_rec(g, memo);
}

DynkinGraph leaf_reduce(const DynkinGraph& g) {
    DynkinGraph cur = g;
    for (;;) {
        int leaf = -1;
        for (int v = 0; v < cur.vertex_count(); ++v)
            if (cur.degree(v) == 1) {
                leaf = v;
                break;
            }
        if (leaf < 0) return cur;
        cur = delete_vertex(cur, leaf);
    }
}

std::string canonical_form(const DynkinGraph& g) {
    return canonical_search(g, std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0));
}

void write_graph_file(std::ostream& out, const DynkinGraph& g) {
    out << "vertices " << g.vertex_count() << "\n";
    for (auto [i, j] : g.edges()) out << "edge " << i << ' ' << j << "\n";
}

DynkinGraph read_graph_file(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw Error(errc::invalid_input, "empty graph file");
    std::istringstream head(line);
    std::string word;
    int n = 0;
    if (!(head >> word >> n) || word != "vertices" || (head >> word))
        throw Error(errc::invalid_input, "expected 'vertices <n>', got '" + line + "'");

    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream es(line);
        int i = 0, j = 0;
        if (!(es >> word >> i >> j) || word != "edge" || (es >> word))
            throw Error(errc::invalid_input, "expected 'edge <i> <j>', got '" + line + "'");
        edges.emplace_back(i, j);
    }
    return DynkinGraph(n, edges);
}

} // namespace weylkac
