#include "weylkac/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "weylkac/errors.hpp"

namespace weylkac {

namespace {

// BFS-internal node; offsets and pairings kept as big integers so that an
// unbounded closure on an indefinite matrix cannot overflow before hitting
// the node cap.
struct RawNode {
    std::vector<Integer> offset;
    std::vector<Integer> pairings;
    Integer degree;
    std::uint64_t support;
    int length;
};

bool node_consistent(const CartanMatrix& A, const std::vector<Integer>& a, const RawNode& n) {
    // v_i = a_i - Σ_j a_ij c_j
    for (int i = 0; i < A.rank(); ++i) {
        Integer expect = a[static_cast<std::size_t>(i)];
        for (int j = 0; j < A.rank(); ++j)
            expect -= Integer(A.entry(i, j)) * n.offset[static_cast<std::size_t>(j)];
        if (expect != n.pairings[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

std::vector<RawNode> orbit_closure(const CartanMatrix& A, const DominantWeight& lambda,
                                   const std::optional<Integer>& bound,
                                   std::optional<std::size_t> node_cap) {
    const int l = A.rank();
    if (lambda.rank() != l)
        throw Error(errc::rank_mismatch, "weight rank does not match matrix rank");

    std::vector<Integer> a;
    a.reserve(static_cast<std::size_t>(l));
    for (std::int64_t ai : rho_shift(lambda)) a.emplace_back(ai);

    std::vector<RawNode> nodes;
    nodes.push_back(RawNode{std::vector<Integer>(static_cast<std::size_t>(l), Integer(0)), a,
                            Integer(0), 0, 0});
    std::map<std::vector<Integer>, std::size_t> seen;
    seen.emplace(nodes[0].offset, 0);

    for (std::size_t head = 0; head < nodes.size(); ++head) {
        const RawNode cur = nodes[head];   // copy: nodes may reallocate below
        for (int i = 0; i < l; ++i) {
            const Integer& vi = cur.pairings[static_cast<std::size_t>(i)];
            if (vi <= 0) continue;   // s_i shortens w, already visited
            Integer child_degree = cur.degree + vi;
            if (bound && child_degree > *bound) continue;

            std::vector<Integer> child_offset = cur.offset;
            child_offset[static_cast<std::size_t>(i)] += vi;
            auto [it, inserted] = seen.try_emplace(std::move(child_offset), nodes.size());
            if (!inserted) {
                const RawNode& dup = nodes[it->second];
                assert(dup.length == cur.length + 1);
                assert(dup.support == (cur.support | (std::uint64_t{1} << i)));
                (void)dup;
                continue;
            }

            RawNode child;
            child.offset = it->first;
            child.pairings.reserve(static_cast<std::size_t>(l));
            for (int j = 0; j < l; ++j)
                child.pairings.push_back(cur.pairings[static_cast<std::size_t>(j)] -
                                         vi * Integer(A.entry(j, i)));
            child.degree = std::move(child_degree);
            child.support = cur.support | (std::uint64_t{1} << i);
            child.length = cur.length + 1;
            assert(node_consistent(A, a, child));
            nodes.push_back(std::move(child));
            if (node_cap && nodes.size() > *node_cap)
                throw Error(errc::node_cap_exceeded,
                            "Weyl closure exceeded " + std::to_string(*node_cap) + " nodes");
        }
    }
    return nodes;
}

WeylOrbitNode to_public(RawNode&& raw) {
    std::vector<std::int64_t> exps;
    exps.reserve(raw.offset.size());
    for (const Integer& c : raw.offset) exps.push_back(to_int64(c));
    return WeylOrbitNode{ExponentVector(std::move(exps)), std::move(raw.pairings), raw.length,
                         raw.support, (raw.length % 2 == 0) ? 1 : -1};
}

TruncatedSeries numerator_from_nodes(int rank, std::int64_t bound,
                                     const std::vector<WeylOrbitNode>& nodes) {
    std::vector<std::pair<ExponentVector, Rational>> terms;
    terms.reserve(nodes.size());
    for (const auto& n : nodes) terms.emplace_back(n.offset, Rational(n.sign));
    return TruncatedSeries::from_terms(rank, bound, terms);
}

std::string offset_string(const ExponentVector& e) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < e.rank(); ++i) {
        if (i) os << ',';
        os << e[i];
    }
    os << ')';
    return os.str();
}

std::vector<std::string> check_offset_laws(const CartanMatrix& A, const DominantWeight& lambda,
                                      const std::vector<WeylOrbitNode>& nodes) {
    const DynkinGraph graph = dynkin_graph(A);
    const std::vector<std::int64_t> a = rho_shift(lambda);
    std::vector<std::string> violations;

    for (const auto& node : nodes) {
        if (node.length == 0) continue;
        const std::string where = "node " + offset_string(node.offset);

        std::uint64_t nonzero = 0;
        for (int i = 0; i < A.rank(); ++i)
            if (node.offset[i] != 0) nonzero |= std::uint64_t{1} << i;
        if (nonzero != node.support) {
            violations.push_back(where + ": support != {i : c_i != 0}");
            continue;
        }

        bool lower_bound_ok = true;
        for (int i = 0; i < A.rank(); ++i)
            if ((node.support >> i) & 1)
                if (node.offset[i] < a[static_cast<std::size_t>(i)]) lower_bound_ok = false;
        if (!lower_bound_ok) {
            violations.push_back(where + ": some c_i < a_i on the support");
            continue;
        }

        bool disconnected = true;
        for (int i = 0; i < A.rank() && disconnected; ++i)
            if ((node.support >> i) & 1)
                if (graph.neighbors(i) & node.support) disconnected = false;

        if (disconnected) {
            for (int i = 0; i < A.rank(); ++i)
                if ((node.support >> i) & 1)
                    if (node.offset[i] != a[static_cast<std::size_t>(i)]) {
                        violations.push_back(where +
                                             ": disconnected support but c_i != a_i at i=" +
                                             std::to_string(i));
                        break;
                    }
        } else {
            bool strict = false;
            for (int i = 0; i < A.rank(); ++i)
                if ((node.support >> i) & 1)
                    if (node.offset[i] > a[static_cast<std::size_t>(i)]) strict = true;
            if (!strict)
                violations.push_back(where + ": connected support but c = a throughout");
        }
    }
    return violations;
}

} // namespace

std::vector<WeylOrbitNode> orbit_bfs(const CartanMatrix& A, const DominantWeight& lambda,
                                     std::int64_t degree_bound) {
    if (degree_bound < 0)
        throw Error(errc::invalid_input, "degree bound must be non-negative");
    auto raw = orbit_closure(A, lambda, Integer(degree_bound), std::nullopt);
    std::vector<WeylOrbitNode> out;
    out.reserve(raw.size());
    for (auto& r : raw) out.push_back(to_public(std::move(r)));
    return out;
}

TruncatedSeries numerator(const CartanMatrix& A, const DominantWeight& lambda,
                          std::int64_t degree_bound) {
    return numerator_from_nodes(A.rank(), degree_bound, orbit_bfs(A, lambda, degree_bound));
}

TruncatedSeries full_numerator(const CartanMatrix& A, const DominantWeight& lambda,
                               std::size_t node_cap) {
    auto raw = orbit_closure(A, lambda, std::nullopt, node_cap);
    Integer max_degree = 0;
    for (const auto& r : raw) max_degree = std::max(max_degree, r.degree);
    std::vector<WeylOrbitNode> nodes;
    nodes.reserve(raw.size());
    for (auto& r : raw) nodes.push_back(to_public(std::move(r)));
    return numerator_from_nodes(A.rank(), to_int64(max_degree), nodes);
}

std::vector<std::string> verify_offset_laws(const CartanMatrix& A, const DominantWeight& lambda,
                                            std::int64_t degree_bound) {
    return check_offset_laws(A, lambda, orbit_bfs(A, lambda, degree_bound));
}

std::vector<std::string> verify_offset_laws_full(const CartanMatrix& A,
                                                 const DominantWeight& lambda,
                                                 std::size_t node_cap) {
    auto raw = orbit_closure(A, lambda, std::nullopt, node_cap);
    std::vector<WeylOrbitNode> nodes;
    nodes.reserve(raw.size());
    for (auto& r : raw) nodes.push_back(to_public(std::move(r)));
    return check_offset_laws(A, lambda, nodes);
}

std::int64_t mult_sum_simple_roots(const CartanMatrix& A) {
    const int l = A.rank();
    TruncatedSeries u0 = numerator(A, DominantWeight::zero(l), l);
    Rational coeff = neg_log(u0).coefficient(ExponentVector::ones(l));
    if (!is_nonnegative_integer(coeff))
        throw Error(errc::non_integral_coefficient,
                    "coefficient of X_1...X_l in -log U_0 is " + rational_to_string(coeff));
    return to_int64(Integer(coeff.get_num()));
}

std::vector<ExponentVector> finite_positive_roots(const CartanMatrix& A, std::size_t cap) {
    if (classify(A) != AlgebraType::finite)
        throw Error(errc::not_finite_type, "positive-root closure needs a finite-type matrix");

    const int l = A.rank();
    std::set<std::vector<std::int64_t>> roots;
    std::vector<std::vector<std::int64_t>> queue;
    for (int i = 0; i < l; ++i) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(l), 0);
        e[static_cast<std::size_t>(i)] = 1;
        roots.insert(e);
        queue.push_back(std::move(e));
    }

    while (!queue.empty()) {
        std::vector<std::int64_t> beta = std::move(queue.back());
        queue.pop_back();
        for (int i = 0; i < l; ++i) {
            std::int64_t pairing = 0;   // <β, α_i^∨>
            for (int j = 0; j < l; ++j)
                pairing += A.entry(i, j) * beta[static_cast<std::size_t>(j)];
            std::vector<std::int64_t> image = beta;
            image[static_cast<std::size_t>(i)] -= pairing;
            if (image[static_cast<std::size_t>(i)] < 0) continue;   // crossed into -Δ₊
            if (roots.insert(image).second) {
                if (roots.size() > cap)
                    throw Error(errc::cap_exceeded,
                                "positive-root closure exceeded " + std::to_string(cap));
                queue.push_back(std::move(image));
            }
        }
    }

    std::vector<ExponentVector> out;
    out.reserve(roots.size());
    for (const auto& r : roots) out.emplace_back(r);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace weylkac
