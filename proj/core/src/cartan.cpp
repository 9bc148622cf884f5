#include "weylkac/cartan.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <string>

#include "weylkac/errors.hpp"

namespace weylkac {

ExponentVector::ExponentVector(std::vector<std::int64_t> exps)
    : exps_(std::move(exps)), degree_(0) {
    if (exps_.empty())
        throw Error(errc::invalid_input, "exponent vector must have positive rank");
    for (std::int64_t e : exps_) {
        if (e < 0)
            throw Error(errc::invalid_input, "negative exponent");
        degree_ += e;
    }
}

ExponentVector ExponentVector::zeros(int rank) {
    return ExponentVector(std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0));
}

ExponentVector ExponentVector::ones(int rank) {
    return ExponentVector(std::vector<std::int64_t>(static_cast<std::size_t>(rank), 1));
}

bool ExponentVector::is_regular() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::int64_t e) { return e >= 1; });
}

bool operator<(const ExponentVector& a, const ExponentVector& b) {
    assert(a.rank() == b.rank());
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.exps_ < b.exps_;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    if (a.rank() != b.rank())
        throw Error(errc::rank_mismatch, "adding exponent vectors of different ranks");
    std::vector<std::int64_t> sum(a.exps_);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b.exps_[i];
    return ExponentVector(std::move(sum));
}

DominantWeight::DominantWeight(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
    if (coords_.empty())
        throw Error(errc::invalid_input, "weight must have positive rank");
    for (std::int64_t m : coords_)
        if (m < 0)
            throw Error(errc::invalid_input, "weight coordinate " + std::to_string(m) + " is not dominant");
}

DominantWeight DominantWeight::zero(int rank) {
    return DominantWeight(std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0));
}

bool operator<(const DominantWeight& a, const DominantWeight& b) {
    assert(a.rank() == b.rank());
    auto deg = [](const DominantWeight& w) {
        return std::accumulate(w.coords_.begin(), w.coords_.end(), std::int64_t{0});
    };
    std::int64_t da = deg(a), db = deg(b);
    if (da != db) return da < db;
    return a.coords_ < b.coords_;
}

CartanMatrix validate_gcm(const std::vector<std::vector<std::int64_t>>& matrix) {
    const std::size_t l = matrix.size();
    if (l == 0)
        throw Error(errc::invalid_input, "empty matrix");
    for (const auto& row : matrix)
        if (row.size() != l)
            throw Error(errc::invalid_input, "matrix is not square");

    for (std::size_t i = 0; i < l; ++i)
        if (matrix[i][i] != 2)
            throw Error(errc::diagonal_not_two,
                        "a[" + std::to_string(i) + "][" + std::to_string(i) + "] = " +
                            std::to_string(matrix[i][i]));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            if (i == j) continue;
            if (matrix[i][j] > 0)
                throw Error(errc::positive_off_diagonal,
                            "a[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                                std::to_string(matrix[i][j]));
            if ((matrix[i][j] == 0) != (matrix[j][i] == 0))
                throw Error(errc::asymmetric_zero_pattern,
                            "a[" + std::to_string(i) + "][" + std::to_string(j) + "] and transpose");
        }

    // Symmetrizer by ratio propagation over a spanning forest: d_i a_ij = d_j a_ji
    // forces d_j = d_i a_ij / a_ji along every edge.
    std::vector<Rational> d(l, Rational(0));
    for (std::size_t root = 0; root < l; ++root) {
        if (d[root] != 0) continue;
        d[root] = 1;
        std::queue<std::size_t> q;
        q.push(root);
        while (!q.empty()) {
            std::size_t i = q.front();
            q.pop();
            for (std::size_t j = 0; j < l; ++j) {
                if (i == j || matrix[i][j] == 0 || d[j] != 0) continue;
                d[j] = d[i] * make_rational(matrix[i][j], matrix[j][i]);
                q.push(j);
            }
        }
    }
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            if (d[i] * matrix[i][j] != d[j] * matrix[j][i])
                throw Error(errc::not_symmetrizable,
                            "ratio inconsistency at (" + std::to_string(i) + "," + std::to_string(j) + ")");

    Rational dmin = *std::min_element(d.begin(), d.end());
    assert(sgn(dmin) > 0);
    for (auto& di : d) di /= dmin;

    return CartanMatrix(matrix, std::move(d));
}

DynkinGraph dynkin_graph(const CartanMatrix& A) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < A.rank(); ++i)
        for (int j = i + 1; j < A.rank(); ++j)
            if (A.entry(i, j) != 0) edges.emplace_back(i, j);
    return DynkinGraph(A.rank(), edges);
}

bool is_indecomposable(const CartanMatrix& A) {
    return dynkin_graph(A).connected();
}

namespace {

// Exact determinant of the leading k x k block, Gaussian elimination with
// row pivoting.
Rational leading_minor(const std::vector<std::vector<Rational>>& b, int k) {
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        m[static_cast<std::size_t>(i)].assign(b[static_cast<std::size_t>(i)].begin(),
                                              b[static_cast<std::size_t>(i)].begin() + k);
    Rational det(1);
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int row = col; row < k; ++row)
            if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
            det = -det;
        }
        const Rational& p = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det *= p;
        for (int row = col + 1; row < k; ++row) {
            Rational factor = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] / p;
            if (factor == 0) continue;
            for (int c2 = col; c2 < k; ++c2)
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c2)] -=
                    factor * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c2)];
        }
    }
    return det;
}

} // namespace

const char* algebra_type_name(AlgebraType t) {
    switch (t) {
    case AlgebraType::finite: return "finite";
    case AlgebraType::affine: return "affine";
    case AlgebraType::indefinite: return "indefinite";
    }
    return "?";
}

AlgebraType classify(const CartanMatrix& A) {
    if (!is_indecomposable(A))
        throw Error(errc::decomposable_matrix, "classification needs an indecomposable matrix");

    const int l = A.rank();
    std::vector<std::vector<Rational>> b(static_cast<std::size_t>(l),
                                         std::vector<Rational>(static_cast<std::size_t>(l)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                A.symmetrizer()[static_cast<std::size_t>(i)] * A.entry(i, j);

    bool proper_positive = true;   // minors 1..l-1 all positive
    for (int k = 1; k < l; ++k)
        if (sgn(leading_minor(b, k)) <= 0) {
            proper_positive = false;
            break;
        }
    if (!proper_positive) return AlgebraType::indefinite;
    int last = sgn(leading_minor(b, l));
    if (last > 0) return AlgebraType::finite;
    if (last == 0) return AlgebraType::affine;
    return AlgebraType::indefinite;
}

std::vector<std::int64_t> rho_shift(const DominantWeight& lambda) {
    std::vector<std::int64_t> a(lambda.coords().begin(), lambda.coords().end());
    for (auto& x : a) ++x;
    return a;
}

ExponentVector m_lambda(const DominantWeight& lambda) {
    return ExponentVector(rho_shift(lambda));
}

std::int64_t deg_lambda(const DominantWeight& lambda) {
    return m_lambda(lambda).degree();
}

} // namespace weylkac
