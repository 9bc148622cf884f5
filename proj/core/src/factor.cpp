#include "weylkac/factor.hpp"

#include <cassert>
#include <string>

#include "weylkac/cgraph.hpp"
#include "weylkac/errors.hpp"
#include "weylkac/weyl.hpp"

namespace weylkac {

TruncatedSeries character(const CartanMatrix& A, const DominantWeight& lambda,
                          std::int64_t degree_bound) {
    return div_by_unit(numerator(A, lambda, degree_bound),
                       numerator(A, DominantWeight::zero(A.rank()), degree_bound));
}

TruncatedSeries numerator_product(const CartanMatrix& A, const WeightMultiset& weights,
                                  std::int64_t degree_bound) {
    TruncatedSeries product = TruncatedSeries::one(A.rank(), degree_bound);
    for (const DominantWeight& lambda : weights)
        product = mul(product, numerator(A, lambda, degree_bound));
    return product;
}

WeightMultiset factorize_numerators(const CartanMatrix& A, const TruncatedSeries& P,
                                    std::int64_t degree_bound) {
    if (P.rank() != A.rank())
        throw Error(errc::rank_mismatch, "series rank does not match matrix rank");
    if (degree_bound < 0)
        throw Error(errc::invalid_input, "degree bound must be non-negative");
    if (P.bound() < degree_bound)
        throw Error(errc::bound_mismatch, "series bound is below the requested degree");
    if (!is_indecomposable(A))
        throw Error(errc::decomposable_algebra,
                    "factorization needs an indecomposable algebra (c(G) would be 0)");

    const TruncatedSeries p = truncate(P, degree_bound);
    if (p.constant_term() != 1)
        throw Error(errc::not_a_product_of_numerators, "constant term is not 1");
    if (!p.integral())
        throw Error(errc::not_a_product_of_numerators, "coefficients are not all integers");

    const Integer cg(static_cast<long>(c_dc(dynkin_graph(A))));
    assert(cg >= 1);

    // L = -log of the residual product; peeling U_λ subtracts -log U_λ, and
    // the residual equals 1 exactly when L vanishes.
    TruncatedSeries L = neg_log(p);
    WeightMultiset result;
    for (std::int64_t step = 0; step <= degree_bound; ++step) {
        if (L.is_zero()) return result;
        auto minimal = min_regular_monomials(L);
        if (minimal.empty())
            throw Error(errc::truncation_insufficient,
                        "no regular monomial visible in -log of the residual");
        const auto& [e, coeff] = minimal.front();   // graded-lex smallest
        assert(e.is_regular());
        if (!is_integer(coeff) || sgn(coeff) <= 0 || !mpz_divisible_p(coeff.get_num().get_mpz_t(), cg.get_mpz_t()))
            throw Error(errc::not_a_product_of_numerators,
                        "leading regular coefficient " + rational_to_string(coeff) +
                            " is not a positive multiple of c(G) = " + cg.get_str());

        std::vector<std::int64_t> coords;
        coords.reserve(static_cast<std::size_t>(e.rank()));
        for (int i = 0; i < e.rank(); ++i) coords.push_back(e[i] - 1);
        DominantWeight lambda{std::move(coords)};

        L = sub(L, neg_log(numerator(A, lambda, degree_bound)));
        result.insert(std::move(lambda));
    }
    throw Error(errc::truncation_insufficient, "residual did not reach 1 within the degree bound");
}

WeightMultiset factorize_tensor_character(const CartanMatrix& A, const TruncatedSeries& chi_product,
                                          int n, std::int64_t degree_bound) {
    if (n < 1)
        throw Error(errc::invalid_input, "factor count must be positive");
    if (chi_product.bound() < degree_bound)
        throw Error(errc::bound_mismatch, "series bound is below the requested degree");

    TruncatedSeries p = truncate(chi_product, degree_bound);
    const TruncatedSeries u0 = numerator(A, DominantWeight::zero(A.rank()), degree_bound);
    for (int i = 0; i < n; ++i) p = mul(p, u0);

    WeightMultiset result = factorize_numerators(A, p, degree_bound);
    if (static_cast<int>(result.size()) != n)
        throw Error(errc::factor_count_mismatch,
                    "recovered " + std::to_string(result.size()) + " factors, expected " +
                        std::to_string(n));
    return result;
}

LeadingTermReport verify_leading_term(const CartanMatrix& A, const DominantWeight& lambda,
                                      std::int64_t degree_bound) {
    if (lambda.rank() != A.rank())
        throw Error(errc::rank_mismatch, "weight rank does not match matrix rank");
    const std::int64_t dl = deg_lambda(lambda);
    if (degree_bound < dl)
        throw Error(errc::invalid_input,
                    "degree bound " + std::to_string(degree_bound) + " is below deg(lambda) = " +
                        std::to_string(dl));

    const TruncatedSeries reg = regular_part(neg_log(numerator(A, lambda, degree_bound)));
    const ExponentVector m = m_lambda(lambda);

    LeadingTermReport report;
    report.coefficient = 0;
    for (const auto& [e, c] : reg.terms()) {
        if (e.degree() > dl) break;
        if (e.degree() < dl)
            report.violations.push_back("regular term of degree " + std::to_string(e.degree()) +
                                        " below deg(lambda) = " + std::to_string(dl));
        else if (!(e == m))
            report.violations.push_back("regular term at degree deg(lambda) differs from M^lambda");
        else
            report.coefficient = c;
    }
    if (!is_nonnegative_integer(report.coefficient))
        report.violations.push_back("coefficient of M^lambda is not a non-negative integer: " +
                                    rational_to_string(report.coefficient));
    return report;
}

} // namespace weylkac
