#pragma once

#include <stdexcept>
#include <string>

namespace weylkac {

// Every failure the library can signal, one code per condition.
enum class errc {
    invalid_input,              // malformed file, flag, or argument
    diagonal_not_two,           // GCM has a_ii != 2
    positive_off_diagonal,      // GCM has a_ij > 0 for i != j
    asymmetric_zero_pattern,    // a_ij = 0 but a_ji != 0
    not_symmetrizable,          // ratio propagation inconsistent around a cycle
    decomposable_matrix,        // operation requires an indecomposable GCM
    rank_mismatch,
    bound_mismatch,
    non_unit_divisor,           // division by a series with zero constant term
    constant_term_not_one,
    degree_above_bound,
    not_an_edge,
    node_cap_exceeded,          // Weyl closure did not finish within the cap
    cap_exceeded,               // positive-root closure did not finish within the cap
    not_finite_type,
    non_integral_coefficient,   // mult of sum of simple roots came out non-integer
    non_integral_result,        // c(G) alternating sum came out non-integer
    decomposable_algebra,       // factorization requires an indecomposable algebra
    truncation_insufficient,
    not_a_product_of_numerators,
    factor_count_mismatch,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace weylkac
