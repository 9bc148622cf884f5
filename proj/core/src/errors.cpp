#include "weylkac/errors.hpp"

namespace weylkac {

const char* errc_name(errc code) {
    switch (code) {
    case errc::invalid_input: return "InvalidInput";
    case errc::diagonal_not_two: return "DiagonalNotTwo";
    case errc::positive_off_diagonal: return "PositiveOffDiagonal";
    case errc::asymmetric_zero_pattern: return "AsymmetricZeroPattern";
    case errc::not_symmetrizable: return "NotSymmetrizable";
    case errc::decomposable_matrix: return "DecomposableMatrix";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::bound_mismatch: return "BoundMismatch";
    case errc::non_unit_divisor: return "NonUnitDivisor";
    case errc::constant_term_not_one: return "ConstantTermNotOne";
    case errc::degree_above_bound: return "DegreeAboveBound";
    case errc::not_an_edge: return "NotAnEdge";
    case errc::node_cap_exceeded: return "NodeCapExceeded";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::not_finite_type: return "NotFiniteType";
    case errc::non_integral_coefficient: return "NonIntegralCoefficient";
    case errc::non_integral_result: return "NonIntegralResult";
    case errc::decomposable_algebra: return "DecomposableAlgebra";
    case errc::truncation_insufficient: return "TruncationInsufficient";
    case errc::not_a_product_of_numerators: return "NotAProductOfNumerators";
    case errc::factor_count_mismatch: return "FactorCountMismatch";
    }
    return "UnknownError";
}

} // namespace weylkac
