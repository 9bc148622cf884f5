#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "weylkac/cartan.hpp"
#include "weylkac/series.hpp"

namespace weylkac::testing {

struct CorpusEntry {
    const char* name;
    std::vector<std::vector<std::int64_t>> matrix;
    long long expected_c;   // c(G) of the Dynkin graph
};

// The standard test corpus: finite, affine, indefinite, and one decomposable.
inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = {
        {"A1", {{2}}, 1},
        {"A2", {{2, -1}, {-1, 2}}, 1},
        {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, 1},
        {"B2", {{2, -2}, {-1, 2}}, 1},
        {"B3", {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}, 1},
        {"C3", {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}, 1},
        {"G2", {{2, -1}, {-3, 2}}, 1},
        {"D4", {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}, 1},
        {"A1aff", {{2, -2}, {-2, 2}}, 1},
        {"A2aff", {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, 2},
        {"A3aff", {{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}}, 3},
        {"A4aff",
         {{2, -1, 0, 0, -1},
          {-1, 2, -1, 0, 0},
          {0, -1, 2, -1, 0},
          {0, 0, -1, 2, -1},
          {-1, 0, 0, -1, 2}},
         4},
        {"indef2", {{2, -3}, {-3, 2}}, 1},
        {"A1xA1", {{2, 0}, {0, 2}}, 0},
    };
    return entries;
}

inline const CorpusEntry& corpus_entry(const std::string& name) {
    for (const auto& e : corpus())
        if (name == e.name) return e;
    throw std::runtime_error("no corpus entry named " + name);
}

inline CartanMatrix cartan(const std::string& name) {
    return validate_gcm(corpus_entry(name).matrix);
}

// Indecomposable members (everything but A1xA1).
inline std::vector<std::string> indecomposable_names() {
    std::vector<std::string> out;
    for (const auto& e : corpus())
        if (std::string(e.name) != "A1xA1") out.emplace_back(e.name);
    return out;
}

// The factorization round-trip corpus.
inline std::vector<std::string> factor_names() {
    return {"A1", "A2", "B2", "G2", "A1aff", "A2aff"};
}

inline DominantWeight random_weight(int rank, std::int64_t max_coord, std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> coord(0, max_coord);
    std::vector<std::int64_t> coords(static_cast<std::size_t>(rank));
    for (auto& c : coords) c = coord(rng);
    return DominantWeight(std::move(coords));
}

inline TruncatedSeries random_series(int rank, std::int64_t bound, int max_terms,
                                     std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<std::int64_t> expo(0, bound);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<std::pair<ExponentVector, Rational>> terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(rank));
        std::int64_t left = bound;
        for (auto& x : e) {
            x = std::min(expo(rng), left);
            left -= x;
        }
        terms.emplace_back(ExponentVector(std::move(e)), make_rational(num(rng), den(rng)));
    }
    return TruncatedSeries::from_terms(rank, bound, terms);
}

// Random series with constant term exactly 1, for neg_log inputs.
inline TruncatedSeries random_unit_series(int rank, std::int64_t bound, int max_terms,
                                          std::mt19937& rng) {
    TruncatedSeries s = random_series(rank, bound, max_terms, rng);
    TruncatedSeries fix = sub(TruncatedSeries::one(rank, bound),
                              TruncatedSeries::monomial(ExponentVector::zeros(rank),
                                                        s.constant_term(), bound));
    return add(s, fix);
}

// The defining power sum Σ_{k>=1} (1-f)^k / k, as an independent route to
// -log f; uses only mul/add/scale.
inline TruncatedSeries neg_log_power_sum(const TruncatedSeries& f) {
    TruncatedSeries xi = sub(TruncatedSeries::one(f.rank(), f.bound()), f);
    TruncatedSeries acc = TruncatedSeries::zero(f.rank(), f.bound());
    TruncatedSeries power = TruncatedSeries::one(f.rank(), f.bound());
    for (std::int64_t k = 1; k <= f.bound(); ++k) {
        power = mul(power, xi);
        if (power.is_zero()) break;
        acc = add(acc, scale(power, make_rational(1, static_cast<long>(k))));
    }
    return acc;
}

} // namespace weylkac::testing
