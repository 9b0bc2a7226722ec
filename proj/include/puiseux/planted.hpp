#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "puiseux/closure.hpp"

namespace puiseux {

struct PlantedConfig {
    std::size_t n = 2;
    int m = 2;
    int max_denominator = 3;
    int max_terms = 4;
    /// Largest exponent coordinate of a planted term before the blowing-down.
    int max_exponent = 2;
    /// Number of elementary blowing-downs in the random certificate.
    int max_word = 4;
};

/// Random instance with known roots: nonnegative finite Puiseux series g_i,
/// a random blowing-down Phi, external roots f_i = Phi(g_i) and the monic
/// product of (z - f_i) with cone-ring coefficients.
struct PlantedInstance {
    std::vector<Series> prepared_roots;
    MonomialMap phi;
    std::vector<Series> external_roots;
    ZPolynomial prepared;
    std::vector<ConeRingElement> external;
};

Series random_nonnegative_series(std::mt19937_64& rng, const PlantedConfig& cfg);
MonomialMap random_blowdown(std::mt19937_64& rng, std::size_t n, int max_word);

/// prod (z - r_i), expanded exactly.
ZPolynomial product_of_linear(const std::vector<Series>& roots);

PlantedInstance make_planted(std::mt19937_64& rng, const PlantedConfig& cfg);

/// Every solver root matches a distinct planted root: pushed through the
/// root's accumulated map and truncated below `precision`, the planted
/// external root equals the emitted series.
bool roots_match(const std::vector<Series>& external_roots, const std::vector<PuiseuxRoot>& found,
                 const Rational& precision);

} // namespace puiseux
