#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "puiseux/lattice.hpp"

namespace puiseux {

/// n x n unit upper-triangular integer matrix encoding a finite composition of
/// monomial blowing-ups and blowing-downs. Exponent row vectors are acted on
/// from the right: a -> a * M, so composition reads left to right.
class MonomialMap {
public:
    MonomialMap() = default;
    /// Throws Error unless `rows` is square and unit upper-triangular.
    explicit MonomialMap(std::vector<std::vector<std::int64_t>> rows);

    static MonomialMap identity(std::size_t n);
    /// E_ij(sign) with 0-based i != j. sign = +1 is the blowing-up x_i -> x_i x_j,
    /// sign = -1 its inverse. Only i < j is order-preserving.
    static MonomialMap elementary(std::size_t n, std::size_t i, std::size_t j, int sign);
    /// phi_ij preserves the lexicographic order iff i < j.
    static constexpr bool preserves_lex_order(std::size_t i, std::size_t j) noexcept { return i < j; }

    std::size_t dimension() const noexcept { return rows_.size(); }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }
    /// Row r as an exponent vector: the image of the r-th canonical basis vector.
    ExponentVector row(std::size_t r) const;

    ExponentVector apply(const ExponentVector& a) const;

    bool is_identity() const;
    /// All entries >= 0: a composition of order-preserving blowing-ups.
    bool is_blowup_composition() const;
    /// The inverse is a blowing-up composition.
    bool is_blowdown_composition() const;

    /// Block-diagonal extension diag(1, M) acting on one extra leading coordinate.
    MonomialMap lift() const;

    /// Right-multiply in place by E_ij(count).
    void append_elementary(std::size_t i, std::size_t j, std::int64_t count);

    friend bool operator==(const MonomialMap&, const MonomialMap&) = default;

    std::string to_string() const;

private:
    std::vector<std::vector<std::int64_t>> rows_;
};

/// Apply m1 first, then m2: the matrix product M1 * M2.
MonomialMap compose(const MonomialMap& m1, const MonomialMap& m2);
MonomialMap inverse(const MonomialMap& m);
bool is_blowup_composition(const MonomialMap& m);

/// One run of `count` applications of the elementary blowing-up phi_ij (0-based).
struct BlowupStep {
    std::size_t i = 0;
    std::size_t j = 0;
    std::int64_t count = 0;

    friend bool operator==(const BlowupStep&, const BlowupStep&) = default;
};

struct FirstQuadrantReduction {
    MonomialMap map;
    std::vector<BlowupStep> word;
    std::int64_t applications = 0;
};

inline constexpr std::int64_t default_iteration_cap = 10000;

/// Order-preserving blowing-ups bringing every generator into the closed
/// first quadrant. Every generator must be zero or lex-positive.
///
/// Repeatedly takes the generator with a negative entry whose first nonzero
/// index i0 is smallest, lets j be its first negative index and applies
/// phi_{i0 j} ceil(|v_j| / v_{i0}) times. No coordinate of any generator ever
/// decreases, so the number of negative entries strictly drops per burst.
/// Throws CapExceeded when more than `cap` elementary applications are needed.
FirstQuadrantReduction reduce_to_first_quadrant(const std::vector<ExponentVector>& generators,
                                                std::size_t n,
                                                std::int64_t cap = default_iteration_cap);

struct PrincipalizationResult {
    MonomialMap map;
    std::vector<ExponentVector> apexes;
    std::vector<BlowupStep> word;
};

/// Order-preserving Phi with Phi(set_i) contained in apex_i + Z_{>=0}^n and
/// apex_i in Phi(set_i), for every set jointly.
///
/// The apex of a set is necessarily the image of its lex-minimum (the maps
/// preserve lex order), so the sets are principalized by reducing all
/// differences b - lexmin to the first quadrant at once.
PrincipalizationResult principalize(const std::vector<LatticeSet>& sets,
                                    std::int64_t cap = default_iteration_cap);

/// Set-by-set induction: principalize the first set, push the remaining sets
/// through and recurse. Kept for differential testing against principalize.
PrincipalizationResult principalize_sequential(const std::vector<LatticeSet>& sets,
                                               std::int64_t cap = default_iteration_cap);

/// True iff Phi(set) lies in apex + Z_{>=0}^n with apex in Phi(set).
bool is_principalized(const LatticeSet& image, const ExponentVector& apex);

} // namespace puiseux
