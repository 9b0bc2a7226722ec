#pragma once

#include <cstddef>
#include <vector>

#include "puiseux/blowup.hpp"
#include "puiseux/lattice.hpp"

namespace puiseux {

/// Polyhedral cone: all nonnegative rational combinations of the generators.
class Cone {
public:
    Cone(std::vector<ExponentVector> generators, std::size_t n);
    /// The simplicial cone m(R_{>=0}^n), generated by the rows of m.
    static Cone of_map(const MonomialMap& m);

    std::size_t dimension() const noexcept { return n_; }
    const std::vector<ExponentVector>& generators() const noexcept { return generators_; }

private:
    std::vector<ExponentVector> generators_;
    std::size_t n_;
};

/// Order-preserving blowing-up composition taking every generator into the
/// closed first quadrant.
struct SConeCertificate {
    MonomialMap reduction;
    std::vector<BlowupStep> word;
};

/// Every generator is lexicographically positive. Throws on a zero generator.
bool is_s_cone(const Cone& c);

/// First lex-nonpositive generator, if any; the witness of a failed is_s_cone.
const ExponentVector* s_cone_witness(const Cone& c);

/// Throws Error when c is not an S-cone and CapExceeded past `cap`.
SConeCertificate bring_to_first_quadrant(const Cone& c, std::int64_t cap = default_iteration_cap);

/// Exact simplicial membership: a * m^-1 >= 0.
bool contains(const MonomialMap& m, const ExponentVector& a);

/// Blowing-down Phi whose cone contains both m1(R_{>=0}^n) and m2(R_{>=0}^n):
/// reduce the union of the rows to the first quadrant by B, return B^-1.
MonomialMap common_enclosing(const MonomialMap& m1, const MonomialMap& m2,
                             std::int64_t cap = default_iteration_cap);

} // namespace puiseux
