#include "puiseux/cone.hpp"

namespace puiseux {

Cone::Cone(std::vector<ExponentVector> generators, std::size_t n) : generators_(std::move(generators)), n_(n) {
    if (generators_.empty()) {
        throw Error("cone needs at least one generator");
    }
    for (const auto& g : generators_) {
        if (g.size() != n_) {
            throw DimensionMismatch("generator " + g.to_string() + " in dimension " + std::to_string(n_));
        }
    }
}

Cone Cone::of_map(const MonomialMap& m) {
    std::vector<ExponentVector> rows;
    for (std::size_t r = 0; r < m.dimension(); ++r) {
        rows.push_back(m.row(r));
    }
    return Cone(std::move(rows), m.dimension());
}

const ExponentVector* s_cone_witness(const Cone& c) {
    for (const auto& g : c.generators()) {
        const int s = first_nonzero_sign(g);
        if (s == 0) {
            throw Error("cone generator is zero");
        }
        if (s < 0) {
            return &g;
        }
    }
    return nullptr;
}

bool is_s_cone(const Cone& c) {
    return s_cone_witness(c) == nullptr;
}

SConeCertificate bring_to_first_quadrant(const Cone& c, std::int64_t cap) {
    if (const auto* bad = s_cone_witness(c)) {
        throw Error("not an S-cone: generator " + bad->to_string() + " is lexicographically negative");
    }
    auto red = reduce_to_first_quadrant(c.generators(), c.dimension(), cap);
    return {std::move(red.map), std::move(red.word)};
}

bool contains(const MonomialMap& m, const ExponentVector& a) {
    return inverse(m).apply(a).is_nonnegative();
}

MonomialMap common_enclosing(const MonomialMap& m1, const MonomialMap& m2, std::int64_t cap) {
    if (m1.dimension() != m2.dimension()) {
        throw DimensionMismatch("common_enclosing of maps in dimensions " + std::to_string(m1.dimension()) +
                                " and " + std::to_string(m2.dimension()));
    }
    std::vector<ExponentVector> rows;
    for (std::size_t r = 0; r < m1.dimension(); ++r) {
        rows.push_back(m1.row(r));
        rows.push_back(m2.row(r));
    }
    auto red = reduce_to_first_quadrant(rows, m1.dimension(), cap);
    return inverse(red.map);
}

} // namespace puiseux
