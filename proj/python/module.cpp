// pybind11 bindings. Structured results cross the boundary as JSON text in
// the CLI schema; the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "puiseux/closure.hpp"
#include "puiseux/cone.hpp"
#include "puiseux/parse.hpp"
#include "puiseux/planted.hpp"
#include "puiseux/report.hpp"

namespace py = pybind11;
using namespace puiseux;

namespace {

SolveConfig make_config(const std::string& precision, int max_steps, bool first_vertical) {
    SolveConfig cfg;
    cfg.precision = parse_rational(precision);
    if (sgn(cfg.precision) <= 0 || max_steps <= 0) {
        throw Error("precision and max_steps must be positive");
    }
    cfg.max_steps = max_steps;
    cfg.first_vertical = first_vertical;
    return cfg;
}

ExponentVector to_vector(const std::vector<std::string>& coords) {
    std::vector<Rational> out;
    for (const auto& c : coords) {
        out.push_back(parse_rational(c));
    }
    return ExponentVector(std::move(out));
}

Json vector_json(const ExponentVector& a) {
    Json out = Json::array();
    for (const auto& e : a) {
        out.push_back(rational_json(e));
    }
    return out;
}

std::string solve_json(const std::string& equation, const std::string& precision, int max_steps,
                       bool first_vertical) {
    const SolveConfig cfg = make_config(precision, max_steps, first_vertical);
    const ZPolynomial p = parse_equation(equation);
    const ConeSolveResult r = solve_equation(p, cfg);
    Json j = solve_report(p, cfg, r.result);
    j["merged_cone"] = matrix_json(r.merged);
    j["pulled_back"] = r.pulled_back.to_string();
    return j.dump();
}

std::string cone_check_json(const std::vector<std::vector<std::string>>& generators) {
    if (generators.empty()) {
        throw Error("expected at least one generator");
    }
    std::vector<ExponentVector> gens;
    for (const auto& g : generators) {
        gens.push_back(to_vector(g));
    }
    const Cone cone(gens, gens.front().size());
    Json j = {{"schema_version", schema_version}, {"command", "cone-check"}};
    if (const ExponentVector* w = s_cone_witness(cone)) {
        j["s_cone"] = false;
        j["witness"] = vector_json(*w);
        return j.dump();
    }
    const SConeCertificate cert = bring_to_first_quadrant(cone);
    j["s_cone"] = true;
    j["reduction"] = matrix_json(cert.reduction);
    j["word"] = word_json(cert.word);
    return j.dump();
}

std::string principalize_json(const std::vector<std::vector<std::vector<std::string>>>& sets) {
    std::vector<LatticeSet> in;
    for (const auto& s : sets) {
        LatticeSet set;
        for (const auto& v : s) {
            set.push_back(to_vector(v));
        }
        in.push_back(std::move(set));
    }
    const PrincipalizationResult r = principalize(in);
    Json apexes = Json::array();
    for (const auto& a : r.apexes) {
        apexes.push_back(vector_json(a));
    }
    return Json{{"schema_version", schema_version},
                {"command", "principalize"},
                {"map", matrix_json(r.map)},
                {"apexes", apexes},
                {"word", word_json(r.word)}}
        .dump();
}

Json integrality_json(const IntegralityReport& rep) {
    Json j = {{"integral", rep.integral}};
    if (rep.witness) {
        j["witness"] = vector_json(*rep.witness);
        j["z_degree"] = rep.degree;
    }
    return j;
}

std::string minpoly_json(const std::string& series) {
    const Series f = parse_series(series);
    const ZPolynomial mp = minimal_polynomial(f);
    Json coeffs = Json::array();
    for (const auto& c : mp.coefficients()) {
        coeffs.push_back(terms_json(c));
    }
    return Json{{"schema_version", schema_version},
                {"command", "minpoly"},
                {"series", f.to_string()},
                {"orbit_size", orbit_size(f)},
                {"minpoly", mp.to_string()},
                {"coefficients", coeffs},
                {"integrality", integrality_json(is_integral_over_formal(mp))}}
        .dump();
}

std::string integrality_report_json(const std::string& equation) {
    const ZPolynomial p = parse_equation(equation);
    Json j = {{"schema_version", schema_version}, {"command", "integrality"}, {"equation", p.to_string()}};
    j.update(integrality_json(is_integral_over_formal(p)));
    return j.dump();
}

std::string planted_json(std::size_t n, int m, std::uint64_t seed, const std::string& precision) {
    if (n < 1 || m < 1) {
        throw Error("n and m must be positive");
    }
    const SolveConfig cfg = make_config(precision, 64, true);
    std::mt19937_64 rng(seed);
    PlantedConfig pc;
    pc.n = n;
    pc.m = m;
    const PlantedInstance inst = make_planted(rng, pc);
    const ConeSolveResult r = solve_over_cone_ring(inst.external, cfg);
    std::vector<Series> coeffs;
    for (const auto& c : inst.external) {
        coeffs.push_back(c.series());
    }
    Json j = solve_report(ZPolynomial(std::move(coeffs)), cfg, r.result);
    j["command"] = "planted";
    j["seed"] = seed;
    Json planted = Json::array();
    for (const auto& s : inst.external_roots) {
        planted.push_back(s.to_string());
    }
    j["planted"] = planted;
    j["recovered"] = roots_match(inst.external_roots, r.result.roots, cfg.precision);
    return j.dump();
}

using Rows = std::vector<std::vector<std::int64_t>>;

} // namespace

PYBIND11_MODULE(_puiseux, m) {
    m.doc() = "Exact Puiseux-series roots over multivariate power series";

    auto base = py::register_exception<Error>(m, "PuiseuxError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<Unsplittable>(m, "Unsplittable", base.ptr());
    py::register_exception<MultipleRoot>(m, "MultipleRoot", base.ptr());
    py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
    py::register_exception<PrecisionFailure>(m, "PrecisionFailure", base.ptr());

    m.attr("schema_version") = schema_version;
    m.def("normalize_equation", [](const std::string& s) { return parse_equation(s).to_string(); });
    m.def("normalize_series", [](const std::string& s) { return parse_series(s).to_string(); });
    m.def("solve_json", &solve_json, py::arg("equation"), py::arg("precision") = "8", py::arg("max_steps") = 64,
          py::arg("first_vertical") = true);
    m.def("cone_check_json", &cone_check_json, py::arg("generators"));
    m.def("principalize_json", &principalize_json, py::arg("sets"));
    m.def("minpoly_json", &minpoly_json, py::arg("series"));
    m.def("integrality_json", &integrality_report_json, py::arg("equation"));
    m.def("planted_json", &planted_json, py::arg("n"), py::arg("m"), py::arg("seed"), py::arg("precision") = "6");
    m.def("compose", [](const Rows& a, const Rows& b) { return compose(MonomialMap(a), MonomialMap(b)).rows(); });
    m.def("inverse", [](const Rows& a) { return inverse(MonomialMap(a)).rows(); });
    m.def("is_blowup_composition", [](const Rows& a) { return MonomialMap(a).is_blowup_composition(); });
    m.def("is_blowdown_composition", [](const Rows& a) { return MonomialMap(a).is_blowdown_composition(); });
}
