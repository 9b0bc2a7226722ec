#include "puiseux/report.hpp"

#include <sstream>

namespace puiseux {

namespace {

/// Integers fitting in 64 bits are numbers, larger ones decimal strings.
Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) {
        return z.get_si();
    }
    return to_string(z);
}

} // namespace

Json rational_json(const Rational& r) {
    return Json::array({integer_json(r.get_num()), integer_json(r.get_den())});
}

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw Error("expected a [numerator, denominator] pair, got " + j.dump());
    }
    auto part = [](const Json& v) -> Integer {
        if (v.is_number_integer()) {
            return Integer(std::to_string(v.get<long long>()));
        }
        if (v.is_string()) {
            return Integer(v.get<std::string>());
        }
        throw Error("rational parts must be integers or integer strings, got " + v.dump());
    };
    Rational r(part(j[0]), part(j[1]));
    if (r.get_den() == 0) {
        throw DivisionByZero("zero denominator in " + j.dump());
    }
    r.canonicalize();
    return r;
}

Json precision_json(const Precision& p) {
    if (p.is_exact()) {
        return "exact";
    }
    if (p.is_none()) {
        return "none";
    }
    return rational_json(p.value());
}

Precision precision_from_json(const Json& j) {
    if (j == "exact") {
        return Precision::exact();
    }
    if (j == "none") {
        return Precision::none();
    }
    return Precision::at(rational_from_json(j));
}

Json terms_json(const Series& f) {
    Json out = Json::array();
    for (const auto& [a, c] : f.terms()) {
        Json exps = Json::array();
        for (const auto& e : a) {
            exps.push_back(rational_json(e));
        }
        out.push_back({{"num", integer_json(c.get_num())},
                       {"den", integer_json(c.get_den())},
                       {"exponents", exps}});
    }
    return out;
}

Series series_from_json(const Json& terms, std::size_t n, const Precision& prec) {
    TermMap map;
    for (const auto& t : terms) {
        std::vector<Rational> coords;
        for (const auto& e : t.at("exponents")) {
            coords.push_back(rational_from_json(e));
        }
        if (n == 0) {
            n = coords.size();
        }
        const Rational c = rational_from_json(Json::array({t.at("num"), t.at("den")}));
        map.emplace(ExponentVector(std::move(coords)), c);
    }
    return Series(n == 0 ? 1 : n, std::move(map), prec);
}

Json matrix_json(const MonomialMap& m) {
    return m.rows();
}

Json word_json(const std::vector<BlowupStep>& word) {
    Json out = Json::array();
    for (const auto& s : word) {
        out.push_back({{"i", s.i + 1}, {"j", s.j + 1}, {"count", s.count}});
    }
    return out;
}

Json step_json(const StepRecord& s) {
    Json j = {{"kind", to_string(s.kind)}, {"depth", s.depth}};
    if (s.kind == StepKind::vertical || s.kind == StepKind::segment) {
        j["gamma"] = rational_json(s.gamma);
        j["beta"] = rational_json(s.beta);
        j["z_degrees"] = s.degrees;
        j["principalization"] = word_json(s.principalization);
        j["e"] = s.e;
        j["alpha"] = terms_json(s.alpha);
        j["alpha_text"] = s.alpha.to_string();
    }
    j["multiplicity"] = s.multiplicity;
    j["accumulated"] = matrix_json(s.accumulated);
    return j;
}

Json root_json(const PuiseuxRoot& r) {
    Json log = Json::array();
    for (const auto& s : r.log) {
        log.push_back(step_json(s));
    }
    const Series ext = r.external();
    return {{"prepared_terms", terms_json(r.series)},
            {"prepared_text", r.series.to_string()},
            {"terms", terms_json(ext)},
            {"text", ext.to_string()},
            {"precision", precision_json(r.series.precision())},
            {"certificate", matrix_json(r.certificate)},
            {"denominator", integer_json(r.series.denominator())},
            {"residual_floor", r.residual_floor ? rational_json(*r.residual_floor) : Json("exact")},
            {"branch_log", log}};
}

Json solve_report(const ZPolynomial& p, const SolveConfig& cfg, const SolveResult& result) {
    Json roots = Json::array();
    for (const auto& r : result.roots) {
        roots.push_back(root_json(r));
    }
    return {{"schema_version", schema_version},
            {"command", "solve"},
            {"equation", p.to_string()},
            {"variables", p.dimension()},
            {"degree", p.degree()},
            {"precision", rational_json(cfg.precision)},
            {"first_vertical", cfg.first_vertical},
            {"omitted", result.omitted},
            {"roots", roots}};
}

std::string solve_text(const ZPolynomial& p, const SolveConfig& cfg, const SolveResult& result) {
    std::ostringstream out;
    out << "equation: " << p.to_string() << "\n";
    out << "precision: " << to_string(cfg.precision) << "\n";
    if (result.omitted > 0) {
        out << "omitted x1-order-0 roots: " << result.omitted << "\n";
    }
    int k = 1;
    for (const auto& r : result.roots) {
        out << "root " << k++ << ": " << r.external().to_string() << "\n";
        out << "  prepared: " << r.series.to_string() << "\n";
        out << "  certificate: " << r.certificate.to_string() << "\n";
        out << "  residual floor: " << (r.residual_floor ? to_string(*r.residual_floor) : "exact") << "\n";
        for (const auto& s : r.log) {
            out << "  " << std::string(static_cast<std::size_t>(2 * s.depth), ' ') << to_string(s.kind);
            if (s.kind == StepKind::vertical || s.kind == StepKind::segment) {
                out << " gamma=" << to_string(s.gamma) << " e=" << s.e << " alpha=" << s.alpha.to_string();
                for (const auto& b : s.principalization) {
                    out << " phi" << b.i + 1 << b.j + 1 << "^" << b.count;
                }
            }
            out << "\n";
        }
    }
    return out.str();
}

} // namespace puiseux
