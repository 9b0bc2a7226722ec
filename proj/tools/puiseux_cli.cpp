// Command-line front end for the Puiseux solver and the cone/closure tools.

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "puiseux/closure.hpp"
#include "puiseux/cone.hpp"
#include "puiseux/newton.hpp"
#include "puiseux/parse.hpp"
#include "puiseux/planted.hpp"
#include "puiseux/report.hpp"

using namespace puiseux;

namespace {

enum Exit : int {
    ok = 0,
    negative = 1,
    usage = 2,
    unsplittable = 3,
    multiple_root = 4,
    cap_exceeded = 5,
    precision_failure = 6,
    internal = 70,
};

struct Options {
    std::string precision = "8";
    int max_steps = 64;
    bool no_vertical_first = false;
    std::string format = "text";
    std::uint64_t seed = 1;
    std::string input;
    bool json() const { return format == "json"; }
};

std::string read_input(const Options& o) {
    if (!o.input.empty()) {
        return o.input;
    }
    std::string all((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    while (!all.empty() && (all.back() == '\n' || all.back() == '\r')) {
        all.pop_back();
    }
    if (all.empty()) {
        throw ParseError("no input given", 0);
    }
    return all;
}

SolveConfig solve_config(const Options& o) {
    SolveConfig cfg;
    cfg.precision = parse_rational(o.precision);
    if (sgn(cfg.precision) <= 0) {
        throw ParseError("--precision must be positive", 0);
    }
    if (o.max_steps <= 0) {
        throw ParseError("--max-steps must be positive", 0);
    }
    cfg.max_steps = o.max_steps;
    cfg.first_vertical = !o.no_vertical_first;
    return cfg;
}

/// "(a,b,c) (d,e,f)" or "(a,b,c);(d,e,f)": every parenthesized group is a vector.
std::vector<ExponentVector> parse_vectors(const std::string& text, std::size_t offset = 0) {
    std::vector<ExponentVector> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == '(') {
            const std::size_t close = text.find(')', pos);
            if (close == std::string::npos) {
                throw ParseError("unclosed '('", offset + pos);
            }
            std::vector<Rational> coords;
            std::stringstream items(text.substr(pos + 1, close - pos - 1));
            std::string item;
            while (std::getline(items, item, ',')) {
                try {
                    coords.push_back(parse_rational(item));
                } catch (const ParseError&) {
                    throw ParseError("bad coordinate '" + item + "'", offset + pos);
                }
            }
            if (!out.empty() && coords.size() != out.front().size()) {
                throw ParseError("vectors of different lengths", offset + pos);
            }
            out.emplace_back(std::move(coords));
            pos = close + 1;
        } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ';') {
            ++pos;
        } else {
            throw ParseError(std::string("unexpected '") + c + "'", offset + pos);
        }
    }
    if (out.empty()) {
        throw ParseError("expected at least one vector like (1,-2)", offset);
    }
    return out;
}

Json vector_json(const ExponentVector& a) {
    Json out = Json::array();
    for (const auto& e : a) {
        out.push_back(rational_json(e));
    }
    return out;
}

void emit(const Options& o, const Json& j, const std::string& text) {
    if (o.json()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

int run_solve(const Options& o) {
    const SolveConfig cfg = solve_config(o);
    const ZPolynomial p = parse_equation(read_input(o));
    const ConeSolveResult r = solve_equation(p, cfg);
    Json j = solve_report(p, cfg, r.result);
    std::string text = solve_text(p, cfg, r.result);
    if (!p.has_nonnegative_support()) {
        j["merged_cone"] = matrix_json(r.merged);
        j["pulled_back"] = r.pulled_back.to_string();
        text = "merged cone: " + r.merged.to_string() + "\npulled back: " + r.pulled_back.to_string() + "\n" + text;
    }
    emit(o, j, text);
    return ok;
}

int run_cone_check(const Options& o) {
    const auto gens = parse_vectors(read_input(o));
    const Cone cone(gens, gens.front().size());
    Json j = {{"schema_version", schema_version}, {"command", "cone-check"}};
    if (const ExponentVector* w = s_cone_witness(cone)) {
        j["s_cone"] = false;
        j["witness"] = vector_json(*w);
        emit(o, j, "not an S-cone: " + w->to_string() + " is not lexicographically positive\n");
        return negative;
    }
    const SConeCertificate cert = bring_to_first_quadrant(cone);
    j["s_cone"] = true;
    j["reduction"] = matrix_json(cert.reduction);
    j["word"] = word_json(cert.word);
    Json images = Json::array();
    std::string text = "S-cone\nreduction: " + cert.reduction.to_string() + "\n";
    for (const auto& g : gens) {
        const ExponentVector img = cert.reduction.apply(g);
        images.push_back(vector_json(img));
        text += "  " + g.to_string() + " -> " + img.to_string() + "\n";
    }
    j["images"] = images;
    emit(o, j, text);
    return ok;
}

int run_principalize(const Options& o) {
    // Sets are separated by '|'.
    const std::string in = read_input(o);
    std::vector<LatticeSet> sets;
    std::size_t start = 0;
    for (;;) {
        const std::size_t bar = in.find('|', start);
        sets.push_back(parse_vectors(in.substr(start, bar - start), start));
        if (bar == std::string::npos) {
            break;
        }
        start = bar + 1;
    }
    const PrincipalizationResult r = principalize(sets);
    Json apexes = Json::array();
    std::string text = "map: " + r.map.to_string() + "\n";
    for (std::size_t k = 0; k < sets.size(); ++k) {
        apexes.push_back(vector_json(r.apexes[k]));
        text += "set " + std::to_string(k + 1) + " apex: " + r.apexes[k].to_string() + "\n";
    }
    for (const auto& s : r.word) {
        text += "  phi" + std::to_string(s.i + 1) + std::to_string(s.j + 1) + "^" + std::to_string(s.count) + "\n";
    }
    emit(o,
         {{"schema_version", schema_version},
          {"command", "principalize"},
          {"map", matrix_json(r.map)},
          {"apexes", apexes},
          {"word", word_json(r.word)}},
         text);
    return ok;
}

Json integrality_json(const IntegralityReport& rep) {
    Json j = {{"integral", rep.integral}};
    if (rep.witness) {
        j["witness"] = vector_json(*rep.witness);
        j["z_degree"] = rep.degree;
    }
    return j;
}

std::string integrality_text(const IntegralityReport& rep) {
    if (rep.integral) {
        return "integral\n";
    }
    return "not integral: exponent " + rep.witness->to_string() + " in the z^" + std::to_string(rep.degree) +
           " coefficient\n";
}

int run_minpoly(const Options& o) {
    const Series f = parse_series(read_input(o));
    const ZPolynomial mp = minimal_polynomial(f);
    const IntegralityReport rep = is_integral_over_formal(mp);
    Json coeffs = Json::array();
    for (const auto& c : mp.coefficients()) {
        coeffs.push_back(terms_json(c));
    }
    emit(o,
         {{"schema_version", schema_version},
          {"command", "minpoly"},
          {"series", f.to_string()},
          {"orbit_size", orbit_size(f)},
          {"minpoly", mp.to_string()},
          {"coefficients", coeffs},
          {"integrality", integrality_json(rep)}},
         "minpoly: " + mp.to_string() + "\n" + integrality_text(rep));
    return ok;
}

int run_integrality(const Options& o) {
    const ZPolynomial p = parse_equation(read_input(o));
    if (!p.is_monic()) {
        throw ParseError("equation is not monic in z", 0);
    }
    const IntegralityReport rep = is_integral_over_formal(p);
    Json j = {{"schema_version", schema_version}, {"command", "integrality"}, {"equation", p.to_string()}};
    j.update(integrality_json(rep));
    emit(o, j, integrality_text(rep));
    return rep.integral ? ok : negative;
}

int run_planted(const Options& o, int n, int m) {
    if (n < 1 || m < 1) {
        throw ParseError("--vars and --degree must be positive", 0);
    }
    const SolveConfig cfg = solve_config(o);
    std::mt19937_64 rng(o.seed);
    PlantedConfig pc;
    pc.n = static_cast<std::size_t>(n);
    pc.m = m;
    const PlantedInstance inst = make_planted(rng, pc);
    const ConeSolveResult r = solve_over_cone_ring(inst.external, cfg);
    const bool match = roots_match(inst.external_roots, r.result.roots, cfg.precision);
    std::vector<Series> coeffs;
    for (const auto& c : inst.external) {
        coeffs.push_back(c.series());
    }
    const ZPolynomial p(std::move(coeffs));
    Json planted = Json::array();
    std::string text = "planted roots:\n";
    for (const auto& s : inst.external_roots) {
        planted.push_back(s.to_string());
        text += "  " + s.to_string() + "\n";
    }
    Json j = solve_report(p, cfg, r.result);
    j["command"] = "planted";
    j["seed"] = o.seed;
    j["merged_cone"] = matrix_json(r.merged);
    j["planted"] = planted;
    j["recovered"] = match;
    emit(o, j, text + solve_text(p, cfg, r.result) + (match ? "recovered\n" : "NOT recovered\n"));
    return match ? ok : negative;
}

int report_error(const Options& o, int code, const std::string& kind, const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    if (o.json()) {
        std::cout << Json{{"schema_version", schema_version}, {"error", {{"kind", kind}, {"message", msg}}}}.dump(2)
                  << "\n";
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Puiseux-series roots of monic polynomials over multivariate power series"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--precision", o.precision, "Total-degree precision T (rational)")->capture_default_str();
    app.add_option("--max-steps", o.max_steps, "Newton step cap per branch")->capture_default_str();
    app.add_flag("--no-vertical-first", o.no_vertical_first, "Skip the vertical first step (x1-order 0 roots)");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--seed", o.seed, "Seed for generated instances")->capture_default_str();

    auto* solve_cmd = app.add_subcommand("solve", "Roots of an equation such as \"z^2 - x1 - x2\"");
    auto* cone_cmd = app.add_subcommand("cone-check", "S-cone test for generators such as \"(1,0,-2) (0,1,3)\"");
    auto* pr_cmd = app.add_subcommand("principalize", "Principalize exponent sets, e.g. \"(1,2) (2,1) | (0,3)\"");
    auto* mp_cmd = app.add_subcommand("minpoly", "Minimal polynomial of a finite series such as \"x1^(1/2) + x2\"");
    auto* int_cmd = app.add_subcommand("integrality", "Is a monic equation integral over k[[x]]?");
    auto* pl_cmd = app.add_subcommand("planted", "Solve a random instance with known roots");
    int planted_n = 2;
    int planted_m = 2;
    pl_cmd->add_option("--vars", planted_n, "Number of variables")->capture_default_str();
    pl_cmd->add_option("--degree", planted_m, "Degree in z")->capture_default_str();
    for (auto* sub : {solve_cmd, cone_cmd, pr_cmd, mp_cmd, int_cmd}) {
        sub->add_option("input", o.input, "Input text (read from stdin when omitted)");
        sub->fallthrough();
    }
    pl_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*solve_cmd) {
            return run_solve(o);
        }
        if (*cone_cmd) {
            return run_cone_check(o);
        }
        if (*pr_cmd) {
            return run_principalize(o);
        }
        if (*mp_cmd) {
            return run_minpoly(o);
        }
        if (*int_cmd) {
            return run_integrality(o);
        }
        if (*pl_cmd) {
            return run_planted(o, planted_n, planted_m);
        }
    } catch (const ParseError& e) {
        return report_error(o, usage, "parse", e.what());
    } catch (const Unsplittable& e) {
        return report_error(o, unsplittable, "unsplittable", e.what());
    } catch (const MultipleRoot& e) {
        return report_error(o, multiple_root, "multiple_root", e.what());
    } catch (const CapExceeded& e) {
        return report_error(o, cap_exceeded, "cap_exceeded", e.what());
    } catch (const PrecisionFailure& e) {
        return report_error(o, precision_failure, "precision_failure", e.what());
    } catch (const Error& e) {
        return report_error(o, usage, "invalid_input", e.what());
    } catch (const std::exception& e) {
        return report_error(o, internal, "internal", e.what());
    }
    return usage;
}
