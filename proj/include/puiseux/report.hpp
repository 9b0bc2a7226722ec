#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "puiseux/blowup.hpp"
#include "puiseux/closure.hpp"
#include "puiseux/newton.hpp"
#include "puiseux/series.hpp"

namespace puiseux {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

/// [numerator, denominator]; never a float.
Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// "exact", "none" or [p, q].
Json precision_json(const Precision& p);
Precision precision_from_json(const Json& j);

/// [{num, den, exponents: [[p,q], ...]}, ...] in lex order.
Json terms_json(const Series& f);
/// Inverse of terms_json; n = 0 takes the dimension from the first term.
Series series_from_json(const Json& terms, std::size_t n = 0, const Precision& prec = Precision::exact());

Json matrix_json(const MonomialMap& m);
/// Blowing-up runs with 1-based indices: [{i, j, count}, ...].
Json word_json(const std::vector<BlowupStep>& word);

Json step_json(const StepRecord& s);
Json root_json(const PuiseuxRoot& r);

/// Full solve report; indices in it are 1-based.
Json solve_report(const ZPolynomial& p, const SolveConfig& cfg, const SolveResult& result);

std::string solve_text(const ZPolynomial& p, const SolveConfig& cfg, const SolveResult& result);

} // namespace puiseux
