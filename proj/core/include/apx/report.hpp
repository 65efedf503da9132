#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "apx/bounds.hpp"
#include "apx/concentration.hpp"
#include "apx/crosscheck.hpp"
#include "apx/fourier.hpp"
#include "apx/search.hpp"

namespace apx {

// JSON conventions: object keys come out sorted, rationals are "p/q"
// strings, and floating-point diagnostics are rounded to 12 significant
// digits, so dump(parse(dump(x))) == dump(x).

nlohmann::json rational_json(const Rational& r);
nlohmann::json real_json(double v);

nlohmann::json to_json(const SizeProfile& p);
nlohmann::json to_json(const BoundValue& b);
nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const WeightSeq& w);
nlohmann::json to_json(const StructureReport& r);
nlohmann::json to_json(const GlsSufficiency& r);
nlohmann::json to_json(const ScalingCheck& r);
nlohmann::json to_json(const ScalingScan& r);
nlohmann::json to_json(const ConcentrationCheck& r);
nlohmann::json to_json(const ConcentrationScan& r);
nlohmann::json to_json(const SearchReport& r);
nlohmann::json to_json(const SumClosureReport& r);
nlohmann::json to_json(const ProgressionReport& r);
nlohmann::json to_json(const GlsReport& r);
nlohmann::json to_json(const BaseCaseReport& r);
nlohmann::json to_json(const FourierCrosscheck& r);

// CSV with a header row.
std::string scaling_violations_csv(const ScalingScan& r);          // q,alpha,k,eta,lhs,rhs
std::string concentration_violations_csv(const ConcentrationScan& r);  // weights,d,lhs,rhs
std::string sum_closure_csv(const SumClosureReport& r);          // group,d,q,alpha,max_value,bound,gap
std::string progression_csv(const ProgressionReport& r);         // group,d,q,alpha,max_value,bound,gap
std::string gls_csv(const GlsReport& r);

}  // namespace apx
