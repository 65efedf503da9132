#include "apx/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace apx {

using nlohmann::json;

json rational_json(const Rational& r) { return to_string(r); }

json real_json(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

json to_json(const SizeProfile& p) { return {{"q", p.q}, {"alpha", rational_json(p.alpha)}}; }

json to_json(const BoundValue& b) {
  return {{"value", rational_json(b.value)},
          {"branch", to_string(b.active_branch)},
          {"term1", rational_json(b.term1)},
          {"term2", rational_json(b.term2)}};
}

json to_json(const Spectrum& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(json::array({real_json(c.real()), real_json(c.imag())}));
  return {{"group", s.group.to_string()}, {"coeffs", coeffs}};
}

json to_json(const WeightSeq& w) {
  json weights = json::object();
  for (const auto& [i, a] : w.weights) weights[std::to_string(i)] = a;
  return {{"modulus", w.modulus}, {"total", w.total}, {"weights", weights}};
}

json to_json(const StructureReport& r) {
  json j = {{"m0", r.m0},
            {"coeff_value", real_json(r.coeff_value)},
            {"g", r.g},
            {"k", r.k},
            {"gamma", real_json(r.gamma)},
            {"mu", real_json(r.mu)},
            {"nu", real_json(r.nu)},
            {"beta", real_json(r.beta)},
            {"arc_size", r.arc_size},
            {"arc_mass", real_json(r.arc_mass)},
            {"residue_weights", to_json(r.residue_weights)},
            {"kernel_size", r.kernel_size},
            {"eta", rational_json(r.eta)}};
  j["q_prime"] = r.q_prime ? json(*r.q_prime) : json(nullptr);
  j["alpha_prime"] = r.alpha_prime ? rational_json(*r.alpha_prime) : json(nullptr);
  j["induction_rhs"] = r.induction_rhs ? rational_json(*r.induction_rhs) : json(nullptr);
  return j;
}

json to_json(const GlsSufficiency& r) {
  return {{"m", rational_json(r.m)},
          {"threshold", rational_json(r.threshold)},
          {"holds", r.holds},
          {"identity1", rational_json(r.identity1)},
          {"identity2", rational_json(r.identity2)},
          {"identity1_matches", r.identity1_matches},
          {"identity2_matches", r.identity2_matches}};
}

json to_json(const ScalingCheck& r) {
  return {{"q_prime", r.q_prime},
          {"alpha_prime", rational_json(r.alpha_prime)},
          {"lhs", rational_json(r.lhs)},
          {"rhs", rational_json(r.rhs)},
          {"holds_le", r.holds_le},
          {"strict", r.strict}};
}

namespace {

json point_json(const ScalingPoint& p) {
  return {{"q", p.q},
          {"alpha", rational_json(p.alpha)},
          {"k", p.k},
          {"eta", rational_json(p.eta)},
          {"lhs", rational_json(p.lhs)},
          {"rhs", rational_json(p.rhs)}};
}

std::string group_label(const GroupSpec& g) { return "\"" + g.to_string() + "\""; }

}  // namespace

json to_json(const ScalingScan& r) {
  json violations = json::array();
  for (const auto& p : r.violations) violations.push_back(point_json(p));
  json equalities = json::array();
  for (const auto& p : r.equalities) equalities.push_back(point_json(p));
  return {{"checked", r.checked},
          {"violations", violations},
          {"equality_count", r.equalities.size()},
          {"equalities", equalities}};
}

json to_json(const ConcentrationCheck& r) {
  return {{"lhs", r.lhs},
          {"rhs", rational_json(r.rhs)},
          {"hypothesis", r.hypothesis},
          {"conclusion", r.conclusion},
          {"ok", r.ok}};
}

json to_json(const ConcentrationScan& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"weights", v.weights}, {"d", v.total}, {"lhs", v.lhs}, {"rhs", rational_json(v.rhs)}});
  }
  return {{"checked", r.checked}, {"violations", violations}};
}

json to_json(const SearchReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(w.to_string());
  return {{"group", r.group.to_string()},
          {"size", r.size},
          {"objective", to_string(r.objective)},
          {"max_value", r.max_value ? rational_json(*r.max_value) : json(nullptr)},
          {"witnesses", witnesses},
          {"enumerated", r.enumerated},
          {"pruned_by_canon", r.pruned_by_canon},
          {"profile", to_json(r.profile)},
          {"bound", to_json(r.bound)},
          {"bound_satisfied", r.bound_satisfied}};
}

namespace {

json case_json(const SumClosureCase& c) {
  return {{"group", c.group.to_string()},
          {"d", c.d},
          {"profile", to_json(c.profile)},
          {"max_value", rational_json(c.max_value)},
          {"bound", to_json(c.bound)},
          {"gap", rational_json(c.gap)},
          {"witness", c.witness.to_string()}};
}

json case_json(const ProgressionCase& c) {
  return {{"group", c.group.to_string()},
          {"d", c.d},
          {"profile", to_json(c.profile)},
          {"max_value", rational_json(c.max_value)},
          {"algebraic_bound", rational_json(c.algebraic_bound)},
          {"algebraic_pass", c.algebraic_pass},
          {"witness", c.witness.to_string()}};
}

json case_json(const GlsCase& c) {
  return {{"group", c.group.to_string()},
          {"set", c.set.to_string()},
          {"degree", c.degree},
          {"profile", to_json(c.profile)},
          {"triangles", c.triangles},
          {"bound", c.bound},
          {"in_theorem_range", c.in_theorem_range},
          {"holds", c.holds}};
}

template <class Case>
json case_list(const std::vector<Case>& cases) {
  json out = json::array();
  for (const auto& c : cases) out.push_back(case_json(c));
  return out;
}

}  // namespace

json to_json(const SumClosureReport& r) {
  return {{"cases", r.cases},
          {"worst_gap", r.worst_gap ? rational_json(*r.worst_gap) : json(nullptr)},
          {"failures", case_list(r.failures)}};
}

json to_json(const ProgressionReport& r) {
  return {{"cases", r.cases},
          {"worst_gap", r.worst_gap ? rational_json(*r.worst_gap) : json(nullptr)},
          {"empirical_gamma1", rational_json(r.empirical_gamma1)},
          {"empirical_cases", r.empirical_cases},
          {"max_density_alpha_nonzero",
           r.max_density_alpha_nonzero ? rational_json(*r.max_density_alpha_nonzero) : json(nullptr)},
          {"failures", case_list(r.failures)}};
}

json to_json(const GlsReport& r) {
  return {{"cases", r.cases},
          {"in_range_cases", r.in_range_cases},
          {"out_of_range_cases", r.out_of_range_cases},
          {"out_of_range_holding", r.out_of_range_holding},
          {"failures", case_list(r.failures)},
          {"out_of_range_violations", case_list(r.out_of_range_violations)}};
}

json to_json(const BaseCaseReport& r) {
  json failures = json::array();
  for (const auto& [s, p] : r.failures) {
    failures.push_back({{"group", s.group().to_string()}, {"set", s.to_string()}, {"prob", rational_json(p)}});
  }
  return {{"sets_checked", r.sets_checked}, {"failures", failures}};
}

json to_json(const FourierCrosscheck& r) {
  return {{"samples", r.samples},
          {"odd_samples", r.odd_samples},
          {"max_prob_error", real_json(r.max_prob_error)},
          {"max_t3_error", real_json(r.max_t3_error)},
          {"max_plancherel", real_json(r.max_plancherel)},
          {"max_inversion", real_json(r.max_inversion)},
          {"max_imaginary", real_json(r.max_imaginary)},
          {"max_group_order_seen", r.max_group_order_seen}};
}

std::string scaling_violations_csv(const ScalingScan& r) {
  std::ostringstream out;
  out << "q,alpha,k,eta,lhs,rhs\n";
  for (const auto& p : r.violations) {
    out << p.q << ',' << to_string(p.alpha) << ',' << p.k << ',' << to_string(p.eta) << ',' << to_string(p.lhs)
        << ',' << to_string(p.rhs) << '\n';
  }
  return out.str();
}

std::string concentration_violations_csv(const ConcentrationScan& r) {
  std::ostringstream out;
  out << "weights,d,lhs,rhs\n";
  for (const auto& v : r.violations) {
    out << '"';
    for (std::size_t i = 0; i < v.weights.size(); ++i) out << (i ? "," : "") << v.weights[i];
    out << "\"," << v.total << ',' << v.lhs << ',' << to_string(v.rhs) << '\n';
  }
  return out.str();
}

std::string sum_closure_csv(const SumClosureReport& r) {
  std::ostringstream out;
  out << "group,d,q,alpha,max_value,bound,gap\n";
  for (const auto& c : r.all_cases) {
    out << group_label(c.group) << ',' << c.d << ',' << c.profile.q << ',' << to_string(c.profile.alpha) << ','
        << to_string(c.max_value) << ',' << to_string(c.bound.value) << ',' << to_string(c.gap) << '\n';
  }
  return out.str();
}

std::string progression_csv(const ProgressionReport& r) {
  std::ostringstream out;
  out << "group,d,q,alpha,max_value,bound,gap\n";
  for (const auto& c : r.all_cases) {
    out << group_label(c.group) << ',' << c.d << ',' << c.profile.q << ',' << to_string(c.profile.alpha) << ','
        << to_string(c.max_value) << ',' << to_string(c.algebraic_bound) << ','
        << to_string(Rational(c.algebraic_bound - c.max_value)) << '\n';
  }
  return out.str();
}

std::string gls_csv(const GlsReport& r) {
  std::ostringstream out;
  out << "group,set,degree,q,alpha,triangles,bound,in_theorem_range,holds\n";
  for (const auto& c : r.all_cases) {
    out << group_label(c.group) << ",\"" << c.set.to_string() << "\"," << c.degree << ',' << c.profile.q << ','
        << to_string(c.profile.alpha) << ',' << c.triangles << ',' << c.bound << ','
        << (c.in_theorem_range ? "true" : "false") << ',' << (c.holds ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace apx
