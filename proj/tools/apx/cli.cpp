#include "apx/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "apx/bounds.hpp"
#include "apx/concentration.hpp"
#include "apx/counting.hpp"
#include "apx/crosscheck.hpp"
#include "apx/errors.hpp"
#include "apx/fourier.hpp"
#include "apx/report.hpp"
#include "apx/search.hpp"

namespace apx::cli {

using nlohmann::json;

namespace {

std::string trim(std::string s) {
  const char* ws = " \t\r\n";
  s.erase(0, s.find_first_not_of(ws));
  auto end = s.find_last_not_of(ws);
  s.erase(end == std::string::npos ? 0 : end + 1);
  return s;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "text") return OutputFormat::text;
  throw InvalidArgument("unknown output format '" + text + "' (expected json|csv|text)");
}

unsigned parse_threads(const std::string& text) {
  if (text == "auto") return 0;
  std::size_t used = 0;
  long value = -1;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value < 0) throw InvalidArgument("threads must be a non-negative integer or 'auto'");
  return static_cast<unsigned>(value);
}

/// What a command produced: the JSON report, an optional CSV rendering and
/// whether the run counts as a failure for the exit code.
struct Outcome {
  json report;
  std::optional<std::string> csv;
  bool failed = false;
};

std::string render_text(const json& j, const std::string& indent = "") {
  std::ostringstream out;
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n" << render_text(value, indent + "  ");
    } else if (value.is_array()) {
      out << indent << key << ": " << value.size() << " entries";
      if (!value.empty() && value.size() <= 10 && !value.front().is_object()) out << ' ' << value.dump();
      out << '\n';
      if (!value.empty() && value.size() <= 10 && value.front().is_object()) {
        for (const auto& item : value) out << indent << "  - " << item.dump() << '\n';
      }
    } else {
      out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
  return out.str();
}

std::string render_flat_csv(const json& j) {
  std::ostringstream out;
  out << "key,value\n";
  std::function<void(const json&, const std::string&)> walk = [&](const json& node, const std::string& prefix) {
    for (const auto& [key, value] : node.items()) {
      std::string name = prefix.empty() ? key : prefix + "." + key;
      if (value.is_object()) {
        walk(value, name);
      } else {
        std::string text = value.is_string() ? value.get<std::string>() : value.dump();
        out << name << ",\"" << text << "\"\n";
      }
    }
  };
  walk(j, "");
  return out.str();
}

SubsetMask make_set(const GroupSpec& g, const std::string& text) {
  return SubsetMask::from_indices(g, parse_index_list(text));
}

Outcome cmd_compute(const RunConfig& config, const std::string& group_text, const std::string& set_text,
                    bool structure, std::optional<double> gamma) {
  const GroupSpec g = parse_group(group_text);
  const SubsetMask s = make_set(g, set_text);
  json j;
  j["group"] = g.to_string();
  j["set"] = s.to_string();
  j["d"] = s.size();
  const bool symmetric = s.is_symmetric();
  j["symmetric"] = symmetric;

  if (s.empty()) {
    j["prob_direct"] = nullptr;
    j["prob_spectral"] = nullptr;
    j["size_profile"] = nullptr;
    j["bound"] = nullptr;
  } else {
    j["prob_direct"] = rational_json(direct_prob(s));
    j["prob_spectral"] = symmetric ? real_json(prob_spectral(s)) : json(nullptr);
    SizeProfile profile = size_profile(g.order(), s.size());
    j["size_profile"] = to_json(profile);
    j["bound"] = to_json(extremal_bound(profile.q, profile.alpha, config.gamma0));
  }
  j["t3_direct"] = direct_t3(s);
  if (g.odd_order() && !s.empty()) {
    j["t3_halving"] = direct_t3_halving(s);
    j["t3_spectral"] = real_json(t3_spectral(s));
  } else {
    j["t3_halving"] = nullptr;
    j["t3_spectral"] = nullptr;
  }
  if (is_connection_set(s)) {
    j["triangles_direct"] = cayley_triangles_direct(s);
    j["triangles_formula"] = rational_json(cayley_triangles_formula(s));
    j["prob_from_s0"] = s.empty() ? json(nullptr) : rational_json(prob_from_s0(s));
    j["gls_bound"] = gls_bound(g.order(), s.size());
  } else {
    j["triangles_direct"] = "invalid";
    j["triangles_formula"] = "invalid";
    j["prob_from_s0"] = "invalid";
    j["gls_bound"] = "invalid";
  }
  if (structure) {
    if (!gamma) throw InvalidArgument("--structure needs --gamma");
    j["structure"] = to_json(structure_report(s, *gamma, config.gamma0));
  }
  return {j, std::nullopt, false};
}

Outcome cmd_search(const RunConfig& config, const std::string& group_text, std::int64_t d,
                   const std::string& objective_text, bool no_canon, std::size_t witness_cap) {
  const GroupSpec g = parse_group(group_text);
  const Objective objective = parse_objective(objective_text);
  SearchOptions options;
  options.canonicalize = !no_canon;
  options.witness_cap = witness_cap;
  if (objective == Objective::prob) options.gamma0 = config.gamma0;
  options.threads = config.threads;
  SearchReport r = extremal_search(g, d, objective, options);
  bool failed = objective == Objective::prob ? !r.bound_satisfied : (r.max_value && *r.max_value > 1);
  return {to_json(r), std::nullopt, failed};
}

Outcome cmd_structure(const RunConfig& config, const std::string& group_text, const std::string& set_text,
                      double gamma, bool with_spectrum) {
  const GroupSpec g = parse_group(group_text);
  const SubsetMask s = make_set(g, set_text);
  json j = to_json(structure_report(s, gamma, config.gamma0));
  j["group"] = g.to_string();
  j["set"] = s.to_string();
  if (with_spectrum) j["spectrum"] = to_json(dft_indicator(s));
  return {j, std::nullopt, false};
}

Outcome cmd_bound(const RunConfig& config, std::optional<std::int64_t> n, std::optional<std::int64_t> d,
                  std::optional<std::int64_t> q, std::optional<std::string> alpha_text, std::optional<std::int64_t> k,
                  std::optional<std::string> eta_text) {
  json j;
  SizeProfile profile;
  if (n && d) {
    profile = size_profile(*n, *d);
    j["gls_bound"] = gls_bound(*n, *d);
  } else if (q && alpha_text) {
    profile.q = *q;
    profile.alpha = parse_rational(*alpha_text);
  } else {
    throw InvalidArgument("bound needs either --n and --d or --q and --alpha");
  }
  j["profile"] = to_json(profile);
  j["bound"] = to_json(extremal_bound(profile.q, profile.alpha, config.gamma0));
  j["base_case_bound"] = profile.q == 1 ? rational_json(base_case_bound(profile.alpha)) : json(nullptr);
  j["sufficiency"] = to_json(gls_sufficiency(profile.q, profile.alpha, config.gamma0));
  bool failed = false;
  if (k || eta_text) {
    if (!k || !eta_text) throw InvalidArgument("the scaling check needs both --k and --eta");
    ScalingCheck c = scaling_check(profile.q, profile.alpha, *k, parse_rational(*eta_text), config.gamma0);
    j["scaling"] = to_json(c);
    failed = !c.holds_le;
  }
  return {j, std::nullopt, failed};
}

Outcome verify_theorem2(const RunConfig& config, std::int64_t max_order) {
  SumClosureReport r = verify_sum_closure_bound(max_order, config.gamma0, config.threads);
  json j = to_json(r);
  j["max_order"] = max_order;
  // Subgroup-size cases must be tight.
  bool subgroup_tight = true;
  for (const auto& c : r.all_cases) {
    if (c.profile.alpha == 0 && c.gap != 0) subgroup_tight = false;
  }
  j["subgroup_cases_tight"] = subgroup_tight;
  return {j, sum_closure_csv(r), !r.failures.empty()};
}

Outcome verify_theorem1(const RunConfig& config, std::int64_t max_order) {
  ProgressionReport r = verify_progression_bound(max_order, config.threads);
  json j = to_json(r);
  j["max_order"] = max_order;
  return {j, progression_csv(r), !r.failures.empty()};
}

Outcome verify_gls_cmd(const RunConfig& config, std::int64_t max_order) {
  GlsReport r = verify_gls(max_order, config.threads);
  json j = to_json(r);
  j["max_order"] = max_order;
  return {j, gls_csv(r), !r.failures.empty()};
}

Outcome verify_concentration_cmd(const RunConfig& config, std::int64_t d_max, std::int64_t radius, const std::string& eps_text,
                      const std::optional<std::string>& weights_text) {
  const Rational eps = parse_rational(eps_text);
  if (weights_text) {
    std::vector<std::int64_t> weights;
    for (Index w : parse_index_list(*weights_text)) weights.push_back(w);
    IntWeightSeq seq(weights);
    ConcentrationCheck c = concentration_check(seq, eps);
    json j = to_json(c);
    j["weights"] = weights;
    j["min_product_sum"] = min_product_sum(seq);
    j["eps"] = rational_json(eps);
    return {j, std::nullopt, !c.ok};
  }
  ConcentrationScan r = concentration_scan(d_max, radius, eps, config.threads);
  json j = to_json(r);
  j["d_max"] = d_max;
  j["radius"] = radius;
  j["eps"] = rational_json(eps);
  return {j, concentration_violations_csv(r), !r.violations.empty()};
}

Outcome verify_scaling_cmd(const RunConfig& config, std::int64_t q_max, std::int64_t alpha_steps, std::int64_t eta_steps) {
  ScalingScan r = scaling_scan(q_max, alpha_steps, eta_steps, config.gamma0, config.threads);
  json j = to_json(r);
  j["q_max"] = q_max;
  j["alpha_steps"] = alpha_steps;
  j["eta_steps"] = eta_steps;
  return {j, scaling_violations_csv(r), !r.violations.empty()};
}

Outcome verify_fourier(const RunConfig& config, std::int64_t samples, std::int64_t max_group_order,
                       std::uint64_t seed) {
  FourierCrosscheck r = fourier_crosscheck(samples, max_group_order, seed, config.threads);
  json j = to_json(r);
  j["seed"] = seed;
  j["tolerance_prob"] = real_json(config.tolerance_spectral);
  const bool ok = r.max_prob_error <= config.tolerance_spectral && r.max_t3_error <= 1e-6 &&
                  r.max_plancherel <= 1e-10 && r.max_inversion <= 1e-8 && r.max_imaginary <= 1e-10;
  j["passed"] = ok;
  return {j, std::nullopt, !ok};
}

Outcome verify_base(const RunConfig& config, std::int64_t max_order) {
  BaseCaseReport r = verify_base_case(max_order, config.threads);
  json j = to_json(r);
  j["max_order"] = max_order;
  return {j, std::nullopt, !r.failures.empty()};
}

}  // namespace

RunConfig parse_config(std::istream& in, RunConfig base) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument("config line " + std::to_string(line_no) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "max_order") {
        base.max_order = std::stoll(value);
        if (base.max_order < 1) throw InvalidArgument("max_order must be >= 1");
      } else if (key == "tolerance_spectral") {
        base.tolerance_spectral = std::stod(value);
        if (!(base.tolerance_spectral > 0)) throw InvalidArgument("tolerance_spectral must be > 0");
      } else if (key == "gamma0") {
        base.gamma0 = parse_rational(value);
      } else if (key == "threads") {
        base.threads = parse_threads(value);
      } else if (key == "output_format") {
        base.output_format = parse_format(value);
      } else {
        throw InvalidArgument("unknown key '" + key + "'");
      }
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("config line " + std::to_string(line_no) + ": " + e.what());
    } catch (const std::exception&) {
      throw InvalidArgument("config line " + std::to_string(line_no) + ": bad value for '" + key + "'");
    }
  }
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config file '" + path + "'");
  return parse_config(in, std::move(base));
}

void apply_environment(RunConfig& config) {
  if (const char* env = std::getenv("APX_THREADS"); env && *env) config.threads = parse_threads(env);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and exhaustive checks of 3AP, sum-closure and Cayley-triangle bounds"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::string> format_text;
  std::optional<std::string> threads_text;
  std::optional<std::string> gamma0_text;
  std::string out_path;
  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--format", format_text, "json|csv|text");
  app.add_option("--threads", threads_text, "worker threads or 'auto'");
  app.add_option("--gamma0", gamma0_text, "constant branch of the bound, e.g. 949/1000");
  app.add_option("--out", out_path, "write the report to a file instead of stdout");

  std::function<Outcome(const RunConfig&)> action;

  // compute
  auto* compute = app.add_subcommand("compute", "all counting and spectral quantities of one set");
  std::string group_text, set_text;
  bool with_structure = false;
  std::optional<double> gamma;
  compute->add_option("--group", group_text, "moduli, e.g. 15 or 3,5")->required();
  compute->add_option("--set", set_text, "element indices, e.g. 1,2,3,4")->required();
  compute->add_flag("--structure", with_structure, "include the structure report");
  compute->add_option("--gamma", gamma, "probe threshold for --structure");
  compute->callback([&] {
    action = [&](const RunConfig& c) { return cmd_compute(c, group_text, set_text, with_structure, gamma); };
  });

  // search
  auto* search = app.add_subcommand("search", "exhaustive extremal search for one (group, size)");
  std::int64_t search_d = 1;
  std::string objective_text = "prob";
  bool no_canon = false;
  std::size_t witness_cap = 10;
  search->add_option("--group", group_text, "moduli")->required();
  search->add_option("--d", search_d, "set size")->required();
  search->add_option("--objective", objective_text, "prob|t3density");
  search->add_flag("--no-canon", no_canon, "disable orbit canonicalization");
  search->add_option("--witness-cap", witness_cap, "maximum witnesses reported");
  search->callback([&] {
    action = [&](const RunConfig& c) {
      return cmd_search(c, group_text, search_d, objective_text, no_canon, witness_cap);
    };
  });

  // structure
  auto* structure = app.add_subcommand("structure", "spectral structure diagnostics of a symmetric set");
  double structure_gamma = 1.0;
  bool with_spectrum = false;
  structure->add_option("--group", group_text, "moduli")->required();
  structure->add_option("--set", set_text, "element indices")->required();
  structure->add_option("--gamma", structure_gamma, "probe threshold in (|S|/n, 1]")->required();
  structure->add_flag("--spectrum", with_spectrum, "include all Fourier coefficients");
  structure->callback([&] {
    action = [&](const RunConfig& c) { return cmd_structure(c, group_text, set_text, structure_gamma, with_spectrum); };
  });

  // bound
  auto* bound = app.add_subcommand("bound", "evaluate the closed-form bounds");
  std::optional<std::int64_t> bound_n, bound_d, bound_q, bound_k;
  std::optional<std::string> bound_alpha, bound_eta;
  bound->add_option("--n", bound_n, "group order");
  bound->add_option("--d", bound_d, "set size (or graph degree for the triangle bound)");
  bound->add_option("--q", bound_q, "integer part q");
  bound->add_option("--alpha", bound_alpha, "fractional part, p/q or decimal");
  bound->add_option("--k", bound_k, "scaling check: index k");
  bound->add_option("--eta", bound_eta, "scaling check: eta in (3/4, 1]");
  bound->callback([&] {
    action = [&](const RunConfig& c) { return cmd_bound(c, bound_n, bound_d, bound_q, bound_alpha, bound_k, bound_eta); };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite; exit 1 on any failure");
  verify->require_subcommand(1);
  std::optional<std::int64_t> max_order;

  auto* v_t2 = verify->add_subcommand("theorem2", "sum-closure bound over all symmetric sets");
  v_t2->add_option("--max-order", max_order, "largest group order");
  v_t2->callback([&] {
    action = [&](const RunConfig& c) { return verify_theorem2(c, max_order.value_or(c.max_order)); };
  });

  auto* v_t1 = verify->add_subcommand("theorem1", "3AP density bound over all sets in odd-order groups");
  v_t1->add_option("--max-order", max_order, "largest group order");
  v_t1->callback([&] {
    action = [&](const RunConfig& c) { return verify_theorem1(c, max_order.value_or(c.max_order)); };
  });

  auto* v_gls = verify->add_subcommand("gls", "Cayley-graph triangle counts against the conjectured maximum");
  v_gls->add_option("--max-order", max_order, "largest group order");
  v_gls->callback([&] {
    action = [&](const RunConfig& c) { return verify_gls_cmd(c, max_order.value_or(c.max_order)); };
  });

  auto* v_base = verify->add_subcommand("base-case", "pigeonhole bound for symmetric sets with |S| > n/2");
  v_base->add_option("--max-order", max_order, "largest group order");
  v_base->callback([&] {
    action = [&](const RunConfig& c) { return verify_base(c, max_order.value_or(18)); };
  });

  auto* v_l1 = verify->add_subcommand("lemma1", "weight concentration implication, exhaustive");
  std::int64_t d_max = 12, radius = 3;
  std::string eps_text = "99/1000";
  std::optional<std::string> weights_text;
  v_l1->add_option("--d-max", d_max, "largest total weight");
  v_l1->add_option("--radius", radius, "support window [-R, R]");
  v_l1->add_option("--eps", eps_text, "epsilon, p/q or decimal");
  v_l1->add_option("--weights", weights_text, "check a single sequence a_{-R},...,a_R instead");
  v_l1->callback([&] {
    action = [&](const RunConfig& c) { return verify_concentration_cmd(c, d_max, radius, eps_text, weights_text); };
  });

  auto* v_l2 = verify->add_subcommand("lemma2", "scaling inequality over a rational grid");
  std::int64_t q_max = 20, alpha_steps = 101, eta_steps = 51;
  v_l2->add_option("--q-max", q_max, "largest q");
  v_l2->add_option("--alpha-steps", alpha_steps, "alpha grid points in [0,1]");
  v_l2->add_option("--eta-steps", eta_steps, "eta grid points in (3/4,1]");
  v_l2->callback([&] {
    action = [&](const RunConfig& c) { return verify_scaling_cmd(c, q_max, alpha_steps, eta_steps); };
  });

  auto* v_fourier = verify->add_subcommand("fourier", "spectral formulas against direct counts on random sets");
  std::int64_t samples = 1000, max_group_order = 512;
  std::uint64_t seed = 1;
  v_fourier->add_option("--samples", samples, "number of random sets");
  v_fourier->add_option("--max-group-order", max_group_order, "largest random group order");
  v_fourier->add_option("--seed", seed, "random seed");
  v_fourier->callback([&] {
    action = [&](const RunConfig& c) { return verify_fourier(c, samples, max_group_order, seed); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) config = load_config_file(config_path, config);
    apply_environment(config);
    if (threads_text) config.threads = parse_threads(*threads_text);
    if (format_text) config.output_format = parse_format(*format_text);
    if (gamma0_text) config.gamma0 = parse_rational(*gamma0_text);
    if (!action) {
      err << "usage error: no command given\n" << app.help();
      return 2;
    }

    Outcome outcome = action(config);
    std::string body;
    switch (config.output_format) {
      case OutputFormat::json: body = outcome.report.dump(2) + "\n"; break;
      case OutputFormat::csv: body = outcome.csv ? *outcome.csv : render_flat_csv(outcome.report); break;
      case OutputFormat::text: body = render_text(outcome.report); break;
    }
    if (out_path.empty()) {
      out << body;
    } else {
      std::ofstream file(out_path);
      if (!file) throw InvalidArgument("cannot write '" + out_path + "'");
      file << body;
    }
    return outcome.failed ? 1 : 0;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return 2;
  }
}

}  // namespace apx::cli
