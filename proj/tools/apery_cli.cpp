// apery: inspect numerical semigroups and root systems, run identity suites.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "apery/errors.hpp"
#include "apery/identities.hpp"
#include "apery/partition.hpp"
#include "apery/report.hpp"
#include "apery/root_systems.hpp"
#include "apery/sampling.hpp"
#include "apery/semigroup.hpp"
#include "apery/suite.hpp"
#include "apery/tree_path.hpp"

namespace {

using namespace apery;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct SemigroupArgs {
  std::vector<std::int64_t> gens;
  std::vector<std::int64_t> gaps;
  CLI::Option* gens_opt = nullptr;
  CLI::Option* gaps_opt = nullptr;

  void attach(CLI::App& app) {
    gens_opt = app.add_option("--gens", gens, "Generators, comma separated")->delimiter(',');
    gaps_opt = app.add_option("--gaps", gaps, "Gap set, comma separated")->delimiter(',');
    gens_opt->excludes(gaps_opt);
  }

  std::optional<NumericalSemigroup> get() const {
    if (gens_opt->count() > 0) return NumericalSemigroup::from_generators(gens);
    if (gaps_opt->count() > 0) {
      auto g = gaps;
      std::sort(g.begin(), g.end());
      return NumericalSemigroup::from_gaps(g);
    }
    return std::nullopt;
  }
};

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string braces(const std::vector<std::int64_t>& v) { return "{" + join(v) + "}"; }
std::string brackets(const std::vector<std::int64_t>& v) { return "[" + join(v) + "]"; }

int cmd_info(const NumericalSemigroup& s, std::optional<std::int64_t> m_opt, const std::string& format) {
  const auto m = m_opt.value_or(s.multiplicity());
  if (m <= 0 || !s.contains(m))
    throw ArgumentError("m = " + std::to_string(m) + " is not a nonzero member of " + s.describe());
  const auto ap = apery_set(s, m);
  const auto hp = height_partition(s, m);
  const bool conj_ok = conjugate(ap.counts) == hp.b;
  const CanonicalPath path(s, m);

  if (format == "json") {
    Json j;
    j["semigroup"] = {{"gaps", s.gaps()}, {"generators", s.minimal_generators()}};
    j["frobenius"] = s.frobenius();
    j["genus"] = s.genus();
    j["m"] = m;
    j["apery"] = ap.values;
    j["A"] = ap.counts;
    j["height_counts"] = hp.b;
    j["conjugacy"] = conj_ok;
    Json steps = Json::array();
    for (std::size_t i = path.length(); i >= 1; --i) {
      const auto& st = path.step(i);
      steps.push_back({{"i", i}, {"c", st.frobenius_added}, {"T", st.t_set}});
    }
    j["path"] = std::move(steps);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "semigroup    " << s.describe() << '\n'
              << "gaps         " << brackets(s.gaps()) << '\n'
              << "genus        " << s.genus() << '\n'
              << "F            " << s.frobenius() << '\n'
              << "generators   " << brackets(s.minimal_generators()) << '\n'
              << "m            " << m << '\n'
              << "apery        " << brackets(ap.values) << '\n'
              << "A            " << brackets(ap.counts) << '\n'
              << "height b     " << brackets(hp.b) << '\n'
              << "conjugacy    " << (conj_ok ? "OK" : "FAILED") << '\n'
              << "path         " << path.length() << " steps\n";
    for (std::size_t i = path.length(); i >= 1; --i) {
      const auto& st = path.step(i);
      std::cout << "  c_" << i << " = " << st.frobenius_added << "  T_" << i << " = " << braces(st.t_set) << '\n';
    }
  }
  return conj_ok ? 0 : kExitFail;
}

int cmd_roots(const std::string& type, int rank, std::uint64_t seed, const std::string& format) {
  const auto rs = build_root_system(type, rank);
  const auto problem = root_system_invariant_failure(rs);
  const auto poincare = verify_poincare_products(rs);
  Rng rng(seed);
  const auto f = random_injective_function(rng, rs.exponents.back() + 1);
  const auto eq10 = verify_eq10(rs, f);
  const bool ok = problem.empty() && poincare.equal && eq10.equal;

  auto heights = rs.heights;
  std::sort(heights.begin(), heights.end());
  auto b = rs.height_counts();
  b.erase(b.begin());

  if (format == "json") {
    Json j;
    j["type"] = rs.label();
    j["rank"] = rs.rank;
    j["positive_roots"] = rs.positive_roots.size();
    j["heights"] = heights;
    j["height_counts"] = b;
    j["exponents"] = rs.exponents;
    j["conjugacy"] = problem.empty();
    if (!problem.empty()) j["problem"] = problem;
    j["solomon"] = solomon_polynomial(rs).to_string('t');
    j["macdonald"] = macdonald_polynomial(rs).to_string('t');
    j["seed"] = seed;
    j["checks"] = Json::array({to_json(poincare), to_json(eq10)});
    j["pass"] = ok;
    std::cout << j.dump(2) << '\n';
  } else {
    std::vector<std::int64_t> h64(heights.begin(), heights.end());
    std::vector<std::int64_t> e64(rs.exponents.begin(), rs.exponents.end());
    std::cout << "type         " << rs.label() << '\n'
              << "|R+|         " << rs.positive_roots.size() << '\n'
              << "heights      " << braces(h64) << '\n'
              << "b_1..b_h     " << brackets(b) << '\n'
              << "exponents    (" << join(e64) << ")\n"
              << "conjugacy    " << (problem.empty() ? "OK" : problem) << '\n'
              << "solomon      " << solomon_polynomial(rs).to_string('t') << '\n'
              << "macdonald    " << macdonald_polynomial(rs).to_string('t') << '\n'
              << "poincare     " << (poincare.equal ? "OK" : "FAILED") << '\n'
              << "eq10         " << (eq10.equal ? "OK" : "FAILED") << "  (seed " << seed << ")  "
              << join(eq10.lhs, " ") << " = " << join(eq10.rhs, " ") << '\n';
  }
  return ok ? 0 : kExitFail;
}

int cmd_verify(const SuiteConfig& cfg, const std::string& format) {
  cfg.q_params.validate();
  const auto result = run_suite(cfg);
  if (format == "json")
    std::cout << result.to_json().dump(2) << '\n';
  else
    std::cout << result.to_text();
  return result.pass() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical semigroup and root-system identity checker"};
  app.require_subcommand(1);

  auto* info = app.add_subcommand("info", "Gaps, Apery set, height partition and canonical path");
  SemigroupArgs info_sg;
  info_sg.attach(*info);
  std::optional<std::int64_t> info_m;
  std::string info_format = "text";
  info->add_option("--m", info_m, "Nonzero member (default: multiplicity)");
  info->add_option("--format", info_format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run identity suites over seeded random instances");
  SuiteConfig cfg;
  SemigroupArgs verify_sg;
  verify_sg.attach(*verify);
  std::string verify_format = "json";
  verify->add_option("--suite", cfg.suite)->check(CLI::IsMember(suite_names()))->capture_default_str();
  verify->add_option("--seed", cfg.seed)->capture_default_str();
  verify->add_option("--instances", cfg.instances)->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--m", cfg.m, "Fixed member m (default: random, or the multiplicity with --gens/--gaps)");
  verify->add_option("--p", cfg.p, "Fixed subset size (default: every admissible p)")->check(CLI::PositiveNumber);
  verify->add_option("--k", cfg.k, "Fixed degree k (default: 1..4)")->check(CLI::PositiveNumber);
  verify->add_flag("--non-injective-f", cfg.non_injective_f, "Use f(x) = x mod 2");
  verify->add_option("--max-subsets", cfg.max_subsets, "Cap on binomial(m, p)")->capture_default_str();
  verify->add_option("--q", cfg.q_params.q)->capture_default_str();
  verify->add_option("--l", cfg.q_params.l)->capture_default_str();
  verify->add_option("--y", cfg.q_params.y)->capture_default_str();
  verify->add_option("--alpha", cfg.q_params.alpha)->capture_default_str();
  verify->add_option("--lambda", cfg.q_params.lambda)->capture_default_str();
  verify->add_option("--n", cfg.q_order, "q-Bernoulli order n")->capture_default_str();
  verify->add_option("--x", cfg.q_shift, "Real shift x in the floor weight")->capture_default_str();
  verify->add_option("--tolerance", cfg.q_tolerance, "Residual tolerance")->capture_default_str();
  verify->add_option("--truncation-tol", cfg.q_params.truncation_tol)->capture_default_str();
  verify->add_option("--max-terms", cfg.q_params.max_terms)->capture_default_str();
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* roots = app.add_subcommand("roots", "Positive roots, exponents, Poincare polynomial");
  std::string type;
  int rank = 0;
  std::uint64_t roots_seed = 1;
  std::string roots_format = "text";
  roots->add_option("--type", type, "A..G, optionally with rank (e.g. G2, E8)")->required();
  roots->add_option("--rank", rank);
  roots->add_option("--seed", roots_seed)->capture_default_str();
  roots->add_option("--format", roots_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*info) {
      const auto s = info_sg.get();
      if (!s) throw ArgumentError("info needs --gens or --gaps");
      return cmd_info(*s, info_m, info_format);
    }
    if (*verify) {
      cfg.semigroup = verify_sg.get();
      return cmd_verify(cfg, verify_format);
    }
    if (*roots) return cmd_roots(type, rank, roots_seed, roots_format);
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
