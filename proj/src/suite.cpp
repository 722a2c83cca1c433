#include "apery/suite.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "apery/errors.hpp"
#include "apery/identities.hpp"
#include "apery/root_systems.hpp"
#include "apery/sampling.hpp"
#include "apery/tree_path.hpp"

namespace apery {

namespace {

const std::vector<std::string> kSemigroupSuites = {
    "gassert-shor", "general", "prop1", "prop2", "prop3", "prop4", "prop5",
    "prop6", "telescoping", "structure", "qbernoulli"};
const std::vector<std::string> kRootSuites = {"eq10", "floor"};
const std::vector<std::string> kOnceSuites = {"poincare", "eq10-qbernoulli", "eq9"};

bool is_one_of(const std::string& s, const std::vector<std::string>& v) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

struct Instance {
  NumericalSemigroup s;
  std::int64_t m = 1;
  FunctionTable f{std::vector<Rational>{Rational(0)}};
};

class Runner {
 public:
  explicit Runner(const SuiteConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  SuiteResult run() {
    SuiteResult out;
    out.suite = cfg_.suite;
    out.seed = cfg_.seed;
    const bool all = cfg_.suite == "all";
    if (!all && !is_one_of(cfg_.suite, kSemigroupSuites) && !is_one_of(cfg_.suite, kRootSuites) &&
        !is_one_of(cfg_.suite, kOnceSuites))
      throw ArgumentError("unknown suite '" + cfg_.suite + "'");

    const bool per_instance_semigroup = all || is_one_of(cfg_.suite, kSemigroupSuites);
    const bool per_instance_roots = all || is_one_of(cfg_.suite, kRootSuites);
    for (std::size_t i = 0; i < cfg_.instances; ++i) {
      if (per_instance_semigroup) {
        const auto inst = draw_instance();
        const CanonicalPath path(inst.s, inst.m);
        for (const auto& name : kSemigroupSuites)
          if (all || name == cfg_.suite) run_semigroup_suite(name, inst, path, out.reports);
      }
      if (per_instance_roots)
        for (const auto& name : kRootSuites)
          if (all || name == cfg_.suite) run_root_suite(name, out.reports);
    }
    for (const auto& name : kOnceSuites)
      if (all || name == cfg_.suite) run_once_suite(name, out.reports);
    return out;
  }

 private:
  Instance draw_instance() {
    Instance inst;
    if (cfg_.semigroup) {
      inst.s = *cfg_.semigroup;
      inst.m = cfg_.m.value_or(inst.s.multiplicity());
    } else {
      do {
        inst.s = random_semigroup(rng_);
        inst.m = cfg_.m ? *cfg_.m : random_member(rng_, inst.s);
      } while (inst.m == 0 || !inst.s.contains(inst.m));
    }
    if (inst.m <= 0 || !inst.s.contains(inst.m))
      throw ArgumentError("m = " + std::to_string(inst.m) + " is not a nonzero member of " + inst.s.describe());
    const auto domain = required_domain(inst.s, inst.m);
    if (cfg_.non_injective_f)
      inst.f = FunctionTable::from(domain, [](std::int64_t x) { return Rational(x % 2); });
    else
      inst.f = random_injective_function(rng_, domain);
    return inst;
  }

  std::vector<std::size_t> admissible_p(std::int64_t m, std::size_t lo = 1, std::size_t hi = 0) const {
    if (hi == 0) hi = static_cast<std::size_t>(m);
    if (cfg_.p) return {*cfg_.p};
    std::vector<std::size_t> ps;
    for (std::size_t p = lo; p <= hi; ++p)
      if (binomial(static_cast<unsigned long>(m), p) <= cfg_.max_subsets) ps.push_back(p);
    return ps;
  }

  std::vector<int> ks(int lo, int hi) const {
    if (cfg_.k) return {*cfg_.k};
    std::vector<int> v;
    for (int k = lo; k <= hi; ++k) v.push_back(k);
    return v;
  }

  void run_semigroup_suite(const std::string& name, const Instance& inst, const CanonicalPath& path,
                           std::vector<IdentityReport>& out) {
    const auto& f = inst.f;
    if (name == "gassert-shor") {
      out.push_back(verify_gassert_shor(inst.s, inst.m, f));
    } else if (name == "general") {
      for (auto p : admissible_p(inst.m)) {
        const int k = std::min<int>(cfg_.k.value_or(2), static_cast<int>(p));
        out.push_back(verify_general(path, f, SymmetricSpec::elementary(p, k)));
        out.push_back(verify_general(path, f, SymmetricSpec::complete(p, cfg_.k.value_or(2))));
        out.push_back(verify_general(path, f, SymmetricSpec::power_sum(p, cfg_.k.value_or(2))));
      }
    } else if (name == "prop1") {
      for (auto p : admissible_p(inst.m)) out.push_back(verify_prop1(path, f, p));
    } else if (name == "prop2") {
      const auto samples = prop2_samples(path, f, prop2_degree_bound(path, f) + 1);
      for (auto p : admissible_p(inst.m)) out.push_back(verify_prop2(path, f, p, samples));
    } else if (name == "prop3") {
      for (auto p : admissible_p(inst.m))
        for (int k : ks(1, std::min<int>(4, static_cast<int>(p))))
          if (k <= static_cast<int>(p)) out.push_back(verify_prop3(path, f, p, k));
    } else if (name == "prop4") {
      for (auto p : admissible_p(inst.m))
        for (int k : ks(1, 4)) out.push_back(verify_prop4(path, f, p, k));
    } else if (name == "prop5") {
      for (auto p : admissible_p(inst.m)) {
        std::vector<Poly> ws;
        for (unsigned j = 0; j <= 3; ++j) ws.push_back(Poly::monomial(static_cast<unsigned>(p) - 1 + j));
        for (auto& r : verify_prop5(path, f, p, ws)) out.push_back(std::move(r));
      }
    } else if (name == "prop6") {
      if (inst.m < 2) return;
      std::set<std::size_t> ps{1, 2, static_cast<std::size_t>(inst.m) - 1};
      if (cfg_.p) ps = {*cfg_.p};
      for (auto p : ps) {
        if (p < 1 || p >= static_cast<std::size_t>(inst.m)) continue;
        for (int k : ks(1, 4)) out.push_back(verify_prop6(path, k, p));
      }
    } else if (name == "telescoping") {
      out.push_back(verify_telescoping_consistency(path, f));
      run_generic_telescoping(path, out);
    } else if (name == "structure") {
      for (auto& r : check_structure(path)) out.push_back(std::move(r));
    } else if (name == "qbernoulli") {
      out.push_back(verify_qbernoulli_gs(inst.s, inst.m, cfg_.q_params, cfg_.q_order, cfg_.q_shift,
                                         cfg_.q_tolerance));
    }
  }

  void run_generic_telescoping(const CanonicalPath& path, std::vector<IdentityReport>& out) {
    const auto n = path.length();
    VertexFunction h;
    h.values = random_rationals(rng_, n + 1);
    auto tag = [&](IdentityReport& r) {
      r.gaps = path.base().gaps();
      r.m = path.m();
    };
    {
      const auto t = telescoping_sum(h, path);
      IdentityReport r;
      r.identity = "telescoping-sum";
      r.params = {{"H", to_strings(h.values)}};
      tag(r);
      set_exact_sides(r, std::span(&t.lhs, 1), std::span(&t.rhs, 1));
      out.push_back(std::move(r));
    }
    for (std::size_t p = 1; p <= std::min<std::size_t>(4, n); ++p) {
      RationalMatrix rows(p - 1);
      for (auto& row : rows) row = random_rationals(rng_, p);
      const auto d = determinant_relation(h, path, p, rows);
      IdentityReport r;
      r.identity = "determinant-relation";
      Json fixed = Json::array();
      for (const auto& row : rows) fixed.push_back(to_strings(row));
      r.params = {{"p", p}, {"fixed_rows", fixed}};
      tag(r);
      set_exact_sides(r, std::span(&d.lhs, 1), std::span(&d.rhs, 1));
      out.push_back(std::move(r));
    }
  }

  void run_root_suite(const std::string& name, std::vector<IdentityReport>& out) {
    if (name == "eq10") {
      if (systems_.empty()) systems_ = all_root_systems();
      std::uniform_int_distribution<std::size_t> pick(0, systems_.size() - 1);
      const auto& rs = systems_[pick(rng_)];
      const auto f = random_injective_function(rng_, rs.exponents.back() + 1);
      out.push_back(verify_eq10(rs, f));
      out.push_back(verify_layer_counting(rs, f));
    } else if (name == "floor") {
      std::uniform_int_distribution<int> pick(1, 200);
      const int k = pick(rng_);
      const auto f = random_injective_function(rng_, 2 * k);
      out.push_back(verify_mk_identity(k, f));
      out.push_back(verify_divisor_identity(k, f));
    }
  }

  void run_once_suite(const std::string& name, std::vector<IdentityReport>& out) {
    if (name == "poincare") {
      if (systems_.empty()) systems_ = all_root_systems();
      for (const auto& rs : systems_) out.push_back(verify_poincare_products(rs));
    } else if (name == "eq10-qbernoulli") {
      for (const char* label : {"A2", "G2"})
        out.push_back(verify_eq10_qbernoulli(build_root_system(label), cfg_.q_params, cfg_.q_order,
                                             cfg_.q_tolerance));
    } else if (name == "eq9") {
      for (double q : {0.3, 0.5, 0.7})
        for (double lambda : {0.1, 0.25})
          for (int l : {1, 2})
            for (double t : {0.0, 0.5, 1.0}) {
              auto params = cfg_.q_params;
              params.q = q;
              params.lambda = lambda;
              params.l = l;
              const auto e = verify_eq9(cfg_.q_order, t, params);
              IdentityReport r;
              r.identity = "eq9";
              r.params = {{"q", q}, {"l", l}, {"y", params.y}, {"lambda", lambda}, {"alpha", params.alpha},
                          {"n", cfg_.q_order}, {"t", t}};
              r.lhs = {format_double(e.lhs)};
              r.rhs = {format_double(e.rhs)};
              r.residual = e.residual;
              r.equal = e.residual < cfg_.q_tolerance;
              out.push_back(std::move(r));
            }
    }
  }

  const SuiteConfig& cfg_;
  Rng rng_;
  std::vector<RootSystem> systems_;
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"all"};
    for (const auto* group : {&kSemigroupSuites, &kRootSuites, &kOnceSuites}) v.insert(v.end(), group->begin(), group->end());
    return v;
  }();
  return names;
}

SuiteResult run_suite(const SuiteConfig& config) { return Runner(config).run(); }

bool SuiteResult::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.equal; });
}

Json SuiteResult::to_json() const {
  Json j;
  j["suite"] = suite;
  j["seed"] = seed;
  Json inst = Json::array();
  for (const auto& r : reports) inst.push_back(apery::to_json(r));
  j["instances"] = std::move(inst);
  j["pass"] = pass();
  return j;
}

std::string SuiteResult::to_text() const {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    os << (r.equal ? "ok   " : "FAIL ") << r.identity;
    if (r.m) os << "  m=" << *r.m;
    if (!r.params.empty()) {
      Json brief = Json::object();
      for (const auto& [key, value] : r.params.items())
        if (!value.is_array()) brief[key] = value;
      if (!brief.empty()) os << "  " << brief.dump();
    }
    if (r.residual) os << "  residual=" << format_double(*r.residual);
    if (r.witness) os << "  witness: " << *r.witness;
    os << '\n';
    failed += !r.equal;
  }
  os << reports.size() - failed << "/" << reports.size() << " passed (suite " << suite << ", seed " << seed << ")\n";
  return os.str();
}

}  // namespace apery
