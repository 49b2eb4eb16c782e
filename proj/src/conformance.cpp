#include "cgc/conformance.hpp"

#include <sstream>

#include "cgc/analyzer.hpp"

namespace cgc {

Witnesses<Integer> sign_witnesses() {
  const std::vector<std::pair<Sign, std::vector<int>>> base = {
      {Sign::neg, {-1, -2}}, {Sign::zer, {0}}, {Sign::pos, {1, 2}}};
  Witnesses<Integer> w;
  for (Sign s : all_signs) {
    auto &v = w[index(s)];
    for (auto &[b, xs] : base)
      if (sign_leq(b, s))
        for (int x : xs)
          v.emplace_back(x);
  }
  return w;
}

Witnesses<Integer> range_witnesses(const ConstructiveGC<Integer> &gc, int lo, int hi) {
  Witnesses<Integer> w;
  for (Elem a = 0; a < gc.abstract->size(); ++a) {
    auto &v = w[a];
    for (int i = lo; i <= hi; ++i)
      if (gc.mu(Integer(i), a))
        v.emplace_back(i);
  }
  return w;
}

std::vector<Elem> sign_arith_table(ArithOp op, const Witnesses<Integer> &w) {
  std::function<std::optional<Integer>(const Integer &, const Integer &)> f =
      [op](const Integer &a, const Integer &b) { return concrete_arith(op, a, b); };
  return witness_optimal(f, sign_gc(), sign_gc(), w);
}

std::vector<Elem> sign_cmp_table(CmpOp op, const Witnesses<Integer> &w) {
  std::function<std::optional<bool>(const Integer &, const Integer &)> f =
      [op](const Integer &a, const Integer &b) { return std::optional<bool>(concrete_cmp(op, a, b)); };
  return witness_optimal(f, sign_gc(), bool_gc(), w);
}

// ---- corpora ---------------------------------------------------------------

AexpPtr random_aexp(std::mt19937_64 &rng, const std::vector<std::string> &vars, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 5 : 2), lit(-3, 3), op(0, 3);
  switch (kind(rng)) {
  case 0:
    return a_lit(lit(rng));
  case 1:
    if (!vars.empty()) {
      std::uniform_int_distribution<std::size_t> v(0, vars.size() - 1);
      return a_var(vars[v(rng)]);
    }
    return a_lit(lit(rng));
  case 2:
    return a_rand();
  default: {
    auto l = random_aexp(rng, vars, depth - 1);
    auto r = random_aexp(rng, vars, depth - 1);
    return a_bin(static_cast<ArithOp>(op(rng)), l, r);
  }
  }
}

BexpPtr random_bexp(std::mt19937_64 &rng, const std::vector<std::string> &vars, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 3 : 1), coin(0, 1);
  switch (kind(rng)) {
  case 0:
    return b_lit(coin(rng) == 1);
  case 1: {
    const CmpOp op = coin(rng) ? CmpOp::lt : CmpOp::eq;
    auto l = random_aexp(rng, vars, 2);
    auto r = random_aexp(rng, vars, 2);
    return b_cmp(op, l, r);
  }
  default: {
    const BoolOp op = coin(rng) ? BoolOp::and_ : BoolOp::or_;
    auto l = random_bexp(rng, vars, depth - 1);
    auto r = random_bexp(rng, vars, depth - 1);
    return b_bin(op, l, r);
  }
  }
}

Corpus make_corpus(std::uint64_t seed, const CorpusBounds &b) {
  Corpus c;
  c.programs = while_corpus();
  std::mt19937_64 rng(seed);
  const std::vector<std::string> vars{"x", "y"};
  for (std::size_t i = 0; i < b.expressions; ++i) {
    c.aexps.push_back(random_aexp(rng, vars, b.expr_depth));
    c.bexps.push_back(random_bexp(rng, vars, b.expr_depth > 1 ? b.expr_depth - 1 : 1));
  }
  c.terms = agt::enumerate_terms(b.term_size, agt::TermMode::gradual, b.type_depth);
  return c;
}

std::vector<RandPolicy> oracle_policies() {
  std::vector<RandPolicy> out;
  for (std::vector<int> s : std::vector<std::vector<int>>{
           {0}, {-1, 1}, {-3, 0, 2}, {-3, -2, -1, 0, 1, 2, 3}}) {
    RandPolicy p;
    for (int i : s)
      p.sample.insert(Integer(i));
    out.push_back(std::move(p));
  }
  return out;
}

LawReport check_transfer_soundness(const std::vector<NamedProgram> &programs,
                                   std::size_t max_steps) {
  LawReport r;
  const auto pols = oracle_policies();
  for (const auto &np : programs) {
    const Program prog = parse_program(np.source);
    for (int start : {-2, 0, 3}) {
      Env rho0;
      for (const auto &x : prog.vars)
        rho0[x] = start;
      const AnalysisResult res = analyze(prog.body, env_eta(rho0));
      if (res.iterations > res.bound)
        r.add("Termination", np.name);
      if (!is_post_fixpoint(res))
        r.add("PostFixpoint", np.name);
      for (const auto &p : pols)
        for (const auto &s : collect_bounded(Config{rho0, prog.body}, p, max_steps)) {
          r.count();
          if (!res.residual_set.count(s.cmd)) {
            r.add("Residual", np.name + ": " + to_string(s));
            continue;
          }
          if (!res.reached(s.cmd) || !env_leq(env_eta(s.env), res.lookup(s.cmd)))
            r.add("Transfer", np.name + ": " + to_string(s));
        }
    }
  }
  return r;
}

LawReport check_expression_soundness(std::uint64_t seed, std::size_t samples) {
  LawReport r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> val(-20, 20);
  const std::vector<std::string> vars{"x", "y"};
  const auto pols = oracle_policies();
  while (r.instances() < samples) {
    auto ae = random_aexp(rng, vars, 3);
    auto be = random_bexp(rng, vars, 2);
    for (int k = 0; k < 8; ++k) {
      const Env rho{{"x", val(rng)}, {"y", val(rng)}};
      const AbsEnv a = env_eta(rho);
      const Sign s = abs_aexp(*ae, a);
      const AbsBool bs = abs_bexp(*be, a);
      for (const auto &p : pols) {
        r.count();
        for (const auto &i : eval_aexp(rho, *ae, p))
          if (!sign_leq(sign_eta(i), s)) {
            r.add("AexpSound", to_string(*ae) + " at " + to_string(rho));
            break;
          }
        for (bool v : eval_bexp(rho, *be, p))
          if (!bs.contains(v)) {
            r.add("BexpSound", to_string(*be) + " at " + to_string(rho));
            break;
          }
      }
    }
  }
  return r;
}

// ---- reports ---------------------------------------------------------------

bool SuiteReport::ok() const {
  for (const auto &l : laws)
    if (!l.pass)
      return false;
  return true;
}

void SuiteReport::add(const std::string &law, const LawReport &r) {
  std::optional<std::string> cex;
  if (!r.ok())
    cex = r.violations().front().law + ": " + r.violations().front().witness;
  laws.push_back({law, r.instances(), r.ok(), cex});
}

void SuiteReport::add(const std::string &law, std::size_t instances, bool pass,
                      std::optional<std::string> counterexample) {
  laws.push_back({law, instances, pass, std::move(counterexample)});
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["pass"] = ok();
  auto arr = nlohmann::json::array();
  for (const auto &l : laws) {
    nlohmann::json e;
    e["law"] = l.law;
    e["instances"] = l.instances;
    e["pass"] = l.pass;
    e["counterexample"] = l.counterexample ? nlohmann::json(*l.counterexample) : nlohmann::json();
    arr.push_back(std::move(e));
  }
  j["laws"] = std::move(arr);
  return j;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << " (seed " << seed << "): " << (ok() ? "PASS" : "FAIL") << "\n";
  for (const auto &l : laws) {
    os << "  " << (l.pass ? "ok  " : "FAIL") << " " << l.law << " [" << l.instances
       << " instances]";
    if (l.counterexample)
      os << " first counterexample: " << *l.counterexample;
    os << "\n";
  }
  return os.str();
}

} // namespace cgc
