#include "doctest.h"

#include <random>

#include "cgc/analyzer.hpp"
#include "cgc/corpus.hpp"

using namespace cgc;

namespace {

AbsEnv aenv(std::initializer_list<std::pair<const char *, Sign>> xs) {
  AbsEnv r;
  for (auto &[k, v] : xs)
    r[k] = v;
  return r;
}

AexpPtr gen_aexp(std::mt19937_64 &rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 5 : 2), lit(-3, 3), var(0, 1),
      op(0, 3);
  switch (kind(rng)) {
  case 0:
    return a_lit(lit(rng));
  case 1:
    return a_var(var(rng) ? "x" : "y");
  case 2:
    return a_rand();
  default:
    return a_bin(static_cast<ArithOp>(op(rng)), gen_aexp(rng, depth - 1), gen_aexp(rng, depth - 1));
  }
}

BexpPtr gen_bexp(std::mt19937_64 &rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 3 : 1), coin(0, 1);
  switch (kind(rng)) {
  case 0:
    return b_lit(coin(rng));
  case 1:
    return b_cmp(coin(rng) ? CmpOp::lt : CmpOp::eq, gen_aexp(rng, 2), gen_aexp(rng, 2));
  default:
    return b_bin(coin(rng) ? BoolOp::and_ : BoolOp::or_, gen_bexp(rng, depth - 1),
                 gen_bexp(rng, depth - 1));
  }
}

std::vector<RandPolicy> policies() {
  std::vector<RandPolicy> out;
  for (std::vector<int> s : std::vector<std::vector<int>>{
           {0}, {-1, 1}, {-3, -2, -1, 0, 1, 2, 3}, {-2, 0, 3}}) {
    RandPolicy p;
    for (int i : s)
      p.sample.insert(Integer(i));
    out.push_back(p);
  }
  return out;
}

} // namespace

TEST_CASE("abstract expressions") {
  CHECK(abs_aexp(*a_rand(), aenv({{"x", Sign::zer}})) == Sign::any);
  CHECK(abs_aexp(*a_var("x"), aenv({{"x", Sign::negz}})) == Sign::negz);
  CHECK(abs_aexp(*parse_aexp("x + 1"), aenv({{"x", Sign::pos}})) == Sign::pos);
  CHECK(abs_aexp(*parse_aexp("-4"), {}) == Sign::neg);
  CHECK_THROWS_AS(abs_aexp(*a_var("q"), {}), UnboundVariable);
  CHECK(abs_bexp(*b_lit(true), {}) == AbsBool::just(true));
  CHECK(abs_bexp(*parse_bexp("x < 0"), aenv({{"x", Sign::any}})) == AbsBool::top());
  CHECK(abs_bexp(*parse_bexp("x = 0"), aenv({{"x", Sign::pos}})) == AbsBool::just(false));
  CHECK(abs_bexp(*parse_bexp("x = 0"), aenv({{"x", Sign::none}})) == AbsBool::bot());
}

TEST_CASE("abstract step") {
  auto rho = aenv({{"x", Sign::zer}, {"y", Sign::zer}});
  CHECK(abs_step(parse("x := rand"), rho) ==
        std::set<AbsSucc>{{aenv({{"x", Sign::any}, {"y", Sign::zer}}), Cexp::skip()}});
  auto rho2 = aenv({{"x", Sign::any}, {"y", Sign::zer}});
  auto s = abs_step(parse("if x < 0 then { y := 0 - 1 } else { y := 1 }"), rho2);
  CHECK(s == std::set<AbsSucc>{{rho2, parse("y := 0 - 1")}, {rho2, parse("y := 1")}});
  CHECK(abs_step(parse("while false do { skip }"), rho) ==
        std::set<AbsSucc>{{rho, Cexp::skip()}});
  CHECK(abs_step(Cexp::skip(), rho).empty());
  // none on the right binds x to none
  CHECK(abs_step(parse("x := y"), aenv({{"x", Sign::pos}, {"y", Sign::none}})) ==
        std::set<AbsSucc>{{aenv({{"x", Sign::none}, {"y", Sign::none}}), Cexp::skip()}});
  // an empty guard has no successors
  CHECK(abs_step(parse("if y < 0 then { skip } else { skip }"),
                 aenv({{"x", Sign::pos}, {"y", Sign::none}}))
            .empty());
}

TEST_CASE("residuals") {
  CHECK(residuals(Cexp::skip()) == std::set<Cexp>{Cexp::skip()});
  CHECK(residuals(parse("x := 1")) == std::set<Cexp>{parse("x := 1"), Cexp::skip()});
  auto w = parse("while x < 1 do { x := 1 }");
  auto body = w.first();
  CHECK(residuals(w) == std::set<Cexp>{w, Cexp::seq(body, w), Cexp::seq(Cexp::skip(), w),
                                       Cexp::skip()});
  for (const auto &np : while_corpus()) {
    auto p = parse(np.source);
    auto rs = residuals(p);
    CHECK(rs.count(p));
    CHECK(rs.count(Cexp::skip()));
    AbsEnv top;
    for (auto &x : free_vars(p))
      top[x] = Sign::any;
    for (const auto &r : rs)
      for (auto &[_, n] : abs_step(r, top))
        CHECK(rs.count(n));
  }
}

TEST_CASE("whole-program analysis worked values") {
  CHECK(analyze(parse("x := rand"), aenv({{"x", Sign::none}})).final_env ==
        aenv({{"x", Sign::any}}));
  CHECK(analyze(parse("x := 1; x := x + 1"), aenv({{"x", Sign::none}})).final_env ==
        aenv({{"x", Sign::pos}}));
  auto loop = parse("x := 0; while x < 10 do { x := x + 1 }");
  auto r = analyze(loop, aenv({{"x", Sign::none}}));
  CHECK(r.final_env == aenv({{"x", Sign::posz}}));
  CHECK(r.lookup(loop.second()) == aenv({{"x", Sign::posz}}));
  CHECK(r.iterations <= r.bound);
  CHECK(is_post_fixpoint(r));
  CHECK_THROWS_AS(analyze(parse("y := 1"), aenv({{"x", Sign::none}})), UnboundVariable);
  auto stuck = analyze(parse("x := 1 / 0; y := 1"), aenv({{"x", Sign::any}, {"y", Sign::any}}));
  CHECK(stuck.final_env == aenv({{"x", Sign::none}, {"y", Sign::pos}}));
}

TEST_CASE("abstract expressions are sound on sampled environments") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> val(-20, 20);
  auto pols = policies();
  std::size_t cases = 0;
  for (int t = 0; t < 400; ++t) {
    auto ae = gen_aexp(rng, 3);
    auto be = gen_bexp(rng, 2);
    for (int k = 0; k < 8; ++k) {
      Env rho{{"x", val(rng)}, {"y", val(rng)}};
      const AbsEnv a = env_eta(rho);
      const Sign s = abs_aexp(*ae, a);
      const AbsBool b = abs_bexp(*be, a);
      for (const auto &p : pols) {
        ++cases;
        for (const auto &i : eval_aexp(rho, *ae, p)) {
          INFO(to_string(*ae), " at ", to_string(rho), " gives ", i.str());
          CHECK(sign_leq(sign_eta(i), s));
        }
        for (bool v : eval_bexp(rho, *be, p)) {
          INFO(to_string(*be), " at ", to_string(rho));
          CHECK(b.contains(v));
        }
      }
    }
  }
  CHECK(cases >= 10000);
}

TEST_CASE("analysis is sound against bounded concrete runs") {
  auto pols = policies();
  for (const auto &np : while_corpus()) {
    INFO(np.name);
    auto prog = parse_program(np.source);
    for (int start : {-2, 0, 3}) {
      Env rho0;
      for (auto &x : prog.vars)
        rho0[x] = start;
      auto res = analyze(prog.body, env_eta(rho0));
      CHECK(res.iterations <= res.bound);
      CHECK(is_post_fixpoint(res));
      for (const auto &p : pols)
        for (const auto &s : collect_bounded(Config{rho0, prog.body}, p, 200)) {
          INFO(to_string(s));
          REQUIRE(res.residual_set.count(s.cmd));
          REQUIRE(res.reached(s.cmd));
          CHECK(env_leq(env_eta(s.env), res.lookup(s.cmd)));
        }
    }
  }
}

TEST_CASE("analysis is monotone in the entry environment and order independent") {
  for (const auto &np : while_corpus()) {
    INFO(np.name);
    auto prog = parse_program(np.source);
    const std::size_t k = prog.vars.size();
    std::mt19937_64 rng(k * 31 + np.source.size());
    std::uniform_int_distribution<int> pick(0, 7);
    for (int t = 0; t < 6; ++t) {
      AbsEnv lo, hi;
      for (auto &x : prog.vars) {
        Sign a = sign_at(pick(rng)), b = sign_at(pick(rng));
        lo[x] = sign_meet(a, b);
        hi[x] = sign_join(a, b);
      }
      auto rl = analyze(prog.body, lo);
      auto rh = analyze(prog.body, hi);
      CHECK(result_leq(rl, rh));
      for (auto order : {AnalysisOptions::Order::lifo, AnalysisOptions::Order::shuffled}) {
        auto ro = analyze(prog.body, hi, {order, static_cast<std::uint64_t>(t)});
        CHECK(ro.at == rh.at);
        CHECK(ro.final_env == rh.final_env);
      }
    }
  }
}

TEST_CASE("lifted transfer on abstract configurations") {
  AbsConfig s{aenv({{"x", Sign::any}}),
              {parse("x := 1"), parse("if x < 0 then { skip } else { x := 0 }")}};
  auto n = abs_step_config(s);
  CHECK(n.env == aenv({{"x", Sign::any}}));
  CHECK(n.cmds == std::set<Cexp>{Cexp::skip(), parse("x := 0")});
}
