#include "doctest.h"

#include "cgc/corpus.hpp"
#include "cgc/while_lang.hpp"

using namespace cgc;

namespace {

RandPolicy pol(std::initializer_list<int> xs) {
  RandPolicy p;
  for (int x : xs)
    p.sample.insert(Integer(x));
  return p;
}

Env env(std::initializer_list<std::pair<const char *, int>> xs) {
  Env r;
  for (auto &[k, v] : xs)
    r[k] = v;
  return r;
}

} // namespace

TEST_CASE("parse produces the expected trees") {
  CHECK(parse("skip").is_skip());
  auto a = parse("x := rand");
  REQUIRE(a.kind() == Cexp::Kind::assign);
  CHECK(a.var() == "x");
  CHECK(a.aexp()->kind == Aexp::Kind::rand);

  auto w = parse("while x < 10 do { x := x + 1 }");
  REQUIRE(w.kind() == Cexp::Kind::while_);
  auto g = w.guard();
  REQUIRE(g->kind == Bexp::Kind::cmp);
  CHECK(g->cmp == CmpOp::lt);
  CHECK(g->alhs->var == "x");
  CHECK(g->arhs->value == 10);
  const Cexp &body = w.first();
  REQUIRE(body.kind() == Cexp::Kind::assign);
  CHECK(equal(*body.aexp(), *a_bin(ArithOp::add, a_var("x"), a_lit(1))));
}

TEST_CASE("sequencing is right associative") {
  auto c = parse("a := 1; b := 2; c := 3");
  REQUIRE(c.kind() == Cexp::Kind::seq);
  CHECK(c.first().kind() == Cexp::Kind::assign);
  CHECK(c.second().kind() == Cexp::Kind::seq);
  auto g = parse("{ a := 1; b := 2 }; c := 3");
  CHECK(g.first().kind() == Cexp::Kind::seq);
  CHECK(to_string(g) == "{ a := 1; b := 2 }; c := 3");
  CHECK(parse("x := 1;") == parse("x := 1"));
}

TEST_CASE("expression precedence and parentheses") {
  CHECK(to_string(*parse_aexp("1 + 2 * 3")) == "1 + 2 * 3");
  CHECK(to_string(*parse_aexp("(1 + 2) * 3")) == "(1 + 2) * 3");
  CHECK(to_string(*parse_aexp("1 - (2 - 3)")) == "1 - (2 - 3)");
  CHECK(to_string(*parse_aexp("(1 - 2) - 3")) == "1 - 2 - 3");
  CHECK(to_string(*parse_aexp("x * -1")) == "x * -1");
  CHECK(to_string(*parse_bexp("(x < 1 || y < 1) && true")) == "(x < 1 || y < 1) && true");
  CHECK(to_string(*parse_bexp("(x + 1) < y")) == "x + 1 < y");
  CHECK(to_string(*parse_bexp("((x < 1))")) == "x < 1");
}

TEST_CASE("parse errors carry positions") {
  try {
    parse("x := 1;\n  y := ");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_program("vars x; y := 1");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(std::string(e.what()).find("undeclared") != std::string::npos);
    CHECK(e.line() == 1);
    CHECK(e.column() == 9);
  }
  CHECK_THROWS_AS(parse("x := 1 $"), ParseError);
  CHECK_THROWS_AS(parse("if x then { skip } else { skip }"), ParseError);
  CHECK_THROWS_AS(parse("while x < 1 { skip }"), ParseError);
}

TEST_CASE("program variables") {
  auto p = parse_program("y := 1; x := y");
  CHECK(p.vars == std::vector<std::string>{"x", "y"});
  CHECK_FALSE(p.declared);
  auto q = parse_program("vars z, a; a := 1");
  CHECK(q.vars == std::vector<std::string>{"a", "z"});
  CHECK(to_string(q) == "vars a, z; a := 1");
}

TEST_CASE("pretty printing round-trips over the corpus") {
  REQUIRE(while_corpus().size() >= 25);
  for (const auto &np : while_corpus()) {
    INFO(np.name);
    auto p = parse_program(np.source);
    auto printed = to_string(p);
    auto again = parse_program(printed);
    CHECK(again.body == p.body);
    CHECK(again.vars == p.vars);
    CHECK(to_string(again) == printed);
  }
}

TEST_CASE("expression evaluation") {
  CHECK(eval_aexp(env({{"x", 3}}), *parse_aexp("x + 1"), pol({0})) == std::set<Integer>{4});
  CHECK(eval_aexp({}, *parse_aexp("rand"), pol({0, 1})) == std::set<Integer>{0, 1});
  CHECK(eval_aexp(env({{"x", 1}}), *parse_aexp("x / 0"), pol({0})).empty());
  CHECK(eval_aexp({}, *parse_aexp("rand * rand"), pol({-1, 2})) == std::set<Integer>{-2, 1, 4});
  CHECK(eval_bexp(env({{"x", 0}}), *parse_bexp("x = 0"), pol({0})) == std::set<bool>{true});
  CHECK(eval_bexp({}, *parse_bexp("rand < 1"), pol({0, 2})) == std::set<bool>{true, false});
  CHECK(eval_bexp({}, *parse_bexp("true && false"), pol({0})) == std::set<bool>{false});
  CHECK_THROWS_AS(eval_aexp({}, *parse_aexp("y"), pol({0})), UnboundVariable);
}

TEST_CASE("small-step rules") {
  auto p = pol({0});
  auto s = step(Config{env({{"x", 1}}), parse("x := x + 1")}, p);
  CHECK(s == std::set<Config>{Config{env({{"x", 2}}), Cexp::skip()}});
  Env rho = env({{"x", 5}});
  CHECK(step(Config{rho, parse("while false do { x := 1 }")}, p) ==
        std::set<Config>{Config{rho, Cexp::skip()}});
  CHECK(step(Config{rho, Cexp::skip()}, p).empty());

  auto w = parse("while true do { x := 1 }");
  CHECK(step(Config{rho, w}, p) == std::set<Config>{Config{rho, Cexp::seq(w.first(), w)}});
  CHECK(step(Config{rho, parse("skip; x := 2")}, p) ==
        std::set<Config>{Config{rho, parse("x := 2")}});
  CHECK(step(Config{rho, parse("x := 3; x := 2")}, p) ==
        std::set<Config>{Config{env({{"x", 3}}), parse("skip; x := 2")}});
  CHECK(step(Config{rho, parse("x := 1 / 0")}, p).empty());
  CHECK(step(Config{rho, parse("if rand < 1 then { skip } else { x := 0 }")}, pol({0, 3})).size() ==
        2);
  CHECK_THROWS_AS(step(Config{rho, parse("y := 1")}, p), UnboundVariable);
  CHECK_THROWS(step(Config{rho, Cexp::skip()}, RandPolicy{}));
}

TEST_CASE("bounded collection") {
  auto p = pol({0});
  Config sk{env({{"x", 0}}), Cexp::skip()};
  CHECK(collect_bounded(sk, p, 10) == std::set<Config>{sk});
  Config inc{env({{"x", 0}}), parse("x := x + 1")};
  CHECK(collect_bounded(inc, p, 1) ==
        std::set<Config>{inc, Config{env({{"x", 1}}), Cexp::skip()}});
  Config loop{env({{"x", 7}}), parse("x := 0; while x < 2 do { x := x + 1 }")};
  CHECK(collect_bounded(loop, p, 100).count(Config{env({{"x", 2}}), Cexp::skip()}) == 1);
  CHECK_THROWS_AS(collect_bounded(Config{env({{"x", 0}}), parse("while true do { x := x + 1 }")},
                                  p, 1000, 50),
                  CapacityExceeded);
}

TEST_CASE("determinism, policy and step-bound monotonicity over the corpus") {
  for (const auto &np : while_corpus()) {
    INFO(np.name);
    auto prog = parse_program(np.source);
    Env rho;
    for (auto &x : prog.vars)
      rho[x] = 0;
    Config s0{rho, prog.body};
    auto small = collect_bounded(s0, pol({1}), 60);
    auto big = collect_bounded(s0, pol({-1, 1, 2}), 60);
    for (const auto &s : small) {
      CHECK(big.count(s) == 1);
      auto n1 = step(s, pol({1}));
      auto n2 = step(s, pol({-1, 1, 2}));
      for (auto &n : n1)
        CHECK(n2.count(n) == 1);
      if (np.source.find("rand") == std::string::npos)
        CHECK(n1.size() <= 1);
    }
    auto shorter = collect_bounded(s0, pol({1}), 30);
    for (const auto &s : shorter)
      CHECK(small.count(s) == 1);
  }
}
