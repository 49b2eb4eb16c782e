#include "doctest.h"

#include <random>

#include "cgc/domains.hpp"

using namespace cgc;

namespace {

std::vector<Integer> range(int lo, int hi) {
  std::vector<Integer> v;
  for (int i = lo; i <= hi; ++i)
    v.emplace_back(i);
  return v;
}

// Independent interpretation: the exact integer sets of each sign on a window.
bool interp(Sign s, int i) {
  const std::string n = to_string(s);
  if (n == "neg")
    return i < 0;
  if (n == "zer")
    return i == 0;
  if (n == "pos")
    return i > 0;
  if (n == "negz")
    return i <= 0;
  if (n == "nzer")
    return i != 0;
  if (n == "posz")
    return i >= 0;
  return n == "any";
}

// Range oracle: join of eta over all concrete results in [-50,50]^2.
Sign range_arith(ArithOp op, Sign a, Sign b) {
  Sign acc = Sign::none;
  for (int i = -50; i <= 50; ++i) {
    if (!interp(a, i))
      continue;
    for (int j = -50; j <= 50; ++j) {
      if (!interp(b, j))
        continue;
      if (op == ArithOp::div && j == 0)
        continue;
      long r = op == ArithOp::add   ? i + j
               : op == ArithOp::sub ? i - j
               : op == ArithOp::mul ? i * j
                                    : i / j;
      acc = sign_join(acc, r < 0 ? Sign::neg : r == 0 ? Sign::zer : Sign::pos);
    }
  }
  return acc;
}

AbsBool range_cmp(CmpOp op, Sign a, Sign b) {
  AbsBool acc;
  for (int i = -50; i <= 50; ++i)
    for (int j = -50; j <= 50; ++j)
      if (interp(a, i) && interp(b, j))
        acc = acc.join(AbsBool::just(op == CmpOp::lt ? i < j : i == j));
  return acc;
}

} // namespace

TEST_CASE("parity operations") {
  CHECK(succ_sharp(Parity::even) == Parity::odd);
  CHECK(succ_sharp(Parity::odd) == Parity::even);
  CHECK(max_sharp(ParityTop::even, ParityTop::odd) == ParityTop::any);
  CHECK(max_sharp(ParityTop::even, ParityTop::even) == ParityTop::even);
  CHECK(max_sharp(ParityTop::odd, ParityTop::odd) == ParityTop::odd);
  CHECK(max_sharp(ParityTop::any, ParityTop::any) == ParityTop::any);
  CHECK(max_sharp(ParityTop::any, ParityTop::odd) == ParityTop::any);
  CHECK(parity(0) == Parity::even);
  CHECK(parity(7) == Parity::odd);
  CHECK_THROWS_AS(parity(-1), Error);
}

TEST_CASE("max_sharp is sound for max on naturals") {
  auto gc = parity_top_gc();
  for (int a = 0; a < 30; ++a)
    for (int b = 0; b < 30; ++b) {
      auto pa = static_cast<ParityTop>(parity(a)), pb = static_cast<ParityTop>(parity(b));
      auto res = static_cast<Elem>(max_sharp(pa, pb));
      CHECK(gc.mu(Integer(std::max(a, b)), res));
    }
}

TEST_CASE("parity connections satisfy the laws on [0,1000]") {
  CHECK(verify_cgc(parity_gc(), range(0, 1000)).ok());
  CHECK(verify_cgc(parity_top_gc(), range(0, 1000)).ok());
  CHECK(parity_gc().mu(4, 0));
}

TEST_CASE("sign lattice worked values") {
  CHECK(sign_eta(-7) == Sign::neg);
  CHECK(sign_eta(0) == Sign::zer);
  CHECK(sign_join(Sign::neg, Sign::zer) == Sign::negz);
  CHECK_FALSE(sign_mu_member(0, Sign::nzer));
  CHECK(sign_mu_member(0, Sign::posz));
  CHECK(parse_sign("posz") == Sign::posz);
  CHECK_FALSE(parse_sign("zero").has_value());
}

TEST_CASE("sign order is inclusion of interpretations") {
  for (Sign a : all_signs)
    for (Sign b : all_signs) {
      bool sub = true;
      for (int i = -20; i <= 20; ++i)
        if (interp(a, i) && !interp(b, i))
          sub = false;
      CHECK(sign_leq(a, b) == sub);
      CHECK(sign_poset()->leq(index(a), index(b)) == sub);
    }
  CHECK(verify_order_laws(*sign_poset()).ok());
}

TEST_CASE("sign join is the least upper bound") {
  for (Sign a : all_signs)
    for (Sign b : all_signs) {
      Sign j = sign_join(a, b);
      CHECK(sign_join(b, a) == j);
      CHECK(sign_join(a, a) == a);
      CHECK(sign_leq(a, j));
      CHECK(sign_leq(b, j));
      for (Sign u : all_signs)
        if (sign_leq(a, u) && sign_leq(b, u))
          CHECK(sign_leq(j, u));
      for (Sign c : all_signs)
        CHECK(sign_join(sign_join(a, b), c) == sign_join(a, sign_join(b, c)));
      CHECK(sign_poset()->join(index(a), index(b)) == index(j));
    }
}

TEST_CASE("sign connection on [-1000,1000]") {
  auto gc = sign_gc();
  CHECK(verify_cgc(gc, range(-1000, 1000)).ok());
  for (int i = -30; i <= 30; ++i)
    for (Sign s : all_signs)
      CHECK(sign_mu_member(i, s) == interp(s, i));
}

TEST_CASE("abstract arithmetic equals the range oracle") {
  CHECK(abs_arith(ArithOp::add, Sign::posz, Sign::zer) == Sign::posz);
  CHECK(abs_arith(ArithOp::add, Sign::none, Sign::pos) == Sign::none);
  CHECK(abs_arith(ArithOp::add, Sign::pos, Sign::neg) == Sign::any);
  CHECK(abs_arith(ArithOp::div, Sign::pos, Sign::pos) == Sign::posz);
  for (ArithOp op : {ArithOp::add, ArithOp::sub, ArithOp::mul, ArithOp::div})
    for (Sign a : all_signs)
      for (Sign b : all_signs) {
        INFO(op_symbol(op), " ", to_string(a), " ", to_string(b));
        CHECK(abs_arith(op, a, b) == range_arith(op, a, b));
      }
}

TEST_CASE("abstract comparisons equal the range oracle") {
  CHECK(abs_cmp(CmpOp::lt, Sign::neg, Sign::posz) == AbsBool::just(true));
  CHECK(abs_cmp(CmpOp::eq, Sign::zer, Sign::zer) == AbsBool::just(true));
  for (CmpOp op : {CmpOp::lt, CmpOp::eq})
    for (Sign a : all_signs)
      for (Sign b : all_signs) {
        INFO(op_symbol(op), " ", to_string(a), " ", to_string(b));
        CHECK(abs_cmp(op, a, b) == range_cmp(op, a, b));
      }
}

TEST_CASE("abstract operators are monotone") {
  for (Sign a : all_signs)
    for (Sign a2 : all_signs)
      for (Sign b : all_signs)
        for (Sign b2 : all_signs) {
          if (!sign_leq(a, a2) || !sign_leq(b, b2))
            continue;
          for (ArithOp op : {ArithOp::add, ArithOp::sub, ArithOp::mul, ArithOp::div})
            CHECK(sign_leq(abs_arith(op, a, b), abs_arith(op, a2, b2)));
          for (CmpOp op : {CmpOp::lt, CmpOp::eq})
            CHECK(abs_cmp(op, a, b).leq(abs_cmp(op, a2, b2)));
        }
  for (Elem a = 0; a < 4; ++a)
    for (Elem a2 = 0; a2 < 4; ++a2)
      for (Elem b = 0; b < 4; ++b)
        for (Elem b2 = 0; b2 < 4; ++b2)
          if (AbsBool::at(a).leq(AbsBool::at(a2)) && AbsBool::at(b).leq(AbsBool::at(b2)))
            for (BoolOp op : {BoolOp::and_, BoolOp::or_})
              CHECK(abs_bool(op, AbsBool::at(a), AbsBool::at(b))
                        .leq(abs_bool(op, AbsBool::at(a2), AbsBool::at(b2))));
}

TEST_CASE("abstract booleans") {
  CHECK(abs_bool(BoolOp::and_, AbsBool::top(), AbsBool::just(false)) == AbsBool::just(false));
  CHECK(abs_bool(BoolOp::or_, AbsBool::just(true), AbsBool::top()) == AbsBool::just(true));
  CHECK(abs_bool(BoolOp::or_, AbsBool::bot(), AbsBool::top()) == AbsBool::bot());
  CHECK(verify_cgc(bool_gc(), std::vector<bool>{true, false}).ok());
  CHECK(verify_order_laws(*absbool_poset()).ok());
}

TEST_CASE("concrete division truncates and is stuck at zero") {
  CHECK(*concrete_arith(ArithOp::div, -7, 2) == -3);
  CHECK(*concrete_arith(ArithOp::div, 7, -2) == -3);
  CHECK_FALSE(concrete_arith(ArithOp::div, 1, 0).has_value());
}

TEST_CASE("environment operations") {
  Env rho{{"x", -2}, {"y", 0}};
  CHECK(env_eta(rho) == AbsEnv{{"x", Sign::neg}, {"y", Sign::zer}});
  CHECK(env_mu_member(Env{{"x", 5}}, AbsEnv{{"x", Sign::posz}}));
  CHECK(env_join(AbsEnv{{"x", Sign::neg}}, AbsEnv{{"x", Sign::zer}}) ==
        AbsEnv{{"x", Sign::negz}});
  CHECK_THROWS_AS(env_update(AbsEnv{{"x", Sign::neg}}, "z", Sign::pos), UnboundVariable);
  CHECK(env_update(AbsEnv{{"x", Sign::neg}}, "x", Sign::pos) == AbsEnv{{"x", Sign::pos}});
  CHECK(env_leq(AbsEnv{{"x", Sign::neg}}, AbsEnv{{"x", Sign::negz}}));
  CHECK(to_string(AbsEnv{{"x", Sign::neg}, {"y", Sign::any}}) == "{x:neg, y:any}");
}

TEST_CASE("environment connection on 1000 seeded environments") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> val(-50, 50), nv(1, 3);
  std::vector<std::string> names{"x", "y", "z"};
  for (std::size_t k = 1; k <= 3; ++k) {
    std::vector<std::string> vars(names.begin(), names.begin() + k);
    auto g = env_gc(vars);
    CHECK(verify_order_laws(*g.gc.abstract).ok());
    std::vector<Env> probe;
    for (int t = 0; t < 1000; ++t) {
      Env rho;
      for (auto &x : vars)
        rho[x] = val(rng);
      probe.push_back(rho);
    }
    CHECK(verify_cgc(g.gc, probe).ok());
    for (Elem e = 0; e < g.gc.abstract->size(); ++e)
      CHECK(g.encode(g.decode(e)) == e);
  }
}
