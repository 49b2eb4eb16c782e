#include "doctest.h"

#include "cgc/agt.hpp"

using namespace cgc;
using namespace cgc::agt;

namespace {

Type T(const char *s) { return parse_type(s); }

std::optional<Type> tp(const char *s) { return typeof_precise({}, *parse_term(s)); }
std::optional<Type> tg(const char *s) { return typeof_gradual({}, *parse_term(s)); }

// Least upper bound by brute force: the common upper bounds in `ts` that are
// below every other common upper bound.
std::optional<Type> brute_join(const Type &a, const Type &b, const std::vector<Type> &ts) {
  std::vector<Type> ubs;
  for (auto &u : ts)
    if (precise_subtype(a, u) && precise_subtype(b, u))
      ubs.push_back(u);
  for (auto &u : ubs) {
    bool least = true;
    for (auto &v : ubs)
      least = least && precise_subtype(u, v);
    if (least)
      return u;
  }
  return std::nullopt;
}

} // namespace

TEST_CASE("type enumeration sizes") {
  CHECK(precise_types(1).size() == 3);
  CHECK(precise_types(2).size() == 12);
  CHECK(precise_types(3).size() == 147);
  CHECK(gradual_types(2).size() == 20);
  CHECK(gradual_types(3).size() == 404);
}

TEST_CASE("type syntax") {
  CHECK(to_string(T("Bool -> Bool -> Bool")) == "Bool -> Bool -> Bool");
  CHECK(T("Bool -> Bool -> Bool") == Type::arrow(Type::bool_(), T("Bool -> Bool")));
  CHECK(to_string(T("(Bool -> ?) -> None")) == "(Bool -> ?) -> None");
  for (auto &t : gradual_types(3))
    CHECK(parse_type(to_string(t)) == t);
  CHECK_THROWS_AS(parse_type("Bool ->"), ParseError);
  CHECK_THROWS_AS(parse_type("Int"), ParseError);
}

TEST_CASE("precise lattice") {
  CHECK(precise_subtype(Type::none(), T("Bool -> Bool")));
  CHECK(precise_join(Type::bool_(), T("Bool -> Bool")) == Type::any());
  CHECK(precise_join(T("Any -> Bool"), T("Bool -> Bool")) == T("Bool -> Bool"));
  CHECK(precise_join(T("(Bool -> Bool) -> Bool"), T("(Any -> Bool) -> Bool")) ==
        T("(Any -> Bool) -> Bool"));
  auto d2 = precise_types(2);
  auto d3 = precise_types(3);
  for (auto &a : d2)
    for (auto &b : d2) {
      INFO(to_string(a), " | ", to_string(b));
      auto j = brute_join(a, b, d3);
      REQUIRE(j);
      CHECK(precise_join(a, b) == *j);
      if (a.is(Type::Kind::arrow) && b.is(Type::Kind::arrow))
        CHECK(precise_join(a, b) == Type::arrow(precise_meet(a.dom(), b.dom()),
                                                precise_join(a.cod(), b.cod())));
    }
  CHECK(check_lattice(3).ok());
}

TEST_CASE("gradual connection") {
  CHECK(grad_mu_member(T("Bool -> Bool"), Type::unknown()));
  CHECK_FALSE(grad_mu_member(Type::bool_(), T("Bool -> ?")));
  CHECK(grad_eta(Type::any()) == Type::any());
  for (auto &t : precise_types(3))
    for (auto &g : gradual_types(3))
      CHECK(grad_mu_member(t, g) == precision_leq(grad_eta(t), g));
  auto r = check_grad_gc(3);
  CHECK(r.ok());
}

TEST_CASE("consistent subtyping against its existential definition") {
  for (auto &g : gradual_types(3))
    CHECK(consistent_subtype(Type::unknown(), g));
  CHECK_FALSE(consistent_subtype(Type::bool_(), T("Bool -> Bool")));
  CHECK(consistent_subtype(T("Bool -> ?"), T("? -> Bool")));
  CHECK_FALSE(consistent_subtype(T("Any -> Bool"), T("Bool -> None")));

  // local oracle, independent of the library check
  auto ps = precise_types(3);
  for (auto &a : gradual_types(2))
    for (auto &b : gradual_types(2)) {
      bool exists = false;
      for (auto &x : ps)
        if (grad_mu_member(x, a))
          for (auto &y : ps)
            if (!exists && grad_mu_member(y, b) && precise_subtype(x, y))
              exists = true;
      INFO(to_string(a), " <: ", to_string(b));
      CHECK(consistent_subtype(a, b) == exists);
    }
  CHECK(check_consistent_subtype(2, 3).ok());
}

TEST_CASE("gradual join") {
  CHECK(gradual_join(Type::unknown(), Type::bool_()) == Type::unknown());
  CHECK(gradual_join(Type::bool_(), Type::unknown()) == Type::unknown());
  CHECK(gradual_join(Type::bool_(), Type::bool_()) == Type::bool_());
  CHECK(gradual_join(Type::bool_(), Type::none()) == Type::bool_());
  // every precise type joins Any to Any, so the unknown type does too
  CHECK(gradual_join(Type::unknown(), Type::any()) == Type::any());
  CHECK(gradual_join(T("? -> Bool"), T("Bool -> Bool")) == T("? -> Bool"));
  CHECK(check_gradual_join(2, 3).ok());
  for (auto &a : precise_types(2))
    for (auto &b : precise_types(2)) {
      CHECK(gradual_join(a, b) == precise_join(a, b));
      CHECK(consistent_subtype(a, b) == precise_subtype(a, b));
    }
}

TEST_CASE("term syntax") {
  auto e = parse_term("(\\x:Bool. x) true");
  CHECK(e->kind == Term::Kind::app);
  CHECK(e->a->kind == Term::Kind::lam);
  CHECK(*e->a->ann == Type::bool_());
  CHECK(to_string(*e) == "(\\x:Bool. x) true");
  CHECK(to_string(*parse_term("true :: ?")) == "true :: ?");
  CHECK(to_string(*parse_term("\\x:Bool -> ?. x :: Any")) == "\\x:Bool -> ?. x :: Any");
  CHECK(to_string(*parse_term("f (g x) y")) == "f (g x) y");
  CHECK(to_string(*parse_term("if (true :: ?) then true else false")) ==
        "if true :: ? then true else false");
  CHECK(size(*parse_term("(\\x:Bool. x) true")) == 4);
  CHECK_THROWS_AS(parse_term("\\x:Bool x"), ParseError);
  CHECK_THROWS_AS(parse_term("if true then false"), ParseError);
  for (auto &t : enumerate_terms(4, TermMode::gradual, 1)) {
    INFO(to_string(*t));
    CHECK(equal(*parse_term(to_string(*t)), *t));
  }
}

TEST_CASE("precise typing") {
  CHECK(tp("true") == Type::bool_());
  CHECK(tp("if true then true else false") == Type::bool_());
  CHECK(tp("(\\x:Bool. x) true") == Type::bool_());
  CHECK(tp("if true then true else \\x:Bool. x") == Type::any());
  CHECK(tp("(\\x:Any. x) true") == Type::any());
  CHECK(tp("true :: Any") == Type::any());
  CHECK_FALSE(tp("(true :: Any) :: Bool"));
  CHECK_FALSE(tp("true true"));
  CHECK_FALSE(tp("if (true :: Any) then true else false"));
  CHECK(tp("(\\f:None. f true) ") == T("None -> None"));
  CHECK_FALSE(tp("x"));
  CHECK_FALSE(tp("true :: ?"));
}

TEST_CASE("gradual typing") {
  CHECK(tg("(\\x:?. x) true") == Type::unknown());
  CHECK(tg("true :: ?") == Type::unknown());
  CHECK(tg("if (true :: ?) then true else false") == Type::bool_());
  CHECK(tg("(true :: ?) false") == Type::unknown());
  CHECK_FALSE(tg("(\\x:Bool. x) (\\y:?. y)"));
  CHECK(tg("(\\x:Bool -> ?. x true) (\\y:?. y)") == Type::unknown());
}

TEST_CASE("embedding and precision on terms") {
  auto id = parse_term("\\x. x");
  CHECK(to_string(*embed_dynamic(*id)) == "\\x:?. x");
  CHECK(to_string(*embed_dynamic(*parse_term("(\\x. x) true"))) == "((\\x:?. x) :: ?) true");
  CHECK_THROWS_AS(embed_dynamic(*parse_term("y")), UnboundVariable);
  CHECK(term_precision(*parse_term("\\x:Bool. x"), *parse_term("\\x:?. x")));
  CHECK_FALSE(term_precision(*parse_term("\\x:?. x"), *parse_term("\\x:Bool. x")));
  CHECK_FALSE(term_precision(*parse_term("\\x:Bool. x"), *parse_term("\\y:?. y")));

  auto terms = enumerate_terms(3, TermMode::gradual, 1);
  for (auto &a : terms) {
    CHECK(term_precision(*a, *a));
    for (auto &b : less_precise_variants(*a))
      CHECK(term_precision(*a, *b));
  }
  // antisymmetry and transitivity on a slice
  std::vector<TermPtr> slice(terms.begin(), terms.begin() + std::min<std::size_t>(terms.size(), 150));
  for (auto &a : slice)
    for (auto &b : slice) {
      if (term_precision(*a, *b) && term_precision(*b, *a))
        CHECK(equal(*a, *b));
      if (!term_precision(*a, *b))
        continue;
      for (auto &c : slice)
        if (term_precision(*b, *c))
          CHECK(term_precision(*a, *c));
    }
}

TEST_CASE("term enumeration") {
  auto p5 = enumerate_terms(5, TermMode::precise, 1);
  CHECK(p5.size() >= 1000);
  for (auto &t : p5) {
    CHECK(size(*t) <= 5);
    CHECK(is_precise_term(*t));
  }
  auto d = enumerate_terms(5, TermMode::dynamic, 0);
  for (auto &t : d)
    CHECK(is_dynamic_term(*t));
  // distinct terms
  std::set<std::string> seen;
  for (auto &t : p5)
    seen.insert(to_string(*t));
  CHECK(seen.size() == p5.size());
}

TEST_CASE("metatheory at small scale") {
  CHECK(check_fat(5, 1).ok());
  CHECK(check_edl(5).ok());
  auto gg = check_gg(4, 1);
  CHECK(gg.ok());
  CHECK(gg.instances() > 1000);
}
