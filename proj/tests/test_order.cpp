#include "doctest.h"

#include "cgc/order.hpp"

using namespace cgc;

namespace {

PosetRef chain2() { return FinitePoset::chain({"a", "b"}); }

PosetRef diamond() {
  // bot <= l, r <= top
  return FinitePoset::from_relation({"bot", "l", "r", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

// Brute-force oracle: every subset, filtered by the closure condition.
std::size_t count_downsets_bruteforce(const FinitePoset &p) {
  const std::size_t n = p.size();
  std::size_t c = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    bool closed = true;
    for (Elem x = 0; x < n && closed; ++x)
      for (Elem y = 0; y < n && closed; ++y)
        if (((m >> x) & 1) && p.leq(y, x) && !((m >> y) & 1))
          closed = false;
    c += closed;
  }
  return c;
}

} // namespace

TEST_CASE("order-reversing map violates FunMon") {
  auto p = chain2();
  MonotoneMap f{p, p, {1, 0}};
  auto r = verify_order_laws(f);
  CHECK(r.has("FunMon", "(a,b)"));
}

TEST_CASE("identity on a one-element poset passes") {
  auto p = FinitePoset::discrete({"x"});
  CHECK(verify_order_laws(identity_map(p)).ok());
  CHECK(verify_order_laws(*p).ok());
}

TEST_CASE("set missing a lower element violates PowerMon") {
  auto p = chain2();
  auto d = DownSet::from_marks(p, {1});
  auto r = verify_order_laws(d);
  CHECK(r.has("PowerMon", "(a,b)"));
}

TEST_CASE("a non-antisymmetric table is reported") {
  auto p = FinitePoset::make({"a", "b"}, {1, 1, 1, 1});
  CHECK(verify_order_laws(*p).has("Antisym"));
  auto q = FinitePoset::make({"a", "b", "c"}, {1, 1, 0, 0, 1, 1, 0, 0, 1});
  CHECK(verify_order_laws(*q).has("Trans", "(a,b,c)"));
}

TEST_CASE("ret") {
  auto p = chain2();
  CHECK(ret(p, 1).members() == std::vector<Elem>{0, 1});
  auto d = FinitePoset::discrete({"a", "b"});
  CHECK(ret(d, 0).members() == std::vector<Elem>{0});
  auto dm = diamond();
  CHECK(ret(dm, 1).to_string() == "{bot,l}");
  CHECK_THROWS_AS(ret(p, 7), UnknownElement);
}

TEST_CASE("bind basics and mismatch") {
  auto p = diamond();
  std::mt19937_64 rng(3);
  auto f = random_kleisli(rng, p, p);
  CHECK(bind(DownSet::empty(p), f).is_empty());
  for (Elem x = 0; x < p->size(); ++x)
    CHECK(bind(ret(p, x), f) == f(x));
  auto X = DownSet::closure_of(p, {1, 2});
  CHECK(bind(X, ret_map(p)) == X);
  CHECK_THROWS_AS(bind(ret(chain2(), 0), f), PosetMismatch);
}

TEST_CASE("all_downsets agrees with subset filtering") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    auto p = random_poset(rng, 1 + t % 7);
    auto ds = all_downsets(p);
    CHECK(ds.size() == count_downsets_bruteforce(*p));
    for (const auto &d : ds)
      CHECK(verify_order_laws(d).ok());
  }
  CHECK(all_downsets(diamond()).size() == 6);
  CHECK_THROWS_AS(all_downsets(FinitePoset::discrete(10), 100), CapacityExceeded);
}

TEST_CASE("random posets and generated maps are well-formed") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    auto p = random_poset(rng, 1 + t % 6);
    auto q = random_poset(rng, 1 + (t / 6) % 5);
    CHECK(verify_order_laws(*p).ok());
    CHECK(verify_order_laws(random_monotone(rng, p, q)).ok());
    CHECK(verify_order_laws(random_kleisli(rng, p, q)).ok());
  }
}

TEST_CASE("all_monotone_maps matches a brute-force count") {
  auto p = diamond();
  auto q = FinitePoset::chain(3);
  std::size_t brute = 0;
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b)
      for (Elem c = 0; c < 3; ++c)
        for (Elem d = 0; d < 3; ++d) {
          MonotoneMap m{p, q, {a, b, c, d}};
          brute += verify_order_laws(m).ok();
        }
  CHECK(all_monotone_maps(p, q).size() == brute);
}

TEST_CASE("monad laws on random posets of size up to 5") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 150; ++t) {
    auto a = random_poset(rng, 1 + t % 5);
    auto b = random_poset(rng, 1 + (t / 5) % 5);
    auto c = random_poset(rng, 1 + (t / 25) % 5);
    auto f = random_kleisli(rng, a, b);
    auto g = random_kleisli(rng, b, c);
    for (Elem x = 0; x < a->size(); ++x)
      CHECK(bind(ret(a, x), f) == f(x));
    for (const auto &X : all_downsets(a)) {
      CHECK(bind(X, ret_map(a)) == X);
      auto lhs = bind(bind(X, f), g);
      auto rhs = bind(X, kleisli_compose(g, f));
      CHECK(lhs == rhs);
      CHECK(verify_order_laws(bind(X, f)).ok());
    }
  }
}

TEST_CASE("kleisli composition is associative with ret as unit") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 60; ++t) {
    auto a = random_poset(rng, 3), b = random_poset(rng, 3), c = random_poset(rng, 3),
         d = random_poset(rng, 3);
    auto f = random_kleisli(rng, a, b), g = random_kleisli(rng, b, c),
         h = random_kleisli(rng, c, d);
    CHECK(kleisli_compose(kleisli_compose(h, g), f) == kleisli_compose(h, kleisli_compose(g, f)));
    CHECK(kleisli_compose(g, pure(identity_map(b))) == g);
    CHECK(kleisli_compose(pure(identity_map(c)), g) == g);
  }
}

TEST_CASE("pure composes with pure") {
  auto p = chain2();
  MonotoneMap up{p, p, {1, 1}};
  MonotoneMap id = identity_map(p);
  MonotoneMap comp{p, p, {id(up(0)), id(up(1))}};
  CHECK(kleisli_compose(pure(id), pure(up)) == pure(comp));
  CHECK(pure(up)(0).members() == std::vector<Elem>{0, 1});
  CHECK(pure(up).pure);
}

TEST_CASE("pure preserves monotonicity") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    auto a = random_poset(rng, 1 + t % 5), b = random_poset(rng, 1 + (t / 5) % 5);
    auto f = random_monotone(rng, a, b);
    REQUIRE(verify_order_laws(f).ok());
    CHECK(verify_order_laws(pure(f)).ok());
  }
}

TEST_CASE("ret and bind are monotone w.r.t. inclusion") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    auto a = random_poset(rng, 4), b = random_poset(rng, 4);
    auto f = random_kleisli(rng, a, b);
    auto ds = all_downsets(a);
    for (const auto &X : ds)
      for (const auto &Y : ds)
        if (X.subset_of(Y))
          CHECK(bind(X, f).subset_of(bind(Y, f)));
    for (Elem x = 0; x < a->size(); ++x)
      for (Elem y = 0; y < a->size(); ++y)
        if (a->leq(x, y))
          CHECK(ret(a, x).subset_of(ret(a, y)));
  }
}

TEST_CASE("joins and meets on a diamond") {
  auto p = diamond();
  CHECK(p->join(1, 2) == Elem{3});
  CHECK(p->meet(1, 2) == Elem{0});
  CHECK(p->bottom() == Elem{0});
  CHECK(p->top() == Elem{3});
  auto d = FinitePoset::discrete(2);
  CHECK_FALSE(d->join(0, 1).has_value());
}

TEST_CASE("product poset is componentwise") {
  auto p = FinitePoset::product(chain2(), FinitePoset::discrete({"x", "y"}));
  CHECK(p->size() == 4);
  CHECK(p->name(1) == "(a,y)");
  CHECK(p->leq(p->index_of("(a,x)"), p->index_of("(b,x)")));
  CHECK_FALSE(p->leq(p->index_of("(a,x)"), p->index_of("(b,y)")));
  CHECK(verify_order_laws(*p).ok());
  CHECK_THROWS_AS(p->index_of("zz"), UnknownElement);
}
