#include "doctest.h"

#include "cgc/conformance.hpp"

using namespace cgc;

namespace {

Elem arith_at(const std::vector<Elem> &t, Sign a, Sign b) { return t[index(a) * 8 + index(b)]; }

// Small bounds so the whole registry runs quickly inside unit tests.
SuiteBounds quick() {
  SuiteBounds b;
  b.trials = 40;
  b.max_poset = 4;
  b.fact_poset = 3;
  b.max_steps = 60;
  b.term_size = 4;
  b.gg_size = 3;
  b.type_depth = 1;
  b.samples = 500;
  return b;
}

} // namespace

TEST_CASE("witness-optimal tables") {
  const auto t = sign_arith_table(ArithOp::add, sign_witnesses());
  CHECK(sign_at(arith_at(t, Sign::pos, Sign::neg)) == Sign::any);
  CHECK(sign_at(arith_at(t, Sign::posz, Sign::zer)) == Sign::posz);
  CHECK(sign_at(arith_at(t, Sign::none, Sign::pos)) == Sign::none);
  const auto d = sign_arith_table(ArithOp::div, sign_witnesses());
  CHECK(sign_at(arith_at(d, Sign::pos, Sign::zer)) == Sign::none);
  CHECK(sign_at(arith_at(d, Sign::neg, Sign::neg)) == Sign::posz); // -1 / -2 truncates to 0
  const auto lt = sign_cmp_table(CmpOp::lt, sign_witnesses());
  CHECK(AbsBool::at(lt[index(Sign::neg) * 8 + index(Sign::pos)]) == AbsBool::just(true));

  Witnesses<Integer> bad{{index(Sign::pos), {Integer(-1)}}};
  CHECK_THROWS_AS(sign_arith_table(ArithOp::add, bad), Error);
}

TEST_CASE("range witnesses are filed under every containing sign") {
  const auto w = range_witnesses(sign_gc(), -2, 2);
  CHECK(w.at(index(Sign::zer)).size() == 1);
  CHECK(w.at(index(Sign::posz)).size() == 3);
  CHECK(w.at(index(Sign::any)).size() == 5);
  CHECK(w.at(index(Sign::none)).empty());
}

TEST_CASE("corpus generation is seeded") {
  const auto a = make_corpus(7), b = make_corpus(7), c = make_corpus(8);
  REQUIRE(a.aexps.size() == b.aexps.size());
  bool differs = false;
  for (std::size_t i = 0; i < a.aexps.size(); ++i) {
    CHECK(to_string(*a.aexps[i]) == to_string(*b.aexps[i]));
    differs = differs || to_string(*a.aexps[i]) != to_string(*c.aexps[i]);
  }
  CHECK(differs);
  CHECK(a.programs.size() >= 25);
  CHECK_FALSE(a.terms.empty());
}

TEST_CASE("oracle policies stay within [-3,3]") {
  for (const auto &p : oracle_policies()) {
    CHECK_FALSE(p.sample.empty());
    for (const auto &i : p.sample)
      CHECK((i >= -3 && i <= 3));
  }
}

TEST_CASE("every registered suite passes at small bounds") {
  for (const auto &n : suite_names()) {
    INFO(n);
    const auto r = run_law_suite(n, 3, quick());
    CHECK(r.ok());
    CHECK_FALSE(r.laws.empty());
    if (!r.ok())
      MESSAGE(r.to_text());
  }
}

TEST_CASE("reports are deterministic") {
  for (const char *n : {"kleisli-roundtrip", "fact6-ia-split", "lemma1-induce"}) {
    const auto a = run_law_suite(n, 11, quick()), b = run_law_suite(n, 11, quick());
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.to_text() == b.to_text());
  }
}

TEST_CASE("report shapes") {
  SuiteReport s{"demo", 5, {}};
  s.add("fine", 3, true);
  LawReport bad;
  bad.count(2);
  bad.add("X", "w");
  s.add("broken", bad);
  CHECK_FALSE(s.ok());
  const auto j = s.to_json();
  CHECK(j["suite"] == "demo");
  CHECK(j["seed"] == 5);
  CHECK(j["pass"] == false);
  CHECK(j["laws"][0]["counterexample"].is_null());
  CHECK(j["laws"][1]["counterexample"] == "X: w");
  CHECK(j["laws"][1]["instances"] == 2);
  CHECK(s.to_text().find("FAIL broken [2 instances] first counterexample: X: w") !=
        std::string::npos);
}

TEST_CASE("unknown suite") {
  CHECK_THROWS_AS(run_law_suite("no-such-suite", 1), UnknownSuite);
}

TEST_CASE("shipped configuration at full bounds for the cheap suites") {
  for (const char *n : {"kleisli-roundtrip", "fact6-ia-split", "snd-variants-agree",
                        "completeness-variants-differ", "sign-optimality"}) {
    INFO(n);
    const auto r = run_law_suite(n, 1);
    CHECK(r.ok());
  }
  std::size_t fact6 = 0;
  for (const auto &l : run_law_suite("fact6-ia-split", 1).laws)
    if (l.law.rfind("split", 0) == 0)
      fact6 += l.instances;
  CHECK(fact6 >= 1000);
}
