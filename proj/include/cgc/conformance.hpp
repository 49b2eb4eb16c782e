#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "cgc/agt.hpp"
#include "cgc/corpus.hpp"
#include "cgc/domains.hpp"
#include "cgc/galois.hpp"
#include "cgc/while_lang.hpp"

namespace cgc {

class UnknownSuite : public Error {
public:
  explicit UnknownSuite(const std::string &name) : Error("unknown suite '" + name + "'") {}
};

// ---- witness-based optimal tables ------------------------------------------

/// W(neg)={-1,-2}, W(zer)={0}, W(pos)={1,2}; compound signs take unions.
Witnesses<Integer> sign_witnesses();
/// Every integer of [lo, hi] filed under each sign containing it.
Witnesses<Integer> range_witnesses(const ConstructiveGC<Integer> &gc, int lo, int hi);

/// Table t[a * |A| + b] = join{ eta(op(x, y)) | x in W(a), y in W(b) }, pairs
/// where op is undefined skipped. Throws Error when a witness is not a member
/// of the element it is filed under.
template <class C, class D>
std::vector<Elem> witness_optimal(const std::function<std::optional<D>(const C &, const C &)> &op,
                                  const ConstructiveGC<C> &in, const ConstructiveGC<D> &out,
                                  const Witnesses<C> &w) {
  const std::size_t n = in.abstract->size();
  for (const auto &[a, xs] : w)
    for (const C &x : xs)
      if (!in.mu(x, a))
        throw Error("witness " + in.show_elem(x) + " is not in " + in.abstract->name(a));
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      std::vector<Elem> etas;
      auto ia = w.find(a), ib = w.find(b);
      if (ia != w.end() && ib != w.end())
        for (const C &x : ia->second)
          for (const C &y : ib->second)
            if (auto r = op(x, y))
              etas.push_back(out.eta(*r));
      table[a * n + b] = join_all(*out.abstract, etas);
    }
  return table;
}

std::vector<Elem> sign_arith_table(ArithOp op, const Witnesses<Integer> &w);
std::vector<Elem> sign_cmp_table(CmpOp op, const Witnesses<Integer> &w);

// ---- corpora ---------------------------------------------------------------

AexpPtr random_aexp(std::mt19937_64 &rng, const std::vector<std::string> &vars, int depth);
BexpPtr random_bexp(std::mt19937_64 &rng, const std::vector<std::string> &vars, int depth);

struct CorpusBounds {
  std::size_t expressions = 400;
  int expr_depth = 3;
  std::size_t term_size = 3;
  std::size_t type_depth = 1;
};

struct Corpus {
  std::vector<NamedProgram> programs;
  std::vector<AexpPtr> aexps;
  std::vector<BexpPtr> bexps;
  std::vector<agt::TermPtr> terms;
};

Corpus make_corpus(std::uint64_t seed, const CorpusBounds &b = {});

/// Rand policies used by the concrete oracle: subsets of [-3, 3].
std::vector<RandPolicy> oracle_policies();

/// For each program, start environment and policy: every configuration
/// reached within max_steps has its eta-image below the analyzer's entry for
/// its command.
LawReport check_transfer_soundness(const std::vector<NamedProgram> &programs,
                                   std::size_t max_steps);
/// Abstract expressions against concrete evaluation on sampled environments.
LawReport check_expression_soundness(std::uint64_t seed, std::size_t samples);

// ---- law suites ------------------------------------------------------------

struct SuiteBounds {
  std::size_t trials = 200;      // random instances per theorem
  std::size_t max_poset = 6;     // random poset size bound
  std::size_t fact_poset = 4;    // exhaustive fact suites
  std::size_t max_steps = 200;   // concrete oracle bound
  std::size_t term_size = 5;     // FAT / EDL
  std::size_t gg_size = 4;       // gradual guarantee
  std::size_t type_depth = 2;    // annotation types in term enumeration
  std::size_t samples = 10000;   // sampled expression soundness cases
};

struct LawResult {
  std::string law;
  std::size_t instances = 0;
  bool pass = true;
  std::optional<std::string> counterexample;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<LawResult> laws;

  bool ok() const;
  /// Adds one law line from a report: pass iff it has no violations.
  void add(const std::string &law, const LawReport &r);
  void add(const std::string &law, std::size_t instances, bool pass,
           std::optional<std::string> counterexample = std::nullopt);
  nlohmann::json to_json() const;
  std::string to_text() const;
};

const std::vector<std::string> &suite_names();
SuiteReport run_law_suite(const std::string &name, std::uint64_t seed,
                          const SuiteBounds &bounds = {});

} // namespace cgc
