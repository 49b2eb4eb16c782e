#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>

#include "cgc/domains.hpp"
#include "cgc/while_lang.hpp"

namespace cgc {

Sign abs_aexp(const Aexp &e, const AbsEnv &rho);
AbsBool abs_bexp(const Bexp &e, const AbsEnv &rho);

using AbsSucc = std::pair<AbsEnv, Cexp>;
std::set<AbsSucc> abs_step(const Cexp &c, const AbsEnv &rho);

/// Command forms reachable from c under the step shapes, guards ignored.
std::set<Cexp> residuals(const Cexp &c);

/// Environment paired with a finite set of commands.
struct AbsConfig {
  AbsEnv env;
  std::set<Cexp> cmds;
  bool operator==(const AbsConfig &) const = default;
};

/// Lifted transfer on abstract configurations: union of abs_step over cmds,
/// environments joined.
AbsConfig abs_step_config(const AbsConfig &s);

struct AnalysisOptions {
  enum class Order { fifo, lifo, shuffled };
  Order order = Order::fifo;
  std::uint64_t seed = 0;
};

struct AnalysisResult {
  /// Only residuals that the abstract flow reaches have an entry; a missing
  /// residual is unreachable, strictly below the all-none environment.
  std::map<Cexp, AbsEnv> at;
  AbsEnv final_env;
  std::size_t iterations = 0;
  std::size_t bound = 0;
  std::set<Cexp> residual_set;

  /// at(r), or the all-none environment when r was never reached.
  AbsEnv lookup(const Cexp &r) const;
  bool reached(const Cexp &r) const { return at.count(r) != 0; }
};

/// Worklist fixpoint over residuals. `iterations` counts transfer
/// applications and never exceeds |residuals| * (3k + 1) for k variables.
AnalysisResult analyze(const Cexp &program, const AbsEnv &init, AnalysisOptions opts = {});

/// One more sweep of the transfer over every reached residual changes nothing.
bool is_post_fixpoint(const AnalysisResult &r);

/// Pointwise order on results; an unreached residual is below everything.
bool result_leq(const AnalysisResult &a, const AnalysisResult &b);

} // namespace cgc
