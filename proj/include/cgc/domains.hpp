#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgc/galois.hpp"
#include "cgc/integer.hpp"

namespace cgc {

enum class ArithOp { add, sub, mul, div };
enum class CmpOp { lt, eq };
enum class BoolOp { or_, and_ };

const char *op_symbol(ArithOp op);
const char *op_symbol(CmpOp op);
const char *op_symbol(BoolOp op);

/// Concrete operators. Division truncates toward zero and has no result for a
/// zero divisor.
std::optional<Integer> concrete_arith(ArithOp op, const Integer &a, const Integer &b);
bool concrete_cmp(CmpOp op, const Integer &a, const Integer &b);
bool concrete_bool(BoolOp op, bool a, bool b);

// ---- parity ----------------------------------------------------------------

enum class Parity : std::uint8_t { even, odd };
enum class ParityTop : std::uint8_t { even, odd, any };

/// Throws Error for negative n.
Parity parity(const Integer &n);
Parity succ_sharp(Parity p);
ParityTop max_sharp(ParityTop a, ParityTop b);
const char *to_string(Parity p);
const char *to_string(ParityTop p);

PosetRef parity_poset();     // discrete {EVEN, ODD}
PosetRef parity_top_poset(); // EVEN, ODD below ANY
ConstructiveGC<Integer> parity_gc();
ConstructiveGC<Integer> parity_top_gc();

// ---- signs -----------------------------------------------------------------

/// Enumerator values double as element indices in sign_poset().
enum class Sign : std::uint8_t { none, neg, zer, pos, negz, nzer, posz, any };

inline constexpr std::array<Sign, 8> all_signs = {Sign::none, Sign::neg,  Sign::zer,
                                                  Sign::pos,  Sign::negz, Sign::nzer,
                                                  Sign::posz, Sign::any};

const char *to_string(Sign s);
std::optional<Sign> parse_sign(const std::string &s);
inline Elem index(Sign s) { return static_cast<Elem>(s); }
inline Sign sign_at(Elem e) { return static_cast<Sign>(e); }

PosetRef sign_poset();
bool sign_leq(Sign a, Sign b);
Sign sign_join(Sign a, Sign b);
Sign sign_meet(Sign a, Sign b);
Sign sign_eta(const Integer &i);
bool sign_mu_member(const Integer &i, Sign s);
ConstructiveGC<Integer> sign_gc();

Sign abs_arith(ArithOp op, Sign a, Sign b);

// ---- abstract booleans -----------------------------------------------------

struct AbsBool {
  bool may_true = false;
  bool may_false = false;

  static AbsBool bot() { return {false, false}; }
  static AbsBool top() { return {true, true}; }
  static AbsBool just(bool b) { return {b, !b}; }

  bool contains(bool b) const { return b ? may_true : may_false; }
  bool empty() const { return !may_true && !may_false; }
  AbsBool join(AbsBool o) const { return {may_true || o.may_true, may_false || o.may_false}; }
  bool leq(AbsBool o) const {
    return (!may_true || o.may_true) && (!may_false || o.may_false);
  }
  Elem index() const { return (may_true ? 1u : 0u) | (may_false ? 2u : 0u); }
  static AbsBool at(Elem e) { return {(e & 1u) != 0, (e & 2u) != 0}; }
  std::string to_string() const;
  bool operator==(const AbsBool &) const = default;
};

PosetRef absbool_poset();
AbsBool abs_cmp(CmpOp op, Sign a, Sign b);
AbsBool abs_bool(BoolOp op, AbsBool a, AbsBool b);
ConstructiveGC<bool> bool_gc();

// ---- environments ----------------------------------------------------------

using Env = std::map<std::string, Integer>;
using AbsEnv = std::map<std::string, Sign>;

AbsEnv env_eta(const Env &rho);
bool env_mu_member(const Env &rho, const AbsEnv &abs);
/// Pointwise; a variable missing on one side is treated as none.
AbsEnv env_join(const AbsEnv &a, const AbsEnv &b);
bool env_leq(const AbsEnv &a, const AbsEnv &b);
/// Throws UnboundVariable if x is not in the environment.
AbsEnv env_update(const AbsEnv &abs, const std::string &x, Sign s);
AbsEnv env_bottom(const std::vector<std::string> &vars);
std::string to_string(const AbsEnv &abs);
std::string to_string(const Env &rho);

/// The environment connection over a fixed variable list, with the abstract
/// side materialized as the product of sign lattices (8^k elements).
struct EnvGC {
  std::vector<std::string> vars;
  ConstructiveGC<Env> gc;

  Elem encode(const AbsEnv &abs) const;
  AbsEnv decode(Elem e) const;
};

EnvGC env_gc(std::vector<std::string> vars);

} // namespace cgc
