#include "cgc/domains.hpp"

#include <sstream>

namespace cgc {

namespace {

using S = Sign;
constexpr S N = S::none, NG = S::neg, Z = S::zer, P = S::pos, NZ = S::negz, NE = S::nzer,
            PZ = S::posz, A = S::any;

// Rows are the left operand, columns the right, both in enumerator order.
constexpr S add_table[8][8] = {
    {N, N, N, N, N, N, N, N},
    {N, NG, NG, A, NG, A, A, A},
    {N, NG, Z, P, NZ, NE, PZ, A},
    {N, A, P, P, A, A, P, A},
    {N, NG, NZ, A, NZ, A, A, A},
    {N, A, NE, A, A, A, A, A},
    {N, A, PZ, P, A, A, PZ, A},
    {N, A, A, A, A, A, A, A},
};

constexpr S sub_table[8][8] = {
    {N, N, N, N, N, N, N, N},
    {N, A, NG, NG, A, A, NG, A},
    {N, P, Z, NG, PZ, NE, NZ, A},
    {N, P, P, A, P, A, A, A},
    {N, A, NZ, NG, A, A, NZ, A},
    {N, A, NE, A, A, A, A, A},
    {N, P, PZ, A, PZ, A, A, A},
    {N, A, A, A, A, A, A, A},
};

constexpr S mul_table[8][8] = {
    {N, N, N, N, N, N, N, N},
    {N, P, Z, NG, PZ, NE, NZ, A},
    {N, Z, Z, Z, Z, Z, Z, Z},
    {N, NG, Z, P, NZ, NE, PZ, A},
    {N, PZ, Z, NZ, PZ, A, NZ, A},
    {N, NE, Z, NE, A, NE, A, A},
    {N, NZ, Z, PZ, NZ, A, PZ, A},
    {N, A, Z, A, A, A, A, A},
};

// Truncating division; a zero divisor contributes nothing.
constexpr S div_table[8][8] = {
    {N, N, N, N, N, N, N, N},
    {N, PZ, N, NZ, PZ, A, NZ, A},
    {N, Z, N, Z, Z, Z, Z, Z},
    {N, NZ, N, PZ, NZ, A, PZ, A},
    {N, PZ, N, NZ, PZ, A, NZ, A},
    {N, A, N, A, A, A, A, A},
    {N, NZ, N, PZ, NZ, A, PZ, A},
    {N, A, N, A, A, A, A, A},
};

// 0 = {}, 1 = {true}, 2 = {false}, 3 = {true,false}
constexpr std::uint8_t lt_table[8][8] = {
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 3, 1, 1, 3, 3, 1, 3},
    {0, 2, 2, 1, 2, 3, 3, 3},
    {0, 2, 2, 3, 2, 3, 3, 3},
    {0, 3, 3, 1, 3, 3, 3, 3},
    {0, 3, 3, 3, 3, 3, 3, 3},
    {0, 2, 2, 3, 2, 3, 3, 3},
    {0, 3, 3, 3, 3, 3, 3, 3},
};

constexpr std::uint8_t eq_table[8][8] = {
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 3, 2, 2, 3, 3, 2, 3},
    {0, 2, 1, 2, 3, 2, 3, 3},
    {0, 2, 2, 3, 2, 3, 3, 3},
    {0, 3, 3, 2, 3, 3, 3, 3},
    {0, 3, 2, 3, 3, 3, 3, 3},
    {0, 2, 3, 3, 3, 3, 3, 3},
    {0, 3, 3, 3, 3, 3, 3, 3},
};

constexpr std::uint8_t mask_of[8] = {0, 1, 2, 4, 3, 5, 6, 7};
constexpr Sign sign_of_mask[8] = {N, NG, Z, NZ, P, NE, PZ, A};

const char *sign_names[8] = {"none", "neg", "zer", "pos", "negz", "nzer", "posz", "any"};

std::uint8_t mask(Sign s) { return mask_of[index(s)]; }

} // namespace

const char *op_symbol(ArithOp op) {
  switch (op) {
  case ArithOp::add:
    return "+";
  case ArithOp::sub:
    return "-";
  case ArithOp::mul:
    return "*";
  case ArithOp::div:
    return "/";
  }
  return "?";
}

const char *op_symbol(CmpOp op) { return op == CmpOp::lt ? "<" : "="; }
const char *op_symbol(BoolOp op) { return op == BoolOp::and_ ? "&&" : "||"; }

std::optional<Integer> concrete_arith(ArithOp op, const Integer &a, const Integer &b) {
  switch (op) {
  case ArithOp::add:
    return a + b;
  case ArithOp::sub:
    return a - b;
  case ArithOp::mul:
    return a * b;
  case ArithOp::div:
    if (b == 0)
      return std::nullopt;
    return a / b; // cpp_int truncates toward zero
  }
  return std::nullopt;
}

bool concrete_cmp(CmpOp op, const Integer &a, const Integer &b) {
  return op == CmpOp::lt ? a < b : a == b;
}

bool concrete_bool(BoolOp op, bool a, bool b) { return op == BoolOp::and_ ? (a && b) : (a || b); }

// ---- parity ----------------------------------------------------------------

Parity parity(const Integer &n) {
  if (n < 0)
    throw Error("parity is defined on naturals, got " + n.str());
  return (n % 2 == 0) ? Parity::even : Parity::odd;
}

Parity succ_sharp(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

ParityTop max_sharp(ParityTop a, ParityTop b) {
  if (a == b)
    return a;
  return ParityTop::any;
}

const char *to_string(Parity p) { return p == Parity::even ? "EVEN" : "ODD"; }

const char *to_string(ParityTop p) {
  switch (p) {
  case ParityTop::even:
    return "EVEN";
  case ParityTop::odd:
    return "ODD";
  case ParityTop::any:
    return "ANY";
  }
  return "?";
}

PosetRef parity_poset() {
  static const PosetRef p = FinitePoset::discrete({"EVEN", "ODD"});
  return p;
}

PosetRef parity_top_poset() {
  static const PosetRef p = FinitePoset::from_relation({"EVEN", "ODD", "ANY"}, {{0, 2}, {1, 2}});
  return p;
}

ConstructiveGC<Integer> parity_gc() {
  ConstructiveGC<Integer> gc;
  gc.name = "parity";
  gc.abstract = parity_poset();
  gc.eta = [](const Integer &n) { return static_cast<Elem>(parity(n)); };
  gc.mu_member = [](const Integer &n, Elem y) {
    if (n < 0)
      return false;
    return y == 0 ? n % 2 == 0 : n % 2 != 0;
  };
  gc.show = [](const Integer &n) { return n.str(); };
  return gc;
}

ConstructiveGC<Integer> parity_top_gc() {
  ConstructiveGC<Integer> gc;
  gc.name = "parity-top";
  gc.abstract = parity_top_poset();
  gc.eta = [](const Integer &n) { return static_cast<Elem>(parity(n)); };
  gc.mu_member = [](const Integer &n, Elem y) {
    if (n < 0)
      return false;
    if (y == 2)
      return true;
    return y == 0 ? n % 2 == 0 : n % 2 != 0;
  };
  gc.show = [](const Integer &n) { return n.str(); };
  return gc;
}

// ---- signs -----------------------------------------------------------------

const char *to_string(Sign s) { return sign_names[index(s)]; }

std::optional<Sign> parse_sign(const std::string &s) {
  for (Sign x : all_signs)
    if (s == to_string(x))
      return x;
  return std::nullopt;
}

PosetRef sign_poset() {
  static const PosetRef p = [] {
    std::vector<std::string> names(sign_names, sign_names + 8);
    std::vector<std::uint8_t> t(64, 0);
    for (Sign a : all_signs)
      for (Sign b : all_signs)
        t[index(a) * 8 + index(b)] = (mask(a) & ~mask(b)) == 0;
    return FinitePoset::make(std::move(names), std::move(t));
  }();
  return p;
}

bool sign_leq(Sign a, Sign b) { return (mask(a) & ~mask(b)) == 0; }
Sign sign_join(Sign a, Sign b) { return sign_of_mask[mask(a) | mask(b)]; }
Sign sign_meet(Sign a, Sign b) { return sign_of_mask[mask(a) & mask(b)]; }

Sign sign_eta(const Integer &i) {
  if (i < 0)
    return Sign::neg;
  if (i == 0)
    return Sign::zer;
  return Sign::pos;
}

bool sign_mu_member(const Integer &i, Sign s) {
  switch (s) {
  case Sign::none:
    return false;
  case Sign::neg:
    return i < 0;
  case Sign::zer:
    return i == 0;
  case Sign::pos:
    return i > 0;
  case Sign::negz:
    return i <= 0;
  case Sign::nzer:
    return i != 0;
  case Sign::posz:
    return i >= 0;
  case Sign::any:
    return true;
  }
  return false;
}

ConstructiveGC<Integer> sign_gc() {
  ConstructiveGC<Integer> gc;
  gc.name = "sign";
  gc.abstract = sign_poset();
  gc.eta = [](const Integer &i) { return index(sign_eta(i)); };
  gc.mu_member = [](const Integer &i, Elem s) { return sign_mu_member(i, sign_at(s)); };
  gc.show = [](const Integer &i) { return i.str(); };
  return gc;
}

Sign abs_arith(ArithOp op, Sign a, Sign b) {
  const auto i = index(a), j = index(b);
  switch (op) {
  case ArithOp::add:
    return add_table[i][j];
  case ArithOp::sub:
    return sub_table[i][j];
  case ArithOp::mul:
    return mul_table[i][j];
  case ArithOp::div:
    return div_table[i][j];
  }
  return Sign::any;
}

// ---- abstract booleans -----------------------------------------------------

std::string AbsBool::to_string() const {
  if (may_true && may_false)
    return "{true,false}";
  if (may_true)
    return "{true}";
  if (may_false)
    return "{false}";
  return "{}";
}

PosetRef absbool_poset() {
  static const PosetRef p = [] {
    std::vector<std::string> names;
    std::vector<std::uint8_t> t(16, 0);
    for (Elem a = 0; a < 4; ++a) {
      names.push_back(AbsBool::at(a).to_string());
      for (Elem b = 0; b < 4; ++b)
        t[a * 4 + b] = AbsBool::at(a).leq(AbsBool::at(b));
    }
    return FinitePoset::make(std::move(names), std::move(t));
  }();
  return p;
}

AbsBool abs_cmp(CmpOp op, Sign a, Sign b) {
  const auto v = op == CmpOp::lt ? lt_table[index(a)][index(b)] : eq_table[index(a)][index(b)];
  return AbsBool::at(v);
}

AbsBool abs_bool(BoolOp op, AbsBool a, AbsBool b) {
  AbsBool out;
  for (bool x : {true, false})
    for (bool y : {true, false})
      if (a.contains(x) && b.contains(y)) {
        if (concrete_bool(op, x, y))
          out.may_true = true;
        else
          out.may_false = true;
      }
  return out;
}

ConstructiveGC<bool> bool_gc() {
  ConstructiveGC<bool> gc;
  gc.name = "bool";
  gc.abstract = absbool_poset();
  gc.eta = [](const bool &b) { return AbsBool::just(b).index(); };
  gc.mu_member = [](const bool &b, Elem y) { return AbsBool::at(y).contains(b); };
  gc.show = [](const bool &b) { return std::string(b ? "true" : "false"); };
  return gc;
}

// ---- environments ----------------------------------------------------------

AbsEnv env_eta(const Env &rho) {
  AbsEnv out;
  for (const auto &[x, v] : rho)
    out[x] = sign_eta(v);
  return out;
}

bool env_mu_member(const Env &rho, const AbsEnv &abs) {
  if (rho.size() != abs.size())
    return false;
  for (const auto &[x, s] : abs) {
    auto it = rho.find(x);
    if (it == rho.end() || !sign_mu_member(it->second, s))
      return false;
  }
  return true;
}

AbsEnv env_join(const AbsEnv &a, const AbsEnv &b) {
  AbsEnv out = a;
  for (const auto &[x, s] : b) {
    auto it = out.find(x);
    out[x] = it == out.end() ? s : sign_join(it->second, s);
  }
  return out;
}

bool env_leq(const AbsEnv &a, const AbsEnv &b) {
  for (const auto &[x, s] : a) {
    auto it = b.find(x);
    const Sign t = it == b.end() ? Sign::none : it->second;
    if (!sign_leq(s, t))
      return false;
  }
  for (const auto &[x, s] : b)
    if (!a.count(x) && !sign_leq(Sign::none, s))
      return false;
  return true;
}

AbsEnv env_update(const AbsEnv &abs, const std::string &x, Sign s) {
  auto it = abs.find(x);
  if (it == abs.end())
    throw UnboundVariable(x);
  AbsEnv out = abs;
  out[x] = s;
  return out;
}

AbsEnv env_bottom(const std::vector<std::string> &vars) {
  AbsEnv out;
  for (const auto &x : vars)
    out[x] = Sign::none;
  return out;
}

std::string to_string(const AbsEnv &abs) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto &[x, s] : abs) {
    if (!first)
      os << ", ";
    os << x << ":" << to_string(s);
    first = false;
  }
  os << "}";
  return os.str();
}

std::string to_string(const Env &rho) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto &[x, v] : rho) {
    if (!first)
      os << ", ";
    os << x << ":" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

Elem EnvGC::encode(const AbsEnv &abs) const {
  Elem e = 0, scale = 1;
  for (const auto &x : vars) {
    auto it = abs.find(x);
    if (it == abs.end())
      throw UnboundVariable(x);
    e += index(it->second) * scale;
    scale *= 8;
  }
  return e;
}

AbsEnv EnvGC::decode(Elem e) const {
  AbsEnv out;
  for (const auto &x : vars) {
    out[x] = sign_at(e % 8);
    e /= 8;
  }
  return out;
}

EnvGC env_gc(std::vector<std::string> vars) {
  if (vars.size() > 4)
    throw CapacityExceeded("env_gc materializes 8^k abstract environments; k <= 4");
  EnvGC g{std::move(vars), {}};
  std::size_t n = 1;
  for (std::size_t i = 0; i < g.vars.size(); ++i)
    n *= 8;
  std::vector<std::string> names;
  std::vector<std::uint8_t> t(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    names.push_back(to_string(g.decode(a)));
    for (Elem b = 0; b < n; ++b) {
      bool le = true;
      for (Elem x = a, y = b, k = 0; k < g.vars.size() && le; ++k, x /= 8, y /= 8)
        le = sign_leq(sign_at(x % 8), sign_at(y % 8));
      t[a * n + b] = le;
    }
  }
  g.gc.name = "env";
  g.gc.abstract = FinitePoset::make(std::move(names), std::move(t));
  const EnvGC copy = g;
  g.gc.eta = [copy](const Env &rho) { return copy.encode(env_eta(rho)); };
  g.gc.mu_member = [copy](const Env &rho, Elem y) { return env_mu_member(rho, copy.decode(y)); };
  g.gc.show = [](const Env &rho) { return to_string(rho); };
  return g;
}

} // namespace cgc
