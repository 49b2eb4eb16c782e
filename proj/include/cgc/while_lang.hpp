#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cgc/domains.hpp"
#include "cgc/integer.hpp"

namespace cgc {

struct Aexp;
struct Bexp;
using AexpPtr = std::shared_ptr<const Aexp>;
using BexpPtr = std::shared_ptr<const Bexp>;

struct Aexp {
  enum class Kind { lit, var, rand, bin };
  Kind kind;
  Integer value;   // lit
  std::string var; // var
  ArithOp op{};    // bin
  AexpPtr lhs, rhs;
};

struct Bexp {
  enum class Kind { lit, cmp, bin };
  Kind kind;
  bool value = false; // lit
  CmpOp cmp{};        // cmp
  AexpPtr alhs, arhs;
  BoolOp op{}; // bin
  BexpPtr lhs, rhs;
};

AexpPtr a_lit(Integer i);
AexpPtr a_var(std::string x);
AexpPtr a_rand();
AexpPtr a_bin(ArithOp op, AexpPtr l, AexpPtr r);
BexpPtr b_lit(bool b);
BexpPtr b_cmp(CmpOp op, AexpPtr l, AexpPtr r);
BexpPtr b_bin(BoolOp op, BexpPtr l, BexpPtr r);

std::string to_string(const Aexp &e);
std::string to_string(const Bexp &e);
bool equal(const Aexp &a, const Aexp &b);
bool equal(const Bexp &a, const Bexp &b);

/// An immutable command. Equality and ordering are structural, via the
/// canonical printed form computed at construction.
class Cexp {
public:
  enum class Kind { skip, seq, assign, if_, while_ };

  static Cexp skip();
  static Cexp seq(Cexp first, Cexp second);
  static Cexp assign(std::string x, AexpPtr e);
  static Cexp if_(BexpPtr guard, Cexp then_branch, Cexp else_branch);
  static Cexp while_(BexpPtr guard, Cexp body);

  Kind kind() const { return node_->kind; }
  bool is_skip() const { return kind() == Kind::skip; }
  /// seq: first/second; if: then/else; while: body in first()
  const Cexp &first() const { return *node_->c1; }
  const Cexp &second() const { return *node_->c2; }
  const std::string &var() const { return node_->var; }
  const AexpPtr &aexp() const { return node_->aexp; }
  const BexpPtr &guard() const { return node_->guard; }

  const std::string &text() const { return node_->text; }
  bool operator==(const Cexp &o) const { return text() == o.text(); }
  bool operator<(const Cexp &o) const { return text() < o.text(); }

private:
  struct Node {
    Kind kind;
    std::string var;
    AexpPtr aexp;
    BexpPtr guard;
    std::shared_ptr<const Cexp> c1, c2;
    std::string text;
  };
  explicit Cexp(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Cexp make(Node n);
  std::shared_ptr<const Node> node_;
};

std::string to_string(const Cexp &c);

struct Program {
  std::vector<std::string> vars; // sorted, deduplicated
  bool declared = false;         // came from a `vars` header
  Cexp body = Cexp::skip();
};

/// Canonical source text: `vars` header (when declared) followed by the body.
std::string to_string(const Program &p);

Program parse_program(const std::string &text);
Cexp parse(const std::string &text);
AexpPtr parse_aexp(const std::string &text);
BexpPtr parse_bexp(const std::string &text);

std::set<std::string> free_vars(const Cexp &c);
std::set<std::string> free_vars(const Aexp &e);
std::set<std::string> free_vars(const Bexp &e);

// ---- concrete semantics ----------------------------------------------------

/// The finite set of values `rand` may produce. Must be non-empty.
struct RandPolicy {
  std::set<Integer> sample;
};

struct Config {
  Env env;
  Cexp cmd = Cexp::skip();

  bool operator==(const Config &o) const { return env == o.env && cmd == o.cmd; }
  bool operator<(const Config &o) const {
    if (env != o.env)
      return env < o.env;
    return cmd < o.cmd;
  }
};

std::string to_string(const Config &c);

std::set<Integer> eval_aexp(const Env &rho, const Aexp &e, const RandPolicy &policy);
std::set<bool> eval_bexp(const Env &rho, const Bexp &e, const RandPolicy &policy);
std::set<Config> step(const Config &s, const RandPolicy &policy);
/// Everything reachable from s0 within max_steps steps (s0 included).
/// Throws CapacityExceeded past `cap` configurations.
std::set<Config> collect_bounded(const Config &s0, const RandPolicy &policy,
                                 std::size_t max_steps, std::size_t cap = 1u << 20);

} // namespace cgc
