#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cgc/error.hpp"
#include "cgc/galois.hpp"
#include "cgc/report.hpp"

namespace cgc::agt {

struct TypeNode;

/// Types of both systems share one representation; precise types are the
/// ones without `unknown` anywhere.
class Type {
public:
  enum class Kind { none, bool_, arrow, any, unknown };

  static Type none();
  static Type bool_();
  static Type any();
  static Type unknown();
  static Type arrow(Type dom, Type cod);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  const Type &dom() const;
  const Type &cod() const;
  bool is_precise() const;
  std::size_t depth() const;

  bool operator==(const Type &o) const;
  bool operator<(const Type &o) const;

private:
  explicit Type(std::shared_ptr<const TypeNode> n) : n_(std::move(n)) {}
  std::shared_ptr<const TypeNode> n_;
};

std::string to_string(const Type &t);
Type parse_type(const std::string &text);

/// All types of depth <= d (a base type has depth 1).
std::vector<Type> precise_types(std::size_t depth);
std::vector<Type> gradual_types(std::size_t depth);

// ---- precise lattice -------------------------------------------------------

bool precise_subtype(const Type &a, const Type &b);
Type precise_join(const Type &a, const Type &b);
Type precise_meet(const Type &a, const Type &b);

// ---- gradual types ---------------------------------------------------------

/// Precision: everything is below `?`, arrows covariant, otherwise equality.
bool precision_leq(const Type &a, const Type &b);
/// The precision join (`?` when the shapes disagree).
Type precision_join(const Type &a, const Type &b);

inline Type grad_eta(const Type &t) { return t; }
bool grad_mu_member(const Type &t, const Type &g);

bool consistent_subtype(const Type &a, const Type &b);
Type gradual_join(const Type &a, const Type &b);
Type gradual_meet(const Type &a, const Type &b);

/// The connection between precise types and gradual types of depth <= d.
/// Abstract elements are indices into gradual_types(d).
ConstructiveGC<Type> grad_gc(std::size_t depth);

// ---- terms -----------------------------------------------------------------

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { tt, ff, if_, var, lam, app, asc };
  Kind kind;
  std::string var;         // var, lam
  std::optional<Type> ann; // lam annotation, absent in dynamic terms
  Type asc = Type::unknown();
  TermPtr a, b, c;
};

TermPtr t_true();
TermPtr t_false();
TermPtr t_if(TermPtr c, TermPtr t, TermPtr e);
TermPtr t_var(std::string x);
TermPtr t_lam(std::string x, std::optional<Type> ann, TermPtr body);
TermPtr t_app(TermPtr f, TermPtr x);
TermPtr t_asc(TermPtr e, Type t);

std::string to_string(const Term &e);
bool equal(const Term &a, const Term &b);
std::size_t size(const Term &e);
TermPtr parse_term(const std::string &text);

bool is_precise_term(const Term &e);
bool is_dynamic_term(const Term &e);

using TypeCtx = std::map<std::string, Type>;

std::optional<Type> typeof_precise(const TypeCtx &g, const Term &e);
std::optional<Type> typeof_gradual(const TypeCtx &g, const Term &e);

/// Annotates every lambda with `?` and routes guards and applied functions
/// through `:: ?`. Throws UnboundVariable on open terms.
TermPtr embed_dynamic(const Term &e);
/// Same erasure, annotations and ascriptions pointwise less or equally precise.
bool term_precision(const Term &a, const Term &b);
/// Every e2 with e ⊑ e2 (annotations replaced by types at least as imprecise).
std::vector<TermPtr> less_precise_variants(const Term &e);

// ---- enumeration and metatheory -------------------------------------------

enum class TermMode { precise, gradual, dynamic };

/// Closed terms of size <= max_size; annotations and ascriptions range over
/// the types of depth <= type_depth for the mode.
std::vector<TermPtr> enumerate_terms(std::size_t max_size, TermMode mode, std::size_t type_depth);

LawReport check_lattice(std::size_t depth);
LawReport check_consistent_subtype(std::size_t depth, std::size_t oracle_depth);
LawReport check_gradual_join(std::size_t depth, std::size_t oracle_depth);
LawReport check_grad_gc(std::size_t depth);
LawReport check_fat(std::size_t max_size, std::size_t type_depth);
LawReport check_edl(std::size_t max_size);
LawReport check_gg(std::size_t max_size, std::size_t type_depth);

} // namespace cgc::agt
