#include "cgc/agt.hpp"

namespace cgc::agt {

namespace {

struct Rules {
  bool (*sub)(const Type &, const Type &);
  Type (*join)(const Type &, const Type &);
};

// The arrow bound used by application: arrows are their own bound, None
// applies as Any -> None, `?` as ? -> ?.
std::optional<Type> arrow_bound(const Type &t) {
  switch (t.kind()) {
  case Type::Kind::arrow:
    return t;
  case Type::Kind::none:
    return Type::arrow(Type::any(), Type::none());
  case Type::Kind::unknown:
    return Type::arrow(Type::unknown(), Type::unknown());
  default:
    return std::nullopt;
  }
}

std::optional<Type> type_of(const Rules &R, const TypeCtx &g, const Term &e) {
  switch (e.kind) {
  case Term::Kind::tt:
  case Term::Kind::ff:
    return Type::bool_();
  case Term::Kind::var: {
    auto it = g.find(e.var);
    if (it == g.end())
      return std::nullopt;
    return it->second;
  }
  case Term::Kind::lam: {
    if (!e.ann)
      return std::nullopt;
    TypeCtx g2 = g;
    g2.insert_or_assign(e.var, *e.ann);
    auto body = type_of(R, g2, *e.a);
    if (!body)
      return std::nullopt;
    return Type::arrow(*e.ann, *body);
  }
  case Term::Kind::if_: {
    auto c = type_of(R, g, *e.a);
    if (!c || !R.sub(*c, Type::bool_()))
      return std::nullopt;
    auto t = type_of(R, g, *e.b);
    auto f = type_of(R, g, *e.c);
    if (!t || !f)
      return std::nullopt;
    return R.join(*t, *f);
  }
  case Term::Kind::app: {
    auto f = type_of(R, g, *e.a);
    if (!f)
      return std::nullopt;
    auto bound = arrow_bound(*f);
    auto x = type_of(R, g, *e.b);
    if (!bound || !x || !R.sub(*x, bound->dom()))
      return std::nullopt;
    return bound->cod();
  }
  case Term::Kind::asc: {
    auto t = type_of(R, g, *e.a);
    if (!t || !R.sub(*t, e.asc))
      return std::nullopt;
    return e.asc;
  }
  }
  return std::nullopt;
}

} // namespace

std::optional<Type> typeof_precise(const TypeCtx &g, const Term &e) {
  if (!is_precise_term(e))
    return std::nullopt;
  for (auto &[_, t] : g)
    if (!t.is_precise())
      return std::nullopt;
  return type_of(Rules{precise_subtype, precise_join}, g, e);
}

std::optional<Type> typeof_gradual(const TypeCtx &g, const Term &e) {
  return type_of(Rules{consistent_subtype, gradual_join}, g, e);
}

LawReport check_fat(std::size_t max_size, std::size_t type_depth) {
  LawReport r;
  for (const auto &e : enumerate_terms(max_size, TermMode::precise, type_depth)) {
    r.count();
    auto p = typeof_precise({}, *e);
    auto q = typeof_gradual({}, *e); // injection is the identity on terms
    const bool agree = p ? (q && *q == grad_eta(*p)) : !q;
    if (!agree)
      r.add("FAT", to_string(*e));
  }
  return r;
}

LawReport check_edl(std::size_t max_size) {
  LawReport r;
  for (const auto &e : enumerate_terms(max_size, TermMode::dynamic, 0)) {
    r.count();
    auto t = typeof_gradual({}, *embed_dynamic(*e));
    if (!t || !consistent_subtype(*t, Type::unknown()))
      r.add("EDL", to_string(*e));
  }
  return r;
}

LawReport check_gg(std::size_t max_size, std::size_t type_depth) {
  LawReport r;
  for (const auto &e1 : enumerate_terms(max_size, TermMode::gradual, type_depth)) {
    auto t1 = typeof_gradual({}, *e1);
    for (const auto &e2 : less_precise_variants(*e1)) {
      r.count();
      if (!t1)
        continue;
      auto t2 = typeof_gradual({}, *e2);
      if (!t2 || !precision_leq(*t1, *t2))
        r.add("GG", to_string(*e1) + " ~> " + to_string(*e2));
    }
  }
  return r;
}

} // namespace cgc::agt
