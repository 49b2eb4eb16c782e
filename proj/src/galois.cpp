#include "cgc/galois.hpp"

namespace cgc {

namespace {

std::vector<Elem> all_elems(const FinitePoset &p) {
  std::vector<Elem> v(p.size());
  for (Elem i = 0; i < p.size(); ++i)
    v[i] = i;
  return v;
}

bool downset_leq(const DownSet &a, const DownSet &b) { return a.subset_of(b); }
std::string show_downset(const DownSet &d) { return d.to_string(); }

} // namespace

LawReport verify_cgc(const FiniteGC &gc) {
  if (!gc.concrete)
    throw Error("verify_cgc without a probe needs a finite concrete poset");
  FiniteGC g = gc;
  if (!g.concrete_leq) {
    auto c = gc.concrete;
    g.concrete_leq = [c](const Elem &a, const Elem &b) { return c->leq(a, b); };
  }
  return verify_cgc(g, all_elems(*gc.concrete));
}

FiniteGC induce_mu(const MonotoneMap &eta, std::string name) {
  auto table = eta.table;
  auto dom = eta.dom;
  FiniteGC gc = induce_mu<Elem>(std::move(name), eta.cod,
                                [table](const Elem &x) { return table.at(x); },
                                [dom](const Elem &a, const Elem &b) { return dom->leq(a, b); });
  gc.concrete = eta.dom;
  return gc;
}

DownSet mu_set(const FiniteGC &gc, Elem y) {
  DownSet d(gc.concrete);
  for (Elem x = 0; x < gc.concrete->size(); ++x)
    if (gc.mu(x, y))
      d.mark(x);
  return d;
}

MonotoneMap eta_map(const FiniteGC &gc) {
  MonotoneMap m{gc.concrete, gc.abstract, {}};
  for (Elem x = 0; x < gc.concrete->size(); ++x)
    m.table.push_back(gc.eta(x));
  return m;
}

DownSet lifted_alpha(const FiniteGC &gc, const DownSet &xs) {
  require_same(xs.over(), gc.concrete, "lifted_alpha");
  DownSet out(gc.abstract);
  for (Elem x : xs.members())
    out.add_closed(gc.eta(x));
  return out;
}

DownSet lifted_gamma(const FiniteGC &gc, const DownSet &ys) {
  require_same(ys.over(), gc.abstract, "lifted_gamma");
  DownSet out(gc.concrete);
  for (Elem x = 0; x < gc.concrete->size(); ++x)
    for (Elem y : ys.members())
      if (gc.mu(x, y)) {
        out.mark(x);
        break;
      }
  return out;
}

PowersetGC lift_to_classical(const FiniteGC &gc, std::size_t cap) {
  if (!gc.concrete)
    throw Error("lift_to_classical needs a finite concrete carrier");
  PowersetGC c;
  c.name = "classical(" + gc.name + ")";
  c.lower = all_downsets(gc.concrete, cap);
  c.upper = all_downsets(gc.abstract, cap);
  c.lower_leq = downset_leq;
  c.upper_leq = downset_leq;
  c.alpha = [gc](const DownSet &xs) { return lifted_alpha(gc, xs); };
  c.gamma = [gc](const DownSet &ys) { return lifted_gamma(gc, ys); };
  c.show_lower = show_downset;
  c.show_upper = show_downset;
  return c;
}

// ---- Kleisli ---------------------------------------------------------------

LawReport verify_kleisli(const KleisliGC &k) {
  LawReport r;
  require_same(k.kalpha.dom, k.concrete, "verify_kleisli");
  require_same(k.kalpha.cod, k.abstract, "verify_kleisli");
  require_same(k.kgamma.dom, k.abstract, "verify_kleisli");
  require_same(k.kgamma.cod, k.concrete, "verify_kleisli");
  const LawReport ra = verify_order_laws(k.kalpha), rg = verify_order_laws(k.kgamma);
  for (const auto &v : ra.violations())
    r.add("kalpha-" + v.law, v.witness);
  for (const auto &v : rg.violations())
    r.add("kgamma-" + v.law, v.witness);
  const auto ga = kleisli_compose(k.kgamma, k.kalpha);
  for (Elem x = 0; x < k.concrete->size(); ++x) {
    r.count();
    if (!ret(k.concrete, x).subset_of(ga(x)))
      r.add("KGC-Exp", k.concrete->name(x));
  }
  const auto ag = kleisli_compose(k.kalpha, k.kgamma);
  for (Elem y = 0; y < k.abstract->size(); ++y) {
    r.count();
    if (!ag(y).subset_of(ret(k.abstract, y)))
      r.add("KGC-Red", k.abstract->name(y));
  }
  return r;
}

KleisliGC lift_to_kleisli(const FiniteGC &gc) {
  if (!gc.concrete)
    throw Error("lift_to_kleisli needs a finite concrete carrier");
  KleisliGC k{gc.concrete, gc.abstract, pure(eta_map(gc)), {gc.abstract, gc.concrete, {}, false}};
  for (Elem y = 0; y < gc.abstract->size(); ++y)
    k.kgamma.table.push_back(mu_set(gc, y));
  return k;
}

FiniteGC lower_to_constructive(const KleisliGC &k) {
  const auto &C = *k.concrete;
  const auto &A = *k.abstract;
  std::vector<Elem> eta(C.size());
  for (Elem x = 0; x < C.size(); ++x) {
    std::optional<Elem> chosen;
    for (Elem y = 0; y < A.size(); ++y) {
      if (!(k.kalpha(x).contains(y) && k.kgamma(y).contains(x)))
        continue;
      if (!chosen)
        chosen = y;
      else if (!(A.leq(*chosen, y) && A.leq(y, *chosen)))
        throw LoweringError("abstraction of " + C.name(x) + " is not unique", C.name(x));
    }
    if (!chosen)
      throw LoweringError("no abstraction for " + C.name(x) +
                              ": expansive law fails",
                          C.name(x));
    eta[x] = *chosen;
  }
  MonotoneMap em{k.concrete, k.abstract, eta};
  FiniteGC gc;
  gc.name = "lowered";
  gc.abstract = k.abstract;
  gc.concrete = k.concrete;
  gc.eta = [eta](const Elem &x) { return eta.at(x); };
  auto kg = k.kgamma;
  gc.mu_member = [kg](const Elem &x, Elem y) { return kg(y).contains(x); };
  auto cp = k.concrete;
  gc.concrete_leq = [cp](const Elem &a, const Elem &b) { return cp->leq(a, b); };

  const auto pe = pure(em);
  for (Elem x = 0; x < C.size(); ++x)
    if (!(pe(x) == k.kalpha(x)))
      throw LoweringError("pure(eta) differs from kalpha at " + C.name(x), C.name(x));
  for (Elem y = 0; y < A.size(); ++y)
    for (Elem x = 0; x < C.size(); ++x)
      if (A.leq(eta[x], y) != k.kgamma(y).contains(x))
        throw LoweringError("mu differs from the inverse image of eta at " + C.name(x),
                            C.name(x));
  return gc;
}

bool check_unique_abstraction(const KleisliGC &k1, const KleisliGC &k2) {
  require_same(k1.concrete, k2.concrete, "check_unique_abstraction");
  require_same(k1.abstract, k2.abstract, "check_unique_abstraction");
  const bool a = k1.kalpha == k2.kalpha;
  const bool g = k1.kgamma == k2.kgamma;
  if (a != g)
    throw LawViolation(std::string("kalpha ") + (a ? "equal" : "differ") + " but kgamma " +
                       (g ? "equal" : "differ"));
  return a;
}

// ---- primitives ------------------------------------------------------------

FiniteGC identity_gc(const PosetRef &p) {
  FiniteGC gc = induce_mu(identity_map(p), "id");
  gc.mu_member = [p](const Elem &x, Elem y) { return p->leq(x, y); };
  return gc;
}

FiniteGC elementwise_gc(const MonotoneMap &f) {
  auto rep = verify_order_laws(f);
  if (!rep.ok())
    throw Error("elementwise_gc needs a monotone map; violation at " +
                rep.violations().front().witness);
  return induce_mu(f, "elementwise");
}

Elem join_all(const FinitePoset &p, const std::vector<Elem> &xs) {
  auto b = p.bottom();
  if (!b)
    throw MissingJoin("no bottom element: the empty join does not exist", "{}");
  Elem acc = *b;
  for (Elem x : xs) {
    auto j = p.join(acc, x);
    if (!j)
      throw MissingJoin("no join for " + p.name(acc) + " and " + p.name(x),
                        "(" + p.name(acc) + "," + p.name(x) + ")");
    acc = *j;
  }
  return acc;
}

PowersetGC lub_gc(const PosetRef &a, std::size_t cap) {
  for (Elem x = 0; x < a->size(); ++x)
    for (Elem y = 0; y < a->size(); ++y)
      if (!a->join(x, y))
        throw MissingJoin("not a join-semilattice", "(" + a->name(x) + "," + a->name(y) + ")");
  join_all(*a, {});
  PowersetGC c;
  c.name = "lub";
  c.lower = all_downsets(a, cap);
  for (Elem x = 0; x < a->size(); ++x)
    c.upper.push_back(ret(a, x));
  c.lower_leq = downset_leq;
  c.upper_leq = downset_leq;
  c.alpha = [a](const DownSet &xs) { return ret(a, join_all(*a, xs.members())); };
  c.gamma = [](const DownSet &ys) { return ys; };
  c.show_lower = show_downset;
  c.show_upper = show_downset;
  return c;
}

FiniteGC product_gc(const FiniteGC &a, const FiniteGC &b) {
  if (!a.concrete || !b.concrete)
    throw Error("finite product_gc needs finite concrete carriers");
  const auto conc = FinitePoset::product(a.concrete, b.concrete);
  const auto abs = FinitePoset::product(a.abstract, b.abstract);
  const std::size_t nbc = b.concrete->size(), nba = b.abstract->size();
  FiniteGC gc;
  gc.name = a.name + "*" + b.name;
  gc.concrete = conc;
  gc.abstract = abs;
  gc.eta = [a, b, nbc, nba](const Elem &x) { return a.eta(x / nbc) * nba + b.eta(x % nbc); };
  gc.mu_member = [a, b, nbc, nba](const Elem &x, Elem y) {
    return a.mu(x / nbc, y / nba) && b.mu(x % nbc, y % nba);
  };
  gc.concrete_leq = [conc](const Elem &x, const Elem &y) { return conc->leq(x, y); };
  return gc;
}

KleisliMap functional_alpha(const FiniteGC &in, const FiniteGC &out, const KleisliMap &f) {
  require_same(f.dom, in.concrete, "functional_alpha");
  require_same(f.cod, out.concrete, "functional_alpha");
  KleisliMap k{in.abstract, out.abstract, {}, false};
  for (Elem a = 0; a < in.abstract->size(); ++a)
    k.table.push_back(lifted_alpha(out, bind(mu_set(in, a), f)));
  return k;
}

KleisliMap functional_gamma(const FiniteGC &in, const FiniteGC &out, const KleisliMap &fsharp) {
  require_same(fsharp.dom, in.abstract, "functional_gamma");
  require_same(fsharp.cod, out.abstract, "functional_gamma");
  KleisliMap k{in.concrete, out.concrete, {}, false};
  for (Elem x = 0; x < in.concrete->size(); ++x)
    k.table.push_back(lifted_gamma(out, fsharp(in.eta(x))));
  return k;
}

// ---- independent attributes -------------------------------------------------

IndependentAttributes::IndependentAttributes(PosetRef a_, PosetRef b_)
    : a(std::move(a_)), b(std::move(b_)), product(FinitePoset::product(a, b)) {}

std::pair<DownSet, DownSet> IndependentAttributes::alpha(const DownSet &xy) const {
  require_same(xy.over(), product, "ia alpha");
  DownSet x(a), y(b);
  const std::size_t nb = b->size();
  for (Elem e : xy.members()) {
    x.mark(e / nb);
    y.mark(e % nb);
  }
  return {x, y};
}

DownSet IndependentAttributes::gamma(const DownSet &x, const DownSet &y) const {
  require_same(x.over(), a, "ia gamma");
  require_same(y.over(), b, "ia gamma");
  DownSet out(product);
  const std::size_t nb = b->size();
  for (Elem i : x.members())
    for (Elem j : y.members())
      out.mark(i * nb + j);
  return out;
}

ClassicalGC<DownSet, std::pair<DownSet, DownSet>>
IndependentAttributes::classical(std::size_t cap) const {
  using U = std::pair<DownSet, DownSet>;
  ClassicalGC<DownSet, U> c;
  c.name = "independent-attributes";
  c.lower = all_downsets(product, cap);
  const auto da = all_downsets(a, cap), db = all_downsets(b, cap);
  for (const auto &x : da)
    for (const auto &y : db)
      c.upper.emplace_back(x, y);
  c.lower_leq = downset_leq;
  c.upper_leq = [](const U &p, const U &q) {
    return p.first.subset_of(q.first) && p.second.subset_of(q.second);
  };
  IndependentAttributes self = *this;
  c.alpha = [self](const DownSet &xy) { return self.alpha(xy); };
  c.gamma = [self](const U &p) { return self.gamma(p.first, p.second); };
  c.show_lower = show_downset;
  c.show_upper = [](const U &p) { return "<" + p.first.to_string() + "," + p.second.to_string() + ">"; };
  return c;
}

// ---- variants ----------------------------------------------------------------

const char *variant_name(Variant v) {
  switch (v) {
  case Variant::eta_mu:
    return "eta-mu";
  case Variant::mu_mu:
    return "mu-mu";
  case Variant::eta_eta:
    return "eta-eta";
  case Variant::mu_eta:
    return "mu-eta";
  }
  return "?";
}

std::optional<Variant> parse_variant(const std::string &s) {
  for (Variant v : {Variant::eta_mu, Variant::mu_mu, Variant::eta_eta, Variant::mu_eta})
    if (s == variant_name(v))
      return v;
  return std::nullopt;
}

} // namespace cgc
