#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cgc/order.hpp"

namespace cgc {

/// Extraction function eta plus decidable membership mu. The concrete side is
/// either a FinitePoset (C = Elem, `concrete` set) or an arbitrary carrier that
/// is only ever sampled.
template <class C> struct ConstructiveGC {
  std::string name;
  PosetRef abstract;
  std::function<Elem(const C &)> eta;
  std::function<bool(const C &, Elem)> mu_member;
  /// Order on the concrete carrier. Empty means discrete.
  std::function<bool(const C &, const C &)> concrete_leq;
  std::function<std::string(const C &)> show;
  PosetRef concrete;

  bool mu(const C &x, Elem y) const { return mu_member(x, y); }
  std::string show_elem(const C &x) const {
    if (show)
      return show(x);
    if constexpr (std::is_same_v<C, Elem>) {
      if (concrete)
        return concrete->name(x);
      return std::to_string(x);
    } else if constexpr (requires(std::ostream &os, const C &c) { os << c; }) {
      std::ostringstream os;
      os << x;
      return os.str();
    } else {
      return "<element>";
    }
  }
};

using FiniteGC = ConstructiveGC<Elem>;

/// Classical connection between two orders given by functions. The carriers
/// are finite enumerations used by the law checker; they need not be
/// materialized as FinitePoset tables (powersets of products get large fast).
template <class L, class U> struct ClassicalGC {
  std::string name;
  std::vector<L> lower;
  std::vector<U> upper;
  std::function<bool(const L &, const L &)> lower_leq;
  std::function<bool(const U &, const U &)> upper_leq;
  std::function<U(const L &)> alpha;
  std::function<L(const U &)> gamma;
  std::function<std::string(const L &)> show_lower;
  std::function<std::string(const U &)> show_upper;
};

struct KleisliGC {
  PosetRef concrete;
  PosetRef abstract;
  KleisliMap kalpha; // concrete -> D(abstract)
  KleisliMap kgamma; // abstract -> D(concrete)
};

class LawViolation : public Error {
public:
  using Error::Error;
};

/// The lub connection needs a join for some pair of elements and there is none.
class MissingJoin : public Error {
public:
  MissingJoin(const std::string &what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::string &witness() const { return witness_; }

private:
  std::string witness_;
};

class InadequateWitnesses : public Error {
public:
  using Error::Error;
};

// ---- checking constructive connections -----------------------------------

/// Correspondence, expansive and reductive laws over probe x abstract, plus
/// monotonicity of mu in its abstract argument, and (when a concrete order is
/// known) monotonicity of eta and downward closure of mu over probe pairs.
template <class C>
LawReport verify_cgc(const ConstructiveGC<C> &gc, const std::vector<C> &probe) {
  LawReport r;
  const auto &A = *gc.abstract;
  for (const C &x : probe) {
    const Elem ex = gc.eta(x);
    if (ex >= A.size()) {
      r.add("EtaRange", gc.show_elem(x));
      continue;
    }
    r.count();
    if (!gc.mu(x, ex))
      r.add("CGC-Exp", gc.show_elem(x));
    for (Elem y = 0; y < A.size(); ++y) {
      r.count();
      const bool m = gc.mu(x, y);
      const bool l = A.leq(ex, y);
      if (m != l)
        r.add("CGC-Corr", gc.show_elem(x) + "@" + A.name(y));
      if (m && !l)
        r.add("CGC-Red", gc.show_elem(x) + "@" + A.name(y));
      if (!m)
        continue;
      for (Elem y2 = 0; y2 < A.size(); ++y2)
        if (A.leq(y, y2) && !gc.mu(x, y2))
          r.add("MuMon", gc.show_elem(x) + "@" + A.name(y) + "<=" + A.name(y2));
    }
  }
  if (gc.concrete_leq) {
    for (const C &a : probe)
      for (const C &b : probe) {
        if (!gc.concrete_leq(a, b))
          continue;
        r.count();
        if (!A.leq(gc.eta(a), gc.eta(b)))
          r.add("EtaMon", gc.show_elem(a) + "<=" + gc.show_elem(b));
        for (Elem y = 0; y < A.size(); ++y)
          if (gc.mu(b, y) && !gc.mu(a, y))
            r.add("MuDown", gc.show_elem(a) + "<=" + gc.show_elem(b) + "@" + A.name(y));
      }
  }
  return r;
}

LawReport verify_cgc(const FiniteGC &gc);

/// mu(y) := { x | eta(x) <= y }
template <class C>
ConstructiveGC<C> induce_mu(std::string name, PosetRef abstract,
                            std::function<Elem(const C &)> eta,
                            std::function<bool(const C &, const C &)> concrete_leq = {}) {
  ConstructiveGC<C> gc;
  gc.name = std::move(name);
  gc.abstract = abstract;
  gc.eta = eta;
  gc.mu_member = [abstract, eta](const C &x, Elem y) { return abstract->leq(eta(x), y); };
  gc.concrete_leq = std::move(concrete_leq);
  return gc;
}

FiniteGC induce_mu(const MonotoneMap &eta, std::string name = "induced");

/// The set mu(y) over a finite concrete poset.
DownSet mu_set(const FiniteGC &gc, Elem y);
MonotoneMap eta_map(const FiniteGC &gc);

// ---- classical connections -------------------------------------------------

template <class L, class U>
LawReport verify_classical(const ClassicalGC<L, U> &g) {
  LawReport r;
  auto sl = [&](const L &x) { return g.show_lower ? g.show_lower(x) : std::string("?"); };
  auto su = [&](const U &y) { return g.show_upper ? g.show_upper(y) : std::string("?"); };
  std::vector<U> alphas;
  alphas.reserve(g.lower.size());
  for (const L &x : g.lower)
    alphas.push_back(g.alpha(x));
  std::vector<L> gammas;
  gammas.reserve(g.upper.size());
  for (const U &y : g.upper)
    gammas.push_back(g.gamma(y));
  for (std::size_t i = 0; i < g.lower.size(); ++i)
    for (std::size_t j = 0; j < g.upper.size(); ++j) {
      r.count();
      if (g.upper_leq(alphas[i], g.upper[j]) != g.lower_leq(g.lower[i], gammas[j]))
        r.add("GC-Corr", sl(g.lower[i]) + "@" + su(g.upper[j]));
    }
  for (std::size_t i = 0; i < g.lower.size(); ++i)
    for (std::size_t k = 0; k < g.lower.size(); ++k)
      if (g.lower_leq(g.lower[i], g.lower[k])) {
        r.count();
        if (!g.upper_leq(alphas[i], alphas[k]))
          r.add("AlphaMon", sl(g.lower[i]) + "<=" + sl(g.lower[k]));
      }
  for (std::size_t j = 0; j < g.upper.size(); ++j)
    for (std::size_t k = 0; k < g.upper.size(); ++k)
      if (g.upper_leq(g.upper[j], g.upper[k])) {
        r.count();
        if (!g.lower_leq(gammas[j], gammas[k]))
          r.add("GammaMon", su(g.upper[j]) + "<=" + su(g.upper[k]));
      }
  return r;
}

using PowersetGC = ClassicalGC<DownSet, DownSet>;

/// alpha(X) = {eta(x) | x in X} closed downward, gamma(Y) = union of mu(y).
PowersetGC lift_to_classical(const FiniteGC &gc, std::size_t cap = 1u << 16);
DownSet lifted_alpha(const FiniteGC &gc, const DownSet &xs);
DownSet lifted_gamma(const FiniteGC &gc, const DownSet &ys);

// ---- Kleisli connections ---------------------------------------------------

LawReport verify_kleisli(const KleisliGC &k);
KleisliGC lift_to_kleisli(const FiniteGC &gc);
/// Picks, for each concrete x, the first abstract y (in index order) with
/// y in kalpha(x) and x in kgamma(y); throws LoweringError naming x when no
/// such y exists or when the resulting eta/mu do not reproduce the input.
FiniteGC lower_to_constructive(const KleisliGC &k);
/// Returns kalpha1 == kalpha2; throws LawViolation when that disagrees with
/// kgamma1 == kgamma2 (the inputs then cannot both be Kleisli connections).
bool check_unique_abstraction(const KleisliGC &k1, const KleisliGC &k2);

// ---- primitives ------------------------------------------------------------

FiniteGC identity_gc(const PosetRef &p);
FiniteGC elementwise_gc(const MonotoneMap &f);
/// Classical lub connection between D(A) and the principal downsets of A:
/// alpha(X) = ret(join X), gamma is inclusion. Requires all binary joins and a
/// bottom (the join of the empty set).
PowersetGC lub_gc(const PosetRef &a, std::size_t cap = 1u << 16);
Elem join_all(const FinitePoset &p, const std::vector<Elem> &xs);

// ---- connectives -----------------------------------------------------------

/// eta = outer.eta . inner.eta; mu(z) = bind(outer.mu(z), inner.mu)
template <class C>
ConstructiveGC<C> compose_gc(const FiniteGC &outer, const ConstructiveGC<C> &inner) {
  require_same(outer.concrete, inner.abstract, "compose_gc");
  ConstructiveGC<C> gc;
  gc.name = outer.name + "." + inner.name;
  gc.abstract = outer.abstract;
  gc.eta = [outer, inner](const C &x) { return outer.eta(inner.eta(x)); };
  gc.mu_member = [outer, inner](const C &x, Elem z) {
    for (Elem b = 0; b < inner.abstract->size(); ++b)
      if (outer.mu(b, z) && inner.mu(x, b))
        return true;
    return false;
  };
  gc.concrete_leq = inner.concrete_leq;
  gc.show = inner.show;
  gc.concrete = inner.concrete;
  return gc;
}

/// Componentwise connection over the product poset of the abstract sides.
template <class C1, class C2>
ConstructiveGC<std::pair<C1, C2>> product_gc(const ConstructiveGC<C1> &a,
                                             const ConstructiveGC<C2> &b) {
  using P = std::pair<C1, C2>;
  ConstructiveGC<P> gc;
  gc.name = a.name + "*" + b.name;
  gc.abstract = FinitePoset::product(a.abstract, b.abstract);
  const std::size_t nb = b.abstract->size();
  gc.eta = [a, b, nb](const P &x) { return a.eta(x.first) * nb + b.eta(x.second); };
  gc.mu_member = [a, b, nb](const P &x, Elem y) {
    return a.mu(x.first, y / nb) && b.mu(x.second, y % nb);
  };
  if (a.concrete_leq || b.concrete_leq)
    gc.concrete_leq = [a, b](const P &x, const P &y) {
      const bool l = a.concrete_leq ? a.concrete_leq(x.first, y.first) : x.first == y.first;
      const bool r = b.concrete_leq ? b.concrete_leq(x.second, y.second) : x.second == y.second;
      return l && r;
    };
  gc.show = [a, b](const P &x) {
    return "(" + a.show_elem(x.first) + "," + b.show_elem(x.second) + ")";
  };
  return gc;
}

/// The product connection over finite posets, itself finite.
FiniteGC product_gc(const FiniteGC &a, const FiniteGC &b);

/// Best abstraction of a relation f: x# -> closure{eta_B(y) | x in mu_A(x#),
/// y in f(x)}, with mu_A(x#) sampled from probe.
template <class C, class D>
KleisliMap functional_alpha(const ConstructiveGC<C> &in, const ConstructiveGC<D> &out,
                            const std::function<std::vector<D>(const C &)> &f,
                            const std::vector<C> &probe) {
  KleisliMap k{in.abstract, out.abstract, {}, false};
  for (Elem a = 0; a < in.abstract->size(); ++a) {
    DownSet d(out.abstract);
    for (const C &x : probe)
      if (in.mu(x, a))
        for (const D &y : f(x))
          d.add_closed(out.eta(y));
    k.table.push_back(std::move(d));
  }
  return k;
}

/// Concretization of an abstract transformer as a relation:
/// (x, y) related iff y in mu_B*(f#(eta_A(x))).
template <class C, class D>
std::function<bool(const C &, const D &)>
functional_gamma(const ConstructiveGC<C> &in, const ConstructiveGC<D> &out,
                 const KleisliMap &fsharp) {
  return [in, out, fsharp](const C &x, const D &y) {
    for (Elem b : fsharp(in.eta(x)).members())
      if (out.mu(y, b))
        return true;
    return false;
  };
}

KleisliMap functional_alpha(const FiniteGC &in, const FiniteGC &out, const KleisliMap &f);
KleisliMap functional_gamma(const FiniteGC &in, const FiniteGC &out, const KleisliMap &fsharp);

/// Independent attributes: D(A x B) <-> D(A) x D(B).
struct IndependentAttributes {
  PosetRef a;
  PosetRef b;
  PosetRef product;

  IndependentAttributes(PosetRef a, PosetRef b);
  std::pair<DownSet, DownSet> alpha(const DownSet &xy) const;
  DownSet gamma(const DownSet &x, const DownSet &y) const;
  ClassicalGC<DownSet, std::pair<DownSet, DownSet>> classical(std::size_t cap = 1u << 18) const;
};

// ---- soundness and completeness -------------------------------------------

enum class Variant { eta_mu, mu_mu, eta_eta, mu_eta };

const char *variant_name(Variant v);
std::optional<Variant> parse_variant(const std::string &s);

namespace detail {

template <class C, class D>
bool sound_instance(Variant v, const ConstructiveGC<C> &in, const ConstructiveGC<D> &out,
                    const std::function<std::vector<D>(const C &)> &f,
                    const std::function<DownSet(Elem)> &fsharp, const C &x,
                    std::vector<std::string> *bad_at) {
  const auto &A = *in.abstract;
  bool ok = true;
  auto result = f(x);
  auto holds_mu = [&](const DownSet &ys, const D &x2) {
    for (Elem y2 : ys.members())
      if (out.mu(x2, y2))
        return true;
    return false;
  };
  switch (v) {
  case Variant::eta_eta:
  case Variant::mu_eta: {
    const DownSet fs = fsharp(in.eta(x));
    for (const D &x2 : result) {
      const bool good = v == Variant::eta_eta ? fs.contains(out.eta(x2)) : holds_mu(fs, x2);
      if (!good)
        ok = false;
    }
    break;
  }
  case Variant::eta_mu:
  case Variant::mu_mu:
    for (Elem y = 0; y < A.size(); ++y) {
      if (!in.mu(x, y))
        continue;
      const DownSet fs = fsharp(y);
      for (const D &x2 : result) {
        const bool good = v == Variant::eta_mu ? fs.contains(out.eta(x2)) : holds_mu(fs, x2);
        if (!good) {
          ok = false;
          if (bad_at)
            bad_at->push_back(A.name(y));
        }
      }
    }
    break;
  }
  return ok;
}

} // namespace detail

/// Soundness of fsharp w.r.t. the relation f in the chosen variant:
///   eta_mu: x in mu(y), x' in f(x)  =>  eta(x') in f#(y)
///   mu_mu:  x in mu(y), x' in f(x)  =>  x' in mu*(f#(y))
///   eta_eta: x' in f(x)             =>  eta(x') in f#(eta(x))
///   mu_eta:  x' in f(x)             =>  x' in mu*(f#(eta(x)))
/// With `exhaustive` (probe is the whole concrete carrier) all four variants
/// are evaluated and a "variants-disagree" violation is added if their
/// verdicts differ.
template <class C, class D>
LawReport check_soundness(const ConstructiveGC<C> &in, const ConstructiveGC<D> &out,
                          const std::function<std::vector<D>(const C &)> &f,
                          const std::function<DownSet(Elem)> &fsharp, Variant v,
                          const std::vector<C> &probe, bool exhaustive = false) {
  LawReport r;
  const std::string law = std::string("snd-") + variant_name(v);
  std::set<std::string> seen;
  for (const C &x : probe) {
    r.count();
    if (!detail::sound_instance(v, in, out, f, fsharp, x, nullptr)) {
      auto w = in.show_elem(x);
      if (seen.insert(w).second)
        r.add(law, w);
    }
  }
  if (exhaustive) {
    bool verdicts[4];
    const Variant all[4] = {Variant::eta_mu, Variant::mu_mu, Variant::eta_eta, Variant::mu_eta};
    for (int i = 0; i < 4; ++i) {
      verdicts[i] = true;
      for (const C &x : probe)
        if (!detail::sound_instance(all[i], in, out, f, fsharp, x, nullptr)) {
          verdicts[i] = false;
          break;
        }
    }
    for (int i = 1; i < 4; ++i)
      if (verdicts[i] != verdicts[0]) {
        std::string w;
        for (int j = 0; j < 4; ++j)
          w += std::string(variant_name(all[j])) + "=" + (verdicts[j] ? "pass" : "fail") +
               (j < 3 ? "," : "");
        r.add("variants-disagree", w);
        break;
      }
  }
  return r;
}

/// Per abstract element, concrete representatives used as the lower bound for
/// optimality checks on carriers that cannot be enumerated.
template <class C> using Witnesses = std::map<Elem, std::vector<C>>;

/// Completeness in the chosen variant:
///   eta_mu (optimal): sound, and f#(y) within closure{eta(x') | w in W(y), x' in f(w)}
///   eta_eta: closure{eta(x') | x' in f(x)} == f#(eta(x))
///   mu_eta (precise): mu*(f#(eta(x))) == f(x) on out_probe
///   mu_mu: mu*(f#(y)) == f*(mu(y)) on out_probe, mu(y) sampled from probe
/// For eta_mu without witnesses the probe must be exhaustive; otherwise this
/// throws InadequateWitnesses.
template <class C, class D>
LawReport check_completeness(const ConstructiveGC<C> &in, const ConstructiveGC<D> &out,
                             const std::function<std::vector<D>(const C &)> &f,
                             const std::function<DownSet(Elem)> &fsharp, Variant v,
                             const std::vector<C> &probe, const std::vector<D> &out_probe,
                             bool exhaustive = false,
                             const std::type_identity_t<std::optional<Witnesses<C>>> &witnesses =
                                 std::nullopt) {
  LawReport r;
  const std::string law = std::string("cmp-") + variant_name(v);
  const auto &A = *in.abstract;
  auto in_f = [&](const D &x2, const std::vector<D> &ys) {
    for (const D &y : ys) {
      if (y == x2)
        return true;
      if (out.concrete_leq && out.concrete_leq(x2, y))
        return true;
    }
    return false;
  };
  auto conc = [&](const DownSet &ys, const D &x2) {
    for (Elem b : ys.members())
      if (out.mu(x2, b))
        return true;
    return false;
  };
  switch (v) {
  case Variant::eta_mu: {
    if (!witnesses && !exhaustive)
      throw InadequateWitnesses(
          "optimality over a sampled carrier needs a declared witness set");
    r.merge(check_soundness(in, out, f, fsharp, Variant::eta_mu, probe, false));
    for (Elem y = 0; y < A.size(); ++y) {
      r.count();
      DownSet lower(out.abstract);
      std::vector<C> ws;
      if (witnesses) {
        auto it = witnesses->find(y);
        if (it != witnesses->end())
          ws = it->second;
      } else {
        for (const C &x : probe)
          if (in.mu(x, y))
            ws.push_back(x);
      }
      for (const C &w : ws)
        for (const D &x2 : f(w))
          lower.add_closed(out.eta(x2));
      if (!fsharp(y).subset_of(lower))
        r.add(law, A.name(y));
    }
    if (witnesses)
      r.note("witness adequacy for the lower bound is the caller's declared obligation");
    break;
  }
  case Variant::eta_eta:
    for (const C &x : probe) {
      r.count();
      DownSet img(out.abstract);
      for (const D &x2 : f(x))
        img.add_closed(out.eta(x2));
      if (!(img == fsharp(in.eta(x))))
        r.add(law, in.show_elem(x));
    }
    break;
  case Variant::mu_eta:
    for (const C &x : probe) {
      r.count();
      const DownSet fs = fsharp(in.eta(x));
      const auto fx = f(x);
      for (const D &x2 : out_probe)
        if (conc(fs, x2) != in_f(x2, fx)) {
          r.add(law, in.show_elem(x));
          break;
        }
    }
    r.note("set equality checked on the declared output probe");
    break;
  case Variant::mu_mu:
    for (Elem y = 0; y < A.size(); ++y) {
      r.count();
      const DownSet fs = fsharp(y);
      std::vector<D> image;
      for (const C &x : probe)
        if (in.mu(x, y))
          for (const D &x2 : f(x))
            image.push_back(x2);
      for (const D &x2 : out_probe)
        if (conc(fs, x2) != in_f(x2, image)) {
          r.add(law, A.name(y));
          break;
        }
    }
    r.note("set equality checked on the declared output probe");
    break;
  }
  return r;
}

} // namespace cgc
