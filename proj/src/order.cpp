#include "cgc/order.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace cgc {

namespace {

std::vector<std::string> numbered(const char *prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(prefix + std::to_string(i));
  return out;
}

std::string pair_witness(const FinitePoset &p, Elem a, Elem b) {
  return "(" + p.name(a) + "," + p.name(b) + ")";
}

} // namespace

FinitePoset::FinitePoset(std::vector<std::string> names,
                         std::vector<std::uint8_t> leq)
    : names_(std::move(names)), leq_(std::move(leq)) {
  if (leq_.size() != names_.size() * names_.size())
    throw Error("order table has " + std::to_string(leq_.size()) +
                " entries, expected " +
                std::to_string(names_.size() * names_.size()));
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw Error("duplicate element name '" + names_[i] + "'");
}

PosetRef FinitePoset::make(std::vector<std::string> names,
                           std::vector<std::uint8_t> leq) {
  return std::make_shared<const FinitePoset>(std::move(names), std::move(leq));
}

PosetRef FinitePoset::from_relation(std::vector<std::string> names,
                                    const std::vector<std::pair<Elem, Elem>> &edges) {
  const std::size_t n = names.size();
  std::vector<std::uint8_t> t(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    t[i * n + i] = 1;
  for (auto [a, b] : edges) {
    if (a >= n || b >= n)
      throw UnknownElement("edge endpoint out of range");
    t[a * n + b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (t[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (t[k * n + j])
            t[i * n + j] = 1;
  return make(std::move(names), std::move(t));
}

PosetRef FinitePoset::chain(std::vector<std::string> names) {
  const std::size_t n = names.size();
  std::vector<std::uint8_t> t(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      t[i * n + j] = 1;
  return make(std::move(names), std::move(t));
}

PosetRef FinitePoset::chain(std::size_t n) { return chain(numbered("c", n)); }

PosetRef FinitePoset::discrete(std::vector<std::string> names) {
  const std::size_t n = names.size();
  std::vector<std::uint8_t> t(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    t[i * n + i] = 1;
  return make(std::move(names), std::move(t));
}

PosetRef FinitePoset::discrete(std::size_t n) { return discrete(numbered("d", n)); }

PosetRef FinitePoset::product(const PosetRef &a, const PosetRef &b) {
  const std::size_t na = a->size(), nb = b->size(), n = na * nb;
  std::vector<std::string> names;
  names.reserve(n);
  for (Elem i = 0; i < na; ++i)
    for (Elem j = 0; j < nb; ++j)
      names.push_back("(" + a->name(i) + "," + b->name(j) + ")");
  std::vector<std::uint8_t> t(n * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      t[x * n + y] = a->leq(x / nb, y / nb) && b->leq(x % nb, y % nb);
  return make(std::move(names), std::move(t));
}

const std::string &FinitePoset::name(Elem x) const {
  if (x >= names_.size())
    throw UnknownElement("element index " + std::to_string(x) + " out of range");
  return names_[x];
}

Elem FinitePoset::index_of(const std::string &name) const {
  for (Elem i = 0; i < names_.size(); ++i)
    if (names_[i] == name)
      return i;
  throw UnknownElement("unknown element '" + name + "'");
}

std::optional<Elem> FinitePoset::join(Elem x, Elem y) const {
  std::optional<Elem> best;
  for (Elem z = 0; z < size(); ++z) {
    if (!leq(x, z) || !leq(y, z))
      continue;
    if (!best || leq(z, *best))
      best = z;
  }
  if (!best)
    return std::nullopt;
  for (Elem z = 0; z < size(); ++z)
    if (leq(x, z) && leq(y, z) && !leq(*best, z))
      return std::nullopt;
  return best;
}

std::optional<Elem> FinitePoset::meet(Elem x, Elem y) const {
  std::optional<Elem> best;
  for (Elem z = 0; z < size(); ++z) {
    if (!leq(z, x) || !leq(z, y))
      continue;
    if (!best || leq(*best, z))
      best = z;
  }
  if (!best)
    return std::nullopt;
  for (Elem z = 0; z < size(); ++z)
    if (leq(z, x) && leq(z, y) && !leq(z, *best))
      return std::nullopt;
  return best;
}

std::optional<Elem> FinitePoset::bottom() const {
  for (Elem b = 0; b < size(); ++b) {
    bool all = true;
    for (Elem x = 0; x < size() && all; ++x)
      all = leq(b, x);
    if (all)
      return b;
  }
  return std::nullopt;
}

std::optional<Elem> FinitePoset::top() const {
  for (Elem t = 0; t < size(); ++t) {
    bool all = true;
    for (Elem x = 0; x < size() && all; ++x)
      all = leq(x, t);
    if (all)
      return t;
  }
  return std::nullopt;
}

std::vector<Elem> FinitePoset::linear_extension() const {
  // Strictly below implies strictly fewer elements below.
  std::vector<std::size_t> below(size(), 0);
  for (Elem x = 0; x < size(); ++x)
    for (Elem y = 0; y < size(); ++y)
      below[x] += leq(y, x);
  std::vector<Elem> order(size());
  for (Elem i = 0; i < size(); ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return below[a] < below[b]; });
  return order;
}

bool same_poset(const PosetRef &a, const PosetRef &b) {
  if (a == b)
    return true;
  if (!a || !b)
    return false;
  return *a == *b;
}

void require_same(const PosetRef &a, const PosetRef &b, const char *what) {
  if (!same_poset(a, b))
    throw PosetMismatch(std::string("poset mismatch in ") + what);
}

// ---- DownSet -------------------------------------------------------------

DownSet::DownSet(PosetRef over)
    : over_(std::move(over)), bits_((over_ ? over_->size() : 0) / 64 + 1, 0) {}

DownSet DownSet::full(PosetRef over) {
  DownSet d(over);
  for (Elem x = 0; x < over->size(); ++x)
    d.mark(x);
  return d;
}

DownSet DownSet::from_marks(PosetRef over, const std::vector<Elem> &marked) {
  DownSet d(over);
  for (Elem x : marked) {
    if (x >= d.over_->size())
      throw UnknownElement("element index " + std::to_string(x) + " out of range");
    d.mark(x);
  }
  return d;
}

DownSet DownSet::closure_of(PosetRef over, const std::vector<Elem> &generators) {
  DownSet d(over);
  for (Elem g : generators)
    d.add_closed(g);
  return d;
}

void DownSet::add_closed(Elem x) {
  if (x >= over_->size())
    throw UnknownElement("element index " + std::to_string(x) + " out of range");
  for (Elem y = 0; y < over_->size(); ++y)
    if (over_->leq(y, x))
      mark(y);
}

bool DownSet::is_empty() const {
  for (auto w : bits_)
    if (w)
      return false;
  return true;
}

std::size_t DownSet::count() const {
  std::size_t c = 0;
  for (auto w : bits_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Elem> DownSet::members() const {
  std::vector<Elem> out;
  if (!over_)
    return out;
  for (Elem x = 0; x < over_->size(); ++x)
    if (contains(x))
      out.push_back(x);
  return out;
}

bool DownSet::subset_of(const DownSet &o) const {
  require_same(over_, o.over_, "subset_of");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~o.bits_[i])
      return false;
  return true;
}

DownSet DownSet::unite(const DownSet &o) const {
  DownSet r = *this;
  r.unite_in_place(o);
  return r;
}

DownSet DownSet::intersect(const DownSet &o) const {
  require_same(over_, o.over_, "intersect");
  DownSet r = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    r.bits_[i] &= o.bits_[i];
  return r;
}

void DownSet::unite_in_place(const DownSet &o) {
  require_same(over_, o.over_, "unite");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    bits_[i] |= o.bits_[i];
}

std::vector<Elem> DownSet::maximal() const {
  std::vector<Elem> out;
  for (Elem x : members()) {
    bool dominated = false;
    for (Elem y : members())
      if (over_->lt(x, y)) {
        dominated = true;
        break;
      }
    if (!dominated)
      out.push_back(x);
  }
  return out;
}

bool DownSet::operator==(const DownSet &o) const {
  return same_poset(over_, o.over_) && bits_ == o.bits_;
}

bool DownSet::operator<(const DownSet &o) const { return bits_ < o.bits_; }

std::string DownSet::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (Elem x : members()) {
    if (!first)
      os << ",";
    os << over_->name(x);
    first = false;
  }
  os << "}";
  return os.str();
}

std::vector<DownSet> all_downsets(const PosetRef &p, std::size_t cap) {
  const auto order = p->linear_extension();
  std::vector<DownSet> out;
  DownSet cur(p);
  // Decide elements bottom-up; an element may be included only when
  // everything strictly below it already is.
  auto rec = [&](auto &&self, std::size_t i) -> void {
    if (i == order.size()) {
      if (out.size() >= cap)
        throw CapacityExceeded("more than " + std::to_string(cap) + " downsets");
      out.push_back(cur);
      return;
    }
    const Elem x = order[i];
    self(self, i + 1);
    bool closed = true;
    for (Elem y = 0; y < p->size() && closed; ++y)
      if (p->lt(y, x) && !cur.contains(y))
        closed = false;
    if (closed) {
      DownSet saved = cur;
      cur.mark(x);
      self(self, i + 1);
      cur = saved;
    }
  };
  rec(rec, 0);
  return out;
}

// ---- maps and the monad --------------------------------------------------

bool kleisli_leq(const KleisliMap &f, const KleisliMap &g) {
  require_same(f.dom, g.dom, "kleisli_leq");
  require_same(f.cod, g.cod, "kleisli_leq");
  for (Elem x = 0; x < f.dom->size(); ++x)
    if (!f(x).subset_of(g(x)))
      return false;
  return true;
}

DownSet ret(const PosetRef &p, Elem x) {
  if (x >= p->size())
    throw UnknownElement("element index " + std::to_string(x) + " out of range");
  DownSet d(p);
  d.add_closed(x);
  return d;
}

DownSet bind(const DownSet &xs, const KleisliMap &f) {
  require_same(xs.over(), f.dom, "bind");
  DownSet out(f.cod);
  for (Elem x : xs.members())
    out.unite_in_place(f(x));
  return out;
}

KleisliMap kleisli_compose(const KleisliMap &g, const KleisliMap &f) {
  require_same(f.cod, g.dom, "kleisli_compose");
  KleisliMap h{f.dom, g.cod, {}, f.pure && g.pure};
  h.table.reserve(f.dom->size());
  for (Elem x = 0; x < f.dom->size(); ++x)
    h.table.push_back(bind(f(x), g));
  return h;
}

KleisliMap pure(const MonotoneMap &f) {
  KleisliMap k{f.dom, f.cod, {}, true};
  k.table.reserve(f.dom->size());
  for (Elem x = 0; x < f.dom->size(); ++x)
    k.table.push_back(ret(f.cod, f(x)));
  return k;
}

MonotoneMap identity_map(const PosetRef &p) {
  MonotoneMap m{p, p, {}};
  for (Elem x = 0; x < p->size(); ++x)
    m.table.push_back(x);
  return m;
}

KleisliMap ret_map(const PosetRef &p) { return pure(identity_map(p)); }

// ---- law checks ------------------------------------------------------------

LawReport verify_order_laws(const FinitePoset &p) {
  LawReport r;
  const std::size_t n = p.size();
  for (Elem x = 0; x < n; ++x) {
    r.count();
    if (!p.leq(x, x))
      r.add("Refl", p.name(x));
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      r.count();
      if (x != y && p.leq(x, y) && p.leq(y, x))
        if (x < y)
          r.add("Antisym", pair_witness(p, x, y));
      for (Elem z = 0; z < n; ++z) {
        r.count();
        if (p.leq(x, y) && p.leq(y, z) && !p.leq(x, z))
          r.add("Trans", "(" + p.name(x) + "," + p.name(y) + "," + p.name(z) + ")");
      }
    }
  return r;
}

LawReport verify_order_laws(const MonotoneMap &f) {
  LawReport r;
  if (f.table.size() != f.dom->size()) {
    r.add("Total", "table size " + std::to_string(f.table.size()));
    return r;
  }
  for (Elem x = 0; x < f.dom->size(); ++x) {
    if (f(x) >= f.cod->size())
      r.add("Total", f.dom->name(x));
  }
  if (!r.ok())
    return r;
  for (Elem x = 0; x < f.dom->size(); ++x)
    for (Elem y = 0; y < f.dom->size(); ++y) {
      if (!f.dom->leq(x, y))
        continue;
      r.count();
      if (!f.cod->leq(f(x), f(y)))
        r.add("FunMon", pair_witness(*f.dom, x, y));
    }
  return r;
}

LawReport verify_order_laws(const DownSet &xs) {
  LawReport r;
  const auto &p = *xs.over();
  for (Elem x = 0; x < p.size(); ++x) {
    if (!xs.contains(x))
      continue;
    for (Elem y = 0; y < p.size(); ++y) {
      if (!p.leq(y, x))
        continue;
      r.count();
      if (!xs.contains(y))
        r.add("PowerMon", pair_witness(p, y, x));
    }
  }
  return r;
}

LawReport verify_order_laws(const KleisliMap &f) {
  LawReport r;
  if (f.table.size() != f.dom->size()) {
    r.add("Total", "table size " + std::to_string(f.table.size()));
    return r;
  }
  for (Elem x = 0; x < f.dom->size(); ++x) {
    if (!same_poset(f(x).over(), f.cod)) {
      r.add("Total", f.dom->name(x));
      continue;
    }
    auto sub = verify_order_laws(f(x));
    for (const auto &v : sub.violations())
      r.add(v.law, f.dom->name(x) + ":" + v.witness);
    r.count(sub.instances());
  }
  if (!r.ok())
    return r;
  for (Elem x = 0; x < f.dom->size(); ++x)
    for (Elem y = 0; y < f.dom->size(); ++y) {
      if (!f.dom->leq(x, y))
        continue;
      r.count();
      if (!f(x).subset_of(f(y)))
        r.add("FunMon", pair_witness(*f.dom, x, y));
    }
  return r;
}

// ---- generators ------------------------------------------------------------

PosetRef random_poset(std::mt19937_64 &rng, std::size_t n, double edge_prob) {
  std::bernoulli_distribution coin(edge_prob);
  std::vector<std::pair<Elem, Elem>> edges;
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i + 1; j < n; ++j)
      if (coin(rng))
        edges.emplace_back(i, j);
  return FinitePoset::from_relation(numbered("p", n), edges);
}

MonotoneMap random_monotone(std::mt19937_64 &rng, const PosetRef &dom,
                            const PosetRef &cod) {
  const auto order = dom->linear_extension();
  MonotoneMap m{dom, cod, std::vector<Elem>(dom->size(), 0)};
  std::vector<Elem> cands;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Elem x = order[i];
    cands.clear();
    for (Elem c = 0; c < cod->size(); ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (dom->leq(order[j], x) && !cod->leq(m.table[order[j]], c))
          ok = false;
      if (ok)
        cands.push_back(c);
    }
    if (cands.empty()) {
      // No upper bound for the values below x: fall back to a constant map.
      std::uniform_int_distribution<Elem> pick(0, cod->size() - 1);
      std::fill(m.table.begin(), m.table.end(), pick(rng));
      return m;
    }
    std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
    m.table[x] = cands[pick(rng)];
  }
  return m;
}

KleisliMap random_kleisli(std::mt19937_64 &rng, const PosetRef &dom,
                          const PosetRef &cod, double density) {
  std::bernoulli_distribution coin(density);
  KleisliMap k{dom, cod, std::vector<DownSet>(dom->size(), DownSet(cod)), false};
  for (Elem x : dom->linear_extension()) {
    DownSet d(cod);
    for (Elem c = 0; c < cod->size(); ++c)
      if (coin(rng))
        d.add_closed(c);
    for (Elem y = 0; y < dom->size(); ++y)
      if (dom->lt(y, x))
        d.unite_in_place(k.table[y]);
    k.table[x] = d;
  }
  return k;
}

std::vector<MonotoneMap> all_monotone_maps(const PosetRef &dom, const PosetRef &cod,
                                           std::size_t cap) {
  const auto order = dom->linear_extension();
  std::vector<MonotoneMap> out;
  MonotoneMap cur{dom, cod, std::vector<Elem>(dom->size(), 0)};
  auto rec = [&](auto &&self, std::size_t i) -> void {
    if (i == order.size()) {
      if (out.size() >= cap)
        throw CapacityExceeded("more than " + std::to_string(cap) + " monotone maps");
      out.push_back(cur);
      return;
    }
    const Elem x = order[i];
    for (Elem c = 0; c < cod->size(); ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const Elem y = order[j];
        if (dom->leq(y, x) && !cod->leq(cur.table[y], c))
          ok = false;
      }
      if (!ok)
        continue;
      cur.table[x] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

} // namespace cgc
