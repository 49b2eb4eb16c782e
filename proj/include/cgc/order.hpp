#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cgc/error.hpp"
#include "cgc/report.hpp"

namespace cgc {

using Elem = std::size_t;

class FinitePoset;
using PosetRef = std::shared_ptr<const FinitePoset>;

/// A finite poset with a materialized order table. The table is stored as
/// given; verify_order_laws() decides whether it is actually a partial order.
class FinitePoset {
public:
  FinitePoset(std::vector<std::string> names, std::vector<std::uint8_t> leq);

  static PosetRef make(std::vector<std::string> names,
                       std::vector<std::uint8_t> leq);
  /// Reflexive-transitive closure of the given (below, above) pairs.
  static PosetRef from_relation(std::vector<std::string> names,
                                const std::vector<std::pair<Elem, Elem>> &edges);
  static PosetRef chain(std::vector<std::string> names);
  static PosetRef chain(std::size_t n);
  static PosetRef discrete(std::vector<std::string> names);
  static PosetRef discrete(std::size_t n);
  /// Componentwise order; element (a, b) has index a * |b| + b.
  static PosetRef product(const PosetRef &a, const PosetRef &b);

  std::size_t size() const { return names_.size(); }
  const std::string &name(Elem x) const;
  const std::vector<std::string> &names() const { return names_; }
  Elem index_of(const std::string &name) const;

  bool leq(Elem x, Elem y) const { return leq_[x * names_.size() + y] != 0; }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }

  std::optional<Elem> join(Elem x, Elem y) const;
  std::optional<Elem> meet(Elem x, Elem y) const;
  std::optional<Elem> bottom() const;
  std::optional<Elem> top() const;

  /// Elements sorted so that x below y implies x comes first.
  std::vector<Elem> linear_extension() const;

  bool operator==(const FinitePoset &o) const {
    return names_ == o.names_ && leq_ == o.leq_;
  }

private:
  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
};

bool same_poset(const PosetRef &a, const PosetRef &b);
void require_same(const PosetRef &a, const PosetRef &b, const char *what);

/// A subset of a finite poset. Construction does not force downward closure,
/// so malformed sets can be built and reported on.
class DownSet {
public:
  DownSet() = default;
  explicit DownSet(PosetRef over);

  static DownSet empty(PosetRef over) { return DownSet(std::move(over)); }
  static DownSet full(PosetRef over);
  static DownSet from_marks(PosetRef over, const std::vector<Elem> &marked);
  static DownSet closure_of(PosetRef over, const std::vector<Elem> &generators);

  const PosetRef &over() const { return over_; }
  bool contains(Elem x) const {
    return (bits_[x / 64] >> (x % 64)) & 1u;
  }
  void mark(Elem x) { bits_[x / 64] |= (std::uint64_t{1} << (x % 64)); }
  /// Marks x and everything below it.
  void add_closed(Elem x);

  bool is_empty() const;
  std::size_t count() const;
  std::vector<Elem> members() const;

  bool subset_of(const DownSet &o) const;
  DownSet unite(const DownSet &o) const;
  DownSet intersect(const DownSet &o) const;
  void unite_in_place(const DownSet &o);

  /// Elements of the set that are not below another member.
  std::vector<Elem> maximal() const;

  bool operator==(const DownSet &o) const;
  bool operator<(const DownSet &o) const;
  std::string to_string() const;

private:
  PosetRef over_;
  std::vector<std::uint64_t> bits_;
};

/// Every downward-closed subset of p, smallest-first by construction order.
std::vector<DownSet> all_downsets(const PosetRef &p, std::size_t cap = 1u << 20);

struct MonotoneMap {
  PosetRef dom;
  PosetRef cod;
  std::vector<Elem> table;

  Elem operator()(Elem x) const { return table.at(x); }
  bool operator==(const MonotoneMap &o) const {
    return same_poset(dom, o.dom) && same_poset(cod, o.cod) && table == o.table;
  }
};

/// A monotone map into downsets: the monadic function space A -> D(B).
/// `pure` records that the map was built by pure() and carries no effect.
struct KleisliMap {
  PosetRef dom;
  PosetRef cod;
  std::vector<DownSet> table;
  bool pure = false;

  const DownSet &operator()(Elem x) const { return table.at(x); }
  bool operator==(const KleisliMap &o) const {
    return same_poset(dom, o.dom) && same_poset(cod, o.cod) && table == o.table;
  }
};

/// Pointwise inclusion of Kleisli maps.
bool kleisli_leq(const KleisliMap &f, const KleisliMap &g);

DownSet ret(const PosetRef &p, Elem x);
DownSet bind(const DownSet &xs, const KleisliMap &f);
/// (g . f)(x) = bind(f(x), g)
KleisliMap kleisli_compose(const KleisliMap &g, const KleisliMap &f);
KleisliMap pure(const MonotoneMap &f);
MonotoneMap identity_map(const PosetRef &p);
KleisliMap ret_map(const PosetRef &p);

LawReport verify_order_laws(const FinitePoset &p);
LawReport verify_order_laws(const MonotoneMap &f);
LawReport verify_order_laws(const DownSet &xs);
LawReport verify_order_laws(const KleisliMap &f);

// Generators shared by tests and law suites.

/// A random poset over n elements: a seeded DAG whose edges all run from a
/// lower index to a higher one, then reflexively-transitively closed.
PosetRef random_poset(std::mt19937_64 &rng, std::size_t n, double edge_prob = 0.35);
MonotoneMap random_monotone(std::mt19937_64 &rng, const PosetRef &dom,
                            const PosetRef &cod);
KleisliMap random_kleisli(std::mt19937_64 &rng, const PosetRef &dom,
                          const PosetRef &cod, double density = 0.3);
std::vector<MonotoneMap> all_monotone_maps(const PosetRef &dom, const PosetRef &cod,
                                           std::size_t cap = 1u << 16);

} // namespace cgc
