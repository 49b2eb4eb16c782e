#include <cctype>
#include <functional>

#include "cgc/agt.hpp"

namespace cgc::agt {

struct TypeNode {
  Type::Kind kind;
  std::optional<Type> dom, cod;
};

namespace {

const std::shared_ptr<const TypeNode> &leaf(Type::Kind k) {
  static const std::shared_ptr<const TypeNode> nodes[] = {
      std::make_shared<const TypeNode>(TypeNode{Type::Kind::none, {}, {}}),
      std::make_shared<const TypeNode>(TypeNode{Type::Kind::bool_, {}, {}}),
      nullptr,
      std::make_shared<const TypeNode>(TypeNode{Type::Kind::any, {}, {}}),
      std::make_shared<const TypeNode>(TypeNode{Type::Kind::unknown, {}, {}}),
  };
  return nodes[static_cast<int>(k)];
}

} // namespace

Type Type::none() { return Type(leaf(Kind::none)); }
Type Type::bool_() { return Type(leaf(Kind::bool_)); }
Type Type::any() { return Type(leaf(Kind::any)); }
Type Type::unknown() { return Type(leaf(Kind::unknown)); }
Type Type::arrow(Type dom, Type cod) {
  return Type(std::make_shared<const TypeNode>(TypeNode{Kind::arrow, std::move(dom), std::move(cod)}));
}

Type::Kind Type::kind() const { return n_->kind; }
const Type &Type::dom() const { return *n_->dom; }
const Type &Type::cod() const { return *n_->cod; }

bool Type::is_precise() const {
  switch (kind()) {
  case Kind::unknown:
    return false;
  case Kind::arrow:
    return dom().is_precise() && cod().is_precise();
  default:
    return true;
  }
}

std::size_t Type::depth() const {
  return is(Kind::arrow) ? 1 + std::max(dom().depth(), cod().depth()) : 1;
}

bool Type::operator==(const Type &o) const {
  if (n_ == o.n_)
    return true;
  if (kind() != o.kind())
    return false;
  return !is(Kind::arrow) || (dom() == o.dom() && cod() == o.cod());
}

bool Type::operator<(const Type &o) const {
  if (kind() != o.kind())
    return kind() < o.kind();
  if (!is(Kind::arrow) || n_ == o.n_)
    return false;
  if (!(dom() == o.dom()))
    return dom() < o.dom();
  return cod() < o.cod();
}

std::string to_string(const Type &t) {
  switch (t.kind()) {
  case Type::Kind::none:
    return "None";
  case Type::Kind::bool_:
    return "Bool";
  case Type::Kind::any:
    return "Any";
  case Type::Kind::unknown:
    return "?";
  case Type::Kind::arrow: {
    std::string d = to_string(t.dom());
    if (t.dom().is(Type::Kind::arrow))
      d = "(" + d + ")";
    return d + " -> " + to_string(t.cod());
  }
  }
  return "?";
}

namespace {

struct TypeParser {
  const std::string &s;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
  }
  [[noreturn]] void fail(const std::string &msg) { throw ParseError(msg, 1, i + 1); }
  bool eat(const std::string &tok) {
    ws();
    if (s.compare(i, tok.size(), tok) == 0) {
      i += tok.size();
      return true;
    }
    return false;
  }
  Type arrow() {
    Type d = atom();
    if (eat("->"))
      return Type::arrow(d, arrow());
    return d;
  }
  Type atom() {
    ws();
    if (eat("("))  {
      Type t = arrow();
      if (!eat(")"))
        fail("expected ')'");
      return t;
    }
    if (eat("?"))
      return Type::unknown();
    std::size_t j = i;
    while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j])))
      ++j;
    const std::string w = s.substr(i, j - i);
    if (w == "None" || w == "Bool" || w == "Any") {
      i = j;
      return w == "None" ? Type::none() : w == "Bool" ? Type::bool_() : Type::any();
    }
    fail("expected a type");
  }
};

} // namespace

Type parse_type(const std::string &text) {
  TypeParser p{text};
  Type t = p.arrow();
  p.ws();
  if (p.i != text.size())
    p.fail("unexpected input after type");
  return t;
}

namespace {

std::vector<Type> enumerate_types(std::size_t depth, bool gradual) {
  std::vector<Type> base{Type::none(), Type::bool_(), Type::any()};
  if (gradual)
    base.push_back(Type::unknown());
  if (depth == 0)
    return {};
  std::vector<Type> cur = base;
  for (std::size_t d = 1; d < depth; ++d) {
    std::vector<Type> next = base;
    for (const auto &a : cur)
      for (const auto &b : cur)
        next.push_back(Type::arrow(a, b));
    cur = std::move(next);
  }
  return cur;
}

} // namespace

std::vector<Type> precise_types(std::size_t depth) { return enumerate_types(depth, false); }
std::vector<Type> gradual_types(std::size_t depth) { return enumerate_types(depth, true); }

// ---- precise lattice -------------------------------------------------------

bool precise_subtype(const Type &a, const Type &b) {
  if (a.is(Type::Kind::none) || b.is(Type::Kind::any))
    return true;
  if (a.is(Type::Kind::bool_))
    return b.is(Type::Kind::bool_);
  if (a.is(Type::Kind::arrow) && b.is(Type::Kind::arrow))
    return precise_subtype(b.dom(), a.dom()) && precise_subtype(a.cod(), b.cod());
  return false;
}

Type precise_join(const Type &a, const Type &b) {
  if (precise_subtype(a, b))
    return b;
  if (precise_subtype(b, a))
    return a;
  if (a.is(Type::Kind::arrow) && b.is(Type::Kind::arrow))
    return Type::arrow(precise_meet(a.dom(), b.dom()), precise_join(a.cod(), b.cod()));
  return Type::any();
}

Type precise_meet(const Type &a, const Type &b) {
  if (precise_subtype(a, b))
    return a;
  if (precise_subtype(b, a))
    return b;
  if (a.is(Type::Kind::arrow) && b.is(Type::Kind::arrow))
    return Type::arrow(precise_join(a.dom(), b.dom()), precise_meet(a.cod(), b.cod()));
  return Type::none();
}

// ---- gradual ---------------------------------------------------------------

bool precision_leq(const Type &a, const Type &b) {
  if (b.is(Type::Kind::unknown))
    return true;
  if (a.is(Type::Kind::arrow) && b.is(Type::Kind::arrow))
    return precision_leq(a.dom(), b.dom()) && precision_leq(a.cod(), b.cod());
  return a.kind() == b.kind() && !a.is(Type::Kind::arrow);
}

Type precision_join(const Type &a, const Type &b) {
  if (a.is(Type::Kind::arrow) && b.is(Type::Kind::arrow))
    return Type::arrow(precision_join(a.dom(), b.dom()), precision_join(a.cod(), b.cod()));
  if (a == b)
    return a;
  return Type::unknown();
}

bool grad_mu_member(const Type &t, const Type &g) {
  if (g.is(Type::Kind::unknown))
    return true;
  if (g.is(Type::Kind::arrow))
    return t.is(Type::Kind::arrow) && grad_mu_member(t.dom(), g.dom()) &&
           grad_mu_member(t.cod(), g.cod());
  return t.kind() == g.kind();
}

bool consistent_subtype(const Type &a, const Type &b) {
  if (a.is(Type::Kind::unknown) || b.is(Type::Kind::unknown))
    return true;
  if (a.is(Type::Kind::none) || b.is(Type::Kind::any))
    return true;
  if (a.is(Type::Kind::bool_))
    return b.is(Type::Kind::bool_);
  if (a.is(Type::Kind::arrow) && b.is(Type::Kind::arrow))
    return consistent_subtype(b.dom(), a.dom()) && consistent_subtype(a.cod(), b.cod());
  return false;
}

Type gradual_join(const Type &a, const Type &b) {
  // Any swallows every partner, including the unknown type.
  if (a.is(Type::Kind::any) || b.is(Type::Kind::any))
    return Type::any();
  if (a.is(Type::Kind::unknown) || b.is(Type::Kind::unknown))
    return Type::unknown();
  if (a.is(Type::Kind::none))
    return b;
  if (b.is(Type::Kind::none))
    return a;
  if (a.is(Type::Kind::arrow) && b.is(Type::Kind::arrow))
    return Type::arrow(gradual_meet(a.dom(), b.dom()), gradual_join(a.cod(), b.cod()));
  if (a.is(Type::Kind::bool_) && b.is(Type::Kind::bool_))
    return a;
  return Type::any();
}

Type gradual_meet(const Type &a, const Type &b) {
  if (a.is(Type::Kind::none) || b.is(Type::Kind::none))
    return Type::none();
  if (a.is(Type::Kind::unknown) || b.is(Type::Kind::unknown))
    return Type::unknown();
  if (a.is(Type::Kind::any))
    return b;
  if (b.is(Type::Kind::any))
    return a;
  if (a.is(Type::Kind::arrow) && b.is(Type::Kind::arrow))
    return Type::arrow(gradual_join(a.dom(), b.dom()), gradual_meet(a.cod(), b.cod()));
  if (a.is(Type::Kind::bool_) && b.is(Type::Kind::bool_))
    return a;
  return Type::none();
}

ConstructiveGC<Type> grad_gc(std::size_t depth) {
  auto types = std::make_shared<std::vector<Type>>(gradual_types(depth));
  std::vector<std::string> names;
  for (auto &t : *types)
    names.push_back(to_string(t));
  const std::size_t n = types->size();
  std::vector<std::uint8_t> leq(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      leq[i * n + j] = precision_leq((*types)[i], (*types)[j]);
  auto index = std::make_shared<std::map<Type, Elem>>();
  for (std::size_t i = 0; i < n; ++i)
    (*index)[(*types)[i]] = i;

  ConstructiveGC<Type> gc;
  gc.name = "gradual types";
  gc.abstract = FinitePoset::make(std::move(names), std::move(leq));
  gc.eta = [index, n](const Type &t) {
    auto it = index->find(grad_eta(t));
    return it == index->end() ? n : it->second;
  };
  gc.mu_member = [types](const Type &t, Elem y) { return grad_mu_member(t, (*types)[y]); };
  gc.show = [](const Type &t) { return to_string(t); };
  return gc;
}

// ---- finite-scale checks ---------------------------------------------------

LawReport check_lattice(std::size_t depth) {
  LawReport r;
  const auto ts = precise_types(depth);
  auto w = [](const Type &a, const Type &b) { return to_string(a) + " | " + to_string(b); };
  for (const auto &a : ts) {
    if (!precise_subtype(a, a))
      r.add("Refl", to_string(a));
    for (const auto &b : ts) {
      r.count();
      const bool ab = precise_subtype(a, b), ba = precise_subtype(b, a);
      if (ab && ba && !(a == b))
        r.add("Antisym", w(a, b));
      const Type j = precise_join(a, b), m = precise_meet(a, b);
      if (!precise_subtype(a, j) || !precise_subtype(b, j))
        r.add("JoinUpper", w(a, b));
      if (!precise_subtype(m, a) || !precise_subtype(m, b))
        r.add("MeetLower", w(a, b));
      for (const auto &c : ts) {
        if (ab && precise_subtype(b, c) && !precise_subtype(a, c))
          r.add("Trans", w(a, b) + " | " + to_string(c));
        if (precise_subtype(a, c) && precise_subtype(b, c) && !precise_subtype(j, c))
          r.add("JoinLeast", w(a, b) + " | " + to_string(c));
        if (precise_subtype(c, a) && precise_subtype(c, b) && !precise_subtype(c, m))
          r.add("MeetGreatest", w(a, b) + " | " + to_string(c));
      }
    }
  }
  return r;
}

namespace {

// Tables over the precise types of the oracle depth, indexed by position.
struct OracleTables {
  std::vector<Type> ps;
  std::map<Type, std::size_t> index;
  std::vector<std::uint8_t> sub;
  std::vector<std::size_t> join, meet;

  explicit OracleTables(std::size_t depth) : ps(precise_types(depth)) {
    const std::size_t n = ps.size();
    for (std::size_t i = 0; i < n; ++i)
      index[ps[i]] = i;
    sub.resize(n * n);
    join.resize(n * n);
    meet.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        sub[i * n + j] = precise_subtype(ps[i], ps[j]);
        join[i * n + j] = index.at(precise_join(ps[i], ps[j]));
        meet[i * n + j] = index.at(precise_meet(ps[i], ps[j]));
      }
  }

  std::vector<std::size_t> members(const Type &g) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (grad_mu_member(ps[i], g))
        out.push_back(i);
    return out;
  }
};

} // namespace

LawReport check_consistent_subtype(std::size_t depth, std::size_t oracle_depth) {
  LawReport r;
  const OracleTables t(oracle_depth);
  const std::size_t n = t.ps.size();
  const auto gs = gradual_types(depth);
  std::vector<std::vector<std::size_t>> members;
  for (const auto &g : gs)
    members.push_back(t.members(g));
  for (std::size_t a = 0; a < gs.size(); ++a)
    for (std::size_t b = 0; b < gs.size(); ++b) {
      r.count();
      bool exists = false;
      for (std::size_t x : members[a]) {
        for (std::size_t y : members[b])
          if (t.sub[x * n + y]) {
            exists = true;
            break;
          }
        if (exists)
          break;
      }
      if (exists != consistent_subtype(gs[a], gs[b]))
        r.add("CSub", to_string(gs[a]) + " <: " + to_string(gs[b]));
    }
  return r;
}

LawReport check_gradual_join(std::size_t depth, std::size_t oracle_depth) {
  LawReport r;
  const OracleTables t(oracle_depth);
  const std::size_t n = t.ps.size();
  const auto gs = gradual_types(depth);
  std::vector<std::vector<std::size_t>> members;
  for (const auto &g : gs)
    members.push_back(t.members(g));
  auto lub = [&](const std::vector<std::uint8_t> &hit) {
    std::optional<Type> acc;
    for (std::size_t i = 0; i < n; ++i)
      if (hit[i])
        acc = acc ? precision_join(*acc, t.ps[i]) : t.ps[i];
    return acc;
  };
  for (std::size_t a = 0; a < gs.size(); ++a)
    for (std::size_t b = 0; b < gs.size(); ++b) {
      r.count();
      std::vector<std::uint8_t> js(n), ms(n);
      for (std::size_t x : members[a])
        for (std::size_t y : members[b]) {
          js[t.join[x * n + y]] = 1;
          ms[t.meet[x * n + y]] = 1;
        }
      auto jn = lub(js), mt = lub(ms);
      const std::string w = to_string(gs[a]) + " | " + to_string(gs[b]);
      if (!jn || !(*jn == gradual_join(gs[a], gs[b])))
        r.add("GJoin", w);
      if (!mt || !(*mt == gradual_meet(gs[a], gs[b])))
        r.add("GMeet", w);
    }
  return r;
}

LawReport check_grad_gc(std::size_t depth) {
  auto gc = grad_gc(depth);
  LawReport r = verify_order_laws(*gc.abstract);
  r.merge(verify_cgc(gc, precise_types(depth)));
  for (const auto &t : precise_types(depth))
    if (!(grad_eta(t) == t))
      r.add("EtaInjection", to_string(t));
  return r;
}

} // namespace cgc::agt
