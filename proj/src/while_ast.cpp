#include "cgc/while_lang.hpp"

namespace cgc {

AexpPtr a_lit(Integer i) {
  auto e = std::make_shared<Aexp>();
  e->kind = Aexp::Kind::lit;
  e->value = std::move(i);
  return e;
}

AexpPtr a_var(std::string x) {
  auto e = std::make_shared<Aexp>();
  e->kind = Aexp::Kind::var;
  e->var = std::move(x);
  return e;
}

AexpPtr a_rand() {
  auto e = std::make_shared<Aexp>();
  e->kind = Aexp::Kind::rand;
  return e;
}

AexpPtr a_bin(ArithOp op, AexpPtr l, AexpPtr r) {
  auto e = std::make_shared<Aexp>();
  e->kind = Aexp::Kind::bin;
  e->op = op;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

BexpPtr b_lit(bool b) {
  auto e = std::make_shared<Bexp>();
  e->kind = Bexp::Kind::lit;
  e->value = b;
  return e;
}

BexpPtr b_cmp(CmpOp op, AexpPtr l, AexpPtr r) {
  auto e = std::make_shared<Bexp>();
  e->kind = Bexp::Kind::cmp;
  e->cmp = op;
  e->alhs = std::move(l);
  e->arhs = std::move(r);
  return e;
}

BexpPtr b_bin(BoolOp op, BexpPtr l, BexpPtr r) {
  auto e = std::make_shared<Bexp>();
  e->kind = Bexp::Kind::bin;
  e->op = op;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

namespace {

int prec(ArithOp op) { return (op == ArithOp::add || op == ArithOp::sub) ? 1 : 2; }
int prec(BoolOp op) { return op == BoolOp::or_ ? 1 : 2; }

// Left-associative operators: a right operand at the same level needs parens.
std::string show(const Aexp &e, int ctx, bool right) {
  switch (e.kind) {
  case Aexp::Kind::lit:
    return e.value.str();
  case Aexp::Kind::var:
    return e.var;
  case Aexp::Kind::rand:
    return "rand";
  case Aexp::Kind::bin: {
    const int p = prec(e.op);
    std::string s = show(*e.lhs, p, false) + " " + op_symbol(e.op) + " " + show(*e.rhs, p, true);
    if (p < ctx || (p == ctx && right))
      return "(" + s + ")";
    return s;
  }
  }
  return "?";
}

std::string show(const Bexp &e, int ctx, bool right) {
  switch (e.kind) {
  case Bexp::Kind::lit:
    return e.value ? "true" : "false";
  case Bexp::Kind::cmp:
    return show(*e.alhs, 0, false) + " " + op_symbol(e.cmp) + " " + show(*e.arhs, 0, false);
  case Bexp::Kind::bin: {
    const int p = prec(e.op);
    std::string s = show(*e.lhs, p, false) + " " + op_symbol(e.op) + " " + show(*e.rhs, p, true);
    if (p < ctx || (p == ctx && right))
      return "(" + s + ")";
    return s;
  }
  }
  return "?";
}

} // namespace

std::string to_string(const Aexp &e) { return show(e, 0, false); }
std::string to_string(const Bexp &e) { return show(e, 0, false); }

bool equal(const Aexp &a, const Aexp &b) {
  if (a.kind != b.kind)
    return false;
  switch (a.kind) {
  case Aexp::Kind::lit:
    return a.value == b.value;
  case Aexp::Kind::var:
    return a.var == b.var;
  case Aexp::Kind::rand:
    return true;
  case Aexp::Kind::bin:
    return a.op == b.op && equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
  }
  return false;
}

bool equal(const Bexp &a, const Bexp &b) {
  if (a.kind != b.kind)
    return false;
  switch (a.kind) {
  case Bexp::Kind::lit:
    return a.value == b.value;
  case Bexp::Kind::cmp:
    return a.cmp == b.cmp && equal(*a.alhs, *b.alhs) && equal(*a.arhs, *b.arhs);
  case Bexp::Kind::bin:
    return a.op == b.op && equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
  }
  return false;
}

Cexp Cexp::make(Node n) {
  switch (n.kind) {
  case Kind::skip:
    n.text = "skip";
    break;
  case Kind::assign:
    n.text = n.var + " := " + to_string(*n.aexp);
    break;
  case Kind::if_:
    n.text = "if " + to_string(*n.guard) + " then { " + n.c1->text() + " } else { " +
             n.c2->text() + " }";
    break;
  case Kind::while_:
    n.text = "while " + to_string(*n.guard) + " do { " + n.c1->text() + " }";
    break;
  case Kind::seq: {
    // `;` associates to the right; a sequence in first position is grouped.
    const std::string head =
        n.c1->kind() == Kind::seq ? "{ " + n.c1->text() + " }" : n.c1->text();
    n.text = head + "; " + n.c2->text();
    break;
  }
  }
  return Cexp(std::make_shared<const Node>(std::move(n)));
}

Cexp Cexp::skip() { return make(Node{Kind::skip, {}, {}, {}, {}, {}, {}}); }

Cexp Cexp::seq(Cexp first, Cexp second) {
  return make(Node{Kind::seq, {}, {}, {}, std::make_shared<const Cexp>(std::move(first)),
                   std::make_shared<const Cexp>(std::move(second)), {}});
}

Cexp Cexp::assign(std::string x, AexpPtr e) {
  return make(Node{Kind::assign, std::move(x), std::move(e), {}, {}, {}, {}});
}

Cexp Cexp::if_(BexpPtr guard, Cexp then_branch, Cexp else_branch) {
  return make(Node{Kind::if_, {}, {}, std::move(guard),
                   std::make_shared<const Cexp>(std::move(then_branch)),
                   std::make_shared<const Cexp>(std::move(else_branch)), {}});
}

Cexp Cexp::while_(BexpPtr guard, Cexp body) {
  return make(Node{Kind::while_, {}, {}, std::move(guard),
                   std::make_shared<const Cexp>(std::move(body)), {}, {}});
}

std::string to_string(const Cexp &c) { return c.text(); }

std::string to_string(const Program &p) {
  std::string s;
  if (p.declared) {
    s = "vars ";
    for (std::size_t i = 0; i < p.vars.size(); ++i)
      s += (i ? ", " : "") + p.vars[i];
    s += "; ";
  }
  return s + p.body.text();
}

std::set<std::string> free_vars(const Aexp &e) {
  switch (e.kind) {
  case Aexp::Kind::var:
    return {e.var};
  case Aexp::Kind::bin: {
    auto l = free_vars(*e.lhs);
    auto r = free_vars(*e.rhs);
    l.insert(r.begin(), r.end());
    return l;
  }
  default:
    return {};
  }
}

std::set<std::string> free_vars(const Bexp &e) {
  switch (e.kind) {
  case Bexp::Kind::cmp: {
    auto l = free_vars(*e.alhs);
    auto r = free_vars(*e.arhs);
    l.insert(r.begin(), r.end());
    return l;
  }
  case Bexp::Kind::bin: {
    auto l = free_vars(*e.lhs);
    auto r = free_vars(*e.rhs);
    l.insert(r.begin(), r.end());
    return l;
  }
  default:
    return {};
  }
}

std::set<std::string> free_vars(const Cexp &c) {
  std::set<std::string> out;
  auto add = [&](const std::set<std::string> &s) { out.insert(s.begin(), s.end()); };
  switch (c.kind()) {
  case Cexp::Kind::skip:
    break;
  case Cexp::Kind::assign:
    out.insert(c.var());
    add(free_vars(*c.aexp()));
    break;
  case Cexp::Kind::seq:
    add(free_vars(c.first()));
    add(free_vars(c.second()));
    break;
  case Cexp::Kind::if_:
    add(free_vars(*c.guard()));
    add(free_vars(c.first()));
    add(free_vars(c.second()));
    break;
  case Cexp::Kind::while_:
    add(free_vars(*c.guard()));
    add(free_vars(c.first()));
    break;
  }
  return out;
}

} // namespace cgc
