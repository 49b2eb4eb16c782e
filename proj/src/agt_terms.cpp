#include <cctype>
#include <functional>
#include <set>

#include "cgc/agt.hpp"

namespace cgc::agt {

namespace {

TermPtr node(Term t) { return std::make_shared<const Term>(std::move(t)); }

} // namespace

TermPtr t_true() { return node(Term{Term::Kind::tt, {}, {}, Type::unknown(), {}, {}, {}}); }
TermPtr t_false() { return node(Term{Term::Kind::ff, {}, {}, Type::unknown(), {}, {}, {}}); }
TermPtr t_if(TermPtr c, TermPtr t, TermPtr e) {
  return node(Term{Term::Kind::if_, {}, {}, Type::unknown(), std::move(c), std::move(t), std::move(e)});
}
TermPtr t_var(std::string x) {
  return node(Term{Term::Kind::var, std::move(x), {}, Type::unknown(), {}, {}, {}});
}
TermPtr t_lam(std::string x, std::optional<Type> ann, TermPtr body) {
  return node(Term{Term::Kind::lam, std::move(x), std::move(ann), Type::unknown(), std::move(body),
                   {}, {}});
}
TermPtr t_app(TermPtr f, TermPtr x) {
  return node(Term{Term::Kind::app, {}, {}, Type::unknown(), std::move(f), std::move(x), {}});
}
TermPtr t_asc(TermPtr e, Type t) {
  return node(Term{Term::Kind::asc, {}, {}, std::move(t), std::move(e), {}, {}});
}

namespace {

// Contexts: 0 anywhere, 1 left of `::`, 2 function position, 3 argument.
std::string show(const Term &e, int ctx) {
  auto wrap = [&](std::string s, int level) { return ctx > level ? "(" + s + ")" : s; };
  switch (e.kind) {
  case Term::Kind::tt:
    return "true";
  case Term::Kind::ff:
    return "false";
  case Term::Kind::var:
    return e.var;
  case Term::Kind::lam: {
    std::string s = "\\" + e.var;
    if (e.ann)
      s += ":" + to_string(*e.ann);
    return wrap(s + ". " + show(*e.a, 0), 0);
  }
  case Term::Kind::if_:
    return wrap("if " + show(*e.a, 0) + " then " + show(*e.b, 0) + " else " + show(*e.c, 0), 0);
  case Term::Kind::asc:
    return wrap(show(*e.a, 1) + " :: " + to_string(e.asc), 1);
  case Term::Kind::app:
    return wrap(show(*e.a, 2) + " " + show(*e.b, 3), 2);
  }
  return "?";
}

} // namespace

std::string to_string(const Term &e) { return show(e, 0); }

bool equal(const Term &a, const Term &b) {
  if (a.kind != b.kind)
    return false;
  switch (a.kind) {
  case Term::Kind::tt:
  case Term::Kind::ff:
    return true;
  case Term::Kind::var:
    return a.var == b.var;
  case Term::Kind::lam:
    return a.var == b.var && a.ann == b.ann && equal(*a.a, *b.a);
  case Term::Kind::if_:
    return equal(*a.a, *b.a) && equal(*a.b, *b.b) && equal(*a.c, *b.c);
  case Term::Kind::app:
    return equal(*a.a, *b.a) && equal(*a.b, *b.b);
  case Term::Kind::asc:
    return a.asc == b.asc && equal(*a.a, *b.a);
  }
  return false;
}

std::size_t size(const Term &e) {
  std::size_t n = 1;
  for (const TermPtr *c : {&e.a, &e.b, &e.c})
    if (*c)
      n += size(**c);
  return n;
}

bool is_precise_term(const Term &e) {
  if (e.kind == Term::Kind::lam && (!e.ann || !e.ann->is_precise()))
    return false;
  if (e.kind == Term::Kind::asc && !e.asc.is_precise())
    return false;
  for (const TermPtr *c : {&e.a, &e.b, &e.c})
    if (*c && !is_precise_term(**c))
      return false;
  return true;
}

bool is_dynamic_term(const Term &e) {
  if (e.kind == Term::Kind::lam && e.ann)
    return false;
  if (e.kind == Term::Kind::asc)
    return false;
  for (const TermPtr *c : {&e.a, &e.b, &e.c})
    if (*c && !is_dynamic_term(**c))
      return false;
  return true;
}

// ---- parser ----------------------------------------------------------------

namespace {

class TermParser {
public:
  explicit TermParser(const std::string &s) : s_(s) {}

  TermPtr whole() {
    auto e = expr();
    ws();
    if (i_ != s_.size())
      fail("unexpected input");
    return e;
  }

private:
  const std::string &s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string &msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < i_ && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
  }
  bool peek_sym(const char *t) {
    ws();
    return s_.compare(i_, std::char_traits<char>::length(t), t) == 0;
  }
  bool eat_sym(const char *t) {
    if (!peek_sym(t))
      return false;
    i_ += std::char_traits<char>::length(t);
    return true;
  }
  std::string peek_word() {
    ws();
    std::size_t j = i_;
    while (j < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '\''))
      ++j;
    if (j == i_ || std::isdigit(static_cast<unsigned char>(s_[i_])))
      return "";
    return s_.substr(i_, j - i_);
  }
  bool eat_word(const std::string &w) {
    if (peek_word() != w)
      return false;
    i_ += w.size();
    return true;
  }
  static bool reserved(const std::string &w) {
    return w == "if" || w == "then" || w == "else" || w == "true" || w == "false";
  }

  // A type runs until a token that cannot continue it.
  Type type() {
    ws();
    std::size_t j = i_;
    int depth = 0;
    while (j < s_.size()) {
      const char c = s_[j];
      if (c == '(')
        ++depth;
      else if (c == ')') {
        if (depth == 0)
          break;
        --depth;
      } else if (depth == 0 && c == '.')
        break;
      else if (depth == 0 && c == ':' && j + 1 < s_.size() && s_[j + 1] == ':')
        break;
      else if (depth == 0 && std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t k = j;
        while (k < s_.size() && std::isalpha(static_cast<unsigned char>(s_[k])))
          ++k;
        const std::string w = s_.substr(j, k - j);
        if (w != "None" && w != "Bool" && w != "Any")
          break;
        j = k;
        continue;
      } else if (depth == 0 && !std::isspace(static_cast<unsigned char>(c)) && c != '?' &&
                 c != '-' && c != '>')
        break;
      ++j;
    }
    std::string text = s_.substr(i_, j - i_);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
      text.pop_back();
    try {
      Type t = parse_type(text);
      i_ = j;
      return t;
    } catch (const ParseError &) {
      fail("malformed type '" + text + "'");
    }
  }

  TermPtr expr() {
    if (eat_sym("\\")) {
      std::string x = peek_word();
      if (x.empty() || reserved(x))
        fail("expected a binder");
      i_ += x.size();
      std::optional<Type> ann;
      if (peek_sym(":") && !peek_sym("::")) {
        ++i_;
        ann = type();
      }
      if (!eat_sym("."))
        fail("expected '.'");
      return t_lam(x, ann, expr());
    }
    if (eat_word("if")) {
      auto c = expr();
      if (!eat_word("then"))
        fail("expected 'then'");
      auto t = expr();
      if (!eat_word("else"))
        fail("expected 'else'");
      return t_if(c, t, expr());
    }
    auto e = application();
    while (eat_sym("::"))
      e = t_asc(e, type());
    return e;
  }

  bool atom_start() {
    ws();
    if (i_ >= s_.size())
      return false;
    if (s_[i_] == '(')
      return true;
    auto w = peek_word();
    return !w.empty() && w != "if" && w != "then" && w != "else";
  }

  TermPtr application() {
    auto f = atom();
    while (atom_start())
      f = t_app(f, atom());
    return f;
  }

  TermPtr atom() {
    if (eat_sym("(")) {
      auto e = expr();
      if (!eat_sym(")"))
        fail("expected ')'");
      return e;
    }
    if (eat_word("true"))
      return t_true();
    if (eat_word("false"))
      return t_false();
    auto w = peek_word();
    if (w.empty() || reserved(w))
      fail("expected a term");
    i_ += w.size();
    return t_var(w);
  }
};

} // namespace

TermPtr parse_term(const std::string &text) { return TermParser(text).whole(); }

// ---- precision and embedding -----------------------------------------------

bool term_precision(const Term &a, const Term &b) {
  if (a.kind != b.kind)
    return false;
  switch (a.kind) {
  case Term::Kind::tt:
  case Term::Kind::ff:
    return true;
  case Term::Kind::var:
    return a.var == b.var;
  case Term::Kind::lam:
    if (a.var != b.var || a.ann.has_value() != b.ann.has_value())
      return false;
    if (a.ann && !precision_leq(*a.ann, *b.ann))
      return false;
    return term_precision(*a.a, *b.a);
  case Term::Kind::if_:
    return term_precision(*a.a, *b.a) && term_precision(*a.b, *b.b) && term_precision(*a.c, *b.c);
  case Term::Kind::app:
    return term_precision(*a.a, *b.a) && term_precision(*a.b, *b.b);
  case Term::Kind::asc:
    return precision_leq(a.asc, b.asc) && term_precision(*a.a, *b.a);
  }
  return false;
}

namespace {

// Every gradual type at least as imprecise as t.
std::vector<Type> upper_set(const Type &t) {
  std::vector<Type> out;
  if (t.is(Type::Kind::arrow)) {
    for (auto &d : upper_set(t.dom()))
      for (auto &c : upper_set(t.cod()))
        out.push_back(Type::arrow(d, c));
  } else if (!t.is(Type::Kind::unknown)) {
    out.push_back(t);
  }
  out.push_back(Type::unknown());
  return out;
}

TermPtr embed(const Term &e, std::set<std::string> &scope) {
  const Type q = Type::unknown();
  switch (e.kind) {
  case Term::Kind::tt:
    return t_true();
  case Term::Kind::ff:
    return t_false();
  case Term::Kind::var:
    if (!scope.count(e.var))
      throw UnboundVariable(e.var);
    return t_var(e.var);
  case Term::Kind::lam: {
    const bool fresh = scope.insert(e.var).second;
    auto body = embed(*e.a, scope);
    if (fresh)
      scope.erase(e.var);
    return t_lam(e.var, q, body);
  }
  case Term::Kind::if_:
    return t_if(t_asc(embed(*e.a, scope), q), embed(*e.b, scope), embed(*e.c, scope));
  case Term::Kind::app:
    return t_app(t_asc(embed(*e.a, scope), q), embed(*e.b, scope));
  case Term::Kind::asc:
    throw Error("embed_dynamic: ascription in a dynamic term");
  }
  return t_true();
}

} // namespace

TermPtr embed_dynamic(const Term &e) {
  if (e.kind == Term::Kind::lam && e.ann)
    throw Error("embed_dynamic: annotated lambda in a dynamic term");
  if (!is_dynamic_term(e))
    throw Error("embed_dynamic: term is not annotation-free");
  std::set<std::string> scope;
  return embed(e, scope);
}

std::vector<TermPtr> less_precise_variants(const Term &e) {
  switch (e.kind) {
  case Term::Kind::tt:
    return {t_true()};
  case Term::Kind::ff:
    return {t_false()};
  case Term::Kind::var:
    return {t_var(e.var)};
  case Term::Kind::lam: {
    std::vector<TermPtr> out;
    auto bodies = less_precise_variants(*e.a);
    std::vector<std::optional<Type>> anns;
    if (e.ann)
      for (auto &t : upper_set(*e.ann))
        anns.emplace_back(t);
    else
      anns.emplace_back();
    for (auto &a : anns)
      for (auto &b : bodies)
        out.push_back(t_lam(e.var, a, b));
    return out;
  }
  case Term::Kind::if_: {
    std::vector<TermPtr> out;
    auto cs = less_precise_variants(*e.a), ts = less_precise_variants(*e.b),
         es = less_precise_variants(*e.c);
    for (auto &c : cs)
      for (auto &t : ts)
        for (auto &x : es)
          out.push_back(t_if(c, t, x));
    return out;
  }
  case Term::Kind::app: {
    std::vector<TermPtr> out;
    auto fs = less_precise_variants(*e.a), xs = less_precise_variants(*e.b);
    for (auto &f : fs)
      for (auto &x : xs)
        out.push_back(t_app(f, x));
    return out;
  }
  case Term::Kind::asc: {
    std::vector<TermPtr> out;
    auto inner = less_precise_variants(*e.a);
    for (auto &t : upper_set(e.asc))
      for (auto &x : inner)
        out.push_back(t_asc(x, t));
    return out;
  }
  }
  return {};
}

// ---- enumeration -----------------------------------------------------------

namespace {

// Binders are named by nesting level, so alpha-equivalent duplicates never
// appear: the lambda at level k binds x<k>.
class Enumerator {
public:
  Enumerator(TermMode mode, std::size_t type_depth) : mode_(mode) {
    if (mode == TermMode::precise)
      types_ = precise_types(type_depth);
    else if (mode == TermMode::gradual)
      types_ = gradual_types(type_depth);
  }

  const std::vector<TermPtr> &exact(std::size_t n, std::size_t scope) {
    auto key = std::make_pair(n, scope);
    auto it = memo_.find(key);
    if (it != memo_.end())
      return it->second;
    std::vector<TermPtr> out;
    if (n == 1) {
      out.push_back(t_true());
      out.push_back(t_false());
      for (std::size_t k = 0; k < scope; ++k)
        out.push_back(t_var("x" + std::to_string(k)));
    } else {
      for (const auto &body : exact(n - 1, scope + 1)) {
        if (mode_ == TermMode::dynamic)
          out.push_back(t_lam("x" + std::to_string(scope), std::nullopt, body));
        else
          for (const auto &t : types_)
            out.push_back(t_lam("x" + std::to_string(scope), t, body));
      }
      if (mode_ != TermMode::dynamic)
        for (const auto &e : exact(n - 1, scope))
          for (const auto &t : types_)
            out.push_back(t_asc(e, t));
      for (std::size_t i = 1; i + 1 < n; ++i)
        for (const auto &f : exact(i, scope))
          for (const auto &x : exact(n - 1 - i, scope))
            out.push_back(t_app(f, x));
      for (std::size_t i = 1; i + 2 < n; ++i)
        for (std::size_t j = 1; i + j + 1 < n; ++j) {
          const std::size_t k = n - 1 - i - j;
          for (const auto &c : exact(i, scope))
            for (const auto &t : exact(j, scope))
              for (const auto &e : exact(k, scope))
                out.push_back(t_if(c, t, e));
        }
    }
    return memo_[key] = std::move(out);
  }

private:
  TermMode mode_;
  std::vector<Type> types_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<TermPtr>> memo_;
};

} // namespace

std::vector<TermPtr> enumerate_terms(std::size_t max_size, TermMode mode, std::size_t type_depth) {
  Enumerator en(mode, type_depth);
  std::vector<TermPtr> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const auto &v = en.exact(n, 0);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

} // namespace cgc::agt
