#include <algorithm>
#include <cctype>

#include "cgc/while_lang.hpp"

namespace cgc {

namespace {

struct Token {
  enum class Kind { ident, number, symbol, end };
  Kind kind;
  std::string text;
  std::size_t line, col;
};

const std::set<std::string> keywords = {"vars", "skip", "if",   "then", "else",
                                        "while", "do",  "rand", "true", "false"};

std::vector<Token> lex(const std::string &src) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto adv = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      adv(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n')
        adv(1);
      continue;
    }
    const std::size_t l = line, co = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      out.push_back({Token::Kind::ident, src.substr(i, j - i), l, co});
      adv(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      out.push_back({Token::Kind::number, src.substr(i, j - i), l, co});
      adv(j - i);
      continue;
    }
    for (const char *sym : {":=", "&&", "||"})
      if (src.compare(i, 2, sym) == 0) {
        out.push_back({Token::Kind::symbol, sym, l, co});
        adv(2);
        goto next;
      }
    if (std::string("+-*/<=;,{}()").find(c) != std::string::npos) {
      out.push_back({Token::Kind::symbol, std::string(1, c), l, co});
      adv(1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", l, co);
  next:;
  }
  out.push_back({Token::Kind::end, "", line, col});
  return out;
}

class Parser {
public:
  explicit Parser(const std::string &src) : toks_(lex(src)) {}

  Program program() {
    Program p;
    if (is_kw("vars")) {
      ++pos_;
      p.declared = true;
      for (;;) {
        const Token &t = peek();
        if (t.kind != Token::Kind::ident || keywords.count(t.text))
          fail("expected a variable name");
        p.vars.push_back(t.text);
        ++pos_;
        if (is_sym(","))
          ++pos_;
        else
          break;
      }
      expect(";");
      declared_ = std::set<std::string>(p.vars.begin(), p.vars.end());
      have_decl_ = true;
    }
    p.body = sequence();
    if (peek().kind != Token::Kind::end)
      fail("unexpected '" + peek().text + "'");
    if (!p.declared) {
      auto fv = free_vars(p.body);
      p.vars.assign(fv.begin(), fv.end());
    }
    std::sort(p.vars.begin(), p.vars.end());
    p.vars.erase(std::unique(p.vars.begin(), p.vars.end()), p.vars.end());
    return p;
  }

  Cexp only_command() {
    auto c = sequence();
    if (peek().kind != Token::Kind::end)
      fail("unexpected '" + peek().text + "'");
    return c;
  }

  AexpPtr only_aexp() {
    auto e = aexp();
    if (peek().kind != Token::Kind::end)
      fail("unexpected '" + peek().text + "'");
    return e;
  }

  BexpPtr only_bexp() {
    auto e = bexp();
    if (peek().kind != Token::Kind::end)
      fail("unexpected '" + peek().text + "'");
    return e;
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> declared_;
  bool have_decl_ = false;

  const Token &peek() const { return toks_[pos_]; }
  bool is_sym(const char *s) const {
    return peek().kind == Token::Kind::symbol && peek().text == s;
  }
  bool is_kw(const char *s) const {
    return peek().kind == Token::Kind::ident && peek().text == s;
  }
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg, peek().line, peek().col);
  }
  void expect(const char *s) {
    if (!is_sym(s))
      fail(std::string("expected '") + s + "'");
    ++pos_;
  }
  void expect_kw(const char *s) {
    if (!is_kw(s))
      fail(std::string("expected '") + s + "'");
    ++pos_;
  }
  std::string variable() {
    const Token &t = peek();
    if (t.kind != Token::Kind::ident || keywords.count(t.text))
      fail("expected a variable");
    if (have_decl_ && !declared_.count(t.text))
      fail("undeclared variable '" + t.text + "'");
    ++pos_;
    return t.text;
  }

  // seq := stmt [';' [seq]]
  Cexp sequence() {
    Cexp first = statement();
    if (!is_sym(";"))
      return first;
    ++pos_;
    if (peek().kind == Token::Kind::end || is_sym("}"))
      return first;
    return Cexp::seq(first, sequence());
  }

  Cexp block() {
    expect("{");
    Cexp c = sequence();
    expect("}");
    return c;
  }

  Cexp statement() {
    if (is_kw("skip")) {
      ++pos_;
      return Cexp::skip();
    }
    if (is_kw("if")) {
      ++pos_;
      auto g = bexp();
      expect_kw("then");
      auto t = block();
      expect_kw("else");
      auto e = block();
      return Cexp::if_(g, t, e);
    }
    if (is_kw("while")) {
      ++pos_;
      auto g = bexp();
      expect_kw("do");
      return Cexp::while_(g, block());
    }
    if (is_sym("{"))
      return block();
    auto x = variable();
    expect(":=");
    return Cexp::assign(x, aexp());
  }

  AexpPtr aexp() {
    auto e = term();
    while (is_sym("+") || is_sym("-")) {
      const ArithOp op = peek().text == "+" ? ArithOp::add : ArithOp::sub;
      ++pos_;
      e = a_bin(op, e, term());
    }
    return e;
  }

  AexpPtr term() {
    auto e = atom();
    while (is_sym("*") || is_sym("/")) {
      const ArithOp op = peek().text == "*" ? ArithOp::mul : ArithOp::div;
      ++pos_;
      e = a_bin(op, e, atom());
    }
    return e;
  }

  AexpPtr atom() {
    const Token &t = peek();
    if (t.kind == Token::Kind::number) {
      ++pos_;
      return a_lit(Integer(t.text));
    }
    if (is_sym("-")) {
      ++pos_;
      if (peek().kind != Token::Kind::number)
        fail("expected an integer after '-'");
      Integer v(peek().text);
      ++pos_;
      return a_lit(-v);
    }
    if (is_kw("rand")) {
      ++pos_;
      return a_rand();
    }
    if (is_sym("(")) {
      ++pos_;
      auto e = aexp();
      expect(")");
      return e;
    }
    return a_var(variable());
  }

  BexpPtr bexp() {
    auto e = conj();
    while (is_sym("||")) {
      ++pos_;
      e = b_bin(BoolOp::or_, e, conj());
    }
    return e;
  }

  BexpPtr conj() {
    auto e = batom();
    while (is_sym("&&")) {
      ++pos_;
      e = b_bin(BoolOp::and_, e, batom());
    }
    return e;
  }

  BexpPtr comparison() {
    auto l = aexp();
    CmpOp op;
    if (is_sym("<"))
      op = CmpOp::lt;
    else if (is_sym("="))
      op = CmpOp::eq;
    else
      fail("expected '<' or '='");
    ++pos_;
    return b_cmp(op, l, aexp());
  }

  BexpPtr batom() {
    if (is_kw("true")) {
      ++pos_;
      return b_lit(true);
    }
    if (is_kw("false")) {
      ++pos_;
      return b_lit(false);
    }
    if (!is_sym("("))
      return comparison();
    // A parenthesis opens either an arithmetic operand or a boolean group.
    const std::size_t start = pos_;
    std::size_t first_fail = 0;
    try {
      return comparison();
    } catch (const ParseError &) {
      first_fail = pos_;
      pos_ = start;
    }
    try {
      ++pos_;
      auto e = bexp();
      expect(")");
      return e;
    } catch (const ParseError &) {
      if (first_fail > pos_) {
        pos_ = start;
        return comparison();
      }
      throw;
    }
  }
};

} // namespace

Program parse_program(const std::string &text) { return Parser(text).program(); }
Cexp parse(const std::string &text) { return parse_program(text).body; }
AexpPtr parse_aexp(const std::string &text) { return Parser(text).only_aexp(); }
BexpPtr parse_bexp(const std::string &text) { return Parser(text).only_bexp(); }

} // namespace cgc
