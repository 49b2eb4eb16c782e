#include "cgc/while_lang.hpp"

namespace cgc {

std::string to_string(const Config &c) { return "<" + to_string(c.env) + ", " + c.cmd.text() + ">"; }

std::set<Integer> eval_aexp(const Env &rho, const Aexp &e, const RandPolicy &policy) {
  switch (e.kind) {
  case Aexp::Kind::lit:
    return {e.value};
  case Aexp::Kind::var: {
    auto it = rho.find(e.var);
    if (it == rho.end())
      throw UnboundVariable(e.var);
    return {it->second};
  }
  case Aexp::Kind::rand:
    if (policy.sample.empty())
      throw Error("rand policy is empty");
    return policy.sample;
  case Aexp::Kind::bin: {
    std::set<Integer> out;
    auto ls = eval_aexp(rho, *e.lhs, policy);
    if (ls.empty())
      return out;
    auto rs = eval_aexp(rho, *e.rhs, policy);
    for (const auto &a : ls)
      for (const auto &b : rs)
        if (auto r = concrete_arith(e.op, a, b))
          out.insert(std::move(*r));
    return out;
  }
  }
  return {};
}

std::set<bool> eval_bexp(const Env &rho, const Bexp &e, const RandPolicy &policy) {
  switch (e.kind) {
  case Bexp::Kind::lit:
    return {e.value};
  case Bexp::Kind::cmp: {
    std::set<bool> out;
    auto ls = eval_aexp(rho, *e.alhs, policy);
    auto rs = eval_aexp(rho, *e.arhs, policy);
    for (const auto &a : ls)
      for (const auto &b : rs)
        out.insert(concrete_cmp(e.cmp, a, b));
    return out;
  }
  case Bexp::Kind::bin: {
    std::set<bool> out;
    auto ls = eval_bexp(rho, *e.lhs, policy);
    auto rs = eval_bexp(rho, *e.rhs, policy);
    for (bool a : ls)
      for (bool b : rs)
        out.insert(concrete_bool(e.op, a, b));
    return out;
  }
  }
  return {};
}

std::set<Config> step(const Config &s, const RandPolicy &policy) {
  if (policy.sample.empty())
    throw Error("rand policy is empty");
  std::set<Config> out;
  const Cexp &c = s.cmd;
  switch (c.kind()) {
  case Cexp::Kind::skip:
    break;
  case Cexp::Kind::assign: {
    if (!s.env.count(c.var()))
      throw UnboundVariable(c.var());
    for (const auto &i : eval_aexp(s.env, *c.aexp(), policy)) {
      Env rho = s.env;
      rho[c.var()] = i;
      out.insert(Config{std::move(rho), Cexp::skip()});
    }
    break;
  }
  case Cexp::Kind::if_:
    for (bool b : eval_bexp(s.env, *c.guard(), policy))
      out.insert(Config{s.env, b ? c.first() : c.second()});
    break;
  case Cexp::Kind::while_:
    for (bool b : eval_bexp(s.env, *c.guard(), policy))
      out.insert(Config{s.env, b ? Cexp::seq(c.first(), c) : Cexp::skip()});
    break;
  case Cexp::Kind::seq:
    if (c.first().is_skip()) {
      out.insert(Config{s.env, c.second()});
    } else {
      for (auto &n : step(Config{s.env, c.first()}, policy))
        out.insert(Config{n.env, Cexp::seq(n.cmd, c.second())});
    }
    break;
  }
  return out;
}

std::set<Config> collect_bounded(const Config &s0, const RandPolicy &policy,
                                 std::size_t max_steps, std::size_t cap) {
  std::set<Config> seen{s0};
  std::vector<Config> frontier{s0};
  for (std::size_t d = 0; d < max_steps && !frontier.empty(); ++d) {
    std::vector<Config> next;
    for (const auto &s : frontier)
      for (auto &n : step(s, policy))
        if (seen.insert(n).second) {
          if (seen.size() > cap)
            throw CapacityExceeded("collect_bounded: more than " + std::to_string(cap) +
                                   " configurations");
          next.push_back(n);
        }
    frontier = std::move(next);
  }
  return seen;
}

} // namespace cgc
