#include "cgc/analyzer.hpp"

#include <deque>
#include <random>

namespace cgc {

Sign abs_aexp(const Aexp &e, const AbsEnv &rho) {
  switch (e.kind) {
  case Aexp::Kind::lit:
    return sign_eta(e.value);
  case Aexp::Kind::var: {
    auto it = rho.find(e.var);
    if (it == rho.end())
      throw UnboundVariable(e.var);
    return it->second;
  }
  case Aexp::Kind::rand:
    return Sign::any;
  case Aexp::Kind::bin:
    return abs_arith(e.op, abs_aexp(*e.lhs, rho), abs_aexp(*e.rhs, rho));
  }
  return Sign::any;
}

AbsBool abs_bexp(const Bexp &e, const AbsEnv &rho) {
  switch (e.kind) {
  case Bexp::Kind::lit:
    return AbsBool::just(e.value);
  case Bexp::Kind::cmp:
    return abs_cmp(e.cmp, abs_aexp(*e.alhs, rho), abs_aexp(*e.arhs, rho));
  case Bexp::Kind::bin:
    return abs_bool(e.op, abs_bexp(*e.lhs, rho), abs_bexp(*e.rhs, rho));
  }
  return AbsBool::top();
}

std::set<AbsSucc> abs_step(const Cexp &c, const AbsEnv &rho) {
  std::set<AbsSucc> out;
  switch (c.kind()) {
  case Cexp::Kind::skip:
    break;
  case Cexp::Kind::assign:
    // none on the right still binds x (x↦none), it does not kill the flow
    out.emplace(env_update(rho, c.var(), abs_aexp(*c.aexp(), rho)), Cexp::skip());
    break;
  case Cexp::Kind::if_: {
    const AbsBool b = abs_bexp(*c.guard(), rho);
    if (b.contains(true))
      out.emplace(rho, c.first());
    if (b.contains(false))
      out.emplace(rho, c.second());
    break;
  }
  case Cexp::Kind::while_: {
    const AbsBool b = abs_bexp(*c.guard(), rho);
    if (b.contains(true))
      out.emplace(rho, Cexp::seq(c.first(), c));
    if (b.contains(false))
      out.emplace(rho, Cexp::skip());
    break;
  }
  case Cexp::Kind::seq:
    if (c.first().is_skip()) {
      out.emplace(rho, c.second());
    } else {
      for (auto &[r, n] : abs_step(c.first(), rho))
        out.emplace(r, Cexp::seq(n, c.second()));
    }
    break;
  }
  return out;
}

namespace {

std::vector<Cexp> shape_successors(const Cexp &c) {
  switch (c.kind()) {
  case Cexp::Kind::skip:
    return {};
  case Cexp::Kind::assign:
    return {Cexp::skip()};
  case Cexp::Kind::if_:
    return {c.first(), c.second()};
  case Cexp::Kind::while_:
    return {Cexp::seq(c.first(), c), Cexp::skip()};
  case Cexp::Kind::seq: {
    if (c.first().is_skip())
      return {c.second()};
    std::vector<Cexp> out;
    for (auto &n : shape_successors(c.first()))
      out.push_back(Cexp::seq(n, c.second()));
    return out;
  }
  }
  return {};
}

} // namespace

std::set<Cexp> residuals(const Cexp &c) {
  std::set<Cexp> seen{c};
  std::vector<Cexp> todo{c};
  while (!todo.empty()) {
    Cexp cur = todo.back();
    todo.pop_back();
    for (auto &n : shape_successors(cur))
      if (seen.insert(n).second)
        todo.push_back(n);
  }
  return seen;
}

AbsConfig abs_step_config(const AbsConfig &s) {
  AbsConfig out;
  for (auto &[x, _] : s.env)
    out.env[x] = Sign::none;
  for (const auto &c : s.cmds)
    for (auto &[r, n] : abs_step(c, s.env)) {
      out.env = env_join(out.env, r);
      out.cmds.insert(n);
    }
  return out;
}

AbsEnv AnalysisResult::lookup(const Cexp &r) const {
  auto it = at.find(r);
  if (it != at.end())
    return it->second;
  AbsEnv bot;
  for (auto &[x, _] : final_env)
    bot[x] = Sign::none;
  return bot;
}

AnalysisResult analyze(const Cexp &program, const AbsEnv &init, AnalysisOptions opts) {
  for (auto &x : free_vars(program))
    if (!init.count(x))
      throw UnboundVariable(x);

  AnalysisResult res;
  res.residual_set = residuals(program);
  res.bound = res.residual_set.size() * (3 * init.size() + 1);

  std::deque<Cexp> work{program};
  std::set<Cexp> queued{program};
  std::mt19937_64 rng(opts.seed);
  res.at[program] = init;

  while (!work.empty()) {
    Cexp cur = Cexp::skip();
    switch (opts.order) {
    case AnalysisOptions::Order::fifo:
      cur = work.front();
      work.pop_front();
      break;
    case AnalysisOptions::Order::lifo:
      cur = work.back();
      work.pop_back();
      break;
    case AnalysisOptions::Order::shuffled: {
      std::uniform_int_distribution<std::size_t> pick(0, work.size() - 1);
      auto it = work.begin() + static_cast<std::ptrdiff_t>(pick(rng));
      cur = *it;
      work.erase(it);
      break;
    }
    }
    queued.erase(cur);
    ++res.iterations;
    for (auto &[r, n] : abs_step(cur, res.at.at(cur))) {
      auto it = res.at.find(n);
      bool changed;
      if (it == res.at.end()) {
        res.at.emplace(n, r);
        changed = true;
      } else {
        AbsEnv j = env_join(it->second, r);
        changed = j != it->second;
        it->second = std::move(j);
      }
      if (changed && queued.insert(n).second)
        work.push_back(n);
    }
  }

  AbsEnv bot;
  for (auto &[x, _] : init)
    bot[x] = Sign::none;
  auto sk = res.at.find(Cexp::skip());
  res.final_env = sk == res.at.end() ? bot : sk->second;
  return res;
}

bool is_post_fixpoint(const AnalysisResult &r) {
  for (auto &[c, rho] : r.at)
    for (auto &[s, n] : abs_step(c, rho)) {
      auto it = r.at.find(n);
      if (it == r.at.end() || !env_leq(s, it->second))
        return false;
    }
  return true;
}

bool result_leq(const AnalysisResult &a, const AnalysisResult &b) {
  for (auto &[c, rho] : a.at) {
    auto it = b.at.find(c);
    if (it == b.at.end() || !env_leq(rho, it->second))
      return false;
  }
  return true;
}

} // namespace cgc
