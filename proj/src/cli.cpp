#include "cgc/cli.hpp"

#include <deque>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cgc/agt.hpp"
#include "cgc/analyzer.hpp"
#include "cgc/conformance.hpp"

namespace cgc {

namespace {

using nlohmann::json;

struct Usage : Error {
  using Error::Error;
};

struct Options {
  std::string file, text, init, format = "text", suite;
  std::uint64_t seed = 1;
  std::size_t max_steps = 200;
  std::optional<std::size_t> depth;
};

std::string read_input(const Options &o) {
  if (!o.file.empty() && !o.text.empty())
    throw Usage("give either --file or --text, not both");
  if (!o.text.empty())
    return o.text;
  if (o.file.empty())
    throw Usage("an input is required (--file PATH or --text STR)");
  std::ifstream in(o.file, std::ios::binary);
  if (!in)
    throw Usage("cannot read '" + o.file + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "x=zer,y=posz" over the program's variables; the rest default to any.
AbsEnv initial_env(const Program &p, const std::string &bindings) {
  AbsEnv env;
  for (const auto &x : p.vars)
    env[x] = Sign::any;
  std::stringstream ss(bindings);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Usage("bad binding '" + item + "', expected VAR=SIGN");
    const std::string x = item.substr(0, eq), s = item.substr(eq + 1);
    const auto sign = parse_sign(s);
    if (!sign)
      throw Usage("unknown sign '" + s + "'");
    if (!env.count(x))
      throw Usage("'" + x + "' is not a variable of the program");
    env[x] = *sign;
  }
  return env;
}

json env_json(const AbsEnv &env) {
  json j = json::object();
  for (const auto &[x, s] : env)
    j[x] = to_string(s);
  return j;
}

// Reached residuals in flow order: breadth first from the program along
// the abstract steps taken from each point's tabulated environment.
std::vector<Cexp> flow_order(const Cexp &program, const AnalysisResult &r) {
  std::vector<Cexp> out;
  std::set<Cexp> seen;
  std::deque<Cexp> queue;
  if (r.reached(program)) {
    queue.push_back(program);
    seen.insert(program);
  }
  while (!queue.empty()) {
    Cexp c = queue.front();
    queue.pop_front();
    out.push_back(c);
    for (const auto &[env, next] : abs_step(c, r.at.at(c)))
      if (r.reached(next) && seen.insert(next).second)
        queue.push_back(next);
  }
  for (const auto &[c, _] : r.at)
    if (seen.insert(c).second)
      out.push_back(c);
  return out;
}

int cmd_analyze(const Options &o, std::ostream &out) {
  const Program p = parse_program(read_input(o));
  const AnalysisResult r = analyze(p.body, initial_env(p, o.init));
  const auto points = flow_order(p.body, r);
  if (o.format == "json") {
    json j;
    j["program"] = to_string(p.body);
    auto arr = json::array();
    for (const auto &c : points)
      arr.push_back({{"command", to_string(c)}, {"env", env_json(r.at.at(c))}});
    j["points"] = std::move(arr);
    j["final"] = env_json(r.final_env);
    j["iterations"] = r.iterations;
    out << j.dump(2) << "\n";
  } else {
    out << "program: " << to_string(p.body) << "\n";
    for (const auto &c : points)
      out << "  " << to_string(r.at.at(c)) << "  " << to_string(c) << "\n";
    out << "final: " << to_string(r.final_env) << "\n";
    out << "iterations: " << r.iterations << "\n";
  }
  return 0;
}

int cmd_typecheck(const Options &o, std::ostream &out) {
  const auto term = agt::parse_term(read_input(o));
  const auto t = agt::typeof_gradual({}, *term);
  if (o.format == "json") {
    json j;
    j["term"] = agt::to_string(*term);
    j["type"] = t ? json(agt::to_string(*t)) : json();
    out << j.dump(2) << "\n";
  } else if (t) {
    out << agt::to_string(*term) << " : " << agt::to_string(*t) << "\n";
  } else {
    out << agt::to_string(*term) << " : no type\n";
  }
  return t ? 0 : 1;
}

void emit(const std::vector<SuiteReport> &rs, const Options &o, std::ostream &out) {
  if (o.format == "json") {
    if (rs.size() == 1) {
      out << rs.front().to_json().dump(2) << "\n";
    } else {
      auto arr = json::array();
      for (const auto &r : rs)
        arr.push_back(r.to_json());
      out << arr.dump(2) << "\n";
    }
  } else {
    for (const auto &r : rs)
      out << r.to_text();
  }
}

int cmd_meta(const Options &o, std::ostream &out) {
  const std::size_t n = o.depth.value_or(5);
  if (n == 0)
    throw Usage("--depth must be positive");
  SuiteReport s{"agt-meta", o.seed, {}};
  s.add("FAT, precise terms of size <= " + std::to_string(n), agt::check_fat(n, 2));
  s.add("EDL, dynamic terms of size <= " + std::to_string(n), agt::check_edl(n));
  const std::size_t g = n > 1 ? n - 1 : 1;
  s.add("GG, gradual terms of size <= " + std::to_string(g), agt::check_gg(g, 2));
  emit({s}, o, out);
  return s.ok() ? 0 : 1;
}

int cmd_laws(const Options &o, std::ostream &out) {
  SuiteBounds b;
  b.max_steps = o.max_steps;
  if (o.depth)
    b.term_size = *o.depth;
  std::vector<std::string> names;
  if (o.suite.empty() || o.suite == "all")
    names = suite_names();
  else
    names.push_back(o.suite);
  std::vector<SuiteReport> rs;
  for (const auto &n : names)
    rs.push_back(run_law_suite(n, o.seed, b));
  emit(rs, o, out);
  for (const auto &r : rs)
    if (!r.ok())
      return 1;
  return 0;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Constructive Galois connection toolkit: sign analysis of WHILE programs, "
               "gradual typing checks and law suites."};
  app.name("cgc");
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App *c, bool input) {
    if (input) {
      c->add_option("--file", o.file, "read the input from PATH");
      c->add_option("--text", o.text, "inline input");
    }
    c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    c->add_option("--seed", o.seed, "seed for randomized suites");
  };
  auto *an = app.add_subcommand("analyze", "sign analysis of a WHILE program");
  common(an, true);
  an->add_option("--init", o.init, "initial signs, e.g. x=zer,y=posz (default any)");
  auto *tc = app.add_subcommand("agt-typecheck", "gradual type of a closed term");
  common(tc, true);
  auto *mt = app.add_subcommand("agt-meta", "FAT, EDL and GG over enumerated terms");
  common(mt, false);
  mt->add_option("--depth", o.depth, "maximum term size (default 5)");
  auto *cl = app.add_subcommand("check-laws", "run law suites");
  common(cl, false);
  cl->add_option("--suite", o.suite, "suite name, or all (default)");
  cl->add_option("--max-steps", o.max_steps, "concrete oracle step bound (default 200)");
  cl->add_option("--depth", o.depth, "term size bound for AGT suites");
  cl->add_flag_callback("--list", [&] {
    for (const auto &n : suite_names())
      out << n << "\n";
    throw CLI::Success();
  }, "list suite names");

  std::vector<std::string> argv_store{"cgc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &a : argv_store)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::Success &) {
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "cgc: " << e.what() << "\n";
    return 2;
  }

  try {
    if (an->parsed())
      return cmd_analyze(o, out);
    if (tc->parsed())
      return cmd_typecheck(o, out);
    if (mt->parsed())
      return cmd_meta(o, out);
    return cmd_laws(o, out);
  } catch (const ParseError &e) {
    err << "cgc: syntax error at " << e.what() << "\n";
  } catch (const UnknownSuite &e) {
    err << "cgc: " << e.what() << "\n";
  } catch (const Usage &e) {
    err << "cgc: " << e.what() << "\n";
  } catch (const UnboundVariable &e) {
    err << "cgc: " << e.what() << "\n";
  }
  return 2;
}

} // namespace cgc
