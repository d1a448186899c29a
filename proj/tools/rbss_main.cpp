// rbss: command-line front end for the exact BSS toolkit.
//
// Subcommands:
//   run            execute a machine on an input tuple
//   trace          execute and print every configuration
//   paths          enumerate branch-resolved computation paths
//   compile-sigma  translate a machine into its graph formula(s)
//   eval           evaluate a closed formula (bounded or by witness search)
//   encode         code an input tuple as a hereditarily finite set
//   decode         recover the tuple from such a code
//   ln             certified enclosure of the natural logarithm
//   exp            certified enclosure of the exponential
//   check          stagewise consistency check on digit expansions
//
// Exit codes: 0 success, 1 semantic failure (diverged/undefined run,
// refuted check, formula not established), 2 bad files or flags.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rbss/digits.hpp"
#include "rbss/enclose.hpp"
#include "rbss/encode.hpp"
#include "rbss/eval.hpp"
#include "rbss/formula.hpp"
#include "rbss/hfset.hpp"
#include "rbss/interp.hpp"
#include "rbss/machine.hpp"
#include "rbss/paths.hpp"
#include "rbss/rational.hpp"
#include "rbss/sigma.hpp"

using json = nlohmann::ordered_json;
using namespace rbss;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// "3", "1, 2, -1/2", "" (empty tuple). Comma-separated rationals.
RFin parse_tuple(const std::string& text) {
  RFin out;
  if (trim(text).empty()) return out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) out.push_back(Rat::parse(trim(piece)));
  return out;
}

std::vector<Rat> parse_pool(const std::string& text) {
  std::vector<Rat> out;
  for (const Rat& q : parse_tuple(text)) out.push_back(q);
  return out;
}

// Fixed-point rendering with directed rounding, so decimal displays of
// enclosure endpoints never overstate the precision: lo rounds down, hi up.
std::string decimal_directed(const Rat& r, int digits, bool round_up) {
  Rat scaled = r * Rat::pow10(digits);
  mpz_class n = round_up ? scaled.ceil() : scaled.floor();
  bool neg = n < 0;
  mpz_class mag = neg ? mpz_class(-n) : n;
  std::string ds = mag.get_str();
  if ((int)ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
  std::string out = neg ? "-" : "";
  out += ds.substr(0, ds.size() - digits);
  if (digits > 0) out += "." + ds.substr(ds.size() - digits);
  return out;
}

std::string show_value(const Rat& q, int decimal) {
  return decimal < 0 ? q.str() : q.decimal(decimal);
}

std::string show_tuple(const RFin& t, int decimal) {
  std::string out;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += show_value(t[i], decimal);
  }
  return out;
}

std::string show_enclosure(const Enclosure& e, int decimal) {
  if (decimal < 0) return e.str();
  return "[" + decimal_directed(e.lo, decimal, false) + ", " +
         decimal_directed(e.hi, decimal, true) + "]";
}

json result_json(const RunResult& r) {
  json j;
  switch (r.kind) {
    case RunResult::Kind::Output: {
      j["kind"] = "output";
      json vals = json::array();
      for (const Rat& q : r.output) vals.push_back(q.str());
      j["values"] = vals;
      break;
    }
    case RunResult::Kind::Undefined:
      j["kind"] = "undefined";
      j["reason"] = r.reason == RunResult::UndefinedReason::DivisionByZero
                        ? "division-by-zero"
                        : "malformed-output";
      break;
    case RunResult::Kind::Diverged:
      j["kind"] = "diverged";
      j["fuel"] = r.fuel;
      break;
  }
  return j;
}

json state_json(const RInf& s) {
  json j = json::object();
  for (const auto& [ix, v] : s.entries()) j[std::to_string(ix)] = v.str();
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- subcommand bodies; each returns the process exit code ----

int cmd_run(const std::string& file, const std::string& input, long fuel,
            int decimal, bool as_json) {
  Machine m = parse_machine(read_file(file));
  RunResult r = run(m, parse_tuple(input), fuel);
  if (as_json) {
    emit(result_json(r));
    return r.is_output() ? 0 : 1;
  }
  if (r.is_output()) {
    std::cout << show_tuple(r.output, decimal) << "\n";
    return 0;
  }
  std::cerr << r.str() << "\n";
  return 1;
}

int cmd_trace(const std::string& file, const std::string& input, long fuel,
              bool as_json) {
  Machine m = parse_machine(read_file(file));
  Trace t = trace(m, parse_tuple(input), fuel);
  if (as_json) {
    json j;
    j["machine"] = t.machine;
    json steps = json::array();
    for (const Configuration& c : t.steps) {
      json s;
      s["step"] = c.step_count;
      s["node"] = c.node;
      s["state"] = state_json(c.state);
      steps.push_back(s);
    }
    j["steps"] = steps;
    j["result"] = result_json(t.result);
    emit(j);
  } else {
    std::cout << "machine: " << t.machine << "\n";
    for (const Configuration& c : t.steps)
      std::cout << c.step_count << " " << c.node << " " << c.state.str() << "\n";
    std::cout << t.result.str() << "\n";
  }
  return t.result.is_output() ? 0 : 1;
}

int cmd_paths(const std::string& file, long depth, long arity_flag,
              const std::string& input, bool have_input, bool as_json) {
  Machine m = parse_machine(read_file(file));
  long arity;
  if (m.arity) {
    arity = *m.arity;
  } else if (arity_flag >= 0) {
    arity = arity_flag;
  } else {
    throw std::invalid_argument("machine declares variable arity; pass --arity");
  }
  std::vector<PathSpec> ps = enumerate_paths(m, arity, depth);
  std::optional<RFin> in;
  if (have_input) in = parse_tuple(input);

  if (as_json) {
    json j;
    j["arity"] = arity;
    j["depth"] = depth;
    json arr = json::array();
    for (const PathSpec& p : ps) {
      json pj;
      pj["nodes"] = p.nodes;
      json conds = json::array();
      for (const PathCondition& c : p.conditions) conds.push_back(c.str());
      pj["conditions"] = conds;
      json outs = json::array();
      for (const RatFun& f : p.outputs) outs.push_back(f.str());
      pj["outputs"] = outs;
      if (in) {
        std::optional<RFin> v = eval_path(p, *in);
        if (v) {
          json vals = json::array();
          for (const Rat& q : *v) vals.push_back(q.str());
          pj["value"] = vals;
        } else {
          pj["value"] = nullptr;
        }
      }
      arr.push_back(pj);
    }
    j["paths"] = arr;
    emit(j);
    return 0;
  }

  std::cout << "paths: " << ps.size() << "\n";
  for (size_t i = 0; i < ps.size(); ++i) {
    const PathSpec& p = ps[i];
    std::cout << "path " << i << ":";
    for (const std::string& n : p.nodes) std::cout << " " << n;
    std::cout << "\n";
    for (const PathCondition& c : p.conditions)
      std::cout << "  when: " << c.str() << "\n";
    std::cout << "  output: (";
    for (size_t k = 0; k < p.outputs.size(); ++k) {
      if (k) std::cout << ", ";
      std::cout << p.outputs[k].str();
    }
    std::cout << ")\n";
    if (in) {
      std::optional<RFin> v = eval_path(p, *in);
      if (v)
        std::cout << "  on input (" << show_tuple(*in, -1) << "): "
                  << show_tuple(*v, -1) << "\n";
      else
        std::cout << "  on input (" << show_tuple(*in, -1) << "): rejected\n";
    }
  }
  return 0;
}

int cmd_compile_sigma(const std::string& file, bool total, bool as_json) {
  Machine m = parse_machine(read_file(file));
  SigmaFunctionDef def = graph_formula(m, total);
  if (as_json) {
    json j;
    if (def.arity)
      j["arity"] = *def.arity;
    else
      j["arity"] = nullptr;
    j["graph"] = def.graph->str();
    if (def.cograph)
      j["cograph"] = def.cograph->str();
    else
      j["cograph"] = nullptr;
    emit(j);
  } else {
    std::cout << "arity: " << (def.arity ? std::to_string(*def.arity) : "*")
              << "\n";
    std::cout << "graph: " << def.graph->str() << "\n";
    if (def.cograph) std::cout << "cograph: " << def.cograph->str() << "\n";
  }
  return 0;
}

int cmd_eval(const std::string& file, const std::string& inline_text,
             long budget, const std::string& pool, bool as_json) {
  std::string text = file.empty() ? inline_text : read_file(file);
  FormulaPtr f = parse_formula(text);
  std::vector<std::string> fv = free_vars(f);
  if (!fv.empty()) {
    std::string names;
    for (size_t i = 0; i < fv.size(); ++i) names += (i ? ", " : "") + fv[i];
    throw std::invalid_argument("formula has free variables: " + names);
  }

  if (is_delta0(f)) {
    bool v = eval_delta0(f, {}, EvalMode::Strict);
    if (as_json) {
      json j;
      j["class"] = "delta0";
      j["result"] = v ? "true" : "false";
      emit(j);
    } else {
      std::cout << (v ? "true" : "false") << "\n";
    }
    return v ? 0 : 1;
  }

  SearchBudget b;
  b.max_witnesses = budget;
  b.atom_pool = parse_pool(pool);
  SigmaResult r = eval_sigma(f, {}, b);
  if (as_json) {
    json j;
    j["class"] = "sigma";
    j["result"] = r.str();
    j["tried"] = r.candidates_tried;
    json w = json::object();
    for (const auto& [name, set] : r.witnesses) w[name] = set->str();
    j["witnesses"] = w;
    emit(j);
  } else {
    std::cout << r.str() << "\n";
  }
  return r.established ? 0 : 1;
}

int cmd_encode(const std::string& input, bool as_json) {
  HFRef code = tuple_code(parse_tuple(input));
  if (as_json) {
    json j;
    j["code"] = code->str();
    emit(j);
  } else {
    std::cout << code->str() << "\n";
  }
  return 0;
}

int cmd_decode(const std::string& code_text, bool as_json) {
  HFRef s = HFSet::parse(code_text);
  std::optional<RFin> t = tuple_decode(s);
  if (!t) {
    std::cerr << "not a tuple code\n";
    return 1;
  }
  if (as_json) {
    json j;
    json vals = json::array();
    for (const Rat& q : *t) vals.push_back(q.str());
    j["values"] = vals;
    emit(j);
  } else {
    std::cout << show_tuple(*t, -1) << "\n";
  }
  return 0;
}

int cmd_ln(const std::string& x_text, long n, const std::string& eps_text,
           int decimal, bool as_json) {
  Rat x = Rat::parse(x_text);
  if ((n > 0) == !eps_text.empty())
    throw std::invalid_argument("pass exactly one of --n and --eps");
  Enclosure e = n > 0 ? ln_bounds(x, n) : ln_cert(x, Rat::parse(eps_text));
  if (as_json) {
    json j;
    j["lo"] = e.lo.str();
    j["hi"] = e.hi.str();
    if (decimal >= 0) {
      j["decimal_lo"] = decimal_directed(e.lo, decimal, false);
      j["decimal_hi"] = decimal_directed(e.hi, decimal, true);
    }
    emit(j);
  } else {
    std::cout << show_enclosure(e, decimal) << "\n";
  }
  return 0;
}

int cmd_exp(const std::string& x_text, const std::string& eps_text, int decimal,
            bool as_json) {
  Enclosure e = exp_cert(Rat::parse(x_text), Rat::parse(eps_text));
  if (as_json) {
    json j;
    j["lo"] = e.lo.str();
    j["hi"] = e.hi.str();
    if (decimal >= 0) {
      j["decimal_lo"] = decimal_directed(e.lo, decimal, false);
      j["decimal_hi"] = decimal_directed(e.hi, decimal, true);
    }
    emit(j);
  } else {
    std::cout << show_enclosure(e, decimal) << "\n";
  }
  return 0;
}

int cmd_check(const std::string& op, const std::string& x_text,
              const std::string& y_text, const std::string& z_text, long n,
              bool as_json) {
  DigitStream x{Rat::parse(x_text)};
  DigitStream y{Rat::parse(y_text)};
  CheckVerdict v;
  if (op == "eq") {
    if (!z_text.empty())
      throw std::invalid_argument("--z only applies to add/mul");
    v = eq_check(x, y, n);
  } else {
    if (z_text.empty()) throw std::invalid_argument(op + " needs --z");
    DigitStream z{Rat::parse(z_text)};
    v = arith_check(op == "add" ? ArithOp::Add : ArithOp::Mul, x, y, z, n);
  }
  if (as_json) {
    json j;
    j["op"] = op;
    j["verdict"] = v.refuted ? "refuted" : "consistent";
    j["stage"] = v.stage;
    emit(j);
  } else {
    std::cout << v.str() << "\n";
  }
  return v.consistent() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact BSS machine toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may trail the subcommand
  long seed = 0;  // reserved: every current subcommand is deterministic
  app.add_option("--seed", seed, "seed for randomized sampling (reserved)");

  int rc = 0;

  // run
  std::string run_file, run_input;
  long run_fuel = 10000;
  int run_decimal = -1;
  bool run_json = false;
  {
    CLI::App* c = app.add_subcommand("run", "execute a machine");
    c->add_option("machine", run_file, "machine file")->required();
    c->add_option("--input", run_input, "comma-separated input tuple");
    c->add_option("--fuel", run_fuel, "step limit");
    c->add_option("--decimal", run_decimal, "print outputs with this many decimals");
    c->add_flag("--json", run_json, "JSON output");
    c->callback([&] { rc = cmd_run(run_file, run_input, run_fuel, run_decimal, run_json); });
  }

  // trace
  std::string trace_file, trace_input;
  long trace_fuel = 10000;
  bool trace_json = false;
  {
    CLI::App* c = app.add_subcommand("trace", "execute and print each configuration");
    c->add_option("machine", trace_file, "machine file")->required();
    c->add_option("--input", trace_input, "comma-separated input tuple");
    c->add_option("--fuel", trace_fuel, "step limit");
    c->add_flag("--json", trace_json, "JSON output");
    c->callback([&] { rc = cmd_trace(trace_file, trace_input, trace_fuel, trace_json); });
  }

  // paths
  std::string paths_file, paths_input;
  long paths_depth = 0, paths_arity = -1;
  bool paths_json = false;
  CLI::Option* paths_input_opt = nullptr;
  {
    CLI::App* c = app.add_subcommand("paths", "enumerate computation paths");
    c->add_option("machine", paths_file, "machine file")->required();
    c->add_option("--depth", paths_depth, "path length bound")->required();
    c->add_option("--arity", paths_arity, "input arity (variable-arity machines)");
    paths_input_opt = c->add_option("--input", paths_input, "evaluate each path here");
    c->add_flag("--json", paths_json, "JSON output");
    c->callback([&] {
      rc = cmd_paths(paths_file, paths_depth, paths_arity, paths_input,
                     paths_input_opt->count() > 0, paths_json);
    });
  }

  // compile-sigma
  std::string cs_file;
  bool cs_total = false, cs_json = false;
  {
    CLI::App* c = app.add_subcommand("compile-sigma", "machine to graph formula");
    c->add_option("machine", cs_file, "machine file")->required();
    c->add_flag("--total", cs_total, "declare the machine halts everywhere");
    c->add_flag("--json", cs_json, "JSON output");
    c->callback([&] { rc = cmd_compile_sigma(cs_file, cs_total, cs_json); });
  }

  // eval
  std::string eval_file, eval_formula, eval_pool;
  long eval_budget = 2000;
  bool eval_json = false;
  {
    CLI::App* c = app.add_subcommand("eval", "evaluate a closed formula");
    CLI::Option* fo = c->add_option("formula-file", eval_file, "file with one formula");
    CLI::Option* io = c->add_option("--formula", eval_formula, "inline formula text");
    fo->excludes(io);
    c->add_option("--budget", eval_budget, "witness candidates per existential");
    c->add_option("--pool", eval_pool, "comma-separated atom values for the search");
    c->add_flag("--json", eval_json, "JSON output");
    c->callback([&] {
      if (eval_file.empty() && eval_formula.empty())
        throw CLI::ValidationError("eval", "pass a formula file or --formula");
      rc = cmd_eval(eval_file, eval_formula, eval_budget, eval_pool, eval_json);
    });
  }

  // encode / decode
  std::string enc_input, dec_code;
  bool enc_json = false, dec_json = false;
  {
    CLI::App* c = app.add_subcommand("encode", "tuple to hereditarily finite code");
    c->add_option("--input", enc_input, "comma-separated tuple");
    c->add_flag("--json", enc_json, "JSON output");
    c->callback([&] { rc = cmd_encode(enc_input, enc_json); });
  }
  {
    CLI::App* c = app.add_subcommand("decode", "code back to the tuple");
    c->add_option("code", dec_code, "set literal, e.g. \"{{atom(1)}, ...}\"")->required();
    c->add_flag("--json", dec_json, "JSON output");
    c->callback([&] { rc = cmd_decode(dec_code, dec_json); });
  }

  // ln / exp
  std::string ln_x, ln_eps;
  long ln_n = 0;
  int ln_decimal = -1;
  bool ln_json = false;
  {
    CLI::App* c = app.add_subcommand("ln", "enclose the natural logarithm");
    c->add_option("--x", ln_x, "argument, rational p/q")->required();
    c->add_option("--n", ln_n, "number of Riemann intervals");
    c->add_option("--eps", ln_eps, "width bound, rational");
    c->add_option("--decimal", ln_decimal, "outward-rounded decimal display");
    c->add_flag("--json", ln_json, "JSON output");
    c->callback([&] { rc = cmd_ln(ln_x, ln_n, ln_eps, ln_decimal, ln_json); });
  }
  std::string exp_x, exp_eps;
  int exp_decimal = -1;
  bool exp_json = false;
  {
    CLI::App* c = app.add_subcommand("exp", "enclose the exponential");
    c->add_option("--x", exp_x, "argument, rational p/q")->required();
    c->add_option("--eps", exp_eps, "width bound, rational")->required();
    c->add_option("--decimal", exp_decimal, "outward-rounded decimal display");
    c->add_flag("--json", exp_json, "JSON output");
    c->callback([&] { rc = cmd_exp(exp_x, exp_eps, exp_decimal, exp_json); });
  }

  // check
  std::string chk_op, chk_x, chk_y, chk_z;
  long chk_n = 50;
  bool chk_json = false;
  {
    CLI::App* c = app.add_subcommand("check", "stagewise digit consistency check");
    c->add_option("op", chk_op, "eq | add | mul")
        ->required()
        ->check(CLI::IsMember({"eq", "add", "mul"}));
    c->add_option("--x", chk_x, "first value")->required();
    c->add_option("--y", chk_y, "second value")->required();
    c->add_option("--z", chk_z, "claimed result (add/mul)");
    c->add_option("--n", chk_n, "stages to check");
    c->add_flag("--json", chk_json, "JSON output");
    c->callback([&] { rc = cmd_check(chk_op, chk_x, chk_y, chk_z, chk_n, chk_json); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean; bad flags exit 2
  } catch (const std::exception& e) {
    std::cerr << "rbss: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
