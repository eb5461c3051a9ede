#include "meetless/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <iostream>
#include <iterator>
#include <sstream>

#include "meetless/chain.hpp"
#include "meetless/congruence.hpp"
#include "meetless/dot.hpp"
#include "meetless/error.hpp"
#include "meetless/json_io.hpp"
#include "meetless/measures.hpp"
#include "meetless/refinement.hpp"
#include "meetless/suites.hpp"
#include "meetless/term.hpp"

namespace meetless {
namespace {

enum Exit : int { ok = 0, check_failed = 1, malformed = 2, overflow = 3 };

// Thrown by a handler that has already written its report.
struct CheckFailed {};

class Io {
 public:
  Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  Json read(std::string const& path) {
    if (path == "-") {
      std::string text((std::istreambuf_iterator<char>(in_)),
                       std::istreambuf_iterator<char>());
      return parse_json(text);
    }
    return read_json_file(path);
  }
  void emit(Json const& j) { out_ << j.dump(2) << '\n'; }
  std::ostream& raw() { return out_; }

 private:
  std::istream& in_;
  std::ostream& out_;
};

std::vector<ChainIndex> parse_indices(std::string const& text) {
  std::vector<ChainIndex> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    ChainIndex v = 0;
    auto const* first = text.data() + pos;
    auto const* last = text.data() + end;
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || p != last || first == last) {
      throw Error(ErrorKind::parse_error,
                  "bad index list '" + text + "': expected naturals separated by commas");
    }
    out.push_back(v);
    pos = end + 1;
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i - 1] >= out[i]) {
      throw Error(ErrorKind::parse_error,
                  "index list '" + text + "' is not strictly increasing");
    }
  }
  return out;
}

Json index_json(std::span<ChainIndex const> xs) {
  return Json(std::vector<ChainIndex>(xs.begin(), xs.end()));
}

// ---------------------------------------------------------------------------

void check_semilattice(Io& io, std::string const& path) {
  auto const j = io.read(path);
  FiniteJoinSemilattice s;
  try {
    s = semilattice_from_json(j);
  } catch (Error const& e) {
    if (e.kind() == ErrorKind::parse_error ||
        e.kind() == ErrorKind::unknown_element) {
      throw;
    }
    io.emit({{"valid", false},
             {"error", std::string(error_kind_name(e.kind()))},
             {"witness", e.witness()}});
    throw CheckFailed{};
  }
  Json report{{"valid", true}, {"size", s.size()}};
  std::vector<std::string> irreducibles;
  for (auto p : join_irreducibles(s)) irreducibles.push_back(s.name(p));
  report["join_irreducibles"] = irreducibles;
  if (auto cx = distributivity_counterexample(s)) {
    report["distributive"] = false;
    report["counterexample"] = {{"c", s.name(cx->c)},
                                {"a", s.name(cx->a)},
                                {"b", s.name(cx->b)}};
  } else {
    report["distributive"] = true;
  }
  io.emit(report);
}

void conc(Io& io, std::string const& path) {
  auto const l = lattice_from_json(io.read(path));
  auto const c = all_congruences(l);
  std::vector<std::string> names;
  for (auto const& theta : c.members) names.push_back(congruence_name(l, theta));
  io.emit({{"conc", semilattice_to_json(c.semilattice)},
           {"congruences", names},
           {"theta_plus", measure_to_json(theta_plus_measure(l))}});
}

void freeext_enumerate(Io& io, std::string const& path, bool count_only) {
  auto const s = semilattice_from_json(io.read(path));
  auto const base = std::make_shared<TableBase>(s);
  FreeExtension const ext(base);
  std::vector<Code> carrier;
  for (ElementId x = 0; x < s.size(); ++x) carrier.push_back(x);
  EnumerationLimits limits;
  limits.max_elements = guard_from_env(limits.max_elements);
  std::size_t const count = count_R(*base, carrier);
  if (count > limits.max_elements) {
    throw Error(ErrorKind::too_large,
                "R(S) has " + std::to_string(count) +
                    " elements, above the guard " +
                    std::to_string(limits.max_elements));
  }
  Json out{{"count", count}};
  if (!count_only) {
    std::vector<std::string> terms;
    for (auto const& x : enumerate_R(ext, carrier, limits)) {
      terms.push_back(print_term(x, *base));
    }
    out["elements"] = terms;
  }
  io.emit(out);
}

void freeext_eval(Io& io, std::string const& op,
                  std::vector<std::string> const& terms) {
  std::size_t const arity = op == "cx" ? 1 : 2;
  if (terms.size() != arity) {
    throw Error(ErrorKind::parse_error, "freeext " + op + " takes " +
                                            std::to_string(arity) + " term(s)");
  }
  auto const& ext = chain_extension();
  auto const x = parse_term(terms[0]);
  if (op == "cx") {
    io.emit({{"term", print_term(x)}, {"cx", complexity(x)}, {"rank", x.rank()}});
    return;
  }
  auto const y = parse_term(terms[1]);
  if (op == "leq") {
    io.emit({{"x", print_term(x)}, {"y", print_term(y)}, {"leq", ext.leq(x, y)}});
  } else {
    io.emit({{"x", print_term(x)}, {"y", print_term(y)},
             {"join", print_term(ext.join(x, y))}});
  }
}

void chain_slambda(Io& io, std::string const& indices) {
  auto const xs = parse_indices(indices);
  io.emit(semilattice_to_json(s_lambda(xs)));
}

void chain_interpolate(Io& io, std::string const& xt, std::string const& X,
                       std::string const& yt, std::string const& Y) {
  auto const x = parse_term(xt), y = parse_term(yt);
  auto const xs = parse_indices(X), ys = parse_indices(Y);
  auto const r = interpolate(x, xs, y, ys);
  Json out{{"x", print_term(x)}, {"X", index_json(xs)},
           {"y", print_term(y)}, {"Y", index_json(ys)}};
  if (r.is_interpolant()) {
    out["kind"] = "interpolant";
    out["z"] = print_term(r.z);
  } else {
    out["kind"] = "certificate";
    out["xi"] = r.xi;
  }
  io.emit(out);
}

void measure_check(Io& io, std::string const& path, bool vmeasure,
                   std::vector<std::string> const& pair_texts) {
  auto const m = measure_from_json(io.read(path));
  auto const& names = m.poset;
  Json out;
  if (auto v = find_measure_violation(m)) {
    out["poset_measure"] = false;
    Json viol{{"x", names.name(v->x)}, {"y", names.name(v->y)}};
    if (v->kind == MeasureViolation::Kind::triangle) {
      viol["kind"] = "triangle";
      viol["z"] = names.name(v->z);
    } else {
      viol["kind"] = "nonzero_on_comparable";
    }
    out["violation"] = viol;
    io.emit(out);
    throw CheckFailed{};
  }
  out["poset_measure"] = true;
  if (!vmeasure) {
    if (!pair_texts.empty()) {
      throw Error(ErrorKind::parse_error, "--pairs requires --vmeasure");
    }
    io.emit(out);
    return;
  }
  std::vector<ValuePair> pairs;
  for (auto const& text : pair_texts) {
    auto const comma = text.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorKind::parse_error, "pair '" + text + "' is not a,b");
    }
    pairs.emplace_back(value_from_name(m, text.substr(0, comma)),
                       value_from_name(m, text.substr(comma + 1)));
  }
  if (pairs.empty()) pairs = default_value_pairs(m);
  VMeasureLimits limits;
  limits.max_interval = guard_from_env(limits.max_interval);
  out["pairs_tested"] = pairs.size();
  if (auto w = find_v_measure_failure(m, pairs, limits)) {
    out["v_measure"] = false;
    out["failure"] = {{"x", names.name(w->x)},
                      {"y", names.name(w->y)},
                      {"a", value_name(m, w->a)},
                      {"b", value_name(m, w->b)}};
    io.emit(out);
    throw CheckFailed{};
  }
  out["v_measure"] = true;
  io.emit(out);
}

void measure_counterexample(Io& io, std::uint32_t n, std::uint32_t depth) {
  io.emit(measure_to_json(counterexample_measure(n, depth)));
}

void refine(Io& io, std::string const& algo, std::string const& path) {
  auto const file = problem_from_json(io.read(path));
  auto const& p = file.problem;
  p.validate();
  std::optional<RefinementWitness> w;
  if (algo == "lattice") {
    w = refine_lattice(p);
  } else if (algo == "sd") {
    w = refine_strongly_distributive(p);
  } else if (algo == "seq") {
    w = refine_sequential(p, file.order);
  } else {
    w = refine_bruteforce(p, guard_from_env(std::size_t{1} << 20));
  }
  if (!w) {
    io.emit({{"algo", algo}, {"satisfiable", false}});
    throw CheckFailed{};
  }
  if (!is_valid_witness(p, *w)) {
    throw Error(ErrorKind::internal, "algorithm produced an invalid witness");
  }
  auto out = witness_to_json(p, *w);
  out["algo"] = algo;
  out["satisfiable"] = true;
  io.emit(out);
}

void suite(Io& io, std::ostream& err, std::string const& name, bool list) {
  if (list) {
    io.emit(suite_names());
    return;
  }
  auto const r = run_suite(name);
  err << name << ": " << (r.passed ? "pass" : "FAIL") << " in " << r.seconds
      << " s\n";
  io.emit({{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  if (!r.passed) throw CheckFailed{};
}

void export_dot(Io& io, std::string const& path) {
  auto const j = io.read(path);
  FinitePoset p = j.contains("joins") ? semilattice_from_json(j).poset()
                                      : poset_from_json(j);
  io.raw() << hasse_dot(p);
}

int exit_for(ErrorKind kind) {
  if (is_guard_overflow(kind)) return overflow;
  if (kind == ErrorKind::internal) return check_failed;
  return malformed;
}

}  // namespace

int run_cli(int argc, char const* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err) {
  Io io(in, out);
  CLI::App app{"Finite-scale tools for join-semilattices and their free "
               "distributive extensions",
               "meetless"};
  app.require_subcommand(1);
  std::function<void()> action;

  auto* check = app.add_subcommand("check", "Validate a structure");
  check->require_subcommand(1);
  auto* check_s = check->add_subcommand(
      "semilattice", "Validate a semilattice file and report distributivity");
  std::string file;
  check_s->add_option("file", file, "semilattice JSON, or - for stdin")->required();
  check_s->callback([&] { action = [&] { check_semilattice(io, file); }; });

  auto* conc_cmd = app.add_subcommand("conc", "Congruence semilattice and Θ⁺");
  conc_cmd->add_option("file", file, "lattice JSON, or - for stdin")->required();
  conc_cmd->callback([&] { action = [&] { conc(io, file); }; });

  auto* fe = app.add_subcommand("freeext", "Free distributive extension");
  fe->require_subcommand(1);
  auto* fe_enum = fe->add_subcommand("enumerate", "Enumerate R(S)");
  bool count_only = false;
  fe_enum->add_option("--base", file, "semilattice JSON, or - for stdin")->required();
  fe_enum->add_flag("--count-only", count_only, "print only the count");
  fe_enum->callback([&] { action = [&] { freeext_enumerate(io, file, count_only); }; });
  std::vector<std::string> terms;
  for (char const* op : {"leq", "join", "cx"}) {
    auto* sub = fe->add_subcommand(op, std::string("Evaluate ") + op + " on terms");
    sub->add_option("terms", terms, "terms over S(Λ)")->required();
    std::string const name = op;
    sub->callback([&, name] { action = [&, name] { freeext_eval(io, name, terms); }; });
  }

  auto* ch = app.add_subcommand("chain", "Chain semilattices S(Λ) and F(Λ)");
  ch->require_subcommand(1);
  auto* sl = ch->add_subcommand("slambda", "Emit S(Λ) as JSON");
  std::string indices;
  sl->add_option("--indices", indices, "comma-separated increasing naturals");
  sl->callback([&] { action = [&] { chain_slambda(io, indices); }; });
  auto* ip = ch->add_subcommand("interpolate", "Interpolate x <= y");
  std::string xt, yt, X, Y;
  ip->add_option("--x", xt, "term in F(X)")->required();
  ip->add_option("--X", X, "index set of x")->required();
  ip->add_option("--y", yt, "term in F(Y)")->required();
  ip->add_option("--Y", Y, "index set of y")->required();
  ip->callback([&] { action = [&] { chain_interpolate(io, xt, X, yt, Y); }; });

  auto* me = app.add_subcommand("measure", "Poset measures");
  me->require_subcommand(1);
  auto* mc = me->add_subcommand("check", "Check the measure and V-measure properties");
  bool vmeasure = false;
  std::vector<std::string> pairs;
  mc->add_option("file", file, "measure JSON, or - for stdin")->required();
  mc->add_flag("--vmeasure", vmeasure, "also check the V-measure property");
  mc->add_option("--pairs", pairs, "value pair a,b (repeatable)")->take_all();
  mc->callback([&] { action = [&] { measure_check(io, file, vmeasure, pairs); }; });
  auto* mx = me->add_subcommand("counterexample", "Emit the chain counterexample");
  std::uint32_t n = 0, depth = 0;
  mx->add_option("--n", n, "chain length")->required();
  mx->add_option("--depth", depth, "rank bound of the value level");
  mx->callback([&] { action = [&] { measure_counterexample(io, n, depth); }; });

  auto* rf = app.add_subcommand("refine", "Monotone refinement of a chain below a v b");
  std::string algo;
  rf->add_option("--algo", algo, "algorithm")
      ->required()
      ->check(CLI::IsMember({"lattice", "sd", "seq", "brute"}));
  rf->add_option("--problem", file, "problem JSON, or - for stdin")->required();
  rf->callback([&] { action = [&] { refine(io, algo, file); }; });

  auto* su = app.add_subcommand("suite", "Run a named property suite");
  std::string suite_name;
  bool list = false;
  auto* name_opt = su->add_option("name", suite_name, "suite name");
  su->add_flag("--list", list, "list suite names")->excludes(name_opt);
  su->callback([&] {
    if (!list && suite_name.empty()) {
      throw CLI::ValidationError("suite", "a suite name or --list is required");
    }
    action = [&] { suite(io, err, suite_name, list); };
  });

  auto* ex = app.add_subcommand("export", "Export diagrams");
  ex->require_subcommand(1);
  auto* dot = ex->add_subcommand("dot", "Hasse diagram in DOT");
  dot->add_option("file", file, "poset or semilattice JSON, or - for stdin")->required();
  dot->callback([&] { action = [&] { export_dot(io, file); }; });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return ok;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return malformed;
  }

  try {
    action();
    return ok;
  } catch (CheckFailed const&) {
    return check_failed;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    io.emit({{"error", std::string(error_kind_name(e.kind()))},
             {"message", e.what()},
             {"witness", e.witness()}});
    return exit_for(e.kind());
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return check_failed;
  }
}

}  // namespace meetless
