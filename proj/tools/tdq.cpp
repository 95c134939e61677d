#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tdq/explore.hpp"
#include "tdq/io.hpp"
#include "tdq/qtet.hpp"
#include "tdq/suite.hpp"

using namespace tdq;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailure = 1;
constexpr int kInputError = 2;

struct Options {
  std::string q = "2", a = "3", b = "5";
  int d = 1;
  std::vector<std::string> phi;
  std::string c;
  std::string input;
  std::string which = "both";
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  std::string filter;
  bool exhaustive = false;
  bool timing = false;
  std::string out;
  std::string operators_out;
};

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::uint64_t effective_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("QTET_SEED")) {
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("QTET_SEED is not an unsigned integer: ") + env);
  }
  return kDefaultSeed;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text(o.out, text);
  }
}

std::string witness_lines(const CheckReport& r) {
  std::ostringstream os;
  for (const auto& e : r.entries) {
    if (e.status == Status::Pass) continue;
    os << "axiom/check (" << e.id << ") " << to_string(e.status);
    if (!e.detail.empty()) os << ": " << e.detail;
    os << "\n";
    if (e.witness) os << "  witness " << to_json(*e.witness).dump() << "\n";
  }
  return os.str();
}

/// The verified system, or the failing report when verification fails.
struct Loaded {
  Fixture fixture;
  CheckReport verification;
  std::optional<TDSystem> tds;
};

Loaded load(const Options& o) {
  if (o.input.empty()) throw InputError("a fixture file is required");
  Fixture f = load_fixture(o.input);
  Loaded l{f, verify_fixture(f), std::nullopt};
  bool ok = true;
  for (const auto& e : l.verification.entries) ok = ok && e.status == Status::Pass;
  if (ok) l.tds = TDSystem::from_matrices(f.a, f.astar, f.params);
  return l;
}

void prefix_into(CheckReport& into, const CheckReport& from, const std::string& prefix) {
  for (auto e : from.entries) {
    e.id = prefix + e.id;
    into.entries.push_back(std::move(e));
  }
}

int finish_report(const Options& o, CheckReport r, const ReportMeta& meta, json extra = json::object()) {
  if (o.format == "json") {
    json j = report_json(r, meta);
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    emit(o, j.dump(2) + "\n");
  } else {
    std::string text = report_text(r, meta);
    if (extra.contains("notes"))
      for (const auto& n : extra["notes"]) text += n.get<std::string>() + "\n";
    emit(o, text);
  }
  return r.ok() ? kOk : kCheckFailure;
}

int cmd_fixture(const Options& o) {
  std::optional<Fixture> f;
  if (!o.input.empty()) {
    f.emplace(load_fixture(o.input));
  } else {
    std::optional<QRacahParams> p;
    try {
      p.emplace(Scalar::parse(o.q), Scalar::parse(o.a), Scalar::parse(o.b), o.d);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("invalid parameters: ") + e.what());
    }
    std::vector<Scalar> phi;
    if (!o.phi.empty()) {
      for (const auto& s : o.phi) phi.push_back(Scalar::parse(s));
      if (phi.size() != static_cast<std::size_t>(o.d)) throw InputError("--phi needs exactly d entries");
    } else if (!o.c.empty()) {
      try {
        phi = find_phi(*p, Scalar::parse(o.c));
      } catch (const TDSystemError& e) {
        std::cerr << "no valid phi found: " << e.what() << "\n" << witness_lines(e.report());
        return kCheckFailure;
      }
    } else {
      throw InputError("give --phi or --c");
    }
    const auto [a, astar] = split_form_matrices(*p, phi);
    f.emplace(Fixture{*p, phi, a, astar});
  }
  const auto r = verify_fixture(*f);
  if (!r.ok() || r.count(Status::Inconclusive) > 0) {
    std::cerr << "refusing to write an unverified fixture\n" << witness_lines(r);
    return kCheckFailure;
  }
  emit(o, to_json(*f).dump(2) + "\n");
  return kOk;
}

int cmd_verify(const Options& o) {
  const Loaded l = load(o);
  CheckReport r = l.verification;
  if (l.tds) {
    for (const auto& [id, flavor] : {std::pair{"split-first", SplitFlavor::First},
                                     std::pair{"split-second", SplitFlavor::Second}}) {
      Checker ck;
      check_split_decomposition(*l.tds, split_parts(*l.tds, flavor), ck);
      r.entries.push_back(ck.finish(id, "split decomposition (raising/lowering)"));
    }
    if (!o.operators_out.empty()) write_text(o.operators_out, operator_dump(compute_operators(*l.tds)).dump(2) + "\n");
  }
  return finish_report(o, r, {o.input, std::nullopt, o.timing});
}

int cmd_suite(const Options& o) {
  const Loaded l = load(o);
  SuiteOptions so;
  so.seed = effective_seed(o);
  if (!o.filter.empty()) so.filter = o.filter;
  so.exhaustive = o.exhaustive;
  CheckReport r;
  if (!l.tds) {
    prefix_into(r, l.verification, "fixture:");
    const auto bad = TDSystem::unchecked(l.fixture.a, l.fixture.astar, l.fixture.params);
    const auto rest = run_suite(bad, so);
    prefix_into(r, rest, "");
    r.elapsed_seconds = rest.elapsed_seconds;
  } else {
    r = run_suite(*l.tds, so);
  }
  return finish_report(o, r, {o.input, so.seed, o.timing});
}

int cmd_qtet(const Options& o) {
  if (o.which != "one" && o.which != "two" && o.which != "both")
    throw InputError("--which must be one, two or both");
  const Loaded l = load(o);
  if (!l.tds) {
    CheckReport r;
    prefix_into(r, l.verification, "fixture:");
    return finish_report(o, r, {o.input, std::nullopt, o.timing});
  }
  const auto start = std::chrono::steady_clock::now();
  const TDSystem& tds = *l.tds;
  const auto build = build_operators(tds);
  CheckReport r;
  prefix_into(r, build.postconditions, "post:");
  json extra = json::object();
  json notes = json::array();
  if (build.ops) {
    const auto& ops = *build.ops;
    json modules = json::object();
    for (const auto& [name, which] : {std::pair{"one", Which::One}, std::pair{"two", Which::Two}}) {
      if (o.which != "both" && o.which != name) continue;
      const auto m = which == Which::One ? module_one(tds, ops) : module_two(tds, ops);
      prefix_into(r, module_report(tds, ops, which), std::string(name) + ":");
      modules[name] = module_dump(m);
      notes.push_back(std::string("module ") + name + ": t = " + m.t.str() +
                      (which == Which::One ? " (a)" : " (a^{-1})"));
    }
    extra["modules"] = modules;
    extra["Lambda"] = to_json(ops.Lambda);
  }
  extra["notes"] = notes;
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return finish_report(o, r, {o.input, std::nullopt, o.timing}, extra);
}

int cmd_explore(const Options& o) {
  const Loaded l = load(o);
  if (!l.tds) {
    CheckReport r;
    prefix_into(r, l.verification, "fixture:");
    finish_report(o, r, {o.input, std::nullopt, o.timing});
    return kInputError;
  }
  const auto x = explore(*l.tds, compute_operators(*l.tds));
  json notes = json::array();
  for (const auto& n : x.notes) notes.push_back(n);
  finish_report(o, x.report, {o.input, std::nullopt, o.timing}, {{"data", x.data}, {"notes", notes}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification workbench for TD systems of q-Racah type"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t seed = 0;

  auto common_out = [&](CLI::App* s) {
    s->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--out", o.out, "write to this file instead of stdout");
  };
  auto report_opts = [&](CLI::App* s) {
    common_out(s);
    s->add_flag("--timing", o.timing, "include elapsed time (reports are then not byte-stable)");
  };

  auto* fx = app.add_subcommand("fixture", "build a verified fixture");
  fx->add_option("input", o.input, "re-verify and normalize an existing fixture file");
  fx->add_option("--q", o.q);
  fx->add_option("--a", o.a);
  fx->add_option("--b", o.b);
  fx->add_option("--d", o.d)->check(CLI::Range(1, 12));
  fx->add_option("--phi", o.phi, "comma-separated phi_1..phi_d")->delimiter(',');
  fx->add_option("--c", o.c, "free parameter for the phi search");
  fx->add_option("--out", o.out);

  auto* vf = app.add_subcommand("verify", "check the four axioms and the split decompositions");
  vf->add_option("fixture", o.input)->required();
  vf->add_option("--operators", o.operators_out, "also write the operator dump to this file");
  report_opts(vf);

  auto* st = app.add_subcommand("suite", "run the operator postconditions and the identity catalog");
  st->add_option("fixture", o.input)->required();
  auto* seed_opt = st->add_option("--seed", seed, "actor seed (default QTET_SEED or built in)");
  st->add_option("--filter", o.filter, "glob on check ids");
  st->add_flag("--exhaustive", o.exhaustive, "also test a spanning set of tridiagonal actors");
  report_opts(st);

  auto* qt = app.add_subcommand("qtet", "assemble and check the two q-tetrahedron modules");
  qt->add_option("fixture", o.input)->required();
  qt->add_option("--which", o.which, "one, two or both")->check(CLI::IsMember({"one", "two", "both"}));
  report_opts(qt);

  auto* ex = app.add_subcommand("explore", "probes for the open problems (never fail the run)");
  ex->add_option("fixture", o.input)->required();
  report_opts(ex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  if (seed_opt->count() > 0) o.seed = seed;

  try {
    if (fx->parsed()) return cmd_fixture(o);
    if (vf->parsed()) return cmd_verify(o);
    if (st->parsed()) return cmd_suite(o);
    if (qt->parsed()) return cmd_qtet(o);
    if (ex->parsed()) return cmd_explore(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const FixtureError& e) {
    std::cerr << "error: " << e.what() << "\n" << witness_lines(e.report());
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const TDSystemError& e) {
    std::cerr << "error: " << e.what() << "\n" << witness_lines(e.report());
    return kCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
  return kInputError;
}
