// uebforge: construct, verify and obstruct unitary error bases built from
// quantum Latin squares and complex Hadamard matrices.
//
// Exit codes: 0 valid / not_obstructed, 1 invalid / obstructed (or any
// failing reproduction check), 2 usage or input-format error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "uebforge/catalog.hpp"
#include "uebforge/hadamard.hpp"
#include "uebforge/json_io.hpp"
#include "uebforge/matrix.hpp"
#include "uebforge/obstructions.hpp"
#include "uebforge/qls.hpp"
#include "uebforge/reproduce.hpp"
#include "uebforge/ueb.hpp"

namespace {

using namespace uebforge;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

std::string sci(double v) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(3) << v;
  return s.str();
}

// Tokens are file paths, optionally followed by xN to repeat the preceding
// file until it appears N times: "mhad.json x4" loads four copies.
std::vector<HadamardMatrix> load_hadamards(const std::vector<std::string>& toks,
                                           std::size_t n, Tolerance tol) {
  std::vector<HadamardMatrix> hs;
  std::size_t group_start = 0;
  for (const std::string& t : toks) {
    bool repeat = t.size() > 1 && t[0] == 'x' &&
                  t.find_first_not_of("0123456789", 1) == std::string::npos;
    if (repeat) {
      if (hs.empty())
        throw std::invalid_argument("repeat count before any Hadamard file");
      std::size_t want = std::stoul(t.substr(1));
      if (want == 0) throw std::invalid_argument("repeat count must be >= 1");
      HadamardMatrix last = hs.back();
      while (hs.size() - group_start < want) hs.push_back(last);
    } else {
      group_start = hs.size();
      hs.push_back(validate_hadamard(parse_matrix(read_file(t)), tol));
    }
  }
  if (hs.size() == 1 && n > 1) hs.resize(n, hs.front());
  if (hs.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) +
                                " Hadamards, got " + std::to_string(hs.size()));
  for (const HadamardMatrix& h : hs)
    if (h.size() != n)
      throw std::invalid_argument("Hadamard order " + std::to_string(h.size()) +
                                  " does not match square order " +
                                  std::to_string(n));
  return hs;
}

struct ConstructHadamardOpts {
  std::size_t fourier_n = 0;
  double alpha = 0.0;
  bool has_alpha = false;
  std::string output;
};

int cmd_construct_hadamard(const ConstructHadamardOpts& o) {
  if ((o.fourier_n > 0) == o.has_alpha)
    throw std::invalid_argument("choose exactly one of --fourier, --h-alpha");
  HadamardMatrix h = o.fourier_n > 0 ? fourier(o.fourier_n) : h_alpha(o.alpha);
  write_output(serialize_matrix(h.matrix()), o.output);
  return 0;
}

struct ConstructQlsOpts {
  std::string from_hadamard;
  std::string from_classical;
  std::string output;
  Tolerance tol;
};

int cmd_construct_qls(const ConstructQlsOpts& o) {
  if (o.from_hadamard.empty() == o.from_classical.empty())
    throw std::invalid_argument(
        "choose exactly one of --from-hadamard, --from-classical");
  QuantumLatinSquare q =
      o.from_hadamard.empty()
          ? from_classical(
                validate_latin(parse_latin_grid(read_file(o.from_classical))))
          : qls_from_hadamard(
                validate_hadamard(parse_matrix(read_file(o.from_hadamard)),
                                  o.tol),
                o.tol);
  write_output(serialize_qls(q), o.output);
  return 0;
}

struct ConstructUebOpts {
  bool qsm_mode = false;
  bool sm_mode = false;
  std::string hadamard_file;
  std::string nice_kind;
  std::size_t order = 0;
  std::string qls_file;
  std::string latin_file;
  std::vector<std::string> hadamards;
  std::string output;
  Tolerance tol;
};

int cmd_construct_ueb(const ConstructUebOpts& o) {
  int modes = int(o.qsm_mode) + int(o.sm_mode) + int(!o.hadamard_file.empty()) +
              int(!o.nice_kind.empty());
  if (modes != 1)
    throw std::invalid_argument(
        "choose exactly one of --qsm, --sm, --hadamard, --nice");

  UnitaryErrorBasis b = [&] {
    if (o.qsm_mode) {
      if (o.qls_file.empty() || o.hadamards.empty())
        throw std::invalid_argument("--qsm needs --qls and --hadamards");
      QuantumLatinSquare q =
          validate_qls(parse_qls_rows(read_file(o.qls_file)), o.tol);
      return qsm(q, load_hadamards(o.hadamards, q.size(), o.tol), o.tol);
    }
    if (o.sm_mode) {
      if (o.latin_file.empty() || o.hadamards.empty())
        throw std::invalid_argument("--sm needs --latin and --hadamards");
      ClassicalLatinSquare l =
          validate_latin(parse_latin_grid(read_file(o.latin_file)));
      return sm(l, load_hadamards(o.hadamards, l.size(), o.tol), o.tol);
    }
    if (!o.hadamard_file.empty()) {
      return hadamard_basis(
          validate_hadamard(parse_matrix(read_file(o.hadamard_file)), o.tol),
          o.tol);
    }
    if (o.nice_kind == "pauli") return nice_error_basis(pauli_rep(), o.tol);
    if (o.nice_kind == "clock-shift") {
      if (o.order == 0)
        throw std::invalid_argument("--nice clock-shift needs --order N");
      return nice_error_basis(clock_shift_rep(o.order), o.tol);
    }
    throw std::invalid_argument("--nice takes pauli or clock-shift");
  }();
  write_output(serialize_ueb(b), o.output);
  return 0;
}

struct VerifyOpts {
  std::string kind;
  std::string file;
  Tolerance tol;
  bool json_only = false;
};

int cmd_verify(const VerifyOpts& o) {
  std::string text = read_file(o.file);
  nlohmann::json report;
  std::string human;
  bool valid = true;
  try {
    if (o.kind == "hadamard") {
      Matrix m = parse_matrix(text);
      validate_hadamard(m, o.tol);
      double dev = hadamard_deviation(m);
      report = {{"valid", true}, {"kind", "hadamard"}, {"n", m.size()},
                {"deviation", dev}, {"eps", o.tol.eps}};
      human = "valid hadamard: order " + std::to_string(m.size()) +
              ", largest residual " + sci(dev);
    } else if (o.kind == "qls") {
      std::vector<Matrix> rows = parse_qls_rows(text);
      std::size_t n = rows.size();
      double dev = qls_deviation(rows);
      validate_qls(std::move(rows), o.tol);
      report = {{"valid", true}, {"kind", "qls"}, {"n", n},
                {"deviation", dev}, {"eps", o.tol.eps}};
      human = "valid qls: order " + std::to_string(n) +
              ", largest residual " + sci(dev);
    } else {
      RawUeb raw = parse_ueb_raw(text);
      double dev = ueb_deviation(raw.elements);
      validate_ueb(std::move(raw.elements), raw.provenance, o.tol);
      report = {{"valid", true}, {"kind", "ueb"}, {"n", raw.n},
                {"deviation", dev}, {"eps", o.tol.eps},
                {"provenance", provenance_name(raw.provenance)}};
      human = "valid ueb: " + std::to_string(raw.n * raw.n) +
              " elements of order " + std::to_string(raw.n) +
              ", largest residual " + sci(dev);
    }
  } catch (const ValidationError& e) {
    valid = false;
    report = {{"valid", false}, {"kind", o.kind}, {"error", e.what()},
              {"eps", o.tol.eps}};
    human = std::string("invalid ") + o.kind + ": " + e.what();
  }
  if (!o.json_only) std::cout << human << "\n";
  std::cout << report.dump(2) << "\n";
  return valid ? 0 : 1;
}

struct ObstructOpts {
  std::string test;
  std::string file;
  Tolerance tol;
  NonzeroThreshold theta;
  bool json_only = false;
};

int cmd_obstruct(const ObstructOpts& o) {
  RawUeb raw = parse_ueb_raw(read_file(o.file));
  UnitaryErrorBasis b =
      validate_ueb(std::move(raw.elements), raw.provenance, o.tol);
  ObstructionReport rep = o.test == "mu-commutator"
                              ? mu_power_commutator_obstruction(b, o.theta,
                                                                o.tol)
                              : adjoint_closure_obstruction(b, o.tol, o.theta);
  if (!o.json_only) {
    std::ostringstream h;
    h << verdict_name(rep.verdict) << " (" << rep.test << ")";
    std::size_t n = b.dim();
    if (rep.witness_pair) {
      auto [x, y] = *rep.witness_pair;
      h << ": witness elements " << x << " and " << y << " = grid (" << x / n
        << "," << x % n << "),(" << y / n << "," << y % n
        << "), commutator Frobenius norm " << *rep.witness_norm;
    } else if (rep.witness_element) {
      std::size_t w = *rep.witness_element;
      h << ": witness element " << w << " = grid (" << w / n << "," << w % n
        << "), no member proportional to its adjoint";
    } else {
      h << ": no witness found (inconclusive)";
    }
    std::cout << h.str() << "\n";
  }
  std::cout << serialize_report(rep);
  return rep.verdict == Verdict::obstructed ? 1 : 0;
}

struct FixturesOpts {
  bool list = false;
  std::string dump_name;
  std::string output;
};

int cmd_fixtures(const FixturesOpts& o) {
  if (o.list) {
    for (const Fixture& f : fixtures())
      std::cout << f.name << "  (" << f.kind << ")  " << f.source << "\n";
    return 0;
  }
  write_output(fixture_canonical_json(o.dump_name), o.output);
  return 0;
}

struct ReproduceCliOpts {
  ReproOptions opts;
  bool json_only = false;
};

int cmd_reproduce(const ReproduceCliOpts& o) {
  std::vector<CheckResult> results = run_reproduction(o.opts);
  bool all_pass = true;
  for (const CheckResult& r : results) all_pass = all_pass && r.pass;

  if (o.json_only) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& r : results)
      arr.push_back({{"name", r.name}, {"group", r.group}, {"detail", r.detail},
                     {"pass", r.pass}, {"measured", r.measured},
                     {"tolerance", r.tolerance}});
    std::cout << arr.dump(2) << "\n";
  } else {
    std::size_t passed = 0;
    for (const CheckResult& r : results) {
      passed += r.pass ? 1 : 0;
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << std::left
                << std::setw(24) << r.name << std::right << "  measured "
                << sci(r.measured) << "  tolerance " << sci(r.tolerance)
                << "  " << r.detail << "\n";
    }
    std::cout << passed << "/" << results.size() << " checks passed\n";
  }
  return all_pass ? 0 : 1;
}

double default_eps_from_env() {
  const char* env = std::getenv("UEBFORGE_TOL");
  if (!env || !*env) return 1e-9;
  char* end = nullptr;
  double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0))
    throw std::invalid_argument(std::string("invalid UEBFORGE_TOL value \"") +
                                env + "\"");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  double default_eps;
  try {
    default_eps = default_eps_from_env();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{
      "uebforge: unitary error bases from quantum Latin squares and complex "
      "Hadamard matrices"};
  app.require_subcommand(1);

  auto* construct =
      app.add_subcommand("construct", "Build an object and emit its JSON");
  construct->require_subcommand(1);

  ConstructHadamardOpts ch;
  auto* c_had = construct->add_subcommand("hadamard", "Build a Hadamard matrix");
  c_had->add_option("--fourier", ch.fourier_n, "Fourier matrix of this order");
  auto* alpha_opt = c_had->add_option(
      "--h-alpha", ch.alpha, "order-4 one-parameter family at this alpha");
  c_had->add_option("-o,--output", ch.output, "output file (default stdout)");

  ConstructQlsOpts cq;
  cq.tol.eps = default_eps;
  auto* c_qls =
      construct->add_subcommand("qls", "Build a quantum Latin square");
  c_qls->add_option("--from-hadamard", cq.from_hadamard,
                    "matrix JSON file to feed qls_from_hadamard");
  c_qls->add_option("--from-classical", cq.from_classical,
                    "classical square JSON file to embed");
  c_qls->add_option("-o,--output", cq.output, "output file (default stdout)");
  c_qls->add_option("--tol", cq.tol.eps, "entrywise tolerance");

  ConstructUebOpts cu;
  cu.tol.eps = default_eps;
  auto* c_ueb = construct->add_subcommand("ueb", "Build a unitary error basis");
  c_ueb->add_flag("--qsm", cu.qsm_mode,
                  "quantum shift-and-multiply from --qls and --hadamards");
  c_ueb->add_flag("--sm", cu.sm_mode,
                  "shift-and-multiply from --latin and --hadamards");
  c_ueb->add_option("--hadamard", cu.hadamard_file,
                    "Hadamard method from this matrix JSON file");
  c_ueb->add_option("--nice", cu.nice_kind,
                    "nice basis: pauli, or clock-shift with --order");
  c_ueb->add_option("--order", cu.order, "order for --nice clock-shift");
  c_ueb->add_option("--qls", cu.qls_file, "quantum Latin square JSON file");
  c_ueb->add_option("--latin", cu.latin_file, "classical square JSON file");
  c_ueb->add_option("--hadamards", cu.hadamards,
                    "Hadamard files; xN repeats the previous file")
      ->expected(-1);
  c_ueb->add_option("-o,--output", cu.output, "output file (default stdout)");
  c_ueb->add_option("--tol", cu.tol.eps, "entrywise tolerance");

  VerifyOpts vo;
  vo.tol.eps = default_eps;
  auto* verify = app.add_subcommand("verify", "Validate an object's axioms");
  verify->require_subcommand(1);
  for (const char* kind : {"hadamard", "qls", "ueb"}) {
    auto* sub = verify->add_subcommand(kind, std::string("validate a ") + kind);
    sub->add_option("file", vo.file, "JSON file to check")->required();
    sub->add_option("--tol", vo.tol.eps, "entrywise tolerance");
    sub->add_flag("--json", vo.json_only, "emit only the JSON report");
    sub->callback([&vo, kind] { vo.kind = kind; });
  }

  ObstructOpts oo;
  oo.tol.eps = default_eps;
  auto* obstruct =
      app.add_subcommand("obstruct", "Run an inequivalence obstruction");
  obstruct->require_subcommand(1);
  for (const char* test : {"mu-commutator", "adjoint-closure"}) {
    auto* sub = obstruct->add_subcommand(test, test);
    sub->add_option("file", oo.file, "basis JSON file")->required();
    sub->add_option("--tol", oo.tol.eps, "entrywise tolerance");
    sub->add_option("--theta", oo.theta.theta, "nonzero threshold");
    sub->add_flag("--json", oo.json_only, "emit only the JSON report");
    sub->callback([&oo, test] { oo.test = test; });
  }

  FixturesOpts fo;
  auto* fixtures_cmd =
      app.add_subcommand("fixtures", "List or dump the embedded objects");
  fixtures_cmd->require_subcommand(1);
  auto* f_list = fixtures_cmd->add_subcommand("list", "list fixture names");
  f_list->callback([&fo] { fo.list = true; });
  auto* f_dump =
      fixtures_cmd->add_subcommand("dump", "print a fixture's canonical JSON");
  f_dump->add_option("name", fo.dump_name, "fixture name")->required();
  f_dump->add_option("-o,--output", fo.output, "output file (default stdout)");

  ReproduceCliOpts ro;
  ro.opts.eps = default_eps;
  auto* reproduce =
      app.add_subcommand("reproduce", "Run the full reproduction suite");
  reproduce->add_option("--only", ro.opts.only, "run a single named check");
  reproduce->add_flag("--json", ro.json_only, "emit a JSON array of results");
  reproduce->add_option("--tol", ro.opts.eps, "entrywise tolerance");
  reproduce->add_option("--theta", ro.opts.theta, "nonzero threshold");
  reproduce->add_option("--seed", ro.opts.seed, "seed for the random suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_had->parsed()) {
      ch.has_alpha = alpha_opt->count() > 0;
      return cmd_construct_hadamard(ch);
    }
    if (c_qls->parsed()) return cmd_construct_qls(cq);
    if (c_ueb->parsed()) return cmd_construct_ueb(cu);
    if (verify->parsed()) return cmd_verify(vo);
    if (obstruct->parsed()) return cmd_obstruct(oo);
    if (fixtures_cmd->parsed()) return cmd_fixtures(fo);
    if (reproduce->parsed()) return cmd_reproduce(ro);
  } catch (const ValidationError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
