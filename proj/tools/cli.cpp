#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdiep/conditions.hpp"
#include "sdiep/constructor.hpp"
#include "sdiep/eigen.hpp"
#include "sdiep/error.hpp"
#include "sdiep/matrix_io.hpp"
#include "sdiep/randomgen.hpp"
#include "sdiep/rng.hpp"
#include "sdiep/rw_basis.hpp"
#include "sdiep/search.hpp"
#include "sdiep/spectrum.hpp"

namespace sdiep::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string fixed6(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

json spectrum_json(const Spectrum& s) { return json(std::vector<double>(s.values().begin(), s.values().end())); }

json certificate_json(const FeasibilityCertificate& c) {
  json j{{"feasible", c.feasible}, {"min_entry", c.min_entry}, {"witness", nullptr}};
  if (!c.feasible) j["witness"] = {{"k", *c.witness_k}, {"l", *c.witness_l}, {"value", *c.witness_value}};
  return j;
}

json verdict_json(const ConditionVerdict& v) {
  json j{{"name", v.name}, {"applicable", v.applicable}, {"lhs", nullptr}, {"satisfied", nullptr}};
  if (v.lhs) j["lhs"] = *v.lhs;
  if (v.satisfied) j["satisfied"] = *v.satisfied;
  return j;
}

json report_json(const StochasticityReport& r) {
  return {{"pass", r.pass()},
          {"symmetric_ok", r.symmetric_ok},
          {"nonneg_ok", r.nonneg_ok},
          {"rowsum_ok", r.rowsum_ok},
          {"colsum_ok", r.colsum_ok},
          {"max_rowsum_dev", r.max_rowsum_dev},
          {"max_colsum_dev", r.max_colsum_dev},
          {"max_asymmetry", r.max_asymmetry},
          {"min_entry", r.min_entry}};
}

std::vector<Spectrum> load_spectra(const std::string& text, const std::string& file) {
  if (!text.empty() && !file.empty()) throw CLI::ValidationError("give either --spectrum or --spectrum-file");
  if (!file.empty()) {
    auto list = parse_spectrum_lines(read_text_file(file));
    if (list.empty()) throw ParseError("no spectra in " + file);
    return list;
  }
  if (text.empty()) throw CLI::RequiredError("--spectrum or --spectrum-file");
  return {parse_spectrum(text)};
}

bool wants_csv(const std::string& format, const std::string& out_path) {
  if (!format.empty()) return format == "csv";
  return fs::path(out_path).extension() == ".csv";
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string spectrum;
  std::string spectrum_file;
  std::string out;
  std::string out_dir;
  std::string format;
  bool strict = false;
  bool json = false;
  unsigned threads = 1;
};

int do_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  const auto spectra = load_spectra(a.spectrum, a.spectrum_file);
  if (spectra.size() > 1 && a.out_dir.empty()) {
    throw CLI::ValidationError("--out-dir is required when the spectrum file holds several spectra");
  }
  if (!a.out_dir.empty()) fs::create_directories(a.out_dir);

  int status = kExitOk;
  json summary = json::array();
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    const Spectrum& s = spectra[i];
    const FeasibilityCertificate cert = feasibility(s);
    if (!cert.feasible) {
      err << "warning: spectrum " << i << " is not realised with non-negative entries (min entry "
          << format_double(cert.min_entry) << " at (" << *cert.witness_k << ", " << *cert.witness_l << "))\n";
      if (a.strict) {
        status = kExitDomainFailure;
        continue;
      }
    }
    const DenseMatrix m = clamp_entry_dust(construct(s, a.threads));

    std::string target = a.out;
    if (!a.out_dir.empty()) {
      char name[32];
      std::snprintf(name, sizeof name, "matrix_%04zu.%s", i, wants_csv(a.format, "") ? "csv" : "json");
      target = (fs::path(a.out_dir) / name).string();
    }
    const bool csv = wants_csv(a.format, target);
    const std::string text =
        csv ? matrix_to_csv(m)
            : matrix_to_json(m, {{"spectrum", spectrum_json(s).dump()}, {"feasibility", certificate_json(cert).dump()}});
    if (target.empty()) {
      if (!a.json) out << text;
    } else {
      write_text_file(target, text);
    }
    summary.push_back({{"spectrum", spectrum_json(s)}, {"feasibility", certificate_json(cert)},
                       {"file", target.empty() ? json(nullptr) : json(target)}});
  }
  if (a.json) out << (summary.size() == 1 ? summary[0] : summary).dump(2) << '\n';
  return status;
}

// -------------------------------------------------------------------- check

struct CheckArgs {
  std::string spectrum;
  std::string spectrum_file;
  int max_k = 50;
  bool json = false;
};

json check_json(const Spectrum& s, int max_k) {
  const SpectrumClass c = classify(s);
  const TraceMomentResult tm = trace_moment_check(s, max_k);
  const ConditionReport r = full_report(s);
  json conditions = json::array();
  for (const auto& v : r.classical) conditions.push_back(verdict_json(v));
  return {{"spectrum", spectrum_json(s)},
          {"n", s.size()},
          {"classification",
           {{"is_suleimanova", c.is_suleimanova},
            {"delta", c.delta},
            {"is_normalized", c.is_normalized},
            {"is_nonnegative_case", c.is_nonnegative_case}}},
          {"trace_moment",
           {{"ok", tm.ok},
            {"max_k", max_k},
            {"first_failing_power", tm.first_failing_power ? json(*tm.first_failing_power) : json(nullptr)}}},
          {"conditions", conditions},
          {"corollary", std::string(to_string(r.corollary))},
          {"feasibility", certificate_json(r.feasibility)}};
}

void check_table(const Spectrum& s, int max_k, std::ostream& out) {
  const SpectrumClass c = classify(s);
  const TraceMomentResult tm = trace_moment_check(s, max_k);
  const ConditionReport r = full_report(s);
  out << "spectrum: " << format_spectrum(s) << '\n';
  out << "n = " << s.size() << "  delta = " << fixed6(c.delta)
      << "  suleimanova = " << (c.is_suleimanova ? "yes" : "no")
      << "  normalized = " << (c.is_normalized ? "yes" : "no") << '\n';
  out << "trace moments up to k = " << max_k << ": "
      << (tm.ok ? std::string("ok") : "fail at k = " + std::to_string(*tm.first_failing_power)) << '\n';
  out << pad("condition", 30) << pad("applicable", 12) << pad("lhs", 14) << "verdict\n";
  for (const auto& v : r.classical) {
    out << pad(v.name, 30) << pad(v.applicable ? "yes" : "no", 12) << pad(v.lhs ? fixed6(*v.lhs) : "-", 14)
        << (v.satisfied ? (*v.satisfied ? "pass" : "fail") : "n/a") << '\n';
  }
  out << pad("corollary_bound", 30) << pad("yes", 12) << pad("-", 14) << to_string(r.corollary) << '\n';
  out << pad("feasibility", 30) << pad("yes", 12) << pad(fixed6(r.feasibility.min_entry), 14)
      << (r.feasibility.feasible ? "pass" : "fail");
  if (!r.feasibility.feasible) {
    out << " at (" << *r.feasibility.witness_k << ", " << *r.feasibility.witness_l << ")";
  }
  out << '\n';
}

int do_check(const CheckArgs& a, std::ostream& out) {
  if (a.max_k < 1) throw CLI::ValidationError("--max-k must be positive");
  const auto spectra = load_spectra(a.spectrum, a.spectrum_file);
  if (a.json) {
    json all = json::array();
    for (const auto& s : spectra) all.push_back(check_json(s, a.max_k));
    out << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    if (i) out << '\n';
    check_table(spectra[i], a.max_k, out);
  }
  return kExitOk;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
  std::string in;
  double tol = kEntryTolerance;
  double sum_tol = 1e-10;
  bool json = false;
};

int do_verify(const VerifyArgs& a, std::ostream& out) {
  const DenseMatrix m = read_matrix_file(a.in);
  const StochasticityReport r = is_doubly_stochastic(m, a.tol, a.sum_tol);
  std::optional<std::vector<double>> eig;
  if (r.symmetric_ok) eig = sym_eigenvalues(m);

  if (a.json) {
    json j = report_json(r);
    j["n"] = m.size();
    j["eigenvalues"] = eig ? json(*eig) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "n = " << m.size() << '\n';
    out << "symmetric:        " << (r.symmetric_ok ? "ok" : "FAIL") << "  (max asymmetry " << r.max_asymmetry << ")\n";
    out << "non-negative:     " << (r.nonneg_ok ? "ok" : "FAIL") << "  (min entry " << fixed6(r.min_entry) << ")\n";
    out << "row sums:         " << (r.rowsum_ok ? "ok" : "FAIL") << "  (max deviation " << r.max_rowsum_dev << ")\n";
    out << "column sums:      " << (r.colsum_ok ? "ok" : "FAIL") << "  (max deviation " << r.max_colsum_dev << ")\n";
    out << "doubly stochastic: " << (r.pass() ? "yes" : "no") << '\n';
    if (eig) {
      out << "eigenvalues:";
      for (const double v : *eig) out << ' ' << fixed6(v);
      out << '\n';
    }
  }
  return r.pass() ? kExitOk : kExitDomainFailure;
}

// -------------------------------------------------------------------- basis

struct BasisArgs {
  std::size_t n = 0;
  std::string out;
};

int do_basis(const BasisArgs& a, std::ostream& out) {
  const OrthonormalBasis b = build_basis(a.n);
  json eig = json::array();
  std::string eig_text = "[";
  for (std::size_t k = 0; k < b.eigvals.size(); ++k) {
    if (k) eig_text += ", ";
    eig_text += format_double(b.eigvals[k]);
  }
  eig_text += "]";
  const std::string text = matrix_to_json(b.q, {{"eigenvalues", eig_text}});
  if (a.out.empty()) out << text;
  else write_text_file(a.out, text);
  return kExitOk;
}

// ------------------------------------------------------------------- random

struct RandomArgs {
  std::size_t n = 0;
  double alpha = -0.5;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::string out_dir;
  std::string format = "json";
  std::string distribution = "uniform";
  double power = 3.0;
};

int do_random(const RandomArgs& a, std::ostream& out) {
  GenConfig cfg;
  cfg.n = a.n;
  cfg.alpha = a.alpha;
  cfg.seed = a.seed;
  cfg.distribution = parse_distribution(a.distribution);
  cfg.power = a.power;
  cfg.validate();
  const bool csv = a.format == "csv";
  if (!a.out_dir.empty()) fs::create_directories(a.out_dir);
  for (std::size_t i = 0; i < a.count; ++i) {
    GenConfig c = cfg;
    c.seed = derive_seed(cfg.seed, i);
    const Spectrum s = random_spectrum(c);
    const DenseMatrix m = clamp_entry_dust(construct(s));
    const std::string text = csv ? matrix_to_csv(m) : matrix_to_json(m, {{"spectrum", spectrum_json(s).dump()}});
    if (a.out_dir.empty()) {
      if (csv && i) out << '\n';
      out << text;
    } else {
      char name[32];
      std::snprintf(name, sizeof name, "matrix_%04zu.%s", i, csv ? "csv" : "json");
      write_text_file(fs::path(a.out_dir) / name, text);
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- delta-min

struct DeltaMinArgs {
  std::size_t n = 0;
  std::size_t trials = 100000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool json = false;
};

int do_delta_min(const DeltaMinArgs& a, std::ostream& out) {
  SearchOptions opts;
  opts.threads = a.threads;
  const DeltaBracket b = bracket_delta_min(a.n, a.trials, a.seed, opts);
  const double max_prod = max_s_product(a.n);
  if (a.json) {
    json j{{"n", b.n},
           {"lower", b.lower},
           {"upper", b.upper},
           {"heuristic_upper", b.heuristic_upper ? json(*b.heuristic_upper) : json(nullptr)},
           {"witness", b.witness ? spectrum_json(*b.witness) : json(nullptr)},
           {"witness_feasibility", b.witness ? certificate_json(feasibility(*b.witness)) : json(nullptr)},
           {"trials", b.trials},
           {"seed", b.seed},
           {"max_s_product", max_prod}};
    out << j.dump(2) << '\n';
  } else {
    out << "n = " << b.n << "  trials = " << b.trials << "  seed = " << b.seed << '\n';
    out << "delta_min in [" << format_double(b.lower) << ", " << format_double(b.upper) << "]\n";
    if (b.heuristic_upper) out << "refinement frontier: " << format_double(*b.heuristic_upper) << '\n';
    if (b.witness) out << "witness: " << format_spectrum(*b.witness) << '\n';
    else out << "witness: none found\n";
    out << "max S_j(k) S_j(l) = " << format_double(max_prod) << '\n';
  }
  return kExitOk;
}

// ----------------------------------------------------------------- separate

struct SeparateArgs {
  std::size_t n = 0;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t limit = 10;
  bool json = false;
};

int do_separate(const SeparateArgs& a, std::ostream& out) {
  auto found = separating_examples(a.n, a.trials, a.seed);
  const std::size_t total = found.size();
  if (found.size() > a.limit) found.erase(found.begin() + static_cast<std::ptrdiff_t>(a.limit), found.end());
  if (a.json) {
    json list = json::array();
    for (const auto& s : found) list.push_back(spectrum_json(s));
    out << json{{"n", a.n}, {"trials", a.trials}, {"seed", a.seed}, {"found", total}, {"spectra", list}}.dump(2)
        << '\n';
  } else {
    out << "found " << total << " separating spectra in " << a.trials << " trials\n";
    for (const auto& s : found) out << format_spectrum(s) << '\n';
  }
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric doubly stochastic matrices with prescribed spectra", "sdiep"};
  app.require_subcommand(1, 1);

  ConstructArgs construct_args;
  auto* construct_cmd = app.add_subcommand("construct", "Build P(Lambda) for a spectrum");
  construct_cmd->add_option("--spectrum", construct_args.spectrum, "Comma-separated list, leading 1");
  construct_cmd->add_option("--spectrum-file", construct_args.spectrum_file, "One spectrum per line")
      ->check(CLI::ExistingFile);
  construct_cmd->add_option("--out", construct_args.out, "Output file (.json or .csv); stdout if omitted");
  construct_cmd->add_option("--out-dir", construct_args.out_dir, "Directory for one file per spectrum");
  construct_cmd->add_option("--format", construct_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  construct_cmd->add_flag("--strict", construct_args.strict, "Exit 1 instead of writing an infeasible matrix");
  construct_cmd->add_flag("--json", construct_args.json, "Print a JSON summary");
  construct_cmd->add_option("--threads", construct_args.threads, "Worker threads")->check(CLI::PositiveNumber);

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Evaluate sufficient conditions and feasibility");
  check_cmd->add_option("--spectrum", check_args.spectrum, "Comma-separated list, leading 1");
  check_cmd->add_option("--spectrum-file", check_args.spectrum_file, "One spectrum per line")
      ->check(CLI::ExistingFile);
  check_cmd->add_option("--max-k", check_args.max_k, "Highest power for the trace-moment check");
  check_cmd->add_flag("--json", check_args.json, "Machine-readable output");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a matrix file for double stochasticity");
  verify_cmd->add_option("--in", verify_args.in, "Matrix file (JSON or CSV)")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--tol", verify_args.tol, "Entry tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--sum-tol", verify_args.sum_tol, "Row/column sum tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify_args.json, "Machine-readable output");

  BasisArgs basis_args;
  auto* basis_cmd = app.add_subcommand("basis", "Write the orthonormal walk eigenbasis");
  basis_cmd->add_option("--n", basis_args.n, "Dimension")->required()->check(CLI::PositiveNumber);
  basis_cmd->add_option("--out", basis_args.out, "Output JSON file; stdout if omitted");

  RandomArgs random_args;
  auto* random_cmd = app.add_subcommand("random", "Generate random symmetric doubly stochastic matrices");
  random_cmd->add_option("--n", random_args.n, "Dimension")->required();
  random_cmd->add_option("--alpha", random_args.alpha, "Tail sum, in [-1/2, 1/2]");
  random_cmd->add_option("--seed", random_args.seed, "Master seed");
  random_cmd->add_option("--count", random_args.count, "Number of matrices");
  random_cmd->add_option("--out-dir", random_args.out_dir, "Directory for matrix_NNNN files; stdout if omitted");
  random_cmd->add_option("--format", random_args.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  random_cmd->add_option("--distribution", random_args.distribution, "uniform or power")
      ->check(CLI::IsMember({"uniform", "power"}));
  random_cmd->add_option("--power", random_args.power, "Exponent for the power distribution");

  DeltaMinArgs delta_args;
  auto* delta_cmd = app.add_subcommand("delta-min", "Bracket delta_min by randomised search");
  delta_cmd->add_option("--n", delta_args.n, "Dimension")->required();
  delta_cmd->add_option("--trials", delta_args.trials, "Random trials")->check(CLI::PositiveNumber);
  delta_cmd->add_option("--seed", delta_args.seed, "Master seed");
  delta_cmd->add_option("--threads", delta_args.threads, "Worker threads")->check(CLI::PositiveNumber);
  delta_cmd->add_flag("--json", delta_args.json, "Machine-readable output");

  SeparateArgs separate_args;
  auto* separate_cmd =
      app.add_subcommand("separate", "Find realisable spectra that fail every classical condition");
  separate_cmd->add_option("--n", separate_args.n, "Dimension")->required();
  separate_cmd->add_option("--trials", separate_args.trials, "Random trials")->check(CLI::PositiveNumber);
  separate_cmd->add_option("--seed", separate_args.seed, "Master seed");
  separate_cmd->add_option("--limit", separate_args.limit, "Maximum spectra to print");
  separate_cmd->add_flag("--json", separate_args.json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*construct_cmd) return do_construct(construct_args, out, err);
    if (*check_cmd) return do_check(check_args, out);
    if (*verify_cmd) return do_verify(verify_args, out);
    if (*basis_cmd) return do_basis(basis_args, out);
    if (*random_cmd) return do_random(random_args, out);
    if (*delta_cmd) return do_delta_min(delta_args, out);
    if (*separate_cmd) return do_separate(separate_args, out);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainFailure;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace sdiep::cli
