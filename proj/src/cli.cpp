#include "cohcfg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include "cohcfg/analysis.hpp"
#include "cohcfg/closure.hpp"
#include "cohcfg/errors.hpp"
#include "cohcfg/io.hpp"
#include "cohcfg/isomorphism.hpp"
#include "cohcfg/schemes.hpp"
#include "cohcfg/structure.hpp"
#include "cohcfg/tensor.hpp"

namespace cohcfg {

namespace {

struct Options {
  std::string family;
  std::uint32_t q = 0;
  std::string path;
  std::string output;
  std::string points;
  std::vector<std::string> claims;
  std::string params;
  std::string validate;
  std::string mode = "greedy";
  std::uint64_t seed = 0;
  bool tensor = false;
  bool pseudocyclic = false;
  bool partly_regular = false;
  bool indistinguishing = false;
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string fiber_line(const CoherentConfiguration& cfg) {
  std::string s;
  for (const auto& f : cfg.fibers()) s += (s.empty() ? "" : " ") + std::to_string(f.size());
  return s;
}

std::vector<Point> parse_points(const std::string& text, std::size_t n) {
  std::vector<Point> pts;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw UsageError("empty entry in --points");
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw UsageError("bad point '" + tok + "'");
    if (v >= n) throw UsageError("point " + tok + " out of range");
    pts.push_back(static_cast<Point>(v));
  }
  if (pts.empty()) throw UsageError("--points is empty");
  return pts;
}

// Reads the file and checks the axioms; on failure prints the witnesses.
std::optional<CoherentConfiguration> load(const std::string& path, std::ostream& out) {
  const ColorMatrix m = read_matrix_file(path);
  const VerificationReport axioms = validate(m, ValidationLevel::axioms);
  if (!axioms.pass) {
    out << "valid false\n";
    for (const auto& f : axioms.failures) out << "violation " << f << "\n";
    return std::nullopt;
  }
  return CoherentConfiguration(m);
}

int cmd_build(const Options& o, std::ostream& out, std::ostream& err) {
  const GroupScheme s = build_family(o.family, o.q);
  const auto& x = s.scheme;
  std::string valency = "mixed";
  std::size_t k = 0;
  bool uniform = true;
  for (Color c = 0; c < x.rank(); ++c) {
    if (x.is_reflexive(c)) continue;
    if (k == 0) k = x.valency(c);
    uniform &= x.valency(c) == k;
  }
  if (uniform) valency = std::to_string(k);
  const std::string summary = "degree " + std::to_string(x.degree()) + " rank " + std::to_string(x.rank()) +
                              " valency " + valency + "\n";
  if (o.output.empty()) {
    write_configuration(out, x);
    err << summary;
  } else {
    write_configuration_file(o.output, x);
    out << summary;
  }
  return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const ColorMatrix m = read_matrix_file(o.path);
  const ValidationLevel level = o.validate == "full" ? ValidationLevel::full : ValidationLevel::axioms;
  const VerificationReport v = validate(m, level);
  if (!o.validate.empty() || !v.pass) {
    out << "valid " << yes_no(v.pass) << "\n";
    for (const auto& f : v.failures) out << "violation " << f << "\n";
  }
  if (!v.pass) return kExitClaimFailed;
  const CoherentConfiguration cfg(m);
  bool ok = true;
  out << "degree " << cfg.degree() << "\nrank " << cfg.rank() << "\nfibers " << fiber_line(cfg) << "\n";
  if (o.tensor) {
    const IntersectionTensor t = intersection_tensor(cfg, TensorCheck::automatic, o.seed);
    const auto bad = tensor_identity_violations(cfg, t);
    std::size_t entries = 0;
    for (Color c = 0; c < t.rank(); ++c) entries += t.row(c).size();
    out << "tensor_nonzero " << entries << "\ntensor_identities " << (bad.empty() ? "ok" : "violated") << "\n";
    for (const auto& b : bad) out << "violation " << b << "\n";
    ok &= bad.empty();
  }
  if (o.pseudocyclic) {
    const auto pc = is_pseudocyclic(cfg);
    out << "pseudocyclic " << yes_no(pc.pseudocyclic) << "\nvalency " << pc.valency << "\n";
    ok &= pc.pseudocyclic;
  }
  if (o.partly_regular) {
    const auto pr = partly_regular(cfg);
    out << "partly_regular " << yes_no(pr.partly_regular) << "\nregular_points " << pr.regular_points.size() << "\n";
    ok &= pr.partly_regular;
  }
  if (o.indistinguishing) out << "c " << indistinguishing_number(cfg).overall << "\n";
  return ok ? kExitOk : kExitClaimFailed;
}

int cmd_extend(const Options& o, std::ostream& out) {
  const auto cfg = load(o.path, out);
  if (!cfg) return kExitClaimFailed;
  const CoherentConfiguration ext = extend_points(*cfg, parse_points(o.points, cfg->degree()));
  if (!o.output.empty()) write_configuration_file(o.output, ext);
  out << "degree " << ext.degree() << "\nrank " << ext.rank() << "\nfiber_sizes " << fiber_line(ext) << "\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> ids = o.claims;
  if (ids.size() == 1 && ids[0] == "list") {
    for (const auto& id : known_claims()) out << id << "\n";
    return kExitOk;
  }
  for (const auto& id : ids)
    if (std::find(known_claims().begin(), known_claims().end(), id) == known_claims().end())
      throw UsageError("unknown claim '" + id + "'");
  parse_params(o.params);
  Ledger ledger;
  for (const auto& id : ids) {
    ledger.add(verify_theorem(id, o.params));
    out << ledger.reports().back().ledger_line() << "\n" << std::flush;
  }
  return ledger.all_pass() ? kExitOk : kExitClaimFailed;
}

int cmd_basenum(const Options& o, std::ostream& out) {
  const auto cfg = load(o.path, out);
  if (!cfg) return kExitClaimFailed;
  const BaseNumber b = base_number(*cfg, o.mode == "exact" ? BaseMode::exact : BaseMode::greedy);
  out << b.value << "\n";
  return kExitOk;
}

int cmd_aut(const Options& o, std::ostream& out) {
  const auto cfg = load(o.path, out);
  if (!cfg) return kExitClaimFailed;
  const AutGroup g = automorphism_group(*cfg);
  out << "order " << g.order << "\ngenerators " << g.generators.size() << "\nmethod " << to_string(g.method) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"coherent configuration toolkit", "cohcfg"};
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();

  auto* build = app.add_subcommand("build", "build a scheme and write it as COHCFG v1");
  build->add_option("--family", o.family, "hollmann-large|hollmann-small|passman|passman-frobenius")
      ->required()
      ->check(CLI::IsMember(scheme_families()));
  build->add_option("--q", o.q, "field size")->required();
  build->add_option("-o,--output", o.output, "output file (stdout if omitted)");

  auto* analyze = app.add_subcommand("analyze", "report properties of a configuration file");
  analyze->add_option("path", o.path)->required();
  analyze->add_option("--validate", o.validate, "axioms|full")->check(CLI::IsMember({"axioms", "full"}));
  analyze->add_flag("--tensor", o.tensor, "intersection numbers and identities");
  analyze->add_flag("--pseudocyclic", o.pseudocyclic);
  analyze->add_flag("--partly-regular", o.partly_regular);
  analyze->add_flag("--indistinguishing", o.indistinguishing);

  auto* extend = app.add_subcommand("extend", "point extension");
  extend->add_option("path", o.path)->required();
  extend->add_option("--points", o.points, "comma-separated points")->required();
  extend->add_option("-o,--output", o.output);

  auto* verify = app.add_subcommand("verify", "run named checks and print ledger lines");
  verify->add_option("--claim", o.claims, "claim id (repeatable, or 'list')")->required();
  verify->add_option("--params", o.params, "e.g. q=5");

  auto* basenum = app.add_subcommand("basenum", "base number");
  basenum->add_option("path", o.path)->required();
  basenum->add_option("--mode", o.mode)->check(CLI::IsMember({"greedy", "exact"}))->capture_default_str();

  auto* aut = app.add_subcommand("aut", "automorphism group");
  aut->add_option("path", o.path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(o, out, err);
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (extend->parsed()) return cmd_extend(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (basenum->parsed()) return cmd_basenum(o, out);
    if (aut->parsed()) return cmd_aut(o, out);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const IntegrityError& e) {
    err << "integrity: " << e.what() << "\n";
    return kExitClaimFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cohcfg
