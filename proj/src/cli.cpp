#include "quiverkit/cli.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "quiverkit/lss.hpp"
#include "quiverkit/oracle.hpp"

namespace quiverkit {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& s) {
  Int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError("not an integer: '" + s + "'");
  return value;
}

std::vector<Int> parse_csv(const std::string& s) {
  if (s.empty()) throw UsageError("empty integer list");
  std::vector<Int> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(parse_int(item));
  return out;
}

// "1,0;1,1" -> {(1,0), (1,1)}; the empty string is the empty sequence.
std::vector<DimVector> parse_roots(const std::string& s) {
  std::vector<DimVector> out;
  if (s.empty()) return out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ';')) out.push_back(parse_csv(item));
  return out;
}

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::Syntax, "cannot open quiver file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_quiver(text.str());
}

json quiver_json(const Quiver& q) {
  json arrows = json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back({a.tail + 1, a.head + 1});
  return {{"n", q.vertex_count()}, {"arrows", arrows}};
}

json vectors_json(const std::vector<DimVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

json terms_json(const std::vector<DecompTerm>& terms) {
  json out = json::array();
  for (const auto& term : terms)
    out.push_back({{"root", term.root},
                   {"mult", term.mult},
                   {"class", root_class_name(term.cls)}});
  return out;
}

json report_json(const VerifyReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"pass", report.pass}, {"checks", checks}};
}

std::string format_term(const DecompTerm& term) {
  return std::to_string(term.mult) + " x " + format_vector(term.root) + " [" +
         root_class_name(term.cls) + "]";
}

void print_terms(std::ostream& out, const std::vector<DecompTerm>& terms) {
  for (const auto& term : terms) out << format_term(term) << "\n";
}

void print_report(std::ostream& out, const VerifyReport& report) {
  int failed = 0;
  for (const auto& c : report.checks) {
    if (c.pass) {
      out << "[ ok ] " << c.name << "\n";
    } else {
      out << "[FAIL] " << c.name << ": " << c.detail << "\n";
      ++failed;
    }
  }
  if (failed == 0)
    out << "PASSED (" << report.checks.size() << " checks)\n";
  else
    out << "FAILED (" << failed << " of " << report.checks.size() << " checks)\n";
}

std::string join_terms(const std::vector<DecompTerm>& terms) {
  std::string s;
  for (const auto& term : terms) {
    if (!s.empty()) s += " + ";
    s += format_term(term);
  }
  return s.empty() ? "0" : s;
}

struct Options {
  std::string quiver_path;
  std::string dim_csv;
  std::string roots_spec;
  std::string mults_csv;
  std::string kind = "generic";
  std::string side = "right";
  bool as_json = false;
  bool verify = false;
  std::uint64_t seed = 0;
  Int trials = 5;
  Int prime = 2147483647;
};

Side side_of(const Options& opt) {
  return opt.side == "left" ? Side::Left : Side::Right;
}

OracleConfig config_of(const Options& opt) { return {opt.prime, opt.trials, opt.seed}; }

// Emits either the JSON envelope or the given text, and turns a failed
// verification into exit code 1.
int emit(std::ostream& out, const Options& opt, const Quiver& q, const char* command,
         const json& result, const std::string& text, const VerifyReport* report) {
  if (opt.as_json) {
    json envelope = {{"v", 1}, {"command", command}, {"quiver", quiver_json(q)},
                     {"result", result}};
    if (report != nullptr) envelope["checks"] = report_json(*report);
    out << envelope.dump() << "\n";
  } else {
    out << text;
    if (report != nullptr) print_report(out, *report);
  }
  return (report != nullptr && !report->pass) ? 1 : 0;
}

int run_euler(std::ostream& out, const Options& opt) {
  Quiver q = load_quiver(opt.quiver_path);
  auto roots = parse_roots(opt.roots_spec);
  if (roots.size() != 2) throw UsageError("euler needs --roots \"a;b\" with two vectors");
  Int value = euler_form(q, roots[0], roots[1]);
  json result = {{"a", roots[0]}, {"b", roots[1]}, {"value", value}};
  std::string text = "<" + format_vector(roots[0]) + "," + format_vector(roots[1]) +
                     "> = " + std::to_string(value) + "\n";
  return emit(out, opt, q, "euler", result, text, nullptr);
}

int run_tits(std::ostream& out, const Options& opt) {
  Quiver q = load_quiver(opt.quiver_path);
  DimVector a = parse_csv(opt.dim_csv);
  auto [value, cls] = tits_form(q, a);
  json result = {{"dim", a}, {"value", value}, {"class", root_class_name(cls)}};
  std::string text = "q" + format_vector(a) + " = " + std::to_string(value) + " [" +
                     root_class_name(cls) + "]\n";
  return emit(out, opt, q, "tits", result, text, nullptr);
}

int run_decomp(std::ostream& out, const Options& opt) {
  Quiver q = load_quiver(opt.quiver_path);
  DimVector a = parse_csv(opt.dim_csv);
  Decomposition d = generic_decomposition(q, a);
  json result = {{"terms", terms_json(d.terms)}, {"total", d.total}};
  std::ostringstream text;
  print_terms(text, d.terms);
  VerifyReport report;
  if (opt.verify)
    report = verify_decomposition(q, d.terms, d.total, DecompKind::Generic, config_of(opt));
  return emit(out, opt, q, "decomp", result, text.str(), opt.verify ? &report : nullptr);
}

int run_lss(std::ostream& out, const Options& opt) {
  Quiver q = load_quiver(opt.quiver_path);
  DimVector a = parse_csv(opt.dim_csv);
  LssDecomposition d = generic_lss_decomposition(q, a);
  json result = {{"terms", terms_json(d.terms)},
                 {"total", d.total},
                 {"almost_loopless", d.almost_loopless}};
  std::ostringstream text;
  print_terms(text, d.terms);
  VerifyReport report;
  if (opt.verify)
    report = verify_decomposition(q, d.terms, d.total, DecompKind::LocallySemiSimple,
                                  config_of(opt));
  return emit(out, opt, q, "lss", result, text.str(), opt.verify ? &report : nullptr);
}

int run_perp_root(std::ostream& out, const Options& opt) {
  Quiver q = load_quiver(opt.quiver_path);
  DimVector g = parse_csv(opt.dim_csv);
  auto simples = perp_schur(q, g, side_of(opt));
  json result = {{"root", g}, {"side", opt.side}, {"simples", vectors_json(simples)}};
  std::ostringstream text;
  for (const auto& s : simples) text << format_vector(s) << "\n";
  return emit(out, opt, q, "perp-root", result, text.str(), nullptr);
}

int run_perp_seq(std::ostream& out, const Options& opt) {
  Quiver q = load_quiver(opt.quiver_path);
  auto seq = parse_roots(opt.roots_spec);
  auto simples = perp_sequence(q, seq, side_of(opt));
  json result = {{"sequence", vectors_json(seq)},
                 {"side", opt.side},
                 {"simples", vectors_json(simples)}};
  std::ostringstream text;
  for (const auto& s : simples) text << format_vector(s) << "\n";
  return emit(out, opt, q, "perp-seq", result, text.str(), nullptr);
}

int run_strata(std::ostream& out, const Options& opt) {
  Quiver q = load_quiver(opt.quiver_path);
  DimVector b = parse_csv(opt.dim_csv);
  LunaStrata ls = luna_strata(q, b);
  json strata = json::array();
  for (const auto& st : ls.strata) {
    json members = json::array();
    for (int k : st.members) members.push_back(k + 1);
    strata.push_back({{"members", members},
                      {"subsequence", vectors_json(st.subsequence)},
                      {"basis", vectors_json(st.basis)},
                      {"coeffs", st.coeffs},
                      {"terms", terms_json(st.decomposition.terms)},
                      {"nonvanishing", vectors_json(st.nonvanishing)}});
  }
  json result = {{"total", ls.total},
                 {"perp_basis", vectors_json(ls.perp_basis)},
                 {"strata", strata}};
  std::ostringstream text;
  text << "perp basis:";
  for (const auto& g : ls.perp_basis) text << " " << format_vector(g);
  if (ls.perp_basis.empty()) text << " (none)";
  text << "\n";
  for (const auto& st : ls.strata) {
    text << "stratum {";
    for (std::size_t k = 0; k < st.members.size(); ++k)
      text << (k ? "," : "") << st.members[k] + 1;
    text << "}: " << join_terms(st.decomposition.terms) << "\n";
  }
  return emit(out, opt, q, "strata", result, text.str(), nullptr);
}

int run_generators(std::ostream& out, const Options& opt) {
  Quiver q = load_quiver(opt.quiver_path);
  DimVector b = parse_csv(opt.dim_csv);
  auto gens = semi_invariant_generators(q, b);
  json list = json::array();
  for (const auto& g : gens) list.push_back({{"root", g.root}, {"weight", g.weight}});
  json result = {{"generators", list}};
  std::ostringstream text;
  if (gens.empty()) text << "no generators\n";
  for (const auto& g : gens)
    text << "root " << format_vector(g.root) << "  weight " << format_vector(g.weight)
         << "\n";
  return emit(out, opt, q, "generators", result, text.str(), nullptr);
}

int run_check(std::ostream& out, const Options& opt) {
  Quiver q = load_quiver(opt.quiver_path);
  DimVector total = parse_csv(opt.dim_csv);
  auto roots = parse_roots(opt.roots_spec);
  std::vector<Int> mults(roots.size(), 1);
  if (!opt.mults_csv.empty()) {
    mults = parse_csv(opt.mults_csv);
    if (mults.size() != roots.size())
      throw UsageError("--mults must list one multiplicity per root");
  }
  std::vector<DecompTerm> terms;
  for (std::size_t k = 0; k < roots.size(); ++k)
    terms.push_back({roots[k], mults[k], tits_form(q, roots[k]).second});
  DecompKind kind =
      opt.kind == "lss" ? DecompKind::LocallySemiSimple : DecompKind::Generic;
  VerifyReport report = verify_decomposition(q, terms, total, kind, config_of(opt));
  json result = {{"kind", opt.kind}, {"terms", terms_json(terms)}, {"total", total}};
  return emit(out, opt, q, "check", result, "", &report);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"exact computations with quiver representations"};
  app.name("quiverkit");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd, bool needs_dim, bool needs_roots) {
    cmd->add_option("--quiver", opt.quiver_path, "quiver description file")->required();
    if (needs_dim)
      cmd->add_option("--dim", opt.dim_csv, "dimension vector, comma-separated")
          ->required();
    if (needs_roots)
      cmd->add_option("--roots", opt.roots_spec,
                      "semicolon-separated list of comma-separated vectors");
    cmd->add_flag("--json", opt.as_json, "emit JSON instead of text");
    cmd->add_option("--seed", opt.seed, "oracle RNG seed (default 0)");
    cmd->add_option("--trials", opt.trials, "oracle trials (default 5)");
    cmd->add_option("--prime", opt.prime, "oracle field size (default 2147483647)");
    return cmd;
  };

  auto* euler = add_common(app.add_subcommand("euler", "Euler form of two vectors"),
                           false, true);
  euler->get_option("--roots")->required();
  add_common(app.add_subcommand("tits", "Tits form value and root class"), true, false);
  auto* decomp =
      add_common(app.add_subcommand("decomp", "generic decomposition"), true, false);
  decomp->add_flag("--verify", opt.verify, "cross-check with the finite-field oracle");
  auto* lss = add_common(
      app.add_subcommand("lss", "generic locally semi-simple decomposition"), true, false);
  lss->add_flag("--verify", opt.verify, "cross-check with the finite-field oracle");
  auto* perp_root = add_common(
      app.add_subcommand("perp-root", "simples of the perpendicular category of a root"),
      true, false);
  perp_root->add_option("--side", opt.side, "right or left")
      ->check(CLI::IsMember({"right", "left"}));
  auto* perp_seq = add_common(
      app.add_subcommand("perp-seq", "simples of the perpendicular category of a sequence"),
      false, true);
  perp_seq->add_option("--side", opt.side, "right or left")
      ->check(CLI::IsMember({"right", "left"}));
  add_common(app.add_subcommand("strata", "Luna strata of a prehomogeneous vector"), true,
             false);
  add_common(app.add_subcommand("generators", "semi-invariant generator weights"), true,
             false);
  auto* check = add_common(
      app.add_subcommand("check", "oracle verification of a supplied decomposition"), true,
      true);
  check->get_option("--roots")->required();
  check->add_option("--mults", opt.mults_csv, "multiplicities, one per root (default 1)");
  check->add_option("--kind", opt.kind, "generic or lss")
      ->check(CLI::IsMember({"generic", "lss"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand("euler")) return run_euler(out, opt);
    if (app.got_subcommand("tits")) return run_tits(out, opt);
    if (app.got_subcommand("decomp")) return run_decomp(out, opt);
    if (app.got_subcommand("lss")) return run_lss(out, opt);
    if (app.got_subcommand("perp-root")) return run_perp_root(out, opt);
    if (app.got_subcommand("perp-seq")) return run_perp_seq(out, opt);
    if (app.got_subcommand("strata")) return run_strata(out, opt);
    if (app.got_subcommand("generators")) return run_generators(out, opt);
    if (app.got_subcommand("check")) return run_check(out, opt);
    err << "usage error: no subcommand\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const QuiverError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace quiverkit
