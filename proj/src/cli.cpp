#include "distlap/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "distlap/bounds.hpp"
#include "distlap/error.hpp"
#include "distlap/families.hpp"
#include "distlap/spectra.hpp"
#include "distlap/transforms.hpp"
#include "distlap/verify.hpp"

namespace distlap::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class OutFormat { Text, Json, Csv };

struct CliConfig {
  std::string graph6;
  std::string file;
  std::string family;
  int native_n = 0;
  std::vector<std::string> checks;
  std::string format = "text";
  double tol = kEqualityTol;
  int jobs = 0;
  bool fail_fast = false;
  bool precise = false;
  bool timing = false;
  std::string matrix = "L";
  // graft
  std::string graft_kind = "vertex";
  std::vector<int> anchor{0};
  int k = 2;
  int l = 2;
};

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::InvalidParams, what); }

OutFormat out_format(const CliConfig& c) {
  if (c.format == "text") return OutFormat::Text;
  if (c.format == "json") return OutFormat::Json;
  if (c.format == "csv") return OutFormat::Csv;
  usage("unknown format '" + c.format + "'");
}

Tolerance tolerance(const CliConfig& c) {
  if (!(c.tol > 0.0)) usage("--tol must be positive");
  return Tolerance{c.tol / 10.0, c.tol};
}

int worker_count(const CliConfig& c) {
  if (c.jobs > 0) return c.jobs;
  if (const char* env = std::getenv("DISTLAP_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string num(double x, bool precise) {
  if (std::abs(x) < (precise ? 5e-13 : 5e-5)) x = 0.0;  // no "-0.0000"
  char buf[64];
  std::snprintf(buf, sizeof buf, precise ? "%.12f" : "%.4f", x);
  return buf;
}

MatrixKind matrix_kind(const std::string& m) {
  if (m == "L") return MatrixKind::DistanceLaplacian;
  if (m == "Q") return MatrixKind::DistanceSignlessLaplacian;
  if (m == "D") return MatrixKind::Distance;
  if (m == "lap") return MatrixKind::Laplacian;
  usage("unknown matrix '" + m + "' (expected L, Q, D or lap)");
}

// Exactly one input source, resolved into a corpus.
Corpus load_input(const CliConfig& c) {
  const int sources =
      !c.graph6.empty() + !c.file.empty() + !c.family.empty() + (c.native_n > 0 ? 1 : 0);
  if (sources != 1) usage("give exactly one of --graph6, --file, --family, --n");
  if (!c.graph6.empty()) {
    Corpus corpus;
    corpus.descriptor = "graph6:" + c.graph6;
    corpus.entries.push_back({c.graph6, from_graph6(c.graph6)});
    return corpus;
  }
  if (!c.family.empty()) {
    const Graph g = build(parse_family(c.family));
    Corpus corpus;
    corpus.descriptor = "family:" + c.family;
    corpus.entries.push_back({to_graph6(g), g});
    return corpus;
  }
  if (!c.file.empty()) {
    std::ifstream in(c.file);
    if (!in) throw Error(ErrorKind::CorpusError, "cannot open '" + c.file + "'");
    return read_graph6_corpus(in, "file:" + c.file);
  }
  return native_corpus(c.native_n);
}

std::string ids_footer() {
  std::string s = "Theorem ids:";
  for (const auto& id : scan_theorem_ids()) s += " " + id;
  return s;
}

std::vector<std::string> resolve_checks(const CliConfig& c, bool scan_ids) {
  if (!c.checks.empty()) return c.checks;
  if (scan_ids) return scan_theorem_ids();
  std::vector<std::string> ids;
  for (auto id : bound_theorem_ids()) ids.emplace_back(id);
  return ids;
}

int cmd_spectrum(const CliConfig& c, std::ostream& out) {
  const OutFormat fmt = out_format(c);
  const MatrixKind kind = matrix_kind(c.matrix);
  const Corpus corpus = load_input(c);
  Json all = Json::array();
  if (fmt == OutFormat::Csv) out << "graph6,matrix,index,eigenvalue\n";
  for (const auto& e : corpus.entries) {
    if (!is_connected(e.graph) && kind != MatrixKind::Laplacian) {
      throw Error(ErrorKind::DisconnectedGraph, e.graph6 + " is disconnected");
    }
    const Spectrum s = eigenvalues(build_matrix(e.graph, kind));
    if (fmt == OutFormat::Text) {
      out << e.graph6 << "  n=" << e.graph.order() << "  matrix=" << c.matrix << "\n";
      out << "spectral_radius " << num(s.largest(), c.precise) << "\n";
      out << "eigenvalues";
      for (double x : s.values) out << ' ' << num(x, c.precise);
      out << "\n";
    } else if (fmt == OutFormat::Csv) {
      for (int i = 1; i <= s.size(); ++i) out << e.graph6 << ',' << c.matrix << ',' << i << ',' << num(s.at(i), true) << "\n";
    } else {
      Json j;
      j["graph6"] = e.graph6;
      j["matrix"] = c.matrix;
      j["spectral_radius"] = s.largest();
      j["eigenvalues"] = s.values;
      all.push_back(std::move(j));
    }
  }
  if (fmt == OutFormat::Json) out << (all.size() == 1 ? all.front() : all).dump(2) << "\n";
  return kExitOk;
}

void print_verdict_text(const BoundVerdict& v, bool precise, std::ostream& out) {
  out << v.theorem_id << "  ";
  if (!v.applicable) {
    out << "n/a  (" << v.note << ")\n";
    return;
  }
  out << "bound=" << num(v.bound_value, precise) << "  observed=" << num(v.observed, precise) << "  "
      << (v.holds ? "holds" : "VIOLATED");
  if (v.equality) out << "  equality";
  if (v.strict) out << "  strict";
  if (!v.note.empty()) out << "  (" << v.note << ")";
  out << "\n";
}

Json verdict_json(const BoundVerdict& v) {
  Json j;
  j["theorem_id"] = v.theorem_id;
  j["applicable"] = v.applicable;
  j["bound"] = v.bound_value;
  j["observed"] = v.observed;
  j["holds"] = v.holds;
  j["strict"] = v.strict;
  j["equality"] = v.equality;
  Json w = Json::object();
  for (const auto& [k, x] : v.witness) w[k] = x;
  j["witness"] = std::move(w);
  j["note"] = v.note;
  return j;
}

int cmd_bounds(const CliConfig& c, std::ostream& out) {
  const OutFormat fmt = out_format(c);
  const Tolerance tol = tolerance(c);
  const auto ids = resolve_checks(c, false);
  const Corpus corpus = load_input(c);
  bool violated = false;
  Json all = Json::array();
  if (fmt == OutFormat::Csv) out << "theorem_id,graph6,bound,observed,holds,equality\n";
  for (const auto& e : corpus.entries) {
    if (!is_connected(e.graph)) throw Error(ErrorKind::DisconnectedGraph, e.graph6 + " is disconnected");
    const Analysis a = analyze(e.graph, tol);
    if (fmt == OutFormat::Text) out << e.graph6 << "  n=" << a.order() << "  omega=" << a.omega << "\n";
    Json verdicts = Json::array();
    for (const auto& id : ids) {
      BoundVerdict v;
      if (id == "L2.3" || id == "L2.4") {
        v = check_edge_deletion(a, id == "L2.3" ? MatrixKind::DistanceLaplacian : MatrixKind::DistanceSignlessLaplacian);
      } else {
        v = evaluate_bound(id, a);
      }
      violated = violated || !v.holds;
      if (fmt == OutFormat::Text) {
        out << "  ";
        print_verdict_text(v, c.precise, out);
      } else if (fmt == OutFormat::Csv) {
        if (v.applicable) {
          out << v.theorem_id << ',' << e.graph6 << ',' << num(v.bound_value, true) << ',' << num(v.observed, true) << ','
              << (v.holds ? "true" : "false") << ',' << (v.equality ? "true" : "false") << "\n";
        }
      } else {
        verdicts.push_back(verdict_json(v));
      }
    }
    if (fmt == OutFormat::Json) {
      Json j;
      j["graph6"] = e.graph6;
      j["verdicts"] = std::move(verdicts);
      all.push_back(std::move(j));
    }
  }
  if (fmt == OutFormat::Json) out << (all.size() == 1 ? all.front() : all).dump(2) << "\n";
  return violated ? kExitViolations : kExitOk;
}

int cmd_family(const CliConfig& c, std::ostream& out) {
  const OutFormat fmt = out_format(c);
  if (c.family.empty()) usage("family needs --family\n" + family_grammar());
  const FamilySpec spec = parse_family(c.family);
  const Graph g = build(spec);
  const SpectralProfile p = spectral_profile(g);
  Json j;
  j["family"] = to_string(spec);
  j["graph6"] = to_graph6(g);
  j["n"] = g.order();
  j["edges"] = g.edge_count();
  j["wiener"] = p.dd.wiener;
  j["diameter"] = p.dd.diam;
  j["L_radius"] = p.dl_radius();
  j["Q_radius"] = p.dq_radius();
  j["Q_min"] = p.dq.smallest();
  Json closed = Json::object();
  for (Quantity q : {Quantity::DLRadius, Quantity::QRadius, Quantity::QMinEig, Quantity::Wiener}) {
    try {
      closed[std::string(to_string(q))] = closed_form(spec, q);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsupportedQuantity) throw;
    }
  }
  j["closed_form"] = closed;
  if (fmt == OutFormat::Json) {
    out << j.dump(2) << "\n";
  } else if (fmt == OutFormat::Csv) {
    out << "family,graph6,n,edges,wiener,diameter,L_radius,Q_radius,Q_min\n";
    out << to_string(spec) << ',' << to_graph6(g) << ',' << g.order() << ',' << g.edge_count() << ',' << p.dd.wiener << ','
        << p.dd.diam << ',' << num(p.dl_radius(), true) << ',' << num(p.dq_radius(), true) << ','
        << num(p.dq.smallest(), true) << "\n";
  } else {
    out << to_string(spec) << "  graph6=" << to_graph6(g) << "  n=" << g.order() << "  edges=" << g.edge_count()
        << "\n";
    out << "wiener " << p.dd.wiener << "\ndiameter " << p.dd.diam << "\n";
    out << "L_radius " << num(p.dl_radius(), c.precise) << "\n";
    out << "Q_radius " << num(p.dq_radius(), c.precise) << "\n";
    out << "Q_min " << num(p.dq.smallest(), c.precise) << "\n";
    for (const auto& [name, value] : closed.items()) {
      out << "closed_form " << name << ' ' << num(value.get<double>(), c.precise) << "\n";
    }
  }
  return kExitOk;
}

int cmd_graft(const CliConfig& c, std::ostream& out) {
  const OutFormat fmt = out_format(c);
  const Corpus corpus = load_input(c);
  if (corpus.entries.size() != 1) usage("graft needs a single base graph");
  GraftSpec spec;
  spec.base = corpus.entries.front().graph;
  if (c.graft_kind == "vertex") {
    spec.kind = GraftKind::TwoPathsAtVertex;
  } else if (c.graft_kind == "twins") {
    spec.kind = GraftKind::TwoPathsAtTwins;
  } else {
    usage("--kind must be vertex or twins");
  }
  if (c.anchor.empty() || c.anchor.size() > 2) usage("--anchor takes u or u,v");
  spec.u = c.anchor[0];
  spec.v = c.anchor.size() == 2 ? c.anchor[1] : -1;
  if (spec.kind == GraftKind::TwoPathsAtTwins && c.anchor.size() != 2) usage("twin grafts need --anchor u,v");
  spec.k = c.k;
  spec.l = c.l;
  const Graph before = apply_graft(spec);
  const Graph after = apply_graft(moved_one(spec));
  std::vector<BoundVerdict> verdicts;
  if (spec.l >= 2) {
    verdicts.push_back(check_graft_monotone_L(spec));
    verdicts.push_back(check_graft_monotone_Q(spec));
  }
  bool violated = false;
  for (const auto& v : verdicts) violated = violated || !v.holds;
  if (fmt == OutFormat::Json) {
    Json j;
    j["grafted"] = to_graph6(before);
    j["moved"] = to_graph6(after);
    Json vs = Json::array();
    for (const auto& v : verdicts) vs.push_back(verdict_json(v));
    j["verdicts"] = std::move(vs);
    out << j.dump(2) << "\n";
  } else if (fmt == OutFormat::Csv) {
    out << "theorem_id,graph6,bound,observed,holds,equality\n";
    for (const auto& v : verdicts) {
      out << v.theorem_id << ',' << to_graph6(before) << ',' << num(v.bound_value, true) << ','
          << num(v.observed, true) << ',' << (v.holds ? "true" : "false") << ',' << (v.equality ? "true" : "false")
          << "\n";
    }
  } else {
    out << "grafted " << to_graph6(before) << "  (k=" << spec.k << ", l=" << spec.l << ")\n";
    out << "moved   " << to_graph6(after) << "  (k=" << spec.k + 1 << ", l=" << spec.l - 1 << ")\n";
    for (const auto& v : verdicts) print_verdict_text(v, c.precise, out);
  }
  return violated ? kExitViolations : kExitOk;
}

int cmd_scan(const CliConfig& c, std::ostream& out) {
  const OutFormat fmt = out_format(c);
  ScanOptions options;
  options.jobs = worker_count(c);
  options.fail_fast = c.fail_fast;
  options.tol = tolerance(c);
  const auto ids = resolve_checks(c, true);
  const Corpus corpus = load_input(c);
  const auto reports = scan(ids, corpus, options);
  bool violated = false;
  for (const auto& r : reports) violated = violated || !r.passed();
  if (fmt == OutFormat::Text) {
    for (const auto& r : reports) {
      out << r.theorem_id << "  " << r.corpus << "  checked=" << r.graphs_checked << "  applicable=" << r.applicable
          << "  skipped=" << r.skipped_disconnected + r.skipped_over_order << "  violations=" << r.violations.size()
          << "  equality=" << r.equality_witnesses.size() << "  " << (r.passed() ? "PASS" : "FAIL") << "\n";
      for (const auto& f : r.violations) {
        out << "  violation " << f.graph6 << "  ";
        print_verdict_text(f.verdict, c.precise, out);
      }
    }
  } else {
    out << emit_reports(reports, fmt == OutFormat::Json ? ReportFormat::Json : ReportFormat::Csv, c.timing);
  }
  return violated ? kExitViolations : kExitOk;
}

int cmd_table1(const CliConfig& c, std::ostream& out) {
  const OutFormat fmt = out_format(c);
  const Table1Report r = table1_regression();
  if (fmt == OutFormat::Text) {
    out << "n   kite        tstar       pass\n";
    for (const auto& row : r.rows) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%-3d %-11s %-11s %s\n", row.n, num(row.kite, c.precise).c_str(),
                    num(row.tstar, c.precise).c_str(), row.pass ? "yes" : "NO");
      out << buf;
    }
  } else {
    out << emit_report(r, fmt == OutFormat::Json ? ReportFormat::Json : ReportFormat::Csv, c.timing);
  }
  return r.passed() ? kExitOk : kExitViolations;
}

void add_input(CLI::App* sub, CliConfig& c) {
  sub->add_option("--graph6", c.graph6, "Graph in graph6 encoding");
  sub->add_option("--file", c.file, "File with one graph6 string per line");
  sub->add_option("--family", c.family, "Named family, e.g. kite:7 or turan:10,3");
  sub->add_option("--n", c.native_n, "All connected graphs of this order (1..7)")->check(CLI::Range(1, 7));
}

void add_output(CLI::App* sub, CliConfig& c) {
  sub->add_option("--format", c.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_flag("--precise", c.precise, "Print 12 decimals instead of 4");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig c;
  CLI::App app{"Distance Laplacian and distance signless Laplacian spectra of graphs"};
  app.require_subcommand(1);
  app.footer(ids_footer());

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of L, Q, D or the ordinary Laplacian (lap)");
  add_input(spectrum, c);
  add_output(spectrum, c);
  spectrum->add_option("--matrix", c.matrix, "L, Q, D or lap")->check(CLI::IsMember({"L", "Q", "D", "lap"}));

  auto* bounds = app.add_subcommand("bounds", "Evaluate spectral bounds on graphs");
  add_input(bounds, c);
  add_output(bounds, c);
  bounds->add_option("--check", c.checks, "Theorem ids to evaluate (default: all bounds)");
  bounds->add_option("--tol", c.tol, "Equality tolerance (slack is a tenth of it)");

  auto* fam = app.add_subcommand("family", "Build a named family member and report its invariants");
  fam->add_option("--family", c.family, "Family spec")->required();
  add_output(fam, c);
  fam->footer(family_grammar() + "\n" + ids_footer());

  auto* graft = app.add_subcommand("graft", "Hang two pendant paths on a base graph and compare with one vertex moved");
  graft->add_option("--base,--graph6", c.graph6, "Base graph in graph6 encoding");
  graft->add_option("--family", c.family, "Base graph as a named family");
  add_output(graft, c);
  graft->add_option("--kind", c.graft_kind, "vertex or twins")->check(CLI::IsMember({"vertex", "twins"}));
  graft->add_option("--anchor", c.anchor, "u for vertex grafts, u,v for twins")->delimiter(',');
  graft->add_option("--k", c.k, "Vertices on the first arm");
  graft->add_option("--l", c.l, "Vertices on the second arm (k >= l)");

  auto* scan_cmd = app.add_subcommand("scan", "Check theorems over a corpus of graphs");
  add_input(scan_cmd, c);
  add_output(scan_cmd, c);
  scan_cmd->add_option("--check", c.checks, "Theorem ids (default: all)");
  scan_cmd->add_option("--tol", c.tol, "Equality tolerance (slack is a tenth of it)");
  scan_cmd->add_option("--jobs", c.jobs, "Worker threads (default: DISTLAP_JOBS or all cores)");
  scan_cmd->add_flag("--fail-fast", c.fail_fast, "Stop at the first violation");
  scan_cmd->add_flag("--timing", c.timing, "Include wall time in json reports");

  auto* table1 = app.add_subcommand("table1", "Kite against T(2,2,n-5) for n = 7..13");
  add_output(table1, c);
  table1->add_flag("--timing", c.timing, "Include wall time in json output");

  for (auto* sub : {spectrum, bounds, graft, scan_cmd, table1}) sub->footer(ids_footer());

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(c, out);
    if (bounds->parsed()) return cmd_bounds(c, out);
    if (fam->parsed()) return cmd_family(c, out);
    if (graft->parsed()) return cmd_graft(c, out);
    if (scan_cmd->parsed()) return cmd_scan(c, out);
    if (table1->parsed()) return cmd_table1(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace distlap::cli
