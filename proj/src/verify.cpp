#include "distlap/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <istream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "distlap/bounds.hpp"
#include "distlap/error.hpp"
#include "distlap/families.hpp"
#include "distlap/spectra.hpp"
#include "distlap/transforms.hpp"

namespace distlap {

namespace {

constexpr std::size_t kChunk = 8;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return std::string(s);
}

BoundVerdict evaluate(std::string_view id, const Analysis& a) {
  if (id == "L2.3") return check_edge_deletion(a, MatrixKind::DistanceLaplacian);
  if (id == "L2.4") return check_edge_deletion(a, MatrixKind::DistanceSignlessLaplacian);
  return evaluate_bound(id, a);
}

void check_known(std::string_view id) {
  const auto ids = scan_theorem_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw Error(ErrorKind::UnknownTheorem, "unknown theorem id '" + std::string(id) + "'");
  }
}

}  // namespace

Corpus native_corpus(int n) {
  Corpus c;
  c.descriptor = "native:n=" + std::to_string(n);
  for (const Graph& g : enumerate_connected(n)) c.entries.push_back({to_graph6(g), g});
  return c;
}

Corpus read_graph6_corpus(std::istream& in, std::string descriptor) {
  Corpus c;
  c.descriptor = std::move(descriptor);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string text = trim(line);
    if (text.rfind(">>graph6<<", 0) == 0) text = text.substr(10);
    if (text.empty()) continue;
    try {
      c.entries.push_back({text, from_graph6(text)});
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::UnsupportedOrder) {
        ++c.skipped_over_order;
        continue;
      }
      throw Error(ErrorKind::CorpusError, c.descriptor + " line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (in.bad()) throw Error(ErrorKind::CorpusError, "read failure on " + c.descriptor);
  return c;
}

std::vector<std::string> scan_theorem_ids() {
  std::vector<std::string> ids;
  for (auto id : bound_theorem_ids()) ids.emplace_back(id);
  for (const char* id : {"L2.3", "L2.4", "L4.1", "L4.2", "L5.4"}) ids.emplace_back(id);
  return ids;
}

std::vector<ScanReport> scan(std::span<const std::string> ids, const Corpus& corpus, const ScanOptions& options) {
  for (const auto& id : ids) check_known(id);
  const auto start = Clock::now();

  const std::size_t total = corpus.entries.size();
  // verdicts[g] stays empty for disconnected entries.
  std::vector<std::vector<BoundVerdict>> verdicts(total);
  std::vector<char> connected(total, 0);
  const std::size_t chunks = (total + kChunk - 1) / kChunk;

  std::atomic<std::size_t> next_chunk{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (;;) {
        if (stop.load()) return;
        const std::size_t c = next_chunk.fetch_add(1);
        if (c >= chunks) return;
        const std::size_t end = std::min(total, (c + 1) * kChunk);
        for (std::size_t g = c * kChunk; g < end; ++g) {
          const Graph& graph = corpus.entries[g].graph;
          if (!is_connected(graph)) continue;
          connected[g] = 1;
          const Analysis a = analyze(graph, options.tol);
          auto& out = verdicts[g];
          for (const auto& id : ids) {
            out.push_back(evaluate(id, a));
            if (options.fail_fast && !out.back().holds) stop.store(true);
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      stop.store(true);
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Chunks are claimed in increasing order and every claimed chunk runs to
  // completion, so everything before the first violation was evaluated.
  std::size_t limit = total;
  if (options.fail_fast) {
    for (std::size_t g = 0; g < total && limit == total; ++g) {
      for (const auto& v : verdicts[g]) {
        if (!v.holds) {
          limit = g + 1;
          break;
        }
      }
    }
  }

  std::vector<ScanReport> reports;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    ScanReport r;
    r.theorem_id = ids[k];
    r.corpus = corpus.descriptor;
    r.skipped_over_order = corpus.skipped_over_order;
    r.tolerance = options.tol.equality;
    for (std::size_t g = 0; g < limit; ++g) {
      if (!connected[g]) {
        ++r.skipped_disconnected;
        continue;
      }
      ++r.graphs_checked;
      const BoundVerdict& v = verdicts[g][k];
      if (!v.applicable) continue;
      ++r.applicable;
      if (!v.holds) r.violations.push_back({corpus.entries[g].graph6, v});
      if (v.equality) r.equality_witnesses.push_back({corpus.entries[g].graph6, v});
    }
    reports.push_back(std::move(r));
  }
  const double elapsed = seconds_since(start);
  for (auto& r : reports) r.wall_time_s = elapsed;
  return reports;
}

ScanReport scan(std::string_view id, const Corpus& corpus, const ScanOptions& options) {
  const std::string ids[] = {std::string(id)};
  return std::move(scan(ids, corpus, options).front());
}

ScanReport scan(std::string_view id, int n, const ScanOptions& options) {
  check_known(id);
  return scan(id, native_corpus(n), options);
}

bool Table1Report::passed() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const Table1Row& r) { return r.pass; });
}

Table1Report table1_regression() {
  struct Published {
    int n;
    double kite;
    double tstar;
  };
  static constexpr Published kTable[] = {
      {7, 31.1081, 29.5507},  {8, 41.6987, 38.9173},  {9, 53.7733, 50.0328},   {10, 67.3260, 62.7797},
      {11, 82.3525, 77.0989}, {12, 98.8494, 92.9528}, {13, 116.8142, 110.3381},
  };
  const auto start = Clock::now();
  Table1Report report;
  for (const auto& p : kTable) {
    Table1Row row;
    row.n = p.n;
    row.kite = eigenvalues(dist_signless_laplacian(family::kite(p.n))).largest();
    row.tstar = eigenvalues(dist_signless_laplacian(family::t_star(p.n))).largest();
    row.kite_published = p.kite;
    row.tstar_published = p.tstar;
    row.pass = std::abs(row.kite - p.kite) <= report.tolerance && std::abs(row.tstar - p.tstar) <= report.tolerance &&
               row.kite > row.tstar;
    report.rows.push_back(row);
  }
  report.wall_time_s = seconds_since(start);
  return report;
}

BoundVerdict check_lemma73(int n) {
  if (n < 7) throw Error(ErrorKind::InvalidParams, "kite vs T* comparison needs n >= 7");
  BoundVerdict v;
  v.theorem_id = "L7.3";
  v.bound_value = eigenvalues(dist_signless_laplacian(family::t_star(n))).largest();
  v.observed = eigenvalues(dist_signless_laplacian(family::kite(n))).largest();
  v.strict = v.observed > v.bound_value + kSlack;
  v.equality = std::abs(v.observed - v.bound_value) <= kEqualityTol;
  v.holds = v.strict;
  v.witness["n"] = n;
  return v;
}

Matrix proof_fixture_theorem31(int n, int a, int d_prime) {
  if (a < 1 || a > n - 2) throw Error(ErrorKind::InvalidParams, "need 1 <= a <= n-2");
  if (d_prime < 2 * n - a - 2) throw Error(ErrorKind::InvalidParams, "transmission below 2n-a-2");
  const double N = n;
  const double A = a;
  const double D = d_prime;
  const double rest = N - A - 1.0;
  Matrix r(3, 3);
  r(0, 0) = D;
  r(0, 1) = -A;
  r(0, 2) = -D + A;
  r(1, 0) = -1.0;
  r(1, 1) = D - N + 2.0;
  r(1, 2) = -D + N - 1.0;
  r(2, 0) = (A - D) / rest;
  r(2, 1) = -A * (D - N + 1.0) / rest;
  r(2, 2) = (A * (D - N + 1.0) - (A - D)) / rest;
  return r;
}

Matrix proof_fixture_theorem31(int n, int a) { return proof_fixture_theorem31(n, a, 2 * n - a - 2); }

double theorem31_determinant(int n, int a, int d_prime) {
  const double N = n;
  const double A = a;
  const double D = d_prime;
  return -N * (D + 2.0) * (D - 2.0 * N + A + 2.0) / (N - A - 1.0);
}

Matrix proof_fixture_theorem61(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw Error(ErrorKind::InvalidParams, "need n1, n2 >= 1");
  const double a = n1;
  const double b = n2;
  const double entries[16] = {
      a + 2 * b + 3, a,     2 * b,         3,              //
      1,             2 * a + b + 1, b,     2,              //
      2,             a,     a + 2 * b + 1, 1,              //
      3,             2 * a, b,             2 * a + b + 3,  //
  };
  return Matrix(4, 4, std::vector<double>(std::begin(entries), std::end(entries)));
}

double theorem61_determinant(int n1, int n2) {
  const double a = n1;
  const double b = n2;
  return -4.0 * (a * a * a + 8 * a * a + 15 * a + b * b * b + 8 * b * b + 15 * b);
}

Graph theorem61_graph(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw Error(ErrorKind::InvalidParams, "need n1, n2 >= 1");
  const int n = n1 + n2 + 2;
  Graph g(n);
  auto join_clique = [&g](int lo, int hi) {  // [lo, hi) becomes a clique
    for (int i = lo; i < hi; ++i) {
      for (int j = i + 1; j < hi; ++j) {
        if (!g.has_edge(i, j)) g.add_edge(i, j);
      }
    }
  };
  join_clique(0, 1 + n1);
  join_clique(1, 1 + n1 + n2);
  join_clique(1 + n1, n);
  return g;
}

BoundVerdict check_lemma74(int n1, int n2) {
  if (n1 < n2 || n2 < 2 || n1 + n2 + 2 < 7) {
    throw Error(ErrorKind::InvalidParams, "need n1 >= n2 >= 2 and n1 + n2 + 2 >= 7");
  }
  BoundVerdict v;
  v.theorem_id = "L7.4";
  v.bound_value = eigenvalues(dist_signless_laplacian(family::u4(n1, n2))).largest();
  v.observed = eigenvalues(dist_signless_laplacian(family::u3(n1, n2))).largest();
  v.strict = v.observed > v.bound_value + kSlack;
  v.equality = std::abs(v.observed - v.bound_value) <= kEqualityTol;
  v.holds = v.strict;
  v.witness["n1"] = n1;
  v.witness["n2"] = n2;
  return v;
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  throw Error(ErrorKind::InvalidParams, "unknown report format '" + std::string(text) + "'");
}

namespace {

using Json = nlohmann::ordered_json;

std::string g12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::stod(g12(x));
}

Json to_json(const Finding& f) {
  Json j;
  j["graph6"] = f.graph6;
  j["bound"] = number(f.verdict.bound_value);
  j["observed"] = number(f.verdict.observed);
  j["holds"] = f.verdict.holds;
  j["strict"] = f.verdict.strict;
  j["equality"] = f.verdict.equality;
  j["applicable"] = f.verdict.applicable;
  Json w = Json::object();
  for (const auto& [k, v] : f.verdict.witness) w[k] = number(v);
  j["witness"] = std::move(w);
  j["note"] = f.verdict.note;
  return j;
}

Json to_json(const ScanReport& r, bool timing) {
  Json j;
  j["theorem_id"] = r.theorem_id;
  j["corpus"] = r.corpus;
  j["graphs_checked"] = r.graphs_checked;
  j["applicable"] = r.applicable;
  j["skipped_disconnected"] = r.skipped_disconnected;
  j["skipped_over_order"] = r.skipped_over_order;
  j["tolerance"] = number(r.tolerance);
  j["pass"] = r.passed();
  Json v = Json::array();
  for (const auto& f : r.violations) v.push_back(to_json(f));
  j["violations"] = std::move(v);
  Json w = Json::array();
  for (const auto& f : r.equality_witnesses) w.push_back(f.graph6);
  j["equality_witnesses"] = std::move(w);
  if (timing) j["wall_time_s"] = number(r.wall_time_s);
  return j;
}

constexpr const char* kCsvHeader = "theorem_id,graph6,bound,observed,holds,equality\n";

void csv_rows(std::ostringstream& out, const ScanReport& r) {
  auto row = [&](const Finding& f) {
    out << r.theorem_id << ',' << f.graph6 << ',' << g12(f.verdict.bound_value) << ',' << g12(f.verdict.observed) << ','
        << (f.verdict.holds ? "true" : "false") << ',' << (f.verdict.equality ? "true" : "false") << '\n';
  };
  for (const auto& f : r.violations) row(f);
  for (const auto& f : r.equality_witnesses) {
    if (f.verdict.holds) row(f);  // violating witnesses already listed
  }
}

}  // namespace

std::string emit_report(const ScanReport& r, ReportFormat format, bool include_timing) {
  return emit_reports(std::span<const ScanReport>(&r, 1), format, include_timing);
}

std::string emit_reports(std::span<const ScanReport> reports, ReportFormat format, bool include_timing) {
  if (format == ReportFormat::Json) {
    if (reports.size() == 1) return to_json(reports.front(), include_timing).dump(2) + "\n";
    Json all = Json::array();
    for (const auto& r : reports) all.push_back(to_json(r, include_timing));
    return all.dump(2) + "\n";
  }
  std::ostringstream out;
  out << kCsvHeader;
  for (const auto& r : reports) csv_rows(out, r);
  return out.str();
}

std::string emit_report(const Table1Report& r, ReportFormat format, bool include_timing) {
  if (format == ReportFormat::Json) {
    Json j;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
      Json jr;
      jr["n"] = row.n;
      jr["kite"] = number(row.kite);
      jr["tstar"] = number(row.tstar);
      jr["pass"] = row.pass;
      rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    j["tolerance"] = number(r.tolerance);
    j["pass"] = r.passed();
    if (include_timing) j["wall_time_s"] = number(r.wall_time_s);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "n,kite,tstar,pass\n";
  for (const auto& row : r.rows) {
    out << row.n << ',' << g12(row.kite) << ',' << g12(row.tstar) << ',' << (row.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace distlap
