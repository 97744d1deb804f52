#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distlap/graph.hpp"
#include "distlap/linalg.hpp"
#include "distlap/verdict.hpp"

namespace distlap {

struct CorpusEntry {
  std::string graph6;  // as read, or encoded for native corpora
  Graph graph;
};

/// Graphs to scan, in canonical corpus order.
struct Corpus {
  std::string descriptor;
  std::vector<CorpusEntry> entries;
  long skipped_over_order = 0;  // lines whose order is outside 1..64
};

/// All connected graphs of order n, sorted as enumerate_connected returns them.
Corpus native_corpus(int n);
/// One graph6 string per line; blank lines and a ">>graph6<<" prefix are
/// ignored. Malformed lines raise CorpusError naming the line.
Corpus read_graph6_corpus(std::istream& in, std::string descriptor);

struct Finding {
  std::string graph6;
  BoundVerdict verdict;
};

struct ScanReport {
  std::string theorem_id;
  std::string corpus;
  long graphs_checked = 0;  // connected graphs evaluated
  long applicable = 0;
  long skipped_disconnected = 0;
  long skipped_over_order = 0;
  std::vector<Finding> violations;
  std::vector<Finding> equality_witnesses;  // applicable verdicts at equality
  double wall_time_s = 0.0;
  double tolerance = kEqualityTol;

  bool passed() const { return violations.empty(); }
};

struct ScanOptions {
  int jobs = 1;
  bool fail_fast = false;  // stop at the first violation in corpus order
  Tolerance tol;
};

/// Ids accepted by scan: the bound ids plus L2.3, L2.4, L4.1, L4.2, L5.4.
std::vector<std::string> scan_theorem_ids();

/// Evaluates every id on every connected graph of the corpus. The reports do
/// not depend on options.jobs (wall time aside).
std::vector<ScanReport> scan(std::span<const std::string> ids, const Corpus& corpus, const ScanOptions& options = {});
ScanReport scan(std::string_view id, const Corpus& corpus, const ScanOptions& options = {});
ScanReport scan(std::string_view id, int n, const ScanOptions& options = {});

struct Table1Row {
  int n = 0;
  double kite = 0.0;
  double tstar = 0.0;
  double kite_published = 0.0;
  double tstar_published = 0.0;
  bool pass = false;
};

struct Table1Report {
  std::vector<Table1Row> rows;
  double tolerance = 5e-4;
  double wall_time_s = 0.0;

  bool passed() const;
};

/// Largest distance signless Laplacian eigenvalue of the kite and of
/// T(2,2,n-5) for n = 7..13 against the published 4-decimal values.
Table1Report table1_regression();

/// Kite against T(2,2,n-5) by direct eigensolve; holds when the kite is
/// strictly larger. Needs n >= 7.
BoundVerdict check_lemma73(int n);

/// The 3x3 quotient matrix of the distance Laplacian over the partition
/// {v1}, A, rest, with |A| = a and transmission d_prime of v1.
/// Needs 1 <= a <= n-2 and d_prime >= 2n-a-2.
Matrix proof_fixture_theorem31(int n, int a, int d_prime);
/// d_prime defaults to its least admissible value 2n-a-2.
Matrix proof_fixture_theorem31(int n, int a);
/// Closed form of det((d'+2)I - R).
double theorem31_determinant(int n, int a, int d_prime);

/// The 4x4 quotient matrix of the distance signless Laplacian over
/// {u}, V1, V2, {w} with |V1| = n1, |V2| = n2 (diameter 3).
Matrix proof_fixture_theorem61(int n1, int n2);
/// Closed form of det((2n-4+2d)I - R) with d = 3.
double theorem61_determinant(int n1, int n2);
/// The graph whose quotient proof_fixture_theorem61 is: {u}+V1, V1+V2 and
/// V2+{w} each induce cliques. Vertex 0 is u, the last vertex is w.
Graph theorem61_graph(int n1, int n2);

/// U4 against U3 by direct eigensolve; holds when U3 is strictly larger.
/// Needs n1 >= n2 >= 2 and n1 + n2 + 2 >= 7.
BoundVerdict check_lemma74(int n1, int n2);

enum class ReportFormat { Json, Csv };

ReportFormat parse_report_format(std::string_view text);

/// Stable key order, floats to 12 significant digits. Wall time is left out
/// unless asked for so that reports compare byte for byte.
std::string emit_report(const ScanReport& r, ReportFormat format, bool include_timing = false);
std::string emit_reports(std::span<const ScanReport> reports, ReportFormat format, bool include_timing = false);
std::string emit_report(const Table1Report& r, ReportFormat format, bool include_timing = false);

}  // namespace distlap
