// Acceptance run: one PASS/FAIL line per criterion, details indented below.
//
// Four published claims are false as literally stated and fail here on
// purpose: one transposed Table 1 digit (T* at n = 12), the Turan radius
// formula at w = n, where T_{n,n} = K_n, the smallest star eigenvalue at
// n = 3, where S_3 = P_3, and strict graft growth on a one-vertex base,
// where the move is the identity. The exit status is 0 when every
// failure is exactly one of those, so a new regression still breaks ctest.
// Pass --strict to exit 1 on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "distlap/bounds.hpp"
#include "distlap/families.hpp"
#include "distlap/spectra.hpp"
#include "distlap/transforms.hpp"
#include "distlap/verify.hpp"

using namespace distlap;

namespace {

struct Outcome {
  bool pass = true;
  bool known = false;  // the failure is exactly the documented one
  std::vector<std::string> details;

  void fail(std::string why) {
    pass = false;
    details.push_back(std::move(why));
  }
  void note(std::string what) { details.push_back(std::move(what)); }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

Outcome table1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const Table1Report r = table1_regression();
  const double elapsed = seconds_since(start);
  std::set<std::string> misses;
  for (const auto& row : r.rows) {
    if (!close(row.kite, row.kite_published, r.tolerance)) {
      misses.insert(fmt("kite@%d", row.n));
      o.fail(fmt("n=%d kite %.4f vs published %.4f", row.n, row.kite, row.kite_published));
    }
    if (!close(row.tstar, row.tstar_published, r.tolerance)) {
      misses.insert(fmt("tstar@%d", row.n));
      o.fail(fmt("n=%d T* %.4f vs published %.4f", row.n, row.tstar, row.tstar_published));
    }
    if (!(row.kite > row.tstar)) o.fail(fmt("n=%d kite not above T*", row.n));
  }
  if (elapsed >= 1.0) o.fail(fmt("runtime %.3fs", elapsed));
  o.note(fmt("runtime %.4fs", elapsed));
  // 92.9582 computed, 92.9528 printed: the last two digits are swapped.
  o.known = !o.pass && misses == std::set<std::string>{"tstar@12"} && elapsed < 1.0 &&
            close(r.rows[5].tstar, 92.9582, 5e-5);
  return o;
}

Outcome closed_spectra() {
  Outcome o;
  for (int n = 3; n <= 13; ++n) {
    const Spectrum kn = eigenvalues(dist_laplacian(family::complete(n)));
    for (int i = 1; i < n; ++i) {
      if (!close(kn.at(i), n, 1e-8)) o.fail(fmt("K_%d eigenvalue %d = %.12g", n, i, kn.at(i)));
    }
    if (!close(kn.at(n), 0.0, 1e-8)) o.fail(fmt("K_%d smallest = %.12g", n, kn.at(n)));

    const Spectrum ke = eigenvalues(dist_laplacian(family::complete_minus_matching(n, 1)));
    if (!close(ke.at(1), n + 2, 1e-8)) o.fail(fmt("K_%d - e largest = %.12g", n, ke.at(1)));
    for (int i = 2; i < n; ++i) {
      if (!close(ke.at(i), n, 1e-8)) o.fail(fmt("K_%d - e eigenvalue %d = %.12g", n, i, ke.at(i)));
    }
    if (!close(ke.at(n), 0.0, 1e-8)) o.fail(fmt("K_%d - e smallest = %.12g", n, ke.at(n)));
  }

  std::mt19937_64 rng(20240601);
  int lists = 0;
  while (lists < 50) {
    std::uniform_int_distribution<int> count(2, 6);
    std::uniform_int_distribution<int> size(1, 5);
    std::vector<int> parts(count(rng));
    int n = 0;
    for (int& p : parts) n += (p = size(rng));
    if (n > 12) continue;
    ++lists;
    const auto roots = expand_roots(dl_charpoly_multipartite(parts));
    const Spectrum s = eigenvalues(dist_laplacian(family::complete_multipartite(parts)));
    if (static_cast<int>(roots.size()) != s.size()) {
      o.fail("root count mismatch");
      continue;
    }
    for (int i = 1; i <= s.size(); ++i) {
      if (!close(roots[i - 1], s.at(i), 1e-8)) o.fail(fmt("multipartite list %d root %d off", lists, i));
    }
  }

  int turan_cases = 0;
  int diagonal_misses = 0;
  bool other_misses = false;
  for (int n = 2; n <= 12; ++n) {
    for (int w = 2; w <= n; ++w) {
      ++turan_cases;
      const double radius = eigenvalues(dist_laplacian(family::turan(n, w))).largest();
      const double formula = n + (n + w - 1) / w;
      if (close(radius, formula, 1e-8)) continue;
      o.fail(fmt("T_{%d,%d}: radius %.10g, formula n + ceil(n/w) = %.10g", n, w, radius, formula));
      if (w == n) {
        ++diagonal_misses;
      } else {
        other_misses = true;
      }
    }
  }
  o.note(fmt("%d Turan cases, %d mismatches at w = n", turan_cases, diagonal_misses));
  o.known = !o.pass && !other_misses && diagonal_misses == 11 &&
            static_cast<int>(o.details.size()) == diagonal_misses + 1;
  return o;
}

Outcome star_forms() {
  Outcome o;
  for (int n = 4; n <= 40; ++n) {
    const double cubic = closed_form({FamilyKind::StarPlus, {n}}, Quantity::QRadius);
    const double direct = eigenvalues(dist_signless_laplacian(family::star_plus(n))).largest();
    if (!close(cubic, direct, 1e-7)) o.fail(fmt("S_%d^+: cubic %.12g vs %.12g", n, cubic, direct));
  }
  bool other_misses = false;
  for (int n = 3; n <= 40; ++n) {
    const Spectrum s = eigenvalues(dist_signless_laplacian(family::star(n)));
    const double x = n;
    const double root = std::sqrt(9 * x * x - 32 * x + 32);
    if (!close(s.largest(), (5 * x - 8 + root) / 2, 1e-7)) {
      o.fail(fmt("S_%d largest %.12g vs %.12g", n, s.largest(), (5 * x - 8 + root) / 2));
      other_misses = true;
    }
    if (!close(s.smallest(), (5 * x - 8 - root) / 2, 1e-7)) {
      // S_3 = P_3: the leaf-difference eigenvalue 2n-5 = 1 is smaller.
      o.fail(fmt("S_%d smallest %.12g vs formula %.12g", n, s.smallest(), (5 * x - 8 - root) / 2));
      other_misses = other_misses || n != 3;
    }
  }
  o.known = !o.pass && !other_misses && o.details.size() == 1;
  return o;
}

Outcome exhaustive() {
  Outcome o;
  const std::vector<std::string> ids = {"T3.1", "T3.2", "T4.1", "T4.2", "T5.1", "T5.2", "T6.1", "T6.2",
                                        "T6.3", "C6.1", "T6.4", "T7.1", "L4.1", "L4.2", "L2.3", "L2.4"};
  const auto start = std::chrono::steady_clock::now();
  long below7 = 0;
  for (int n = 1; n <= 7; ++n) {
    const Corpus corpus = native_corpus(n);
    if (n < 7) below7 += static_cast<long>(corpus.entries.size());
    if (n == 7 && corpus.entries.size() != 853) o.fail(fmt("%zu connected graphs at n = 7", corpus.entries.size()));
    for (const auto& r : scan(ids, corpus)) {
      if (!r.passed()) o.fail(fmt("%s at n = %d: %zu violations", r.theorem_id.c_str(), n, r.violations.size()));
    }
  }
  if (below7 != 143) o.fail(fmt("%ld connected graphs for n <= 6", below7));
  const double elapsed = seconds_since(start);
  if (elapsed >= 300.0) o.fail(fmt("runtime %.1fs", elapsed));
  o.note(fmt("%zu ids over n = 1..7 in %.2fs", ids.size(), elapsed));
  return o;
}

std::set<std::string> witness_keys(const ScanReport& r) {
  std::set<std::string> keys;
  for (const auto& f : r.equality_witnesses) keys.insert(canonical_form(from_graph6(f.graph6)));
  return keys;
}

Outcome censuses() {
  Outcome o;
  std::set<std::string> matchings;
  matchings.insert(canonical_form(family::complete(6)));
  for (int k = 1; k <= 3; ++k) matchings.insert(canonical_form(family::complete_minus_matching(6, k)));
  const ScanReport t32 = scan("T3.2", 6);
  if (witness_keys(t32) != matchings || t32.equality_witnesses.size() != 4) {
    o.fail(fmt("T3.2 at n = 6: %zu witnesses", t32.equality_witnesses.size()));
  }
  for (int n = 6; n <= 7; ++n) {
    const ScanReport r = scan("T7.1", n);
    if (witness_keys(r) != std::set<std::string>{canonical_form(family::kite(n))} || r.equality_witnesses.size() != 1) {
      o.fail(fmt("T7.1 at n = %d: %zu witnesses", n, r.equality_witnesses.size()));
    }
  }
  for (int n = 5; n <= 7; ++n) {
    const ScanReport r = scan("T6.2", n);
    if (witness_keys(r) != std::set<std::string>{canonical_form(family::star(n))} || r.equality_witnesses.size() != 1) {
      o.fail(fmt("T6.2 at n = %d: %zu witnesses", n, r.equality_witnesses.size()));
    }
  }
  return o;
}

Matrix shifted_identity_minus(double x, const Matrix& r) {
  Matrix m(r.rows(), r.cols());
  for (int i = 0; i < r.rows(); ++i) {
    for (int j = 0; j < r.cols(); ++j) m(i, j) = (i == j ? x : 0.0) - r(i, j);
  }
  return m;
}

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

Outcome fixtures() {
  Outcome o;
  int checked31 = 0;
  for (int n = 3; n <= 12; ++n) {
    for (int a = 1; a <= n - 2; ++a) {
      for (int d = 2 * n - a - 2; d <= n * (n - 1) / 2; ++d) {
        const double direct = determinant(shifted_identity_minus(d + 2.0, proof_fixture_theorem31(n, a, d)));
        const double formula = theorem31_determinant(n, a, d);
        ++checked31;
        if (!rel_close(direct, formula, 1e-6)) o.fail(fmt("3x3 n=%d a=%d D'=%d: %.10g vs %.10g", n, a, d, direct, formula));
      }
    }
  }
  int checked61 = 0;
  for (int n1 = 1; n1 + 3 <= 12; ++n1) {
    for (int n2 = 1; n1 + n2 + 2 <= 12; ++n2) {
      const int n = n1 + n2 + 2;
      const Matrix r = proof_fixture_theorem61(n1, n2);
      const double direct = determinant(shifted_identity_minus(2.0 * n - 4 + 6, r));
      const double formula = theorem61_determinant(n1, n2);
      ++checked61;
      if (!rel_close(direct, formula, 1e-6)) o.fail(fmt("4x4 n1=%d n2=%d: %.10g vs %.10g", n1, n2, direct, formula));
      // The fixture must really be the quotient of its extremal graph.
      Partition p;
      p.blocks.push_back({0});
      p.blocks.emplace_back();
      for (int i = 1; i <= n1; ++i) p.blocks.back().push_back(i);
      p.blocks.emplace_back();
      for (int i = n1 + 1; i <= n1 + n2; ++i) p.blocks.back().push_back(i);
      p.blocks.push_back({n - 1});
      const Matrix q = quotient_matrix(dist_signless_laplacian(theorem61_graph(n1, n2)), p);
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          if (!close(q(i, j), r(i, j), 1e-12)) o.fail(fmt("4x4 n1=%d n2=%d entry (%d,%d) not a quotient", n1, n2, i, j));
        }
      }
    }
  }
  o.note(fmt("%d three-by-three and %d four-by-four cases", checked31, checked61));
  return o;
}

Outcome eigensolvers() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> entry(-10.0, 10.0);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 12;
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) m.set(i, j, entry(rng));
    }
    const Spectrum ql = eigenvalues(m);
    const Spectrum jac = eigenvalues_jacobi(m);
    double squares = 0.0;
    for (int i = 1; i <= n; ++i) {
      if (!close(ql.at(i), jac.at(i), 1e-8)) o.fail(fmt("matrix %d eigenvalue %d differs", t, i));
      squares += ql.at(i) * ql.at(i);
    }
    if (!close(ql.sum(), m.trace(), 1e-8)) o.fail(fmt("matrix %d trace identity", t));
    const double frob2 = m.frobenius_norm() * m.frobenius_norm();
    if (!close(squares, frob2, 1e-8 * frob2)) o.fail(fmt("matrix %d Frobenius identity", t));
  }
  return o;
}

Outcome grafts() {
  Outcome o;
  int checked = 0;
  int excluded = 0;
  bool other_misses = false;
  auto record = [&](const BoundVerdict& v, const Graph& base) {
    if (!v.applicable) {
      ++excluded;
      return;
    }
    ++checked;
    if (!v.holds) {
      // On K_1 both arms form one path through u, so the move maps the graph
      // to itself and no strict increase is possible.
      other_misses = other_misses || base.order() != 1;
      o.fail(fmt("%s base %s k=%g l=%g: %.12g -> %.12g", v.theorem_id.c_str(), to_graph6(base).c_str(), v.witness.at("k"),
                 v.witness.at("l"), v.bound_value, v.observed));
    }
  };
  for (int b = 1; b <= 4; ++b) {
    for (const Graph& base : enumerate_connected(b)) {
      for (int l = 2; b + 2 * l <= 9; ++l) {
        for (int k = l; b + k + l <= 9; ++k) {
          for (Vertex u = 0; u < b; ++u) {
            const GraftSpec s{base, GraftKind::TwoPathsAtVertex, u, -1, k, l};
            record(check_graft_monotone_L(s), base);
            record(check_graft_monotone_Q(s), base);
          }
          for (const auto& [u, v] : twin_pairs(base)) {
            for (const auto& [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
              const GraftSpec s{base, GraftKind::TwoPathsAtTwins, x, y, k, l};
              record(check_graft_monotone_L(s), base);
              record(check_graft_monotone_Q(s), base);
            }
          }
        }
      }
    }
  }
  o.note(fmt("%d graft comparisons; %d twin grafts on K_2 outside the hypotheses", checked, excluded));
  o.known = !o.pass && !other_misses;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"Table 1 reproduction", table1},
      {"closed-form spectra (K_n, K_n - e, multipartite, Turan)", closed_spectra},
      {"star and star-plus closed forms", star_forms},
      {"exhaustive certification n <= 7", exhaustive},
      {"equality-witness censuses", censuses},
      {"proof-fixture determinants", fixtures},
      {"QL against Jacobi cross-validation", eigensolvers},
      {"graft monotonicity", grafts},
  };
  int unexplained = 0;
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %d %s%s\n", o.pass ? "PASS" : "FAIL", index, c.name,
                !o.pass && o.known ? "  [documented: published claim false as stated]" : "");
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    if (!o.pass) {
      ++failures;
      if (!o.known) ++unexplained;
    }
  }
  std::printf("%d of %d criteria pass; %d failures, %d not documented\n", 8 - failures, 8, failures, unexplained);
  return (strict ? failures : unexplained) == 0 ? 0 : 1;
}
