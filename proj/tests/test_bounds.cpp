#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "distlap/bounds.hpp"
#include "distlap/error.hpp"
#include "distlap/families.hpp"
#include "distlap/spectra.hpp"

using namespace distlap;

namespace {

bool near(double a, double b, double tol = 1e-7) { return std::abs(a - b) <= tol; }

// Independent radii from the Jacobi solver.
double l_radius(const Graph& g) { return eigenvalues_jacobi(dist_laplacian(g)).largest(); }
double q_radius(const Graph& g) { return eigenvalues_jacobi(dist_signless_laplacian(g)).largest(); }
double q_smallest(const Graph& g) { return eigenvalues_jacobi(dist_signless_laplacian(g)).smallest(); }

int brute_clique(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool clique = true;
    for (int i = 0; i < n && clique; ++i) {
      if (!((mask >> i) & 1U)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (((mask >> j) & 1U) && !g.has_edge(i, j)) {
          clique = false;
          break;
        }
      }
    }
    if (clique) best = size;
  }
  return best;
}

BoundVerdict eval(std::string_view id, const Graph& g) { return evaluate_bound(id, analyze(g)); }

Graph k5_minus_e() { return family::complete_minus_matching(5, 1); }

}  // namespace

TEST_CASE("clique number") {
  CHECK(clique_number(family::complete(5)).omega == 5);
  CHECK(clique_number(family::cycle(5)).omega == 2);
  CHECK(clique_number(family::kite(7)).omega == 3);
  CHECK(clique_number(Graph(1)).omega == 1);
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) CHECK(clique_number(g).omega == brute_clique(g));
  }
  std::mt19937 rng(5);
  for (int t = 0; t < 300; ++t) {
    const int n = 8 + static_cast<int>(rng() % 7);
    Graph g(n);
    const double p = 0.2 + 0.7 * (rng() % 100) / 100.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if ((rng() % 1000) / 1000.0 < p) g.add_edge(i, j);
      }
    }
    CHECK(clique_number(g).omega == brute_clique(g));
  }
}

TEST_CASE("structural recognizers") {
  CHECK(is_complete(family::complete(4)));
  CHECK_FALSE(is_complete(k5_minus_e()));
  CHECK(is_complete_minus_matching(family::complete_minus_matching(6, 2)));
  CHECK(is_complete_minus_matching(family::complete_minus_matching(6, 3)));
  CHECK_FALSE(is_complete_minus_matching(family::complete(6)));
  CHECK_FALSE(is_complete_minus_matching(family::path(4)));
  CHECK(is_complete_minus_edge(k5_minus_e()));
  CHECK_FALSE(is_complete_minus_edge(family::complete_minus_matching(6, 2)));
  CHECK(is_star(family::star(6)));
  CHECK_FALSE(is_star(family::star_plus(6)));
  CHECK(is_unicyclic(family::cycle(5)));
  CHECK_FALSE(is_unicyclic(family::path(5)));
  CHECK(is_turan(family::turan(7, 3), 3));
  CHECK_FALSE(is_turan(family::complete_multipartite(std::vector<int>{3, 1}), 2));
}

TEST_CASE("L3.1 examples") {
  auto k4 = eval("L3.1", family::complete(4));
  CHECK(k4.bound_value == 4.0);
  CHECK(near(k4.observed, 4.0));
  CHECK(k4.equality);

  auto p4 = eval("L3.1", family::path(4));
  CHECK(p4.bound_value == 8.0);
  CHECK(near(p4.observed, l_radius(family::path(4))));
  CHECK(p4.holds);

  auto s5 = eval("L3.1", family::star(5));
  CHECK(s5.bound_value == 8.75);
  CHECK(near(s5.observed, 9.0));
  CHECK(s5.holds);
  CHECK_FALSE(s5.equality);
}

TEST_CASE("T3.1 examples") {
  auto m = eval("T3.1", family::complete_minus_matching(6, 2));
  CHECK(m.bound_value == 8.0);
  CHECK(near(m.observed, 8.0));
  CHECK(m.equality);
  CHECK(m.holds);

  auto p4 = eval("T3.1", family::path(4));
  CHECK(p4.strict);
  CHECK(p4.holds);

  CHECK_FALSE(eval("T3.1", family::complete(4)).applicable);
}

TEST_CASE("T3.2 classification") {
  CHECK(classify_L1_theorem32(analyze(family::complete(5))) == L1Class::EqualsN_Kn);
  CHECK(classify_L1_theorem32(analyze(k5_minus_e())) == L1Class::EqualsNPlus2_Matching);
  CHECK(classify_L1_theorem32(analyze(family::path(4))) == L1Class::AboveNPlus2);
  CHECK_THROWS_AS(classify_L1_theorem32(analyze(Graph(1))), Error);
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const L1Class c = classify_L1_theorem32(analyze(g));
      // Oracle: complement edges form a matching iff every complement degree is at most one.
      const Graph comp = g.complement();
      bool matching = comp.edge_count() > 0;
      for (int v = 0; v < n; ++v) matching = matching && comp.degree(v) <= 1;
      const L1Class expected = comp.edge_count() == 0 ? L1Class::EqualsN_Kn
                               : matching            ? L1Class::EqualsNPlus2_Matching
                                                     : L1Class::AboveNPlus2;
      CHECK(c == expected);
    }
  }
}

TEST_CASE("T4.1 examples") {
  auto k5 = eval("T4.1", family::complete(5));
  CHECK(k5.bound_value == 5.0);
  CHECK(k5.equality);
  CHECK(k5.note.empty());

  // K_5 - e meets the bound too; the verdict reports it instead of hiding it.
  auto ke = eval("T4.1", k5_minus_e());
  CHECK(ke.witness.at("W") == 11.0);
  CHECK(ke.bound_value == 7.0);
  CHECK(near(ke.observed, 7.0));
  CHECK(ke.equality);
  CHECK(ke.holds);
  CHECK(ke.witness.at("is_complete") == 0.0);
  CHECK(ke.note.find("K_n - e") != std::string::npos);

  auto p4 = eval("T4.1", family::path(4));
  CHECK(p4.bound_value == 12.0);
  CHECK(p4.observed < 12.0);
  CHECK_FALSE(p4.equality);

  CHECK_FALSE(eval("T4.1", family::complete(3)).applicable);
}

TEST_CASE("T4.2 examples") {
  auto k3 = eval("T4.2", family::complete(3));
  CHECK(near(k3.bound_value, 2 + std::sqrt(2.0), 1e-12));
  CHECK(near(k3.observed, 3.0));
  CHECK(k3.strict);

  // Distance matrix of P_3: squares sum 1+1+4 = 6, transmissions 3,2,3.
  auto p3 = eval("T4.2", family::path(3));
  CHECK(near(p3.bound_value, 3 + std::sqrt(12 - 22.0 / 3), 1e-12));
  CHECK(near(p3.bound_value, 5.1602, 1e-4));
  CHECK(near(p3.observed, 5.0));
  CHECK(p3.holds);

  auto c4 = eval("T4.2", family::cycle(4));
  CHECK(c4.strict);
  CHECK(c4.holds);

  CHECK_FALSE(eval("T4.2", family::complete(2)).applicable);
}

TEST_CASE("T5.1 examples") {
  auto t = eval("T5.1", family::turan(6, 3));
  CHECK(t.bound_value == 8.0);
  CHECK(near(t.observed, 8.0));
  CHECK(t.equality);
  CHECK(t.witness.at("is_turan") == 1.0);

  CHECK_FALSE(eval("T5.1", family::complete(5)).applicable);

  auto kite = eval("T5.1", family::kite(6));
  CHECK(kite.witness.at("omega") == 3.0);
  CHECK(kite.bound_value == 8.0);
  CHECK(kite.observed > 8.0);
  CHECK(kite.holds);
}

TEST_CASE("T5.2 examples") {
  const Graph k32 = family::kite_clique(5, 3);
  auto self = eval("T5.2", k32);
  CHECK(self.equality);
  CHECK(self.holds);

  auto c5 = eval("T5.2", family::cycle(5));
  CHECK(near(c5.bound_value, l_radius(family::path(5))));
  CHECK(near(c5.observed, l_radius(family::cycle(5))));
  CHECK(c5.observed < c5.bound_value);

  for (const Graph& g : enumerate_connected(6)) CHECK(eval("T5.2", g).holds);
}

TEST_CASE("T6.1 examples") {
  auto c7 = eval("T6.1", family::cycle(7));
  CHECK(c7.bound_value == 16.0);
  CHECK(near(c7.observed, 24.0));
  CHECK(c7.strict);

  auto p5 = eval("T6.1", family::path(5));
  CHECK(p5.witness.at("bound_2n-4+2d") == 14.0);
  CHECK(p5.witness.at("bound_d(n+2)/2") == 14.0);
  CHECK(p5.observed > 14.0);
  CHECK(near(p5.observed, q_radius(family::path(5))));

  CHECK_FALSE(eval("T6.1", family::complete(4)).applicable);
}

TEST_CASE("T6.2 examples") {
  const double bound5 = (-1 + std::sqrt(97.0)) / 2;
  auto s5 = eval("T6.2", family::star(5));
  CHECK(near(s5.bound_value, bound5, 1e-12));
  CHECK(near(s5.observed, (17 + std::sqrt(97.0)) / 2 - 9));
  CHECK(s5.equality);
  CHECK(s5.holds);

  auto k5 = eval("T6.2", family::complete(5));
  CHECK(near(k5.observed, 3.0));
  CHECK(k5.strict);
  CHECK(k5.holds);

  CHECK_FALSE(eval("T6.2", family::path(5)).applicable);
}

TEST_CASE("smallest Q eigenvalue bounds") {
  auto k4 = bound_Qn_upper(analyze(family::complete(4)));
  REQUIRE(k4.size() == 3);
  CHECK(k4[0].theorem_id == "T6.3");
  CHECK(k4[0].bound_value == 2.0);
  CHECK(near(k4[0].observed, 2.0));
  CHECK(k4[0].equality);

  const double s5_min = (17 - std::sqrt(97.0)) / 2;
  auto s5 = bound_Qn_upper(analyze(family::star(5)));
  CHECK(near(s5[0].observed, s5_min));
  CHECK(near(s5_min, 3.5756, 1e-4));
  CHECK(s5[2].bound_value == 4.0);
  CHECK(s5[2].strict);
  CHECK(s5_min > 4.0 - 1.0);
  CHECK_FALSE(s5[1].applicable);  // the centre is the unique minimum

  auto c6 = bound_Qn_upper(analyze(family::cycle(6)));
  CHECK(c6[0].bound_value == 8.0);
  CHECK(c6[0].witness.at("W") == 27.0);
  CHECK(c6[1].applicable);
  CHECK(c6[1].bound_value == 8.0);
  CHECK(c6[1].witness.at("Dn_multiplicity") == 6.0);
  CHECK(near(c6[1].observed, q_smallest(family::cycle(6))));
  for (const auto& v : c6) CHECK(v.holds);
}

TEST_CASE("T7.1 examples") {
  auto kite = eval("T7.1", family::kite(7));
  CHECK(kite.equality);
  CHECK(near(kite.observed, 31.1081, 1e-4));

  CHECK_FALSE(eval("T7.1", family::t_star(7)).applicable);

  auto c7 = eval("T7.1", family::cycle(7));
  CHECK(near(c7.observed, 24.0));
  CHECK(near(c7.bound_value, 31.1081, 1e-4));
  CHECK(c7.strict);
  CHECK_FALSE(eval("T7.1", family::cycle(5)).applicable);
}

TEST_CASE("lemma checks") {
  CHECK(check_lemma41(analyze(family::path(5))).holds);
  auto k5 = check_lemma42(analyze(family::complete(5)));
  CHECK(k5.equality);
  CHECK(check_lemma42(analyze(k5_minus_e())).equality);
  CHECK_FALSE(check_lemma42(analyze(family::path(5))).equality);
  CHECK(check_lemma54(analyze(family::star(6))).holds);
  CHECK_FALSE(check_lemma54(analyze(family::path(5))).applicable);
}

TEST_CASE("every applicable verdict holds and equality matches structure (n <= 7)") {
  int t41_equalities = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const Analysis a = analyze(g);
      for (std::string_view id : bound_theorem_ids()) {
        const BoundVerdict v = evaluate_bound(id, a);
        CHECK_MESSAGE(v.holds, id, " fails on ", to_graph6(g));
        if (!v.applicable) CHECK((v.holds && v.equality && v.strict));
        if (v.applicable && v.equality) CHECK(std::abs(v.observed - v.bound_value) <= kEqualityTol);
      }
      const Graph comp = g.complement();
      int star_centres = 0;
      for (int v = 0; v < n; ++v) star_centres += g.degree(v) == n - 1;
      const bool star = n >= 3 && g.edge_count() == n - 1 && star_centres == 1;

      const BoundVerdict t41 = bound_L1_theorem41(a);
      if (t41.applicable) {
        CHECK(t41.equality == (comp.edge_count() <= 1));
        t41_equalities += t41.equality && comp.edge_count() == 1;
      }
      const BoundVerdict t52 = bound_L1_clique_upper(a);
      if (t52.applicable) CHECK(t52.equality == isomorphic(g, family::kite_clique(n, brute_clique(g))));
      const BoundVerdict t62 = bound_gap_theorem62(a);
      if (t62.applicable) CHECK(t62.equality == star);
      const BoundVerdict t71 = bound_Q1_unicyclic(a);
      if (t71.applicable) CHECK(t71.equality == isomorphic(g, family::kite(n)));
    }
  }
  CHECK(t41_equalities == 4);  // K_n - e for n = 4..7
}

TEST_CASE("T3.1 bound dominates L3.1 when D1 < 2(n-1)") {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const Analysis a = analyze(g);
      const BoundVerdict t = bound_L1_theorem31(a);
      if (!t.applicable) continue;
      const BoundVerdict l = bound_L1_lemma31(a);
      const double d1 = l.witness.at("D1");
      if (d1 < 2.0 * (n - 1)) {
        CHECK(t.bound_value > l.bound_value);
      } else {
        CHECK(t.bound_value <= l.bound_value);
      }
    }
  }
}

TEST_CASE("tolerance plumbing") {
  Tolerance loose{1e-3, 1e-2};
  const Analysis a = analyze(family::path(4), loose);
  CHECK(a.tol.equality == 1e-2);
  // P_4's L radius sits about 0.5 above D1 + D1/(n-1) = 8, so it is never equal.
  CHECK_FALSE(bound_L1_lemma31(a).equality);
  const Analysis k = analyze(family::complete(4), loose);
  CHECK(bound_L1_lemma31(k).equality);
}

TEST_CASE("errors") {
  Graph disconnected(4);
  disconnected.add_edge(0, 1);
  disconnected.add_edge(2, 3);
  try {
    analyze(disconnected);
    FAIL("expected DisconnectedGraph");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DisconnectedGraph);
  }
  try {
    evaluate_bound("T9.9", analyze(family::path(3)));
    FAIL("expected UnknownTheorem");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownTheorem);
  }
}
