#include "distlap/bounds.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "distlap/error.hpp"
#include "distlap/families.hpp"

namespace distlap {

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  int run() {
    const int n = g_.order();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    expand(all, 0);
    return best_;
  }

 private:
  void expand(std::uint64_t cand, int size) {
    if (cand == 0) {
      best_ = std::max(best_, size);
      return;
    }
    // Greedy colouring: vertex i of `order` needs at most colour[i] more.
    std::array<int, kMaxOrder> order{};
    std::array<int, kMaxOrder> colour{};
    int count = 0;
    int c = 0;
    for (std::uint64_t uncoloured = cand; uncoloured != 0;) {
      ++c;
      for (std::uint64_t avail = uncoloured; avail != 0;) {
        const int v = std::countr_zero(avail);
        avail &= ~(std::uint64_t{1} << v) & ~g_.row(v);
        uncoloured &= ~(std::uint64_t{1} << v);
        order[count] = v;
        colour[count] = c;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (size + colour[i] <= best_) return;
      const int v = order[i];
      expand(cand & g_.row(v), size + 1);
      cand &= ~(std::uint64_t{1} << v);
    }
  }

  const Graph& g_;
  int best_ = 0;
};

BoundVerdict make(const Tolerance& tol, std::string id, double bound, double observed) {
  BoundVerdict v;
  v.theorem_id = std::move(id);
  v.bound_value = bound;
  v.observed = observed;
  v.equality = std::abs(observed - bound) <= tol.equality;
  return v;
}

// observed >= bound
BoundVerdict lower(const Tolerance& tol, std::string id, double bound, double observed) {
  BoundVerdict v = make(tol, std::move(id), bound, observed);
  v.holds = observed >= bound - tol.slack;
  v.strict = observed > bound + tol.slack;
  return v;
}

// observed <= bound
BoundVerdict upper(const Tolerance& tol, std::string id, double bound, double observed) {
  BoundVerdict v = make(tol, std::move(id), bound, observed);
  v.holds = observed <= bound + tol.slack;
  v.strict = observed < bound - tol.slack;
  return v;
}

int min_transmission_count(const DistanceData& dd) {
  const long lo = dd.min_transmission();
  return static_cast<int>(std::count(dd.trans.begin(), dd.trans.end(), lo));
}

}  // namespace

CliqueNumber clique_number(const Graph& g) { return {CliqueSearch(g).run()}; }

Analysis analyze(const Graph& g, Tolerance tol) {
  Analysis a{g, spectral_profile(g), 0, tol};
  a.omega = clique_number(g).omega;
  return a;
}

bool is_complete(const Graph& g) {
  const int n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_complete_minus_matching(const Graph& g) {
  const Graph c = g.complement();
  if (c.edge_count() == 0) return false;
  for (Vertex v = 0; v < c.order(); ++v) {
    if (c.degree(v) > 1) return false;
  }
  return true;
}

bool is_complete_minus_edge(const Graph& g) { return g.complement().edge_count() == 1; }

bool is_star(const Graph& g) {
  const int n = g.order();
  if (n < 2 || g.edge_count() != n - 1) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) return true;
  }
  return false;
}

bool is_unicyclic(const Graph& g) { return is_connected(g) && g.edge_count() == g.order(); }

bool is_turan(const Graph& g, int omega) {
  const Graph c = g.complement();
  const int n = g.order();
  std::vector<std::uint64_t> classes;
  for (Vertex v = 0; v < n; ++v) {
    const std::uint64_t cls = c.row(v) | (std::uint64_t{1} << v);
    for (std::uint64_t r = cls; r != 0; r &= r - 1) {
      const int u = std::countr_zero(r);
      if ((c.row(u) | (std::uint64_t{1} << u)) != cls) return false;
    }
    if (std::find(classes.begin(), classes.end(), cls) == classes.end()) classes.push_back(cls);
  }
  if (static_cast<int>(classes.size()) != omega) return false;
  int lo = n;
  int hi = 0;
  for (auto cls : classes) {
    lo = std::min(lo, std::popcount(cls));
    hi = std::max(hi, std::popcount(cls));
  }
  return hi - lo <= 1;
}

std::span<const std::string_view> bound_theorem_ids() {
  static constexpr std::array<std::string_view, 13> kIds{"L3.1", "T3.1", "T3.2", "T4.1", "T4.2", "T5.1", "T5.2",
                                                         "T6.1", "T6.2", "T6.3", "C6.1", "T6.4", "T7.1"};
  return kIds;
}

BoundVerdict bound_L1_lemma31(const Analysis& a) {
  const int n = a.order();
  if (n < 2) return not_applicable("L3.1", "needs n >= 2");
  const double d1 = static_cast<double>(a.profile.dd.max_transmission());
  BoundVerdict v = lower(a.tol, "L3.1", d1 + d1 / (n - 1), a.profile.dl_radius());
  v.witness["D1"] = d1;
  return v;
}

BoundVerdict bound_L1_theorem31(const Analysis& a) {
  if (is_complete(a.graph)) return not_applicable("T3.1", "complete graph excluded");
  const double d1 = static_cast<double>(a.profile.dd.max_transmission());
  const int diam = a.profile.dd.diam;
  BoundVerdict v = lower(a.tol, "T3.1", d1 + 2.0, a.profile.dl_radius());
  if (diam >= 3 && !v.strict) {
    v.holds = false;
    v.note = "diameter >= 3 requires strict inequality";
  }
  v.witness["D1"] = d1;
  v.witness["diam"] = diam;
  return v;
}

std::string_view to_string(L1Class c) {
  switch (c) {
    case L1Class::EqualsN_Kn: return "EqualsN_Kn";
    case L1Class::EqualsNPlus2_Matching: return "EqualsNPlus2_Matching";
    case L1Class::AboveNPlus2: return "AboveNPlus2";
  }
  return "Unknown";
}

L1Class classify_L1_theorem32(const Analysis& a) {
  const int n = a.order();
  if (n < 2) throw Error(ErrorKind::InvalidParams, "classification needs n >= 2");
  const double radius = a.profile.dl_radius();
  const auto structural = is_complete(a.graph)                  ? L1Class::EqualsN_Kn
                          : is_complete_minus_matching(a.graph) ? L1Class::EqualsNPlus2_Matching
                                                                : L1Class::AboveNPlus2;
  L1Class spectral;
  if (std::abs(radius - n) <= a.tol.equality) {
    spectral = L1Class::EqualsN_Kn;
  } else if (std::abs(radius - (n + 2)) <= a.tol.equality) {
    spectral = L1Class::EqualsNPlus2_Matching;
  } else if (radius > n + 2 + a.tol.equality) {
    spectral = L1Class::AboveNPlus2;
  } else {
    throw Error(ErrorKind::InconsistentClassification,
                "spectral radius " + std::to_string(radius) + " falls in the forbidden range (n, n+2)");
  }
  if (spectral != structural) {
    throw Error(ErrorKind::InconsistentClassification,
                "spectral class " + std::string(to_string(spectral)) + " vs structural class " +
                    std::string(to_string(structural)));
  }
  return spectral;
}

BoundVerdict bound_L1_theorem32(const Analysis& a) {
  const int n = a.order();
  if (n < 2) return not_applicable("T3.2", "needs n >= 2");
  const bool complete = is_complete(a.graph);
  BoundVerdict v = lower(a.tol, "T3.2", complete ? n : n + 2.0, a.profile.dl_radius());
  try {
    const L1Class c = classify_L1_theorem32(a);
    v.equality = c != L1Class::AboveNPlus2;
    v.holds = true;
    v.note = std::string(to_string(c));
  } catch (const Error& e) {
    v.holds = false;
    v.note = e.what();
  }
  v.witness["complement_matching"] = is_complete_minus_matching(a.graph) ? 1.0 : 0.0;
  return v;
}

BoundVerdict bound_L1_theorem41(const Analysis& a) {
  const int n = a.order();
  if (n < 4) return not_applicable("T4.1", "needs n >= 4");
  const double w = static_cast<double>(a.profile.dd.wiener);
  BoundVerdict v = upper(a.tol, "T4.1", 2.0 * w - static_cast<double>(n) * (n - 2), a.profile.dl_radius());
  const bool complete = is_complete(a.graph);
  v.witness["W"] = w;
  v.witness["is_complete"] = complete ? 1.0 : 0.0;
  if (v.equality && !complete) {
    v.note = is_complete_minus_edge(a.graph) ? "equality attained by K_n - e, not only K_n"
                                             : "equality attained by a non-complete graph";
  }
  return v;
}

BoundVerdict bound_L1_theorem42(const Analysis& a) {
  const int n = a.order();
  if (n < 3) return not_applicable("T4.2", "needs n >= 3; K_2 attains equality");
  const auto& dd = a.profile.dd;
  double squares = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) squares += static_cast<double>(dd(i, j)) * dd(i, j);
  }
  double trans_squares = 0.0;
  for (long t : dd.trans) trans_squares += static_cast<double>(t) * t;
  const double d1 = static_cast<double>(dd.max_transmission());
  const double radicand = 2.0 * squares - trans_squares / n;
  BoundVerdict v = upper(a.tol, "T4.2", d1 + std::sqrt(radicand), a.profile.dl_radius());
  v.holds = v.strict;
  v.witness["D1"] = d1;
  v.witness["radicand"] = radicand;
  return v;
}

BoundVerdict bound_L1_clique_lower(const Analysis& a) {
  const int n = a.order();
  const int omega = a.omega;
  if (omega >= n) return not_applicable("T5.1", "complete graph (w = n) excluded");
  const int k = (n + omega - 1) / omega;
  BoundVerdict v = lower(a.tol, "T5.1", n + k, a.profile.dl_radius());
  const bool turan = is_turan(a.graph, omega);
  v.witness["omega"] = omega;
  v.witness["alpha"] = a.profile.alg_connectivity;
  v.witness["is_turan"] = turan ? 1.0 : 0.0;
  // n = kw or n = kw - 1: equality exactly at the Turan graph.
  const bool turan_case = n % omega == 0 || n % omega == omega - 1;
  if (turan_case && v.equality != turan) {
    v.holds = false;
    v.note = "equality does not match Turan structure";
  }
  return v;
}

BoundVerdict bound_L1_clique_upper(const Analysis& a) {
  const int n = a.order();
  if (n < 2) return not_applicable("T5.2", "needs n >= 2");
  const Graph extremal = family::kite_clique(n, a.omega);
  const double bound = eigenvalues(dist_laplacian(extremal)).largest();
  BoundVerdict v = upper(a.tol, "T5.2", bound, a.profile.dl_radius());
  const bool iso = isomorphic(a.graph, extremal);
  v.witness["omega"] = a.omega;
  v.witness["is_extremal"] = iso ? 1.0 : 0.0;
  if (v.equality != iso) {
    v.holds = false;
    v.note = "equality does not match K_w^{n-w} structure";
  }
  return v;
}

BoundVerdict bound_Q1_diameter(const Analysis& a) {
  const int n = a.order();
  const int d = a.profile.dd.diam;
  if (d < 3) return not_applicable("T6.1", "needs diameter >= 3");
  const double linear = 2.0 * n - 4 + 2.0 * d;
  const double product = d >= 4 ? d * (n + 2.0) / 2.0 : 0.0;
  BoundVerdict v = lower(a.tol, "T6.1", std::max(linear, product), a.profile.dq_radius());
  v.holds = v.strict;
  v.witness["diam"] = d;
  v.witness["bound_2n-4+2d"] = linear;
  if (d >= 4) v.witness["bound_d(n+2)/2"] = product;
  return v;
}

BoundVerdict bound_gap_theorem62(const Analysis& a) {
  const int n = a.order();
  if (a.profile.dd.diam > 2) return not_applicable("T6.2", "needs diameter <= 2");
  if (n < 4) return not_applicable("T6.2", "needs n >= 4; K_3 exceeds the bound");
  const double x = n;
  const double bound = (x - 6 + std::sqrt(9 * x * x - 32 * x + 32)) / 2.0;
  BoundVerdict v = upper(a.tol, "T6.2", bound, a.profile.dq_radius() - a.profile.dl_radius());
  const bool star = is_star(a.graph);
  v.witness["is_star"] = star ? 1.0 : 0.0;
  if (v.equality != star) {
    v.holds = false;
    v.note = "equality does not match star structure";
  }
  return v;
}

BoundVerdict bound_Qn_theorem63(const Analysis& a) {
  const int n = a.order();
  if (n < 2) return not_applicable("T6.3", "needs n >= 2");
  const double w = static_cast<double>(a.profile.dd.wiener);
  BoundVerdict v = upper(a.tol, "T6.3", 2.0 * w / n - 1.0, a.profile.dq.smallest());
  v.witness["W"] = w;
  return v;
}

BoundVerdict bound_Qn_corollary61(const Analysis& a) {
  const int n = a.order();
  const int count = n >= 2 ? min_transmission_count(a.profile.dd) : 0;
  if (count < 2) return not_applicable("C6.1", "minimum transmission attained once");
  const double dn = static_cast<double>(a.profile.dd.min_transmission());
  BoundVerdict v = upper(a.tol, "C6.1", dn - 1.0, a.profile.dq.smallest());
  v.witness["Dn"] = dn;
  v.witness["Dn_multiplicity"] = count;
  return v;
}

BoundVerdict bound_Qn_theorem64(const Analysis& a) {
  const int n = a.order();
  if (n < 2) return not_applicable("T6.4", "needs n >= 2");
  const double dn = static_cast<double>(a.profile.dd.min_transmission());
  BoundVerdict v = upper(a.tol, "T6.4", dn, a.profile.dq.smallest());
  v.holds = v.strict;
  v.witness["Dn"] = dn;
  v.witness["Dn_multiplicity"] = min_transmission_count(a.profile.dd);
  return v;
}

std::vector<BoundVerdict> bound_Qn_upper(const Analysis& a) {
  return {bound_Qn_theorem63(a), bound_Qn_corollary61(a), bound_Qn_theorem64(a)};
}

BoundVerdict bound_Q1_unicyclic(const Analysis& a) {
  const int n = a.order();
  if (!is_unicyclic(a.graph)) return not_applicable("T7.1", "graph is not unicyclic");
  if (n < 6) return not_applicable("T7.1", "needs n >= 6");
  const Graph kite = family::kite(n);
  const double bound = eigenvalues(dist_signless_laplacian(kite)).largest();
  BoundVerdict v = upper(a.tol, "T7.1", bound, a.profile.dq_radius());
  const bool iso = isomorphic(a.graph, kite);
  v.witness["is_kite"] = iso ? 1.0 : 0.0;
  if (v.equality != iso) {
    v.holds = false;
    v.note = "equality does not match kite structure";
  }
  return v;
}

BoundVerdict check_lemma41(const Analysis& a) {
  const int n = a.order();
  if (n < 3) return not_applicable("L4.1", "needs n >= 3");
  const auto& dl = a.profile.dl;
  BoundVerdict v = lower(a.tol, "L4.1", n, dl.at(n - 1));
  const double zero = dl.at(n);
  v.witness["smallest"] = zero;
  if (std::abs(zero) > a.tol.slack) {
    v.holds = false;
    v.note = "smallest eigenvalue is not zero";
  }
  return v;
}

BoundVerdict check_lemma42(const Analysis& a) {
  const int n = a.order();
  if (n < 4) return not_applicable("L4.2", "needs n >= 4");
  BoundVerdict v = lower(a.tol, "L4.2", n, a.profile.dl.at(2));
  const bool extremal = is_complete(a.graph) || is_complete_minus_edge(a.graph);
  v.witness["is_Kn_or_Kn-e"] = extremal ? 1.0 : 0.0;
  if (v.equality != extremal) {
    v.holds = false;
    v.note = "equality does not match K_n / K_n - e structure";
  }
  return v;
}

BoundVerdict check_lemma54(const Analysis& a) {
  const int n = a.order();
  if (n < 2) return not_applicable("L5.4", "needs n >= 2");
  if (a.profile.dd.diam > 2) return not_applicable("L5.4", "needs diameter <= 2");
  BoundVerdict v = make(a.tol, "L5.4", 2.0 * n - a.profile.alg_connectivity, a.profile.dl_radius());
  v.holds = std::abs(v.observed - v.bound_value) <= a.tol.slack;
  v.witness["alpha"] = a.profile.alg_connectivity;
  return v;
}

BoundVerdict evaluate_bound(std::string_view id, const Analysis& a) {
  if (id == "L3.1") return bound_L1_lemma31(a);
  if (id == "T3.1") return bound_L1_theorem31(a);
  if (id == "T3.2") return bound_L1_theorem32(a);
  if (id == "T4.1") return bound_L1_theorem41(a);
  if (id == "T4.2") return bound_L1_theorem42(a);
  if (id == "T5.1") return bound_L1_clique_lower(a);
  if (id == "T5.2") return bound_L1_clique_upper(a);
  if (id == "T6.1") return bound_Q1_diameter(a);
  if (id == "T6.2") return bound_gap_theorem62(a);
  if (id == "T6.3") return bound_Qn_theorem63(a);
  if (id == "C6.1") return bound_Qn_corollary61(a);
  if (id == "T6.4") return bound_Qn_theorem64(a);
  if (id == "T7.1") return bound_Q1_unicyclic(a);
  if (id == "L4.1") return check_lemma41(a);
  if (id == "L4.2") return check_lemma42(a);
  if (id == "L5.4") return check_lemma54(a);
  throw Error(ErrorKind::UnknownTheorem, "unknown bound id '" + std::string(id) + "'");
}

}  // namespace distlap
