#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "distlap/graph.hpp"
#include "distlap/spectra.hpp"
#include "distlap/verdict.hpp"

namespace distlap {

struct CliqueNumber {
  int omega = 0;
};

/// Exact clique number by branch and bound with a greedy colouring bound.
CliqueNumber clique_number(const Graph& g);

/// Everything the bound evaluators read, computed once per graph.
struct Analysis {
  Graph graph;
  SpectralProfile profile;
  int omega = 0;
  Tolerance tol;

  int order() const { return graph.order(); }
};

Analysis analyze(const Graph& g, Tolerance tol = {});

// Structural recognizers used for equality characterizations.
bool is_complete(const Graph& g);
/// K_n - kK_2 for some k >= 1: complement is a nonempty matching.
bool is_complete_minus_matching(const Graph& g);
/// K_n - e: complement has exactly one edge.
bool is_complete_minus_edge(const Graph& g);
bool is_star(const Graph& g);
bool is_unicyclic(const Graph& g);
/// Complete w-partite with part sizes differing by at most one.
bool is_turan(const Graph& g, int omega);

/// The theorem ids evaluated by this module, in the order printed by the CLI.
std::span<const std::string_view> bound_theorem_ids();

BoundVerdict bound_L1_lemma31(const Analysis& a);
BoundVerdict bound_L1_theorem31(const Analysis& a);

enum class L1Class { EqualsN_Kn, EqualsNPlus2_Matching, AboveNPlus2 };
std::string_view to_string(L1Class c);
/// Throws InconsistentClassification when the spectral and structural
/// readings disagree.
L1Class classify_L1_theorem32(const Analysis& a);
BoundVerdict bound_L1_theorem32(const Analysis& a);

BoundVerdict bound_L1_theorem41(const Analysis& a);
BoundVerdict bound_L1_theorem42(const Analysis& a);
BoundVerdict bound_L1_clique_lower(const Analysis& a);
BoundVerdict bound_L1_clique_upper(const Analysis& a);
BoundVerdict bound_Q1_diameter(const Analysis& a);
BoundVerdict bound_gap_theorem62(const Analysis& a);

BoundVerdict bound_Qn_theorem63(const Analysis& a);
BoundVerdict bound_Qn_corollary61(const Analysis& a);
BoundVerdict bound_Qn_theorem64(const Analysis& a);
/// T6.3, C6.1 and T6.4 together.
std::vector<BoundVerdict> bound_Qn_upper(const Analysis& a);

BoundVerdict bound_Q1_unicyclic(const Analysis& a);

// Lemma checks over the same analysis.
BoundVerdict check_lemma41(const Analysis& a);
BoundVerdict check_lemma42(const Analysis& a);
BoundVerdict check_lemma54(const Analysis& a);

/// Dispatch on a bound id (any of bound_theorem_ids() plus L4.1, L4.2, L5.4).
BoundVerdict evaluate_bound(std::string_view id, const Analysis& a);

}  // namespace distlap
