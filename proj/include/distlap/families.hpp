#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distlap/graph.hpp"
#include "distlap/linalg.hpp"

namespace distlap {

enum class FamilyKind {
  Path,                   // path:n
  Cycle,                  // cycle:n
  Complete,               // complete:n
  Star,                   // star:n, centre 0
  StarPlus,               // starplus:n, star plus the edge {1,2}
  CompleteMinusMatching,  // kmatch:n,k  K_n - kK_2
  CompleteMultipartite,   // multipartite:n1,n2,...
  Turan,                  // turan:n,w
  KiteClique,             // kclique:n,w  K_w with a pendant path of n-w vertices
  Kite3,                  // kite:n
  TShape,                 // t:n1,n2,n3
  TStar,                  // tstar:n  = T(2,2,n-5)
  U4,                     // u4:n1,n2
  U3,                     // u3:n1,n2
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  std::vector<int> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Parses "kite:10", "turan:10,3", "t:2,2,5" and friends.
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);
/// Usage string listing every accepted family name.
std::string family_grammar();

/// Builds the family member. Vertex 0 sits on the distinguished vertex:
/// clique/path junction, star centre, branch vertex, or the cycle vertex
/// carrying the longer path.
Graph build(const FamilySpec& spec);

namespace family {
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int n);
Graph star_plus(int n);
Graph complete_minus_matching(int n, int k);
Graph complete_multipartite(std::span<const int> parts);
Graph turan(int n, int omega);
Graph kite_clique(int n, int omega);
Graph kite(int n);
Graph t_shape(int n1, int n2, int n3);
Graph t_star(int n);
Graph u4(int n1, int n2);
Graph u3(int n1, int n2);
std::vector<int> turan_parts(int n, int omega);
}  // namespace family

struct RootMultiplicity {
  double root = 0.0;
  int multiplicity = 0;
};

/// Factored distance Laplacian characteristic polynomial of the complete
/// multipartite graph: 0 once, n with multiplicity k-1, and n + n_i with
/// multiplicity n_i - 1 for each part (zero multiplicities omitted, equal
/// roots merged).
std::vector<RootMultiplicity> dl_charpoly_multipartite(std::span<const int> parts);
/// The same roots expanded by multiplicity and sorted descending.
std::vector<double> expand_roots(std::span<const RootMultiplicity> roots);

enum class Quantity {
  DLRadius,  // largest distance Laplacian eigenvalue
  QRadius,   // largest distance signless Laplacian eigenvalue
  QMinEig,   // smallest distance signless Laplacian eigenvalue
  Wiener,
};

std::string_view to_string(Quantity q);

/// Cubic whose largest root is the distance signless Laplacian spectral
/// radius of S_n^+.
Polynomial star_plus_cubic(int n);

/// Closed-form value of the quantity; UnsupportedQuantity when none is known
/// for the family.
double closed_form(const FamilySpec& spec, Quantity quantity);

}  // namespace distlap
