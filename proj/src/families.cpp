#include "distlap/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "distlap/error.hpp"

namespace distlap {

namespace {

struct KindName {
  FamilyKind kind;
  std::string_view name;
  std::string_view params;
};

constexpr std::array<KindName, 14> kKindNames{{
    {FamilyKind::Path, "path", "n"},
    {FamilyKind::Cycle, "cycle", "n"},
    {FamilyKind::Complete, "complete", "n"},
    {FamilyKind::Star, "star", "n"},
    {FamilyKind::StarPlus, "starplus", "n"},
    {FamilyKind::CompleteMinusMatching, "kmatch", "n,k"},
    {FamilyKind::CompleteMultipartite, "multipartite", "n1,n2,..."},
    {FamilyKind::Turan, "turan", "n,w"},
    {FamilyKind::KiteClique, "kclique", "n,w"},
    {FamilyKind::Kite3, "kite", "n"},
    {FamilyKind::TShape, "t", "n1,n2,n3"},
    {FamilyKind::TStar, "tstar", "n"},
    {FamilyKind::U4, "u4", "n1,n2"},
    {FamilyKind::U3, "u3", "n1,n2"},
}};

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidParams, what); }

void require(bool cond, const std::string& what) {
  if (!cond) invalid(what);
}

void add_path(Graph& g, Vertex from, Vertex first, int length) {
  Vertex prev = from;
  for (int i = 0; i < length; ++i) {
    g.add_edge(prev, first + i);
    prev = first + i;
  }
}

std::size_t expected_params(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::CompleteMinusMatching:
    case FamilyKind::Turan:
    case FamilyKind::KiteClique:
    case FamilyKind::U4:
    case FamilyKind::U3: return 2;
    case FamilyKind::TShape: return 3;
    case FamilyKind::CompleteMultipartite: return 0;  // variadic
    default: return 1;
  }
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) invalid("family spec needs the form name:params");
  const std::string_view name = text.substr(0, colon);
  auto it = std::find_if(kKindNames.begin(), kKindNames.end(), [&](const KindName& k) { return k.name == name; });
  if (it == kKindNames.end()) invalid("unknown family '" + std::string(name) + "'");

  FamilySpec spec{it->kind, {}};
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      invalid("bad integer '" + std::string(token) + "' in family spec");
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  const std::size_t want = expected_params(spec.kind);
  if (want != 0 ? spec.params.size() != want : spec.params.size() < 2) {
    invalid("family '" + std::string(name) + "' expects parameters " + std::string(it->params));
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  auto it = std::find_if(kKindNames.begin(), kKindNames.end(), [&](const KindName& k) { return k.kind == spec.kind; });
  std::string out(it->name);
  out += ':';
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(spec.params[i]);
  }
  return out;
}

std::string family_grammar() {
  std::string out;
  for (const auto& k : kKindNames) {
    if (!out.empty()) out += ", ";
    out += std::string(k.name) + ":" + std::string(k.params);
  }
  return out;
}

namespace family {

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  Graph g(n);
  add_path(g, 0, 1, n - 1);
  return g;
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph star(int n) {
  require(n >= 1, "star needs n >= 1");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph star_plus(int n) {
  require(n >= 3, "S_n^+ needs n >= 3");
  Graph g = star(n);
  g.add_edge(1, 2);
  return g;
}

Graph complete_minus_matching(int n, int k) {
  require(k >= 1 && k <= n / 2, "K_n - kK_2 needs 1 <= k <= floor(n/2)");
  Graph g = complete(n);
  for (int i = 0; i < k; ++i) g.remove_edge(2 * i, 2 * i + 1);
  return g;
}

Graph complete_multipartite(std::span<const int> parts) {
  require(parts.size() >= 2, "complete multipartite graph needs at least two parts");
  require(std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 1; }), "parts must be nonempty");
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  Graph g(n);
  std::vector<int> block(n);
  int v = 0;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    for (int i = 0; i < parts[b]; ++i) block[v++] = static_cast<int>(b);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (block[i] != block[j]) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<int> turan_parts(int n, int omega) {
  require(omega >= 1 && omega <= n, "Turan graph needs 1 <= w <= n");
  std::vector<int> parts(omega, n / omega);
  for (int i = 0; i < n % omega; ++i) ++parts[i];
  return parts;
}

Graph turan(int n, int omega) {
  const auto parts = turan_parts(n, omega);
  if (omega == 1) {
    require(n == 1, "T_{n,1} is disconnected for n > 1");
    return Graph(1);
  }
  return complete_multipartite(parts);
}

Graph kite_clique(int n, int omega) {
  require(omega >= 1 && omega <= n, "K_w^{n-w} needs 1 <= w <= n");
  require(omega >= 2 || n == 1, "K_1 with a pendant path is a path; use w >= 2");
  Graph g(n);
  for (int i = 0; i < omega; ++i) {
    for (int j = i + 1; j < omega; ++j) g.add_edge(i, j);
  }
  add_path(g, 0, omega, n - omega);
  return g;
}

Graph kite(int n) {
  require(n >= 3, "kite needs n >= 3");
  return kite_clique(n, 3);
}

Graph t_shape(int n1, int n2, int n3) {
  require(n1 >= 0 && n2 >= 0 && n3 >= 0, "T-shape arm lengths must be nonnegative");
  Graph g(1 + n1 + n2 + n3);
  add_path(g, 0, 1, n1);
  add_path(g, 0, 1 + n1, n2);
  add_path(g, 0, 1 + n1 + n2, n3);
  return g;
}

Graph t_star(int n) {
  require(n >= 6, "T* = T(2,2,n-5) needs n >= 6");
  return t_shape(2, 2, n - 5);
}

// Layout: v1 = 0, w1 = 1, u1 = 2, w2 = 3, then v2..v_{n1}, then u2..u_{n2}.
Graph u4(int n1, int n2) {
  require(n1 >= n2 && n2 >= 2, "U4 needs n1 >= n2 >= 2");
  Graph g(n1 + n2 + 2);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  add_path(g, 0, 4, n1 - 1);
  add_path(g, 2, 4 + n1 - 1, n2 - 1);
  return g;
}

Graph u3(int n1, int n2) {
  Graph g = u4(n1, n2);
  g.add_edge(1, 3);
  g.remove_edge(0, 3);
  return g;
}

}  // namespace family

Graph build(const FamilySpec& spec) {
  const auto& p = spec.params;
  const std::size_t want = expected_params(spec.kind);
  if (want != 0 ? p.size() != want : p.size() < 2) invalid("wrong parameter count for " + to_string(spec));
  switch (spec.kind) {
    case FamilyKind::Path: return family::path(p[0]);
    case FamilyKind::Cycle: return family::cycle(p[0]);
    case FamilyKind::Complete: return family::complete(p[0]);
    case FamilyKind::Star: return family::star(p[0]);
    case FamilyKind::StarPlus: return family::star_plus(p[0]);
    case FamilyKind::CompleteMinusMatching: return family::complete_minus_matching(p[0], p[1]);
    case FamilyKind::CompleteMultipartite: return family::complete_multipartite(p);
    case FamilyKind::Turan: return family::turan(p[0], p[1]);
    case FamilyKind::KiteClique: return family::kite_clique(p[0], p[1]);
    case FamilyKind::Kite3: return family::kite(p[0]);
    case FamilyKind::TShape: return family::t_shape(p[0], p[1], p[2]);
    case FamilyKind::TStar: return family::t_star(p[0]);
    case FamilyKind::U4: return family::u4(p[0], p[1]);
    case FamilyKind::U3: return family::u3(p[0], p[1]);
  }
  invalid("unknown family kind");
}

std::vector<RootMultiplicity> dl_charpoly_multipartite(std::span<const int> parts) {
  require(parts.size() >= 2, "multipartite characteristic polynomial needs k >= 2 parts");
  require(std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 1; }), "parts must be nonempty");
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  const int k = static_cast<int>(parts.size());
  std::map<int, int, std::greater<>> mult;
  mult[0] += 1;
  mult[n] += k - 1;
  for (int ni : parts) {
    if (ni > 1) mult[n + ni] += ni - 1;
  }
  std::vector<RootMultiplicity> out;
  for (auto [root, m] : mult) out.push_back({static_cast<double>(root), m});
  return out;
}

std::vector<double> expand_roots(std::span<const RootMultiplicity> roots) {
  std::vector<double> out;
  for (const auto& r : roots) out.insert(out.end(), r.multiplicity, r.root);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::DLRadius: return "dl_radius";
    case Quantity::QRadius: return "q_radius";
    case Quantity::QMinEig: return "q_min";
    case Quantity::Wiener: return "wiener";
  }
  return "unknown";
}

Polynomial star_plus_cubic(int n) {
  const double x = n;
  return {1.0, -(7 * x - 15), 14 * x * x - 63 * x + 72, -(8 * x * x * x - 52 * x * x + 108 * x - 68)};
}

namespace {

[[noreturn]] void unsupported(const FamilySpec& spec, Quantity q) {
  throw Error(ErrorKind::UnsupportedQuantity,
              "no closed form for " + std::string(to_string(q)) + " of " + to_string(spec));
}

double star_q_root(int n, int sign) {
  const double x = n;
  return (5 * x - 8 + sign * std::sqrt(9 * x * x - 32 * x + 32)) / 2.0;
}

double multipartite_radius(std::span<const int> parts) {
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  const int largest = *std::max_element(parts.begin(), parts.end());
  // All parts singletons means K_n, whose (x - n - 1) factor has exponent 0.
  return largest >= 2 ? n + largest : n;
}

}  // namespace

double closed_form(const FamilySpec& spec, Quantity quantity) {
  build(spec);  // validates parameters
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Complete: {
      const int n = p[0];
      if (n < 2) break;
      if (quantity == Quantity::DLRadius) return n;
      if (quantity == Quantity::QRadius) return 2.0 * n - 2;
      if (quantity == Quantity::QMinEig) return n - 2.0;
      if (quantity == Quantity::Wiener) return n * (n - 1) / 2.0;
      break;
    }
    case FamilyKind::CompleteMinusMatching:
      if (quantity == Quantity::DLRadius) return p[0] + 2.0;
      break;
    case FamilyKind::CompleteMultipartite:
      if (quantity == Quantity::DLRadius) return multipartite_radius(p);
      break;
    case FamilyKind::Turan:
      if (quantity == Quantity::DLRadius && p[1] >= 2) {
        return multipartite_radius(family::turan_parts(p[0], p[1]));
      }
      break;
    case FamilyKind::Cycle:
      if (quantity == Quantity::QRadius) {
        const double n = p[0];
        return p[0] % 2 == 0 ? n * n / 2.0 : (n * n - 1.0) / 2.0;
      }
      break;
    case FamilyKind::StarPlus:
      if (quantity == Quantity::QRadius) {
        const double n = p[0];
        return largest_root(star_plus_cubic(p[0]), 0.0, 4.0 * n * n);
      }
      break;
    case FamilyKind::Star:
      if (p[0] < 3) break;
      if (quantity == Quantity::QRadius) return star_q_root(p[0], +1);
      // Leaf differences give 2n-5 (multiplicity n-2), which undercuts the
      // smaller root only at n = 3.
      if (quantity == Quantity::QMinEig) return std::min(star_q_root(p[0], -1), 2.0 * p[0] - 5);
      if (quantity == Quantity::DLRadius) return 2.0 * p[0] - 1;
      break;
    case FamilyKind::Kite3:
      if (quantity == Quantity::Wiener) {
        const double n = p[0];
        return n * (n - 1) * (n - 2) / 6.0 + (n - 1) * (n - 2) / 2.0 + 2.0;
      }
      break;
    default: break;
  }
  unsupported(spec, quantity);
}

}  // namespace distlap
