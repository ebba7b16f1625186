#ifndef LINPOW_GRAPH_HPP
#define LINPOW_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "betti.hpp"
#include "field.hpp"
#include "linear_quotients.hpp"
#include "monomial.hpp"

namespace linpow {

/// Finite simple graph on vertices 0..n-1 (printed 1-based).
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, 0) {
    if (n > kMaxMaskVars) throw std::length_error("graphs are limited to 64 vertices");
  }
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : Graph(n) {
    for (auto [a, b] : edges) add_edge(a, b);
  }

  std::size_t vertex_count() const { return adj_.size(); }

  void add_edge(std::size_t a, std::size_t b) {
    if (a >= adj_.size() || b >= adj_.size()) throw std::out_of_range("edge endpoint outside the vertex set");
    if (a == b) throw std::invalid_argument("loops are not allowed");
    if (has_edge(a, b)) throw std::invalid_argument("multiple edges are not allowed");
    adj_[a] |= VarMask{1} << b;
    adj_[b] |= VarMask{1} << a;
  }

  bool has_edge(std::size_t a, std::size_t b) const { return adj_[a] >> b & 1U; }
  VarMask neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return static_cast<std::size_t>(std::popcount(adj_[v])); }

  /// Edges (i, j), i < j, in lex order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < adj_.size(); ++i)
      for (std::size_t j = i + 1; j < adj_.size(); ++j)
        if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
  }

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (auto a : adj_) c += static_cast<std::size_t>(std::popcount(a));
    return c / 2;
  }

  VarMask all_vertices() const {
    return adj_.size() == kMaxMaskVars ? ~VarMask{0} : (VarMask{1} << adj_.size()) - 1;
  }

  /// Connected components as vertex masks, ordered by smallest vertex.
  std::vector<VarMask> components(VarMask within) const {
    std::vector<VarMask> out;
    VarMask left = within;
    while (left) {
      VarMask comp = left & (~left + 1), frontier = comp;
      while (frontier) {
        VarMask grow = 0;
        for (VarMask f = frontier; f; f &= f - 1) grow |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
        grow &= within & ~comp;
        comp |= grow;
        frontier = grow;
      }
      out.push_back(comp);
      left &= ~comp;
    }
    return out;
  }

  bool is_connected_on(VarMask within) const { return within == 0 || components(within).size() == 1; }
  bool is_connected() const { return is_connected_on(all_vertices()); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VarMask> adj_;
};

inline MonomialIdeal edge_ideal(const Graph& G) {
  const std::size_t n = G.vertex_count();
  std::vector<Monomial> gens;
  for (auto [a, b] : G.edges()) gens.push_back(Monomial::from_mask(n, (VarMask{1} << a) | (VarMask{1} << b)));
  return minimalize(std::move(gens), n);
}

inline Graph complement_graph(const Graph& G) {
  Graph H(G.vertex_count());
  for (std::size_t i = 0; i < G.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < G.vertex_count(); ++j)
      if (!G.has_edge(i, j)) H.add_edge(i, j);
  return H;
}

/// Maximum cardinality search; the reverse visit order is a perfect
/// elimination ordering exactly when G is chordal.
inline std::vector<std::size_t> mcs_order(const Graph& G) {
  const std::size_t n = G.vertex_count();
  std::vector<std::size_t> weight(n, 0), order;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v] && (best == n || weight[v] > weight[best])) best = v;
    done[best] = true;
    order.push_back(best);
    for (std::size_t w = 0; w < n; ++w)
      if (!done[w] && G.has_edge(best, w)) ++weight[w];
  }
  return order;
}

/// Later neighbours of every vertex form a clique.
inline bool is_perfect_elimination_order(const Graph& G, const std::vector<std::size_t>& peo) {
  const std::size_t n = G.vertex_count();
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[peo[k]] = k;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t v = peo[k];
    VarMask later = 0;
    for (std::size_t w = 0; w < n; ++w)
      if (G.has_edge(v, w) && pos[w] > k) later |= VarMask{1} << w;
    if (!later) continue;
    // the earliest later neighbour must be adjacent to all the others
    std::size_t first = n;
    for (VarMask f = later; f; f &= f - 1) {
      auto w = static_cast<std::size_t>(std::countr_zero(f));
      if (first == n || pos[w] < pos[first]) first = w;
    }
    VarMask others = later & ~(VarMask{1} << first);
    if ((others & ~G.neighbors(first)) != 0) return false;
  }
  return true;
}

inline bool is_chordal(const Graph& G) {
  auto order = mcs_order(G);
  std::reverse(order.begin(), order.end());
  return is_perfect_elimination_order(G, order);
}

/// I_c(G) = (x_{[n] \ e} : e in E(G)).
inline MonomialIdeal complementary_edge_ideal(const Graph& G) {
  const std::size_t n = G.vertex_count();
  if (n < 3) throw std::invalid_argument("complementary edge ideal needs at least 3 vertices");
  if (G.edge_count() == 0) throw std::invalid_argument("complementary edge ideal of an edgeless graph");
  std::vector<Monomial> gens;
  for (auto [a, b] : G.edges())
    gens.push_back(Monomial::from_mask(n, G.all_vertices() & ~((VarMask{1} << a) | (VarMask{1} << b))));
  return minimalize(std::move(gens), n);
}

/// Number of connected components with more than one vertex.
inline std::size_t c_count(const Graph& G) {
  std::size_t c = 0;
  for (auto comp : G.components(G.all_vertices()))
    if (std::popcount(comp) > 1) ++c;
  return c;
}

inline VarMask isolated_vertices(const Graph& G) {
  VarMask out = 0;
  for (std::size_t v = 0; v < G.vertex_count(); ++v)
    if (G.degree(v) == 0) out |= VarMask{1} << v;
  return out;
}

/// Removing order[0], ..., order[i-1] leaves a connected graph for every i < n.
inline bool is_connected_elimination(const Graph& G, const std::vector<std::size_t>& order, VarMask within) {
  VarMask left = within;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!G.is_connected_on(left)) return false;
    left &= ~(VarMask{1} << order[i]);
  }
  return true;
}

/// Labels the vertices of `within` (which must induce a connected subgraph)
/// by repeatedly taking the smallest-index leaf of a breadth-first spanning
/// tree rooted at the smallest vertex. order[k] is the vertex labelled k+1.
inline std::vector<std::size_t> connected_elimination_labeling(const Graph& G, VarMask within) {
  if (within == 0) return {};
  if (!G.is_connected_on(within)) throw std::invalid_argument("elimination labeling needs a connected graph");
  const std::size_t n = G.vertex_count();
  std::vector<VarMask> tree(n, 0);
  auto root = static_cast<std::size_t>(std::countr_zero(within));
  VarMask seen = VarMask{1} << root;
  std::queue<std::size_t> q;
  q.push(root);
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (VarMask f = G.neighbors(v) & within & ~seen; f; f &= f - 1) {
      auto w = static_cast<std::size_t>(std::countr_zero(f));
      seen |= VarMask{1} << w;
      tree[v] |= VarMask{1} << w;
      tree[w] |= VarMask{1} << v;
      q.push(w);
    }
  }
  std::vector<std::size_t> order;
  VarMask left = within;
  while (left) {
    std::size_t leaf = n;
    for (VarMask f = left; f; f &= f - 1) {
      auto v = static_cast<std::size_t>(std::countr_zero(f));
      if (std::popcount(tree[v] & left) <= 1) {
        leaf = v;
        break;
      }
    }
    order.push_back(leaf);
    left &= ~(VarMask{1} << leaf);
  }
  return order;
}

inline std::vector<std::size_t> connected_elimination_labeling(const Graph& G) {
  return connected_elimination_labeling(G, G.all_vertices());
}

/// Variable priority for I_c(G): the elimination labeling of the non-isolated
/// part first, isolated vertices last.
inline std::vector<std::size_t> complementary_priority(const Graph& G) {
  VarMask iso = isolated_vertices(G);
  auto order = connected_elimination_labeling(G, G.all_vertices() & ~iso);
  for (VarMask f = iso; f; f &= f - 1) order.push_back(static_cast<std::size_t>(std::countr_zero(f)));
  return order;
}

/// Graph whose vertex k is the old vertex order[k].
inline Graph relabel(const Graph& G, const std::vector<std::size_t>& order) {
  const std::size_t n = G.vertex_count();
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;
  Graph H(n);
  for (auto [a, b] : G.edges()) H.add_edge(pos[a], pos[b]);
  return H;
}

inline Graph induced_subgraph(const Graph& G, VarMask within) {
  std::vector<std::size_t> keep;
  for (VarMask f = within; f; f &= f - 1) keep.push_back(static_cast<std::size_t>(std::countr_zero(f)));
  std::vector<std::size_t> pos(G.vertex_count(), 0);
  for (std::size_t k = 0; k < keep.size(); ++k) pos[keep[k]] = k;
  Graph H(keep.size());
  for (auto [a, b] : G.edges())
    if ((within >> a & 1U) && (within >> b & 1U)) H.add_edge(pos[a], pos[b]);
  return H;
}

// ---------------------------------------------------------------------------
// Encodings: `n:hex` where bit k of the hex mask is the k-th pair (i<j) in
// lex order. Text format: first line n, then one edge `i j` (1-based) per line.

inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  Graph G(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (mask >> pair_index(n, i, j) & 1U) G.add_edge(i, j);
  return G;
}

inline std::uint64_t graph_mask(const Graph& G) {
  if (G.vertex_count() > 11) throw std::length_error("graph mask encoding supports up to 11 vertices");
  std::uint64_t mask = 0;
  for (auto [a, b] : G.edges()) mask |= std::uint64_t{1} << pair_index(G.vertex_count(), a, b);
  return mask;
}

inline std::string graph_code(const Graph& G) {
  std::ostringstream os;
  os << G.vertex_count() << ':' << std::hex << graph_mask(G);
  return os.str();
}

inline Graph parse_graph(std::istream& in) {
  std::string line;
  std::optional<Graph> G;
  while (std::getline(in, line)) {
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = detail::trim(view);
    if (view.empty()) continue;
    std::istringstream ls{std::string(view)};
    if (!G) {
      std::size_t n = 0;
      if (!(ls >> n)) throw std::invalid_argument("graph file must start with the vertex count");
      G.emplace(n);
      continue;
    }
    std::size_t a = 0, b = 0;
    if (!(ls >> a >> b) || a == 0 || b == 0) throw std::invalid_argument("bad edge line '" + line + "'");
    G->add_edge(a - 1, b - 1);
  }
  if (!G) throw std::invalid_argument("empty graph file");
  return *G;
}

inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

inline void write_graph(std::ostream& os, const Graph& G) {
  os << G.vertex_count() << '\n';
  for (auto [a, b] : G.edges()) os << a + 1 << ' ' << b + 1 << '\n';
}

inline Graph cycle_graph(std::size_t n) {
  Graph G(n);
  for (std::size_t i = 0; i < n; ++i) G.add_edge(i, (i + 1) % n);
  return G;
}

inline Graph path_graph(std::size_t n) {
  Graph G(n);
  for (std::size_t i = 0; i + 1 < n; ++i) G.add_edge(i, i + 1);
  return G;
}

inline Graph complete_graph(std::size_t n) {
  Graph G(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) G.add_edge(i, j);
  return G;
}

// ---------------------------------------------------------------------------
// Decision procedures for quadratic and degree n-2 squarefree ideals.

struct PowerCheck {
  unsigned k = 0;
  SearchStatus status = SearchStatus::none_exists;
  std::size_t generators = 0;
};

struct TheoremAReport {
  bool linres_q = false;
  bool linres_f2 = false;
  bool chordal_complement = false;
  std::vector<PowerCheck> powers;  // LQ search on I(G)^k
  /// Consecutive powers k = 1, 2, ... for which an order was found.
  unsigned lq_depth() const {
    unsigned d = 0;
    for (const auto& p : powers) {
      if (p.status != SearchStatus::found) break;
      d = p.k;
    }
    return d;
  }
  bool inconclusive() const {
    return std::any_of(powers.begin(), powers.end(),
                       [](const PowerCheck& p) { return p.status == SearchStatus::budget_exhausted; });
  }
  /// linres over both fields, chordality and linear quotients of the checked
  /// powers all agree.
  bool equivalence_holds() const {
    if (linres_q != linres_f2 || linres_q != chordal_complement) return false;
    bool all_found = std::all_of(powers.begin(), powers.end(),
                                 [](const PowerCheck& p) { return p.status == SearchStatus::found; });
    if (chordal_complement) return all_found;
    // without linear resolution no power list can start with a linear quotients order
    return powers.empty() || powers.front().status != SearchStatus::found;
  }
};

inline TheoremAReport theoremA_verify(const Graph& G, unsigned kmax, std::uint64_t budget = 1'000'000) {
  if (G.edge_count() == 0) throw std::invalid_argument("edge ideal check needs at least one edge");
  TheoremAReport r;
  auto I = edge_ideal(G);
  r.linres_q = has_linear_resolution(I, kQ);
  r.linres_f2 = has_linear_resolution(I, F2());
  r.chordal_complement = is_chordal(complement_graph(G));
  for (unsigned k = 1; k <= kmax; ++k) {
    auto P = power_ideal(I, k);
    PowerCheck pc{k, find_lq_order(P, budget).status, P.size()};
    r.powers.push_back(pc);
    if (pc.status != SearchStatus::found) break;
  }
  return r;
}

struct TheoremBReport {
  bool linres_q = false;
  bool linres_f2 = false;
  std::size_t c = 0;
  std::vector<std::size_t> priority;  // elimination labeling, isolated vertices last
  std::vector<std::pair<unsigned, bool>> lex_lq;  // (k, lex_lq_check of I_c(G)^k)
  unsigned lq_depth() const {
    unsigned d = 0;
    for (auto [k, ok] : lex_lq) {
      if (!ok) break;
      d = k;
    }
    return d;
  }
  bool equivalence_holds() const {
    bool c1 = c == 1;
    if (linres_q != linres_f2 || linres_q != c1) return false;
    if (!c1) return true;
    return std::all_of(lex_lq.begin(), lex_lq.end(), [](auto p) { return p.second; });
  }
};

inline TheoremBReport theoremB_verify(const Graph& G, unsigned kmax) {
  TheoremBReport r;
  auto I = complementary_edge_ideal(G);
  r.linres_q = has_linear_resolution(I, kQ);
  r.linres_f2 = has_linear_resolution(I, F2());
  r.c = c_count(G);
  if (r.c == 1) {
    r.priority = complementary_priority(G);
    for (unsigned k = 1; k <= kmax; ++k) r.lex_lq.emplace_back(k, lex_lq_check(power_ideal(I, k), r.priority).ok);
  }
  return r;
}

}  // namespace linpow

#endif  // LINPOW_GRAPH_HPP
