#ifndef LINPOW_CORPUS_HPP
#define LINPOW_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "graph.hpp"
#include "monomial.hpp"

namespace linpow {

/// Proper nonzero ideal in n variables from at most max_gens random monomials
/// of degree >= 1 with exponents <= max_exp.
inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, std::size_t n, std::size_t max_gens, unsigned max_exp) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::uniform_int_distribution<unsigned> expo(0, max_exp);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::vector<Monomial> gens;
  std::size_t k = count(rng);
  for (std::size_t g = 0; g < k; ++g) {
    std::vector<Monomial::Exponent> e(n);
    for (auto& x : e) x = static_cast<Monomial::Exponent>(expo(rng));
    if (Monomial(e).degree() == 0) e[var(rng)] = 1;
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), n);
}

/// Proper nonzero squarefree ideal in n variables.
inline MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, std::size_t n, std::size_t max_gens) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::uniform_int_distribution<VarMask> mask(1, (VarMask{1} << n) - 1);
  std::vector<Monomial> gens;
  std::size_t k = count(rng);
  for (std::size_t g = 0; g < k; ++g) gens.push_back(Monomial::from_mask(n, mask(rng)));
  return minimalize(std::move(gens), n);
}

/// Uniformly random labelled graph conditioned on being connected (rejection sampling).
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << pairs) - 1);
  while (true) {
    Graph G = graph_from_mask(n, dist(rng));
    if (G.edge_count() > 0 && G.is_connected()) return G;
  }
}

}  // namespace linpow

#endif  // LINPOW_CORPUS_HPP
