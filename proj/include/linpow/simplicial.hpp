#ifndef LINPOW_SIMPLICIAL_HPP
#define LINPOW_SIMPLICIAL_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"
#include "linalg.hpp"
#include "monomial.hpp"

namespace linpow {

/// Lex order on vertex sets of equal size (smallest differing vertex decides).
inline bool face_lex_less(VarMask a, VarMask b) {
  VarMask diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

/// Faces grouped by vertex count; by_size[s] holds the s-vertex faces in lex order.
struct FaceLevels {
  std::vector<std::vector<VarMask>> by_size;

  std::size_t face_count() const {
    std::size_t c = 0;
    for (const auto& l : by_size) c += l.size();
    return c;
  }
  bool is_void() const { return by_size.empty() || by_size[0].empty(); }
};

/// Reduced homology dimensions; dims[k] is dim H~_{k-1}.
struct ReducedHomology {
  std::vector<std::size_t> dims;

  std::size_t at(int i) const {
    if (i < -1) return 0;
    auto k = static_cast<std::size_t>(i + 1);
    return k < dims.size() ? dims[k] : 0;
  }
  bool is_acyclic() const {
    return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
  }
};

/// Reduced simplicial homology from the face poset by boundary-matrix ranks.
/// Ranks are computed top-down so that pivot rows of the higher boundary
/// clear the matching columns of the lower one.
inline ReducedHomology reduced_homology(const FaceLevels& faces, FieldSpec K) {
  ReducedHomology out;
  if (faces.is_void()) return out;
  const std::size_t top = faces.by_size.size() - 1;
  std::vector<std::size_t> rank(top + 2, 0);
  std::vector<bool> cleared;
  for (std::size_t s = top; s >= 1; --s) {
    const auto& cols_faces = faces.by_size[s];
    const auto& rows_faces = faces.by_size[s - 1];
    std::vector<SparseColumn> cols;
    cols.reserve(cols_faces.size());
    for (VarMask f : cols_faces) {
      SparseColumn col;
      col.reserve(s);
      VarMask rest = f;
      int pos = 0;
      while (rest) {
        VarMask low = rest & (~rest + 1);
        rest ^= low;
        VarMask facet = f ^ low;
        auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), facet, face_lex_less);
        if (it == rows_faces.end() || *it != facet) throw std::logic_error("face poset is not closed under subsets");
        col.push_back({static_cast<std::uint32_t>(it - rows_faces.begin()), (pos % 2 == 0) ? 1 : -1});
        ++pos;
      }
      std::sort(col.begin(), col.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.row < b.row; });
      cols.push_back(std::move(col));
    }
    auto red = reduce_columns(cols, rows_faces.size(), K, cleared);
    rank[s] = red.rank;
    cleared.assign(rows_faces.size(), false);
    for (auto r : red.pivot_rows) cleared[r] = true;
  }
  out.dims.resize(top + 1);
  for (std::size_t s = 0; s <= top; ++s) out.dims[s] = faces.by_size[s].size() - rank[s] - rank[s + 1];
  while (!out.dims.empty() && out.dims.back() == 0 && out.dims.size() > 1) out.dims.pop_back();
  return out;
}

/// A simplicial complex on vertices 0..n-1 given by its facets.
///
/// The void complex has no facets; the complex {∅} has the single empty facet.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  SimplicialComplex(std::size_t n, std::vector<VarMask> facets) : n_(n) {
    if (n > kMaxMaskVars) throw std::length_error("too many vertices");
    VarMask all = n == kMaxMaskVars ? ~VarMask{0} : (VarMask{1} << n) - 1;
    for (auto f : facets)
      if ((f & ~all) != 0) throw std::out_of_range("facet uses a vertex outside the vertex set");
    std::sort(facets.begin(), facets.end(), [](VarMask a, VarMask b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa > pb : face_lex_less(a, b);
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (auto f : facets) {
      bool inside = std::any_of(facets_.begin(), facets_.end(), [f](VarMask g) { return (f & ~g) == 0; });
      if (!inside) facets_.push_back(f);
    }
    std::sort(facets_.begin(), facets_.end(), [](VarMask a, VarMask b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : face_lex_less(a, b);
    });
  }

  static SimplicialComplex void_complex(std::size_t n) { return SimplicialComplex(n, {}); }

  std::size_t vertex_count() const { return n_; }
  const std::vector<VarMask>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }

  /// -1 for {∅}; the void complex reports -2.
  int dimension() const {
    int d = -2;
    for (auto f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
  }

  bool is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [this](VarMask f) { return std::popcount(f) == std::popcount(facets_.front()); });
  }

  bool contains(VarMask face) const {
    return std::any_of(facets_.begin(), facets_.end(), [face](VarMask f) { return (face & ~f) == 0; });
  }

  FaceLevels face_levels() const {
    FaceLevels out;
    if (facets_.empty()) return out;
    std::vector<VarMask> all;
    for (auto f : facets_) {
      VarMask sub = f;
      while (true) {
        all.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & f;
      }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    int top = dimension() + 1;
    out.by_size.resize(static_cast<std::size_t>(top) + 1);
    for (auto f : all) out.by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    for (auto& l : out.by_size) std::sort(l.begin(), l.end(), face_lex_less);
    return out;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<VarMask> facets_;
};

namespace detail {

inline std::vector<VarMask> squarefree_masks(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw std::invalid_argument("ideal is not squarefree");
  std::vector<VarMask> out;
  out.reserve(I.size());
  for (const auto& u : I.generators()) out.push_back(u.support_mask());
  return out;
}

}  // namespace detail

/// Stanley-Reisner complex: the faces are the sets F with x_F outside I.
inline SimplicialComplex complex_from_ideal(const MonomialIdeal& I) {
  if (I.is_unit()) throw std::invalid_argument("the unit ideal has no Stanley-Reisner complex");
  const std::size_t n = I.ambient();
  if (n > 30) throw std::length_error("too many variables for face enumeration");
  auto gens = detail::squarefree_masks(I);
  // grow faces level by level; a face is maximal when no vertex extends it
  std::vector<VarMask> level{0}, facets;
  while (!level.empty()) {
    std::vector<VarMask> next;
    for (VarMask f : level) {
      bool maximal = true;
      for (std::size_t v = 0; v < n; ++v) {
        VarMask bit = VarMask{1} << v;
        if (f & bit) continue;
        VarMask g = f | bit;
        bool face = std::none_of(gens.begin(), gens.end(), [g](VarMask u) { return (u & ~g) == 0; });
        if (!face) continue;
        maximal = false;
        if (bit > f) next.push_back(g);  // generated once, from the face without its top vertex
      }
      if (maximal) facets.push_back(f);
    }
    level = std::move(next);
  }
  return SimplicialComplex(n, std::move(facets));
}

inline SimplicialComplex restrict_complex(const SimplicialComplex& D, VarMask W) {
  if (D.is_void()) return D;
  std::vector<VarMask> facets;
  for (auto f : D.facets()) facets.push_back(f & W);
  return SimplicialComplex(D.vertex_count(), std::move(facets));
}

inline SimplicialComplex link_of(const SimplicialComplex& D, VarMask face) {
  if (!D.contains(face)) throw std::invalid_argument("link of a set that is not a face");
  std::vector<VarMask> facets;
  for (auto f : D.facets())
    if ((face & ~f) == 0) facets.push_back(f & ~face);
  return SimplicialComplex(D.vertex_count(), std::move(facets));
}

inline ReducedHomology homology_dims(const SimplicialComplex& D, FieldSpec K) {
  return reduced_homology(D.face_levels(), K);
}

/// I^∨, generated by x_{[n] \ F} over the facets F of the complex of I.
inline MonomialIdeal alexander_dual(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit()) throw std::invalid_argument("Alexander dual needs a proper nonzero ideal");
  const std::size_t n = I.ambient();
  auto D = complex_from_ideal(I);
  VarMask all = (VarMask{1} << n) - 1;
  std::vector<Monomial> gens;
  for (auto f : D.facets()) gens.push_back(Monomial::from_mask(n, all & ~f));
  return minimalize(std::move(gens), n);
}

/// Ideal generated by x_F over the given faces (facet ideal style helper).
inline MonomialIdeal ideal_of_faces(std::size_t n, const std::vector<VarMask>& faces) {
  std::vector<Monomial> gens;
  for (auto f : faces) gens.push_back(Monomial::from_mask(n, f));
  return minimalize(std::move(gens), n);
}

/// Complex text format: one facet per line, comma-separated 1-based vertices.
/// An empty line inside the body is the empty facet only when written as `{}`.
inline SimplicialComplex parse_complex(std::istream& in, std::size_t min_vertices = 0) {
  std::vector<VarMask> facets;
  std::size_t n = min_vertices;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = detail::trim(view);
    if (view.empty()) continue;
    VarMask f = 0;
    if (view != "{}") {
      std::size_t start = 0;
      while (start <= view.size()) {
        std::size_t stop = view.find(',', start);
        if (stop == std::string_view::npos) stop = view.size();
        std::size_t v = detail::parse_uint(detail::trim(view.substr(start, stop - start)), "facet");
        if (v == 0 || v > kMaxMaskVars) throw std::invalid_argument("vertex index out of range");
        f |= VarMask{1} << (v - 1);
        n = std::max(n, v);
        start = stop + 1;
      }
    }
    facets.push_back(f);
  }
  return SimplicialComplex(n, std::move(facets));
}

inline void write_complex(std::ostream& os, const SimplicialComplex& D) {
  for (auto f : D.facets()) {
    if (f == 0) {
      os << "{}\n";
      continue;
    }
    bool first = true;
    for (std::size_t v = 0; v < D.vertex_count(); ++v)
      if (f >> v & 1U) {
        os << (first ? "" : ",") << v + 1;
        first = false;
      }
    os << '\n';
  }
}

}  // namespace linpow

#endif  // LINPOW_SIMPLICIAL_HPP
