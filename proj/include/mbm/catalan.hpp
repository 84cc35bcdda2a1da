#pragma once

// The Catalan simplicial set C, stored 2-coskeletally: an n-simplex is a
// labeling of the edges (i<j) of the n-simplex by DEG or ALPHA such that each
// triangle (i<j<k) has one of the five admissible boundaries. Triangle labels
// are kept alongside the edges so callers can read them directly.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbm/errors.hpp"

namespace mbm {

enum class CEdge { DEG, ALPHA };
enum class CTriangle { S0S0, S0A, S1A, TAU, EPS };

struct TriangleBoundary {
  CEdge d0, d1, d2;
  friend bool operator==(const TriangleBoundary&, const TriangleBoundary&) = default;
};

inline TriangleBoundary boundary(CTriangle t) {
  using enum CEdge;
  switch (t) {
    case CTriangle::S0S0: return {DEG, DEG, DEG};
    case CTriangle::S0A: return {ALPHA, ALPHA, DEG};
    case CTriangle::S1A: return {DEG, ALPHA, ALPHA};
    case CTriangle::TAU: return {ALPHA, ALPHA, ALPHA};
    case CTriangle::EPS: return {DEG, ALPHA, DEG};
  }
  throw std::logic_error("unknown triangle");
}

/// The triangle with the given boundary, if any. Exactly the boundaries with
/// d1 = DEG and some other edge ALPHA are missing.
inline std::optional<CTriangle> triangle_with_boundary(CEdge d0, CEdge d1, CEdge d2) {
  for (CTriangle t : {CTriangle::S0S0, CTriangle::S0A, CTriangle::S1A, CTriangle::TAU, CTriangle::EPS})
    if (boundary(t) == TriangleBoundary{d0, d1, d2}) return t;
  return std::nullopt;
}

inline std::string to_string(CEdge e) { return e == CEdge::DEG ? "s0(*)" : "alpha"; }

inline std::string to_string(CTriangle t) {
  switch (t) {
    case CTriangle::S0S0: return "s0(s0(*))";
    case CTriangle::S0A: return "s0(alpha)";
    case CTriangle::S1A: return "s1(alpha)";
    case CTriangle::TAU: return "tau";
    case CTriangle::EPS: return "eps";
  }
  throw std::logic_error("unknown triangle");
}

class CatalanSimplex {
 public:
  /// Builds a simplex from its edge labels, listed for pairs (i<j) in
  /// lexicographic order. Throws PreconditionError if a triangle is inadmissible.
  CatalanSimplex(std::size_t n, std::vector<CEdge> edges) : n_(n), edges_(std::move(edges)) {
    if (edges_.size() != pair_count(n)) throw ShapeError("wrong number of edge labels for a " + std::to_string(n) + "-simplex");
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        for (std::size_t k = j + 1; k <= n; ++k) {
          auto t = triangle_with_boundary(edge(j, k), edge(i, k), edge(i, j));
          if (!t) throw PreconditionError("inadmissible triangle (" + std::to_string(i) + "," + std::to_string(j) +
                                          "," + std::to_string(k) + ")");
          triangles_.push_back(*t);
        }
  }

  static CatalanSimplex vertex() { return CatalanSimplex(0, {}); }
  static CatalanSimplex of_edge(CEdge e) { return CatalanSimplex(1, {e}); }
  /// The 2-simplex carrying triangle label t.
  static CatalanSimplex of_triangle(CTriangle t) {
    const auto b = boundary(t);
    return CatalanSimplex(2, {b.d2, b.d1, b.d0});
  }

  std::size_t dim() const noexcept { return n_; }

  CEdge edge(std::size_t i, std::size_t j) const {
    if (!(i < j && j <= n_)) throw std::out_of_range("edge index");
    return edges_[pair_index(i, j)];
  }

  CTriangle triangle(std::size_t i, std::size_t j, std::size_t k) const {
    if (!(i < j && j < k && k <= n_)) throw std::out_of_range("triangle index");
    std::size_t idx = 0;
    for (std::size_t a = 0; a <= n_; ++a)
      for (std::size_t b = a + 1; b <= n_; ++b)
        for (std::size_t c = b + 1; c <= n_; ++c, ++idx)
          if (a == i && b == j && c == k) return triangles_[idx];
    throw std::logic_error("unreachable");
  }

  const std::vector<CEdge>& edges() const noexcept { return edges_; }
  const std::vector<CTriangle>& triangles() const noexcept { return triangles_; }

  /// The simplex spanned by an increasing list of vertices.
  CatalanSimplex restrict_to(const std::vector<std::size_t>& vertices) const {
    if (vertices.empty()) throw PreconditionError("restriction to no vertices");
    for (std::size_t a = 0; a < vertices.size(); ++a) {
      if (vertices[a] > n_ || (a > 0 && vertices[a - 1] >= vertices[a]))
        throw std::out_of_range("vertex list must be increasing and within range");
    }
    std::vector<CEdge> out;
    for (std::size_t a = 0; a < vertices.size(); ++a)
      for (std::size_t b = a + 1; b < vertices.size(); ++b) out.push_back(edge(vertices[a], vertices[b]));
    return CatalanSimplex(vertices.size() - 1, std::move(out));
  }

  friend bool operator==(const CatalanSimplex& x, const CatalanSimplex& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }
  friend bool operator<(const CatalanSimplex& x, const CatalanSimplex& y) {
    if (x.n_ != y.n_) return x.n_ < y.n_;
    return x.edges_ < y.edges_;
  }

  static std::size_t pair_count(std::size_t n) { return n * (n + 1) / 2; }

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const {
    // Pairs (a<b) with a < i come first: each contributes n - a of them.
    std::size_t idx = 0;
    for (std::size_t a = 0; a < i; ++a) idx += n_ - a;
    return idx + (j - i - 1);
  }

  std::size_t n_;
  std::vector<CEdge> edges_;
  std::vector<CTriangle> triangles_;
};

/// d_i: delete vertex i.
inline CatalanSimplex face(std::size_t i, const CatalanSimplex& x) {
  const std::size_t n = x.dim();
  if (n == 0 || i > n) throw std::out_of_range("face index " + std::to_string(i) + " on a " + std::to_string(n) + "-simplex");
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v <= n; ++v)
    if (v != i) keep.push_back(v);
  return x.restrict_to(keep);
}

/// s_i: repeat vertex i. The edge joining the two copies is DEG; every other
/// edge is pulled back along the collapse map.
inline CatalanSimplex degeneracy(std::size_t i, const CatalanSimplex& x) {
  const std::size_t n = x.dim();
  if (i > n) throw std::out_of_range("degeneracy index " + std::to_string(i) + " on a " + std::to_string(n) + "-simplex");
  auto collapse = [i](std::size_t v) { return v <= i ? v : v - 1; };
  std::vector<CEdge> edges;
  for (std::size_t a = 0; a <= n + 1; ++a)
    for (std::size_t b = a + 1; b <= n + 1; ++b) {
      const std::size_t ca = collapse(a), cb = collapse(b);
      edges.push_back(ca == cb ? CEdge::DEG : x.edge(ca, cb));
    }
  return CatalanSimplex(n + 1, std::move(edges));
}

/// All n-simplices in lexicographic order of their edge labels (DEG < ALPHA).
inline std::vector<CatalanSimplex> enumerate(std::size_t n) {
  const std::size_t pairs = CatalanSimplex::pair_count(n);
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) order.emplace_back(i, j);

  std::vector<CatalanSimplex> out;
  std::vector<CEdge> labels(pairs, CEdge::DEG);
  std::vector<std::vector<CEdge>> lookup(n + 1, std::vector<CEdge>(n + 1, CEdge::DEG));

  // Assigning (j,k) completes exactly the triangles (i,j,k) with i < j.
  auto consistent = [&](std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < j; ++i)
      if (!triangle_with_boundary(lookup[j][k], lookup[i][k], lookup[i][j])) return false;
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == pairs) {
      out.emplace_back(n, labels);
      return;
    }
    const auto [j, k] = order[pos];
    for (CEdge e : {CEdge::DEG, CEdge::ALPHA}) {
      labels[pos] = e;
      lookup[j][k] = e;
      if (consistent(j, k)) self(self, pos + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

inline bool is_degenerate(const CatalanSimplex& x) {
  for (std::size_t i = 0; i < x.dim(); ++i)
    if (degeneracy(i, face(i, x)) == x) return true;
  return false;
}

inline std::vector<CatalanSimplex> nondegenerate_cells(std::size_t n) {
  std::vector<CatalanSimplex> out;
  for (auto& x : enumerate(n))
    if (!is_degenerate(x)) out.push_back(std::move(x));
  return out;
}

/// Display name: "*", "alpha", "tau", "eps", "phi", "lambda", "rho", "kappa",
/// degenerate simplices as s_i(...) with the smallest possible i, and higher
/// non-degenerate simplices by their tuple of faces.
inline std::string name(const CatalanSimplex& x) {
  const std::size_t n = x.dim();
  if (n == 0) return "*";
  for (std::size_t i = 0; i < n; ++i) {
    const auto f = face(i, x);
    if (degeneracy(i, f) == x) return "s" + std::to_string(i) + "(" + name(f) + ")";
  }
  if (n == 1) return "alpha";
  if (n == 2) return x.triangles().front() == CTriangle::TAU ? "tau" : "eps";
  std::vector<std::string> faces;
  for (std::size_t i = 0; i <= n; ++i) faces.push_back(name(face(i, x)));
  if (n == 3) {
    static const std::map<std::vector<std::string>, std::string> named = {
        {{"tau", "tau", "tau", "tau"}, "phi"},
        {{"eps", "s1(alpha)", "tau", "s1(alpha)"}, "lambda"},
        {{"s0(alpha)", "tau", "s0(alpha)", "eps"}, "rho"},
        {{"eps", "s1(alpha)", "s0(alpha)", "eps"}, "kappa"},
    };
    if (auto it = named.find(faces); it != named.end()) return it->second;
  }
  std::string out = "(";
  for (std::size_t i = 0; i < faces.size(); ++i) out += (i ? ", " : "") + faces[i];
  return out + ")";
}

/// "(d0, d1, ..., dn)" using face names; "()" for the vertex.
inline std::string face_tuple(const CatalanSimplex& x) {
  std::string out = "(";
  if (x.dim() > 0)
    for (std::size_t i = 0; i <= x.dim(); ++i) out += (i ? ", " : "") + name(face(i, x));
  return out + ")";
}

/// One of the non-degenerate 3-simplices phi, lambda, rho, kappa by name.
inline CatalanSimplex named_3cell(const std::string& which) {
  for (auto& x : nondegenerate_cells(3))
    if (name(x) == which) return x;
  throw PreconditionError("no 3-cell named " + which);
}

}  // namespace mbm
