#pragma once

// Test helpers: seeded random generators and independent reference
// computations that do not go through the library's own algorithms.

#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mbm/generators.hpp"
#include "mbm/matrix.hpp"
#include "mbm/mcat.hpp"
#include "mbm/simplicial_models.hpp"
#include "mbm/structures.hpp"

namespace mbm::oracle {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240917u);
  return gen;
}

inline Mat random_mat(FieldSpec f, std::size_t rows, std::size_t cols, std::mt19937& gen = rng()) {
  std::uniform_int_distribution<Scalar> d(0, f.p() - 1);
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, d(gen));
  return m;
}

inline std::size_t random_dim(std::size_t lo, std::size_t hi, std::mt19937& gen = rng()) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(gen);
}

/// Plain triple loop, no shortcuts.
inline Mat naive_product(const Mat& g, const Mat& f) {
  const FieldSpec fs = g.field();
  Mat out(fs, g.rows(), f.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      unsigned long long acc = 0;
      for (std::size_t k = 0; k < g.cols(); ++k) acc += static_cast<unsigned long long>(g(i, k)) * f(k, j);
      out.set(i, j, static_cast<Scalar>(acc % fs.p()));
    }
  return out;
}

/// Calls visit on every vector of length n over GF(p).
inline void for_each_vector(std::size_t n, std::uint32_t p, const std::function<void(const std::vector<Scalar>&)>& visit) {
  std::vector<Scalar> v(n, 0);
  while (true) {
    visit(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) return;
  }
}

/// Rank as the largest set of rows with no non-trivial vanishing combination.
inline std::size_t brute_force_rank(const Mat& m) {
  const std::size_t r = m.rows();
  const std::uint32_t p = m.field().p();
  std::size_t best = 0;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (1u << i)) rows.push_back(i);
    if (rows.size() <= best) continue;
    bool independent = true;
    for_each_vector(rows.size(), p, [&](const std::vector<Scalar>& c) {
      if (!independent) return;
      bool nonzero = false;
      for (Scalar x : c) nonzero |= x != 0;
      if (!nonzero) return;
      bool vanishes = true;
      for (std::size_t j = 0; j < m.cols() && vanishes; ++j) {
        unsigned long long acc = 0;
        for (std::size_t k = 0; k < rows.size(); ++k) acc += static_cast<unsigned long long>(c[k]) * m(rows[k], j);
        vanishes = acc % p == 0;
      }
      if (vanishes) independent = false;
    });
    if (independent) best = rows.size();
  }
  return best;
}

/// The linear map on the basis of A (x) A given by (u, v) |-> (x, y).
inline Mat permutation_on_pairs(FieldSpec f, std::size_t n, const std::function<std::pair<std::size_t, std::size_t>(std::size_t, std::size_t)>& g) {
  Mat out(f, n * n, n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      auto [x, y] = g(u, v);
      out.add_to(x * n + y, u * n + v, 1);
    }
  return out;
}

/// GF(2)^{Z/2} written out by hand: pointwise m, t1(u, v) = (u+v, v),
/// t2(u, v) = (u, u+v), e = delta at 0.
inline MultiplierBimonoid z2_function_by_hand() {
  const FieldSpec f(2);
  Mat m(f, {{1, 0, 0, 0}, {0, 0, 0, 1}});
  Mat t1(f, {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}});
  Mat t2(f, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  Mat e(f, {{1, 0}});
  return {Semigroup{2, m}, t1, t2, e};
}

struct CorpusEntry {
  std::string name;
  FiniteGroupSpec group;
  MultiplierBimonoid b;
};

/// Function and group algebras of every group of order at most 6 over each prime.
inline std::vector<CorpusEntry> corpus(std::initializer_list<std::uint32_t> primes) {
  std::vector<CorpusEntry> out;
  for (std::uint32_t p : primes)
    for (const auto& [name, g] : FiniteGroupSpec::small_groups()) {
      const std::string suffix = " p=" + std::to_string(p);
      out.push_back({"fun " + name + suffix, g, function_bimonoid(g, FieldSpec(p))});
      out.push_back({"group " + name + suffix, g, group_algebra_bimonoid(g, FieldSpec(p))});
    }
  return out;
}

inline SimplicialMapC m1_candidate(const BraidedContext& ctx, const Semigroup& s, const Mat& t, const Mat& e) {
  return fusion_to_map(ctx, s, {s.dim, t, e});
}

inline SimplicialMapC m2_candidate(const BraidedContext& ctx, const Semigroup& s, const Mat& t, const Mat& e) {
  const Semigroup unit = Semigroup::unit(s.field());
  SimplicialMapC out{Target::M2, ctx, s, {s, s, s, {}, {}, {}, {}}, {unit, s, unit, {}, {}, {}, {}}};
  out.tau.psi = t;
  out.eps.psi = e;
  return out;
}

/// The direct suite for a semigroup with a counital fusion morphism in k.
inline bool fusion_suite(const BraidedContext& k, const Semigroup& s, const Mat& t, const Mat& e) {
  return check_fusion(k, {s.dim, t, e}).ok() && check_fusion_compatibility(k, s, {s.dim, t, e}).ok();
}

struct NerveSweep {
  std::size_t simplices = 0;   // valid M12 2-simplices lying in Q
  std::size_t collisions = 0;  // pairs sent to the same morphism
};

/// Every M12 2-simplex over GF(2) whose faces are I or a dim-2 corpus
/// semigroup, found by trying all 0/1 matrices for each component.
inline NerveSweep nerve_sweep_gf2() {
  const FieldSpec f(2);
  const auto ctx = BraidedContext::symmetric(f);
  const Semigroup unit = Semigroup::unit(f);
  auto all = [&](std::size_t rows, std::size_t cols) {
    std::vector<Mat> out;
    const std::size_t k = rows * cols;
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
      Mat m(f, rows, cols);
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1u) m.set(i / cols, i % cols, 1);
      out.push_back(std::move(m));
    }
    return out;
  };
  NerveSweep sweep;
  for (const auto& a : {function_bimonoid(FiniteGroupSpec::cyclic(2), f).semigroup,
                        group_algebra_bimonoid(FiniteGroupSpec::cyclic(2), f).semigroup}) {
    for (int mask = 0; mask < 8; ++mask) {
      const Semigroup a12 = mask & 1 ? a : unit, a02 = mask & 2 ? a : unit, a01 = mask & 4 ? a : unit;
      auto valid = [&](Component c, const Mat& data) {
        TwoSimplex x{a12, a02, a01, {}, {}, {}, {}};
        x.slot(c) = data;
        return validate_2simplex(c == Component::M1 ? Target::M1 : Target::M2, ctx, x).ok();
      };
      std::vector<Mat> phis, psis;
      for (auto& m : all(a01.dim * a12.dim, a02.dim * a12.dim))
        if (valid(Component::M1, m)) phis.push_back(std::move(m));
      for (auto& m : all(a12.dim * a01.dim, a02.dim * a01.dim))
        if (valid(Component::M2, m)) psis.push_back(std::move(m));
      std::map<std::vector<Scalar>, int> seen;
      for (const auto& phi : phis)
        for (const auto& psi : psis) {
          const TwoSimplex x{a12, a02, a01, phi, psi, {}, {}};
          if (!validate_2simplex(Target::M12, ctx, x).ok() || !q_membership(x).ok()) continue;
          const MMorphism w = nerve_map(x);
          std::vector<Scalar> key = w.f1.entries();
          key.insert(key.end(), w.f2.entries().begin(), w.f2.entries().end());
          ++sweep.simplices;
          if (!seen.emplace(std::move(key), 0).second) ++sweep.collisions;
        }
    }
  }
  return sweep;
}

}  // namespace mbm::oracle
