#pragma once

// Finite groups and the multiplier bimonoids built from them: the function
// algebra GF(p)^G, the group algebra GF(p)[G], a bounded search for regular
// partners (t3, t4), and single-entry mutants for negative testing.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbm/braided_context.hpp"
#include "mbm/errors.hpp"
#include "mbm/matrix.hpp"
#include "mbm/structures.hpp"

namespace mbm {

/// A finite group given by its multiplication table on 0..n-1.
class FiniteGroupSpec {
 public:
  using Table = std::vector<std::vector<std::size_t>>;

  /// Validates the group axioms exhaustively; identity and inverses are
  /// recovered from the table.
  explicit FiniteGroupSpec(Table table) : table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0) throw PreconditionError("group table is empty");
    for (const auto& row : table_) {
      if (row.size() != n) throw ShapeError("group table is not square");
      for (std::size_t v : row)
        if (v >= n) throw PreconditionError("group table entry " + std::to_string(v) + " out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw PreconditionError("group table is not associative");
    std::optional<std::size_t> id;
    for (std::size_t e = 0; e < n && !id; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
      if (ok) id = e;
    }
    if (!id) throw PreconditionError("group table has no identity");
    identity_ = *id;
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    for (std::size_t a = 0; a < n; ++a)
      if (inverse_[a] == n) throw PreconditionError("element " + std::to_string(a) + " has no inverse");
  }

  static FiniteGroupSpec trivial() { return cyclic(1); }

  static FiniteGroupSpec cyclic(std::size_t n) {
    Table t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroupSpec(std::move(t));
  }

  /// Z/2 x Z/2 with elements encoded as two bits.
  static FiniteGroupSpec klein() {
    Table t(4, std::vector<std::size_t>(4));
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
    return FiniteGroupSpec(std::move(t));
  }

  /// Permutations of {0,1,2} in lexicographic order; (a*b)(k) = a(b(k)).
  static FiniteGroupSpec symmetric3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    Table t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b) {
        std::array<int, 3> ab{};
        for (int k = 0; k < 3; ++k) ab[k] = perms[a][perms[b][k]];
        t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
      }
    return FiniteGroupSpec(std::move(t));
  }

  /// "trivial", "z<n>" (cyclic of order n), "v4" (Klein) or "s3".
  static std::optional<FiniteGroupSpec> by_name(const std::string& name) {
    if (name == "trivial") return trivial();
    if (name == "v4") return klein();
    if (name == "s3") return symmetric3();
    if (name.size() >= 2 && name[0] == 'z' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
      const std::size_t n = std::stoul(name.substr(1));
      if (n >= 1 && n <= 64) return cyclic(n);
    }
    return std::nullopt;
  }

  /// Every group of order at most 6 up to isomorphism.
  static std::vector<std::pair<std::string, FiniteGroupSpec>> small_groups() {
    return {{"trivial", trivial()}, {"z2", cyclic(2)}, {"z3", cyclic(3)}, {"z4", cyclic(4)},
            {"v4", klein()},        {"z5", cyclic(5)}, {"z6", cyclic(6)}, {"s3", symmetric3()}};
  }

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const Table& table() const noexcept { return table_; }

 private:
  Table table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// The linear map on A (x) A sending basis vector (u, v) to f(u, v).
inline Mat basis_map(FieldSpec field, std::size_t n,
                     const std::function<std::pair<std::size_t, std::size_t>(std::size_t, std::size_t)>& f) {
  Mat out(field, n * n, n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const auto [x, y] = f(u, v);
      out.add_to(x * n + y, u * n + v, 1);
    }
  return out;
}

/// GF(p)^G: pointwise product on the delta basis, t1(u, v) = (u v^-1, v),
/// t2(u, v) = (u, u^-1 v), e = evaluation at the identity.
inline MultiplierBimonoid function_bimonoid(const FiniteGroupSpec& g, FieldSpec field) {
  const std::size_t n = g.order();
  Mat m(field, n, n * n);
  for (std::size_t u = 0; u < n; ++u) m.set(u, u * n + u, 1);
  Mat e(field, 1, n);
  e.set(0, g.identity(), 1);
  return {Semigroup{n, std::move(m)},
          basis_map(field, n, [&](std::size_t u, std::size_t v) { return std::pair{g.mul(u, g.inverse(v)), v}; }),
          basis_map(field, n, [&](std::size_t u, std::size_t v) { return std::pair{u, g.mul(g.inverse(u), v)}; }),
          std::move(e)};
}

/// GF(p)[G]: convolution, t1(g, h) = (g, gh), t2(g, h) = (gh, h), e = 1 on every basis element.
inline MultiplierBimonoid group_algebra_bimonoid(const FiniteGroupSpec& g, FieldSpec field) {
  const std::size_t n = g.order();
  Mat m(field, n, n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) m.add_to(g.mul(u, v), u * n + v, 1);
  Mat e(field, 1, n);
  for (std::size_t u = 0; u < n; ++u) e.set(0, u, 1);
  return {Semigroup{n, std::move(m)},
          basis_map(field, n, [&](std::size_t u, std::size_t v) { return std::pair{u, g.mul(u, v)}; }),
          basis_map(field, n, [&](std::size_t u, std::size_t v) { return std::pair{g.mul(u, v), v}; }),
          std::move(e)};
}

namespace detail {

using Word = std::function<std::size_t(std::size_t, std::size_t)>;

/// Two-variable group words: u, v, uv, vu, u^-1 v, u v^-1, v^-1 u, v u^-1, u^-1, v^-1.
inline std::vector<Word> group_words(const FiniteGroupSpec& g) {
  return {
      [](std::size_t u, std::size_t) { return u; },
      [](std::size_t, std::size_t v) { return v; },
      [&g](std::size_t u, std::size_t v) { return g.mul(u, v); },
      [&g](std::size_t u, std::size_t v) { return g.mul(v, u); },
      [&g](std::size_t u, std::size_t v) { return g.mul(g.inverse(u), v); },
      [&g](std::size_t u, std::size_t v) { return g.mul(u, g.inverse(v)); },
      [&g](std::size_t u, std::size_t v) { return g.mul(g.inverse(v), u); },
      [&g](std::size_t u, std::size_t v) { return g.mul(v, g.inverse(u)); },
      [&g](std::size_t u, std::size_t) { return g.inverse(u); },
      [&g](std::size_t, std::size_t v) { return g.inverse(v); },
  };
}

}  // namespace detail

/// Bounded search for (t3, t4) completing b to a regular multiplier bimonoid
/// with e' = e. Tries (t1, t2) and its conjugate by the braiding first; with
/// a group at hand it then tries every basis map (u, v) -> (w1, w2) for
/// group words w1, w2, keeping only candidates that are already counital
/// fusion morphisms with the right diagonal. Returns nullopt if nothing fits.
inline std::optional<RegularMultiplierBimonoid> regular_extension(const BraidedContext& ctx, const MultiplierBimonoid& b,
                                                                  const FiniteGroupSpec* group = nullptr) {
  const std::size_t n = b.dim();
  const Mat c = ctx.braiding(n, n), ci = ctx.braiding_inv(n, n);
  auto accept = [&](const Mat& t3, const Mat& t4) -> std::optional<RegularMultiplierBimonoid> {
    RegularMultiplierBimonoid r{b, t3, t4, b.e};
    if (check_regular(ctx, r).ok()) return r;
    return std::nullopt;
  };
  if (auto r = accept(b.t1, b.t2)) return r;
  if (auto r = accept(compose_chain({c, b.t2, ci}), compose_chain({c, b.t1, ci}))) return r;
  if (!group || group->order() != n) return std::nullopt;

  const BraidedContext bar = ctx.bar();
  const Mat diagonal = twisted(ctx, b.semigroup).m;
  const Mat one = ctx.id(n);
  std::vector<Mat> t3s, t4s;
  const auto words = detail::group_words(*group);
  for (const auto& w1 : words)
    for (const auto& w2 : words) {
      const Mat t = basis_map(b.field(), n, [&](std::size_t u, std::size_t v) { return std::pair{w1(u, v), w2(u, v)}; });
      if (compose(bar.tensor(b.e, one), t) == diagonal && check_fusion(bar, {n, t, b.e}).ok()) t3s.push_back(t);
      if (compose(bar.tensor(one, b.e), t) == diagonal && check_fusion(bar.rev(), {n, t, b.e}).ok()) t4s.push_back(t);
    }
  for (const auto& t3 : t3s)
    for (const auto& t4 : t4s)
      if (auto r = accept(t3, t4)) return r;
  return std::nullopt;
}

inline std::optional<RegularMultiplierBimonoid> regular_extension(const MultiplierBimonoid& b,
                                                                  const FiniteGroupSpec* group = nullptr) {
  return regular_extension(BraidedContext::symmetric(b.field()), b, group);
}

enum class StructureField { m, t1, t2, e, t3, t4, e_prime };

inline std::string to_string(StructureField f) {
  switch (f) {
    case StructureField::m: return "m";
    case StructureField::t1: return "t1";
    case StructureField::t2: return "t2";
    case StructureField::e: return "e";
    case StructureField::t3: return "t3";
    case StructureField::t4: return "t4";
    case StructureField::e_prime: return "e_prime";
  }
  return "?";
}

/// One matrix entry of one structure map.
struct Site {
  StructureField field;
  std::size_t row;
  std::size_t col;
};

namespace detail {

inline Mat& field_ref(MultiplierBimonoid& b, StructureField f) {
  switch (f) {
    case StructureField::m: return b.semigroup.m;
    case StructureField::t1: return b.t1;
    case StructureField::t2: return b.t2;
    case StructureField::e: return b.e;
    default: throw PreconditionError("field " + to_string(f) + " is not part of a multiplier bimonoid");
  }
}

inline Mat& field_ref(RegularMultiplierBimonoid& r, StructureField f) {
  switch (f) {
    case StructureField::t3: return r.t3;
    case StructureField::t4: return r.t4;
    case StructureField::e_prime: return r.e_prime;
    default: return field_ref(r.bimonoid, f);
  }
}

inline void bump(Mat& m, const Site& s) {
  if (s.row >= m.rows() || s.col >= m.cols())
    throw std::out_of_range("site (" + std::to_string(s.row) + "," + std::to_string(s.col) + ") outside " +
                            to_string(s.field) + " of shape " + m.shape());
  m.add_to(s.row, s.col, 1);
}

inline void sites_of(std::vector<Site>& out, StructureField f, const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back({f, i, j});
}

}  // namespace detail

/// The structure with one entry increased by 1 mod p.
inline MultiplierBimonoid mutate(MultiplierBimonoid b, const Site& s) {
  detail::bump(detail::field_ref(b, s.field), s);
  return b;
}

inline RegularMultiplierBimonoid mutate(RegularMultiplierBimonoid r, const Site& s) {
  detail::bump(detail::field_ref(r, s.field), s);
  return r;
}

/// Every entry of m, t1, t2 and e.
inline std::vector<Site> all_sites(const MultiplierBimonoid& b) {
  std::vector<Site> out;
  detail::sites_of(out, StructureField::m, b.semigroup.m);
  detail::sites_of(out, StructureField::t1, b.t1);
  detail::sites_of(out, StructureField::t2, b.t2);
  detail::sites_of(out, StructureField::e, b.e);
  return out;
}

inline std::vector<Site> all_sites(const RegularMultiplierBimonoid& r) {
  std::vector<Site> out = all_sites(r.bimonoid);
  detail::sites_of(out, StructureField::t3, r.t3);
  detail::sites_of(out, StructureField::t4, r.t4);
  detail::sites_of(out, StructureField::e_prime, r.e_prime);
  return out;
}

}  // namespace mbm
