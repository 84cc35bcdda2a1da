#pragma once

// Semigroups, counital fusion morphisms, multiplier bimonoids and regular
// multiplier bimonoids on one object A, with their diagram suites.
//
// Notation in comments: juxtaposition is the context's tensor product, "t1"
// means t (x) 1, "1t" means 1 (x) t, c is the braiding on A^2 and composites
// read right to left.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mbm/braided_context.hpp"
#include "mbm/errors.hpp"
#include "mbm/matrix.hpp"
#include "mbm/report.hpp"

namespace mbm {

struct Semigroup {
  std::size_t dim = 0;
  Mat m;  // A^2 -> A

  /// The monoidal unit I as a trivial semigroup.
  static Semigroup unit(FieldSpec f) { return {1, Mat::identity(f, 1)}; }

  FieldSpec field() const { return m.field(); }
  friend bool operator==(const Semigroup&, const Semigroup&) = default;
};

struct CounitalFusion {
  std::size_t dim = 0;
  Mat t;  // A^2 -> A^2
  Mat e;  // A -> I
};

struct MultiplierBimonoid {
  Semigroup semigroup;
  Mat t1;
  Mat t2;
  Mat e;

  std::size_t dim() const { return semigroup.dim; }
  FieldSpec field() const { return semigroup.field(); }
  friend bool operator==(const MultiplierBimonoid&, const MultiplierBimonoid&) = default;
};

struct RegularMultiplierBimonoid {
  MultiplierBimonoid bimonoid;
  Mat t3;
  Mat t4;
  Mat e_prime;

  std::size_t dim() const { return bimonoid.dim(); }
  FieldSpec field() const { return bimonoid.field(); }
  friend bool operator==(const RegularMultiplierBimonoid&, const RegularMultiplierBimonoid&) = default;
};

namespace detail {

inline void require_shape(const Mat& m, std::size_t rows, std::size_t cols, const std::string& name) {
  if (m.rows() != rows || m.cols() != cols) {
    throw ShapeError(name + " has shape " + m.shape() + ", expected " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  }
}

inline void require_semigroup_shape(const Semigroup& s) {
  if (s.dim == 0) throw ShapeError("semigroup of dimension 0");
  require_shape(s.m, s.dim, s.dim * s.dim, "m");
}

inline void require_bimonoid_shape(const MultiplierBimonoid& b) {
  require_semigroup_shape(b.semigroup);
  const std::size_t n = b.dim();
  require_shape(b.t1, n * n, n * n, "t1");
  require_shape(b.t2, n * n, n * n, "t2");
  require_shape(b.e, 1, n, "e");
}

inline void require_regular_shape(const RegularMultiplierBimonoid& r) {
  require_bimonoid_shape(r.bimonoid);
  const std::size_t n = r.dim();
  require_shape(r.t3, n * n, n * n, "t3");
  require_shape(r.t4, n * n, n * n, "t4");
  require_shape(r.e_prime, 1, n, "e_prime");
}

/// Fusion equation for t in ctx:  1t . t1 = t1 . c^-1 1 . 1t . c1 . 1t  on A^3.
inline void add_fusion(Report& r, const std::string& id, const BraidedContext& ctx, std::size_t n, const Mat& t) {
  const Mat one = ctx.id(n);
  const Mat t_1 = ctx.tensor(t, one), one_t = ctx.tensor(one, t);
  const Mat lhs = compose(one_t, t_1);
  const Mat rhs = compose_chain(
      {t_1, ctx.tensor(ctx.braiding_inv(n, n), one), one_t, ctx.tensor(ctx.braiding(n, n), one), one_t});
  r.add_equal(id, lhs, rhs);
}

/// Counit:  1e . t = 1e.
inline void add_counit(Report& r, const std::string& id, const BraidedContext& ctx, std::size_t n, const Mat& t,
                       const Mat& e) {
  const Mat one_e = ctx.tensor(ctx.id(n), e);
  r.add_equal(id, compose(one_e, t), one_e);
}

struct BimonoidNames {
  std::string fusion1, counit1, fusion2, counit2, assoc, mult1, mult2, square, diagonal;
};

inline const BimonoidNames& plain_names() {
  static const BimonoidNames names{"fusion-t1", "counit-t1", "fusion-t2", "counit-t2", "assoc",
                                   "mult-t1",   "mult-t2",   "mbm-1",     "mbm-2"};
  return names;
}

inline const BimonoidNames& bar_names() {
  static const BimonoidNames names{"fusion-t3", "counit-t3", "fusion-t4", "counit-t4", "assoc-bar",
                                   "mult-t3",   "mult-t4",   "mbm-bar-1", "mbm-bar-2"};
  return names;
}

inline Report bimonoid_suite(const BraidedContext& ctx, const Semigroup& s, const Mat& t1, const Mat& t2,
                             const Mat& e, const BimonoidNames& names) {
  const std::size_t n = s.dim;
  const Mat one = ctx.id(n);
  Report r;
  add_fusion(r, names.fusion1, ctx, n, t1);
  add_counit(r, names.counit1, ctx, n, t1, e);
  add_fusion(r, names.fusion2, ctx.rev(), n, t2);
  add_counit(r, names.counit2, ctx.rev(), n, t2, e);
  r.add_equal(names.assoc, compose(s.m, kron(s.m, one)), compose(s.m, kron(one, s.m)));
  r.add_equal(names.mult1, compose(ctx.tensor(e, one), t1), s.m);
  r.add_equal(names.mult2, compose(ctx.tensor(one, e), t2), s.m);
  // 1t1 . t2 1 = t2 1 . 1t1
  r.add_equal(names.square, compose(ctx.tensor(one, t1), ctx.tensor(t2, one)),
              compose(ctx.tensor(t2, one), ctx.tensor(one, t1)));
  // 1e . t2 = e1 . t1
  r.add_equal(names.diagonal, compose(ctx.tensor(one, e), t2), compose(ctx.tensor(e, one), t1));
  return r;
}

}  // namespace detail

/// The multiplication twisted by the inverse braiding of the base category, m . c^-1.
inline Semigroup twisted(const BraidedContext& ctx, const Semigroup& s) {
  return {s.dim, compose(s.m, ctx.base_c_inv(s.dim, s.dim))};
}

inline Report check_semigroup(const Semigroup& s) {
  detail::require_semigroup_shape(s);
  const Mat one = Mat::identity(s.field(), s.dim);
  Report r;
  r.add_equal("assoc", compose(s.m, kron(s.m, one)), compose(s.m, kron(one, s.m)));
  return r;
}

/// Fusion equation and counitality of (t, e) in ctx.
inline Report check_fusion(const BraidedContext& ctx, const CounitalFusion& f) {
  if (f.dim == 0) throw ShapeError("fusion morphism on a zero-dimensional object");
  detail::require_shape(f.t, f.dim * f.dim, f.dim * f.dim, "t");
  detail::require_shape(f.e, 1, f.dim, "e");
  Report r;
  detail::add_fusion(r, "fusion", ctx, f.dim, f.t);
  detail::add_counit(r, "counit", ctx, f.dim, f.t, f.e);
  return r;
}

/// Compatibility of a semigroup with a counital fusion morphism:
///   (a) 1m . t1 = t . 1m
///   (b) t . m1 = m1 . c^-1 1 . 1t . c1 . 1t
///   (c) e . e1 = e . m
///   (d) e1 . t . 1m = m . m1
inline Report check_fusion_compatibility(const BraidedContext& ctx, const Semigroup& s, const CounitalFusion& f) {
  detail::require_semigroup_shape(s);
  if (f.dim != s.dim) throw ShapeError("semigroup and fusion morphism live on different objects");
  detail::require_shape(f.t, f.dim * f.dim, f.dim * f.dim, "t");
  detail::require_shape(f.e, 1, f.dim, "e");
  const std::size_t n = s.dim;
  const Mat one = ctx.id(n);
  const Mat& m = s.m;
  const Mat& t = f.t;
  const Mat& e = f.e;
  Report r;
  r.add_equal("a", compose(ctx.tensor(one, m), ctx.tensor(t, one)), compose(t, ctx.tensor(one, m)));
  r.add_equal("b", compose(t, ctx.tensor(m, one)),
              compose_chain({ctx.tensor(m, one), ctx.tensor(ctx.braiding_inv(n, n), one), ctx.tensor(one, t),
                             ctx.tensor(ctx.braiding(n, n), one), ctx.tensor(one, t)}));
  r.add_equal("c", compose(e, ctx.tensor(e, one)), compose(e, m));
  r.add_equal("d", compose_chain({ctx.tensor(e, one), t, ctx.tensor(one, m)}), compose(m, ctx.tensor(m, one)));
  return r;
}

/// Fusion and counit of t1 in C and of t2 in C^rev, associativity, the
/// identities m = e1.t1 = 1e.t2, and the two compatibility diagrams
/// (mbm-1: 1t1 . t2 1 = t2 1 . 1t1, mbm-2: 1e . t2 = e1 . t1).
inline Report check_multiplier_bimonoid(const BraidedContext& ctx, const MultiplierBimonoid& b) {
  detail::require_bimonoid_shape(b);
  return detail::bimonoid_suite(ctx, b.semigroup, b.t1, b.t2, b.e, detail::plain_names());
}

inline Report check_multiplier_bimonoid(const MultiplierBimonoid& b) {
  return check_multiplier_bimonoid(BraidedContext::symmetric(b.field()), b);
}

/// Everything a regular multiplier bimonoid must satisfy:
///  - (A, m, t1, t2, e) is a multiplier bimonoid in C,
///  - (A, m.c^-1, t3, t4, e') is a multiplier bimonoid in C-bar,
///  - e = e' (counit-eq),
///  - reg-1 .. reg-5:
///      e1 . t1 = e1 . t3 . c
///      1m . c1 . 1t1 = 1m . t3 1 . c1
///      t4 1 . 1t1 = 1t1 . t4 1
///      m1 . 1c . t2 1 = m1 . 1t4 . 1c
///      1t3 . t2 1 = t2 1 . 1t3
/// With strong = true also the fusion-type replacements of reg-2 and reg-4:
///      strong-1: t3 1 . 1t1 . c1 . 1t1 = 1t1 . t3 1 . c1
///      strong-2: 1t4 . t2 1 . 1c . t2 1 = t2 1 . 1t4 . 1c
inline Report check_regular(const BraidedContext& ctx, const RegularMultiplierBimonoid& reg, bool strong = false) {
  detail::require_regular_shape(reg);
  const auto& b = reg.bimonoid;
  const std::size_t n = reg.dim();
  const Mat one = ctx.id(n);
  const Mat c = ctx.braiding(n, n);
  const Mat& m = b.semigroup.m;
  const Mat &t1 = b.t1, &t2 = b.t2, &t3 = reg.t3, &t4 = reg.t4, &e = b.e;
  auto T = [&](const Mat& f, const Mat& g) { return ctx.tensor(f, g); };

  Report r = detail::bimonoid_suite(ctx, b.semigroup, t1, t2, e, detail::plain_names());
  r.append(detail::bimonoid_suite(ctx.bar(), twisted(ctx, b.semigroup), t3, t4, reg.e_prime, detail::bar_names()));
  r.add_equal("counit-eq", reg.e_prime, e);
  r.add_equal("reg-1", compose(T(e, one), t1), compose_chain({T(e, one), t3, c}));
  r.add_equal("reg-2", compose_chain({T(one, m), T(c, one), T(one, t1)}),
              compose_chain({T(one, m), T(t3, one), T(c, one)}));
  r.add_equal("reg-3", compose(T(t4, one), T(one, t1)), compose(T(one, t1), T(t4, one)));
  r.add_equal("reg-4", compose_chain({T(m, one), T(one, c), T(t2, one)}),
              compose_chain({T(m, one), T(one, t4), T(one, c)}));
  r.add_equal("reg-5", compose(T(one, t3), T(t2, one)), compose(T(t2, one), T(one, t3)));
  if (strong) {
    r.add_equal("strong-1", compose_chain({T(t3, one), T(one, t1), T(c, one), T(one, t1)}),
                compose_chain({T(one, t1), T(t3, one), T(c, one)}));
    r.add_equal("strong-2", compose_chain({T(one, t4), T(t2, one), T(one, c), T(t2, one)}),
                compose_chain({T(t2, one), T(one, t4), T(one, c)}));
  }
  return r;
}

inline Report check_regular(const RegularMultiplierBimonoid& reg, bool strong = false) {
  return check_regular(BraidedContext::symmetric(reg.field()), reg, strong);
}

/// The identities (e)..(t) that a simplicial map into the regular model
/// produces on a regular multiplier bimonoid; each is reported on its own.
///   (e) m1 . 1t1 = 1m . t2 1          (f) e = e
///   (g) t2 1 . 1t1 = 1t1 . t2 1       (h) m = 1e . t2       (i) m = e1 . t1
///   (j) 1m . t4 1 = m1 . c^-1 1 . 1t1 (k) m1 . 1t3 = 1m . 1c^-1 . t2 1
///   (l) 1m . c1 . 1t1 = 1m . t3 1 . c1
///   (m) m1 . 1c . t2 1 = m1 . 1t4 . 1c
///   (n) e = e'                        (o) t4 1 . 1t1 = 1t1 . t4 1
///   (p) 1t3 . t2 1 = t2 1 . 1t3       (q) m = e'1 . t1      (r) m = 1e' . t2
///   (s) m.c^-1 = e1 . t3              (t) m.c^-1 = 1e . t4
inline Report check_derived_conditions(const BraidedContext& ctx, const RegularMultiplierBimonoid& reg) {
  detail::require_regular_shape(reg);
  const auto& b = reg.bimonoid;
  const std::size_t n = reg.dim();
  const Mat one = ctx.id(n);
  const Mat c = ctx.braiding(n, n), ci = ctx.braiding_inv(n, n);
  const Mat& m = b.semigroup.m;
  const Mat mt = compose(m, ctx.base_c_inv(n, n));
  const Mat &t1 = b.t1, &t2 = b.t2, &t3 = reg.t3, &t4 = reg.t4, &e = b.e, &ep = reg.e_prime;
  auto T = [&](const Mat& f, const Mat& g) { return ctx.tensor(f, g); };

  Report r;
  r.add_equal("e", compose(T(m, one), T(one, t1)), compose(T(one, m), T(t2, one)));
  r.add_equal("f", e, e);
  r.add_equal("g", compose(T(t2, one), T(one, t1)), compose(T(one, t1), T(t2, one)));
  r.add_equal("h", m, compose(T(one, e), t2));
  r.add_equal("i", m, compose(T(e, one), t1));
  r.add_equal("j", compose(T(one, m), T(t4, one)), compose_chain({T(m, one), T(ci, one), T(one, t1)}));
  r.add_equal("k", compose(T(m, one), T(one, t3)), compose_chain({T(one, m), T(one, ci), T(t2, one)}));
  r.add_equal("l", compose_chain({T(one, m), T(c, one), T(one, t1)}),
              compose_chain({T(one, m), T(t3, one), T(c, one)}));
  r.add_equal("m", compose_chain({T(m, one), T(one, c), T(t2, one)}),
              compose_chain({T(m, one), T(one, t4), T(one, c)}));
  r.add_equal("n", e, ep);
  r.add_equal("o", compose(T(t4, one), T(one, t1)), compose(T(one, t1), T(t4, one)));
  r.add_equal("p", compose(T(one, t3), T(t2, one)), compose(T(t2, one), T(one, t3)));
  r.add_equal("q", m, compose(T(ep, one), t1));
  r.add_equal("r", m, compose(T(one, ep), t2));
  r.add_equal("s", mt, compose(T(e, one), t3));
  r.add_equal("t", mt, compose(T(one, e), t4));
  return r;
}

inline Report check_derived_conditions(const RegularMultiplierBimonoid& reg) {
  return check_derived_conditions(BraidedContext::symmetric(reg.field()), reg);
}

/// Left-multiplication operators a |-> m(a (x) -), stacked as the columns of
/// an n^2 x n matrix; injective iff no nonzero x has x.A = 0.
inline Mat left_regular_representation(const Semigroup& s) {
  const std::size_t n = s.dim;
  Mat out(s.field(), n * n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.set(i * n + j, a, s.m(i, a * n + j));
  return out;
}

inline Mat right_regular_representation(const Semigroup& s) {
  const std::size_t n = s.dim;
  Mat out(s.field(), n * n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.set(i * n + j, a, s.m(i, j * n + a));
  return out;
}

/// Both regular representations injective.
inline bool check_nondegenerate(const Semigroup& s) {
  detail::require_semigroup_shape(s);
  return is_injective(left_regular_representation(s)) && is_injective(right_regular_representation(s));
}

}  // namespace mbm
