#pragma once

// The category M over GF(p)-vector spaces with Q = surjective linear maps.
// Objects are semigroups whose multiplication is non-degenerate and
// surjective. A morphism f : A -/-> B is a pair f1 : AB -> B, f2 : BA -> B of
// surjections with
//   sq1: f1 . 1f1 = f1 . mA 1      on AAB
//   sq2: mB . 1f1 = mB . f2 1      on BAB
//   sq3: f2 . f2 1 = f2 . 1mA      on BAA
// Composites are obtained by solving against the surjections 1g1 and g2 1.
// Everything here uses the symmetric flip braiding.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mbm/errors.hpp"
#include "mbm/matrix.hpp"
#include "mbm/report.hpp"
#include "mbm/simplicial_models.hpp"
#include "mbm/structures.hpp"

namespace mbm {

struct MMorphism {
  Semigroup source;
  Semigroup target;
  Mat f1;  // source (x) target -> target
  Mat f2;  // target (x) source -> target

  friend bool operator==(const MMorphism&, const MMorphism&) = default;
};

/// Membership of a semigroup in M: non-degenerate and surjective multiplication.
inline Report check_mobject(const Semigroup& s) {
  detail::require_semigroup_shape(s);
  Report r;
  r.add_flag("nondegenerate", check_nondegenerate(s));
  r.add_flag("surjective", is_surjective(s.m));
  return r;
}

inline Report check_mmorphism(const MMorphism& f) {
  const std::size_t a = f.source.dim, b = f.target.dim;
  detail::require_shape(f.f1, b, a * b, "f1");
  detail::require_shape(f.f2, b, b * a, "f2");
  const FieldSpec field = f.f1.field();
  const Mat ia = Mat::identity(field, a), ib = Mat::identity(field, b);
  Report r;
  r.add_flag("f1-surjective", is_surjective(f.f1));
  r.add_flag("f2-surjective", is_surjective(f.f2));
  r.add_equal("sq1", compose(f.f1, kron(ia, f.f1)), compose(f.f1, kron(f.source.m, ib)));
  r.add_equal("sq2", compose(f.target.m, kron(ib, f.f1)), compose(f.target.m, kron(f.f2, ib)));
  r.add_equal("sq3", compose(f.f2, kron(f.f2, ia)), compose(f.f2, kron(ib, f.source.m)));
  return r;
}

inline MMorphism identity_M(const Semigroup& a) { return {a, a, a.m, a.m}; }

/// g . f for f : A -/-> B and g : B -/-> C:
///   (g.f)1 . 1g1 = g1 . f1 1   and   (g.f)2 . g2 1 = g2 . 1f2.
inline MMorphism compose_M(const MMorphism& g, const MMorphism& f) {
  if (!(f.target == g.source)) throw ShapeError("compose_M: target of f differs from source of g");
  const FieldSpec field = f.f1.field();
  const Mat ia = Mat::identity(field, f.source.dim), ic = Mat::identity(field, g.target.dim);
  auto h1 = solve_right(compose(g.f1, kron(f.f1, ic)), kron(ia, g.f1));
  auto h2 = solve_right(compose(g.f2, kron(ic, f.f2)), kron(g.f2, ia));
  if (!h1 || !h2) throw InvariantViolation("compose_M: composite does not factor through the coequalizer");
  MMorphism out{f.source, g.target, std::move(*h1), std::move(*h2)};
  if (!check_mmorphism(out).ok()) throw InvariantViolation("compose_M: composite is not a morphism of M");
  return out;
}

/// (A (x) C, (mA (x) mC) . (1 c 1)).
inline Semigroup tensor_objects(const Semigroup& a, const Semigroup& c) {
  const FieldSpec field = a.field();
  return {a.dim * c.dim, compose(kron(a.m, c.m), kron({Mat::identity(field, a.dim), flip(field, c.dim, a.dim),
                                                        Mat::identity(field, c.dim)}))};
}

/// f (x) g for f : A -/-> B and g : C -/-> D:
///   (f(x)g)1 = (f1 g1) . (1 c 1) on ACBD,   (f(x)g)2 = (f2 g2) . (1 c 1) on BDAC.
inline MMorphism tensor_M(const MMorphism& f, const MMorphism& g) {
  const FieldSpec field = f.f1.field();
  const std::size_t a = f.source.dim, b = f.target.dim, c = g.source.dim, d = g.target.dim;
  auto id = [&](std::size_t n) { return Mat::identity(field, n); };
  return {tensor_objects(f.source, g.source), tensor_objects(f.target, g.target),
          compose(kron(f.f1, g.f1), kron({id(a), flip(field, c, b), id(d)})),
          compose(kron(f.f2, g.f2), kron({id(b), flip(field, d, a), id(c)}))};
}

/// Q-membership of the data a multiplier bimonoid needs to give a comonoid in M.
struct ComonoidExtraction {
  Report q;
  std::optional<MMorphism> comult;  // A -/-> A (x) A
  std::optional<MMorphism> counit;  // A -/-> I
};

/// d1 = m1 . c^-1 1 . 1t1 . c1   and   d2 = 1m . 1c^-1 . t2 1 . 1c.
inline std::pair<Mat, Mat> comultiplication_components(const MultiplierBimonoid& b) {
  const FieldSpec field = b.field();
  const std::size_t n = b.dim();
  const Mat i = Mat::identity(field, n), c = flip(field, n, n);
  const Mat& m = b.semigroup.m;
  return {compose_chain({kron(m, i), kron(c, i), kron(i, b.t1), kron(c, i)}),
          compose_chain({kron(i, m), kron(i, c), kron(b.t2, i), kron(i, c)})};
}

/// Comonoid laws of (comult, counit) in M:
/// coassociativity (D (x) 1) . D = (1 (x) D) . D and (e (x) 1) . D = 1 = (1 (x) e) . D.
inline Report comonoid_laws(const MMorphism& comult, const MMorphism& counit) {
  const MMorphism id = identity_M(comult.source);
  Report r;
  auto same = [&](const std::string& name, const MMorphism& x, const MMorphism& y) {
    // Equal morphisms have equal targets; the components then decide.
    const bool shapes = x.target.dim == y.target.dim && x.source.dim == y.source.dim;
    if (!shapes) {
      r.add_flag(name, false);
      return;
    }
    const auto w1 = first_difference(x.f1, y.f1), w2 = first_difference(x.f2, y.f2);
    r.add({name, !w1 && !w2 && x.target == y.target, w1 ? w1 : w2});
  };
  same("coassoc", compose_M(tensor_M(comult, id), comult), compose_M(tensor_M(id, comult), comult));
  // The unit object I is strict, so I (x) A and A (x) I coincide with A.
  auto strip_unit = [&](MMorphism f) {
    f.target = comult.source;
    return f;
  };
  same("counit-left", strip_unit(compose_M(tensor_M(counit, id), comult)), id);
  same("counit-right", strip_unit(compose_M(tensor_M(id, counit), comult)), id);
  return r;
}

/// Q-membership of m, e, d1, d2 and, when all hold, the comultiplication
/// (d1, d2) : A -/-> AA and the counit (e, e) : A -/-> I. No laws are checked.
inline ComonoidExtraction assemble_comonoid(const MultiplierBimonoid& b) {
  detail::require_bimonoid_shape(b);
  const auto [d1, d2] = comultiplication_components(b);
  ComonoidExtraction out;
  out.q.add_flag("m-nondegenerate", check_nondegenerate(b.semigroup));
  out.q.add_flag("m-surjective", is_surjective(b.semigroup.m));
  out.q.add_flag("e-surjective", is_surjective(b.e));
  out.q.add_flag("d1-surjective", is_surjective(d1));
  out.q.add_flag("d2-surjective", is_surjective(d2));
  if (!out.q.ok()) return out;
  const Semigroup& a = b.semigroup;
  out.comult = MMorphism{a, tensor_objects(a, a), d1, d2};
  out.counit = MMorphism{a, Semigroup::unit(b.field()), b.e, b.e};
  return out;
}

/// As assemble_comonoid, then validates both morphisms and the comonoid laws,
/// throwing InvariantViolation if they fail on data in Q.
inline ComonoidExtraction extract_comonoid(const MultiplierBimonoid& b) {
  ComonoidExtraction out = assemble_comonoid(b);
  if (!out.q.ok()) return out;
  if (!check_mmorphism(*out.comult).ok() || !check_mmorphism(*out.counit).ok())
    throw InvariantViolation("comultiplication or counit violates the morphism squares");
  if (!comonoid_laws(*out.comult, *out.counit).ok()) throw InvariantViolation("comonoid laws fail in M");
  return out;
}

/// hat-phi = m01 1 . 1c . phi 1 . 1c^-1   : A02 A01 A12 -> A01 A12
inline Mat hat_phi(const TwoSimplex& x) {
  const FieldSpec field = x.a12.field();
  const std::size_t n01 = x.a01.dim, n02 = x.a02.dim, n12 = x.a12.dim;
  auto id = [&](std::size_t n) { return Mat::identity(field, n); };
  return compose_chain({kron(x.a01.m, id(n12)), kron(id(n01), flip(field, n12, n01)),
                        kron(x.component(Component::M1), id(n01)), kron(id(n02), flip(field, n01, n12))});
}

/// hat-psi = 1m12 . c1 . 1psi . c^-1 1   : A01 A12 A02 -> A01 A12
inline Mat hat_psi(const TwoSimplex& x) {
  const FieldSpec field = x.a12.field();
  const std::size_t n01 = x.a01.dim, n02 = x.a02.dim, n12 = x.a12.dim;
  auto id = [&](std::size_t n) { return Mat::identity(field, n); };
  return compose_chain({kron(id(n01), x.a12.m), kron(flip(field, n12, n01), id(n12)),
                        kron(id(n12), x.component(Component::M2)), kron(flip(field, n01, n12), id(n02))});
}

/// Level 1: the semigroup is an object of M.
inline Report q_membership(const Semigroup& s) { return check_mobject(s); }

/// Level 2: faces in Q and both hat maps surjective.
inline Report q_membership(const TwoSimplex& x) {
  Report r;
  r.append(q_membership(x.a12), "d0.");
  r.append(q_membership(x.a02), "d1.");
  r.append(q_membership(x.a01), "d2.");
  r.add_flag("hat-phi-surjective", is_surjective(hat_phi(x)));
  r.add_flag("hat-psi-surjective", is_surjective(hat_psi(x)));
  return r;
}

/// Level 3: all four faces in Q.
inline Report q_membership(const ThreeSimplex& x) {
  tetra_objects(x);
  Report r;
  for (std::size_t i = 0; i < 4; ++i) r.append(q_membership(x[i]), "d" + std::to_string(i) + ".");
  return r;
}

/// The morphism A02 -/-> A01 (x) A12 attached to a 2-simplex of Q.
inline MMorphism nerve_map(const TwoSimplex& x) {
  MMorphism out{x.a02, tensor_objects(x.a01, x.a12), hat_phi(x), hat_psi(x)};
  if (!check_mmorphism(out).ok()) throw InvariantViolation("nerve_map: image is not a morphism of M");
  return out;
}

/// The nerve condition on a 3-simplex of Q: (w012 (x) 1) . w023 = (1 (x) w123) . w013.
inline Report nerve_3simplex(const ThreeSimplex& x) {
  const TetraObjects o = tetra_objects(x);
  const MMorphism w123 = nerve_map(x[0]), w023 = nerve_map(x[1]), w013 = nerve_map(x[2]), w012 = nerve_map(x[3]);
  const MMorphism lhs = compose_M(tensor_M(w012, identity_M(o.a23)), w023);
  const MMorphism rhs = compose_M(tensor_M(identity_M(o.a01), w123), w013);
  Report r;
  const auto w1 = first_difference(lhs.f1, rhs.f1), w2 = first_difference(lhs.f2, rhs.f2);
  r.add({"nerve-3", !w1 && !w2 && lhs.target == rhs.target, w1 ? w1 : w2});
  return r;
}

/// The multiplier monoid of a non-degenerate semigroup B: pairs (lambda, rho)
/// of operators on B with b . lambda(b') = rho(b) . b', multiplied by
/// (l1, r1)(l2, r2) = (l1 l2, r2 r1).
struct MultiplierMonoid {
  Semigroup base;
  std::size_t dim = 0;
  std::vector<Mat> lambda;  // lambda[k] : B -> B for basis element x_k
  std::vector<Mat> rho;
  Mat product;  // dim x dim^2 structure constants
  Mat unit;     // dim x 1
  Mat i1;       // M(B) B -> B
  Mat i2;       // B M(B) -> B

  /// Coordinates of an operator pair, or nullopt if it is not a multiplier.
  std::optional<Mat> coordinates(const Mat& l, const Mat& r) const {
    const std::size_t n = base.dim;
    Mat v(base.field(), 1, 2 * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        v.set(0, i * n + j, l(i, j));
        v.set(0, n * n + i * n + j, r(i, j));
      }
    Mat basis(base.field(), dim, 2 * n * n);
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          basis.set(k, i * n + j, lambda[k](i, j));
          basis.set(k, n * n + i * n + j, rho[k](i, j));
        }
    auto x = solve_right(v, basis);
    if (!x) return std::nullopt;
    return transpose(*x);
  }
};

inline MultiplierMonoid multiplier_monoid(const Semigroup& b) {
  detail::require_semigroup_shape(b);
  const FieldSpec field = b.field();
  const std::size_t n = b.dim;
  // Unknowns: lambda entries (i, j) at i*n + j, then rho entries.
  // Equation (i, j, r): m(e_i (x) lambda e_j) - m(rho e_i (x) e_j) = 0 in coordinate r.
  Mat system(field, n * n * n, 2 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        const std::size_t eq = (i * n + j) * n + r;
        for (std::size_t k = 0; k < n; ++k) {
          system.add_to(eq, k * n + j, b.m(r, i * n + k));
          system.add_to(eq, n * n + k * n + i, field.neg(b.m(r, k * n + j)));
        }
      }
  const Mat kernel = nullspace(system);
  MultiplierMonoid out{b, kernel.cols(), {}, {}, Mat(field, kernel.cols(), kernel.cols() * kernel.cols()),
                       Mat(field, kernel.cols(), 1), Mat(field, n, kernel.cols() * n), Mat(field, n, n * kernel.cols())};
  for (std::size_t k = 0; k < out.dim; ++k) {
    Mat l(field, n, n), r(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        l.set(i, j, kernel(i * n + j, k));
        r.set(i, j, kernel(n * n + i * n + j, k));
      }
    out.lambda.push_back(std::move(l));
    out.rho.push_back(std::move(r));
  }
  for (std::size_t a = 0; a < out.dim; ++a)
    for (std::size_t c = 0; c < out.dim; ++c) {
      auto x = out.coordinates(compose(out.lambda[a], out.lambda[c]), compose(out.rho[c], out.rho[a]));
      if (!x) throw InvariantViolation("multipliers are not closed under composition");
      for (std::size_t k = 0; k < out.dim; ++k) out.product.set(k, a * out.dim + c, (*x)(k, 0));
    }
  if (out.dim > 0) {
    auto u = out.coordinates(Mat::identity(field, n), Mat::identity(field, n));
    if (!u) throw InvariantViolation("identity pair is not a multiplier");
    out.unit = *u;
  }
  for (std::size_t k = 0; k < out.dim; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        out.i1.set(i, k * n + j, out.lambda[k](i, j));
        out.i2.set(i, j * out.dim + k, out.rho[k](i, j));
      }
  return out;
}

/// phi_f : A -> M(B), a |-> (f1(a (x) -), f2(- (x) a)), or nullopt if some
/// image pair is not a multiplier.
inline std::optional<Mat> phi_f(const MultiplierMonoid& mb, const MMorphism& f) {
  const FieldSpec field = mb.base.field();
  const std::size_t n = mb.base.dim, a = f.source.dim;
  if (!(f.target == mb.base)) throw ShapeError("phi_f: morphism does not land in the base of M(B)");
  Mat out(field, mb.dim, a);
  for (std::size_t s = 0; s < a; ++s) {
    Mat l(field, n, n), r(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        l.set(i, j, f.f1(i, s * n + j));
        r.set(i, j, f.f2(i, j * a + s));
      }
    auto x = mb.coordinates(l, r);
    if (!x) return std::nullopt;
    for (std::size_t k = 0; k < mb.dim; ++k) out.set(k, s, (*x)(k, 0));
  }
  return out;
}

/// Universal property of M(B) at f : A -/-> B: phi_f exists, recovers f1 and
/// f2 through i1 and i2, is multiplicative, and is the only such map (the
/// evaluation x |-> (i1(x (x) -), i2(- (x) x)) is injective).
inline Report universal_property(const MultiplierMonoid& mb, const MMorphism& f) {
  Report r;
  const auto phi = phi_f(mb, f);
  r.add_flag("phi-exists", phi.has_value());
  if (!phi) return r;
  const FieldSpec field = mb.base.field();
  const Mat ib = Mat::identity(field, mb.base.dim);
  r.add_equal("i1", compose(mb.i1, kron(*phi, ib)), f.f1);
  r.add_equal("i2", compose(mb.i2, kron(ib, *phi)), f.f2);
  r.add_equal("multiplicative", compose(*phi, f.source.m), compose(mb.product, kron(*phi, *phi)));
  Mat eval(field, 2 * mb.base.dim * mb.base.dim, mb.dim);
  for (std::size_t k = 0; k < mb.dim; ++k)
    for (std::size_t i = 0; i < mb.base.dim; ++i)
      for (std::size_t j = 0; j < mb.base.dim; ++j) {
        eval.set(i * mb.base.dim + j, k, mb.lambda[k](i, j));
        eval.set(mb.base.dim * mb.base.dim + i * mb.base.dim + j, k, mb.rho[k](i, j));
      }
  r.add_flag("unique", is_injective(eval));
  return r;
}

}  // namespace mbm
