#pragma once

// Predicate models of the simplicial sets M1, M2, M3, M4, M12, M34 and M over
// a braided context, and simplicial maps out of the Catalan simplicial set.
//
// A 2-simplex has faces (d0, d1, d2) = (A12, A02, A01), three semigroups, and
// one morphism per component:
//   M1  phi     : A02 A12 -> A01 A12   in C
//   M2  psi     : A01 A02 -> A01 A12   (M1 built over C^rev)
//   M3  phi_bar : as phi, over C-bar with twisted multiplications m.c^-1
//   M4  psi_bar : as psi, over C-bar with twisted multiplications
// M12 pairs M1 with M2, M34 pairs M3 with M4 and M carries all four.
// A 3-simplex is the tuple of its faces (d0, d1, d2, d3) = (x123, x023, x013, x012).

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mbm/braided_context.hpp"
#include "mbm/catalan.hpp"
#include "mbm/errors.hpp"
#include "mbm/matrix.hpp"
#include "mbm/report.hpp"
#include "mbm/structures.hpp"

namespace mbm {

enum class Target { M1, M2, M3, M4, M12, M34, M };
enum class Component { M1, M2, M3, M4 };

inline std::string to_string(Target t) {
  switch (t) {
    case Target::M1: return "m1";
    case Target::M2: return "m2";
    case Target::M3: return "m3";
    case Target::M4: return "m4";
    case Target::M12: return "m12";
    case Target::M34: return "m34";
    case Target::M: return "m";
  }
  return "?";
}

inline std::optional<Target> parse_target(const std::string& s) {
  for (Target t : {Target::M1, Target::M2, Target::M3, Target::M4, Target::M12, Target::M34, Target::M})
    if (to_string(t) == s) return t;
  return std::nullopt;
}

inline std::vector<Component> components(Target t) {
  switch (t) {
    case Target::M1: return {Component::M1};
    case Target::M2: return {Component::M2};
    case Target::M3: return {Component::M3};
    case Target::M4: return {Component::M4};
    case Target::M12: return {Component::M1, Component::M2};
    case Target::M34: return {Component::M3, Component::M4};
    case Target::M: return {Component::M1, Component::M2, Component::M3, Component::M4};
  }
  return {};
}

struct TwoSimplex {
  Semigroup a12, a02, a01;
  std::optional<Mat> phi, psi, phi_bar, psi_bar;

  std::optional<Mat>& slot(Component c) {
    switch (c) {
      case Component::M1: return phi;
      case Component::M2: return psi;
      case Component::M3: return phi_bar;
      case Component::M4: return psi_bar;
    }
    throw std::logic_error("unknown component");
  }
  const std::optional<Mat>& slot(Component c) const { return const_cast<TwoSimplex*>(this)->slot(c); }

  const Mat& component(Component c) const {
    const auto& s = slot(c);
    if (!s) throw PreconditionError("2-simplex lacks the component required by the target");
    return *s;
  }

  friend bool operator==(const TwoSimplex&, const TwoSimplex&) = default;
};

/// Faces (d0, d1, d2, d3) = (x123, x023, x013, x012).
using ThreeSimplex = std::array<TwoSimplex, 4>;

/// The six edge objects of a 3-simplex, read off its faces.
struct TetraObjects {
  Semigroup a01, a02, a03, a12, a13, a23;
};

inline TetraObjects tetra_objects(const ThreeSimplex& x) {
  const auto &x123 = x[0], &x023 = x[1], &x013 = x[2], &x012 = x[3];
  auto same = [](const Semigroup& a, const Semigroup& b, const char* which) {
    if (!(a == b)) throw PreconditionError(std::string("3-boundary mismatch on edge ") + which);
  };
  same(x012.a01, x013.a01, "01");
  same(x012.a02, x023.a01, "02");
  same(x013.a02, x023.a02, "03");
  same(x012.a12, x123.a01, "12");
  same(x013.a12, x123.a02, "13");
  same(x023.a12, x123.a12, "23");
  return {x012.a01, x012.a02, x013.a02, x012.a12, x013.a12, x023.a12};
}

namespace detail {

struct Frame {
  BraidedContext ctx;
  bool reversed;
  bool twisted;
  std::string prefix;
};

inline Frame frame(const BraidedContext& ctx, Component c) {
  switch (c) {
    case Component::M1: return {ctx, false, false, "m1"};
    case Component::M2: return {ctx.rev(), true, false, "m2"};
    case Component::M3: return {ctx.bar(), false, true, "m3"};
    case Component::M4: return {ctx.bar().rev(), true, true, "m4"};
  }
  throw std::logic_error("unknown component");
}

inline Semigroup adapt(const BraidedContext& base, const Frame& f, const Semigroup& s) {
  return f.twisted ? twisted(base, s) : s;
}

/// The two defining diagrams of an M1 2-simplex phi : A02 A12 -> A01 A12 in k:
///   2a: 1m12 . phi 1 = phi . 1m12
///   2b: phi . m02 1 = m01 1 . c^-1 1 . 1phi . c 1 . 1phi
inline Report m1_2simplex(const BraidedContext& k, const Semigroup& a12, const Semigroup& a02,
                          const Semigroup& a01, const Mat& phi, const std::string& prefix) {
  const std::size_t n12 = a12.dim, n02 = a02.dim, n01 = a01.dim;
  require_shape(phi, n01 * n12, n02 * n12, prefix + " component");
  auto T = [&](const Mat& f, const Mat& g) { return k.tensor(f, g); };
  const Mat i12 = k.id(n12), i02 = k.id(n02), i01 = k.id(n01);
  Report r;
  r.add_equal(prefix + "-2a", compose(T(i01, a12.m), T(phi, i12)), compose(phi, T(i02, a12.m)));
  r.add_equal(prefix + "-2b", compose(phi, T(a02.m, i12)),
              compose_chain({T(a01.m, i12), T(k.braiding_inv(n01, n01), i12), T(i01, phi),
                             T(k.braiding(n02, n01), i12), T(i02, phi)}));
  return r;
}

/// The filler equation of an M1 3-simplex:
///   1phi123 . phi013 1 = phi012 1 . c^-1 1 . 1phi023 . c 1 . 1phi123   on A03 A13 A23.
inline Report m1_3simplex(const BraidedContext& k, const TetraObjects& o, const Mat& f012, const Mat& f013,
                          const Mat& f023, const Mat& f123, const std::string& prefix) {
  auto T = [&](const Mat& f, const Mat& g) { return k.tensor(f, g); };
  const Mat i01 = k.id(o.a01.dim), i03 = k.id(o.a03.dim), i12 = k.id(o.a12.dim), i23 = k.id(o.a23.dim);
  Report r;
  r.add_equal(prefix + "-3", compose(T(i01, f123), T(f013, i23)),
              compose_chain({T(f012, i23), T(k.braiding_inv(o.a02.dim, o.a12.dim), i23), T(i12, f023),
                             T(k.braiding(o.a03.dim, o.a12.dim), i23), T(i03, f123)}));
  return r;
}

inline Report component_2simplex(const BraidedContext& ctx, Component c, const TwoSimplex& x) {
  const Frame f = frame(ctx, c);
  const Semigroup a12 = adapt(ctx, f, x.a12), a02 = adapt(ctx, f, x.a02), a01 = adapt(ctx, f, x.a01);
  const Mat& data = x.component(c);
  if (f.reversed) return m1_2simplex(f.ctx, a01, a02, a12, data, f.prefix);
  return m1_2simplex(f.ctx, a12, a02, a01, data, f.prefix);
}

inline Report component_3simplex(const BraidedContext& ctx, Component c, const ThreeSimplex& x,
                                 const TetraObjects& o) {
  const Frame f = frame(ctx, c);
  const Mat &d0 = x[0].component(c), &d1 = x[1].component(c), &d2 = x[2].component(c), &d3 = x[3].component(c);
  if (f.reversed) {
    // Reversal sends vertex i to 3 - i: A'ij = A(3-j)(3-i) and x'ijk = x(3-k)(3-j)(3-i).
    const TetraObjects r{o.a23, o.a13, o.a03, o.a12, o.a02, o.a01};
    return m1_3simplex(f.ctx, r, d0, d1, d2, d3, f.prefix);
  }
  return m1_3simplex(f.ctx, o, d3, d2, d1, d0, f.prefix);
}

/// The square relating the two halves of an M12 (or M34) 2-simplex:
///   m01 1 . 1phi = 1m12 . psi 1   on A01 A02 A12.
inline Report pair_2simplex(const BraidedContext& k, const Semigroup& a12, const Semigroup& a01, const Mat& phi,
                            const Mat& psi, const std::string& id) {
  auto T = [&](const Mat& f, const Mat& g) { return k.tensor(f, g); };
  Report r;
  r.add_equal(id, compose(T(a01.m, k.id(a12.dim)), T(k.id(a01.dim), phi)),
              compose(T(k.id(a01.dim), a12.m), T(psi, k.id(a12.dim))));
  return r;
}

/// psi012 1 . 1phi023 = 1phi123 . psi013 1   on A01 A03 A23.
inline Report pair_3simplex(const BraidedContext& k, const TetraObjects& o, const ThreeSimplex& x, Component phi_c,
                            Component psi_c, const std::string& id) {
  auto T = [&](const Mat& f, const Mat& g) { return k.tensor(f, g); };
  const Mat i01 = k.id(o.a01.dim), i23 = k.id(o.a23.dim);
  Report r;
  r.add_equal(id, compose(T(x[3].component(psi_c), i23), T(i01, x[1].component(phi_c))),
              compose(T(i01, x[0].component(phi_c)), T(x[2].component(psi_c), i23)));
  return r;
}

/// The four squares tying the M12 and M34 halves of an M 2-simplex, with
/// A = A12, B = A02, C = A01 and plain multiplications:
///   2a: mC 1 . c^-1 1 . 1phi = 1mA . psi' 1
///   2b: 1mA . 1c^-1 . psi 1 = mC 1 . 1phi'
///   2c: 1mA . c 1 . 1phi = 1mA . phi' 1 . c 1
///   2d: mC 1 . 1c . psi 1 = mC 1 . 1psi' . 1c
inline Report m_2simplex(const BraidedContext& k, const TwoSimplex& x) {
  auto T = [&](const Mat& f, const Mat& g) { return k.tensor(f, g); };
  const std::size_t a = x.a12.dim, b = x.a02.dim, c = x.a01.dim;
  const Mat &mA = x.a12.m, &mC = x.a01.m;
  const Mat iA = k.id(a), iC = k.id(c);
  const Mat &phi = x.component(Component::M1), &psi = x.component(Component::M2);
  const Mat &phib = x.component(Component::M3), &psib = x.component(Component::M4);
  Report r;
  r.add_equal("m-2a", compose_chain({T(mC, iA), T(k.braiding_inv(c, c), iA), T(iC, phi)}),
              compose(T(iC, mA), T(psib, iA)));
  r.add_equal("m-2b", compose_chain({T(iC, mA), T(iC, k.braiding_inv(a, a)), T(psi, iA)}),
              compose(T(mC, iA), T(iC, phib)));
  r.add_equal("m-2c", compose_chain({T(iC, mA), T(k.braiding(a, c), iA), T(iA, phi)}),
              compose_chain({T(iC, mA), T(phib, iA), T(k.braiding(a, b), iA)}));
  r.add_equal("m-2d", compose_chain({T(mC, iA), T(iC, k.braiding(a, c)), T(psi, iC)}),
              compose_chain({T(mC, iA), T(iC, psib), T(iC, k.braiding(b, c))}));
  return r;
}

///   3a: psi'012 1 . 1phi023 = 1phi123 . psi'013 1
///   3b: 1phi'123 . psi013 1 = psi012 1 . 1phi'023
/// and, for the strong variant,
///   strong-1: phi'012 1 . 1phi123 . c 1 . 1phi023 = 1phi123 . phi'013 1 . c 1   on A13 A03 A23
///   strong-2: 1psi'123 . psi012 1 . 1c . psi013 1 = psi012 1 . 1psi'023 . 1c   on A01 A03 A02
inline Report m_3simplex(const BraidedContext& k, const TetraObjects& o, const ThreeSimplex& x, bool strong) {
  auto T = [&](const Mat& f, const Mat& g) { return k.tensor(f, g); };
  auto comp = [&](std::size_t face, Component c) -> const Mat& { return x[face].component(c); };
  const Mat i01 = k.id(o.a01.dim), i23 = k.id(o.a23.dim);
  constexpr std::size_t f123 = 0, f023 = 1, f013 = 2, f012 = 3;
  Report r;
  r.add_equal("m-3a", compose(T(comp(f012, Component::M4), i23), T(i01, comp(f023, Component::M1))),
              compose(T(i01, comp(f123, Component::M1)), T(comp(f013, Component::M4), i23)));
  r.add_equal("m-3b", compose(T(i01, comp(f123, Component::M3)), T(comp(f013, Component::M2), i23)),
              compose(T(comp(f012, Component::M2), i23), T(i01, comp(f023, Component::M3))));
  if (strong) {
    const Mat i13 = k.id(o.a13.dim), i02 = k.id(o.a02.dim);
    r.add_equal("strong-1",
                compose_chain({T(comp(f012, Component::M3), i23), T(i02, comp(f123, Component::M1)),
                               T(k.braiding(o.a13.dim, o.a02.dim), i23), T(i13, comp(f023, Component::M1))}),
                compose_chain({T(i01, comp(f123, Component::M1)), T(comp(f013, Component::M3), i23),
                               T(k.braiding(o.a13.dim, o.a03.dim), i23)}));
    r.add_equal("strong-2",
                compose_chain({T(i01, comp(f123, Component::M4)), T(comp(f012, Component::M2), i13),
                               T(i01, k.braiding(o.a13.dim, o.a02.dim)), T(comp(f013, Component::M2), i02)}),
                compose_chain({T(comp(f012, Component::M2), i23), T(i01, comp(f023, Component::M4)),
                               T(i01, k.braiding(o.a03.dim, o.a02.dim))}));
  }
  return r;
}

}  // namespace detail

/// Every defining diagram of a 2-simplex of the target, each under its own id
/// ("m1-2a", "m1-2b", ..., "m12-2", "m34-2", "m-2a" .. "m-2d").
inline Report validate_2simplex(Target target, const BraidedContext& ctx, const TwoSimplex& x) {
  Report r;
  for (Component c : components(target)) r.append(detail::component_2simplex(ctx, c, x));
  if (target == Target::M12 || target == Target::M) {
    r.append(detail::pair_2simplex(ctx, x.a12, x.a01, x.component(Component::M1),
                                   x.component(Component::M2), "m12-2"));
  }
  if (target == Target::M34 || target == Target::M) {
    r.append(detail::pair_2simplex(ctx.bar(), twisted(ctx, x.a12), twisted(ctx, x.a01),
                                   x.component(Component::M3), x.component(Component::M4), "m34-2"));
  }
  if (target == Target::M) r.append(detail::m_2simplex(ctx, x));
  return r;
}

/// The 3-simplex equations for a matching 3-boundary; the boundary is filled
/// (uniquely) iff the report passes. Throws PreconditionError on a mismatch.
inline Report filler_report(Target target, const BraidedContext& ctx, const ThreeSimplex& x, bool strong = false) {
  const TetraObjects o = tetra_objects(x);
  Report r;
  for (Component c : components(target)) r.append(detail::component_3simplex(ctx, c, x, o));
  if (target == Target::M12 || target == Target::M)
    r.append(detail::pair_3simplex(ctx, o, x, Component::M1, Component::M2, "m12-3"));
  if (target == Target::M34 || target == Target::M)
    r.append(detail::pair_3simplex(ctx.bar(), o, x, Component::M3, Component::M4, "m34-3"));
  if (target == Target::M) r.append(detail::m_3simplex(ctx, o, x, strong));
  return r;
}

inline bool filler_exists(Target target, const BraidedContext& ctx, const ThreeSimplex& x, bool strong = false) {
  return filler_report(target, ctx, x, strong).ok();
}

enum class Degeneracy { s0, s1 };

/// s0(A, m) has faces (A, A, I) and s1(A, m) has faces (I, A, A). Components:
/// M1 s0 = m, s1 = 1; M2 s0 = 1, s1 = m; M3 and M4 as M1 and M2 with m.c^-1.
inline TwoSimplex degenerate_2simplex(Target target, const BraidedContext& ctx, Degeneracy which, const Semigroup& s) {
  const Semigroup unit = Semigroup::unit(s.field());
  TwoSimplex x = which == Degeneracy::s0 ? TwoSimplex{s, s, unit, {}, {}, {}, {}} : TwoSimplex{unit, s, s, {}, {}, {}, {}};
  const Mat id = Mat::identity(s.field(), s.dim);
  const Mat mt = twisted(ctx, s).m;
  const bool s0 = which == Degeneracy::s0;
  for (Component c : components(target)) {
    switch (c) {
      case Component::M1: x.phi = s0 ? s.m : id; break;
      case Component::M2: x.psi = s0 ? id : s.m; break;
      case Component::M3: x.phi_bar = s0 ? mt : id; break;
      case Component::M4: x.psi_bar = s0 ? id : mt; break;
    }
  }
  return x;
}

/// A simplicial map from the Catalan simplicial set, stored as the images of
/// alpha, tau and eps. tau has faces (A, A, A) and eps has faces (I, A, I).
struct SimplicialMapC {
  Target target;
  BraidedContext ctx;
  Semigroup alpha;
  TwoSimplex tau;
  TwoSimplex eps;

  friend bool operator==(const SimplicialMapC&, const SimplicialMapC&) = default;
};

inline Semigroup image(const SimplicialMapC& f, CEdge e) {
  return e == CEdge::ALPHA ? f.alpha : Semigroup::unit(f.alpha.field());
}

inline TwoSimplex image(const SimplicialMapC& f, CTriangle t) {
  switch (t) {
    case CTriangle::S0S0:
      return degenerate_2simplex(f.target, f.ctx, Degeneracy::s0, Semigroup::unit(f.alpha.field()));
    case CTriangle::S0A: return degenerate_2simplex(f.target, f.ctx, Degeneracy::s0, f.alpha);
    case CTriangle::S1A: return degenerate_2simplex(f.target, f.ctx, Degeneracy::s1, f.alpha);
    case CTriangle::TAU: return f.tau;
    case CTriangle::EPS: return f.eps;
  }
  throw std::logic_error("unknown triangle");
}

/// The images of the four faces of a Catalan 3-simplex.
inline ThreeSimplex image_boundary(const SimplicialMapC& f, const CatalanSimplex& x) {
  if (x.dim() != 3) throw PreconditionError("image_boundary expects a 3-simplex");
  return {image(f, x.triangle(1, 2, 3)), image(f, x.triangle(0, 2, 3)), image(f, x.triangle(0, 1, 3)),
          image(f, x.triangle(0, 1, 2))};
}

namespace detail {

/// Short name of the structure-level identity a diagram reduces to when
/// evaluated on the image of a given non-degenerate cell of C.
inline std::string letter(const std::string& cell, const std::string& check) {
  static const std::map<std::pair<std::string, std::string>, std::string> fixed = {
      {{"tau", "m12-2"}, "e"},    {{"eps", "m12-2"}, "f"},   {{"phi", "m12-3"}, "g"},
      {{"lambda", "m12-3"}, "h"}, {{"rho", "m12-3"}, "i"},   {{"kappa", "m12-3"}, "f"},
      {{"tau", "m34-2"}, "e-bar"}, {{"eps", "m34-2"}, "f-bar"}, {{"phi", "m34-3"}, "g-bar"},
      {{"lambda", "m34-3"}, "h-bar"}, {{"rho", "m34-3"}, "i-bar"}, {{"kappa", "m34-3"}, "f-bar"},
      {{"tau", "m-2a"}, "j"},     {{"tau", "m-2b"}, "k"},    {{"tau", "m-2c"}, "l"},
      {{"tau", "m-2d"}, "m"},     {{"eps", "m-2a"}, "n"},    {{"eps", "m-2b"}, "n"},
      {{"eps", "m-2c"}, "n"},     {{"eps", "m-2d"}, "n"},    {{"phi", "m-3a"}, "o"},
      {{"phi", "m-3b"}, "p"},     {{"lambda", "m-3a"}, "t"}, {{"lambda", "m-3b"}, "r"},
      {{"rho", "m-3a"}, "q"},     {{"rho", "m-3b"}, "s"},    {{"kappa", "m-3a"}, "n"},
      {{"kappa", "m-3b"}, "n"},
  };
  if (auto it = fixed.find({cell, check}); it != fixed.end()) return it->second;

  // Component diagrams "m<k>-2a", "m<k>-2b", "m<k>-3".
  if (check.size() < 4 || check[0] != 'm' || check[2] != '-') return {};
  const char k = check[1];
  if (k < '1' || k > '4') return {};
  const bool reversed = k == '2' || k == '4';
  const std::string suffix = k == '1' ? "" : k == '2' ? "-rev" : k == '3' ? "-bar" : "-bar-rev";
  const std::string kind = check.substr(3);
  std::string base;
  if (kind == "2a" && cell == "tau") base = "a";
  if (kind == "2b" && cell == "tau") base = "b";
  if (kind == "2b" && cell == "eps") base = "c";
  if (kind == "3") {
    if (cell == "phi") base = "fusion";
    if (cell == "kappa") base = "c";
    if (cell == "lambda") base = reversed ? "d" : "counit";
    if (cell == "rho") base = reversed ? "counit" : "d";
  }
  return base.empty() ? base : base + suffix;
}

inline void append_labelled(Report& out, const Report& in, const std::string& cell) {
  for (const auto& c : in.items()) {
    const std::string l = letter(cell, c.id);
    out.add({cell + "." + c.id + (l.empty() ? "" : "/" + l), c.pass, c.witness});
  }
}

}  // namespace detail

struct BuildResult {
  Report report;
  std::optional<SimplicialMapC> map;
  bool ok() const { return map.has_value(); }
};

/// Validates the images of tau and eps, then the fillers of the images of
/// phi, lambda, rho and kappa. Report ids read "<cell>.<diagram>[/<letter>]",
/// where the letter names the structure identity the diagram reduces to.
inline BuildResult build_map(const SimplicialMapC& candidate, bool strong = false) {
  const auto& a = candidate.alpha;
  const Semigroup unit = Semigroup::unit(a.field());
  detail::require_semigroup_shape(a);
  if (!(candidate.tau.a12 == a && candidate.tau.a02 == a && candidate.tau.a01 == a))
    throw PreconditionError("image of tau must have faces (A, A, A)");
  if (!(candidate.eps.a12 == unit && candidate.eps.a02 == a && candidate.eps.a01 == unit))
    throw PreconditionError("image of eps must have faces (I, A, I)");

  BuildResult out;
  detail::append_labelled(out.report, validate_2simplex(candidate.target, candidate.ctx, candidate.tau), "tau");
  detail::append_labelled(out.report, validate_2simplex(candidate.target, candidate.ctx, candidate.eps), "eps");
  for (const char* cell : {"phi", "lambda", "rho", "kappa"}) {
    const ThreeSimplex boundary = image_boundary(candidate, named_3cell(cell));
    detail::append_labelled(out.report, filler_report(candidate.target, candidate.ctx, boundary, strong), cell);
  }
  if (out.report.ok()) out.map = candidate;
  return out;
}

inline BuildResult build_map(Target target, const BraidedContext& ctx, const Semigroup& alpha, TwoSimplex tau,
                             TwoSimplex eps, bool strong = false) {
  return build_map(SimplicialMapC{target, ctx, alpha, std::move(tau), std::move(eps)}, strong);
}

/// Checks that the image of an arbitrary simplex of C is a simplex of the
/// target: its triangle image for n = 2, and a filler for every 4-vertex face
/// for n >= 3 (the targets are coskeletal above dimension 3).
inline Report image_check(const SimplicialMapC& f, const CatalanSimplex& x, bool strong = false) {
  Report r;
  const std::size_t n = x.dim();
  if (n == 2) r.append(validate_2simplex(f.target, f.ctx, image(f, x.triangle(0, 1, 2))));
  if (n < 3) return r;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k)
        for (std::size_t l = k + 1; l <= n; ++l) {
          const auto sub = x.restrict_to({i, j, k, l});
          const std::string prefix = "[" + std::to_string(i) + std::to_string(j) + std::to_string(k) +
                                     std::to_string(l) + "].";
          r.append(filler_report(f.target, f.ctx, image_boundary(f, sub), strong), prefix);
        }
  return r;
}

namespace detail {

inline TwoSimplex tau_simplex(const Semigroup& a) { return {a, a, a, {}, {}, {}, {}}; }
inline TwoSimplex eps_simplex(const Semigroup& a) {
  const Semigroup unit = Semigroup::unit(a.field());
  return {unit, a, unit, {}, {}, {}, {}};
}

inline void require_target(const SimplicialMapC& f, Target t) {
  if (f.target != t) throw PreconditionError("expected a map into " + to_string(t) + ", got " + to_string(f.target));
}

inline void require_valid(const SimplicialMapC& f) {
  const auto built = build_map(f);
  if (!built.ok()) throw PreconditionError("not a simplicial map: " + built.report.first_failure()->id + " fails");
}

}  // namespace detail

/// The map C -> M1 determined by a semigroup and a counital fusion morphism.
inline SimplicialMapC fusion_to_map(const BraidedContext& ctx, const Semigroup& s, const CounitalFusion& f) {
  SimplicialMapC out{Target::M1, ctx, s, detail::tau_simplex(s), detail::eps_simplex(s)};
  out.tau.phi = f.t;
  out.eps.phi = f.e;
  return out;
}

inline SimplicialMapC bimonoid_to_map(const BraidedContext& ctx, const MultiplierBimonoid& b) {
  SimplicialMapC out{Target::M12, ctx, b.semigroup, detail::tau_simplex(b.semigroup), detail::eps_simplex(b.semigroup)};
  out.tau.phi = b.t1;
  out.tau.psi = b.t2;
  out.eps.phi = b.e;
  out.eps.psi = b.e;
  return out;
}

inline SimplicialMapC bimonoid_to_map(const MultiplierBimonoid& b) {
  return bimonoid_to_map(BraidedContext::symmetric(b.field()), b);
}

/// Reads a multiplier bimonoid off a valid map into M12 and certifies
/// m = e1 . t1 on the result.
inline MultiplierBimonoid map_to_bimonoid(const SimplicialMapC& f) {
  detail::require_target(f, Target::M12);
  detail::require_valid(f);
  MultiplierBimonoid b{f.alpha, f.tau.component(Component::M1), f.tau.component(Component::M2),
                       f.eps.component(Component::M1)};
  const Mat one = f.ctx.id(b.dim());
  if (!(compose(f.ctx.tensor(b.e, one), b.t1) == b.semigroup.m))
    throw InvariantViolation("multiplication differs from e1 . t1 on a valid map");
  return b;
}

inline SimplicialMapC regular_to_map(const BraidedContext& ctx, const RegularMultiplierBimonoid& r) {
  SimplicialMapC out = bimonoid_to_map(ctx, r.bimonoid);
  out.target = Target::M;
  out.tau.phi_bar = r.t3;
  out.tau.psi_bar = r.t4;
  out.eps.phi_bar = r.e_prime;
  out.eps.psi_bar = r.e_prime;
  return out;
}

inline SimplicialMapC regular_to_map(const RegularMultiplierBimonoid& r) {
  return regular_to_map(BraidedContext::symmetric(r.field()), r);
}

inline RegularMultiplierBimonoid map_to_regular(const SimplicialMapC& f) {
  detail::require_target(f, Target::M);
  detail::require_valid(f);
  return {MultiplierBimonoid{f.alpha, f.tau.component(Component::M1), f.tau.component(Component::M2),
                             f.eps.component(Component::M1)},
          f.tau.component(Component::M3), f.tau.component(Component::M4), f.eps.component(Component::M3)};
}

}  // namespace mbm
