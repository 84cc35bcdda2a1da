#pragma once

// Subcommand implementations for the mbm tool. Each writes its report to
// `out`, diagnostics to `err`, and returns the exit code:
// 0 all checks pass, 1 some check fails, 2 usage, parse or shape error.

#include <cstddef>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include "mbm/catalan.hpp"
#include "mbm/errors.hpp"
#include "mbm/generators.hpp"
#include "mbm/mcat.hpp"
#include "mbm/simplicial_models.hpp"
#include "mbm/structure_file.hpp"
#include "mbm/structures.hpp"

namespace mbm::cli {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

constexpr long kMaxCatalanDim = 8;

namespace detail {

inline int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kFail;
  }
}

inline StructureFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  return parse_structure(in);
}

inline int verdict(const Report& r) { return r.ok() ? kPass : kFail; }

inline void print_block(std::ostream& out, const std::string& title, const Mat& m) {
  out << title << ":\n";
  write_matrix_rows(out, m);
}

/// The candidate map C -> target read from the structure file.
inline SimplicialMapC map_from_file(const StructureFile& f, Target target) {
  const Semigroup a = f.semigroup();
  const Semigroup unit = Semigroup::unit(f.field());
  SimplicialMapC map{target, f.context(), a, TwoSimplex{a, a, a, {}, {}, {}, {}}, TwoSimplex{unit, a, unit, {}, {}, {}, {}}};
  for (Component c : components(target)) {
    const bool bar = c == Component::M3 || c == Component::M4;
    const char* t = c == Component::M1 ? "t1" : c == Component::M2 ? "t2" : c == Component::M3 ? "t3" : "t4";
    map.tau.slot(c) = f.get(t);
    map.eps.slot(c) = f.get(bar ? "e_prime" : "e");
  }
  return map;
}

}  // namespace detail

/// Structure suites for the file: the multiplier bimonoid suite, with
/// `regular` (or `strong`) the regular suite, with `derived` also (e)..(t).
inline int cmd_check(const std::string& path, bool regular, bool strong, bool derived, std::ostream& out,
                     std::ostream& err) {
  return detail::guarded(err, [&] {
    const StructureFile f = detail::load(path);
    const BraidedContext ctx = f.context();
    Report r;
    if (regular || strong || derived) {
      const auto reg = f.regular();
      r = check_regular(ctx, reg, strong);
      if (derived) r.append(check_derived_conditions(ctx, reg));
    } else {
      r = check_multiplier_bimonoid(ctx, f.bimonoid());
    }
    r.print(out);
    return detail::verdict(r);
  });
}

/// Catalan n-simplices: the count, then one "name: faces" row per simplex.
/// With `nondegenerate` only non-degenerate ones are listed; with
/// `count_only` only the count is printed.
inline int cmd_catalan(long n, bool count_only, bool nondegenerate, std::ostream& out, std::ostream& err) {
  if (n < 0 || n > kMaxCatalanDim) {
    err << "error: dimension must be between 0 and " << kMaxCatalanDim << '\n';
    return kUsage;
  }
  const auto cells = nondegenerate ? nondegenerate_cells(static_cast<std::size_t>(n))
                                   : enumerate(static_cast<std::size_t>(n));
  if (count_only) {
    out << cells.size() << '\n';
    return kPass;
  }
  if (!nondegenerate) out << cells.size() << '\n';
  for (const auto& x : cells) out << name(x) << ": " << face_tuple(x) << '\n';
  return kPass;
}

/// Builds the simplicial map C -> target from the file and prints every
/// condition of its 2-simplex images and of the fillers of phi, lambda, rho, kappa.
inline int cmd_map(const std::string& path, const std::string& target_name, bool strong, std::ostream& out,
                   std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto target = parse_target(target_name);
    if (!target) throw std::invalid_argument("unknown target '" + target_name + "' (m1 m2 m3 m4 m12 m34 m)");
    const StructureFile f = detail::load(path);
    const BuildResult built = build_map(detail::map_from_file(f, *target), strong);
    built.report.print(out);
    return detail::verdict(built.report);
  });
}

/// Writes the canonical structure file for the function algebra ("fun") or
/// group algebra ("group") of a named group or a group-table file.
inline int cmd_example(const std::string& group, unsigned p, const std::string& algebra, bool regular,
                       std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    std::optional<FiniteGroupSpec> g = FiniteGroupSpec::by_name(group);
    if (!g) {
      std::ifstream in(group);
      if (!in) throw std::invalid_argument("unknown group '" + group + "' (trivial, z<n>, v4, s3 or a table file)");
      g = parse_group_table(in);
    }
    const FieldSpec field(p);
    if (algebra != "fun" && algebra != "group")
      throw std::invalid_argument("unknown algebra '" + algebra + "' (fun or group)");
    const bool fun = algebra == "fun";
    const MultiplierBimonoid b = fun ? function_bimonoid(*g, field) : group_algebra_bimonoid(*g, field);
    const std::string comment = (fun ? "function algebra of " : "group algebra of ") + group + " over GF(" +
                                std::to_string(p) + ")";
    if (regular) {
      if (auto r = regular_extension(b, &*g)) {
        write_structure(out, to_structure_file(*r), comment);
        return kPass;
      }
      err << "note: no regular extension found in the searched family; writing the plain structure\n";
    }
    write_structure(out, to_structure_file(b), comment);
    return kPass;
  });
}

/// Q-membership, the comultiplication and counit in M, the comonoid laws,
/// and the multiplier monoid of A.
inline int cmd_comonoid(const std::string& path, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const StructureFile f = detail::load(path);
    const MultiplierBimonoid b = f.bimonoid();
    if (!f.context().is_symmetric_flip()) throw std::invalid_argument("comonoid extraction needs the symmetric braiding");
    const SimplicialMapC map = bimonoid_to_map(b);

    Report q;
    q.append(q_membership(b.semigroup), "q1.");
    q.append(q_membership(map.tau), "q2.");
    q.print(out);
    const ComonoidExtraction ex = assemble_comonoid(b);
    ex.q.print(out);
    if (!q.ok() || !ex.q.ok()) return kFail;

    detail::print_block(out, "d1", ex.comult->f1);
    detail::print_block(out, "d2", ex.comult->f2);
    detail::print_block(out, "counit", ex.counit->f1);

    Report laws;
    laws.append(check_mmorphism(*ex.comult), "comult.");
    laws.append(check_mmorphism(*ex.counit), "counit.");
    laws.add_flag("nerve-tau", nerve_map(map.tau) == *ex.comult);
    laws.add_flag("nerve-eps", nerve_map(map.eps) == *ex.counit);

    const MultiplierMonoid mb = multiplier_monoid(b.semigroup);
    out << "dim M(B) = " << mb.dim << '\n';
    detail::print_block(out, "M(B) unit", mb.unit);
    detail::print_block(out, "M(B) product", mb.product);
    laws.append(universal_property(mb, identity_M(b.semigroup)), "universal.");
    laws.append(comonoid_laws(*ex.comult, *ex.counit));
    laws.print(out);
    return detail::verdict(laws);
  });
}

}  // namespace mbm::cli
