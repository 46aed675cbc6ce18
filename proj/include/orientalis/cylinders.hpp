#ifndef ORIENTALIS_CYLINDERS_HPP
#define ORIENTALIS_CYLINDERS_HPP

#include "orientalis/expansion.hpp"
#include "orientalis/steiner.hpp"

#include <functional>

namespace orientalis {

/// Concrete n-cylinder from `top` to `bottom`: auxiliary cells
/// s a_0, t a_0, ..., s a_{n-1}, t a_{n-1} (cell of index i has dimension
/// i+1) and a principal cell of dimension n+1.
struct Cylinder {
    int n = 0;
    std::vector<Cell> aux; // 2n cells, alternating source/target
    Cell principal;
    Cell top;
    Cell bottom;

    const Cell& aux_cell(Sign eps, int i) const;
};

/// Cone of origin `origin`: a cylinder whose top is the iterated unit on the
/// origin. The bottom is called the basis.
struct Cone {
    int n = 0;
    GenKey origin;
    std::vector<Cell> aux; // 2n cells, alternating source/target
    Cell principal;
    Cell basis;

    const Cell& aux_cell(Sign eps, int i) const;
};

Cylinder cone_to_cylinder(const Cone& c);

/// The (n-1)-cylinder keeping the auxiliary cells below the top level, with
/// principal cell eps a_{n-1}.
Cylinder cyl_boundary(Sign eps, const Cylinder& c, const Polygraph& ctx);
Cone cone_boundary(Sign eps, const Cone& c, const Polygraph& ctx);

/// All-unit cylinder on a cell.
Cylinder trivial_cylinder(const Cell& x, const Polygraph& ctx);

/// Unit cylinder: appends (a_p, a_p, 1_{a_p}).
Cylinder cyl_unit(const Cylinder& c);
Cone cone_unit(const Cone& c);

/// p-composition of cylinders; requires the p-boundaries to agree
/// componentwise by table equality. Throws CellError on mismatch at p.
Cylinder cyl_compose(int p, const Cylinder& a, const Cylinder& b,
                     const TableContext& tables);

/// p-composition of cones (the simplified formulas).
Cone cone_compose(int p, const Cone& a, const Cone& b, const TableContext& tables);

/// The unique degenerate cone of base x: s a_i = 1_{s x_i},
/// t a_i = s x_{i+1} (or x at the top), principal 1_x. Requires the 0-source
/// of x to be `origin`.
Cone degenerate_cone(const Cell& x, const GenKey& origin, const Polygraph& ctx);

/// The cone of the expanding homotopy at x: cells chevron(s x_0),
/// chevron(t x_0), ..., principal chevron(x), basis x.
Cone expansion_cone(const Cell& x, const ExpandedPolygraph& step);

bool is_degenerate(const Cone& c);

/// Source/target constraints of the concrete cylinder description, decided
/// by table equality.
ValidationReport validate_cylinder(const Cylinder& c, const Polygraph& ctx,
                                   const TableContext& tables);
ValidationReport validate_cone(const Cone& c, const Polygraph& ctx,
                               const TableContext& tables);

/// A composable pair sample for the oplax axioms: x and y have equal
/// dimension and t x_p = s y_p.
struct OplaxSample {
    int p = 0;
    Cell x;
    Cell y;
};

/// All table-composable pairs of (lifted) generators up to the given
/// dimension bound.
std::vector<OplaxSample> composable_generator_pairs(const Polygraph& pg, int max_dim,
                                                    const TableContext& tables);

/// Verifies the two oplax-transformation axioms for a cell assignment theta
/// (origin-based form): the whiskering identity on each sampled pair and
/// theta(1_u) = 1_theta(u) on each unit case.
ValidationReport oplax_check(const std::function<Cell(const Cell&)>& theta,
                             const std::vector<OplaxSample>& pairs,
                             const std::vector<Cell>& unit_cases,
                             const Polygraph& ctx, const TableContext& tables);

} // namespace orientalis

#endif
