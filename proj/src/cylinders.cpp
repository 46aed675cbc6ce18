#include "orientalis/cylinders.hpp"

namespace orientalis {

namespace {

const Cell& aux_at(const std::vector<Cell>& aux, Sign eps, int i) {
    std::size_t idx = 2 * static_cast<std::size_t>(i) + (eps == Sign::Pos ? 1 : 0);
    if (idx >= aux.size()) throw CellError("auxiliary cell index out of range");
    return aux[idx];
}

} // namespace

const Cell& Cylinder::aux_cell(Sign eps, int i) const { return aux_at(aux, eps, i); }
const Cell& Cone::aux_cell(Sign eps, int i) const { return aux_at(aux, eps, i); }

Cylinder cone_to_cylinder(const Cone& c) {
    Cylinder out;
    out.n = c.n;
    out.aux = c.aux;
    out.principal = c.principal;
    out.top = Cell::unit_n(Cell::gen(c.origin), c.n);
    out.bottom = c.basis;
    return out;
}

Cylinder cyl_boundary(Sign eps, const Cylinder& c, const Polygraph& ctx) {
    if (c.n == 0) throw CellError("boundary of a 0-cylinder");
    Cylinder out;
    out.n = c.n - 1;
    out.aux.assign(c.aux.begin(), c.aux.begin() + 2 * (c.n - 1));
    out.principal = c.aux_cell(eps, c.n - 1);
    out.top = boundary(eps, c.top, ctx);
    out.bottom = boundary(eps, c.bottom, ctx);
    return out;
}

Cone cone_boundary(Sign eps, const Cone& c, const Polygraph& ctx) {
    if (c.n == 0) throw CellError("boundary of a 0-cone");
    Cone out;
    out.n = c.n - 1;
    out.origin = c.origin;
    out.aux.assign(c.aux.begin(), c.aux.begin() + 2 * (c.n - 1));
    out.principal = c.aux_cell(eps, c.n - 1);
    out.basis = boundary(eps, c.basis, ctx);
    return out;
}

Cylinder trivial_cylinder(const Cell& x, const Polygraph& ctx) {
    Cylinder out;
    out.n = x.dim();
    for (int i = 0; i < out.n; ++i) {
        out.aux.push_back(Cell::unit(iterated_boundary(Sign::Neg, i, x, ctx)));
        out.aux.push_back(Cell::unit(iterated_boundary(Sign::Pos, i, x, ctx)));
    }
    out.principal = Cell::unit(x);
    out.top = x;
    out.bottom = x;
    return out;
}

Cylinder cyl_unit(const Cylinder& c) {
    Cylinder out;
    out.n = c.n + 1;
    out.aux = c.aux;
    out.aux.push_back(c.principal);
    out.aux.push_back(c.principal);
    out.principal = Cell::unit(c.principal);
    out.top = Cell::unit(c.top);
    out.bottom = Cell::unit(c.bottom);
    return out;
}

Cone cone_unit(const Cone& c) {
    Cone out;
    out.n = c.n + 1;
    out.origin = c.origin;
    out.aux = c.aux;
    out.aux.push_back(c.principal);
    out.aux.push_back(c.principal);
    out.principal = Cell::unit(c.principal);
    out.basis = Cell::unit(c.basis);
    return out;
}

namespace {

bool table_eq(const TableContext& tables, const Cell& a, const Cell& b) {
    return tables.cell_eq(a, b);
}

void require_composable(int p, const std::vector<Cell>& a_aux,
                        const std::vector<Cell>& b_aux, const Cell& a_pos,
                        const Cell& b_neg, const TableContext& tables) {
    for (int i = 0; i < p; ++i) {
        if (!table_eq(tables, aux_at(a_aux, Sign::Neg, i), aux_at(b_aux, Sign::Neg, i)) ||
            !table_eq(tables, aux_at(a_aux, Sign::Pos, i), aux_at(b_aux, Sign::Pos, i)))
            throw CellError("cylinders not composable: auxiliary cells differ at level " +
                            std::to_string(i));
    }
    if (!table_eq(tables, a_pos, b_neg))
        throw CellError("cylinders not composable: boundary mismatch at dimension " +
                        std::to_string(p));
}

} // namespace

Cylinder cyl_compose(int p, const Cylinder& a, const Cylinder& b,
                     const TableContext& tables) {
    const Polygraph& ctx = tables.polygraph();
    int n = a.n;
    if (b.n != n) throw CellError("cylinder composition needs equal dimensions");
    if (p < 0 || p >= n) throw CellError("cylinder composition position out of range");
    require_composable(p, a.aux, b.aux, a.aux_cell(Sign::Pos, p),
                       b.aux_cell(Sign::Neg, p), tables);
    if (!table_eq(tables, iterated_boundary(Sign::Pos, p, a.top, ctx),
                  iterated_boundary(Sign::Neg, p, b.top, ctx)) ||
        !table_eq(tables, iterated_boundary(Sign::Pos, p, a.bottom, ctx),
                  iterated_boundary(Sign::Neg, p, b.bottom, ctx)))
        throw CellError("cylinder tops/bottoms not composable at " + std::to_string(p));

    Cylinder out;
    out.n = n;
    out.top = compose(p, a.top, b.top);
    out.bottom = compose(p, a.bottom, b.bottom);
    for (int i = 0; i < p; ++i) {
        out.aux.push_back(a.aux_cell(Sign::Neg, i));
        out.aux.push_back(a.aux_cell(Sign::Pos, i));
    }
    if (p < n) {
        out.aux.push_back(a.aux_cell(Sign::Neg, p));
        out.aux.push_back(b.aux_cell(Sign::Pos, p));
    }

    // (lead o_0 s a_0 o_1 ... o_{p-1} s a_{p-1} o_p core_a)
    //   o_{p+1} (core_b o_p t b_{p-1} o_{p-1} ... o_1 t b_0 o_0 tail)
    auto whisker = [&](const Cell& lead, const Cell& core_a, const Cell& core_b,
                       const Cell& tail) {
        Cell left = lead;
        for (int q = 0; q < p; ++q) left = compose(q, a.aux_cell(Sign::Neg, q), left);
        left = compose(p, core_a, left);
        Cell inner = tail;
        for (int q = 0; q < p; ++q) inner = compose(q, inner, b.aux_cell(Sign::Pos, q));
        Cell right = compose(p, inner, core_b);
        return compose(p + 1, right, left);
    };

    for (int i = p + 1; i < n; ++i) {
        for (Sign eps : {Sign::Neg, Sign::Pos}) {
            Cell lead, tail;
            if (i == p + 1) {
                lead = iterated_boundary(eps, p + 1, b.bottom, ctx);
                tail = iterated_boundary(eps, p + 1, a.top, ctx);
            } else {
                lead = iterated_boundary(Sign::Pos, p + 1, b.bottom, ctx);
                tail = iterated_boundary(Sign::Neg, p + 1, a.top, ctx);
            }
            out.aux.push_back(whisker(lead, a.aux_cell(eps, i), b.aux_cell(eps, i), tail));
        }
    }
    out.principal = whisker(iterated_boundary(Sign::Pos, p + 1, b.bottom, ctx),
                            a.principal, b.principal,
                            iterated_boundary(Sign::Neg, p + 1, a.top, ctx));
    return out;
}

Cone cone_compose(int p, const Cone& a, const Cone& b, const TableContext& tables) {
    const Polygraph& ctx = tables.polygraph();
    int n = a.n;
    if (b.n != n) throw CellError("cone composition needs equal dimensions");
    if (p < 0 || p >= n) throw CellError("cone composition position out of range");
    if (!(a.origin == b.origin)) throw CellError("cone composition needs equal origins");
    require_composable(p, a.aux, b.aux, a.aux_cell(Sign::Pos, p),
                       b.aux_cell(Sign::Neg, p), tables);
    if (!table_eq(tables, iterated_boundary(Sign::Pos, p, a.basis, ctx),
                  iterated_boundary(Sign::Neg, p, b.basis, ctx)))
        throw CellError("cone bases not composable at " + std::to_string(p));

    Cone out;
    out.n = n;
    out.origin = a.origin;
    out.basis = compose(p, a.basis, b.basis);
    for (int i = 0; i < p; ++i) {
        out.aux.push_back(a.aux_cell(Sign::Neg, i));
        out.aux.push_back(a.aux_cell(Sign::Pos, i));
    }
    out.aux.push_back(a.aux_cell(Sign::Neg, p));
    out.aux.push_back(b.aux_cell(Sign::Pos, p));

    // lead o_0 s a_0 o_1 ... o_{p-1} s a_{p-1} o_p core_a o_{p+1} core_b
    auto whisker = [&](const Cell& lead, const Cell& core_a, const Cell& core_b) {
        Cell acc = lead;
        for (int q = 0; q < p; ++q) acc = compose(q, a.aux_cell(Sign::Neg, q), acc);
        acc = compose(p, core_a, acc);
        return compose(p + 1, core_b, acc);
    };

    for (int i = p + 1; i < n; ++i) {
        for (Sign eps : {Sign::Neg, Sign::Pos}) {
            Cell lead = iterated_boundary(i == p + 1 ? eps : Sign::Pos, p + 1,
                                          b.basis, ctx);
            out.aux.push_back(whisker(lead, a.aux_cell(eps, i), b.aux_cell(eps, i)));
        }
    }
    out.principal = whisker(iterated_boundary(Sign::Pos, p + 1, b.basis, ctx),
                            a.principal, b.principal);
    return out;
}

Cone degenerate_cone(const Cell& x, const GenKey& origin, const Polygraph& ctx) {
    Cell source0 = iterated_boundary(Sign::Neg, 0, x, ctx);
    if (!(source0.key() == origin))
        throw CellError("degenerate cone: 0-source " + source0.key().to_string() +
                        " is not the origin " + origin.to_string());
    Cone out;
    out.n = x.dim();
    out.origin = origin;
    out.basis = x;
    for (int i = 0; i < out.n; ++i) {
        out.aux.push_back(Cell::unit(iterated_boundary(Sign::Neg, i, x, ctx)));
        out.aux.push_back(i == out.n - 1 ? x
                                         : iterated_boundary(Sign::Neg, i + 1, x, ctx));
    }
    out.principal = Cell::unit(x);
    return out;
}

Cone expansion_cone(const Cell& x, const ExpandedPolygraph& step) {
    const Polygraph& ctx = step.result();
    Cone out;
    out.n = x.dim();
    out.origin = step.origin();
    out.basis = x;
    for (int i = 0; i < out.n; ++i) {
        out.aux.push_back(step.chevron(iterated_boundary(Sign::Neg, i, x, ctx)));
        out.aux.push_back(step.chevron(iterated_boundary(Sign::Pos, i, x, ctx)));
    }
    out.principal = step.chevron(x);
    return out;
}

bool is_degenerate(const Cone& c) {
    if (c.principal.kind() != Cell::Kind::Unit) return false;
    for (int i = 0; i < c.n; ++i)
        if (c.aux_cell(Sign::Neg, i).kind() != Cell::Kind::Unit) return false;
    return true;
}

ValidationReport validate_cylinder(const Cylinder& c, const Polygraph& ctx,
                                   const TableContext& tables) {
    ValidationReport report;
    if (static_cast<int>(c.aux.size()) != 2 * c.n || !c.principal || !c.top ||
        !c.bottom || c.top.dim() != c.n || c.bottom.dim() != c.n ||
        c.principal.dim() != c.n + 1) {
        report.fail("malformed cylinder data");
        return report;
    }
    for (int i = 0; i < c.n; ++i)
        for (Sign eps : {Sign::Neg, Sign::Pos})
            report.note(c.aux_cell(eps, i).dim() == i + 1,
                        "auxiliary cell at level " + std::to_string(i) +
                            " has wrong dimension");
    if (!report.ok()) return report;

    auto eq = [&](const Cell& a, const Cell& b) {
        try {
            return tables.cell_eq(a, b);
        } catch (const CellError&) {
            return false; // ill-formed constraint expression
        }
    };
    // eps a_i : t a_{i-1} o_{i-1} ... o_0 (eps x_i) -> (eps y_i) o_0 s a_0 ...
    auto check_cell = [&](const Cell& cell, Sign eps, int i, const std::string& name) {
        Cell lhs = iterated_boundary(eps, i, c.top, ctx);
        for (int q = 0; q < i; ++q) lhs = compose(q, lhs, c.aux_cell(Sign::Pos, q));
        Cell rhs = iterated_boundary(eps, i, c.bottom, ctx);
        for (int q = 0; q < i; ++q) rhs = compose(q, c.aux_cell(Sign::Neg, q), rhs);
        report.note(eq(boundary(Sign::Neg, cell, ctx), lhs),
                    name + ": source constraint fails");
        report.note(eq(boundary(Sign::Pos, cell, ctx), rhs),
                    name + ": target constraint fails");
    };
    for (int i = 0; i < c.n; ++i)
        for (Sign eps : {Sign::Neg, Sign::Pos})
            check_cell(c.aux_cell(eps, i), eps, i,
                       std::string(eps == Sign::Neg ? "s" : "t") + " a_" +
                           std::to_string(i));
    // Principal: the same shape at the top dimension, eps irrelevant.
    {
        Cell lhs = c.top;
        for (int q = 0; q < c.n; ++q) lhs = compose(q, lhs, c.aux_cell(Sign::Pos, q));
        Cell rhs = c.bottom;
        for (int q = 0; q < c.n; ++q) rhs = compose(q, c.aux_cell(Sign::Neg, q), rhs);
        report.note(eq(boundary(Sign::Neg, c.principal, ctx), lhs),
                    "principal cell: source constraint fails");
        report.note(eq(boundary(Sign::Pos, c.principal, ctx), rhs),
                    "principal cell: target constraint fails");
    }
    return report;
}

ValidationReport validate_cone(const Cone& c, const Polygraph& ctx,
                               const TableContext& tables) {
    ValidationReport report;
    if (static_cast<int>(c.aux.size()) != 2 * c.n || !c.principal || !c.basis ||
        c.basis.dim() != c.n || c.principal.dim() != c.n + 1) {
        report.fail("malformed cone data");
        return report;
    }
    for (int i = 0; i < c.n; ++i)
        for (Sign eps : {Sign::Neg, Sign::Pos})
            report.note(c.aux_cell(eps, i).dim() == i + 1,
                        "auxiliary cell at level " + std::to_string(i) +
                            " has wrong dimension");
    if (!report.ok()) return report;

    auto eq = [&](const Cell& a, const Cell& b) {
        try {
            return tables.cell_eq(a, b);
        } catch (const CellError&) {
            return false;
        }
    };
    Cell origin = Cell::gen(c.origin);
    // eps a_0 : v -> eps x_0; for 0 < i < n,
    // eps a_i : t a_{i-1} -> (eps x_i) o_0 s a_0 o_1 ... o_{i-1} s a_{i-1};
    // the principal cell has the same shape at the top with eps x_n = x.
    auto target_of = [&](int i, Sign eps) {
        Cell rhs = iterated_boundary(eps, i, c.basis, ctx);
        for (int q = 0; q < i; ++q) rhs = compose(q, c.aux_cell(Sign::Neg, q), rhs);
        return rhs;
    };
    for (int i = 0; i < c.n; ++i) {
        for (Sign eps : {Sign::Neg, Sign::Pos}) {
            const Cell& cell = c.aux_cell(eps, i);
            std::string name = std::string(eps == Sign::Neg ? "s" : "t") + " a_" +
                               std::to_string(i);
            Cell lhs = i == 0 ? origin : c.aux_cell(Sign::Pos, i - 1);
            report.note(eq(boundary(Sign::Neg, cell, ctx), lhs),
                        name + ": source constraint fails");
            report.note(eq(boundary(Sign::Pos, cell, ctx), target_of(i, eps)),
                        name + ": target constraint fails");
        }
    }
    Cell lhs = c.n == 0 ? origin : c.aux_cell(Sign::Pos, c.n - 1);
    report.note(eq(boundary(Sign::Neg, c.principal, ctx), lhs),
                "principal cell: source constraint fails");
    Cell rhs = c.basis;
    for (int q = 0; q < c.n; ++q) rhs = compose(q, c.aux_cell(Sign::Neg, q), rhs);
    report.note(eq(boundary(Sign::Pos, c.principal, ctx), rhs),
                "principal cell: target constraint fails");
    return report;
}

std::vector<OplaxSample> composable_generator_pairs(const Polygraph& pg, int max_dim,
                                                    const TableContext& tables) {
    std::vector<OplaxSample> out;
    std::vector<GenKey> gens;
    for (int d = 0; d <= std::min(max_dim, pg.max_dim()); ++d)
        for (const auto& g : pg.generators(d)) gens.push_back(g);
    for (const auto& gx : gens) {
        for (const auto& gy : gens) {
            int n = std::max(gx.dim(), gy.dim());
            if (n == 0) continue;
            Cell x = Cell::unit_n(Cell::gen(gx), n - gx.dim());
            Cell y = Cell::unit_n(Cell::gen(gy), n - gy.dim());
            for (int p = 0; p < n; ++p) {
                CellTable tx = table_boundary_i(Sign::Pos, p, tables.eval(x));
                CellTable sy = table_boundary_i(Sign::Neg, p, tables.eval(y));
                if (tx == sy) out.push_back({p, x, y});
            }
        }
    }
    return out;
}

ValidationReport oplax_check(const std::function<Cell(const Cell&)>& theta,
                             const std::vector<OplaxSample>& pairs,
                             const std::vector<Cell>& unit_cases,
                             const Polygraph& ctx, const TableContext& tables) {
    ValidationReport report;
    // An assignment that produces a non-composable right-hand side fails the
    // axiom as well; the table engine surfaces that as a CellError.
    auto eq = [&](const Cell& a, const Cell& b) {
        try {
            return tables.cell_eq(a, b);
        } catch (const CellError&) {
            return false;
        }
    };
    for (const auto& sample : pairs) {
        Cell composite = compose(sample.p, sample.x, sample.y);
        Cell lhs = theta(composite);
        Cell rhs = iterated_boundary(Sign::Pos, sample.p + 1, sample.y, ctx);
        for (int q = 0; q < sample.p; ++q)
            rhs = compose(q, theta(iterated_boundary(Sign::Neg, q, sample.x, ctx)), rhs);
        rhs = compose(sample.p, theta(sample.x), rhs);
        rhs = compose(sample.p + 1, theta(sample.y), rhs);
        report.note(eq(lhs, rhs),
                    "composition axiom fails for p=" + std::to_string(sample.p) +
                        " pair (" + print_cell(sample.x) + ", " + print_cell(sample.y) +
                        ")");
    }
    for (const auto& u : unit_cases) {
        report.note(eq(theta(Cell::unit(u)), Cell::unit(theta(u))),
                    "unit axiom fails at " + print_cell(u));
    }
    return report;
}

} // namespace orientalis
