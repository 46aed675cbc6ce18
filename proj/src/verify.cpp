#include "orientalis/verify.hpp"

#include "orientalis/cylinders.hpp"

#include <chrono>

namespace orientalis {

bool VerifyReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::string VerifyReport::to_text() const {
    std::string out;
    for (const auto& c : checks) {
        char line[64];
        std::snprintf(line, sizeof(line), "%-16s %s  (%.3fs)", c.name.c_str(),
                      c.passed ? "pass" : "FAIL", c.seconds);
        out += line;
        if (!c.detail.empty()) {
            out += "  ";
            out += c.detail;
        }
        out += '\n';
    }
    out += all_passed() ? "verify: all checks passed\n" : "verify: FAILED\n";
    return out;
}

const std::vector<std::string>& verify_check_names() {
    static const std::vector<std::string> names = {
        "atomicity",  "loop-free",  "lin-boundary",   "compare",
        "monad-laws", "simplicial", "oplax",          "chain-homotopy"};
    return names;
}

ValidationReport monad_law_check(int unit_max, int assoc_max, OrientalTower& tower) {
    ValidationReport report;
    for (int k = 0; k <= std::max(unit_max, assoc_max); ++k) tower.context(k);
    for (int k = 1; k <= unit_max; ++k) {
        auto step_k = tower.step(k);        // builds O_k from O_{k-1}
        auto step_k1 = tower.step(k + 1);   // builds O_{k+1} from O_k
        GenMap mu_k = mu(*step_k, *step_k1);
        GenMap id_k = identity_map(tower.oriental(k));
        report.merge(genmap_eq_tables(
            compose_maps(mu_k, eta(*step_k1)), id_k,
            "unit law mu o eta on O_" + std::to_string(k)));
        report.merge(genmap_eq_tables(
            compose_maps(mu_k, T_on_map(eta(*step_k), *step_k, *step_k1)), id_k,
            "unit law mu o T(eta) on O_" + std::to_string(k)));
    }
    for (int k = 2; k <= assoc_max; ++k) {
        // C = O_{k-3}: both sides map T^3 C = O_k to T C = O_{k-2}.
        GenMap mu_c = mu(*tower.step(k - 2), *tower.step(k - 1));
        GenMap mu_tc = mu(*tower.step(k - 1), *tower.step(k));
        GenMap t_mu = T_on_map(mu_c, *tower.step(k), *tower.step(k - 1));
        report.merge(genmap_eq_tables(
            compose_maps(mu_c, t_mu), compose_maps(mu_c, mu_tc),
            "associativity on O_" + std::to_string(k)));
    }
    return report;
}

ValidationReport monad_route_check(int n, OrientalTower& tower) {
    ValidationReport report;
    for (int m = 0; m <= n; ++m) tower.context(m);
    for (int m = 0; m <= n; ++m) {
        for (int i = 0; i <= m; ++i) {
            report.merge(genmap_eq_tables(
                face_map_monad(i, m, tower), face_map(i, m, tower),
                "face route (i=" + std::to_string(i) + ", n=" + std::to_string(m) +
                    ")"));
            report.merge(genmap_eq_tables(
                degeneracy_map_monad(i, m, tower), degeneracy_map(i, m, tower),
                "degeneracy route (i=" + std::to_string(i) + ", n=" +
                    std::to_string(m) + ")"));
        }
    }
    return report;
}

ValidationReport lambda_cosimplicial_check(int n, OrientalTower& tower) {
    ValidationReport report;
    auto check_map = [&](const MonotoneMap& phi, const std::string& label) {
        GenMap f = cosimplicial_map(phi, tower);
        for (const auto& g : f.source->all_generators()) {
            // Simplicial chain map: apply phi to the tuple, zero on repeats.
            std::vector<int> mapped;
            mapped.reserve(g.entries().size());
            for (int v : g.entries()) mapped.push_back(phi(v));
            bool strict = true;
            for (std::size_t i = 1; i < mapped.size(); ++i)
                if (mapped[i] <= mapped[i - 1]) strict = false;
            Chain expected(g.dim());
            if (strict) expected.add(GenKey::tuple(mapped), 1);
            report.note(linearize(f.image(g)) == expected,
                        label + ": linearized image of " + g.to_string() +
                            " differs from the chain map");
        }
    };
    for (int m = 0; m <= n; ++m) {
        for (int i = 0; i <= m; ++i) {
            check_map(MonotoneMap::face(i, m),
                      "lambda of face (i=" + std::to_string(i) + ", n=" +
                          std::to_string(m) + ")");
            check_map(MonotoneMap::degeneracy(i, m),
                      "lambda of degeneracy (i=" + std::to_string(i) + ", n=" +
                          std::to_string(m) + ")");
        }
    }
    return report;
}

ValidationReport expansion_axiom_check(int n, int dim_bound, OrientalTower& tower) {
    ValidationReport report;
    for (int k = 1; k <= std::min(n, dim_bound); ++k) {
        auto step = tower.step(k);
        auto ctx = tower.context(k);
        const Polygraph& pg = step->result();
        for (const auto& g : pg.all_generators()) {
            Cone cone = expansion_cone(Cell::gen(g), *step);
            auto r = validate_cone(cone, pg, *ctx);
            report.note(r.ok(), "expansion cone of " + g.to_string() + " in O_" +
                                    std::to_string(k) + ": " +
                                    (r.ok() ? "" : r.failures.front()));
        }
        auto theta = [&](const Cell& e) { return step->chevron(e); };
        std::vector<Cell> units;
        for (const auto& g : pg.all_generators()) units.push_back(Cell::gen(g));
        auto pairs = composable_generator_pairs(pg, k, *ctx);
        report.merge(oplax_check(theta, pairs, units, pg, *ctx));
        // Degeneracy axioms: chevron of a chevron is a unit, and the origin's
        // chevron is the unit on the origin.
        Cell origin = Cell::gen(step->origin());
        report.note(ctx->cell_eq(step->chevron(origin), Cell::unit(origin)),
                    "chevron of the origin is not the origin unit in O_" +
                        std::to_string(k));
        for (const auto& g : pg.all_generators()) {
            Cell chev = step->chevron(Cell::gen(g));
            report.note(ctx->cell_eq(step->chevron(chev), Cell::unit(chev)),
                        "chevron-of-chevron is not a unit at " + g.to_string() +
                            " in O_" + std::to_string(k));
        }
        // The same degeneracy on sampled composites.
        for (const auto& sample : pairs) {
            Cell composite = compose(sample.p, sample.x, sample.y);
            Cell chev = step->chevron(composite);
            report.note(ctx->cell_eq(step->chevron(chev), Cell::unit(chev)),
                        "chevron-of-chevron fails on a composite in O_" +
                            std::to_string(k));
        }
    }
    return report;
}

ValidationReport chain_homotopy_check(int n, OrientalTower& tower) {
    ValidationReport report;
    for (int k = 0; k <= n; ++k) {
        auto step = tower.step(k);
        auto ctx = tower.context(k);
        const AugDirComplex& l = ctx->lambda();
        const Polygraph& pg = step->result();
        Chain origin_chain = Chain::basis(GenKey::tuple({0}));
        // h extends g -> [chevron g] linearly.
        auto h = [&](const Chain& z) {
            Chain out(z.dim() + 1);
            for (const auto& [g, c] : z.terms())
                out += linearize(step->chevron(Cell::gen(g))).scaled(c);
            return out;
        };
        for (int m = 0; m <= pg.max_dim(); ++m) {
            for (const auto& g : pg.generators(m)) {
                Chain gc = Chain::basis(g);
                Chain lhs = h(gc).dim() >= 1 ? l.diff(h(gc)) : Chain(0);
                Chain rhs = gc;
                if (m == 0)
                    rhs -= origin_chain; // augmentation section sends 1 to [v]
                else
                    lhs += h(l.diff(gc));
                report.note(lhs == rhs, "chain homotopy fails at " + g.to_string() +
                                            " in O_" + std::to_string(k));
            }
        }
    }
    return report;
}

VerifyReport run_verify(int n, const std::vector<std::string>& only,
                        OrientalTower& tower) {
    VerifyReport report;
    report.n = n;
    auto selected = [&](const std::string& name) {
        if (only.empty()) return true;
        for (const auto& o : only)
            if (o == name) return true;
        return false;
    };
    auto run = [&](const std::string& name, auto&& fn) {
        if (!selected(name)) return;
        auto start = std::chrono::steady_clock::now();
        ValidationReport r = fn();
        auto stop = std::chrono::steady_clock::now();
        CheckResult result;
        result.name = name;
        result.passed = r.ok();
        result.seconds = std::chrono::duration<double>(stop - start).count();
        result.detail = r.ok() ? std::to_string(r.checks_run) + " checks"
                               : r.failures.front();
        report.checks.push_back(std::move(result));
    };

    run("atomicity", [&] { return atomic_check(*tower.oriental(n)); });
    run("loop-free", [&] { return strong_loop_free_check(tower.context(n)->lambda()); });
    run("lin-boundary", [&] { return lin_boundary_check(*tower.oriental(n)); });
    run("compare", [&] {
        ValidationReport r;
        auto verdict = compare(*tower.oriental(n), simplex_adc(n),
                               [](const GenKey& k) { return k; });
        r.note(verdict.certified, "comparison with the simplex complex failed: " +
                                      verdict.failure);
        r.merge(lambda_cosimplicial_check(n, tower));
        return r;
    });
    run("monad-laws", [&] { return monad_law_check(n, n, tower); });
    run("simplicial", [&] {
        ValidationReport r = verify_simplicial_identities(n, tower);
        r.merge(monad_route_check(n, tower));
        return r;
    });
    run("oplax", [&] { return expansion_axiom_check(n, 4, tower); });
    run("chain-homotopy", [&] { return chain_homotopy_check(n, tower); });
    return report;
}

VerifyReport run_verify_static(const std::shared_ptr<const Polygraph>& s,
                               const std::vector<std::string>& only) {
    VerifyReport report;
    report.n = s->max_dim();
    auto selected = [&](const std::string& name) {
        if (only.empty()) return true;
        for (const auto& o : only)
            if (o == name) return true;
        return false;
    };
    auto run = [&](const std::string& name, auto&& fn) {
        if (!selected(name)) return;
        auto start = std::chrono::steady_clock::now();
        ValidationReport r = fn();
        auto stop = std::chrono::steady_clock::now();
        CheckResult result;
        result.name = name;
        result.passed = r.ok();
        result.seconds = std::chrono::duration<double>(stop - start).count();
        result.detail = r.ok() ? std::to_string(r.checks_run) + " checks"
                               : r.failures.front();
        report.checks.push_back(std::move(result));
    };
    run("validate", [&] { return validate(*s); });
    run("atomicity", [&] { return atomic_check(*s); });
    run("loop-free", [&] { return strong_loop_free_check(lambda(*s)); });
    run("lin-boundary", [&] { return lin_boundary_check(*s); });
    run("compare", [&] {
        ValidationReport r;
        auto verdict = compare(*s, simplex_adc(s->max_dim()),
                               [](const GenKey& k) { return k; });
        r.note(verdict.certified, "comparison with the simplex complex failed: " +
                                      verdict.failure);
        return r;
    });
    return report;
}

} // namespace orientalis
