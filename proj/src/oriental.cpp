#include "orientalis/oriental.hpp"

namespace orientalis {

// ------------------------------------------------------------ MonotoneMap

MonotoneMap MonotoneMap::identity(int n) {
    MonotoneMap m{n, n, {}};
    for (int i = 0; i <= n; ++i) m.image.push_back(i);
    return m;
}

MonotoneMap MonotoneMap::face(int i, int n) {
    if (n < 0 || i < 0 || i > n) throw CellError("face index out of range");
    MonotoneMap m{n - 1, n, {}};
    for (int k = 0; k <= n - 1; ++k) m.image.push_back(k < i ? k : k + 1);
    return m;
}

MonotoneMap MonotoneMap::degeneracy(int i, int n) {
    if (n < 0 || i < 0 || i > n) throw CellError("degeneracy index out of range");
    MonotoneMap m{n + 1, n, {}};
    for (int k = 0; k <= n + 1; ++k) m.image.push_back(k <= i ? k : k - 1);
    return m;
}

MonotoneMap MonotoneMap::then(const MonotoneMap& next) const {
    if (to_n != next.from_n)
        throw CellError("monotone map composition endpoint mismatch");
    MonotoneMap m{from_n, next.to_n, {}};
    for (int v : image) m.image.push_back(next(v));
    return m;
}

void MonotoneMap::check() const {
    if (from_n < -1 || to_n < -1 ||
        image.size() != static_cast<std::size_t>(from_n) + 1)
        throw CellError("malformed monotone map");
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (image[i] < 0 || image[i] > to_n)
            throw CellError("monotone map value out of range");
        if (i > 0 && image[i] < image[i - 1])
            throw CellError("monotone map must be nondecreasing");
    }
}

// ---------------------------------------------------------- OrientalTower

OrientalTower::OrientalTower() : empty_(std::make_shared<Polygraph>()) {}

std::shared_ptr<const Polygraph> OrientalTower::oriental(int n) {
    if (n < -1) throw CellError("oriental index must be >= -1");
    if (n == -1) return empty_;
    return step(n)->result_ptr();
}

std::shared_ptr<const ExpandedPolygraph> OrientalTower::step(int n) {
    if (n < 0) throw CellError("expansion step index must be >= 0");
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<int>(steps_.size()) <= n) {
        auto prev = steps_.empty()
                        ? empty_
                        : steps_.back()->result_ptr();
        steps_.push_back(expand(prev, ExpandNaming::Simplicial));
    }
    return steps_[static_cast<std::size_t>(n)];
}

std::shared_ptr<TableContext> OrientalTower::context(int n) {
    auto pg = oriental(n);
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<int>(contexts_.size()) <= n + 1) contexts_.push_back(nullptr);
    auto& slot = contexts_[static_cast<std::size_t>(n) + 1];
    if (!slot) slot = context_for(pg);
    return slot;
}

OrientalTower& global_tower() {
    static OrientalTower tower;
    return tower;
}

// ------------------------------------------------------------------- simp

Cell simp(const std::vector<int>& seq, int n, OrientalTower& tower) {
    if (seq.empty()) throw CellError("empty simplicial sequence");
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 0 || seq[i] > n)
            throw CellError("sequence entry out of range for O_" + std::to_string(n));
        if (i > 0 && seq[i] < seq[i - 1])
            throw CellError("sequence must be nondecreasing");
    }
    if (seq.size() == 1) return Cell::gen(GenKey::tuple({seq[0]}));
    int d = seq[0];
    std::vector<int> inner(seq.begin() + 1, seq.end());
    for (int& v : inner) v -= d;
    Cell e = simp(inner, n - d, tower);
    e = tower.step(n - d)->chevron(e);
    for (int k = n - d + 1; k <= n; ++k) e = tower.step(k)->eta_expr(e);
    return e;
}

GenMap cosimplicial_map(const MonotoneMap& phi, OrientalTower& tower) {
    phi.check();
    GenMap f;
    f.source = tower.oriental(phi.from_n);
    f.target = tower.oriental(phi.to_n);
    for (const auto& g : f.source->all_generators()) {
        std::vector<int> seq;
        seq.reserve(g.entries().size());
        for (int v : g.entries()) seq.push_back(phi(v));
        f.images.emplace(g, simp(seq, phi.to_n, tower));
    }
    return f;
}

GenMap face_map(int i, int n, OrientalTower& tower) {
    return cosimplicial_map(MonotoneMap::face(i, n), tower);
}

GenMap degeneracy_map(int i, int n, OrientalTower& tower) {
    return cosimplicial_map(MonotoneMap::degeneracy(i, n), tower);
}

// The unit eta at O_{m-1} acts as the shift, the face missing 0; applying T
// once shifts the missing vertex up by one. Hence delta_i^n is T^i of the
// unit at O_{n-i-1}, and likewise sigma_i^n is T^i of the multiplication at
// O_{n-i-1}.

GenMap face_map_monad(int i, int n, OrientalTower& tower) {
    if (n < 0 || i < 0 || i > n) throw CellError("face index out of range");
    GenMap f = eta(*tower.step(n - i));
    for (int j = 1; j <= i; ++j)
        f = T_on_map(f, *tower.step(n - i + j - 1), *tower.step(n - i + j));
    return f;
}

GenMap degeneracy_map_monad(int i, int n, OrientalTower& tower) {
    if (n < 0 || i < 0 || i > n) throw CellError("degeneracy index out of range");
    GenMap f = mu(*tower.step(n - i), *tower.step(n - i + 1));
    for (int j = 1; j <= i; ++j)
        f = T_on_map(f, *tower.step(n - i + j + 1), *tower.step(n - i + j));
    return f;
}

// -------------------------------------------------------------- identities

ValidationReport genmap_eq_tables(const GenMap& f, const GenMap& g,
                                  const std::string& label) {
    ValidationReport report;
    if (f.source != g.source || f.target != g.target) {
        report.fail(label + ": map endpoints differ");
        return report;
    }
    auto ctx = context_for(f.target);
    for (const auto& k : f.source->all_generators()) {
        bool equal = ctx->cell_eq(f.image(k), g.image(k));
        report.note(equal, label + " differs at generator " + k.to_string());
    }
    return report;
}

ValidationReport verify_simplicial_identities(int n_max, OrientalTower& tower) {
    ValidationReport report;
    for (int n = 0; n <= n_max; ++n) tower.context(n); // pin the targets
    // delta_j delta_i = delta_i delta_{j-1} for i < j, inside O_{<= n_max}.
    for (int n = 0; n + 1 <= n_max; ++n) {
        for (int j = 1; j <= n + 1; ++j) {
            for (int i = 0; i < j; ++i) {
                auto lhs = compose_maps(face_map(j, n + 1, tower), face_map(i, n, tower));
                auto rhs = compose_maps(face_map(i, n + 1, tower),
                                        face_map(j - 1, n, tower));
                report.merge(genmap_eq_tables(
                    lhs, rhs,
                    "dd identity (i=" + std::to_string(i) + ", j=" +
                        std::to_string(j) + ", n=" + std::to_string(n) + ")"));
            }
        }
    }
    // sigma_j sigma_i = sigma_i sigma_{j+1} for i <= j, inside O_{<= n_max}.
    for (int n = 0; n + 2 <= n_max; ++n) {
        for (int j = 0; j <= n; ++j) {
            for (int i = 0; i <= j; ++i) {
                auto lhs = compose_maps(degeneracy_map(j, n, tower),
                                        degeneracy_map(i, n + 1, tower));
                auto rhs = compose_maps(degeneracy_map(i, n, tower),
                                        degeneracy_map(j + 1, n + 1, tower));
                report.merge(genmap_eq_tables(
                    lhs, rhs,
                    "ss identity (i=" + std::to_string(i) + ", j=" +
                        std::to_string(j) + ", n=" + std::to_string(n) + ")"));
            }
        }
    }
    // sigma_j delta_i: three cases, inside O_{<= n_max}.
    for (int n = 0; n + 1 <= n_max; ++n) {
        for (int j = 0; j <= n; ++j) {
            for (int i = 0; i <= n + 1; ++i) {
                auto lhs = compose_maps(degeneracy_map(j, n, tower),
                                        face_map(i, n + 1, tower));
                std::string label = "sd identity (i=" + std::to_string(i) +
                                    ", j=" + std::to_string(j) +
                                    ", n=" + std::to_string(n) + ")";
                if (i == j || i == j + 1) {
                    report.merge(genmap_eq_tables(
                        lhs, identity_map(tower.oriental(n)), label));
                } else if (i < j) {
                    auto rhs = compose_maps(face_map(i, n, tower),
                                            degeneracy_map(j - 1, n - 1, tower));
                    report.merge(genmap_eq_tables(lhs, rhs, label));
                } else {
                    auto rhs = compose_maps(face_map(i - 1, n, tower),
                                            degeneracy_map(j, n - 1, tower));
                    report.merge(genmap_eq_tables(lhs, rhs, label));
                }
            }
        }
    }
    return report;
}

} // namespace orientalis
