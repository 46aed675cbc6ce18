#include "orientalis/steiner.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace orientalis {

// --------------------------------------------------------- AugDirComplex

const std::vector<GenKey>& AugDirComplex::basis(int dim) const {
    static const std::vector<GenKey> empty;
    if (dim < 0 || dim >= static_cast<int>(bases_.size())) return empty;
    return bases_[static_cast<std::size_t>(dim)];
}

const Chain& AugDirComplex::diff(const GenKey& k) const {
    auto it = diff_.find(k);
    if (it == diff_.end())
        throw CellError("no differential stored for " + k.to_string());
    return it->second;
}

Chain AugDirComplex::diff(const Chain& z) const {
    if (z.dim() < 1) throw CellError("differential of a dimension-0 chain");
    Chain out(z.dim() - 1);
    for (const auto& [k, c] : z.terms()) out += diff(k).scaled(c);
    return out;
}

std::int64_t AugDirComplex::augment(const Chain& z) const {
    if (z.dim() != 0) throw CellError("augmentation of a positive-dimension chain");
    std::int64_t e = 0;
    for (const auto& [k, c] : z.terms()) e += c;
    return e;
}

void AugDirComplex::add_basis(const GenKey& k) {
    if (k.dim() != 0)
        throw CellError("basis element " + k.to_string() + " needs a differential");
    if (contains(k)) throw CellError("duplicate basis element " + k.to_string());
    if (bases_.empty()) bases_.emplace_back();
    bases_[0].push_back(k);
    basis0_.insert(k);
}

void AugDirComplex::add_basis(const GenKey& k, Chain diff) {
    if (k.dim() < 1)
        throw CellError("0-dimensional basis element cannot carry a differential");
    if (contains(k)) throw CellError("duplicate basis element " + k.to_string());
    if (diff.dim() != k.dim() - 1)
        throw CellError("differential of " + k.to_string() + " has wrong dimension");
    while (static_cast<int>(bases_.size()) <= k.dim()) bases_.emplace_back();
    bases_[static_cast<std::size_t>(k.dim())].push_back(k);
    diff_.emplace(k, std::move(diff));
}

ValidationReport validate_adc(const AugDirComplex& k) {
    ValidationReport report;
    for (int d = 1; d <= k.max_dim(); ++d) {
        for (const auto& b : k.basis(d)) {
            const Chain& db = k.diff(b);
            for (const auto& [g, c] : db.terms())
                report.note(k.contains(g), "differential of " + b.to_string() +
                                               " leaves the basis at " + g.to_string());
            if (d >= 2) {
                Chain dd = k.diff(db);
                report.note(dd.is_zero(),
                            "dd != 0 at " + b.to_string() + ": " + dd.to_string());
            } else {
                report.note(k.augment(db) == 0,
                            "ed != 0 at " + b.to_string());
            }
        }
    }
    return report;
}

// ----------------------------------------------------- chain sign calculus

std::pair<Chain, Chain> pos_neg(const Chain& z) {
    Chain pos(z.dim()), neg(z.dim());
    for (const auto& [k, c] : z.terms()) {
        if (c > 0)
            pos.add(k, c);
        else
            neg.add(k, -c);
    }
    return {pos, neg};
}

Chain d_eps(Sign eps, const Chain& x, const AugDirComplex& k) {
    auto [pos, neg] = pos_neg(k.diff(x));
    return eps == Sign::Neg ? neg : pos;
}

Chain d_eps_i(Sign eps, int i, const Chain& x, const AugDirComplex& k) {
    if (i < 0 || i > x.dim())
        throw CellError("iterated boundary index out of range");
    Chain out = x;
    while (out.dim() > i) out = d_eps(eps, out, k);
    return out;
}

// ------------------------------------------------------------- CellTable

CellTable::CellTable(int n, std::vector<std::pair<Chain, Chain>> rows)
    : n_(n), rows_(std::move(rows)) {
    if (n_ < 0 || rows_.size() != static_cast<std::size_t>(n_) + 1)
        throw CellError("table of dimension " + std::to_string(n_) + " needs " +
                        std::to_string(n_ + 1) + " rows");
    for (int i = 0; i <= n_; ++i)
        if (rows_[static_cast<std::size_t>(i)].first.dim() != i ||
            rows_[static_cast<std::size_t>(i)].second.dim() != i)
            throw CellError("table row " + std::to_string(i) + " has wrong dimension");
}

const std::pair<Chain, Chain>& CellTable::row(int i) const {
    if (i < 0 || i > n_) throw CellError("table row index out of range");
    return rows_[static_cast<std::size_t>(i)];
}

std::string CellTable::to_string(bool unicode) const {
    std::ostringstream out;
    for (int i = 0; i <= n_; ++i) {
        out << i << ": " << neg(i).to_string(unicode) << " | "
            << pos(i).to_string(unicode);
        if (i < n_) out << "\n";
    }
    return out.str();
}

ValidationReport check_table(const CellTable& t, const AugDirComplex& k) {
    ValidationReport report;
    auto in_cone = [&](const Chain& z) {
        for (const auto& [g, c] : z.terms())
            if (c < 0 || !k.contains(g)) return false;
        return true;
    };
    for (int i = 0; i <= t.dim(); ++i) {
        report.note(in_cone(t.neg(i)) && in_cone(t.pos(i)),
                    "row " + std::to_string(i) + " leaves the positivity cone");
    }
    report.note(t.neg(t.dim()) == t.pos(t.dim()), "top row entries differ");
    for (int i = 1; i <= t.dim(); ++i) {
        Chain want = t.pos(i - 1) - t.neg(i - 1);
        report.note(k.diff(t.neg(i)) == want,
                    "d(neg row " + std::to_string(i) + ") mismatch");
        report.note(k.diff(t.pos(i)) == want,
                    "d(pos row " + std::to_string(i) + ") mismatch");
    }
    report.note(k.augment(t.neg(0)) == 1 && k.augment(t.pos(0)) == 1,
                "augmentation of row 0 is not 1");
    return report;
}

ValidationReport unital_check(const AugDirComplex& k) {
    ValidationReport report;
    for (int d = 0; d <= k.max_dim(); ++d) {
        for (const auto& b : k.basis(d)) {
            Chain z = Chain::basis(b);
            bool ok = k.augment(d_eps_i(Sign::Neg, 0, z, k)) == 1 &&
                      k.augment(d_eps_i(Sign::Pos, 0, z, k)) == 1;
            report.note(ok, "unitality fails at " + b.to_string());
        }
    }
    return report;
}

CellTable atom(const GenKey& b, const AugDirComplex& k) {
    if (!k.contains(b)) throw CellError("unknown basis element " + b.to_string());
    int n = b.dim();
    Chain top = Chain::basis(b);
    std::vector<std::pair<Chain, Chain>> rows(static_cast<std::size_t>(n) + 1,
                                              {Chain(0), Chain(0)});
    rows[static_cast<std::size_t>(n)] = {top, top};
    Chain neg = top, pos = top;
    for (int i = n - 1; i >= 0; --i) {
        neg = d_eps(Sign::Neg, neg, k);
        pos = d_eps(Sign::Pos, pos, k);
        rows[static_cast<std::size_t>(i)] = {neg, pos};
    }
    const auto& r0 = rows[0];
    if (k.augment(r0.first) != 1 || k.augment(r0.second) != 1)
        throw CellError("atom of non-unital basis element " + b.to_string());
    return CellTable(n, std::move(rows));
}

CellTable table_source(const CellTable& t) {
    if (t.dim() == 0) throw CellError("source of a 0-table");
    int n = t.dim() - 1;
    std::vector<std::pair<Chain, Chain>> rows;
    rows.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) rows.push_back(t.row(i));
    rows.push_back({t.neg(n), t.neg(n)});
    return CellTable(n, std::move(rows));
}

CellTable table_target(const CellTable& t) {
    if (t.dim() == 0) throw CellError("target of a 0-table");
    int n = t.dim() - 1;
    std::vector<std::pair<Chain, Chain>> rows;
    rows.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) rows.push_back(t.row(i));
    rows.push_back({t.pos(n), t.pos(n)});
    return CellTable(n, std::move(rows));
}

CellTable table_unit(const CellTable& t) {
    std::vector<std::pair<Chain, Chain>> rows;
    rows.reserve(static_cast<std::size_t>(t.dim()) + 2);
    for (int i = 0; i <= t.dim(); ++i) rows.push_back(t.row(i));
    rows.push_back({Chain(t.dim() + 1), Chain(t.dim() + 1)});
    return CellTable(t.dim() + 1, std::move(rows));
}

CellTable table_boundary_i(Sign eps, int j, const CellTable& t) {
    if (j < 0 || j > t.dim()) throw CellError("table boundary index out of range");
    if (j == t.dim()) return t;
    std::vector<std::pair<Chain, Chain>> rows;
    rows.reserve(static_cast<std::size_t>(j) + 1);
    for (int i = 0; i < j; ++i) rows.push_back(t.row(i));
    const Chain& edge = eps == Sign::Neg ? t.neg(j) : t.pos(j);
    rows.push_back({edge, edge});
    return CellTable(j, std::move(rows));
}

CellTable table_compose(int j, const CellTable& first, const CellTable& second) {
    int n = first.dim();
    if (second.dim() != n)
        throw CellError("table composition operands must have equal dimension");
    if (j < 0 || j >= n)
        throw CellError("table composition position out of range");
    // target_j(first) = source_j(second), checked entrywise.
    for (int i = 0; i < j; ++i)
        if (first.row(i) != second.row(i))
            throw CellError("tables not composable at position " + std::to_string(j) +
                            ": row " + std::to_string(i) + " differs");
    if (first.pos(j) != second.neg(j))
        throw CellError("tables not composable at position " + std::to_string(j) +
                        ": row " + std::to_string(j) + " boundary mismatch");
    std::vector<std::pair<Chain, Chain>> rows;
    rows.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= j; ++i) rows.push_back({first.neg(i), second.pos(i)});
    for (int i = j + 1; i <= n; ++i)
        rows.push_back({first.neg(i) + second.neg(i), first.pos(i) + second.pos(i)});
    return CellTable(n, std::move(rows));
}

// ---------------------------------------------------------------- lambda

AugDirComplex lambda(const Polygraph& s) {
    AugDirComplex k;
    for (const auto& g : s.generators(0)) k.add_basis(g);
    for (int d = 1; d <= s.max_dim(); ++d)
        for (const auto& g : s.generators(d))
            k.add_basis(g, linearize(s.tgt(g)) - linearize(s.src(g)));
    return k;
}

// ---------------------------------------------------------- TableContext

TableContext::TableContext(std::shared_ptr<const Polygraph> pg)
    : pg_(std::move(pg)), lambda_(orientalis::lambda(*pg_)) {
    auto cert = strong_steiner_check(*pg_);
    steiner_ok_ = cert.ok();
    if (!steiner_ok_) steiner_failure_ = cert.failures.front();
}

CellTable TableContext::eval(const Cell& e) const {
    if (!e) throw CellError("eval of empty cell");
    if (!steiner_ok_)
        throw CellError("presentation is not strong Steiner: " + steiner_failure_);
    std::lock_guard<std::mutex> lock(mutex_);
    return eval_locked(e);
}

CellTable TableContext::eval_locked(const Cell& e) const {
    if (auto it = memo_.find(e.node_id()); it != memo_.end()) return it->second.second;
    CellTable out;
    switch (e.kind()) {
    case Cell::Kind::Gen:
        out = atom(e.key(), lambda_);
        break;
    case Cell::Kind::Unit:
        out = table_unit(eval_locked(e.inner()));
        break;
    case Cell::Kind::Comp:
        out = table_compose(e.pos(), eval_locked(e.first()), eval_locked(e.second()));
        break;
    }
    memo_.emplace(e.node_id(), std::make_pair(e, out));
    return out;
}

bool TableContext::cell_eq(const Cell& a, const Cell& b) const {
    return eval(a) == eval(b);
}

std::shared_ptr<TableContext> context_for(const std::shared_ptr<const Polygraph>& pg) {
    static std::mutex registry_mutex;
    static std::map<const Polygraph*, std::weak_ptr<TableContext>> registry;
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& slot = registry[pg.get()];
    if (auto ctx = slot.lock()) return ctx;
    auto ctx = std::make_shared<TableContext>(pg);
    slot = ctx;
    return ctx;
}

// ---------------------------------------------------------------- checks

ValidationReport atomic_check(const Polygraph& s) {
    ValidationReport report;
    for (int d = 1; d <= s.max_dim(); ++d) {
        for (const auto& g : s.generators(d)) {
            Cell src = s.src(g), tgt = s.tgt(g);
            for (int i = d - 1; i >= 0; --i) {
                Chain ls = linearize(src), lt = linearize(tgt);
                bool disjoint = true;
                for (const auto& [k, c] : ls.terms())
                    if (lt.coeff(k) != 0) disjoint = false;
                report.note(disjoint, "generator " + g.to_string() +
                                          " is not atomic at level " +
                                          std::to_string(i));
                if (i > 0) {
                    src = boundary(Sign::Neg, src, s);
                    tgt = boundary(Sign::Pos, tgt, s);
                }
            }
        }
    }
    return report;
}

ValidationReport strong_loop_free_check(const AugDirComplex& k) {
    ValidationReport report;
    std::map<GenKey, std::size_t> index;
    std::vector<GenKey> nodes;
    for (int d = 0; d <= k.max_dim(); ++d) {
        for (const auto& b : k.basis(d)) {
            index.emplace(b, nodes.size());
            nodes.push_back(b);
        }
    }
    std::vector<std::vector<std::size_t>> out_edges(nodes.size());
    std::vector<std::vector<std::size_t>> in_edges(nodes.size());
    std::vector<std::size_t> in_degree(nodes.size(), 0);
    auto add_edge = [&](std::size_t from, std::size_t to) {
        out_edges[from].push_back(to);
        in_edges[to].push_back(from);
        ++in_degree[to];
    };
    for (int d = 1; d <= k.max_dim(); ++d) {
        for (const auto& b : k.basis(d)) {
            auto [pos, neg] = pos_neg(k.diff(b));
            std::size_t bi = index.at(b);
            for (const auto& [y, c] : pos.terms()) add_edge(bi, index.at(y));
            for (const auto& [x, c] : neg.terms()) add_edge(index.at(x), bi);
        }
    }
    // Kahn's algorithm; leftovers contain a cycle.
    std::deque<std::size_t> ready;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (in_degree[i] == 0) ready.push_back(i);
    std::size_t emitted = 0;
    auto remaining = in_degree;
    while (!ready.empty()) {
        std::size_t i = ready.front();
        ready.pop_front();
        ++emitted;
        for (std::size_t j : out_edges[i])
            if (--remaining[j] == 0) ready.push_back(j);
    }
    if (emitted == nodes.size()) {
        report.note(true, "");
        return report;
    }
    // Every leftover node kept a never-emitted predecessor, so walking
    // backwards through the residual subgraph must revisit a node; the
    // revisited stretch is a genuine cycle.
    std::vector<bool> residual(nodes.size());
    std::size_t start = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        residual[i] = remaining[i] > 0;
        if (residual[i]) start = i;
    }
    std::vector<std::size_t> path;
    std::vector<int> seen_at(nodes.size(), -1);
    std::size_t cur = start;
    while (seen_at[cur] < 0) {
        seen_at[cur] = static_cast<int>(path.size());
        path.push_back(cur);
        for (std::size_t j : in_edges[cur])
            if (residual[j]) {
                cur = j;
                break;
            }
    }
    // path[i+1] precedes path[i], so the cycle in edge direction runs from
    // the revisited node back down the recorded stretch.
    std::string cycle = nodes[cur].to_string();
    for (std::size_t i = path.size(); i-- > static_cast<std::size_t>(seen_at[cur]);)
        cycle += " -> " + nodes[path[i]].to_string();
    report.fail("no partial order exists: cycle " + cycle);
    return report;
}

ValidationReport strong_steiner_check(const Polygraph& s) {
    ValidationReport report;
    AugDirComplex l = lambda(s);
    if (auto r = validate_adc(l); !r.ok()) {
        report.fail("linearization is not a valid complex: " + r.failures.front());
        return report;
    }
    if (auto u = unital_check(l); !u.ok()) {
        report.fail(u.failures.front());
        return report;
    }
    if (auto lf = strong_loop_free_check(l); !lf.ok()) {
        report.fail(lf.failures.front());
        return report;
    }
    if (auto a = atomic_check(s); !a.ok()) {
        report.fail(a.failures.front());
        return report;
    }
    report.note(true, "");
    return report;
}

AugDirComplex simplex_adc(int n) {
    if (n < -1) throw CellError("simplex dimension must be >= -1");
    AugDirComplex k;
    if (n < 0) return k;
    std::vector<std::vector<int>> level;
    for (int v = 0; v <= n; ++v) {
        level.push_back({v});
        k.add_basis(GenKey::tuple({v}));
    }
    for (int m = 1; m <= n; ++m) {
        std::vector<std::vector<int>> next;
        for (const auto& t : level) {
            for (int v = t.back() + 1; v <= n; ++v) {
                std::vector<int> u = t;
                u.push_back(v);
                Chain d(m - 1);
                for (std::size_t j = 0; j < u.size(); ++j) {
                    std::vector<int> face = u;
                    face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
                    d.add(GenKey::tuple(face), (j % 2 == 0) ? 1 : -1);
                }
                k.add_basis(GenKey::tuple(u), std::move(d));
                next.push_back(std::move(u));
            }
        }
        level = std::move(next);
    }
    return k;
}

ValidationReport lin_boundary_check(const Polygraph& oriental_n) {
    ValidationReport report;
    for (int d = 1; d <= oriental_n.max_dim(); ++d) {
        for (const auto& g : oriental_n.generators(d)) {
            if (!g.is_tuple()) {
                report.fail("generator " + g.to_string() + " is not a simplicial key");
                continue;
            }
            Chain odd(d - 1), even(d - 1);
            const auto& t = g.entries();
            for (std::size_t j = 0; j < t.size(); ++j) {
                std::vector<int> face = t;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
                (j % 2 == 1 ? odd : even).add(GenKey::tuple(face), 1);
            }
            report.note(linearize(oriental_n.src(g)) == odd,
                        "odd-face sum mismatch at source of " + g.to_string());
            report.note(linearize(oriental_n.tgt(g)) == even,
                        "even-face sum mismatch at target of " + g.to_string());
        }
    }
    return report;
}

CompareVerdict compare(const Polygraph& s, const AugDirComplex& k,
                       const std::function<GenKey(const GenKey&)>& keymap) {
    CompareVerdict verdict;
    int top = std::max(s.max_dim(), k.max_dim());
    for (int d = 0; d <= top; ++d) {
        const auto& gens = s.generators(d);
        const auto& basis = k.basis(d);
        if (gens.size() != basis.size()) {
            verdict.failure = "generator/basis count mismatch in dimension " +
                              std::to_string(d);
            return verdict;
        }
        std::set<GenKey> images;
        std::set<GenKey> basis_set(basis.begin(), basis.end());
        for (const auto& g : gens) {
            GenKey img = keymap(g);
            if (img.dim() != d || !basis_set.count(img) || !images.insert(img).second) {
                verdict.failure = "keymap is not a dimension-preserving bijection at " +
                                  g.to_string();
                return verdict;
            }
        }
    }
    if (auto r = validate_adc(k); !r.ok()) {
        verdict.failure = "reference complex invalid: " + r.failures.front();
        return verdict;
    }
    if (auto u = unital_check(k); !u.ok()) {
        verdict.failure = "reference complex not unital: " + u.failures.front();
        return verdict;
    }
    if (auto l = strong_loop_free_check(k); !l.ok()) {
        verdict.failure = "reference complex not strongly loop-free: " +
                          l.failures.front();
        return verdict;
    }
    if (auto a = atomic_check(s); !a.ok()) {
        verdict.failure = "polygraph not atomic: " + a.failures.front();
        return verdict;
    }
    auto transport = [&](const Chain& z) {
        Chain out(z.dim());
        for (const auto& [g, c] : z.terms()) out.add(keymap(g), c);
        return out;
    };
    for (int d = 1; d <= s.max_dim(); ++d) {
        for (const auto& g : s.generators(d)) {
            auto [dpos, dneg] = pos_neg(k.diff(keymap(g)));
            if (transport(linearize(s.src(g))) != dneg ||
                transport(linearize(s.tgt(g))) != dpos) {
                verdict.failure = "linearized boundary of " + g.to_string() +
                                  " does not match the reference differential";
                return verdict;
            }
            ++verdict.generators_checked;
        }
    }
    verdict.certified = true;
    for (const auto& g : s.all_generators()) verdict.isomorphism.emplace(g, keymap(g));
    return verdict;
}

ValidationReport validate_full(const std::shared_ptr<const Polygraph>& s) {
    ValidationReport report = validate(*s);
    if (!report.ok()) return report;
    auto ctx = context_for(s);
    if (!ctx->strong_steiner()) {
        report.fail("table globularity skipped: " + ctx->steiner_failure());
        return report;
    }
    for (int d = 2; d <= s->max_dim(); ++d) {
        for (const auto& g : s->generators(d)) {
            Cell ss = boundary(Sign::Neg, s->src(g), *s);
            Cell st = boundary(Sign::Neg, s->tgt(g), *s);
            Cell ts = boundary(Sign::Pos, s->src(g), *s);
            Cell tt = boundary(Sign::Pos, s->tgt(g), *s);
            report.note(ctx->cell_eq(ss, st), "globularity s(s x) = s(t x) fails at " +
                                                  g.to_string());
            report.note(ctx->cell_eq(ts, tt), "globularity t(s x) = t(t x) fails at " +
                                                  g.to_string());
        }
    }
    return report;
}

} // namespace orientalis
