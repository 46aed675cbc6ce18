#ifndef ORIENTALIS_STEINER_HPP
#define ORIENTALIS_STEINER_HPP

#include "orientalis/polygraph.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace orientalis {

/// Augmented directed complex, narrowed to the free case: graded bases,
/// integer differential, coefficient-sum augmentation, and the implicit
/// positivity cone of nonnegative basis combinations.
class AugDirComplex {
public:
    int max_dim() const { return static_cast<int>(bases_.size()) - 1; }
    const std::vector<GenKey>& basis(int dim) const;
    bool contains(const GenKey& k) const { return diff_.count(k) > 0 || is_basis0(k); }

    /// Differential of a basis key of dimension >= 1.
    const Chain& diff(const GenKey& k) const;
    /// Linear extension of the differential to chains of dimension >= 1.
    Chain diff(const Chain& z) const;
    /// Augmentation: coefficient sum on dimension-0 chains.
    std::int64_t augment(const Chain& z) const;

    void add_basis(const GenKey& k);                 // dimension 0
    void add_basis(const GenKey& k, Chain diff);     // dimension >= 1

private:
    std::vector<std::vector<GenKey>> bases_;
    std::map<GenKey, Chain> diff_;
    std::set<GenKey> basis0_;
    bool is_basis0(const GenKey& k) const { return basis0_.count(k) > 0; }
};

/// d(d(x)) = 0 and e(d(x)) = 0 on every basis element.
ValidationReport validate_adc(const AugDirComplex& k);

/// Unique decomposition z = pos - neg with disjoint supports, both
/// nonnegative. Returns (pos, neg).
std::pair<Chain, Chain> pos_neg(const Chain& z);

/// d^-(x) = d(x)^- and d^+(x) = d(x)^+.
Chain d_eps(Sign eps, const Chain& x, const AugDirComplex& k);
/// Iterated (d^eps)^{dim - i}, landing in dimension i.
Chain d_eps_i(Sign eps, int i, const Chain& x, const AugDirComplex& k);

/// Steiner table: per-dimension pairs of nonnegative chains. The canonical
/// form for cell equality over strong Steiner presentations.
class CellTable {
public:
    CellTable() = default;
    CellTable(int n, std::vector<std::pair<Chain, Chain>> rows);

    int dim() const { return n_; }
    /// Row i as (neg, pos), 0 <= i <= dim().
    const std::pair<Chain, Chain>& row(int i) const;
    const Chain& neg(int i) const { return row(i).first; }
    const Chain& pos(int i) const { return row(i).second; }

    friend bool operator==(const CellTable& a, const CellTable& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const CellTable& a, const CellTable& b) { return !(a == b); }

    std::string to_string(bool unicode = false) const;

private:
    int n_ = 0;
    std::vector<std::pair<Chain, Chain>> rows_;
};

/// The four table conditions: membership in the positivity cone, equal top
/// rows, d(row_i) = pos_{i-1} - neg_{i-1}, and augmentation 1 in row 0.
ValidationReport check_table(const CellTable& t, const AugDirComplex& k);

/// e(d^eps_0(b)) = 1 for every basis element b.
ValidationReport unital_check(const AugDirComplex& k);

/// The atom of a basis key: iterated positive/negative boundaries topped by
/// the key itself. Throws CellError when the key fails unitality.
CellTable atom(const GenKey& b, const AugDirComplex& k);

CellTable table_source(const CellTable& t);
CellTable table_target(const CellTable& t);
CellTable table_unit(const CellTable& t);
/// Iterated source/target down to dimension j.
CellTable table_boundary_i(Sign eps, int j, const CellTable& t);
/// Composite second o_j first; throws CellError on boundary mismatch at j.
CellTable table_compose(int j, const CellTable& first, const CellTable& second);

/// Evaluation context for one polygraph: caches the linearization, the
/// strong Steiner certificate, atoms, and evaluated expression nodes.
/// Operations are safe to call from several threads.
class TableContext {
public:
    explicit TableContext(std::shared_ptr<const Polygraph> pg);

    const Polygraph& polygraph() const { return *pg_; }
    std::shared_ptr<const Polygraph> polygraph_ptr() const { return pg_; }
    const AugDirComplex& lambda() const { return lambda_; }

    /// True when the presentation certifies as strong Steiner (unital +
    /// strongly loop-free linearization, atomic polygraph); evaluation is a
    /// faithful canonical form exactly in that case.
    bool strong_steiner() const { return steiner_ok_; }
    const std::string& steiner_failure() const { return steiner_failure_; }

    /// Gen -> atom, Unit -> table_unit, Comp(p,..) -> table_compose(p,..).
    /// Composability is verified during evaluation.
    CellTable eval(const Cell& e) const;
    bool cell_eq(const Cell& a, const Cell& b) const;

private:
    std::shared_ptr<const Polygraph> pg_;
    AugDirComplex lambda_;
    bool steiner_ok_ = false;
    std::string steiner_failure_;
    mutable std::mutex mutex_;
    // Keyed by node identity; the pinned Cell keeps the node alive so the
    // address cannot be reused.
    mutable std::unordered_map<const void*, std::pair<Cell, CellTable>> memo_;

    CellTable eval_locked(const Cell& e) const;
};

/// Shared per-polygraph context registry (weakly keyed by instance).
std::shared_ptr<TableContext> context_for(const std::shared_ptr<const Polygraph>& pg);

/// Linearization functor on objects: basis = generators, differential
/// d[x] = [t x] - [s x], augmentation the coefficient sum.
AugDirComplex lambda(const Polygraph& s);

/// Per-generator disjointness of the supports of all linearized iterated
/// sources and targets.
ValidationReport atomic_check(const Polygraph& s);

/// Existence of Steiner's partial order, decided by cycle detection on the
/// generated relation: edges x -> y for y in supp d^+(x) and for
/// x in supp d^-(y). A cycle witness refutes existence.
ValidationReport strong_loop_free_check(const AugDirComplex& k);

/// The certificate gating table evaluation: the linearization is a valid
/// complex, unital and strongly loop-free, and the polygraph is atomic.
ValidationReport strong_steiner_check(const Polygraph& s);

/// Simplicial chain complex of the n-simplex: basis the strictly increasing
/// tuples in [0, n], alternating-sum differential. n >= -1.
AugDirComplex simplex_adc(int n);

/// For every generator of the given oriental polygraph: linearize(src)
/// equals the odd-face sum and linearize(tgt) the even-face sum.
ValidationReport lin_boundary_check(const Polygraph& oriental_n);

/// Verdict of the polygraph/complex comparison.
struct CompareVerdict {
    bool certified = false;
    std::string failure; // first failing condition, empty when certified
    std::size_t generators_checked = 0;
    /// Generator-level isomorphism, filled on success.
    std::map<GenKey, GenKey> isomorphism;
};

/// Certifies an isomorphism S* ~ nu(K): K must be unital and strongly
/// loop-free, S atomic, and every generator's linearized boundaries must
/// transport along `keymap` to the negative/positive parts of K's
/// differential. `keymap` must be a dimension-preserving bijection onto the
/// basis of K (verified).
CompareVerdict compare(const Polygraph& s, const AugDirComplex& k,
                       const std::function<GenKey(const GenKey&)>& keymap);

/// Structural validation plus, when the strong Steiner certificate holds,
/// exact cell-level globularity of every generator decided by tables.
ValidationReport validate_full(const std::shared_ptr<const Polygraph>& s);

} // namespace orientalis

#endif
