#ifndef ORIENTALIS_ORIENTAL_HPP
#define ORIENTALIS_ORIENTAL_HPP

#include "orientalis/expansion.hpp"
#include "orientalis/steiner.hpp"

#include <memory>
#include <mutex>

namespace orientalis {

/// Order-preserving map [from_n] -> [to_n]; possibly non-injective.
struct MonotoneMap {
    int from_n = 0;
    int to_n = 0;
    std::vector<int> image; // size from_n + 1, nondecreasing, within [0, to_n]

    static MonotoneMap identity(int n);
    /// The injection [n-1] -> [n] missing i, 0 <= i <= n.
    static MonotoneMap face(int i, int n);
    /// The surjection [n+1] -> [n] hitting i twice, 0 <= i <= n.
    static MonotoneMap degeneracy(int i, int n);
    /// Composition next o this.
    MonotoneMap then(const MonotoneMap& next) const;

    int operator()(int i) const { return image.at(static_cast<std::size_t>(i)); }
    void check() const;
    friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
        return a.from_n == b.from_n && a.to_n == b.to_n && a.image == b.image;
    }
};

/// Incremental cache of the orientals O_{-1}, O_0, O_1, ... and of the
/// expansion steps between them. Thread safe; instances are independent.
class OrientalTower {
public:
    OrientalTower();

    /// O_n as a polygraph, n >= -1 (O_{-1} is empty).
    std::shared_ptr<const Polygraph> oriental(int n);
    /// The expansion building O_n from O_{n-1}, n >= 0.
    std::shared_ptr<const ExpandedPolygraph> step(int n);
    /// Shared table-evaluation context for O_n.
    std::shared_ptr<TableContext> context(int n);

private:
    std::mutex mutex_;
    std::shared_ptr<const Polygraph> empty_;
    std::vector<std::shared_ptr<const ExpandedPolygraph>> steps_;
    // Pinned so the per-polygraph certificate is computed once per level.
    std::vector<std::shared_ptr<TableContext>> contexts_;
};

/// Process-wide tower shared by the CLI and the C API.
OrientalTower& global_tower();

/// Cell of O_n denoted by a nondecreasing sequence: a generator when the
/// sequence is strictly increasing, otherwise the unit obtained from the
/// recursion <i0,...> = eta^{i0} chevron <i1-i0,...>.
Cell simp(const std::vector<int>& seq, int n, OrientalTower& tower);

/// The cosimplicial functor on an order-preserving map phi:
/// <i0,...,im> -> simp(<phi(i0),...,phi(im)>).
GenMap cosimplicial_map(const MonotoneMap& phi, OrientalTower& tower);

/// delta_i^n : O_{n-1} -> O_n and sigma_i^n : O_{n+1} -> O_n, through the
/// cosimplicial functor.
GenMap face_map(int i, int n, OrientalTower& tower);
GenMap degeneracy_map(int i, int n, OrientalTower& tower);

/// The same maps through the monad: T^{n-i} eta T^i and T^{n-i} mu T^i.
GenMap face_map_monad(int i, int n, OrientalTower& tower);
GenMap degeneracy_map_monad(int i, int n, OrientalTower& tower);

/// Generator-wise table equality of two maps with the same endpoints.
ValidationReport genmap_eq_tables(const GenMap& f, const GenMap& g,
                                  const std::string& label);

/// All delta-delta / sigma-delta / sigma-sigma identity instances whose
/// orientals have index <= n_max, decided generator-wise by tables.
ValidationReport verify_simplicial_identities(int n_max, OrientalTower& tower);

} // namespace orientalis

#endif
