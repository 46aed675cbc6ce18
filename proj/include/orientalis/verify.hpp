#ifndef ORIENTALIS_VERIFY_HPP
#define ORIENTALIS_VERIFY_HPP

#include "orientalis/oriental.hpp"

#include <optional>

namespace orientalis {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // first witnesses on failure, counts on success
    double seconds = 0.0;
};

struct VerifyReport {
    int n = 0;
    std::vector<CheckResult> checks;
    bool all_passed() const;
    std::string to_text() const;
};

/// Names accepted by the --only filter, in execution order.
const std::vector<std::string>& verify_check_names();

/// Runs the verification pipeline for O_n: atomicity, strong loop-freeness,
/// linearized boundary formulas, the comparison against the simplex complex
/// (with the cosimplicial-level linear check), monad laws, simplicial
/// identities, the oplax/expansion axioms, and the chain-homotopy identity.
/// An empty `only` runs everything. Checks involving the monad build O_{n+1}.
VerifyReport run_verify(int n, const std::vector<std::string>& only,
                        OrientalTower& tower);

/// Monad laws by table equality: both unit laws on O_k for k <= unit_max,
/// and associativity as maps O_k -> O_{k-2} for 2 <= k <= assoc_max.
ValidationReport monad_law_check(int unit_max, int assoc_max, OrientalTower& tower);

/// Monad-route face/degeneracy maps coincide with the cosimplicial-route
/// maps, for all indices at level <= n.
ValidationReport monad_route_check(int n, OrientalTower& tower);

/// lambda of each cosimplicial generator map equals the simplicial chain map
/// (faces with repeated entries map to zero), for all face/degeneracy maps
/// at level <= n.
ValidationReport lambda_cosimplicial_check(int n, OrientalTower& tower);

/// Expansion axioms at each step k <= min(n, dim_bound): every generator's
/// expansion cone validates, the oplax axioms hold on all composable
/// generator pairs and unit cases, and the degeneracy axioms hold.
ValidationReport expansion_axiom_check(int n, int dim_bound, OrientalTower& tower);

/// d h + h d = id - (origin section) on lambda(O_k) for k <= n, where h is
/// induced by the chevron.
ValidationReport chain_homotopy_check(int n, OrientalTower& tower);

/// The pipeline subset that makes sense for an arbitrary (imported)
/// polygraph: validation, atomicity, strong loop-freeness, the linearized
/// boundary formulas, and the comparison against the simplex complex of its
/// top dimension.
VerifyReport run_verify_static(const std::shared_ptr<const Polygraph>& s,
                               const std::vector<std::string>& only);

} // namespace orientalis

#endif
