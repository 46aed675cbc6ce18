#ifndef ORIENTALIS_POLYGRAPH_HPP
#define ORIENTALIS_POLYGRAPH_HPP

#include "orientalis/cells.hpp"
#include "orientalis/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace orientalis {

/// Sparse integer combination of generator keys in a fixed dimension.
class Chain {
public:
    Chain() = default;
    explicit Chain(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }

    std::int64_t coeff(const GenKey& k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? 0 : it->second;
    }

    /// Adds c * k, erasing the entry when the coefficient cancels to zero.
    void add(const GenKey& k, std::int64_t c);

    const std::map<GenKey, std::int64_t>& terms() const { return coeffs_; }
    std::vector<GenKey> support() const;

    Chain& operator+=(const Chain& other);
    Chain& operator-=(const Chain& other);
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    Chain scaled(std::int64_t c) const;

    friend bool operator==(const Chain& a, const Chain& b) {
        return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Chain& a, const Chain& b) { return !(a == b); }

    /// Keys in lexicographic order, e.g. "<0,1> + 2.<1,2>"; "0" when empty.
    std::string to_string(bool unicode = false) const;

    static Chain basis(const GenKey& k) {
        Chain c(k.dim());
        c.add(k, 1);
        return c;
    }

private:
    int dim_ = 0;
    std::map<GenKey, std::int64_t> coeffs_;
};

/// Graded generator set with boundary expressions; the presentation every
/// other module consumes. Generators keep their insertion order per
/// dimension, so exports are deterministic.
class Polygraph {
public:
    Polygraph() = default;

    /// Highest dimension with generators; -1 for the empty polygraph.
    int max_dim() const { return static_cast<int>(dims_.size()) - 1; }
    const std::vector<GenKey>& generators(int dim) const;
    std::vector<GenKey> all_generators() const;
    std::size_t total_generators() const;

    bool contains(const GenKey& k) const { return known_.count(k) > 0; }
    std::optional<GenKey> find_named(const std::string& name) const;

    const Cell& src(const GenKey& k) const;
    const Cell& tgt(const GenKey& k) const;
    Cell boundary(Sign eps, const GenKey& k) const;

    void add_generator(const GenKey& k);
    void add_generator(const GenKey& k, Cell src, Cell tgt);

private:
    std::vector<std::vector<GenKey>> dims_;
    std::map<GenKey, std::pair<Cell, Cell>> bnd_;
    std::set<GenKey> known_;
    std::map<std::string, GenKey> named_;

    void check_new_key(const GenKey& k) const;
};

/// Linearization of a cell expression: generators map to basis chains,
/// units to zero, compositions to sums.
Chain linearize(const Cell& e);

/// Structural validation: dimension coherence, dangling keys, and the
/// linearized globularity condition d(d(x)) = 0 for every generator. Exact
/// cell-level globularity is checked by the table engine (see steiner.hpp).
ValidationReport validate(const Polygraph& s);

} // namespace orientalis

#endif
