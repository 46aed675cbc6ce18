#ifndef ORIENTALIS_EXPANSION_HPP
#define ORIENTALIS_EXPANSION_HPP

#include "orientalis/polygraph.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>

namespace orientalis {

/// Key naming scheme for the free expansion.
///   Simplicial: base keys shift i -> i+1, the origin is <0> and the new
///               generator over <i...> is <0,i...>; keys stay strictly
///               increasing tuples (the oriental instantiation).
///   Fresh:      base keys are kept, the origin is a fresh name and the new
///               generator over a is named r.<a>.
enum class ExpandNaming { Simplicial, Fresh };

/// The free expansion Xi(S) of a polygraph S: base, result, the origin, and
/// the bookkeeping between base generators, their images, and the new
/// generators. Chevron evaluation is memoized per instance.
class ExpandedPolygraph {
public:
    enum class GenClass { Origin, FromBase, RGen };

    const Polygraph& base() const { return *base_; }
    std::shared_ptr<const Polygraph> base_ptr() const { return base_; }
    const Polygraph& result() const { return *result_; }
    std::shared_ptr<const Polygraph> result_ptr() const { return result_; }
    const GenKey& origin() const { return origin_; }

    GenClass classify(const GenKey& k) const;
    /// a -> eta(a), for a generator of the base.
    const GenKey& eta_key(const GenKey& base_key) const;
    /// eta(a) -> a.
    const GenKey& base_key(const GenKey& eta_image) const;
    /// eta(a) -> r_a, the new generator one dimension up.
    const GenKey& r_key(const GenKey& eta_image) const;
    /// r_a -> eta(a).
    const GenKey& r_to_eta(const GenKey& r) const;

    /// eta on expressions: generator-wise key substitution.
    Cell eta_expr(const Cell& base_expr) const;

    /// The chevron of a cell of Xi(S): generators from the base map to their
    /// new generators, the origin and the new generators map to units, and
    /// compositions follow the whiskering functoriality condition. Memoized;
    /// concurrent calls return equal results.
    Cell chevron(const Cell& e) const;

    friend std::shared_ptr<const ExpandedPolygraph>
    expand(std::shared_ptr<const Polygraph> s, ExpandNaming naming);

private:
    std::shared_ptr<const Polygraph> base_;
    std::shared_ptr<const Polygraph> result_;
    GenKey origin_;
    std::map<GenKey, GenKey> eta_, eta_inv_, r_, r_inv_;

    mutable std::mutex mutex_;
    mutable std::unordered_map<const void*, std::pair<Cell, Cell>> chevron_memo_;

    Cell chevron_locked(const Cell& e) const;
    Cell eta_expr_rec(const Cell& e,
                      std::unordered_map<const void*, Cell>& memo) const;
};

/// Builds Xi(S) dimension by dimension: a fresh origin, then one new
/// generator r_a per base generator a, with boundaries
///   s(r_a) = chevron(t a),
///   t(r_a) = a *0 chevron(s a_0) *1 ... *(m-1) chevron(s a_{m-1}).
/// Throws CellError when S fails structural validation.
std::shared_ptr<const ExpandedPolygraph> expand(std::shared_ptr<const Polygraph> s,
                                                ExpandNaming naming);

/// An omega-functor between free omega-categories, presented by its
/// generator images. Not required to preserve generators (images may be
/// units or composites).
struct GenMap {
    std::shared_ptr<const Polygraph> source;
    std::shared_ptr<const Polygraph> target;
    std::map<GenKey, Cell> images;

    const Cell& image(const GenKey& k) const;
};

/// Homomorphic image: substitute generator images, preserve Unit and Comp.
Cell apply(const GenMap& f, const Cell& e);

GenMap identity_map(std::shared_ptr<const Polygraph> s);
/// g after f; requires f.target == g.source (same instance).
GenMap compose_maps(const GenMap& g, const GenMap& f);

/// Monad unit at S: the generator-wise inclusion S* -> Xi(S)*.
GenMap eta(const ExpandedPolygraph& step);

/// Monad multiplication Xi(Xi(S))* -> Xi(S)*: eta-images drop back to their
/// base generator, the origin maps to the origin, and the new generator over
/// eta(x) maps to chevron(x). `inner` builds Xi(S) from S, `outer` builds
/// Xi(Xi(S)) from Xi(S).
GenMap mu(const ExpandedPolygraph& inner, const ExpandedPolygraph& outer);

/// Functor action on maps: Xi(f) : Xi(S)* -> Xi(T)* for f : S* -> T*.
/// `src_step` builds Xi(S), `tgt_step` builds Xi(T).
GenMap T_on_map(const GenMap& f, const ExpandedPolygraph& src_step,
                const ExpandedPolygraph& tgt_step);

} // namespace orientalis

#endif
