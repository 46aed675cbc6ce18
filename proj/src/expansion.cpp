#include "orientalis/expansion.hpp"

#include <algorithm>

namespace orientalis {

// ----------------------------------------------------- ExpandedPolygraph

ExpandedPolygraph::GenClass ExpandedPolygraph::classify(const GenKey& k) const {
    if (k == origin_) return GenClass::Origin;
    if (eta_inv_.count(k)) return GenClass::FromBase;
    if (r_inv_.count(k)) return GenClass::RGen;
    throw CellError("generator " + k.to_string() + " is not part of this expansion");
}

const GenKey& ExpandedPolygraph::eta_key(const GenKey& base_key) const {
    auto it = eta_.find(base_key);
    if (it == eta_.end())
        throw CellError("not a base generator: " + base_key.to_string());
    return it->second;
}

const GenKey& ExpandedPolygraph::base_key(const GenKey& eta_image) const {
    auto it = eta_inv_.find(eta_image);
    if (it == eta_inv_.end())
        throw CellError("not an eta image: " + eta_image.to_string());
    return it->second;
}

const GenKey& ExpandedPolygraph::r_key(const GenKey& eta_image) const {
    auto it = r_.find(eta_image);
    if (it == r_.end())
        throw CellError("no expansion generator over " + eta_image.to_string());
    return it->second;
}

const GenKey& ExpandedPolygraph::r_to_eta(const GenKey& r) const {
    auto it = r_inv_.find(r);
    if (it == r_inv_.end())
        throw CellError("not an expansion generator: " + r.to_string());
    return it->second;
}

Cell ExpandedPolygraph::eta_expr_rec(
    const Cell& e, std::unordered_map<const void*, Cell>& memo) const {
    if (auto it = memo.find(e.node_id()); it != memo.end()) return it->second;
    Cell out;
    switch (e.kind()) {
    case Cell::Kind::Gen:
        out = Cell::gen(eta_key(e.key()));
        break;
    case Cell::Kind::Unit:
        out = Cell::unit(eta_expr_rec(e.inner(), memo));
        break;
    case Cell::Kind::Comp:
        out = Cell::comp_raw(e.pos(), eta_expr_rec(e.first(), memo),
                             eta_expr_rec(e.second(), memo));
        break;
    }
    memo.emplace(e.node_id(), out);
    return out;
}

Cell ExpandedPolygraph::eta_expr(const Cell& base_expr) const {
    if (!base_expr) throw CellError("eta of empty cell");
    std::unordered_map<const void*, Cell> memo;
    return eta_expr_rec(base_expr, memo);
}

Cell ExpandedPolygraph::chevron(const Cell& e) const {
    if (!e) throw CellError("chevron of empty cell");
    std::lock_guard<std::mutex> lock(mutex_);
    return chevron_locked(e);
}

Cell ExpandedPolygraph::chevron_locked(const Cell& e) const {
    if (auto it = chevron_memo_.find(e.node_id()); it != chevron_memo_.end())
        return it->second.second;
    Cell out;
    switch (e.kind()) {
    case Cell::Kind::Gen:
        switch (classify(e.key())) {
        case GenClass::Origin:
        case GenClass::RGen:
            out = Cell::unit(e);
            break;
        case GenClass::FromBase:
            out = Cell::gen(r_key(e.key()));
            break;
        }
        break;
    case Cell::Kind::Unit:
        out = Cell::unit(chevron_locked(e.inner()));
        break;
    case Cell::Kind::Comp: {
        // chevron(y o_p x) = t(y)_{p+1} o_0 chevron(s x_0) o_1 ...
        //   o_{p-1} chevron(s x_{p-1}) o_p chevron(x) o_{p+1} chevron(y)
        const Cell& x = e.first();
        const Cell& y = e.second();
        int p = e.pos();
        Cell acc = iterated_boundary(Sign::Pos, p + 1, y, *result_);
        for (int i = 0; i < p; ++i) {
            Cell sxi = iterated_boundary(Sign::Neg, i, x, *result_);
            acc = compose(i, chevron_locked(sxi), acc);
        }
        acc = compose(p, chevron_locked(x), acc);
        acc = compose(p + 1, chevron_locked(y), acc);
        out = acc;
        break;
    }
    }
    chevron_memo_.emplace(e.node_id(), std::make_pair(e, out));
    return out;
}

// ------------------------------------------------------------------ expand

namespace {

GenKey shift_tuple(const GenKey& k, int by) {
    std::vector<int> entries = k.entries();
    for (int& v : entries) v += by;
    return GenKey::tuple(std::move(entries));
}

GenKey prepend_zero(const GenKey& k) {
    std::vector<int> entries;
    entries.reserve(k.entries().size() + 1);
    entries.push_back(0);
    entries.insert(entries.end(), k.entries().begin(), k.entries().end());
    return GenKey::tuple(std::move(entries));
}

std::string fresh_name(std::string base, const Polygraph& s) {
    while (s.find_named(base)) base += '\'';
    return base;
}

} // namespace

std::shared_ptr<const ExpandedPolygraph> expand(std::shared_ptr<const Polygraph> s,
                                                ExpandNaming naming) {
    if (!s) throw CellError("expand of null polygraph");
    if (auto r = validate(*s); !r.ok())
        throw CellError("expand: invalid polygraph: " + r.failures.front());

    auto out = std::shared_ptr<ExpandedPolygraph>(new ExpandedPolygraph());
    out->base_ = s;
    auto building = std::make_shared<Polygraph>();
    out->result_ = building;

    bool simplicial = naming == ExpandNaming::Simplicial;
    if (simplicial) {
        for (const auto& g : s->all_generators())
            if (!g.is_tuple())
                throw CellError("simplicial naming requires tuple keys, got " +
                                g.to_string());
        out->origin_ = GenKey::tuple({0});
    } else {
        out->origin_ = GenKey::named(fresh_name("v", *s), 0);
    }

    // Key bookkeeping first: chevron consults the maps while boundaries of
    // the new generators are being computed.
    for (int d = 0; d <= s->max_dim(); ++d) {
        for (const auto& a : s->generators(d)) {
            GenKey img = simplicial ? shift_tuple(a, 1) : a;
            GenKey r = simplicial ? prepend_zero(img)
                                  : GenKey::named(fresh_name("r." + a.serial(), *s),
                                                  d + 1);
            out->eta_.emplace(a, img);
            out->eta_inv_.emplace(img, a);
            out->r_.emplace(img, r);
            out->r_inv_.emplace(r, img);
        }
    }

    auto keys_of_dim = [&](int d) {
        // Base images of dimension d, plus new generators over dimension d-1.
        std::vector<GenKey> keys;
        for (const auto& a : s->generators(d)) keys.push_back(out->eta_.at(a));
        if (d == 0) keys.push_back(out->origin_);
        for (const auto& a : s->generators(d - 1)) keys.push_back(out->r_.at(out->eta_.at(a)));
        if (simplicial) std::sort(keys.begin(), keys.end());
        return keys;
    };

    for (int d = 0; d <= s->max_dim() + 1; ++d) {
        for (const auto& k : keys_of_dim(d)) {
            if (d == 0) {
                building->add_generator(k);
                continue;
            }
            if (out->eta_inv_.count(k)) {
                const GenKey& a = out->eta_inv_.at(k);
                building->add_generator(k, out->eta_expr(s->src(a)),
                                        out->eta_expr(s->tgt(a)));
                continue;
            }
            // New generator r_a over the (d-1)-image of a.
            const GenKey& img = out->r_inv_.at(k);
            Cell a_cell = Cell::gen(img);
            int m = img.dim();
            Cell src, tgt;
            if (m == 0) {
                src = Cell::gen(out->origin_);
                tgt = a_cell;
            } else {
                src = out->chevron(building->tgt(img));
                Cell acc = a_cell;
                for (int i = 0; i < m; ++i) {
                    Cell sai = iterated_boundary(Sign::Neg, i, a_cell, *building);
                    acc = compose(i, out->chevron(sai), acc);
                }
                tgt = acc;
            }
            building->add_generator(k, std::move(src), std::move(tgt));
        }
    }
    return out;
}

// ------------------------------------------------------------------ GenMap

const Cell& GenMap::image(const GenKey& k) const {
    auto it = images.find(k);
    if (it == images.end())
        throw CellError("no image for generator " + k.to_string());
    return it->second;
}

namespace {

Cell apply_rec(const GenMap& f, const Cell& e,
               std::unordered_map<const void*, Cell>& memo) {
    if (auto it = memo.find(e.node_id()); it != memo.end()) return it->second;
    Cell out;
    switch (e.kind()) {
    case Cell::Kind::Gen:
        out = f.image(e.key());
        break;
    case Cell::Kind::Unit:
        out = Cell::unit(apply_rec(f, e.inner(), memo));
        break;
    case Cell::Kind::Comp:
        // Images preserve dimension, so the raw constructor applies.
        out = Cell::comp_raw(e.pos(), apply_rec(f, e.first(), memo),
                             apply_rec(f, e.second(), memo));
        break;
    }
    memo.emplace(e.node_id(), out);
    return out;
}

} // namespace

Cell apply(const GenMap& f, const Cell& e) {
    if (!e) throw CellError("apply of empty cell");
    std::unordered_map<const void*, Cell> memo;
    return apply_rec(f, e, memo);
}

GenMap identity_map(std::shared_ptr<const Polygraph> s) {
    GenMap f;
    f.source = s;
    f.target = s;
    for (const auto& g : s->all_generators()) f.images.emplace(g, Cell::gen(g));
    return f;
}

GenMap compose_maps(const GenMap& g, const GenMap& f) {
    if (f.target != g.source)
        throw CellError("map composition requires matching middle polygraph");
    GenMap out;
    out.source = f.source;
    out.target = g.target;
    for (const auto& [k, img] : f.images) out.images.emplace(k, apply(g, img));
    return out;
}

GenMap eta(const ExpandedPolygraph& step) {
    GenMap f;
    f.source = step.base_ptr();
    f.target = step.result_ptr();
    for (const auto& a : step.base().all_generators())
        f.images.emplace(a, Cell::gen(step.eta_key(a)));
    return f;
}

GenMap mu(const ExpandedPolygraph& inner, const ExpandedPolygraph& outer) {
    if (outer.base_ptr() != inner.result_ptr())
        throw CellError("mu requires outer expansion built on the inner result");
    GenMap f;
    f.source = outer.result_ptr();
    f.target = inner.result_ptr();
    for (const auto& g : outer.result().all_generators()) {
        switch (outer.classify(g)) {
        case ExpandedPolygraph::GenClass::Origin:
            f.images.emplace(g, Cell::gen(inner.origin()));
            break;
        case ExpandedPolygraph::GenClass::FromBase:
            f.images.emplace(g, Cell::gen(outer.base_key(g)));
            break;
        case ExpandedPolygraph::GenClass::RGen: {
            const GenKey& b = outer.base_key(outer.r_to_eta(g));
            f.images.emplace(g, inner.chevron(Cell::gen(b)));
            break;
        }
        }
    }
    return f;
}

GenMap T_on_map(const GenMap& f, const ExpandedPolygraph& src_step,
                const ExpandedPolygraph& tgt_step) {
    if (f.source != src_step.base_ptr() || f.target != tgt_step.base_ptr())
        throw CellError("T_on_map requires expansions of the map's endpoints");
    GenMap out;
    out.source = src_step.result_ptr();
    out.target = tgt_step.result_ptr();
    for (const auto& g : src_step.result().all_generators()) {
        switch (src_step.classify(g)) {
        case ExpandedPolygraph::GenClass::Origin:
            out.images.emplace(g, Cell::gen(tgt_step.origin()));
            break;
        case ExpandedPolygraph::GenClass::FromBase:
            out.images.emplace(g, tgt_step.eta_expr(f.image(src_step.base_key(g))));
            break;
        case ExpandedPolygraph::GenClass::RGen: {
            const GenKey& a = src_step.base_key(src_step.r_to_eta(g));
            out.images.emplace(g, tgt_step.chevron(tgt_step.eta_expr(f.image(a))));
            break;
        }
        }
    }
    return out;
}

} // namespace orientalis
