#include "orientalis/polygraph.hpp"

#include <unordered_map>

namespace orientalis {

// ----------------------------------------------------------------- Chain

void Chain::add(const GenKey& k, std::int64_t c) {
    if (c == 0) return;
    if (k.dim() != dim_)
        throw CellError("chain of dimension " + std::to_string(dim_) +
                        " cannot hold key of dimension " + std::to_string(k.dim()));
    auto [it, inserted] = coeffs_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

std::vector<GenKey> Chain::support() const {
    std::vector<GenKey> out;
    out.reserve(coeffs_.size());
    for (const auto& [k, c] : coeffs_) out.push_back(k);
    return out;
}

Chain& Chain::operator+=(const Chain& other) {
    if (other.is_zero()) return *this;
    if (dim_ != other.dim_)
        throw CellError("chain dimension mismatch in sum");
    for (const auto& [k, c] : other.coeffs_) add(k, c);
    return *this;
}

Chain& Chain::operator-=(const Chain& other) {
    if (other.is_zero()) return *this;
    if (dim_ != other.dim_)
        throw CellError("chain dimension mismatch in difference");
    for (const auto& [k, c] : other.coeffs_) add(k, -c);
    return *this;
}

Chain Chain::scaled(std::int64_t c) const {
    Chain out(dim_);
    if (c != 0)
        for (const auto& [k, v] : coeffs_) out.add(k, v * c);
    return out;
}

std::string Chain::to_string(bool unicode) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1) {
            out += std::to_string(a);
            out += '.';
        }
        out += k.to_string(unicode);
        first = false;
    }
    return out;
}

// ------------------------------------------------------------- Polygraph

const std::vector<GenKey>& Polygraph::generators(int dim) const {
    static const std::vector<GenKey> empty;
    if (dim < 0 || dim >= static_cast<int>(dims_.size())) return empty;
    return dims_[static_cast<std::size_t>(dim)];
}

std::vector<GenKey> Polygraph::all_generators() const {
    std::vector<GenKey> out;
    out.reserve(total_generators());
    for (const auto& level : dims_) out.insert(out.end(), level.begin(), level.end());
    return out;
}

std::size_t Polygraph::total_generators() const {
    std::size_t n = 0;
    for (const auto& level : dims_) n += level.size();
    return n;
}

std::optional<GenKey> Polygraph::find_named(const std::string& name) const {
    if (auto it = named_.find(name); it != named_.end()) return it->second;
    return std::nullopt;
}

const Cell& Polygraph::src(const GenKey& k) const {
    auto it = bnd_.find(k);
    if (it == bnd_.end())
        throw CellError("no boundary stored for " + k.to_string());
    return it->second.first;
}

const Cell& Polygraph::tgt(const GenKey& k) const {
    auto it = bnd_.find(k);
    if (it == bnd_.end())
        throw CellError("no boundary stored for " + k.to_string());
    return it->second.second;
}

Cell Polygraph::boundary(Sign eps, const GenKey& k) const {
    if (!contains(k)) throw CellError("unknown generator " + k.to_string());
    if (k.dim() == 0) throw CellError("boundary of 0-generator " + k.to_string());
    return eps == Sign::Neg ? src(k) : tgt(k);
}

void Polygraph::check_new_key(const GenKey& k) const {
    if (contains(k)) throw CellError("duplicate generator " + k.to_string());
    if (!k.is_tuple() && named_.count(k.name()))
        throw CellError("duplicate generator name " + k.name());
}

namespace {

void collect_keys(const Cell& e, std::vector<GenKey>& out) {
    switch (e.kind()) {
    case Cell::Kind::Gen: out.push_back(e.key()); break;
    case Cell::Kind::Unit: collect_keys(e.inner(), out); break;
    case Cell::Kind::Comp:
        collect_keys(e.first(), out);
        collect_keys(e.second(), out);
        break;
    }
}

} // namespace

void Polygraph::add_generator(const GenKey& k) {
    if (k.dim() != 0)
        throw CellError("generator " + k.to_string() + " of dimension " +
                        std::to_string(k.dim()) + " needs boundary expressions");
    check_new_key(k);
    if (dims_.empty()) dims_.emplace_back();
    dims_[0].push_back(k);
    known_.insert(k);
    if (!k.is_tuple()) named_.emplace(k.name(), k);
}

void Polygraph::add_generator(const GenKey& k, Cell src, Cell tgt) {
    if (k.dim() < 1)
        throw CellError("0-generator " + k.to_string() + " cannot carry boundaries");
    check_new_key(k);
    if (!src || !tgt)
        throw CellError("empty boundary for " + k.to_string());
    if (src.dim() != k.dim() - 1 || tgt.dim() != k.dim() - 1)
        throw CellError("boundary of " + k.to_string() + " must have dimension " +
                        std::to_string(k.dim() - 1));
    std::vector<GenKey> refs;
    collect_keys(src, refs);
    collect_keys(tgt, refs);
    for (const auto& r : refs)
        if (!contains(r))
            throw CellError("boundary of " + k.to_string() +
                            " references unknown generator " + r.to_string());
    while (static_cast<int>(dims_.size()) <= k.dim()) dims_.emplace_back();
    dims_[static_cast<std::size_t>(k.dim())].push_back(k);
    known_.insert(k);
    if (!k.is_tuple()) named_.emplace(k.name(), k);
    bnd_.emplace(k, std::make_pair(std::move(src), std::move(tgt)));
}

// ------------------------------------------------------------- linearize

namespace {

Chain linearize_memo(const Cell& e, std::unordered_map<const void*, Chain>& memo) {
    if (auto it = memo.find(e.node_id()); it != memo.end()) return it->second;
    Chain out(e.dim());
    switch (e.kind()) {
    case Cell::Kind::Gen:
        out.add(e.key(), 1);
        break;
    case Cell::Kind::Unit:
        break; // units vanish
    case Cell::Kind::Comp:
        out = linearize_memo(e.first(), memo);
        out += linearize_memo(e.second(), memo);
        break;
    }
    memo.emplace(e.node_id(), out);
    return out;
}

} // namespace

Chain linearize(const Cell& e) {
    if (!e) throw CellError("linearize of empty cell");
    std::unordered_map<const void*, Chain> memo;
    return linearize_memo(e, memo);
}

// -------------------------------------------------------------- validate

ValidationReport validate(const Polygraph& s) {
    ValidationReport report;
    for (int d = 1; d <= s.max_dim(); ++d) {
        for (const auto& k : s.generators(d)) {
            const Cell& src = s.src(k);
            const Cell& tgt = s.tgt(k);
            report.note(src.dim() == d - 1 && tgt.dim() == d - 1,
                        "dimension error in boundary of " + k.to_string());
            if (d >= 2) {
                // d o d = 0: the linearized necessary half of globularity.
                Chain dd = linearize(tgt) - linearize(src);
                Chain ddd(d - 2);
                for (const auto& [g, c] : dd.terms()) {
                    ddd += (linearize(s.tgt(g)) - linearize(s.src(g))).scaled(c);
                }
                report.note(ddd.is_zero(), "linear globularity fails at " +
                                               k.to_string() + ": d(d(x)) = " +
                                               ddd.to_string());
            }
        }
    }
    return report;
}

} // namespace orientalis
