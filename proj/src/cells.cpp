#include "orientalis/cells.hpp"
#include "orientalis/polygraph.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

namespace orientalis {

// ---------------------------------------------------------------- GenKey

GenKey GenKey::tuple(std::vector<int> entries) {
    if (entries.empty())
        throw CellError("oriental key must be a nonempty tuple");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 0)
            throw CellError("oriental key entries must be nonnegative");
        if (i > 0 && entries[i] <= entries[i - 1])
            throw CellError("oriental key must be strictly increasing");
    }
    GenKey k;
    k.is_tuple_ = true;
    k.dim_ = static_cast<int>(entries.size()) - 1;
    k.entries_ = std::move(entries);
    return k;
}

GenKey GenKey::named(std::string name, int dim) {
    if (name.empty())
        throw CellError("generator name must be nonempty");
    if (dim < 0)
        throw CellError("generator dimension must be nonnegative");
    GenKey k;
    k.is_tuple_ = false;
    k.dim_ = dim;
    k.name_ = std::move(name);
    return k;
}

std::string GenKey::to_string(bool unicode) const {
    if (!is_tuple_) return name_;
    std::string out = unicode ? "⟨" : "<";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    out += unicode ? "⟩" : ">";
    return out;
}

std::string GenKey::serial() const {
    if (!is_tuple_) return name_;
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(entries_[i]);
    }
    return out;
}

GenKey GenKey::from_serial(const std::string& text, int dim_for_names) {
    bool numeric = !text.empty();
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.') numeric = false;
    if (numeric) {
        std::vector<int> entries;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t dot = text.find('.', pos);
            if (dot == std::string::npos) dot = text.size();
            if (dot == pos) throw CellError("bad key serial: " + text);
            entries.push_back(std::stoi(text.substr(pos, dot - pos)));
            pos = dot + 1;
        }
        return GenKey::tuple(std::move(entries));
    }
    return GenKey::named(text, dim_for_names);
}

std::strong_ordering operator<=>(const GenKey& a, const GenKey& b) {
    if (a.is_tuple_ != b.is_tuple_)
        return a.is_tuple_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_tuple_) {
        if (auto c = a.entries_ <=> b.entries_; c != 0) return c;
        return std::strong_ordering::equal;
    }
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.name_ <=> b.name_;
}

// ------------------------------------------------------------------ Cell

struct Cell::Node {
    Kind kind;
    int dim;
    GenKey key;      // Gen
    Cell inner;      // Unit
    int pos = 0;     // Comp
    Cell first;      // Comp
    Cell second;     // Comp
};

Cell Cell::gen(GenKey key) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Gen;
    n->dim = key.dim();
    n->key = std::move(key);
    return Cell(std::move(n));
}

Cell Cell::unit(Cell inner) {
    if (!inner) throw CellError("unit of empty cell");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Unit;
    n->dim = inner.dim() + 1;
    n->inner = std::move(inner);
    return Cell(std::move(n));
}

Cell Cell::unit_n(Cell inner, int count) {
    Cell e = std::move(inner);
    for (int i = 0; i < count; ++i) e = Cell::unit(std::move(e));
    return e;
}

Cell Cell::comp_raw(int p, Cell first, Cell second) {
    if (!first || !second) throw CellError("composition of empty cell");
    if (first.dim() != second.dim())
        throw CellError("composition operands must have equal dimension (got " +
                        std::to_string(first.dim()) + " and " +
                        std::to_string(second.dim()) + ")");
    if (p < 0 || p >= first.dim())
        throw CellError("composition position " + std::to_string(p) +
                        " must be below operand dimension " +
                        std::to_string(first.dim()));
    auto n = std::make_shared<Node>();
    n->kind = Kind::Comp;
    n->dim = first.dim();
    n->pos = p;
    n->first = std::move(first);
    n->second = std::move(second);
    return Cell(std::move(n));
}

Cell::Kind Cell::kind() const { return node_->kind; }
int Cell::dim() const { return node_->dim; }
const GenKey& Cell::key() const { return node_->key; }
const Cell& Cell::inner() const { return node_->inner; }
int Cell::pos() const { return node_->pos; }
const Cell& Cell::first() const { return node_->first; }
const Cell& Cell::second() const { return node_->second; }

const Cell& Cell::strip_units() const {
    const Cell* e = this;
    while (e->kind() == Kind::Unit) e = &e->inner();
    return *e;
}

int Cell::unit_depth() const {
    int d = 0;
    const Cell* e = this;
    while (e->kind() == Kind::Unit) {
        e = &e->inner();
        ++d;
    }
    return d;
}

bool operator==(const Cell& a, const Cell& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.kind() != b.kind() || a.dim() != b.dim()) return false;
    switch (a.kind()) {
    case Cell::Kind::Gen: return a.key() == b.key();
    case Cell::Kind::Unit: return a.inner() == b.inner();
    case Cell::Kind::Comp:
        return a.pos() == b.pos() && a.first() == b.first() && a.second() == b.second();
    }
    return false;
}

// ------------------------------------------------------------ operations

Cell compose(int p, const Cell& x, const Cell& y) {
    if (!x || !y) throw CellError("compose of empty cell");
    int n = std::max(x.dim(), y.dim());
    if (p < 0 || p >= n)
        throw CellError("compose position " + std::to_string(p) +
                        " must be below dimension " + std::to_string(n));
    Cell xl = Cell::unit_n(x, n - x.dim());
    Cell yl = Cell::unit_n(y, n - y.dim());
    return Cell::comp_raw(p, std::move(xl), std::move(yl));
}

namespace {

Cell boundary_memo(Sign eps, const Cell& e, const Polygraph& ctx,
                   std::unordered_map<const void*, Cell>& memo) {
    if (auto it = memo.find(e.node_id()); it != memo.end()) return it->second;
    Cell out;
    switch (e.kind()) {
    case Cell::Kind::Gen:
        out = ctx.boundary(eps, e.key());
        break;
    case Cell::Kind::Unit:
        out = e.inner();
        break;
    case Cell::Kind::Comp: {
        int m = e.dim() - 1;
        if (m == e.pos()) {
            out = eps == Sign::Neg ? boundary_memo(eps, e.first(), ctx, memo)
                                   : boundary_memo(eps, e.second(), ctx, memo);
        } else {
            out = Cell::comp_raw(e.pos(), boundary_memo(eps, e.first(), ctx, memo),
                                 boundary_memo(eps, e.second(), ctx, memo));
        }
        break;
    }
    }
    memo.emplace(e.node_id(), out);
    return out;
}

} // namespace

Cell boundary(Sign eps, const Cell& e, const Polygraph& ctx) {
    if (!e) throw CellError("boundary of empty cell");
    if (e.dim() == 0) throw CellError("boundary of a 0-cell");
    std::unordered_map<const void*, Cell> memo;
    return boundary_memo(eps, e, ctx, memo);
}

Cell iterated_boundary(Sign eps, int i, const Cell& e, const Polygraph& ctx) {
    if (!e) throw CellError("boundary of empty cell");
    if (i < 0 || i > e.dim())
        throw CellError("iterated boundary index " + std::to_string(i) +
                        " exceeds dimension " + std::to_string(e.dim()));
    Cell out = e;
    while (out.dim() > i) out = boundary(eps, out, ctx);
    return out;
}

// --------------------------------------------------------------- printer

namespace {

int top_pos(const Cell& e) {
    // Top-level composition index, or -1 for Gen/Unit.
    return e.kind() == Cell::Kind::Comp ? e.pos() : -1;
}

void print_rec(const Cell& e, bool unicode, std::string& out);

// Operand of a composition at position p: lifting units are dropped when the
// partner keeps the full dimension, so compose() re-lifts to the same tree.
// A right-slot operand that prints with a leading digit (a unit "1_(...)")
// must be parenthesized: it would otherwise merge with the *p integer.
void print_operand(const Cell& e, bool stripped, int p, bool is_first_slot,
                   bool unicode, std::string& out) {
    const Cell& core = stripped ? e.strip_units() : e;
    int q = top_pos(core);
    bool parens = is_first_slot ? (q >= p) : (q > p);
    std::string text;
    print_rec(core, unicode, text);
    if (is_first_slot && !text.empty() &&
        std::isdigit(static_cast<unsigned char>(text.front())))
        parens = true;
    if (parens) out += '(';
    out += text;
    if (parens) out += ')';
}

void print_rec(const Cell& e, bool unicode, std::string& out) {
    switch (e.kind()) {
    case Cell::Kind::Gen:
        out += e.key().to_string(unicode);
        break;
    case Cell::Kind::Unit:
        out += "1_(";
        print_rec(e.inner(), unicode, out);
        out += ')';
        break;
    case Cell::Kind::Comp: {
        bool lift_first = e.first().kind() == Cell::Kind::Unit;
        bool lift_second = e.second().kind() == Cell::Kind::Unit;
        // Strip at most one side; stripping both changes the reconstruction.
        bool strip_first = lift_first && !lift_second;
        bool strip_second = lift_second && !lift_first;
        print_operand(e.second(), strip_second, e.pos(), false, unicode, out);
        out += '*';
        out += std::to_string(e.pos());
        print_operand(e.first(), strip_first, e.pos(), true, unicode, out);
        break;
    }
    }
}

} // namespace

std::string print_cell(const Cell& e, bool unicode) {
    if (!e) return "";
    std::string out;
    print_rec(e, unicode, out);
    return out;
}

// ---------------------------------------------------------------- parser

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    const Polygraph& ctx;

    explicit Parser(std::string_view t, const Polygraph& c) : text(t), ctx(c) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool consume(char c) {
        if (peek_is(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    // Unicode angle brackets U+27E8/U+27E9 arrive as 3-byte UTF-8 sequences.
    bool consume_utf8(const char* seq) {
        skip_ws();
        std::size_t len = std::char_traits<char>::length(seq);
        if (text.compare(pos, len, seq) == 0) {
            pos += len;
            return true;
        }
        return false;
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail("expected integer");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }

    Cell parse_tuple_key(bool unicode) {
        std::vector<int> entries;
        entries.push_back(parse_int());
        while (consume(',')) entries.push_back(parse_int());
        bool closed = unicode ? consume_utf8("⟩") : consume('>');
        if (!closed) fail("expected closing angle bracket");
        GenKey key;
        try {
            key = GenKey::tuple(std::move(entries));
        } catch (const CellError& e) {
            fail(e.what());
        }
        if (!ctx.contains(key)) fail("unknown generator " + key.to_string());
        return Cell::gen(key);
    }

    Cell parse_name() {
        skip_ws();
        std::size_t start = pos;
        auto name_char = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
                   c == '.' || c == '\'';
        };
        while (pos < text.size() && name_char(text[pos])) ++pos;
        if (pos == start) fail("expected generator key or expression");
        std::string name(text.substr(start, pos - start));
        auto key = ctx.find_named(name);
        if (!key) fail("unknown generator " + name);
        return Cell::gen(*key);
    }

    Cell parse_term() {
        skip_ws();
        if (pos + 1 < text.size() && text[pos] == '1' && text[pos + 1] == '_') {
            pos += 2;
            if (!consume('(')) fail("expected '(' after 1_");
            Cell inner = parse_expr(-1);
            if (!consume(')')) fail("expected ')'");
            return Cell::unit(std::move(inner));
        }
        if (consume('(')) {
            Cell inner = parse_expr(-1);
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (consume('<')) return parse_tuple_key(false);
        if (consume_utf8("⟨")) return parse_tuple_key(true);
        return parse_name();
    }

    // Precedence climbing: *p binds tighter for smaller p; equal p groups
    // to the left (lowest-composition-first priority convention).
    Cell parse_expr(int outer_p) {
        Cell lhs = parse_term();
        for (;;) {
            skip_ws();
            if (pos >= text.size() || text[pos] != '*') break;
            std::size_t save = pos;
            ++pos;
            int p = parse_int();
            if (outer_p >= 0 && p >= outer_p) {
                pos = save; // belongs to an enclosing level
                break;
            }
            Cell rhs = parse_expr(p);
            // "lhs *p rhs" reads lhs o_p rhs: rhs is composed first.
            try {
                lhs = compose(p, rhs, lhs);
            } catch (const CellError& e) {
                fail(e.what());
            }
        }
        return lhs;
    }
};

} // namespace

Cell parse_cell(std::string_view text, const Polygraph& ctx) {
    Parser parser(text, ctx);
    Cell result = parser.parse_expr(-1);
    if (!parser.at_end()) parser.fail("unexpected trailing input");
    return result;
}

} // namespace orientalis
