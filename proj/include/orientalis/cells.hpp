#ifndef ORIENTALIS_CELLS_HPP
#define ORIENTALIS_CELLS_HPP

#include <compare>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orientalis {

class Polygraph;

/// Sign selector for sources (Neg) and targets (Pos).
enum class Sign { Neg, Pos };

inline Sign flip(Sign s) { return s == Sign::Neg ? Sign::Pos : Sign::Neg; }

/// Key of a polygraph generator.
///
/// Two flavours share one type: oriental keys are strictly increasing
/// tuples of nonnegative integers (dimension = length - 1), generic keys
/// are a name plus an explicit dimension.
class GenKey {
public:
    GenKey() = default;

    static GenKey tuple(std::vector<int> entries);
    static GenKey named(std::string name, int dim);

    bool is_tuple() const { return is_tuple_; }
    const std::vector<int>& entries() const { return entries_; }
    const std::string& name() const { return name_; }
    int dim() const { return dim_; }

    /// Display form: <0,1,2> (or unicode angle brackets), raw name otherwise.
    std::string to_string(bool unicode = false) const;
    /// Serial form used in JSON: "0.1.2" for tuples, the raw name otherwise.
    std::string serial() const;
    static GenKey from_serial(const std::string& text, int dim_for_names);

    friend bool operator==(const GenKey& a, const GenKey& b) {
        return a.is_tuple_ == b.is_tuple_ && a.dim_ == b.dim_ &&
               a.entries_ == b.entries_ && a.name_ == b.name_;
    }
    friend std::strong_ordering operator<=>(const GenKey& a, const GenKey& b);

private:
    std::vector<int> entries_;
    std::string name_;
    int dim_ = 0;
    bool is_tuple_ = false;
};

/// Inductive expression denoting a cell of a free omega-category.
///
/// Comp(p, first, second) denotes second o_p first: `first` is composed
/// first along dimension p. Values are immutable and share structure;
/// copying a Cell copies a handle.
class Cell {
public:
    enum class Kind { Gen, Unit, Comp };

    Cell() = default;

    static Cell gen(GenKey key);
    static Cell unit(Cell inner);
    static Cell unit_n(Cell inner, int count);
    /// Raw constructor: requires dim(first) == dim(second) > p.
    static Cell comp_raw(int p, Cell first, Cell second);

    explicit operator bool() const { return node_ != nullptr; }
    Kind kind() const;
    int dim() const;

    const GenKey& key() const;    // Gen only
    const Cell& inner() const;    // Unit only
    int pos() const;              // Comp only
    const Cell& first() const;    // Comp only
    const Cell& second() const;   // Comp only

    /// Strips all outer Units, returning the core expression.
    const Cell& strip_units() const;
    /// Number of outer Units stripped by strip_units().
    int unit_depth() const;

    /// Identity of the underlying node; stable for the Cell's lifetime.
    const void* node_id() const { return node_.get(); }
    bool same_node(const Cell& other) const { return node_ == other.node_; }

    /// Structural (syntactic) equality.
    friend bool operator==(const Cell& a, const Cell& b);
    friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }

private:
    struct Node;
    explicit Cell(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Structural error in a cell expression (bad dimensions, unknown key, ...).
class CellError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// p-composition with the auto-lifting convention: the lower-dimensional
/// operand is wrapped in Units until dimensions match. Composability of the
/// result is not checked here; it is decided on demand by table evaluation.
Cell compose(int p, const Cell& x, const Cell& y);

/// The (dim-1)-source (Neg) or (dim-1)-target (Pos) of `e`, with generator
/// boundaries looked up in `ctx`. Requires dim(e) >= 1.
Cell boundary(Sign eps, const Cell& e, const Polygraph& ctx);

/// The i-source/i-target: boundary applied (dim - i) times; identity at
/// i == dim(e). Requires i <= dim(e).
Cell iterated_boundary(Sign eps, int i, const Cell& e, const Polygraph& ctx);

/// Parse error with byte position into the input text.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t pos)
        : std::runtime_error(std::move(msg)), position(pos) {}
    std::size_t position;
};

/// Prints a cell in oriental-calculus notation. Composition operands drop
/// lifting units (x *p u abbreviates x *p 1..1_u) whenever the text re-parses
/// to the identical expression; parentheses follow the lowest-composition-
/// first priority rule.
std::string print_cell(const Cell& e, bool unicode = false);

/// Parses the grammar accepted by the CLI --cell flag. Generator keys are
/// resolved against `ctx`.
///
///   cell  := term (('*' INT) term)*        lower p binds tighter
///   term  := gen | '1_(' cell ')' | '(' cell ')'
///   gen   := '<' INT (',' INT)* '>' | unicode angles | NAME
Cell parse_cell(std::string_view text, const Polygraph& ctx);

} // namespace orientalis

#endif
