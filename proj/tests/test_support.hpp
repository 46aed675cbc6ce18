#ifndef ORIENTALIS_TEST_SUPPORT_HPP
#define ORIENTALIS_TEST_SUPPORT_HPP

#include "orientalis/oriental.hpp"
#include "orientalis/steiner.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace orientalis::testing {

inline GenKey T(std::initializer_list<int> entries) {
    return GenKey::tuple(std::vector<int>(entries));
}

inline Cell G(std::initializer_list<int> entries) { return Cell::gen(T(entries)); }

/// The polygraph of O_2 written out by hand (the paper's three-object,
/// three-arrow, one-triangle example in simplicial keys). Used by low-level
/// tests that should not depend on the expansion machinery.
inline std::shared_ptr<const Polygraph> handmade_o2() {
    auto s = std::make_shared<Polygraph>();
    s->add_generator(T({0}));
    s->add_generator(T({1}));
    s->add_generator(T({2}));
    s->add_generator(T({0, 1}), G({0}), G({1}));
    s->add_generator(T({0, 2}), G({0}), G({2}));
    s->add_generator(T({1, 2}), G({1}), G({2}));
    s->add_generator(T({0, 1, 2}), G({0, 2}), compose(0, G({0, 1}), G({1, 2})));
    return s;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

/// Composable-by-construction random expressions over a strong Steiner
/// polygraph; partners are found through table boundaries.
class RandomCells {
public:
    RandomCells(std::shared_ptr<TableContext> ctx, unsigned seed)
        : ctx_(std::move(ctx)), rng_(seed) {
        for (const auto& g : ctx_->polygraph().all_generators())
            gens_.push_back(Cell::gen(g));
    }

    Cell gen() { return gens_[rng_() % gens_.size()]; }

    Cell cell(int ops) {
        Cell e = gen();
        for (int k = 0; k < ops; ++k) {
            switch (rng_() % 3) {
            case 0:
                e = Cell::unit(e);
                break;
            default: {
                bool after = rng_() % 2 == 0;
                if (auto next = try_compose(e, after)) e = *next;
                break;
            }
            }
        }
        return e;
    }

private:
    std::optional<Cell> try_compose(const Cell& e, bool after) {
        std::vector<Cell> pool = gens_;
        std::shuffle(pool.begin(), pool.end(), rng_);
        for (const auto& h : pool) {
            int n = std::max(e.dim(), h.dim());
            if (n == 0) continue;
            CellTable te = ctx_->eval(Cell::unit_n(e, n - e.dim()));
            CellTable th = ctx_->eval(Cell::unit_n(h, n - h.dim()));
            for (int p = 0; p < n; ++p) {
                if (after) {
                    // h o_p e
                    if (table_boundary_i(Sign::Pos, p, te) ==
                        table_boundary_i(Sign::Neg, p, th))
                        return compose(p, e, h);
                } else {
                    if (table_boundary_i(Sign::Pos, p, th) ==
                        table_boundary_i(Sign::Neg, p, te))
                        return compose(p, h, e);
                }
            }
        }
        return std::nullopt;
    }

    std::shared_ptr<TableContext> ctx_;
    std::mt19937 rng_;
    std::vector<Cell> gens_;
};

} // namespace orientalis::testing

#endif
