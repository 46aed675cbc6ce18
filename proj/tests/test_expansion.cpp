#include "doctest.h"

#include "test_support.hpp"

#include "orientalis/verify.hpp"

#include <thread>

using namespace orientalis;
using namespace orientalis::testing;

TEST_CASE("expand the empty polygraph") {
    auto empty = std::make_shared<Polygraph>();
    auto step = expand(empty, ExpandNaming::Simplicial);
    CHECK(step->result().total_generators() == 1);
    CHECK(step->result().generators(0).front() == T({0}));
    CHECK(step->origin() == T({0}));
}

TEST_CASE("expansion doubles the generators plus the origin") {
    OrientalTower tower;
    for (int n = 0; n <= 5; ++n) {
        auto step = tower.step(n + 1);
        CHECK(step->result().total_generators() ==
              2 * step->base().total_generators() + 1);
    }
}

TEST_CASE("expanding O_1 yields the O_2 presentation") {
    OrientalTower tower;
    auto step = tower.step(2);
    const Polygraph& o2 = step->result();
    CHECK(o2.generators(0) == std::vector<GenKey>{T({0}), T({1}), T({2})});
    CHECK(o2.generators(1) == std::vector<GenKey>{T({0, 1}), T({0, 2}), T({1, 2})});
    CHECK(o2.generators(2) == std::vector<GenKey>{T({0, 1, 2})});
    CHECK(o2.src(T({0, 1, 2})) == G({0, 2}));
    CHECK(o2.tgt(T({0, 1, 2})) == compose(0, G({0, 1}), G({1, 2})));
}

TEST_CASE("fresh naming for generic polygraphs") {
    auto s = std::make_shared<Polygraph>();
    GenKey a = GenKey::named("a", 0), b = GenKey::named("b", 0);
    GenKey f = GenKey::named("f", 1);
    s->add_generator(a);
    s->add_generator(b);
    s->add_generator(f, Cell::gen(a), Cell::gen(b));
    auto step = expand(s, ExpandNaming::Fresh);
    CHECK(step->origin() == GenKey::named("v", 0));
    const Polygraph& r = step->result();
    CHECK(r.total_generators() == 7);
    GenKey ra = GenKey::named("r.a", 1), rb = GenKey::named("r.b", 1);
    GenKey rf = GenKey::named("r.f", 2);
    CHECK(r.contains(ra));
    CHECK(r.src(ra) == Cell::gen(step->origin()));
    CHECK(r.tgt(ra) == Cell::gen(a));
    // s(r_f) = chevron(t f) = r_b, t(r_f) = f o_0 r_a.
    CHECK(r.src(rf) == Cell::gen(rb));
    CHECK(r.tgt(rf) == compose(0, Cell::gen(ra), Cell::gen(f)));

    SUBCASE("origin name avoids collisions") {
        auto t = std::make_shared<Polygraph>();
        t->add_generator(GenKey::named("v", 0));
        auto step2 = expand(t, ExpandNaming::Fresh);
        CHECK(step2->origin() == GenKey::named("v'", 0));
    }
}

TEST_CASE("chevron on generators and units") {
    OrientalTower tower;
    auto step2 = tower.step(2);
    CHECK(step2->chevron(G({1, 2})) == G({0, 1, 2}));
    CHECK(step2->chevron(Cell::gen(step2->origin())) ==
          Cell::unit(Cell::gen(step2->origin())));
    CHECK(step2->chevron(G({0, 2})) == Cell::unit(G({0, 2})));
    Cell u = G({1, 2});
    CHECK(step2->chevron(Cell::unit(u)) == Cell::unit(step2->chevron(u)));

    auto step1 = tower.step(1);
    Cell chev = step1->chevron(G({1}));
    CHECK(chev == G({0, 1}));
    CHECK(step1->chevron(chev) == Cell::unit(G({0, 1})));
}

TEST_CASE("chevron boundary contract by tables") {
    OrientalTower tower;
    auto step = tower.step(3);
    auto ctx = tower.context(3);
    const Polygraph& o3 = step->result();
    RandomCells random(ctx, 2024);
    std::vector<Cell> samples;
    for (const auto& g : o3.all_generators()) samples.push_back(Cell::gen(g));
    for (int i = 0; i < 40; ++i) samples.push_back(random.cell(4));
    for (const Cell& e : samples) {
        Cell chev = step->chevron(e);
        if (e.dim() >= 1) {
            CHECK(ctx->cell_eq(boundary(Sign::Neg, chev, o3),
                               step->chevron(boundary(Sign::Pos, e, o3))));
            Cell rhs = e;
            for (int i = 0; i < e.dim(); ++i)
                rhs = compose(i, step->chevron(iterated_boundary(Sign::Neg, i, e, o3)),
                              rhs);
            CHECK(ctx->cell_eq(boundary(Sign::Pos, chev, o3), rhs));
        } else {
            CHECK(ctx->cell_eq(boundary(Sign::Neg, chev, o3),
                               Cell::gen(step->origin())));
            CHECK(ctx->cell_eq(boundary(Sign::Pos, chev, o3), e));
        }
        // The chevron of any chevron is a unit, composites included.
        CHECK(ctx->cell_eq(step->chevron(chev), Cell::unit(chev)));
    }
}

TEST_CASE("eta embeds generators with shifted keys") {
    OrientalTower tower;
    auto step2 = tower.step(2);
    GenMap f = eta(*step2);
    CHECK(f.image(T({0, 1})) == G({1, 2}));
    for (const auto& g : step2->base().all_generators()) {
        CHECK(f.image(g).kind() == Cell::Kind::Gen);
        if (g.dim() >= 1) {
            // eta preserves boundaries syntactically.
            CHECK(apply(f, step2->base().src(g)) ==
                  step2->result().src(f.image(g).key()));
            CHECK(apply(f, step2->base().tgt(g)) ==
                  step2->result().tgt(f.image(g).key()));
        }
    }
    // lambda(eta) is a split injection: generator images are pairwise
    // distinct basis chains.
    for (int n = 1; n <= 4; ++n) {
        GenMap em = eta(*tower.step(n));
        std::set<GenKey> images;
        for (const auto& g : em.source->all_generators()) {
            Chain c = linearize(em.image(g));
            REQUIRE(c.support_size() == 1);
            CHECK(c.terms().begin()->second == 1);
            CHECK(images.insert(c.terms().begin()->first).second);
        }
    }
}

TEST_CASE("mu collapses the first two vertices") {
    OrientalTower tower;
    GenMap f = mu(*tower.step(2), *tower.step(3));
    CHECK(f.image(T({0, 1, 2, 3})) == Cell::unit(G({0, 1, 2})));
    CHECK(f.image(T({2, 3})) == G({1, 2}));
    CHECK(f.image(T({0, 1})) == Cell::unit(G({0})));
}

TEST_CASE("T on maps") {
    OrientalTower tower;
    // T of the identity is the identity, generator-wise by tables.
    GenMap id1 = identity_map(tower.oriental(1));
    GenMap tid = T_on_map(id1, *tower.step(2), *tower.step(2));
    CHECK(genmap_eq_tables(tid, identity_map(tower.oriental(2)), "T(id)").ok());

    // T of the face O_0 -> O_1 missing 0.
    GenMap d0 = face_map(0, 1, tower);
    GenMap td0 = T_on_map(d0, *tower.step(1), *tower.step(2));
    CHECK(td0.image(T({1})) == G({2}));
    CHECK(td0.image(T({0})) == G({0}));
    CHECK(td0.image(T({0, 1})) == G({0, 2}));
    // Cross-check with the cosimplicial formula: T shifts the missing vertex,
    // so T(delta_0^1) is the injection [1] -> [2] with 0 -> 0, 1 -> 2.
    CHECK(genmap_eq_tables(td0, face_map(1, 2, tower), "T(d0) = d1").ok());

    // Naturality square T(f) o eta = eta o f on generators, by tables.
    GenMap lhs = compose_maps(td0, eta(*tower.step(1)));
    GenMap rhs = compose_maps(eta(*tower.step(2)), d0);
    CHECK(genmap_eq_tables(lhs, rhs, "naturality of eta").ok());
}

TEST_CASE("apply substitutes homomorphically") {
    OrientalTower tower;
    GenMap f = mu(*tower.step(2), *tower.step(3));
    Cell target = tower.oriental(3)->tgt(T({0, 1, 2, 3}));
    Chain image = linearize(apply(f, target));
    Chain expected(2);
    expected.add(T({0, 1, 2}), 1);
    CHECK(image == expected);

    RandomCells random(tower.context(3), 88);
    for (int i = 0; i < 30; ++i) {
        Cell e = random.cell(4);
        CHECK(apply(f, Cell::unit(e)) == Cell::unit(apply(f, e)));
    }
    GenMap em = eta(*tower.step(4)); // O_3 -> O_4
    Cell shifted = apply(em, target);
    Chain c = linearize(shifted);
    for (const auto& [k, v] : c.terms()) CHECK(k.entries().front() >= 1);

    CHECK_THROWS_AS(f.image(GenKey::named("nope", 1)), CellError);
}

TEST_CASE("monad laws at small levels") {
    OrientalTower tower;
    for (int k = 1; k <= 2; ++k) {
        auto step_k = tower.step(k);
        auto step_k1 = tower.step(k + 1);
        GenMap mu_k = mu(*step_k, *step_k1);
        GenMap id_k = identity_map(tower.oriental(k));
        CHECK(genmap_eq_tables(compose_maps(mu_k, eta(*step_k1)), id_k, "right unit")
                  .ok());
        CHECK(genmap_eq_tables(
                  compose_maps(mu_k, T_on_map(eta(*step_k), *step_k, *step_k1)), id_k,
                  "left unit")
                  .ok());
    }
}

TEST_CASE("monad laws up to the expanded contexts") {
    // Unit laws on O_k for k <= 5 and associativity as maps O_k -> O_{k-2}
    // for k <= 6.
    OrientalTower tower;
    auto report = monad_law_check(5, 6, tower);
    CHECK(report.ok());
    if (!report.ok()) MESSAGE(report.summary());
}

TEST_CASE("monad laws over a generic named polygraph") {
    // The fresh-naming path: expand an interval twice and check the unit
    // laws generator-wise by tables.
    auto interval = std::make_shared<Polygraph>();
    GenKey a = GenKey::named("a", 0), b = GenKey::named("b", 0);
    interval->add_generator(a);
    interval->add_generator(b);
    interval->add_generator(GenKey::named("f", 1), Cell::gen(a), Cell::gen(b));
    auto inner = expand(interval, ExpandNaming::Fresh);
    auto outer = expand(inner->result_ptr(), ExpandNaming::Fresh);
    REQUIRE(strong_steiner_check(outer->result()).ok());
    GenMap m = mu(*inner, *outer);
    GenMap id = identity_map(inner->result_ptr());
    CHECK(genmap_eq_tables(compose_maps(m, eta(*outer)), id, "generic right unit")
              .ok());
    CHECK(genmap_eq_tables(compose_maps(m, T_on_map(eta(*inner), *inner, *outer)),
                           id, "generic left unit")
              .ok());
}

TEST_CASE("chevron cache is safe under concurrent use") {
    OrientalTower tower;
    auto step = tower.step(3);
    const Polygraph& o3 = step->result();
    Cell target = o3.tgt(T({0, 1, 2, 3}));
    Cell reference = step->chevron(target);
    std::vector<std::thread> workers;
    std::vector<Cell> results(8);
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&, t] { results[static_cast<std::size_t>(t)] =
                                          step->chevron(target); });
    for (auto& w : workers) w.join();
    for (const auto& r : results) CHECK(r == reference);
}
