#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <clusterx/seed.hpp>

#include <set>

using namespace clusterx;

namespace {
Seed a2() { return seed_An(2); }
}

TEST_CASE("mutate_seed on A2 and the torus seed") {
    Seed s = a2();
    CHECK(s.epsilon() == IntMatrix{{0, 1}, {-1, 0}});
    Seed t = s.mutated(0);
    CHECK(t.epsilon() == IntMatrix{{0, -1}, {1, 0}});

    Seed tor = seed_torus();
    CHECK(tor.mutated(0).epsilon() == IntMatrix{{0, -2, 2}, {2, 0, -2}, {-2, 2, 0}});
}

TEST_CASE("double mutation is a canonical isomorphism, not the identity basis") {
    for (const Seed& s : {seed_An(3), seed_torus(), Seed({{0, 1}, {-2, 0}}, {2, 1})}) {
        for (int k = 0; k < s.rank(); ++k) {
            Seed twice = s.mutated(k).mutated(k);
            CHECK(twice.epsilon() == s.epsilon());
            CHECK(twice.multipliers() == s.multipliers());
        }
    }
    // the basis genuinely moves when eps_ik != 0
    Seed s = a2();
    CHECK(s.mutated(0).mutated(0).basis() != s.basis());
}

TEST_CASE("mutation flips the k-th row and column signs") {
    Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        Seed s = random_skew_seed(rng, 4, 3);
        int k = static_cast<int>(rng.uniform(0, s.rank() - 1));
        Seed mut = s.mutated(k);
        const IntMatrix& e = s.epsilon();
        const IntMatrix& m = mut.epsilon();
        for (int i = 0; i < s.rank(); ++i) {
            CHECK(m[k][i] == -e[k][i]);
            CHECK(m[i][k] == -e[i][k]);
        }
    }
}

TEST_CASE("mutate_x matches the exchange formula") {
    Seed s = a2();
    auto mu = mutate_x(s, 0);
    CHECK(mu[0].equals(PosRational(LaurentPoly::variable("X0", -1))));
    CHECK(mu[1].equals(PosRational(LaurentPoly::variable("X1") *
                                   (LaurentPoly(1L) + LaurentPoly::variable("X0")))));
    for (const auto& f : mu) CHECK(f.is_subtraction_free());

    // eps_ik = 0 degenerates to the identity
    Seed z(IntMatrix{{0, 0}, {0, 0}}, {1, 1});
    CHECK(mutate_x(z, 0)[1].is_variable("X1"));

    // eps_ik = 2 on the torus seed: X2 -> X2 (1 + X0^-1)^-2
    Seed tor = seed_torus();
    auto tm = mutate_x(tor, 0);
    PosRational expect(LaurentPoly::variable("X2"),
                       (LaurentPoly(1L) + LaurentPoly::variable("X0", -1)).pow(2));
    CHECK(tm[2].equals(expect));
}

TEST_CASE("mutation of the chart is involutive") {
    CHECK(check_involution(a2(), 0));
    CHECK(check_involution(Seed(IntMatrix{{0}}, {1}), 0));
    for (int k = 0; k < 3; ++k) CHECK(check_involution(seed_torus(), k));

    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        Seed s = random_skew_seed(rng, 4, 3);
        int k = static_cast<int>(rng.uniform(0, s.rank() - 1));
        CHECK(check_involution(s, k));
    }
}

TEST_CASE("A2 pentagon periodicity is an exact symbolic identity") {
    Seed s = a2();
    auto [end, sub] = compose_mutations(s, {0, 1, 0, 1, 0});
    // five mutations followed by the index swap give the identity
    CHECK(sub[0].is_variable("X1"));
    CHECK(sub[1].is_variable("X0"));
    Seed swapped = end.permuted({1, 0});
    CHECK(swapped.same_exchange_data(s));
}

TEST_CASE("exchange graph of A2 is the pentagon") {
    ExchangeGraph g = explore_exchange_graph(a2(), 100);
    CHECK(!g.truncated());
    CHECK(g.nodes().size() == 5);
    for (int u = 0; u < 5; ++u)
        for (int k = 0; k < 2; ++k) {
            const auto* e = g.edge_at(u, k);
            REQUIRE(e != nullptr);
            CHECK(e->to != u);
        }
}

TEST_CASE("exchange graph counts match triangulation counts") {
    CHECK(explore_exchange_graph(seed_An(3), 1000).nodes().size() == 14);
    CHECK(explore_exchange_graph(seed_An(4), 1000).nodes().size() == 42);
}

TEST_CASE("infinite type truncates") {
    ExchangeGraph g = explore_exchange_graph(seed_torus(), 50);
    CHECK(g.truncated());
    CHECK(g.nodes().size() == 50);
}

TEST_CASE("edges are involutive through the recorded permutations") {
    ExchangeGraph g = explore_exchange_graph(seed_An(3), 1000);
    for (const auto& e : g.edges()) {
        // going back along the permuted direction returns to the source
        const auto* back = g.edge_at(e.to, e.perm[e.dir]);
        REQUIRE(back != nullptr);
        CHECK(back->to == e.from);
    }
}

TEST_CASE("transitions from the root are exact chart maps") {
    ExchangeGraph g = explore_exchange_graph(a2(), 100);
    const auto* e0 = g.edge_at(0, 0);
    const auto& tr = g.transition(e0->to);
    auto mu = mutate_x(g.nodes()[0].seed, 0);
    for (int i = 0; i < 2; ++i) CHECK(tr[e0->perm[i]].equals(mu[i]));

    // base values are consistent with the symbolic transition
    std::map<std::string, Rat> root_point{{"X0", Rat(2)}, {"X1", Rat(3)}};
    for (std::size_t u = 0; u < g.nodes().size(); ++u) {
        const auto& t = g.transition(static_cast<int>(u));
        for (int i = 0; i < 2; ++i)
            CHECK(t[i].eval(root_point) == g.nodes()[u].base_values[0][i]);
    }
}

TEST_CASE("chart merging is symbolically exact on every edge") {
    // every edge, including the ones that close cycles, satisfies the
    // transition identity as exact rational functions; this certifies that
    // the base-point merging only ever identified genuinely equal charts
    for (int n : {2, 3}) {
        ExchangeGraph g = explore_exchange_graph(seed_An(n), 1000);
        for (const auto& e : g.edges()) {
            const auto& from = g.transition(e.from);
            const auto& to = g.transition(e.to);
            std::vector<PosRational> step = mutate_x(g.nodes()[e.from].seed, e.dir);
            std::map<std::string, PosRational> images;
            for (int i = 0; i < n; ++i)
                images.emplace(g.nodes()[e.from].seed.labels()[i], from[i]);
            for (int i = 0; i < n; ++i) {
                CHECK(to[e.perm[i]].equals(substitute(step[i], images)));
                CHECK(to[e.perm[i]].is_subtraction_free());
            }
        }
    }
}

TEST_CASE("subseed restricts the exchange data") {
    Seed s3 = seed_An(3);
    Seed sub = s3.subseed({0, 1});
    CHECK(sub.epsilon() == a2().epsilon());
    CHECK(s3.subseed({0, 1, 2}).same_exchange_data(s3));
    CHECK(seed_torus().subseed({0}).epsilon() == IntMatrix{{0}});
    CHECK_THROWS(s3.subseed({}));
    CHECK_THROWS(s3.subseed({0, 0}));
}

TEST_CASE("seed isomorphism search") {
    Seed s = seed_An(3);
    Seed p = s.permuted({2, 0, 1});
    auto iso = find_seed_iso(s, p);
    REQUIRE(iso.has_value());
    const IntMatrix& es = s.epsilon();
    const IntMatrix& ep = p.epsilon();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(ep[(*iso)[i]][(*iso)[j]] == es[i][j]);
    CHECK(!find_seed_iso(s, seed_torus()).has_value());
}
