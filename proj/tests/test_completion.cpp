#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <clusterx/completion.hpp>

using namespace clusterx;

namespace {

ExchangeGraph an_graph(int n) {
    return explore_exchange_graph(triangulation_seed(zig_zag_triangulation(n + 3)), 100000);
}

}  // namespace

TEST_CASE("strata counts for small types") {
    // A1: the open stratum plus two boundary points
    StrataPoset a1 = strata_poset(an_graph(1));
    CHECK(a1.count_by_codim(1) == std::vector<std::size_t>{1, 2});

    StrataPoset a2 = strata_poset(an_graph(2));
    CHECK(a2.count_by_codim(2) == std::vector<std::size_t>{1, 5, 5});

    StrataPoset a3 = strata_poset(an_graph(3));
    CHECK(a3.count_by_codim(3) == std::vector<std::size_t>{1, 9, 21, 14});
}

TEST_CASE("strata counts equal non-crossing subset counts") {
    for (int n = 1; n <= 3; ++n) {
        auto counts = strata_poset(an_graph(n)).count_by_codim(n);
        for (int k = 0; k <= n; ++k)
            CHECK(counts[k] == associahedron_faces(n + 3, k).size());
    }
}

TEST_CASE("truncated graphs are rejected") {
    CHECK_THROWS(strata_poset(explore_exchange_graph(seed_torus(), 30)));
}

TEST_CASE("frozen transport keeps strata membership") {
    ExchangeGraph g = an_graph(2);
    StrataPoset poset = strata_poset(g);
    for (const auto& e : g.edges()) {
        // a zero set containing the mutation direction transports along perm
        std::set<int> zs{e.dir};
        std::set<int> image;
        for (int i : zs) image.insert(e.perm[i]);
        CHECK(poset.stratum_of(e.from, zs) == poset.stratum_of(e.to, image));
    }
}

TEST_CASE("poset order is transitive along chains of zero sets") {
    ExchangeGraph g = an_graph(3);
    StrataPoset poset = strata_poset(g);
    int deep = poset.stratum_of(0, {0});
    int mid = poset.stratum_of(0, {0, 1});
    int open = poset.stratum_of(0, {0, 1, 2});
    CHECK(poset.leq(deep, mid));
    CHECK(poset.leq(mid, open));
    CHECK(poset.leq(deep, open));
    CHECK(!poset.leq(open, deep));
    CHECK(poset.strata[open].codim == 0);
    CHECK(poset.strata[deep].codim == 2);
}

TEST_CASE("cutting the polygon") {
    // hexagon cut along (1,4): two squares
    auto parts = cut_polygon(6, {chord(1, 4)});
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::vector<int>{1, 2, 3, 4});
    CHECK(parts[1] == std::vector<int>{4, 5, 6, 1});

    // pentagon cut along (1,3): triangle and square
    auto pparts = cut_polygon(5, {chord(1, 3)});
    REQUIRE(pparts.size() == 2);
    CHECK(pparts[0].size() + pparts[1].size() == 7);

    // no cuts: the full polygon
    CHECK(cut_polygon(7, {}).size() == 1);

    // a cut whose lower endpoint appears later in the stored cyclic order
    auto fan = cut_polygon(5, {chord(1, 3), chord(1, 4)});
    REQUIRE(fan.size() == 3);
    for (const auto& part : fan) CHECK(part.size() >= 3);

    CHECK_THROWS(cut_polygon(6, {chord(1, 4), chord(2, 5)}));
    CHECK_THROWS(cut_polygon(6, {chord(1, 2)}));
}

TEST_CASE("codim-1 strata correspond to single diagonals") {
    ExchangeGraph g = an_graph(3);
    auto alignment = align_polygon_charts(g, zig_zag_triangulation(6));
    REQUIRE(alignment.has_value());
    StrataPoset poset = strata_poset(g);
    std::set<std::vector<Chord>> singletons;
    for (const Stratum& s : poset.strata)
        if (s.codim == 1) singletons.insert(stratum_cut_diagonals(s, *alignment));
    CHECK(singletons.size() == all_diagonals(6).size());
}

TEST_CASE("strata poset matches the associahedron face lattice") {
    for (int n = 1; n <= 3; ++n) {
        AssociahedronMatch m = match_associahedron(an_graph(n), zig_zag_triangulation(n + 3));
        INFO(m.detail);
        CHECK(static_cast<bool>(m));
    }
}
