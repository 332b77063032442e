#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <clusterx/arith.hpp>
#include <clusterx/torus.hpp>

#include <json.hpp>

#include <map>
#include <set>

using namespace clusterx;

namespace {

Triple rand_triple(Rng& rng) {
    return {rng.uniform(-50, 50), rng.uniform(-50, 50), rng.uniform(-50, 50)};
}

long long sum(const Triple& p) { return p[0] + p[1] + p[2]; }

}  // namespace

TEST_CASE("generator relations") {
    Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        Triple p = rand_triple(rng);
        CHECK(act_S(act_S(p)) == p);
        CHECK(act_ST(act_ST(act_ST(p))) == p);
        CHECK(sum(act_S(p)) == sum(p));
        CHECK(sum(act_T(p)) == sum(p));
        // S * T = S * S * (ST) = ST
        CHECK(act_S(act_T(p)) == act_ST(p));
    }
    // T is the infinite-order twist, not an involution
    Triple q{0, 0, 1};
    CHECK(act_T(act_T(q)) != q);
    CHECK(act_T(Triple{0, 0, 0}) == Triple{0, 0, 0});
}

TEST_CASE("published twist formula") {
    // the published axis convention: exchange the outer coordinates
    CHECK(published_T(Triple{1, 1, -1}) == Triple{-1, 1, 1});
    CHECK(published_T(Triple{0, 0, 0}) == Triple{0, 0, 0});
    Rng rng(9);
    for (int i = 0; i < 500; ++i) {
        Triple p = rand_triple(rng);
        Triple swapped{p[2], p[1], p[0]};
        CHECK(published_T(p) == act_T(swapped));
        CHECK(sum(published_T(p)) == sum(p));
    }
}

TEST_CASE("word parsing and evaluation") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Triple p = rand_triple(rng);
        CHECK(apply_pl(PLWord::parse("SS"), p) == p);
        CHECK(apply_pl(PLWord::parse("STSTST"), p) == p);  // (ST)^3
        CHECK(apply_pl(PLWord::parse("ST"), p) == act_ST(p));
        CHECK(apply_pl(PLWord::parse("T"), p) == act_T(p));
        CHECK(apply_pl(PLWord::parse("S"), p) == act_S(p));
    }
    CHECK(PLWord::parse("SS").empty());
    CHECK(PLWord::parse("STSTST").empty());
    CHECK_THROWS(PLWord::parse("SX"));
}

TEST_CASE("word reduction preserves the action") {
    Rng rng(13);
    for (int rep = 0; rep < 300; ++rep) {
        int len = static_cast<int>(rng.uniform(0, 12));
        std::string raw;
        for (int i = 0; i < len; ++i) raw += rng.coin() ? 'S' : 'T';
        PLWord w = PLWord::parse(raw);
        CHECK(static_cast<int>(w.letters().size()) <= len);
        Triple p = rand_triple(rng);
        // fold the unreduced letters directly
        Triple direct = p;
        for (auto it = raw.rbegin(); it != raw.rend(); ++it)
            direct = *it == 'S' ? act_S(direct) : act_T(direct);
        CHECK(apply_pl(w, p) == direct);
    }
}

TEST_CASE("orbit patch") {
    auto base = orbit_patch(0);
    REQUIRE(base.size() == 1);
    CHECK(base[0].vertices ==
          std::array<Triple, 3>{Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}});

    auto patch = orbit_patch(6);
    CHECK(patch.size() > 20);

    // vertices stay on the plane x+y+z = 1
    for (const auto& t : patch)
        for (const auto& v : t.vertices) CHECK(sum(v) == 1);

    // stored vertices agree with re-applying the witness word
    for (const auto& t : patch) {
        PLWord w = PLWord::parse(t.word);
        CHECK(apply_pl(w, Triple{1, 0, 0}) == t.vertices[0]);
        CHECK(apply_pl(w, Triple{0, 1, 0}) == t.vertices[1]);
        CHECK(apply_pl(w, Triple{0, 0, 1}) == t.vertices[2]);
    }

    // the action is free on ordered triangles at this depth: adding extra
    // probe points to the key does not merge or split anything
    std::set<std::array<Triple, 5>> extended;
    for (const auto& t : patch) {
        PLWord w = PLWord::parse(t.word);
        extended.insert({t.vertices[0], t.vertices[1], t.vertices[2],
                         apply_pl(w, Triple{1, 2, 4}), apply_pl(w, Triple{3, -1, 5})});
    }
    CHECK(extended.size() == patch.size());

    // every element fixing all three base vertices is trivial; nontrivial
    // reduced words move some vertex
    for (const auto& t : patch)
        if (!t.word.empty())
            CHECK(t.vertices != std::array<Triple, 3>{Triple{1, 0, 0}, Triple{0, 1, 0},
                                                      Triple{0, 0, 1}});
}

TEST_CASE("interior sides are shared by exactly two triangles") {
    auto inner = orbit_patch(5);
    auto outer = orbit_patch(8);
    auto tri_key = [](const std::array<Triple, 3>& v) {
        std::array<Triple, 3> k = v;
        std::sort(k.begin(), k.end());
        return k;
    };
    // geometric triangles (unordered)
    std::set<std::array<Triple, 3>> inner_tris, outer_tris;
    for (const auto& t : inner) inner_tris.insert(tri_key(t.vertices));
    for (const auto& t : outer) outer_tris.insert(tri_key(t.vertices));

    std::map<std::pair<Triple, Triple>, int> side_count;
    for (const auto& k : outer_tris) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                side_count[{std::min(k[i], k[j]), std::max(k[i], k[j])}]++;
    }
    // no side is ever shared by three triangles
    for (const auto& [side, count] : side_count) CHECK(count <= 2);
    // sides of the interior patch are all shared by exactly two
    for (const auto& k : inner_tris)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                CHECK(side_count.at({std::min(k[i], k[j]), std::max(k[i], k[j])}) == 2);
}

TEST_CASE("rendering") {
    CHECK(render_hemisphere({}, "json", false) == "{\"triangles\":[]}");
    std::string empty_svg = render_hemisphere({}, "svg", false);
    CHECK(empty_svg.find("<svg") != std::string::npos);
    CHECK(empty_svg.find("</svg>") != std::string::npos);

    auto patch = orbit_patch(4);
    std::string svg = render_hemisphere(patch, "svg", true);
    std::set<std::array<Triple, 3>> geom;
    for (const auto& t : patch) {
        std::array<Triple, 3> k = t.vertices;
        std::sort(k.begin(), k.end());
        geom.insert(k);
    }
    std::size_t polygons = 0;
    for (std::size_t p = svg.find("<polygon"); p != std::string::npos;
         p = svg.find("<polygon", p + 1))
        ++polygons;
    CHECK(polygons == geom.size());

    std::string json = render_hemisphere(patch, "json", true);
    auto parsed = nlohmann::json::parse(json);
    CHECK(parsed["triangles"].size() == geom.size());
    CHECK(parsed.contains("rays"));
    // round trip through the parser
    CHECK(nlohmann::json::parse(parsed.dump()) == parsed);

    CHECK_THROWS(render_hemisphere(patch, "png", false));
}
