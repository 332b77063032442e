#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <clusterx/json_io.hpp>
#include <clusterx/laurent.hpp>

#include <cmath>

using namespace clusterx;

namespace {

LaurentPoly X(int i, int e = 1) {
    return LaurentPoly::variable("X" + std::to_string(i), e);
}

std::map<std::string, Rat> pt(std::vector<long> v) {
    std::map<std::string, Rat> m;
    for (std::size_t i = 0; i < v.size(); ++i) m["X" + std::to_string(i + 1)] = Rat(v[i]);
    return m;
}

// independent oracle: brute-force multiply via evaluation at many points
bool agree_on_grid(const LaurentPoly& p, const LaurentPoly& q) {
    for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 4; ++b) {
            std::map<std::string, Rat> m{{"X1", Rat(a, 1)}, {"X2", Rat(b, 3)}};
            if (p.eval(m) != q.eval(m)) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    // (X1 + X2) + (X1 - X2) = 2*X1
    LaurentPoly s = (X(1) + X(2)) + (X(1) - X(2));
    CHECK(s == LaurentPoly::monomial({"X1"}, {1}, 2));

    // X1 * X1^-1 = 1
    CHECK((X(1) * X(1, -1)).is_one());

    // (1+X1)(1+X1^-1) = X1^-1 + 2 + X1, frozen from hand expansion
    LaurentPoly p = (LaurentPoly(1L) + X(1)) * (LaurentPoly(1L) + X(1, -1));
    LaurentPoly expect = X(1, -1) + LaurentPoly(2L) + X(1);
    CHECK(p == expect);
    CHECK(agree_on_grid(p, expect));
    CHECK(p.all_positive());
}

TEST_CASE("canonical form and text") {
    LaurentPoly p = LaurentPoly(3L) - X(1, -1) * LaurentPoly::monomial({"X2"}, {2}, 1);
    CHECK(p.to_text() == "-1*X1^-1*X2^2 + 3");
    CHECK(parse_laurent(p.to_text()) == p);
    CHECK(parse_laurent("0").is_zero());
    CHECK(parse_laurent("X1 - X1").is_zero());
    CHECK(LaurentPoly().to_text() == "0");
    // unused variables are trimmed: equality is structural
    CHECK(X(1) * LaurentPoly::monomial({"X2"}, {0}, 1) == X(1));
}

TEST_CASE("substitution composes chart transitions") {
    // f = X2, X2 -> X2(1+X1)
    PosRational img(X(2) * (LaurentPoly(1L) + X(1)));
    PosRational r = substitute(X(2), {{"X2", img}});
    CHECK(r.equals(img));

    // identity substitution
    PosRational id = substitute(X(1), {{"X1", PosRational(X(1))}});
    CHECK(id.is_variable("X1"));

    // f = X1*X2 with X1 -> X1^-1, X2 -> X2(1+X1)
    PosRational g = substitute(X(1) * X(2),
                               {{"X1", PosRational(X(1, -1))},
                                {"X2", PosRational(X(2) * (LaurentPoly(1L) + X(1)))}});
    PosRational expect(X(1, -1) * X(2) * (LaurentPoly(1L) + X(1)));
    CHECK(g.equals(expect));
}

TEST_CASE("substitution with rational images and zero denominators") {
    // X1 -> (1+X2)/X2; then f = X1^-1 has denominator 1+X2
    PosRational img(LaurentPoly(1L) + X(2), X(2));
    PosRational r = substitute(X(1, -1), {{"X1", img}});
    CHECK(r.equals(PosRational(X(2), LaurentPoly(1L) + X(2))));
    CHECK_THROWS(substitute(X(1), std::map<std::string, PosRational>{}));
}

TEST_CASE("is_laurent: single chart membership test") {
    PosRational a(X(1).pow(2) - X(2).pow(2), X(1) - X(2));
    auto qa = a.as_laurent();
    REQUIRE(qa.has_value());
    CHECK(*qa == X(1) + X(2));

    PosRational b(LaurentPoly(1L) + X(1), X(1));
    auto qb = b.as_laurent();
    REQUIRE(qb.has_value());
    CHECK(*qb == X(1, -1) + LaurentPoly(1L));

    PosRational c(LaurentPoly(1L) + X(1), LaurentPoly(1L) + X(2));
    CHECK(!c.as_laurent().has_value());
}

TEST_CASE("is_laurent implies exact product") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        // random q and d, n = q*d must divide back exactly
        auto rand_poly = [&](int terms) {
            LaurentPoly p;
            for (int t = 0; t < terms; ++t) {
                int e1 = static_cast<int>(rng.uniform(-2, 2));
                int e2 = static_cast<int>(rng.uniform(-2, 2));
                Int c(rng.uniform(-4, 4));
                p = p + LaurentPoly::monomial({"X1", "X2"}, {e1, e2}, c);
            }
            return p;
        };
        LaurentPoly q = rand_poly(3), d = rand_poly(3);
        if (d.is_zero()) continue;
        auto back = divide_exact(q * d, d);
        REQUIRE(back.has_value());
        CHECK(*back == q);
    }
}

TEST_CASE("tropicalize") {
    // X2(1+X1) -> x2 + max(0, x1)
    PosRational f(X(2) * (LaurentPoly(1L) + X(1)));
    TropExpr t = tropicalize(f);
    CHECK(t.eval(pt({0, 0})) == Rat(0));
    CHECK(t.eval(pt({2, 0})) == Rat(2));
    CHECK(t.eval(pt({-3, 5})) == Rat(5));

    // monomial X1^3 X2^-1 -> 3x1 - x2
    TropExpr m = tropicalize(PosRational(X(1, 3) * X(2, -1)));
    CHECK(m.eval(pt({2, 5})) == Rat(1));

    // (X1+X2)/(1+X1X2) -> max(x1,x2) - max(0, x1+x2)
    PosRational g(X(1) + X(2), LaurentPoly(1L) + X(1) * X(2));
    TropExpr tg = tropicalize(g);
    auto direct = [](long x1, long x2) {
        return Rat(std::max(x1, x2) - std::max(0L, x1 + x2));
    };
    for (long x1 = -3; x1 <= 3; ++x1)
        for (long x2 = -3; x2 <= 3; ++x2)
            CHECK(tg.eval(pt({x1, x2})) == direct(x1, x2));

    CHECK_THROWS(tropicalize(PosRational(X(1) - X(2))));
}

TEST_CASE("tropicalization is a strict valuation shadow") {
    // trop(f*g) = trop f + trop g and trop(f+g) = max pointwise
    Rng rng(11);
    auto rand_pos = [&](int terms) {
        LaurentPoly p;
        while (p.term_count() < static_cast<std::size_t>(terms)) {
            int e1 = static_cast<int>(rng.uniform(-3, 3));
            int e2 = static_cast<int>(rng.uniform(-3, 3));
            p = p + LaurentPoly::monomial({"X1", "X2"}, {e1, e2}, Int(rng.uniform(1, 5)));
        }
        return PosRational(p);
    };
    for (int trial = 0; trial < 25; ++trial) {
        PosRational f = rand_pos(3), g = rand_pos(2);
        TropExpr tf = tropicalize(f), tg = tropicalize(g);
        TropExpr tfg = tropicalize(f * g), tsum = tropicalize(f + g);
        for (int i = 0; i < 40; ++i) {
            auto p = pt({rng.uniform(-9, 9), rng.uniform(-9, 9)});
            CHECK(tfg.eval(p) == tf.eval(p) + tg.eval(p));
            CHECK(tsum.eval(p) == std::max(tf.eval(p), tg.eval(p)));
        }
    }
}

TEST_CASE("piecewise-linear expression algebra") {
    auto x = TropExpr::linear({{"X1", Int(1)}});
    auto y = TropExpr::linear({{"X2", Int(1)}});
    auto e = TropExpr::min_of({TropExpr::sum({x, TropExpr::constant(Rat(3))}),
                               TropExpr::scale(Int(2), y)});
    CHECK(e.eval(pt({0, 0})) == Rat(0));
    CHECK(e.eval(pt({5, 1})) == Rat(2));
    CHECK(e.eval(pt({-9, 4})) == Rat(-6));
    CHECK(!e.to_string().empty());
    CHECK_THROWS(TropExpr::max_of({}));
    CHECK_THROWS(e.eval({}));
}

TEST_CASE("numeric limit check") {
    // f = X1+X2 at x=(3,5), C=40: log(e^120+e^200)/40 ~ 5
    PosRational f(X(1) + X(2));
    auto vals = numeric_limit_check(f, pt({3, 5}), {40.0});
    CHECK(std::fabs(vals[0] - 5.0) < 0.1);

    // monomials are scale-exact
    PosRational m(X(1, 2));
    auto mv = numeric_limit_check(m, pt({7}), {10.0, 60.0});
    CHECK(std::fabs(mv[0] - 14.0) < 1e-9);
    CHECK(std::fabs(mv[1] - 14.0) < 1e-9);

    // f = 1 + X1 at x = 0 drifts to 0 like log(2)/C
    PosRational g(LaurentPoly(1L) + X(1));
    auto gv = numeric_limit_check(g, pt({0}), {40.0, 400.0});
    CHECK(std::fabs(gv[0] - std::log(2.0) / 40.0) < 1e-9);
    CHECK(gv[1] < gv[0]);
}

TEST_CASE("pos rational normalization") {
    // monomial content is stripped, full gcd is not attempted
    PosRational r(X(1, 2) + X(1, 3), X(1, 2));
    CHECK(r.num() == LaurentPoly(1L) + X(1));
    CHECK(r.den().is_one());
    // monomial denominators fold into the numerator; sign normalized
    PosRational s(X(1), -X(2));
    CHECK(s.den().is_one());
    CHECK(s.num() == -(X(1) * X(2, -1)));
    CHECK_THROWS(PosRational(X(1), LaurentPoly()));
}

TEST_CASE("json round trips") {
    for (const char* text : {"-1*X1^-1*X2^2 + 3", "0", "7", "X1*X2 - X1"}) {
        LaurentPoly p = parse_laurent(text);
        CHECK(laurent_from_json(laurent_to_json(p)) == p);
    }
    CHECK_THROWS(laurent_from_json(Json{{"vars", Json::array()},
                                        {"terms", Json::array({Json{{"exp", {1}}, {"coef", "2"}}})}}));
}

TEST_CASE("parser round trips") {
    for (const char* text : {"X1 + X2", "-3*X1^-2*X2 + 7", "(1 + X1)*(1 + X2^-1)",
                             "X1^3*X2^-1", "2 - 2"}) {
        LaurentPoly p = parse_laurent(text);
        CHECK(parse_laurent(p.to_text()) == p);
    }
    PosRational pr = parse_pos_rational("(X1 + X2) / (1 + X1*X2)");
    CHECK(pr.num() == X(1) + X(2));
    CHECK(pr.den() == LaurentPoly(1L) + X(1) * X(2));
    CHECK_THROWS(parse_laurent("X1 +"));
    CHECK_THROWS(parse_laurent("(X1"));
}
