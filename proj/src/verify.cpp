#include <clusterx/verify.hpp>

#include <clusterx/completion.hpp>
#include <clusterx/json_io.hpp>
#include <clusterx/lamination.hpp>
#include <clusterx/torus.hpp>
#include <clusterx/tropical.hpp>

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace clusterx {

namespace {

CheckResult pass(std::string name, std::string detail) {
    return {std::move(name), true, std::move(detail)};
}
CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

// random subtraction-free Laurent polynomial in the given variables
LaurentPoly random_positive_poly(Rng& rng, const std::vector<std::string>& vars,
                                 int max_terms) {
    LaurentPoly p;
    int terms = static_cast<int>(rng.uniform(1, max_terms));
    while (p.term_count() < static_cast<std::size_t>(terms)) {
        LaurentPoly::Exponents e(vars.size());
        for (auto& x : e) x = static_cast<int>(rng.uniform(-3, 3));
        p = p + LaurentPoly::monomial(vars, e, Int(rng.uniform(1, 9)));
    }
    return p;
}

}  // namespace

CheckResult check_mutation_involution(const VerifyOptions& o) {
    const std::string name = "mutation-involution";
    Rng rng(o.rng_seed ^ 0x11);
    for (int trial = 0; trial < 200; ++trial) {
        Seed s = random_skew_seed(rng, 4, 3);
        int k = static_cast<int>(rng.uniform(0, s.rank() - 1));
        if (!check_involution(s, k))
            return fail(name, "random seed " + std::to_string(trial) + " not involutive");
    }
    // pentagon periodicity: five mutations and the swap give the identity
    Seed a2 = seed_An(2);
    auto [end, sub] = compose_mutations(a2, {0, 1, 0, 1, 0});
    if (!sub[0].is_variable("X1") || !sub[1].is_variable("X0"))
        return fail(name, "pentagon chart identity failed");
    if (!end.permuted({1, 0}).same_exchange_data(a2))
        return fail(name, "pentagon seed identity failed");
    return pass(name, "200 random seeds involutive; pentagon identity exact");
}

CheckResult check_exchange_counts(const VerifyOptions&) {
    const std::string name = "exchange-graph-counts";
    const std::size_t expected[] = {5, 14, 42, 132};
    std::ostringstream detail;
    for (int n = 2; n <= 5; ++n) {
        ExchangeGraph g = explore_exchange_graph(seed_An(n), 4000);
        if (g.truncated()) return fail(name, "A" + std::to_string(n) + " truncated");
        std::size_t nodes = g.nodes().size();
        std::size_t triangulations = enumerate_triangulations(n + 3).size();
        Int cat = catalan(n + 1);
        if (nodes != expected[n - 2])
            return fail(name, "A" + std::to_string(n) + " has " + std::to_string(nodes) +
                                  " charts, expected " + std::to_string(expected[n - 2]));
        if (nodes != triangulations || Int(static_cast<long>(nodes)) != cat)
            return fail(name, "A" + std::to_string(n) + " disagrees with the Catalan oracle");
        detail << (n > 2 ? ", " : "") << "A" << n << "=" << nodes;
    }
    return pass(name, detail.str() + " (all equal to the triangulation counts)");
}

CheckResult check_flip_mutation_bridge(const VerifyOptions& o) {
    const std::string name = "flip-mutation-bridge";
    struct Item {
        Triangulation t;
        Chord e;
    };
    std::vector<Item> items;
    for (int size = 4; size <= std::min(7, o.size_cap); ++size)
        for (const Triangulation& t : enumerate_triangulations(size))
            for (const Chord& e : t.diagonals()) items.push_back({t, e});
    std::vector<std::string> failures(items.size());
    par::parallel_for(items.size(), o.mode, [&](std::size_t i) {
        Rng rng = Rng::stream(o.rng_seed ^ 0x33, i);
        FlipCheck r = verify_flip_mutation(items[i].t, items[i].e, 20, rng);
        if (!r.ok)
            failures[i] = "size " + std::to_string(items[i].t.size()) + " diagonal (" +
                          std::to_string(items[i].e.a) + "," + std::to_string(items[i].e.b) +
                          "): " + r.detail;
    });
    for (const auto& f : failures)
        if (!f.empty()) return fail(name, f);
    return pass(name, std::to_string(items.size()) + " (T,E) pairs x 20 configurations, exact");
}

CheckResult check_tropical_duality(const VerifyOptions& o) {
    const std::string name = "tropical-duality";
    std::vector<Seed> seeds;
    {
        Rng rng(o.rng_seed ^ 0x44);
        for (int i = 0; i < 200; ++i) seeds.push_back(random_skew_seed(rng, 4, 3));
    }
    std::vector<std::string> failures(seeds.size());
    par::parallel_for(seeds.size(), o.mode, [&](std::size_t i) {
        Rng rng = Rng::stream(o.rng_seed ^ 0x45, i);
        const Seed& s = seeds[i];
        for (int k = 0; k < s.rank(); ++k) {
            auto mu = mutate_x(s, k);
            std::vector<TropExpr> trops;
            for (const auto& f : mu) trops.push_back(tropicalize(f));
            int points = 500 / s.rank();
            for (int rep = 0; rep < points; ++rep) {
                std::vector<Rat> x(s.rank());
                std::map<std::string, Rat> pt;
                for (int v = 0; v < s.rank(); ++v) {
                    x[v] = Rat(rng.uniform(-20, 20));
                    pt.emplace(s.labels()[v], x[v]);
                }
                std::vector<Rat> pl = pl_mutate(s, x, k);
                for (int v = 0; v < s.rank(); ++v)
                    if (pl[v] != trops[v].eval(pt)) {
                        failures[i] = "duality mismatch at seed " + std::to_string(i);
                        return;
                    }
                // frozen coordinate: x_k = 0 fixes every other coordinate
                x[k] = Rat(0);
                std::vector<Rat> frozen = pl_mutate(s, x, k);
                for (int v = 0; v < s.rank(); ++v)
                    if (v != k && frozen[v] != x[v]) {
                        failures[i] = "frozen-coordinate violation at seed " + std::to_string(i);
                        return;
                    }
            }
        }
    });
    for (const auto& f : failures)
        if (!f.empty()) return fail(name, f);
    return pass(name, "200 seeds, 500 points each: pl_mutate = tropicalized exchange");
}

CheckResult check_tropical_limit(const VerifyOptions& o) {
    const std::string name = "tropical-limit";
    Rng rng(o.rng_seed ^ 0x55);
    const double C = 60.0;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::string> vars;
        int nv = static_cast<int>(rng.uniform(1, 3));
        for (int i = 0; i < nv; ++i) vars.push_back("X" + std::to_string(i + 1));
        LaurentPoly num = random_positive_poly(rng, vars, 4);
        LaurentPoly den = random_positive_poly(rng, vars, 3);
        PosRational f(num, den);
        std::map<std::string, Rat> x;
        for (const auto& v : vars) x.emplace(v, Rat(rng.uniform(-5, 5)));
        double numeric = numeric_limit_check(f, x, {C})[0];
        double tropical = to_double(tropicalize(f).eval(x));
        double terms = static_cast<double>(f.num().term_count() + f.den().term_count());
        double cmax = std::max(1.0, mpz_get_d(f.num().max_abs_coef().get_mpz_t()));
        cmax = std::max(cmax, mpz_get_d(f.den().max_abs_coef().get_mpz_t()));
        double bound = std::log(terms * cmax) / C + 1e-9;
        if (std::fabs(numeric - tropical) > bound)
            return fail(name, "trial " + std::to_string(trial) + ": |" +
                                  std::to_string(numeric) + " - " + std::to_string(tropical) +
                                  "| > " + std::to_string(bound));
    }
    return pass(name, "50 random functions at C = 60 within ln(terms*maxcoef)/C");
}

CheckResult check_positivity_sweep(const VerifyOptions& o) {
    const std::string name = "canonical-positivity";
    std::size_t expansions = 0;
    for (int size = 4; size <= std::min(7, o.size_cap); ++size) {
        auto laminations = enumerate_laminations(size, 3);
        auto charts = enumerate_triangulations(size);
        std::vector<std::string> failures(charts.size());
        par::parallel_for(charts.size(), o.mode, [&](std::size_t ci) {
            DeltaChart chart(charts[ci]);
            for (std::size_t li = 0; li < laminations.size(); ++li) {
                LaurentPoly f = canonical_in_chart(laminations[li], chart);
                if (f.is_zero() || !f.all_positive()) {
                    failures[ci] = "size " + std::to_string(size) + " chart " +
                                   std::to_string(ci) + " lamination " + std::to_string(li);
                    return;
                }
            }
        });
        for (const auto& f : failures)
            if (!f.empty()) return fail(name, f);
        expansions += laminations.size() * charts.size();
    }
    return pass(name, std::to_string(expansions) +
                          " expansions, all Laurent with positive integer coefficients");
}

CheckResult check_canonical_consistency(const VerifyOptions& o) {
    const std::string name = "canonical-consistency";
    struct Item {
        int size;
        Lamination l;
        Triangulation t;
    };
    std::vector<Item> items;
    for (int size = 4; size <= std::min(6, o.size_cap); ++size) {
        auto laminations = enumerate_laminations(size, 1);
        for (const Triangulation& t : enumerate_triangulations(size))
            for (const Lamination& l : laminations) items.push_back({size, l, t});
    }
    std::vector<std::string> failures(items.size());
    par::parallel_for(items.size(), o.mode, [&](std::size_t i) {
        const auto& [size, l, t] = items[i];
        Rng rng = Rng::stream(o.rng_seed ^ 0x77, i);
        LaurentPoly fmin = canonical_in_chart(l, t, ColoringRule::lex_min);
        LaurentPoly fmax = canonical_in_chart(l, t, ColoringRule::lex_max);
        if (fmin != fmax) {
            failures[i] = "coloring dependence at item " + std::to_string(i);
            return;
        }
        for (int rep = 0; rep < 50; ++rep) {
            Configuration c = random_configuration(rng, size);
            std::map<std::string, Rat> point;
            auto coords = chart_coords(t, c);
            for (int v = 0; v < t.rank(); ++v)
                point.emplace("X" + std::to_string(v), coords.at(t.diagonals()[v]));
            Rat via_chart = fmin.eval(point);
            Rat direct = canonical_numeric(l, section_lift(t, c, ColoringRule::lex_min));
            Rat direct2 = canonical_numeric(l, section_lift(t, c, ColoringRule::lex_max));
            if (via_chart != direct || direct != direct2) {
                failures[i] = "numeric mismatch at item " + std::to_string(i);
                return;
            }
        }
    });
    for (const auto& f : failures)
        if (!f.empty()) return fail(name, f);
    return pass(name, std::to_string(items.size()) +
                          " (lamination, chart) pairs x 50 configurations, exact");
}

CheckResult check_basis_rank(const VerifyOptions& o) {
    const std::string name = "basis-independence";
    Rng rng(o.rng_seed ^ 0x88);
    std::ostringstream detail;
    for (int n = 1; n <= 3; ++n) {
        int size = n + 3;
        auto laminations = enumerate_laminations(size, 1);
        Triangulation t = zig_zag_triangulation(size);
        DeltaChart chart(t);
        std::vector<LaurentPoly> funcs;
        for (const Lamination& l : laminations) funcs.push_back(canonical_in_chart(l, chart));
        const std::size_t count = funcs.size();
        std::vector<std::vector<Rat>> M;
        for (std::size_t p = 0; p < count + 5; ++p) {
            std::map<std::string, Rat> point;
            for (int i = 0; i < n; ++i)
                point.emplace("X" + std::to_string(i), rng.positive_rat(9));
            std::vector<Rat> row;
            for (const auto& f : funcs) row.push_back(f.eval(point));
            M.push_back(std::move(row));
        }
        // column rank by elimination
        std::size_t rank = 0;
        const std::size_t rows = M.size(), cols = count;
        for (std::size_t c = 0; c < cols && rank < rows; ++c) {
            std::size_t piv = rank;
            while (piv < rows && M[piv][c] == 0) ++piv;
            if (piv == rows) continue;
            std::swap(M[piv], M[rank]);
            for (std::size_t i = rank + 1; i < rows; ++i) {
                if (M[i][c] == 0) continue;
                Rat f = M[i][c] / M[rank][c];
                for (std::size_t j = c; j < cols; ++j) {
                    M[i][j] -= f * M[rank][j];
                    M[i][j].canonicalize();
                }
            }
            ++rank;
        }
        if (rank != count)
            return fail(name, "A" + std::to_string(n) + ": rank " + std::to_string(rank) +
                                  " of " + std::to_string(count));
        detail << (n > 1 ? ", " : "") << "A" << n << ": " << count << "x" << count + 5
               << " full rank";
    }
    return pass(name, detail.str());
}

CheckResult check_strata_counts(const VerifyOptions&) {
    const std::string name = "completion-strata";
    const std::vector<std::vector<std::size_t>> expected{
        {1, 2}, {1, 5, 5}, {1, 9, 21, 14}};
    std::ostringstream detail;
    for (int n = 1; n <= 4; ++n) {
        Triangulation root = zig_zag_triangulation(n + 3);
        ExchangeGraph g = explore_exchange_graph(triangulation_seed(root), 4000);
        StrataPoset poset = strata_poset(g);
        auto counts = poset.count_by_codim(n);
        // brute-force oracle: non-crossing diagonal subsets
        std::vector<std::size_t> oracle(n + 1);
        for (int k = 0; k <= n; ++k) oracle[k] = associahedron_faces(n + 3, k).size();
        if (counts != oracle)
            return fail(name, "A" + std::to_string(n) + " strata do not match the oracle");
        if (n <= 3 && counts != expected[n - 1])
            return fail(name, "A" + std::to_string(n) + " strata differ from the known counts");
        AssociahedronMatch m = match_associahedron(g, root);
        if (!m) return fail(name, "A" + std::to_string(n) + ": " + m.detail);
        detail << (n > 1 ? "; " : "") << "A" << n << ": (";
        for (int k = 0; k <= n; ++k) detail << (k ? "," : "") << counts[k];
        detail << ")";
    }
    return pass(name, detail.str());
}

CheckResult check_stasheff(const VerifyOptions& o) {
    const std::string name = "stasheff-divisor";
    auto is_cyclic_interval = [](const std::set<int>& s, int size) {
        for (int start = 1; start <= size; ++start) {
            bool ok = true;
            for (std::size_t k = 0; k < s.size() && ok; ++k)
                if (!s.count((start + static_cast<int>(k) - 1) % size + 1)) ok = false;
            if (ok) return true;
        }
        return false;
    };
    std::size_t checked = 0;
    for (int size = 4; size <= std::min(8, o.size_cap + 1); ++size) {
        for (int mask = 0; mask < (1 << size); ++mask) {
            std::set<int> I, J;
            for (int v = 1; v <= size; ++v)
                ((mask >> (v - 1)) & 1 ? I : J).insert(v);
            if (I.size() < 2 || J.size() < 2) continue;
            bool expected = is_cyclic_interval(I, size) && is_cyclic_interval(J, size);
            if (stasheff_divisor_member(size, I, J) != expected)
                return fail(name, "partition mismatch at size " + std::to_string(size));
            ++checked;
        }
        if (size % 2 == 0) {
            std::set<int> odd, even;
            for (int v = 1; v <= size; ++v) (v % 2 ? odd : even).insert(v);
            if (stasheff_divisor_member(size, odd, even))
                return fail(name, "alternating partition accepted at size " +
                                      std::to_string(size));
        }
    }
    return pass(name, std::to_string(checked) + " partitions match the interval criterion");
}

CheckResult check_torus_action(const VerifyOptions& o) {
    const std::string name = "torus-pl-action";
    Rng rng(o.rng_seed ^ 0x99);
    for (int i = 0; i < 10000; ++i) {
        Triple p{rng.uniform(-100, 100), rng.uniform(-100, 100), rng.uniform(-100, 100)};
        if (act_S(act_S(p)) != p) return fail(name, "S^2 != id");
        if (act_ST(act_ST(act_ST(p))) != p) return fail(name, "(ST)^3 != id");
        long long s = p[0] + p[1] + p[2];
        Triple sp = act_S(p), tp = act_T(p);
        if (sp[0] + sp[1] + sp[2] != s || tp[0] + tp[1] + tp[2] != s)
            return fail(name, "x+y+z not conserved");
    }
    auto patch = orbit_patch(6);
    std::set<std::array<Triple, 3>> ordered;
    for (const auto& t : patch) ordered.insert(t.vertices);
    if (ordered.size() != patch.size()) return fail(name, "patch triangles collide");
    // interior sides of the depth-6 patch inside the depth-9 patch
    auto outer = orbit_patch(9);
    auto key = [](std::array<Triple, 3> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    std::set<std::array<Triple, 3>> inner_geo, outer_geo;
    for (const auto& t : patch) inner_geo.insert(key(t.vertices));
    for (const auto& t : outer) outer_geo.insert(key(t.vertices));
    std::map<std::pair<Triple, Triple>, int> sides;
    for (const auto& k : outer_geo)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                sides[{std::min(k[i], k[j]), std::max(k[i], k[j])}]++;
    for (const auto& [side, count] : sides)
        if (count > 2) return fail(name, "a side is shared by more than two triangles");
    for (const auto& k : inner_geo)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (sides.at({std::min(k[i], k[j]), std::max(k[i], k[j])}) != 2)
                    return fail(name, "an interior side is not shared by two triangles");
    return pass(name, "relations and conservation on 10000 triples; patch(6) consistent");
}

std::vector<CheckResult> run_verify_suite(const std::string& suite,
                                          const VerifyOptions& o) {
    std::vector<CheckResult> out;
    auto want = [&](const char* s) { return suite == "all" || suite == s; };
    if (want("seed")) {
        out.push_back(check_mutation_involution(o));
        out.push_back(check_exchange_counts(o));
    }
    if (want("polygon")) {
        out.push_back(check_flip_mutation_bridge(o));
        out.push_back(check_stasheff(o));
    }
    if (want("tropical")) {
        out.push_back(check_tropical_duality(o));
        out.push_back(check_tropical_limit(o));
    }
    if (suite == "laurent") out.push_back(check_tropical_limit(o));
    if (want("lamination")) {
        out.push_back(check_positivity_sweep(o));
        out.push_back(check_canonical_consistency(o));
        out.push_back(check_basis_rank(o));
    }
    if (want("completion")) out.push_back(check_strata_counts(o));
    if (want("torus")) out.push_back(check_torus_action(o));
    if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

std::string verify_report(const std::string& suite, const VerifyOptions& o) {
    std::vector<CheckResult> results = run_verify_suite(suite, o);
    std::ostringstream os;
    os << "clusterx verify  suite=" << suite << "  rng_seed=" << o.rng_seed
       << "  size_cap=" << o.size_cap << "\n";
    std::size_t passed = 0;
    for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        for (std::size_t i = r.name.size(); i < 26; ++i) os << ' ';
        os << r.detail << "\n";
        passed += r.pass;
    }
    os << "RESULT: " << passed << "/" << results.size() << " properties pass\n";
    return os.str();
}

}  // namespace clusterx
