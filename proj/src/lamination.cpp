#include <clusterx/lamination.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace clusterx {

Lamination::Lamination(int size, std::map<Chord, long long> weights) : size_(size) {
    if (size_ < 3) throw std::invalid_argument("Lamination: size >= 3");
    for (auto& [c, w] : weights) {
        if (w == 0) continue;
        if (c.b > size_) throw std::invalid_argument("Lamination: chord out of range");
        if (is_diagonal(c, size_) && w < 0)
            throw std::invalid_argument("Lamination: diagonal weights must be positive");
        weights_.emplace(c, w);
    }
    for (const auto& [c, w] : weights_)
        for (const auto& [c2, w2] : weights_)
            if (is_diagonal(c, size_) && is_diagonal(c2, size_) && chords_cross(c, c2))
                throw std::invalid_argument("Lamination: crossing weighted diagonals");
    for (int v = 1; v <= size_; ++v) {
        long long sum = 0;
        for (const auto& [c, w] : weights_)
            if (c.a == v || c.b == v) sum += w;
        if (sum != 0)
            throw std::invalid_argument("Lamination: nonzero weight sum at vertex " +
                                        std::to_string(v));
    }
}

long long Lamination::weight(const Chord& c) const {
    auto it = weights_.find(c);
    return it == weights_.end() ? 0 : it->second;
}

PlaneTree::PlaneTree(int size, std::vector<std::pair<int, int>> splits)
    : size_(size), splits_(std::move(splits)) {
    std::sort(splits_.begin(), splits_.end());
}

PlaneTree PlaneTree::dual_of(const Triangulation& aux) {
    std::vector<std::pair<int, int>> splits;
    for (const Chord& d : aux.diagonals()) splits.push_back({d.a, d.b});
    return PlaneTree(aux.size(), std::move(splits));
}

PlaneTree PlaneTree::canonical(int size) {
    std::vector<Chord> d;
    for (int v = 3; v < size; ++v) d.push_back(chord(1, v));
    return dual_of(Triangulation(size, std::move(d)));
}

bool PlaneTree::in_split(std::size_t s, int v) const {
    return splits_[s].first <= v && v < splits_[s].second;
}

std::vector<long long> tree_coords(int size, const std::map<Chord, long long>& weights,
                                   const PlaneTree& t) {
    if (t.size() != size) throw std::invalid_argument("tree_coords: size mismatch");
    std::vector<long long> out(t.splits().size());
    for (std::size_t s = 0; s < t.splits().size(); ++s) {
        long long sum = 0;
        for (const auto& [c, w] : weights)
            if (t.in_split(s, c.a) != t.in_split(s, c.b)) sum += w;
        if (sum % 2 != 0)
            throw std::invalid_argument(
                "tree_coords: half-integral coordinate (vertex-sum condition violated)");
        out[s] = sum / 2;
    }
    return out;
}

std::vector<long long> tree_coords(const Lamination& l, const PlaneTree& t) {
    return tree_coords(l.size(), l.weights(), t);
}

// ------------------------------------------------- inverse map via a solver

namespace {

// unique exact solution of A x = b, if it exists and is unique
std::optional<std::vector<Rat>> solve_unique(std::vector<std::vector<Rat>> A,
                                             std::vector<Rat> b) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    std::vector<int> pivot_row(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && A[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rat f = A[i][c] / A[r][c];
            for (std::size_t j = c; j < cols; ++j) {
                A[i][j] -= f * A[r][j];
                A[i][j].canonicalize();
            }
            b[i] -= f * b[r];
            b[i].canonicalize();
        }
        pivot_row[c] = static_cast<int>(r);
        ++r;
    }
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_row[c] < 0) return std::nullopt;  // underdetermined
    std::vector<Rat> x(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        x[c] = b[pivot_row[c]] / A[pivot_row[c]][c];
        x[c].canonicalize();
    }
    // eliminated system is diagonal, but check the full original residuals
    for (std::size_t i = 0; i < rows; ++i) {
        Rat acc(0);
        for (std::size_t c = 0; c < cols; ++c) acc += A[i][c] * x[c];
        acc.canonicalize();
        if (acc != b[i]) return std::nullopt;
    }
    return x;
}

const std::vector<std::vector<Chord>>& non_crossing_supports(int size) {
    static std::map<int, std::vector<std::vector<Chord>>> cache;
    auto it = cache.find(size);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<Chord>> supports;
    for (int k = 0; k <= size - 3; ++k) {
        auto faces = associahedron_faces(size, k);
        supports.insert(supports.end(), faces.begin(), faces.end());
    }
    return cache.emplace(size, std::move(supports)).first->second;
}

std::vector<Chord> side_chords(int size) {
    std::vector<Chord> sides;
    for (int v = 1; v < size; ++v) sides.push_back(chord(v, v + 1));
    sides.push_back(chord(1, size));
    return sides;
}

}  // namespace

Lamination lamination_from_coords(const std::vector<long long>& coords,
                                  const PlaneTree& t) {
    const int m = t.size();
    if (coords.size() != t.splits().size())
        throw std::invalid_argument("lamination_from_coords: arity mismatch");
    const std::vector<Chord> sides = side_chords(m);

    for (const auto& support : non_crossing_supports(m)) {
        std::vector<Chord> unknowns = sides;
        unknowns.insert(unknowns.end(), support.begin(), support.end());
        const std::size_t nu = unknowns.size();
        std::vector<std::vector<Rat>> A;
        std::vector<Rat> b;
        // one equation per internal edge: half sum of separated weights
        for (std::size_t s = 0; s < t.splits().size(); ++s) {
            std::vector<Rat> row(nu, Rat(0));
            for (std::size_t u = 0; u < nu; ++u)
                if (t.in_split(s, unknowns[u].a) != t.in_split(s, unknowns[u].b))
                    row[u] = Rat(1);
            A.push_back(std::move(row));
            b.push_back(Rat(static_cast<long>(2 * coords[s])));
        }
        // one equation per vertex: zero weight sum
        for (int v = 1; v <= m; ++v) {
            std::vector<Rat> row(nu, Rat(0));
            for (std::size_t u = 0; u < nu; ++u)
                if (unknowns[u].a == v || unknowns[u].b == v) row[u] = Rat(1);
            A.push_back(std::move(row));
            b.push_back(Rat(0));
        }
        auto sol = solve_unique(std::move(A), std::move(b));
        if (!sol) continue;
        bool good = true;
        std::map<Chord, long long> weights;
        for (std::size_t u = 0; u < nu && good; ++u) {
            if (!is_integral((*sol)[u])) {
                good = false;
                break;
            }
            long long w = mpz_get_si((*sol)[u].get_num().get_mpz_t());
            bool is_supp = u >= sides.size();
            if (is_supp && w <= 0) good = false;  // support must be exact
            if (w != 0) weights[unknowns[u]] = w;
        }
        if (!good) continue;
        Lamination l(m, std::move(weights));
        if (tree_coords(l, t) != coords)
            throw std::logic_error("lamination_from_coords: round trip failed");
        return l;
    }
    throw std::logic_error("lamination_from_coords: no lamination found");
}

std::vector<Lamination> enumerate_laminations(int size, long long bound) {
    if (bound < 0) throw std::invalid_argument("enumerate_laminations: bound >= 0");
    PlaneTree t = PlaneTree::canonical(size);
    const std::size_t n = t.splits().size();
    std::vector<Lamination> out;
    std::vector<long long> coords(n, -bound);
    for (;;) {
        out.push_back(lamination_from_coords(coords, t));
        std::size_t i = 0;
        while (i < n && coords[i] == bound) coords[i++] = -bound;
        if (i == n) break;
        ++coords[i];
    }
    return out;
}

std::vector<std::pair<Chord, long long>> canonical_function(const Lamination& l) {
    return {l.weights().begin(), l.weights().end()};
}

// --------------------------------------------------- red-edge section charts

namespace {

struct SectionStep {
    Chord bridge;   // diagonal of T crossed into the new triangle
    int apex;       // new vertex
    Chord red;      // new edge normalized to 1
    Chord solved;   // new edge determined by the bridge relation
};

struct SectionPlan {
    std::array<int, 3> root;
    std::vector<SectionStep> steps;
};

SectionPlan build_plan(const Triangulation& t, ColoringRule rule) {
    auto tris = t.triangles();
    std::sort(tris.begin(), tris.end());
    int root_idx = -1;
    for (std::size_t i = 0; i < tris.size(); ++i)
        if (tris[i][0] == 1 || tris[i][1] == 1 || tris[i][2] == 1) {
            root_idx = static_cast<int>(i);
            break;
        }
    if (root_idx < 0) throw std::logic_error("build_plan: no triangle at vertex 1");

    SectionPlan plan;
    plan.root = tris[root_idx];
    std::vector<bool> visited(tris.size(), false);
    visited[root_idx] = true;
    std::vector<int> queue{root_idx};
    auto shares_diag = [&](std::size_t i, const Chord& d) {
        int hits = 0;
        for (int v : tris[i]) hits += (v == d.a || v == d.b);
        return hits == 2;
    };
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto tr = tris[queue[head]];
        Chord edges[3] = {chord(tr[0], tr[1]), chord(tr[1], tr[2]), chord(tr[0], tr[2])};
        for (const Chord& e : edges) {
            if (!t.has_diagonal(e)) continue;
            for (std::size_t j = 0; j < tris.size(); ++j) {
                if (visited[j] || !shares_diag(j, e)) continue;
                visited[j] = true;
                queue.push_back(static_cast<int>(j));
                int apex = tris[j][0] + tris[j][1] + tris[j][2] - e.a - e.b;
                Chord n1 = chord(e.a, apex), n2 = chord(e.b, apex);
                Chord red = rule == ColoringRule::lex_min ? std::min(n1, n2)
                                                          : std::max(n1, n2);
                Chord solved = red == n1 ? n2 : n1;
                plan.steps.push_back({e, apex, red, solved});
            }
        }
    }
    if (plan.steps.size() + 1 != tris.size())
        throw std::logic_error("build_plan: dual tree not covered");
    return plan;
}

std::string chart_var(const Triangulation& t, const Chord& d) {
    return "X" + std::to_string(t.diagonal_index(d));
}

}  // namespace

DeltaChart::DeltaChart(const Triangulation& t, ColoringRule rule) : t_(t) {
    SectionPlan plan = build_plan(t_, rule);
    LaurentPoly one(1L);
    edge_monomials_[chord(plan.root[0], plan.root[1])] = one;
    edge_monomials_[chord(plan.root[1], plan.root[2])] = one;
    edge_monomials_[chord(plan.root[0], plan.root[2])] = one;
    for (const SectionStep& st : plan.steps) {
        auto q = quad_of(t_, st.bridge);
        const Chord num1 = chord(q[0], q[1]), num2 = chord(q[2], q[3]);
        const Chord den1 = chord(q[1], q[2]), den2 = chord(q[0], q[3]);
        edge_monomials_[st.red] = one;
        LaurentPoly xe = LaurentPoly::variable(chart_var(t_, st.bridge));
        auto known = [&](const Chord& c) -> const LaurentPoly& {
            if (c == st.solved) throw std::logic_error("DeltaChart: unsolved edge used");
            auto it = edge_monomials_.find(c);
            if (it == edge_monomials_.end())
                throw std::logic_error("DeltaChart: section order broken");
            return it->second;
        };
        LaurentPoly value;
        if (st.solved == num1 || st.solved == num2) {
            const Chord& other = st.solved == num1 ? num2 : num1;
            value = xe * known(den1) * known(den2) * known(other).pow(-1);
        } else {
            const Chord& other = st.solved == den1 ? den2 : den1;
            value = known(num1) * known(num2) * xe.pow(-1) * known(other).pow(-1);
        }
        edge_monomials_[st.solved] = value;
    }
}

const LaurentPoly& DeltaChart::edge_monomial(const Chord& c) const {
    auto it = edge_monomials_.find(c);
    if (it == edge_monomials_.end())
        throw std::invalid_argument("edge_monomial: not an edge of the triangulation");
    return it->second;
}

const LaurentPoly& DeltaChart::delta(const Chord& f) {
    auto em = edge_monomials_.find(f);
    if (em != edge_monomials_.end()) return em->second;
    auto hit = memo_.find(f);
    if (hit != memo_.end()) return hit->second;

    // three-term recursion through the first diagonal of T crossing f
    const Chord* helper = nullptr;
    for (const Chord& d : t_.diagonals())
        if (chords_cross(f, d)) {
            helper = &d;
            break;
        }
    if (!helper) throw std::logic_error("delta: chord crosses no diagonal yet is no edge");
    std::array<int, 4> q{f.a, f.b, helper->a, helper->b};
    std::sort(q.begin(), q.end());
    LaurentPoly num = delta(chord(q[0], q[1])) * delta(chord(q[2], q[3])) +
                      delta(chord(q[1], q[2])) * delta(chord(q[0], q[3]));
    auto quotient = divide_exact(num, edge_monomial(*helper));
    if (!quotient) throw std::logic_error("delta: non-exact division by a monomial");
    if (!quotient->all_positive()) throw std::logic_error("delta: positivity failure");
    return memo_.emplace(f, std::move(*quotient)).first->second;
}

LaurentPoly DeltaChart::delta_transfer(const Chord& f) const {
    auto em = edge_monomials_.find(f);
    if (em != edge_monomials_.end()) return em->second;

    const int m = t_.size();
    auto pos = [&](int v) { return (v - f.a + m) % m; };
    // rungs: diagonals of T crossed by f, ordered from f.a outward
    std::vector<Chord> rungs;
    for (const Chord& d : t_.diagonals())
        if (chords_cross(f, d)) rungs.push_back(d);
    auto region = [&](const Chord& d) {
        int x = pos(d.a) < pos(d.b) ? d.a : d.b;  // endpoint inside (a,b)... see below
        int z = x == d.a ? d.b : d.a;
        return (pos(x) - pos(z) + m) % m;
    };
    std::sort(rungs.begin(), rungs.end(),
              [&](const Chord& u, const Chord& v) { return region(u) < region(v); });

    auto solve = [&](const Chord& target, const Chord& helper,
                     const std::map<Chord, LaurentPoly>& extra) -> LaurentPoly {
        auto look = [&](const Chord& c) -> const LaurentPoly& {
            auto it = extra.find(c);
            if (it != extra.end()) return it->second;
            return edge_monomial(c);
        };
        std::array<int, 4> q{target.a, target.b, helper.a, helper.b};
        std::sort(q.begin(), q.end());
        LaurentPoly num = look(chord(q[0], q[1])) * look(chord(q[2], q[3])) +
                          look(chord(q[1], q[2])) * look(chord(q[0], q[3]));
        auto quotient = divide_exact(num, edge_monomial(helper));
        if (!quotient) throw std::logic_error("delta_transfer: non-exact division");
        return *quotient;
    };

    // the triangle of T on the f.a side of the first rung contains f.a, so
    // both chords from f.a to the rung are edges of T
    std::map<Chord, LaurentPoly> running;
    Chord cur = rungs.front();
    running[chord(f.a, cur.a)] = edge_monomial(chord(f.a, cur.a));
    running[chord(f.a, cur.b)] = edge_monomial(chord(f.a, cur.b));
    for (std::size_t i = 1; i < rungs.size(); ++i) {
        const Chord& next = rungs[i];
        int apex = (next.a == cur.a || next.a == cur.b) ? next.b : next.a;
        running[chord(f.a, apex)] = solve(chord(f.a, apex), cur, running);
        cur = next;
    }
    return solve(f, cur, running);
}

LaurentPoly canonical_in_chart(const Lamination& l, DeltaChart& chart) {
    if (l.size() != chart.triangulation().size())
        throw std::invalid_argument("canonical_in_chart: size mismatch");
    LaurentPoly prod(1L);
    for (const auto& [c, w] : l.weights()) {
        if (is_side(c, l.size()) || chart.triangulation().has_diagonal(c)) {
            prod = prod * chart.edge_monomial(c).pow(w);
        } else {
            prod = prod * chart.delta(c).pow(w);  // w > 0 off the triangulation
        }
    }
    return prod;
}

LaurentPoly canonical_in_chart(const Lamination& l, const Triangulation& t,
                               ColoringRule rule) {
    DeltaChart chart(t, rule);
    return canonical_in_chart(l, chart);
}

// ----------------------------------------------------------- numeric route

namespace {

Rat det2(const std::pair<Rat, Rat>& v, const std::pair<Rat, Rat>& w) {
    Rat d = v.first * w.second - v.second * w.first;
    d.canonicalize();
    return d;
}

}  // namespace

VectorConfig section_lift(const Triangulation& t, const Configuration& c,
                          ColoringRule rule) {
    if (static_cast<int>(c.size()) != t.size())
        throw std::invalid_argument("section_lift: configuration size mismatch");
    SectionPlan plan = build_plan(t, rule);
    const auto [r1, r2, r3] = plan.root;

    // PGL2 normalization sending the root triangle to (inf, 0, -1)
    const ProjPoint &p1 = c[r1 - 1], &p2 = c[r2 - 1];
    auto h = [&](const ProjPoint& p) {
        if (p1.infinite) return mobius(Rat(1), Rat(-p2.value), Rat(0), Rat(1), p);
        if (p2.infinite) return mobius(Rat(0), Rat(1), Rat(1), Rat(-p1.value), p);
        return mobius(Rat(1), Rat(-p2.value), Rat(1), Rat(-p1.value), p);
    };
    ProjPoint w3 = h(c[r3 - 1]);
    if (w3.infinite || w3.value == 0)
        throw std::domain_error("section_lift: degenerate root triangle");
    Rat scale = Rat(-1) / w3.value;
    std::vector<ProjPoint> y(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        ProjPoint hp = h(c[i]);
        if (hp.infinite) {
            y[i] = hp;
        } else {
            Rat v = scale * hp.value;
            v.canonicalize();
            y[i] = ProjPoint::of(v);
        }
    }

    VectorConfig vc;
    vc.vectors.assign(c.size(), {Rat(0), Rat(0)});
    std::vector<bool> known(c.size() + 1, false);
    vc.vectors[r1 - 1] = {Rat(1), Rat(0)};
    vc.vectors[r2 - 1] = {Rat(0), Rat(1)};
    vc.vectors[r3 - 1] = {Rat(-1), Rat(1)};
    known[r1] = known[r2] = known[r3] = true;

    for (const SectionStep& st : plan.steps) {
        int u = st.apex;
        if (known[u]) throw std::logic_error("section_lift: vertex revisited");
        int p = st.red.a == u ? st.red.b : st.red.a;
        if (!known[p]) throw std::logic_error("section_lift: red edge to unknown vertex");
        if (y[u - 1].infinite) throw std::logic_error("section_lift: unexpected infinity");
        const Rat& yu = y[u - 1].value;
        const auto& vp = vc.vectors[p - 1];
        // scale with Delta of the sorted red chord = 1
        Rat denom = p < u ? Rat(vp.first - vp.second * yu) : Rat(yu * vp.second - vp.first);
        if (denom == 0) throw std::domain_error("section_lift: degenerate configuration");
        Rat s = Rat(1) / denom;
        Rat vx = s * yu, vy = s;
        vx.canonicalize();
        vy.canonicalize();
        vc.vectors[u - 1] = {vx, vy};
        known[u] = true;
    }
    return vc;
}

Rat delta_numeric(const VectorConfig& vc, const Chord& c) {
    return det2(vc.vectors[c.a - 1], vc.vectors[c.b - 1]);
}

Rat canonical_numeric(const Lamination& l, const VectorConfig& vc, int first_vertex) {
    const int m = l.size();
    auto posn = [&](int v) { return (v - first_vertex + m) % m; };
    Rat prod(1);
    for (const auto& [c, w] : l.weights()) {
        Rat d = posn(c.a) < posn(c.b) ? delta_numeric(vc, c) : Rat(-delta_numeric(vc, c));
        if (d == 0) throw std::domain_error("canonical_numeric: vanishing Delta");
        Rat p(1);
        long long k = w > 0 ? w : -w;
        for (long long i = 0; i < k; ++i) p *= d;
        if (w < 0) p = Rat(1) / p;
        prod *= p;
        prod.canonicalize();
    }
    return prod;
}

}  // namespace clusterx
