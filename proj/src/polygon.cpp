#include <clusterx/polygon.hpp>

#include <algorithm>
#include <stdexcept>

namespace clusterx {

Chord chord(int i, int j) {
    if (i == j) throw std::invalid_argument("chord: equal endpoints");
    if (i > j) std::swap(i, j);
    if (i < 1) throw std::invalid_argument("chord: endpoints are 1-based");
    return Chord{i, j};
}

bool is_side(const Chord& c, int size) {
    return c.b == c.a + 1 || (c.a == 1 && c.b == size);
}

bool is_diagonal(const Chord& c, int size) {
    return c.b <= size && !is_side(c, size);
}

std::vector<Chord> all_diagonals(int size) {
    std::vector<Chord> out;
    for (int i = 1; i <= size; ++i)
        for (int j = i + 1; j <= size; ++j)
            if (is_diagonal(chord(i, j), size)) out.push_back(chord(i, j));
    return out;
}

std::vector<Chord> all_chords(int size) {
    std::vector<Chord> out;
    for (int i = 1; i <= size; ++i)
        for (int j = i + 1; j <= size; ++j) out.push_back(chord(i, j));
    return out;
}

bool chords_cross(const Chord& c1, const Chord& c2) {
    if (c1.a == c2.a || c1.a == c2.b || c1.b == c2.a || c1.b == c2.b) return false;
    auto strictly_inside = [&](int x) { return c1.a < x && x < c1.b; };
    return strictly_inside(c2.a) != strictly_inside(c2.b);
}

Rat cross_ratio(const ProjPoint& y1, const ProjPoint& y2, const ProjPoint& y3,
                const ProjPoint& y4) {
    const ProjPoint* ys[4] = {&y1, &y2, &y3, &y4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*ys[i] == *ys[j]) throw std::domain_error("cross_ratio: coincident points");
    // factor pairs: num (y1,y2), (y3,y4); den (y2,y3), (y1,y4). An infinite
    // point sits in exactly one factor of each and cancels out of both.
    auto diff = [](const ProjPoint& p, const ProjPoint& q) -> std::pair<bool, Rat> {
        if (p.infinite || q.infinite) return {false, Rat(0)};  // cancelled
        return {true, Rat(p.value - q.value)};
    };
    Rat num(1), den(1);
    for (auto [keep, v] : {diff(y1, y2), diff(y3, y4)})
        if (keep) num *= v;
    for (auto [keep, v] : {diff(y2, y3), diff(y1, y4)})
        if (keep) den *= v;
    if (den == 0) throw std::domain_error("cross_ratio: degenerate quadruple");
    Rat r = num / den;
    r.canonicalize();
    return r;
}

ProjPoint mobius(const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                 const ProjPoint& p) {
    if (a * d - b * c == 0) throw std::invalid_argument("mobius: singular map");
    if (p.infinite) {
        if (c == 0) return ProjPoint::inf();
        Rat v = a / c;
        v.canonicalize();
        return ProjPoint::of(v);
    }
    Rat denom = c * p.value + d;
    if (denom == 0) return ProjPoint::inf();
    Rat v = (a * p.value + b) / denom;
    v.canonicalize();
    return ProjPoint::of(v);
}

Triangulation::Triangulation(int size, std::vector<Chord> diagonals)
    : size_(size), diagonals_(std::move(diagonals)) {
    if (size_ < 3) throw std::invalid_argument("Triangulation: size >= 3");
    std::sort(diagonals_.begin(), diagonals_.end());
    if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end())
        throw std::invalid_argument("Triangulation: repeated diagonal");
    if (static_cast<int>(diagonals_.size()) != size_ - 3)
        throw std::invalid_argument("Triangulation: wrong diagonal count");
    for (std::size_t i = 0; i < diagonals_.size(); ++i) {
        if (!is_diagonal(diagonals_[i], size_))
            throw std::invalid_argument("Triangulation: not a diagonal");
        for (std::size_t j = i + 1; j < diagonals_.size(); ++j)
            if (chords_cross(diagonals_[i], diagonals_[j]))
                throw std::invalid_argument("Triangulation: crossing diagonals");
    }
}

int Triangulation::diagonal_index(const Chord& d) const {
    auto it = std::lower_bound(diagonals_.begin(), diagonals_.end(), d);
    if (it == diagonals_.end() || *it != d)
        throw std::invalid_argument("Triangulation: unknown diagonal");
    return static_cast<int>(it - diagonals_.begin());
}

bool Triangulation::has_diagonal(const Chord& d) const {
    return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

std::vector<std::array<int, 3>> Triangulation::triangles() const {
    auto is_edge = [&](int i, int j) {
        Chord c = chord(i, j);
        return is_side(c, size_) || has_diagonal(c);
    };
    std::vector<std::array<int, 3>> out;
    for (int i = 1; i <= size_; ++i)
        for (int j = i + 1; j <= size_; ++j) {
            if (!is_edge(i, j)) continue;
            for (int k = j + 1; k <= size_; ++k)
                if (is_edge(j, k) && is_edge(i, k)) out.push_back({i, j, k});
        }
    return out;
}

std::array<int, 4> quad_of(const Triangulation& t, const Chord& e) {
    if (!t.has_diagonal(e)) throw std::invalid_argument("quad_of: not a diagonal of T");
    int inner = -1, outer = -1;
    for (const auto& tri : t.triangles()) {
        bool has_a = tri[0] == e.a || tri[1] == e.a || tri[2] == e.a;
        bool has_b = tri[0] == e.b || tri[1] == e.b || tri[2] == e.b;
        if (!has_a || !has_b) continue;
        int apex = tri[0] + tri[1] + tri[2] - e.a - e.b;
        (e.a < apex && apex < e.b ? inner : outer) = apex;
    }
    if (inner < 0 || outer < 0) throw std::logic_error("quad_of: broken triangulation");
    return {e.a, inner, e.b, outer};
}

Triangulation flip(const Triangulation& t, const Chord& e) {
    auto q = quad_of(t, e);
    std::vector<Chord> d = t.diagonals();
    d.erase(std::find(d.begin(), d.end(), e));
    d.push_back(chord(q[1], q[3]));
    return Triangulation(t.size(), std::move(d));
}

std::map<Chord, Rat> chart_coords(const Triangulation& t, const Configuration& c) {
    if (static_cast<int>(c.size()) != t.size())
        throw std::invalid_argument("chart_coords: configuration size mismatch");
    std::map<Chord, Rat> out;
    for (const Chord& e : t.diagonals()) {
        auto q = quad_of(t, e);
        out[e] = cross_ratio(c[q[0] - 1], c[q[1] - 1], c[q[2] - 1], c[q[3] - 1]);
    }
    return out;
}

IntMatrix adjacency_epsilon(const Triangulation& t) {
    const auto& diags = t.diagonals();
    const int n = static_cast<int>(diags.size());
    IntMatrix eps(n, std::vector<long long>(n, 0));
    // angular position of w around v, sweeping clockwise from v+1
    auto key = [&](int v, int w) { return (w - v + t.size()) % t.size(); };
    for (int v = 1; v <= t.size(); ++v) {
        std::vector<int> at_v;
        for (int i = 0; i < n; ++i)
            if (diags[i].a == v || diags[i].b == v) at_v.push_back(i);
        std::sort(at_v.begin(), at_v.end(), [&](int i, int j) {
            int wi = diags[i].a == v ? diags[i].b : diags[i].a;
            int wj = diags[j].a == v ? diags[j].b : diags[j].a;
            return key(v, wi) < key(v, wj);
        });
        // consecutive diagonals at v bound a triangle of T
        for (std::size_t s = 0; s + 1 < at_v.size(); ++s) {
            int i = at_v[s], j = at_v[s + 1];
            eps[j][i] += 1;
            eps[i][j] -= 1;
        }
    }
    return eps;
}

Seed triangulation_seed(const Triangulation& t) {
    return Seed(adjacency_epsilon(t), std::vector<long long>(t.rank(), 1));
}

namespace {

void triangulate_rec(const std::vector<int>& verts, std::vector<Chord> acc,
                     std::vector<std::vector<Chord>>& out) {
    const std::size_t m = verts.size();
    if (m < 4) {
        out.push_back(std::move(acc));
        return;
    }
    // ear decomposition on the edge (verts[0], verts[m-1])
    for (std::size_t i = 1; i + 1 < m; ++i) {
        std::vector<Chord> acc2 = acc;
        if (i > 1) acc2.push_back(chord(verts[0], verts[i]));
        if (i + 2 < m) acc2.push_back(chord(verts[i], verts[m - 1]));
        std::vector<int> left(verts.begin(), verts.begin() + i + 1);
        std::vector<int> right(verts.begin() + i, verts.end());
        std::vector<std::vector<Chord>> lefts;
        triangulate_rec(left, {}, lefts);
        for (const auto& la : lefts) {
            std::vector<Chord> acc3 = acc2;
            acc3.insert(acc3.end(), la.begin(), la.end());
            triangulate_rec(right, std::move(acc3), out);
        }
    }
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int size) {
    if (size < 3) throw std::invalid_argument("enumerate_triangulations: size >= 3");
    std::vector<int> verts(size);
    for (int i = 0; i < size; ++i) verts[i] = i + 1;
    std::vector<std::vector<Chord>> raw;
    triangulate_rec(verts, {}, raw);
    std::vector<Triangulation> out;
    out.reserve(raw.size());
    for (auto& d : raw) out.emplace_back(size, std::move(d));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Int catalan(int n) {
    Int num(1), den(1);
    for (int k = 2; k <= n; ++k) {
        num *= n + k;
        den *= k;
    }
    return num / den;
}

std::vector<std::vector<Chord>> associahedron_faces(int size, int k) {
    if (k < 0 || k > size - 3)
        throw std::invalid_argument("associahedron_faces: bad codimension");
    std::vector<Chord> diags = all_diagonals(size);
    std::vector<std::vector<Chord>> out;
    std::vector<Chord> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < diags.size(); ++i) {
            bool ok = true;
            for (const Chord& c : cur)
                if (chords_cross(c, diags[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(diags[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

bool stasheff_divisor_member(int size, const std::set<int>& I, const std::set<int>& J) {
    if (I.size() < 2 || J.size() < 2)
        throw std::invalid_argument("stasheff_divisor_member: |I|, |J| > 1");
    std::set<int> all;
    for (int v = 1; v <= size; ++v) all.insert(v);
    std::set<int> uni = I;
    uni.insert(J.begin(), J.end());
    if (uni != all || I.size() + J.size() != all.size())
        throw std::invalid_argument("stasheff_divisor_member: not a partition");
    std::vector<int> vi(I.begin(), I.end()), vj(J.begin(), J.end());
    for (std::size_t a = 0; a < vi.size(); ++a)
        for (std::size_t b = a + 1; b < vi.size(); ++b)
            for (std::size_t c = 0; c < vj.size(); ++c)
                for (std::size_t d = c + 1; d < vj.size(); ++d)
                    if (chords_cross(chord(vi[a], vi[b]), chord(vj[c], vj[d])))
                        return false;
    return true;
}

Triangulation zig_zag_triangulation(int size) {
    std::vector<Chord> d;
    int lo = 2, hi = size;
    bool move_lo = true;
    while (hi - lo >= 2) {
        d.push_back(chord(lo, hi));
        if (move_lo)
            ++lo;
        else
            --hi;
        move_lo = !move_lo;
    }
    return Triangulation(size, std::move(d));
}

Configuration random_configuration(Rng& rng, int size) {
    Configuration c;
    Rat cur(rng.uniform(-5, 5));
    for (int i = 0; i < size; ++i) {
        c.push_back(ProjPoint::of(cur));
        cur += rng.positive_rat(9);
        cur.canonicalize();
    }
    return c;
}

FlipCheck verify_flip_mutation(const Triangulation& t, const Chord& e, int samples,
                               Rng& rng) {
    FlipCheck res;
    const int kE = t.diagonal_index(e);
    Triangulation t2 = flip(t, e);
    auto q = quad_of(t, e);
    Chord enew = chord(q[1], q[3]);

    // index map: diagonal of t2 -> slot in the mutated seed
    auto tau = [&](const Chord& d) { return d == enew ? kE : t.diagonal_index(d); };

    Seed s = triangulation_seed(t);
    Seed sm = s.mutated(kE);
    const IntMatrix& me = sm.epsilon();
    const IntMatrix e2 = adjacency_epsilon(t2);
    for (int i = 0; i < t2.rank(); ++i)
        for (int j = 0; j < t2.rank(); ++j)
            if (e2[i][j] != me[tau(t2.diagonals()[i])][tau(t2.diagonals()[j])]) {
                res.ok = false;
                res.failing = t2.diagonals()[i];
                res.detail = "adjacency matrix does not mutate like the seed";
                return res;
            }

    std::vector<PosRational> mu = mutate_x(s, kE);
    for (int rep = 0; rep < samples; ++rep) {
        Configuration c = random_configuration(rng, t.size());
        std::map<Chord, Rat> before = chart_coords(t, c);
        std::map<Chord, Rat> after = chart_coords(t2, c);
        std::map<std::string, Rat> point;
        for (int i = 0; i < t.rank(); ++i)
            point.emplace(s.labels()[i], before.at(t.diagonals()[i]));
        for (const Chord& d : t2.diagonals()) {
            if (after.at(d) != mu[tau(d)].eval(point)) {
                res.ok = false;
                res.failing = d;
                res.detail = "chart value does not follow the exchange formula";
                return res;
            }
        }
    }
    return res;
}

}  // namespace clusterx
