#include <clusterx/tropical.hpp>

#include <algorithm>
#include <stdexcept>

namespace clusterx {

std::vector<Rat> pl_mutate(const Seed& s, const std::vector<Rat>& x, int k) {
    if (k < 0 || k >= s.rank()) throw std::invalid_argument("pl_mutate: bad direction");
    if (static_cast<int>(x.size()) != s.rank())
        throw std::invalid_argument("pl_mutate: coordinate arity mismatch");
    const IntMatrix& eps = s.epsilon();
    std::vector<Rat> y(x.size());
    const Rat zero(0);
    for (int i = 0; i < s.rank(); ++i) {
        if (i == k) {
            y[i] = -x[k];
        } else {
            long long e = eps[i][k];
            if (e == 0) {
                y[i] = x[i];
            } else {
                // tropicalization of X_i (1 + X_k^{-sgn e})^{-e}
                Rat corr = e > 0 ? std::max(zero, Rat(-x[k])) : std::max(zero, x[k]);
                y[i] = x[i] - Rat(static_cast<long>(e)) * corr;
            }
        }
        y[i].canonicalize();
    }
    return y;
}

TropicalPoint pl_mutate(const ExchangeGraph& g, const TropicalPoint& x, int k) {
    int u = g.node_index(x.chart);
    const auto* e = g.edge_at(u, k);
    if (!e) throw std::invalid_argument("pl_mutate: chart has no edge in that direction");
    std::vector<Rat> cand = pl_mutate(g.nodes()[u].seed, x.coords, k);
    std::vector<Rat> y(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) y[e->perm[i]] = cand[i];
    return {g.nodes()[e->to].id, std::move(y)};
}

std::vector<std::vector<Rat>> transport_all(const ExchangeGraph& g,
                                            const TropicalPoint& x) {
    const auto& nodes = g.nodes();
    // climb to the root along parent edges (created with identity perms; the
    // stored child seed is the mutated parent seed, so one PL step inverts)
    int u = g.node_index(x.chart);
    std::vector<Rat> cur = x.coords;
    while (nodes[u].parent >= 0) {
        cur = pl_mutate(nodes[u].seed, cur, nodes[u].parent_dir);
        u = nodes[u].parent;
    }
    // descend: parents precede children in BFS order
    std::vector<std::vector<Rat>> out(nodes.size());
    out[0] = std::move(cur);
    for (std::size_t v = 1; v < nodes.size(); ++v)
        out[v] = pl_mutate(nodes[nodes[v].parent].seed, out[nodes[v].parent],
                           nodes[v].parent_dir);
    return out;
}

TropicalPoint transport(const ExchangeGraph& g, const TropicalPoint& x,
                        const std::string& chart) {
    auto all = transport_all(g, x);
    int v = g.node_index(chart);
    return {chart, std::move(all[v])};
}

bool in_special_cone(const ExchangeGraph& g, const TropicalPoint& x,
                     const SpecialCone& cone) {
    TropicalPoint y = x.chart == cone.chart ? x : transport(g, x, cone.chart);
    for (const auto& c : y.coords)
        if (c < 0) return false;
    for (int i : cone.zero_set) {
        if (i < 0 || i >= static_cast<int>(y.coords.size()))
            throw std::invalid_argument("in_special_cone: bad zero_set index");
        if (y.coords[i] != 0) return false;
    }
    return true;
}

std::vector<SpecialCone> positive_part_cover(const ExchangeGraph& g,
                                             const TropicalPoint& x) {
    auto all = transport_all(g, x);
    std::vector<SpecialCone> cover;
    for (std::size_t v = 0; v < all.size(); ++v) {
        bool nonneg = std::all_of(all[v].begin(), all[v].end(),
                                  [](const Rat& c) { return c >= 0; });
        if (!nonneg) continue;
        SpecialCone cone{g.nodes()[v].id, {}};
        for (std::size_t i = 0; i < all[v].size(); ++i)
            if (all[v][i] == 0) cone.zero_set.insert(static_cast<int>(i));
        cover.push_back(std::move(cone));
    }
    return cover;
}

Int valuation_of(const PosRational& f, const std::vector<std::string>& chart_vars,
                 const std::vector<Rat>& coords) {
    if (chart_vars.size() != coords.size())
        throw std::invalid_argument("valuation_of: arity mismatch");
    std::map<std::string, Rat> point;
    for (std::size_t i = 0; i < chart_vars.size(); ++i) {
        if (!is_integral(coords[i]))
            throw std::invalid_argument("valuation_of: point must be integral");
        point.emplace(chart_vars[i], coords[i]);
    }
    Rat v = -tropicalize(f).eval(point);
    v.canonicalize();
    if (!is_integral(v)) throw std::logic_error("valuation_of: non-integral value");
    return v.get_num();
}

std::vector<Rat> spherical_representative(const std::vector<Rat>& coords) {
    Rat m(0);
    for (const auto& c : coords) m = std::max(m, Rat(abs(c)));
    if (m == 0) return coords;
    std::vector<Rat> out(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        out[i] = coords[i] / m;
        out[i].canonicalize();
    }
    return out;
}

ConvexSubset ConvexSubset::spherical(const PosRational& f) {
    return ConvexSubset({Constraint{f, tropicalize(f), Rat(0)}});
}

ConvexSubset ConvexSubset::bounded(const PosRational& f, const Rat& c) {
    return ConvexSubset({Constraint{f, tropicalize(f), c}});
}

bool ConvexSubset::contains(const std::map<std::string, Rat>& point) const {
    for (const auto& c : constraints_) {
        if (!c.bound) continue;  // dropped constraint
        if (c.trop.eval(point) > *c.bound) return false;
    }
    return true;
}

ConvexSubset ConvexSubset::intersect(const ConvexSubset& o) const {
    std::vector<Constraint> cs = constraints_;
    cs.insert(cs.end(), o.constraints_.begin(), o.constraints_.end());
    return ConvexSubset(std::move(cs));
}

namespace {

// a finite spherical subset is S_F for F = sum of its defining functions
PosRational collapse_spherical(const std::vector<ConvexSubset::Constraint>& cs) {
    PosRational sum;
    bool first = true;
    for (const auto& c : cs) {
        if (!c.f || !c.bound || *c.bound != 0)
            throw std::invalid_argument(
                "minkowski_spherical: needs function-backed constraints with bound 0");
        sum = first ? *c.f : sum + *c.f;
        first = false;
    }
    if (first) throw std::invalid_argument("minkowski_spherical: empty subset");
    return sum;
}

}  // namespace

ConvexSubset ConvexSubset::minkowski_spherical(const ConvexSubset& o) const {
    PosRational f = collapse_spherical(constraints_);
    PosRational g = collapse_spherical(o.constraints_);
    return spherical(f * g);
}

ConvexSubset ConvexSubset::minkowski_bounded(const ConvexSubset& o) const {
    if (constraints_.size() != o.constraints_.size())
        throw std::invalid_argument("minkowski_bounded: constraint lists differ");
    std::vector<Constraint> cs;
    cs.reserve(constraints_.size());
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
        const Constraint& a = constraints_[i];
        const Constraint& b = o.constraints_[i];
        if (!a.f || !b.f || !a.f->equals(*b.f))
            throw std::invalid_argument("minkowski_bounded: constraint lists differ");
        std::optional<Rat> bound;
        if (a.bound && b.bound) {
            bound = *a.bound + *b.bound;
            bound->canonicalize();
        }
        cs.push_back(Constraint{a.f, a.trop, bound});
    }
    return ConvexSubset(std::move(cs));
}

}  // namespace clusterx
