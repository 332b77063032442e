#include <clusterx/completion.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace clusterx {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::size_t> StrataPoset::count_by_codim(int rank) const {
    std::vector<std::size_t> counts(rank + 1, 0);
    for (const Stratum& s : strata) counts[s.codim]++;
    return counts;
}

bool StrataPoset::leq(int a, int b) const {
    if (a == b) return true;
    std::vector<int> stack{a};
    std::vector<bool> seen(strata.size(), false);
    seen[a] = true;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (const auto& [lo, hi] : covers) {
            if (lo != cur || seen[hi]) continue;
            if (hi == b) return true;
            seen[hi] = true;
            stack.push_back(hi);
        }
    }
    return false;
}

int StrataPoset::stratum_of(int node, const std::set<int>& zero_set) const {
    std::pair<int, std::set<int>> key{node, zero_set};
    for (const Stratum& s : strata)
        if (std::binary_search(s.members.begin(), s.members.end(), key)) return s.id;
    throw std::invalid_argument("stratum_of: unknown (chart, zero_set) pair");
}

StrataPoset strata_poset(const ExchangeGraph& g) {
    if (g.truncated())
        throw std::invalid_argument("strata_poset: exchange graph is truncated");
    const int n = g.rank();
    const std::size_t nodes = g.nodes().size();
    const std::size_t masks = std::size_t(1) << n;
    auto pair_id = [&](std::size_t node, std::size_t mask) { return node * masks + mask; };

    UnionFind uf(nodes * masks);
    for (const auto& e : g.edges()) {
        for (std::size_t mask = 0; mask < masks; ++mask) {
            if (!(mask >> e.dir & 1)) continue;  // only zero directions are frozen
            std::size_t image = 0;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) image |= std::size_t(1) << e.perm[i];
            uf.unite(pair_id(e.from, mask), pair_id(e.to, image));
        }
    }

    StrataPoset poset;
    std::map<int, int> root_to_stratum;
    std::vector<int> stratum_of_pair(nodes * masks, -1);
    for (std::size_t node = 0; node < nodes; ++node) {
        for (std::size_t mask = 0; mask < masks; ++mask) {
            int root = uf.find(static_cast<int>(pair_id(node, mask)));
            auto [it, fresh] = root_to_stratum.emplace(root, poset.strata.size());
            if (fresh) {
                Stratum s;
                s.id = static_cast<int>(poset.strata.size());
                s.codim = n - __builtin_popcountll(mask);
                poset.strata.push_back(std::move(s));
            }
            int sid = it->second;
            std::set<int> zs;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) zs.insert(i);
            if (poset.strata[sid].codim != n - static_cast<int>(zs.size()))
                throw std::logic_error("strata_poset: transport changed the codimension");
            poset.strata[sid].members.push_back({static_cast<int>(node), std::move(zs)});
            stratum_of_pair[pair_id(node, mask)] = sid;
        }
    }
    for (Stratum& s : poset.strata) std::sort(s.members.begin(), s.members.end());

    // covers: dropping one zero index deepens the stratum by one
    std::set<std::pair<int, int>> covers;
    for (std::size_t node = 0; node < nodes; ++node) {
        for (std::size_t mask = 0; mask < masks; ++mask) {
            if (mask == 0) continue;
            int upper = stratum_of_pair[pair_id(node, mask)];
            for (int c = 0; c < n; ++c) {
                if (!(mask >> c & 1)) continue;
                int lower = stratum_of_pair[pair_id(node, mask ^ (std::size_t(1) << c))];
                covers.insert({lower, upper});
            }
        }
    }
    poset.covers.assign(covers.begin(), covers.end());
    return poset;
}

std::optional<PolygonAlignment> align_polygon_charts(const ExchangeGraph& g,
                                                     const Triangulation& root) {
    const int n = g.rank();
    if (root.rank() != n) return std::nullopt;
    if (g.nodes()[0].seed.epsilon() != adjacency_epsilon(root)) return std::nullopt;

    PolygonAlignment a;
    a.node_triangulation.assign(g.nodes().size(), root);
    a.slot_diagonal.assign(g.nodes().size(), {});
    std::vector<bool> seen(g.nodes().size(), false);
    a.slot_diagonal[0] = root.diagonals();
    seen[0] = true;

    // walk edges in BFS order; verify every arrival agrees
    for (const auto& e : g.edges()) {
        if (!seen[e.from]) continue;
        const Triangulation& tu = a.node_triangulation[e.from];
        const Chord cut = a.slot_diagonal[e.from][e.dir];
        Triangulation tv = flip(tu, cut);
        auto q = quad_of(tu, cut);
        Chord fresh = chord(q[1], q[3]);
        std::vector<Chord> slots(n);
        for (int i = 0; i < n; ++i)
            slots[e.perm[i]] = i == e.dir ? fresh : a.slot_diagonal[e.from][i];
        if (!seen[e.to]) {
            // the chart's exchange data must be the adjacency of tv
            const IntMatrix adj = adjacency_epsilon(tv);
            const IntMatrix& eps = g.nodes()[e.to].seed.epsilon();
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (eps[i][j] != adj[tv.diagonal_index(slots[i])]
                                        [tv.diagonal_index(slots[j])])
                        return std::nullopt;
            a.node_triangulation[e.to] = tv;
            a.slot_diagonal[e.to] = std::move(slots);
            seen[e.to] = true;
        } else {
            if (a.node_triangulation[e.to] != tv || a.slot_diagonal[e.to] != slots)
                return std::nullopt;
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        return std::nullopt;
    return a;
}

std::vector<Chord> stratum_cut_diagonals(const Stratum& s, const PolygonAlignment& a) {
    std::optional<std::vector<Chord>> cuts;
    for (const auto& [node, zero_set] : s.members) {
        std::vector<Chord> c;
        const auto& slots = a.slot_diagonal[node];
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (!zero_set.count(static_cast<int>(i))) c.push_back(slots[i]);
        std::sort(c.begin(), c.end());
        if (!cuts)
            cuts = std::move(c);
        else if (*cuts != c)
            throw std::logic_error("stratum_cut_diagonals: inconsistent orbit");
    }
    if (!cuts) throw std::invalid_argument("stratum_cut_diagonals: empty stratum");
    return *cuts;
}

std::vector<std::vector<int>> cut_polygon(int size, const std::vector<Chord>& cuts) {
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (!is_diagonal(cuts[i], size))
            throw std::invalid_argument("cut_polygon: cut is not a diagonal");
        for (std::size_t j = i + 1; j < cuts.size(); ++j)
            if (chords_cross(cuts[i], cuts[j]))
                throw std::invalid_argument("cut_polygon: crossing cuts");
    }
    std::vector<std::vector<int>> parts;
    {
        std::vector<int> all(size);
        std::iota(all.begin(), all.end(), 1);
        parts.push_back(std::move(all));
    }
    for (const Chord& cut : cuts) {
        for (std::size_t p = 0; p < parts.size(); ++p) {
            auto& part = parts[p];
            auto ia = std::find(part.begin(), part.end(), cut.a);
            auto ib = std::find(part.begin(), part.end(), cut.b);
            if (ia == part.end() || ib == part.end()) continue;
            // split at the two positions in stored cyclic order
            auto lo = ia < ib ? ia : ib;
            auto hi = ia < ib ? ib : ia;
            std::vector<int> first(lo, hi + 1);
            std::vector<int> second(hi, part.end());
            second.insert(second.end(), part.begin(), lo + 1);
            parts[p] = std::move(first);
            parts.push_back(std::move(second));
            break;
        }
    }
    // each cut splits one part in two; total (size_i - 2) is conserved
    long long total = 0;
    for (const auto& part : parts) {
        if (part.size() < 3) throw std::logic_error("cut_polygon: degenerate part");
        total += static_cast<long long>(part.size()) - 2;
    }
    if (total != size - 2) throw std::logic_error("cut_polygon: size bookkeeping broken");
    std::sort(parts.begin(), parts.end());
    return parts;
}

AssociahedronMatch match_associahedron(const ExchangeGraph& g, const Triangulation& root) {
    AssociahedronMatch m;
    const int n = g.rank();
    auto alignment = align_polygon_charts(g, root);
    if (!alignment) {
        m.detail = "charts do not align with the flip combinatorics";
        return m;
    }
    StrataPoset poset = strata_poset(g);
    m.strata_by_codim = poset.count_by_codim(n);
    m.faces_by_codim.resize(n + 1);
    for (int k = 0; k <= n; ++k)
        m.faces_by_codim[k] = associahedron_faces(root.size(), k).size();

    // codim-k strata correspond exactly to the k-element non-crossing sets
    std::vector<std::vector<Chord>> cut_sets(poset.strata.size());
    for (const Stratum& s : poset.strata) {
        cut_sets[s.id] = stratum_cut_diagonals(s, *alignment);
        if (static_cast<int>(cut_sets[s.id].size()) != s.codim) {
            m.detail = "cut set size disagrees with the codimension";
            return m;
        }
    }
    for (int k = 0; k <= n; ++k) {
        std::set<std::vector<Chord>> from_strata, from_faces;
        for (const Stratum& s : poset.strata)
            if (s.codim == k) from_strata.insert(cut_sets[s.id]);
        for (auto& f : associahedron_faces(root.size(), k)) {
            std::sort(f.begin(), f.end());
            from_faces.insert(f);
        }
        if (from_strata.size() != m.strata_by_codim[k] || from_strata != from_faces) {
            m.detail = "codimension " + std::to_string(k) + " strata mismatch";
            return m;
        }
    }
    // covers are anti-isomorphic to face inclusions: dropping one cut
    for (const auto& [lo, hi] : poset.covers) {
        const auto &cl = cut_sets[lo], &ch = cut_sets[hi];
        if (cl.size() != ch.size() + 1 ||
            !std::includes(cl.begin(), cl.end(), ch.begin(), ch.end())) {
            m.detail = "cover relation disagrees with face inclusion";
            return m;
        }
    }
    // every one-step face inclusion appears as a cover
    std::size_t expected_covers = 0;
    for (int k = 1; k <= n; ++k)
        expected_covers += associahedron_faces(root.size(), k).size() * k;
    if (poset.covers.size() != expected_covers) {
        m.detail = "cover count mismatch";
        return m;
    }
    m.ok = true;
    return m;
}

}  // namespace clusterx
