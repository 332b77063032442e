#include <clusterx/seed.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace clusterx {

namespace {

long long checked(__int128 v, const char* what) {
    if (v > (__int128)1 << 62 || v < -((__int128)1 << 62))
        throw std::overflow_error(std::string("seed arithmetic overflow in ") + what);
    return static_cast<long long>(v);
}

int sgn(long long v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> l(n);
    for (std::size_t i = 0; i < n; ++i) l[i] = "X" + std::to_string(i);
    return l;
}

}  // namespace

Seed::Seed(IntMatrix eps, std::vector<long long> d, std::vector<std::string> labels) {
    const std::size_t n = eps.size();
    if (d.size() != n) throw std::invalid_argument("Seed: d size mismatch");
    for (const auto& row : eps)
        if (row.size() != n) throw std::invalid_argument("Seed: eps not square");
    for (long long di : d)
        if (di <= 0) throw std::invalid_argument("Seed: multipliers must be positive");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (eps[i][j] * d[i] != -eps[j][i] * d[j])
                throw std::invalid_argument("Seed: eps is not skew-symmetrizable");

    ambient_ = static_cast<int>(n);
    basis_.assign(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) basis_[i][i] = 1;
    // Omega_ij = eps_ij / d_j, stored over lcm(d)
    long long L = 1;
    for (long long di : d) L = std::lcm(L, di);
    omega_den_ = L;
    omega_num_.assign(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            omega_num_[i][j] = eps[i][j] * (L / d[j]);
    d_ = std::move(d);
    labels_ = labels.empty() ? default_labels(n) : std::move(labels);
    if (labels_.size() != n) throw std::invalid_argument("Seed: labels size mismatch");
    eps_cache_ = std::move(eps);
}

const IntMatrix& Seed::epsilon() const {
    if (eps_cache_) return *eps_cache_;
    const int k = rank();
    IntMatrix eps(k, std::vector<long long>(k, 0));
    for (int i = 0; i < k; ++i) {
        // row_i * omega
        std::vector<__int128> tmp(ambient_, 0);
        for (int a = 0; a < ambient_; ++a) {
            if (basis_[i][a] == 0) continue;
            for (int b = 0; b < ambient_; ++b)
                tmp[b] += (__int128)basis_[i][a] * omega_num_[a][b];
        }
        for (int j = 0; j < k; ++j) {
            __int128 acc = 0;
            for (int b = 0; b < ambient_; ++b) acc += tmp[b] * basis_[j][b];
            // eps_ij = <e_i, e_j> d_j = acc * d_j / omega_den
            acc *= d_[j];
            if (acc % omega_den_ != 0)
                throw std::logic_error("Seed: non-integral exchange matrix");
            eps[i][j] = checked(acc / omega_den_, "epsilon");
        }
    }
    // mutation preserves skew-symmetrizability; guard it on every recompute
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (eps[i][j] * d_[i] != -eps[j][i] * d_[j])
                throw std::logic_error("Seed: skew-symmetrizability lost");
    eps_cache_ = std::move(eps);
    return *eps_cache_;
}

Seed Seed::mutated(int k) const {
    if (k < 0 || k >= rank()) throw std::invalid_argument("mutated: bad direction");
    const IntMatrix& eps = epsilon();
    Seed t = *this;
    t.eps_cache_.reset();
    // e_i + (e_i, e_k)_+ e_k for i != k; -e_k at k
    for (int i = 0; i < rank(); ++i) {
        if (i == k) continue;
        long long c = std::max(eps[i][k], 0LL);
        if (c == 0) continue;
        for (int a = 0; a < ambient_; ++a)
            t.basis_[i][a] = checked((__int128)basis_[i][a] + (__int128)c * basis_[k][a],
                                     "mutated");
    }
    for (int a = 0; a < ambient_; ++a) t.basis_[k][a] = -basis_[k][a];
    return t;
}

Seed Seed::subseed(const std::vector<int>& keep) const {
    if (keep.empty()) throw std::invalid_argument("subseed: empty index set");
    std::set<int> seen;
    Seed t;
    t.ambient_ = ambient_;
    t.omega_num_ = omega_num_;
    t.omega_den_ = omega_den_;
    for (int i : keep) {
        if (i < 0 || i >= rank() || !seen.insert(i).second)
            throw std::invalid_argument("subseed: bad index set");
        t.basis_.push_back(basis_[i]);
        t.d_.push_back(d_[i]);
        t.labels_.push_back(labels_[i]);
    }
    return t;
}

Seed Seed::permuted(const std::vector<int>& perm) const {
    const int k = rank();
    if (static_cast<int>(perm.size()) != k)
        throw std::invalid_argument("permuted: bad permutation");
    Seed t = *this;
    t.eps_cache_.reset();
    for (int i = 0; i < k; ++i) {
        t.basis_[perm[i]] = basis_[i];
        t.d_[perm[i]] = d_[i];
        t.labels_[perm[i]] = labels_[i];
    }
    return t;
}

bool Seed::same_exchange_data(const Seed& o) const {
    return rank() == o.rank() && d_ == o.d_ && epsilon() == o.epsilon();
}

std::vector<PosRational> mutate_x(const Seed& s, int k) {
    if (k < 0 || k >= s.rank()) throw std::invalid_argument("mutate_x: bad direction");
    const IntMatrix& eps = s.epsilon();
    const auto& lab = s.labels();
    std::vector<PosRational> out;
    out.reserve(s.rank());
    LaurentPoly one(1L);
    for (int i = 0; i < s.rank(); ++i) {
        if (i == k) {
            out.emplace_back(LaurentPoly::variable(lab[k], -1));
            continue;
        }
        long long e = eps[i][k];
        LaurentPoly xi = LaurentPoly::variable(lab[i]);
        if (e == 0) {
            out.emplace_back(xi);
        } else if (e < 0) {
            // X_i (1 + X_k)^{-e}
            out.emplace_back(xi * (one + LaurentPoly::variable(lab[k])).pow(-e));
        } else {
            // X_i (1 + X_k^{-1})^{-e}
            out.emplace_back(PosRational(
                xi, (one + LaurentPoly::variable(lab[k], -1)).pow(e)));
        }
    }
    return out;
}

namespace {

std::map<std::string, PosRational> as_images(const Seed& s,
                                             const std::vector<PosRational>& sub) {
    std::map<std::string, PosRational> m;
    for (int i = 0; i < s.rank(); ++i) m.emplace(s.labels()[i], sub[i]);
    return m;
}

}  // namespace

bool check_involution(const Seed& s, int k) {
    std::vector<PosRational> first = mutate_x(s, k);
    Seed t = s.mutated(k);
    std::vector<PosRational> second = mutate_x(t, k);
    auto images = as_images(s, first);
    for (int i = 0; i < s.rank(); ++i) {
        PosRational comp = substitute(second[i], images);
        if (!comp.is_variable(s.labels()[i])) return false;
    }
    return true;
}

std::pair<Seed, std::vector<PosRational>> compose_mutations(const Seed& s,
                                                            const std::vector<int>& dirs) {
    Seed cur = s;
    std::vector<PosRational> sub;
    sub.reserve(s.rank());
    for (int i = 0; i < s.rank(); ++i)
        sub.emplace_back(LaurentPoly::variable(s.labels()[i]));
    for (int k : dirs) {
        std::vector<PosRational> step = mutate_x(cur, k);
        auto images = as_images(s, sub);
        std::vector<PosRational> next;
        next.reserve(step.size());
        for (const auto& f : step) next.push_back(substitute(f, images));
        sub = std::move(next);
        cur = cur.mutated(k);
    }
    return {std::move(cur), std::move(sub)};
}

std::optional<std::vector<int>> find_seed_iso(const Seed& a, const Seed& b) {
    const int n = a.rank();
    if (b.rank() != n) return std::nullopt;
    const IntMatrix& ea = a.epsilon();
    const IntMatrix& eb = b.epsilon();

    // fingerprint of index i: (d_i, sorted row multiset)
    auto profile = [](const IntMatrix& e, const std::vector<long long>& d, int i) {
        std::vector<long long> row = e[i];
        std::sort(row.begin(), row.end());
        row.insert(row.begin(), d[i]);
        return row;
    };
    std::vector<std::vector<long long>> pa(n), pb(n);
    for (int i = 0; i < n; ++i) {
        pa[i] = profile(ea, a.multipliers(), i);
        pb[i] = profile(eb, b.multipliers(), i);
    }
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        for (int j = 0; j < n; ++j) {
            if (used[j] || pa[i] != pb[j]) continue;
            bool ok = eb[j][j] == ea[i][i];
            for (int i2 = 0; i2 < i && ok; ++i2)
                if (eb[j][perm[i2]] != ea[i][i2] || eb[perm[i2]][j] != ea[i2][i]) ok = false;
            if (!ok) continue;
            perm[i] = j;
            used[j] = true;
            if (self(self, i + 1)) return true;
            used[j] = false;
            perm[i] = -1;
        }
        return false;
    };
    if (rec(rec, 0)) return perm;
    return std::nullopt;
}

// --------------------------------------------------------------- exploration

namespace {

// fixed generic positive rational base points (coordinates = distinct primes)
const long kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,  37,  41, 43,
                        47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107,
                        109, 113};
constexpr int kNumBasePoints = 3;

std::vector<std::vector<Rat>> root_base_values(int rank) {
    std::vector<std::vector<Rat>> vals(kNumBasePoints, std::vector<Rat>(rank));
    for (int m = 0; m < kNumBasePoints; ++m)
        for (int i = 0; i < rank; ++i) vals[m][i] = Rat(kPrimes[m * rank + i]);
    return vals;
}

// numeric image of the base values under the exchange pullback at direction k
std::vector<std::vector<Rat>> mutate_values(const Seed& s, int k,
                                            const std::vector<std::vector<Rat>>& vals) {
    const IntMatrix& eps = s.epsilon();
    const int n = s.rank();
    std::vector<std::vector<Rat>> out(vals.size(), std::vector<Rat>(n));
    for (std::size_t m = 0; m < vals.size(); ++m) {
        const Rat& xk = vals[m][k];
        for (int i = 0; i < n; ++i) {
            if (i == k) {
                out[m][i] = Rat(1) / xk;
            } else {
                long long e = eps[i][k];
                Rat factor(1);
                if (e != 0) {
                    Rat base = sgn(e) > 0 ? Rat(Rat(1) + Rat(1) / xk) : Rat(Rat(1) + xk);
                    long long a = e > 0 ? e : -e;
                    Rat p(1);
                    for (long long t = 0; t < a; ++t) p *= base;
                    factor = e > 0 ? Rat(1) / p : p;
                }
                out[m][i] = vals[m][i] * factor;
            }
            out[m][i].canonicalize();
        }
    }
    return out;
}

std::string values_key(const std::vector<std::vector<Rat>>& vals,
                       const std::vector<int>& order) {
    std::ostringstream os;
    for (int i : order) {
        for (const auto& point : vals) os << to_string(point[i]) << "|";
        os << ";";
    }
    return os.str();
}

std::vector<int> sorted_order(const std::vector<std::vector<Rat>>& vals) {
    const int n = static_cast<int>(vals.front().size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        for (const auto& point : vals) {
            if (point[x] != point[y]) return point[x] < point[y];
        }
        return false;
    });
    return order;
}

// permutation matching candidate onto an existing node: identical base values
// and exchange data. Ties in the value tuples are resolved by backtracking.
std::optional<std::vector<int>> match_chart(const Seed& cand_seed,
                                            const std::vector<std::vector<Rat>>& cand_vals,
                                            const ExchangeGraph::Node& node) {
    const int n = cand_seed.rank();
    const IntMatrix& ec = cand_seed.epsilon();
    const IntMatrix& en = node.seed.epsilon();
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    auto values_equal = [&](int i, int j) {
        for (std::size_t m = 0; m < cand_vals.size(); ++m)
            if (cand_vals[m][i] != node.base_values[m][j]) return false;
        return true;
    };
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        for (int j = 0; j < n; ++j) {
            if (used[j] || !values_equal(i, j)) continue;
            if (cand_seed.multipliers()[i] != node.seed.multipliers()[j]) continue;
            bool ok = en[j][j] == ec[i][i];
            for (int i2 = 0; i2 < i && ok; ++i2)
                if (en[j][perm[i2]] != ec[i][i2] || en[perm[i2]][j] != ec[i2][i]) ok = false;
            if (!ok) continue;
            perm[i] = j;
            used[j] = true;
            if (self(self, i + 1)) return true;
            used[j] = false;
            perm[i] = -1;
        }
        return false;
    };
    if (rec(rec, 0)) return perm;
    return std::nullopt;
}

}  // namespace

int ExchangeGraph::node_index(const std::string& id) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].id == id) return static_cast<int>(i);
    throw std::invalid_argument("ExchangeGraph: unknown chart " + id);
}

const ExchangeGraph::Edge* ExchangeGraph::edge_at(int node, int k) const {
    auto it = adjacency_.find({node, k});
    if (it == adjacency_.end()) return nullptr;
    return &edges_[it->second];
}

const std::vector<PosRational>& ExchangeGraph::transition(int node) const {
    if (transition_cache_.size() != nodes_.size())
        transition_cache_.assign(nodes_.size(), std::nullopt);
    if (transition_cache_[node]) return *transition_cache_[node];
    const Node& nd = nodes_[node];
    if (nd.parent < 0) {
        std::vector<PosRational> id;
        for (int i = 0; i < rank_; ++i)
            id.emplace_back(LaurentPoly::variable(nd.seed.labels()[i]));
        transition_cache_[node] = std::move(id);
        return *transition_cache_[node];
    }
    const std::vector<PosRational>& up = transition(nd.parent);
    const Node& parent = nodes_[nd.parent];
    std::vector<PosRational> step = mutate_x(parent.seed, nd.parent_dir);
    std::map<std::string, PosRational> images;
    for (int i = 0; i < rank_; ++i) images.emplace(parent.seed.labels()[i], up[i]);
    const Edge* e = edge_at(nd.parent, nd.parent_dir);
    std::vector<PosRational> out(rank_, PosRational());
    for (int i = 0; i < rank_; ++i) out[e->perm[i]] = substitute(step[i], images);
    transition_cache_[node] = std::move(out);
    return *transition_cache_[node];
}

ExchangeGraph explore_exchange_graph(const Seed& root, std::size_t max_nodes) {
    if (max_nodes < 1) throw std::invalid_argument("explore: max_nodes must be >= 1");
    if (root.rank() * kNumBasePoints >
        static_cast<int>(sizeof(kPrimes) / sizeof(kPrimes[0])))
        throw std::invalid_argument("explore: rank too large for base point table");
    ExchangeGraph g;
    g.rank_ = root.rank();

    std::map<std::string, std::vector<int>> index;  // canonical key -> node ids
    auto add_node = [&](Seed s, std::vector<std::vector<Rat>> vals, int parent, int dir) {
        ExchangeGraph::Node nd{std::move(s), "n" + std::to_string(g.nodes_.size()),
                               std::move(vals), parent, dir};
        index[values_key(nd.base_values, sorted_order(nd.base_values))].push_back(
            static_cast<int>(g.nodes_.size()));
        g.nodes_.push_back(std::move(nd));
        return static_cast<int>(g.nodes_.size()) - 1;
    };

    add_node(root, root_base_values(root.rank()), -1, -1);
    std::size_t head = 0;
    while (head < g.nodes_.size()) {
        const int u = static_cast<int>(head++);
        for (int k = 0; k < g.rank_; ++k) {
            if (g.adjacency_.count({u, k})) continue;
            Seed cand = g.nodes_[u].seed.mutated(k);
            std::vector<std::vector<Rat>> vals =
                mutate_values(g.nodes_[u].seed, k, g.nodes_[u].base_values);
            int to = -1;
            std::vector<int> perm;
            auto hit = index.find(values_key(vals, sorted_order(vals)));
            if (hit != index.end()) {
                for (int cand_node : hit->second) {
                    auto p = match_chart(cand, vals, g.nodes_[cand_node]);
                    if (p) {
                        to = cand_node;
                        perm = std::move(*p);
                        break;
                    }
                }
            }
            if (to < 0) {
                if (g.nodes_.size() >= max_nodes) {
                    g.truncated_ = true;
                    continue;
                }
                to = add_node(std::move(cand), std::move(vals), u, k);
                perm.resize(g.rank_);
                std::iota(perm.begin(), perm.end(), 0);
            }
            g.edges_.push_back({u, k, to, perm});
            g.adjacency_[{u, k}] = static_cast<int>(g.edges_.size()) - 1;
        }
    }
    return g;
}

Seed seed_An(int n) {
    if (n < 1) throw std::invalid_argument("seed_An: n >= 1");
    IntMatrix eps(n, std::vector<long long>(n, 0));
    for (int i = 0; i + 1 < n; ++i) {
        eps[i][i + 1] = 1;
        eps[i + 1][i] = -1;
    }
    return Seed(eps, std::vector<long long>(n, 1));
}

Seed seed_torus() {
    return Seed({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}, {1, 1, 1});
}

Seed random_skew_seed(Rng& rng, int max_rank, long max_abs) {
    const int n = static_cast<int>(rng.uniform(1, max_rank));
    std::vector<long long> d(n);
    for (auto& di : d) di = rng.uniform(1, 3);
    IntMatrix eps(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // eps_ij = m * d_j / g, eps_ji = -m * d_i / g stays integral and
            // skew-symmetrizable; resample until both entries fit the cap
            long long g = std::gcd(d[i], d[j]);
            for (int tries = 0; tries < 64; ++tries) {
                long long m = rng.uniform(-max_abs, max_abs);
                long long a = m * d[j] / g, b = -m * d[i] / g;
                if (std::llabs(a) <= max_abs && std::llabs(b) <= max_abs) {
                    eps[i][j] = a;
                    eps[j][i] = b;
                    break;
                }
            }
        }
    }
    return Seed(eps, d);
}

}  // namespace clusterx
