// Seeds (lattice basis + skew-symmetrizable exchange data), seed and
// X-coordinate mutation, seed isomorphism, and exchange-graph exploration.
#pragma once

#include <clusterx/laurent.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clusterx {

using IntMatrix = std::vector<std::vector<long long>>;

/// A seed: basis vectors of a lattice carrying a fixed skew-symmetric
/// Q-valued form. The exchange matrix eps_ij = (e_i, e_j) is recomputed from
/// the basis, so the double-mutation "canonical isomorphism" is visible as a
/// basis change with identical eps.
class Seed {
public:
    /// Build an initial seed from its exchange matrix and multipliers.
    /// Requires eps_ij * d_i == -eps_ji * d_j (skew-symmetrizability).
    Seed(IntMatrix eps, std::vector<long long> d, std::vector<std::string> labels = {});

    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<long long>& multipliers() const { return d_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const IntMatrix& basis() const { return basis_; }

    /// exchange matrix, recomputed from the current basis
    const IntMatrix& epsilon() const;

    /// basis mutation in direction k (form, multipliers, labels unchanged)
    Seed mutated(int k) const;

    /// restriction to a subset of basis vectors (induced form)
    Seed subseed(const std::vector<int>& keep) const;

    /// reindex: basis vector i moves to slot perm[i]
    Seed permuted(const std::vector<int>& perm) const;

    bool same_exchange_data(const Seed& o) const;  // equal eps and d

private:
    Seed() = default;
    int ambient_ = 0;
    IntMatrix basis_;              // rank x ambient
    IntMatrix omega_num_;          // ambient x ambient, skew; Omega = omega_num / omega_den
    long long omega_den_ = 1;
    std::vector<long long> d_;
    std::vector<std::string> labels_;
    mutable std::optional<IntMatrix> eps_cache_;
};

/// Pullback substitution of the X-coordinate mutation at k: expresses the
/// mutated chart's coordinates in the current chart's variables. Every image
/// is subtraction-free.
std::vector<PosRational> mutate_x(const Seed& s, int k);

/// Mutate twice at k and verify the composite substitution is the identity
/// as exact rational functions.
bool check_involution(const Seed& s, int k);

/// Apply a mutation word; returns the final seed and the substitution
/// expressing the final chart's coordinates in s's variables.
std::pair<Seed, std::vector<PosRational>> compose_mutations(const Seed& s,
                                                            const std::vector<int>& dirs);

/// Search for an index permutation carrying eps and d of a onto b
/// (b.eps[p(i)][p(j)] == a.eps[i][j]); prunes by sorted row multisets.
std::optional<std::vector<int>> find_seed_iso(const Seed& a, const Seed& b);

/// Atlas of charts reachable from a root seed. Nodes are charts: a candidate
/// seed merges with an existing node when an index permutation matches the
/// exchange data AND the chart's coordinate functions on the root torus
/// (checked exactly at fixed generic rational base points). Edges record the
/// permutation explicitly; coordinates are never silently relabeled.
class ExchangeGraph {
public:
    struct Node {
        Seed seed;
        std::string id;                        // "n0", "n1", ... in BFS order
        std::vector<std::vector<Rat>> base_values;  // [point][coordinate]
        int parent = -1;
        int parent_dir = -1;
    };
    struct Edge {
        int from = -1;
        int dir = -1;
        int to = -1;
        std::vector<int> perm;  // candidate index -> index in `to`
    };

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool truncated() const { return truncated_; }
    int rank() const { return rank_; }

    int node_index(const std::string& id) const;
    /// outgoing edge of `node` in direction k, if explored
    const Edge* edge_at(int node, int k) const;

    /// chart transition from the root: node coordinates as subtraction-free
    /// rational functions of the root coordinates (computed lazily).
    const std::vector<PosRational>& transition(int node) const;

    friend ExchangeGraph explore_exchange_graph(const Seed& root, std::size_t max_nodes);

private:
    int rank_ = 0;
    bool truncated_ = false;
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::map<std::pair<int, int>, int> adjacency_;  // (node, dir) -> edge index
    mutable std::vector<std::optional<std::vector<PosRational>>> transition_cache_;
};

/// BFS over mutations, merging charts as described above. Stops expanding
/// once max_nodes is reached and marks the graph truncated.
ExchangeGraph explore_exchange_graph(const Seed& root, std::size_t max_nodes);

/// Standard A_n exchange matrix (tridiagonal, eps_{i,i+1} = 1).
Seed seed_An(int n);

/// Markov / punctured-torus seed, eps cyclic with entries +-2.
Seed seed_torus();

/// Random skew-symmetrizable seed with |eps| <= max_abs, multipliers in
/// {1,2,3}; rank drawn from [1, max_rank].
Seed random_skew_seed(Rng& rng, int max_rank, long max_abs);

}  // namespace clusterx
