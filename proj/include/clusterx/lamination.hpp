// Integral A-laminations on the polygon, their tree coordinates, and the
// canonical basis functions: products of Delta factors that expand to
// positive Laurent polynomials in every triangulation chart.
#pragma once

#include <clusterx/polygon.hpp>

#include <map>
#include <vector>

namespace clusterx {

/// Weighted chord collection: diagonal weights positive and pairwise
/// non-crossing, side weights any sign, zero weight sum at every vertex.
class Lamination {
public:
    Lamination(int size, std::map<Chord, long long> weights);

    int size() const { return size_; }
    const std::map<Chord, long long>& weights() const { return weights_; }
    long long weight(const Chord& c) const;

    bool operator==(const Lamination& o) const {
        return size_ == o.size_ && weights_ == o.weights_;
    }

private:
    int size_;
    std::map<Chord, long long> weights_;  // nonzero entries only
};

/// Plane trivalent tree with external vertices at the polygon's vertices,
/// encoded by its internal-edge splits: split (p, q) separates the legs
/// {p, ..., q-1} from the rest. Trees correspond to triangulations of an
/// auxiliary polygon whose vertices interleave the legs.
class PlaneTree {
public:
    static PlaneTree dual_of(const Triangulation& aux);
    /// tree dual to the fan at vertex 1 (the fixed coordinate frame)
    static PlaneTree canonical(int size);

    int size() const { return size_; }
    const std::vector<std::pair<int, int>>& splits() const { return splits_; }
    /// leg membership: does split s separate leg v from the rest?
    bool in_split(std::size_t s, int v) const;

private:
    PlaneTree(int size, std::vector<std::pair<int, int>> splits);
    int size_;
    std::vector<std::pair<int, int>> splits_;  // sorted
};

/// Half sum of the weights of the chords crossing each internal edge.
/// Throws on a half-integral result (a violated vertex-sum condition).
std::vector<long long> tree_coords(int size, const std::map<Chord, long long>& weights,
                                   const PlaneTree& t);
std::vector<long long> tree_coords(const Lamination& l, const PlaneTree& t);

/// Inverse of tree_coords: the unique lamination with the given coordinates.
Lamination lamination_from_coords(const std::vector<long long>& coords,
                                  const PlaneTree& t);

/// All laminations whose canonical-tree coordinates lie in [-bound, bound]^n.
std::vector<Lamination> enumerate_laminations(int size, long long bound);

/// The formal product prod Delta_{A_i}^{n_i}: chords with nonzero exponents.
std::vector<std::pair<Chord, long long>> canonical_function(const Lamination& l);

enum class ColoringRule { lex_min, lex_max };

/// Chart data for a triangulation: the red-edge section normalizes chosen
/// edges to 1 and expresses every edge of T as a Laurent monomial in the
/// chart variables X0..X{n-1} (sorted diagonal order). Delta expansions of
/// arbitrary chords are memoized.
class DeltaChart {
public:
    explicit DeltaChart(const Triangulation& t, ColoringRule rule = ColoringRule::lex_min);

    const Triangulation& triangulation() const { return t_; }
    /// monomial of an edge of T under the section
    const LaurentPoly& edge_monomial(const Chord& c) const;

    /// Delta_F expanded in the chart variables; positive integer coefficients
    const LaurentPoly& delta(const Chord& f);

    /// independent route: transfer (ladder) product along the crossed
    /// diagonals instead of the memoized three-term recursion
    LaurentPoly delta_transfer(const Chord& f) const;

private:
    Triangulation t_;
    std::map<Chord, LaurentPoly> edge_monomials_;
    std::map<Chord, LaurentPoly> memo_;
};

/// Expansion of the canonical function of l in the chart of T. The result is
/// a Laurent polynomial with nonnegative integer coefficients.
LaurentPoly canonical_in_chart(const Lamination& l, DeltaChart& chart);
LaurentPoly canonical_in_chart(const Lamination& l, const Triangulation& t,
                               ColoringRule rule = ColoringRule::lex_min);

/// Exact lift of a configuration to vectors with Delta = 1 on the section's
/// red edges (after the PGL2 normalization of the root triangle).
struct VectorConfig {
    std::vector<std::pair<Rat, Rat>> vectors;
};
VectorConfig section_lift(const Triangulation& t, const Configuration& c,
                          ColoringRule rule = ColoringRule::lex_min);

/// Delta(v_a, v_b) for a sorted chord, from a lifted configuration.
Rat delta_numeric(const VectorConfig& vc, const Chord& c);

/// Direct rational evaluation of prod Delta^{n_i} on a lift, with the linear
/// vertex order rotated to start at `first_vertex` (the value is independent
/// of that choice).
Rat canonical_numeric(const Lamination& l, const VectorConfig& vc, int first_vertex = 1);

}  // namespace clusterx
