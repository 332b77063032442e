// Special completion combinatorics: strata indexed by special cones up to
// the frozen-coordinate identification, the strata poset, and its match with
// the associahedron face lattice in type A.
#pragma once

#include <clusterx/lamination.hpp>
#include <clusterx/tropical.hpp>

#include <optional>
#include <set>

namespace clusterx {

/// Stratum of the special completion: an orbit of (chart, zero_set) pairs
/// under mutations in zero directions. The stratum's codimension is
/// rank - |zero_set|: the all-zero cone is the origin and carries the open
/// stratum, a full-dimensional cone carries a closed one.
struct Stratum {
    int id = -1;
    int codim = 0;
    std::vector<std::pair<int, std::set<int>>> members;  // (node, zero_set), sorted
};

struct StrataPoset {
    std::vector<Stratum> strata;
    /// covering pairs (deeper, shallower): the deeper stratum lies in the
    /// closure of the shallower one and has codimension one more
    std::vector<std::pair<int, int>> covers;

    std::vector<std::size_t> count_by_codim(int rank) const;
    /// order relation: a in closure of b (reflexive-transitive over covers)
    bool leq(int a, int b) const;
    int stratum_of(int node, const std::set<int>& zero_set) const;
};

/// All strata of a finite exchange graph. Throws on a truncated graph.
StrataPoset strata_poset(const ExchangeGraph& g);

/// Identification of the graph's charts with triangulations, assuming the
/// root seed is the adjacency seed of `root` (slot i of the root chart =
/// i-th sorted diagonal). Fails if the exchange data ever disagrees with
/// the flip combinatorics.
struct PolygonAlignment {
    std::vector<Triangulation> node_triangulation;
    std::vector<std::vector<Chord>> slot_diagonal;  // [node][slot] -> diagonal
};
std::optional<PolygonAlignment> align_polygon_charts(const ExchangeGraph& g,
                                                     const Triangulation& root);

/// Cut diagonals of a stratum: the complement of the zero set, read through
/// the alignment. Consistent across every member of the orbit.
std::vector<Chord> stratum_cut_diagonals(const Stratum& s, const PolygonAlignment& a);

/// Sub-polygons obtained by cutting along pairwise non-crossing diagonals;
/// each part is a vertex list in cyclic order. Parts of size s contribute a
/// factor of type A_{s-3} (trivial when s = 3).
std::vector<std::vector<int>> cut_polygon(int size, const std::vector<Chord>& cuts);

struct AssociahedronMatch {
    bool ok = false;
    std::vector<std::size_t> strata_by_codim;
    std::vector<std::size_t> faces_by_codim;
    std::string detail;
    explicit operator bool() const { return ok; }
};

/// Check that the strata poset of the graph is anti-isomorphic to the face
/// lattice of the associahedron: codim-k strata correspond exactly to
/// k-element non-crossing diagonal sets, covers match inclusions.
AssociahedronMatch match_associahedron(const ExchangeGraph& g, const Triangulation& root);

}  // namespace clusterx
