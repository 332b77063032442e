// Convex-polygon combinatorics: chords, triangulations and flips, the
// adjacency exchange matrix, cross-ratio charts on exact configurations,
// associahedron faces, and the Stasheff-divisor membership test.
#pragma once

#include <clusterx/seed.hpp>

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace clusterx {

/// Chord of the (n+3)-gon, endpoints 1-based with a < b in the fixed
/// clockwise labeling. Sides are (i, i+1) and (1, size).
struct Chord {
    int a = 0, b = 0;
    auto operator<=>(const Chord&) const = default;
};

Chord chord(int i, int j);
bool is_side(const Chord& c, int size);
bool is_diagonal(const Chord& c, int size);
std::vector<Chord> all_diagonals(int size);
std::vector<Chord> all_chords(int size);

/// Strict crossing: chords cross iff exactly one endpoint of one lies
/// strictly between the endpoints of the other cyclically.
bool chords_cross(const Chord& c1, const Chord& c2);

/// Point of P^1 over Q: a rational value or infinity.
struct ProjPoint {
    bool infinite = false;
    Rat value;

    static ProjPoint inf() { return {true, Rat(0)}; }
    static ProjPoint of(const Rat& v) { return {false, v}; }
    bool operator==(const ProjPoint& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};

using Configuration = std::vector<ProjPoint>;  // pairwise distinct

/// r+(y1,y2,y3,y4) = (y1-y2)(y3-y4) / ((y2-y3)(y1-y4)); a point at infinity
/// cancels its two factors. Throws on degenerate quadruples.
Rat cross_ratio(const ProjPoint& y1, const ProjPoint& y2, const ProjPoint& y3,
                const ProjPoint& y4);

/// Moebius map z -> (a z + b) / (c z + d) on P^1, ad - bc != 0.
ProjPoint mobius(const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                 const ProjPoint& p);

class Triangulation {
public:
    Triangulation(int size, std::vector<Chord> diagonals);

    int size() const { return size_; }
    int rank() const { return size_ - 3; }
    /// diagonals in sorted order; this ordering indexes the chart variables
    const std::vector<Chord>& diagonals() const { return diagonals_; }
    int diagonal_index(const Chord& d) const;
    bool has_diagonal(const Chord& d) const;

    /// the n+1 triangles, each as an increasing vertex triple
    std::vector<std::array<int, 3>> triangles() const;

    auto operator<=>(const Triangulation&) const = default;

private:
    int size_;
    std::vector<Chord> diagonals_;
};

/// Vertices of the unique quadrilateral of T whose diagonal is E, in cyclic
/// order starting from the lower endpoint of E: (a, p, b, q) with E = (a,b).
std::array<int, 4> quad_of(const Triangulation& t, const Chord& e);

/// Replace E by the opposite diagonal of its quadrilateral.
Triangulation flip(const Triangulation& t, const Chord& e);

/// Cross-ratio chart: X_E for every diagonal E of T.
std::map<Chord, Rat> chart_coords(const Triangulation& t, const Configuration& c);

/// Adjacency exchange matrix over the sorted diagonals of T.
IntMatrix adjacency_epsilon(const Triangulation& t);

/// Seed attached to a triangulation (multipliers 1, labels X0..X{n-1}
/// following the sorted diagonal order).
Seed triangulation_seed(const Triangulation& t);

std::vector<Triangulation> enumerate_triangulations(int size);

/// Catalan number by the product formula (independent counting oracle).
Int catalan(int n);

/// All k-element sets of pairwise non-crossing diagonals (codim-k faces).
std::vector<std::vector<Chord>> associahedron_faces(int size, int k);

/// Membership of the boundary divisor D_{I,J} in the Stasheff divisor:
/// no chord inside I crosses a chord inside J.
bool stasheff_divisor_member(int size, const std::set<int>& I, const std::set<int>& J);

/// Snake triangulation (2,m), (3,m), (3,m-1), ...; its adjacency matrix is
/// the standard A_{m-3} exchange matrix up to isomorphism.
Triangulation zig_zag_triangulation(int size);

/// Strictly increasing rational configuration (positive cyclic order).
Configuration random_configuration(Rng& rng, int size);

struct FlipCheck {
    bool ok = true;
    Chord failing{};
    std::string detail;
    explicit operator bool() const { return ok; }
};

/// The bridge between the geometric atlas and the cluster atlas: flipping E
/// must mutate the adjacency matrix like the seed and the chart values like
/// the exchange formula, exactly, on random exact configurations.
FlipCheck verify_flip_mutation(const Triangulation& t, const Chord& e, int samples,
                               Rng& rng);

}  // namespace clusterx
