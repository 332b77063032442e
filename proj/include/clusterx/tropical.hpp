// Tropical points of a cluster atlas, the piecewise-linear mutation, strict
// valuations, special cones, and convex subsets of tropical spaces.
#pragma once

#include <clusterx/seed.hpp>

#include <optional>
#include <set>

namespace clusterx {

/// Point of the tropical space, with chart-relative coordinates. Coordinates
/// are exact rationals; most operations expect integral ones.
struct TropicalPoint {
    std::string chart;       // node id in an ExchangeGraph
    std::vector<Rat> coords;
};

/// Cone { x_i >= 0 for all i, x_c = 0 for c in zero_set } in a chart.
struct SpecialCone {
    std::string chart;
    std::set<int> zero_set;
};

/// One PL mutation step using the chart's exchange matrix. The standalone
/// overload is chart-free: it maps coordinates between the seed and its
/// mutation at k.
std::vector<Rat> pl_mutate(const Seed& s, const std::vector<Rat>& x, int k);
TropicalPoint pl_mutate(const ExchangeGraph& g, const TropicalPoint& x, int k);

/// Coordinates of x in every chart of a finite graph (transport along the
/// BFS tree). Indexed like g.nodes().
std::vector<std::vector<Rat>> transport_all(const ExchangeGraph& g,
                                            const TropicalPoint& x);

/// Coordinates of x in one target chart.
TropicalPoint transport(const ExchangeGraph& g, const TropicalPoint& x,
                        const std::string& chart);

bool in_special_cone(const ExchangeGraph& g, const TropicalPoint& x,
                     const SpecialCone& cone);

/// All charts in which x has nonnegative coordinates, each with the maximal
/// zero set it satisfies there.
std::vector<SpecialCone> positive_part_cover(const ExchangeGraph& g,
                                             const TropicalPoint& x);

/// Strict valuation induced by an integral tropical point: -F^t(x).
Int valuation_of(const PosRational& f, const std::vector<std::string>& chart_vars,
                 const std::vector<Rat>& coords);

/// Scale to the spherical representative with max |coordinate| = 1.
std::vector<Rat> spherical_representative(const std::vector<Rat>& coords);

/// Convex subset cut out by constraints F^t(x) <= c. A missing bound means
/// the constraint is dropped (c = infinity). Spherical subsets carry bound 0
/// and remember their defining positive function.
class ConvexSubset {
public:
    struct Constraint {
        std::optional<PosRational> f;  // defining positive function, if known
        TropExpr trop;
        std::optional<Rat> bound;      // nullopt = +infinity
    };

    ConvexSubset() = default;
    explicit ConvexSubset(std::vector<Constraint> cs) : constraints_(std::move(cs)) {}

    /// spherical basic subset S_F = { F^t <= 0 }
    static ConvexSubset spherical(const PosRational& f);
    /// bounded basic subset { F^t <= c }
    static ConvexSubset bounded(const PosRational& f, const Rat& c);

    const std::vector<Constraint>& constraints() const { return constraints_; }

    bool contains(const std::map<std::string, Rat>& point) const;

    /// intersection: concatenated constraints
    ConvexSubset intersect(const ConvexSubset& o) const;
    /// spherical Minkowski sum: defining functions multiply
    ConvexSubset minkowski_spherical(const ConvexSubset& o) const;
    /// bounded Minkowski sum: same function list, bounds add
    ConvexSubset minkowski_bounded(const ConvexSubset& o) const;

private:
    std::vector<Constraint> constraints_;
};

}  // namespace clusterx
