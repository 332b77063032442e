// The punctured-torus tropical boundary: the piecewise-linear modular-group
// action on Z^3 and the triangle patch it sweeps out of the base triangle
// { x,y,z >= 0, x+y+z = 1 }.
#pragma once

#include <array>
#include <string>
#include <vector>

namespace clusterx {

using Triple = std::array<long long, 3>;

/// Order-2 generator: the PL flip at the third coordinate composed with the
/// swap of the first two. Preserves x+y+z.
Triple act_S(const Triple& p);
/// Order-3 generator: cyclic shift (x,y,z) -> (y,z,x).
Triple act_ST(const Triple& p);
/// T = S * (ST); infinite order, preserves x+y+z.
Triple act_T(const Triple& p);
/// The twist formula in its published axis convention; equals act_T after
/// exchanging the first and third coordinates.
Triple published_T(const Triple& p);

/// Word over the letters S, T, applied as a left action (rightmost letter
/// acts first). Words are stored reduced; parse() reduces its input.
class PLWord {
public:
    static PLWord parse(const std::string& letters);
    const std::string& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

private:
    explicit PLWord(std::string reduced) : letters_(std::move(reduced)) {}
    std::string letters_;
    friend Triple apply_pl(const PLWord&, const Triple&);
};

Triple apply_pl(const PLWord& w, const Triple& p);

struct PatchTriangle {
    std::string word;               // shortest witness found in BFS order
    std::array<Triple, 3> vertices; // ordered images of the base vertices
};

/// Images of the base triangle under all group elements with a reduced word
/// of length <= max_len; deduplicated by ordered vertex triple.
std::vector<PatchTriangle> orbit_patch(int max_len);

/// SVG or JSON rendering of the patch on the plane x+y+z = 1. Rays, when
/// requested, are drawn at each patch vertex pointing away from the
/// barycenter toward the equatorial circle (visualization only).
std::string render_hemisphere(const std::vector<PatchTriangle>& patch,
                              const std::string& format, bool include_rays);

}  // namespace clusterx
