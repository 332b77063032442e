#include <clusterx/torus.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace clusterx {

namespace {
long long pos_part(long long v) { return v > 0 ? v : 0; }
}

Triple act_S(const Triple& p) {
    const auto [x, y, z] = p;
    return {y - 2 * pos_part(-z), x + 2 * pos_part(z), -z};
}

Triple act_ST(const Triple& p) { return {p[1], p[2], p[0]}; }

Triple act_T(const Triple& p) { return act_S(act_ST(p)); }

Triple published_T(const Triple& p) {
    const auto [x, y, z] = p;
    return {x - 2 * pos_part(-z), y + 2 * pos_part(z), -z};
}

PLWord PLWord::parse(const std::string& letters) {
    // reduce using S^2 = (ST)^3 = e: rewrite into alternating syllables over
    // a = S and b = ST (T = a b), then render a shortest witness back
    std::vector<int> syl;  // 1 = a, 2 = b, 4 = b^2 stored as 2 bits of power
    auto push_a = [&]() {
        if (!syl.empty() && syl.back() == 0)
            syl.pop_back();
        else
            syl.push_back(0);
    };
    auto push_b = [&](int pow) {
        if (!syl.empty() && syl.back() > 0) {
            int p = (syl.back() + pow) % 3;
            syl.pop_back();
            if (p) syl.push_back(p);
        } else {
            syl.push_back(pow);
        }
    };
    for (char c : letters) {
        if (c == 'S') {
            push_a();
        } else if (c == 'T') {
            push_a();
            push_b(1);
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("PLWord: letters are S and T");
        }
        // collapse a-b interleaving only happens at the boundary handled above
        // re-run the a-cancellation that push_b may have exposed
        while (syl.size() >= 2 && syl[syl.size() - 1] == 0 && syl[syl.size() - 2] == 0) {
            syl.pop_back();
            syl.pop_back();
        }
    }
    // render: a -> "S", b -> "ST", b^2 -> "STST"; adjacent "S S" pairs cannot
    // occur in an alternating normal form except as a*b = "SST" -> "T"
    std::string out;
    for (std::size_t i = 0; i < syl.size(); ++i) {
        if (syl[i] == 0) {
            out += 'S';
        } else {
            for (int k = 0; k < syl[i]; ++k) out += "ST";
        }
    }
    // cancel the SS seams produced by a followed by b
    std::string reduced;
    for (char c : out) {
        if (c == 'S' && !reduced.empty() && reduced.back() == 'S')
            reduced.pop_back();
        else
            reduced += c;
    }
    return PLWord(std::move(reduced));
}

Triple apply_pl(const PLWord& w, const Triple& p) {
    Triple cur = p;
    for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it)
        cur = *it == 'S' ? act_S(cur) : act_T(cur);
    return cur;
}

std::vector<PatchTriangle> orbit_patch(int max_len) {
    if (max_len < 0 || max_len > 16)
        throw std::invalid_argument("orbit_patch: max_len in [0, 16]");
    const std::array<Triple, 3> base{Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}};

    auto image = [&](const std::array<Triple, 3>& tri, char letter) {
        std::array<Triple, 3> out;
        for (int i = 0; i < 3; ++i) out[i] = letter == 'S' ? act_S(tri[i]) : act_T(tri[i]);
        return out;
    };

    std::vector<PatchTriangle> patch{{"", base}};
    std::map<std::array<Triple, 3>, int> seen{{base, 0}};
    // BFS by letter length: left-multiplying a length-L word by a letter
    // gives every length-(L+1) element
    std::size_t level_begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t level_end = patch.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (char letter : {'S', 'T'}) {
                std::array<Triple, 3> tri = image(patch[i].vertices, letter);
                std::string word = std::string(1, letter) + patch[i].word;
                if (seen.emplace(tri, static_cast<int>(patch.size())).second)
                    patch.push_back({std::move(word), tri});
            }
        }
        level_begin = level_end;
    }
    return patch;
}

namespace {

std::pair<double, double> project(const Triple& p) {
    // plane basis: (1,0,0) -> (0,0), (0,1,0) -> (1,0), (0,0,1) -> (1/2, h)
    const double h = 0.8660254037844386;
    return {p[1] + 0.5 * p[2], h * p[2]};
}

}  // namespace

std::string render_hemisphere(const std::vector<PatchTriangle>& patch,
                              const std::string& format, bool include_rays) {
    // geometric triangles: merge entries with the same unordered vertex set
    std::vector<const PatchTriangle*> tris;
    std::set<std::array<Triple, 3>> seen;
    for (const auto& t : patch) {
        std::array<Triple, 3> key = t.vertices;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) tris.push_back(&t);
    }
    std::set<Triple> vertices;
    for (const auto* t : tris)
        for (const auto& v : t->vertices) vertices.insert(v);

    if (format == "json") {
        std::ostringstream os;
        os << "{\"triangles\":[";
        bool first = true;
        for (const auto* t : tris) {
            if (!first) os << ",";
            first = false;
            os << "{\"word\":\"" << t->word << "\",\"vertices\":[";
            for (int i = 0; i < 3; ++i) {
                if (i) os << ",";
                os << "[" << t->vertices[i][0] << "," << t->vertices[i][1] << ","
                   << t->vertices[i][2] << "]";
            }
            os << "]}";
        }
        os << "]";
        if (include_rays) {
            os << ",\"rays\":[";
            bool f2 = true;
            for (const Triple& v : vertices) {
                if (!f2) os << ",";
                f2 = false;
                // direction away from the barycenter, scaled to integers
                os << "{\"vertex\":[" << v[0] << "," << v[1] << "," << v[2]
                   << "],\"direction\":[" << 3 * v[0] - 1 << "," << 3 * v[1] - 1 << ","
                   << 3 * v[2] - 1 << "]}";
            }
            os << "]";
        }
        os << "}";
        return os.str();
    }
    if (format != "svg") throw std::invalid_argument("render_hemisphere: format svg|json");

    double xmin = 1e9, xmax = -1e9, ymin = 1e9, ymax = -1e9;
    for (const Triple& v : vertices) {
        auto [x, y] = project(v);
        xmin = std::min(xmin, x), xmax = std::max(xmax, x);
        ymin = std::min(ymin, y), ymax = std::max(ymax, y);
    }
    if (vertices.empty()) xmin = ymin = 0, xmax = ymax = 1;
    const double pad = 0.2 * std::max(xmax - xmin, ymax - ymin) + 0.1;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << xmin - pad << " "
       << ymin - pad << " " << (xmax - xmin) + 2 * pad << " " << (ymax - ymin) + 2 * pad
       << "\">\n";
    for (const auto* t : tris) {
        os << "  <polygon points=\"";
        for (int i = 0; i < 3; ++i) {
            auto [x, y] = project(t->vertices[i]);
            os << (i ? " " : "") << x << "," << y;
        }
        os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.01\"/>\n";
    }
    if (include_rays) {
        const double bx = 0.5, by = 0.28867513459481287;  // barycenter image
        for (const Triple& v : vertices) {
            auto [x, y] = project(v);
            double dx = x - bx, dy = y - by;
            double norm = std::max(1e-9, std::sqrt(dx * dx + dy * dy));
            os << "  <line x1=\"" << x << "\" y1=\"" << y << "\" x2=\""
               << x + 0.3 * dx / norm << "\" y2=\"" << y + 0.3 * dy / norm
               << "\" stroke=\"gray\" stroke-width=\"0.005\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace clusterx
