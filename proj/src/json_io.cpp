#include <clusterx/json_io.hpp>

#include <stdexcept>

namespace clusterx {

namespace {

long long as_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string("expected integer for ") + what);
    return j.get<long long>();
}

}  // namespace

Json rat_to_json(const Rat& q) {
    if (is_integral(q) && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
    return Json(to_string(q));
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw std::invalid_argument("expected integer or rational string");
}

Json laurent_to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json{{"exp", e}, {"coef", to_string(c)}});
    return Json{{"vars", p.vars()}, {"terms", terms}};
}

LaurentPoly laurent_from_json(const Json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    LaurentPoly::TermMap terms;
    for (const Json& t : j.at("terms")) {
        std::vector<int> e = t.at("exp").get<std::vector<int>>();
        Int c(t.at("coef").get<std::string>());
        if (e.size() != vars.size())
            throw std::invalid_argument("laurent term arity mismatch");
        terms[e] += c;
    }
    return LaurentPoly::make(std::move(vars), std::move(terms));
}

Json seed_to_json(const Seed& s) {
    return Json{{"n", s.rank()},
                {"epsilon", s.epsilon()},
                {"d", s.multipliers()},
                {"labels", s.labels()}};
}

Seed seed_from_json(const Json& j) {
    IntMatrix eps;
    for (const Json& row : j.at("epsilon"))
        eps.push_back(row.get<std::vector<long long>>());
    std::size_t n = j.contains("n") ? static_cast<std::size_t>(as_int(j.at("n"), "n"))
                                    : eps.size();
    if (n != eps.size()) throw std::invalid_argument("seed: n disagrees with epsilon");
    std::vector<long long> d(n, 1);
    if (j.contains("d")) d = j.at("d").get<std::vector<long long>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Seed(std::move(eps), std::move(d), std::move(labels));
}

Json graph_to_json(const ExchangeGraph& g, bool with_transitions) {
    Json nodes = Json::array();
    for (const auto& nd : g.nodes())
        nodes.push_back(Json{{"id", nd.id},
                             {"epsilon", nd.seed.epsilon()},
                             {"d", nd.seed.multipliers()}});
    Json edges = Json::array();
    for (const auto& e : g.edges())
        edges.push_back(Json{{"from", g.nodes()[e.from].id},
                             {"dir", e.dir},
                             {"to", g.nodes()[e.to].id},
                             {"perm", e.perm}});
    Json out{{"rank", g.rank()},
             {"truncated", g.truncated()},
             {"nodes", nodes},
             {"edges", edges}};
    if (with_transitions) {
        Json tr = Json::object();
        for (std::size_t u = 0; u < g.nodes().size(); ++u) {
            Json per = Json::object();
            const auto& sub = g.transition(static_cast<int>(u));
            for (int i = 0; i < g.rank(); ++i)
                per[g.nodes()[u].seed.labels()[i]] = sub[i].to_text();
            tr[g.nodes()[u].id] = per;
        }
        out["transitions"] = tr;
    }
    return out;
}

Json tropical_point_to_json(const TropicalPoint& p) {
    Json coords = Json::array();
    for (const Rat& c : p.coords) coords.push_back(rat_to_json(c));
    return Json{{"chart", p.chart}, {"coords", coords}};
}

TropicalPoint tropical_point_from_json(const Json& j) {
    TropicalPoint p;
    p.chart = j.at("chart").get<std::string>();
    for (const Json& c : j.at("coords")) p.coords.push_back(rat_from_json(c));
    return p;
}

Json triangulation_to_json(const Triangulation& t) {
    Json diags = Json::array();
    for (const Chord& d : t.diagonals()) diags.push_back(Json{d.a, d.b});
    return Json{{"size", t.size()}, {"diagonals", diags}};
}

Triangulation triangulation_from_json(const Json& j) {
    int size = static_cast<int>(as_int(j.at("size"), "size"));
    std::vector<Chord> diags;
    for (const Json& d : j.at("diagonals")) {
        if (!d.is_array() || d.size() != 2)
            throw std::invalid_argument("diagonal must be a pair");
        diags.push_back(chord(static_cast<int>(as_int(d[0], "diagonal endpoint")),
                              static_cast<int>(as_int(d[1], "diagonal endpoint"))));
    }
    return Triangulation(size, std::move(diags));
}

Json configuration_to_json(const Configuration& c) {
    Json pts = Json::array();
    for (const ProjPoint& p : c) pts.push_back(p.infinite ? Json("inf") : Json(to_string(p.value)));
    return Json{{"points", pts}};
}

Configuration configuration_from_json(const Json& j) {
    Configuration c;
    for (const Json& p : j.at("points")) {
        if (p.is_string() && p.get<std::string>() == "inf") {
            c.push_back(ProjPoint::inf());
        } else {
            c.push_back(ProjPoint::of(rat_from_json(p)));
        }
    }
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t k = i + 1; k < c.size(); ++k)
            if (c[i] == c[k]) throw std::invalid_argument("configuration points must be distinct");
    return c;
}

Json lamination_to_json(const Lamination& l) {
    Json w = Json::array();
    for (const auto& [c, weight] : l.weights())
        w.push_back(Json{{"chord", Json{c.a, c.b}}, {"w", weight}});
    return Json{{"size", l.size()}, {"weights", w}};
}

Lamination lamination_from_json(const Json& j) {
    int size = static_cast<int>(as_int(j.at("size"), "size"));
    std::map<Chord, long long> weights;
    for (const Json& entry : j.at("weights")) {
        const Json& c = entry.at("chord");
        weights[chord(static_cast<int>(as_int(c[0], "chord endpoint")),
                      static_cast<int>(as_int(c[1], "chord endpoint")))] +=
            as_int(entry.at("w"), "weight");
    }
    return Lamination(size, std::move(weights));
}

Json poset_to_json(const StrataPoset& poset, const ExchangeGraph& g,
                   const std::optional<PolygonAlignment>& alignment, int polygon_size) {
    Json strata = Json::array();
    for (const Stratum& s : poset.strata) {
        const auto& [node, zero_set] = s.members.front();
        Json entry{{"id", s.id},
                   {"codim", s.codim},
                   {"chart", g.nodes()[node].id},
                   {"zero_set", std::vector<int>(zero_set.begin(), zero_set.end())},
                   {"orbit_size", s.members.size()}};
        if (alignment) {
            std::vector<Chord> cuts = stratum_cut_diagonals(s, *alignment);
            Json jcuts = Json::array();
            for (const Chord& c : cuts) jcuts.push_back(Json{c.a, c.b});
            entry["cut_diagonals"] = jcuts;
            Json parts = Json::array();
            for (const auto& part : cut_polygon(polygon_size, cuts)) {
                parts.push_back(Json{{"vertices", part},
                                     {"type", "A" + std::to_string(static_cast<int>(part.size()) - 3)}});
            }
            entry["parts"] = parts;
        }
        strata.push_back(std::move(entry));
    }
    Json covers = Json::array();
    for (const auto& [lo, hi] : poset.covers) covers.push_back(Json{lo, hi});
    return Json{{"strata", strata}, {"covers", covers}};
}

}  // namespace clusterx
