// clusterx: exact engine for cluster X-varieties at desk scale. Seeds and
// mutations, exchange graphs, tropical points, polygon charts, canonical
// basis functions, special-completion strata, and the punctured-torus
// boundary picture.
#include <clusterx/json_io.hpp>
#include <clusterx/torus.hpp>
#include <clusterx/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace clusterx;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitTruncated = 3;

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    Json j;
    in >> j;
    return j;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << payload;
    if (payload.empty() || payload.back() != '\n') out << "\n";
}

void emit_json(const std::string& out_path, Json j, std::uint64_t rng_seed) {
    j["rng_seed"] = rng_seed;
    emit(out_path, j.dump(1));
}

struct Options {
    std::uint64_t rng_seed = 20260808;
    std::string out;
    std::string seed_path, point_path, config_path, triangulation_path, lamination_path;
    std::string f_path;
    std::string format = "json";
    std::string suite = "all";
    std::string diagonal;
    std::size_t max_nodes = 2000;
    int at = 0;
    int size = 5;
    int codim = 1;
    long long bound = 1;
    int max_len = 6;
    int size_cap = 7;
    bool transitions = false;
    bool check_positivity = false;
    bool rays = false;
    bool serial = false;
};

Chord parse_chord_arg(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected a diagonal as 'a,b'");
    return chord(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
}

int run(const std::string& cmd, const Options& opt) {
    if (cmd == "mutate") {
        Seed s = seed_from_json(read_json(opt.seed_path));
        if (opt.at < 0 || opt.at >= s.rank())
            throw std::invalid_argument("--at out of range");
        Seed m = s.mutated(opt.at);
        Json chart_map = Json::object();
        auto mu = mutate_x(s, opt.at);
        for (int i = 0; i < s.rank(); ++i) chart_map[s.labels()[i]] = mu[i].to_text();
        emit_json(opt.out, Json{{"seed", seed_to_json(m)}, {"chart_map", chart_map}},
                  opt.rng_seed);
        return kExitOk;
    }
    if (cmd == "graph") {
        Seed s = seed_from_json(read_json(opt.seed_path));
        ExchangeGraph g = explore_exchange_graph(s, opt.max_nodes);
        emit_json(opt.out, graph_to_json(g, opt.transitions), opt.rng_seed);
        return g.truncated() ? kExitTruncated : kExitOk;
    }
    if (cmd == "trop-mutate") {
        Seed s = seed_from_json(read_json(opt.seed_path));
        ExchangeGraph g = explore_exchange_graph(s, opt.max_nodes);
        TropicalPoint p = tropical_point_from_json(read_json(opt.point_path));
        TropicalPoint q = pl_mutate(g, p, opt.at);
        emit_json(opt.out, tropical_point_to_json(q), opt.rng_seed);
        return g.truncated() ? kExitTruncated : kExitOk;
    }
    if (cmd == "cones") {
        Seed s = seed_from_json(read_json(opt.seed_path));
        ExchangeGraph g = explore_exchange_graph(s, opt.max_nodes);
        if (g.truncated()) {
            std::cerr << "error: exchange graph truncated at " << opt.max_nodes
                      << " charts; the cover needs a finite graph\n";
            return kExitTruncated;
        }
        TropicalPoint p = tropical_point_from_json(read_json(opt.point_path));
        Json cones = Json::array();
        for (const SpecialCone& c : positive_part_cover(g, p))
            cones.push_back(Json{{"chart", c.chart},
                                 {"zero_set", std::vector<int>(c.zero_set.begin(),
                                                               c.zero_set.end())}});
        emit_json(opt.out, Json{{"cones", cones}}, opt.rng_seed);
        return kExitOk;
    }
    if (cmd == "valuation") {
        PosRational f = parse_pos_rational(read_text(opt.f_path));
        TropicalPoint p = tropical_point_from_json(read_json(opt.point_path));
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < p.coords.size(); ++i)
            vars.push_back("X" + std::to_string(i));
        Int v = valuation_of(f, vars, p.coords);
        emit_json(opt.out, Json{{"value", to_string(v)}}, opt.rng_seed);
        return kExitOk;
    }
    if (cmd == "flip") {
        Triangulation t = triangulation_from_json(read_json(opt.triangulation_path));
        Chord e = parse_chord_arg(opt.diagonal);
        Triangulation t2 = flip(t, e);
        auto q = quad_of(t, e);
        emit_json(opt.out,
                  Json{{"triangulation", triangulation_to_json(t2)},
                       {"removed", Json{e.a, e.b}},
                       {"added", Json{chord(q[1], q[3]).a, chord(q[1], q[3]).b}}},
                  opt.rng_seed);
        return kExitOk;
    }
    if (cmd == "chart") {
        Triangulation t = triangulation_from_json(read_json(opt.triangulation_path));
        Configuration c = configuration_from_json(read_json(opt.config_path));
        Json coords = Json::array();
        for (const auto& [d, v] : chart_coords(t, c))
            coords.push_back(Json{{"diagonal", Json{d.a, d.b}}, {"value", rat_to_json(v)}});
        emit_json(opt.out, Json{{"coords", coords}}, opt.rng_seed);
        return kExitOk;
    }
    if (cmd == "associahedron") {
        auto faces = associahedron_faces(opt.size, opt.codim);
        Json jfaces = Json::array();
        for (const auto& f : faces) {
            Json set = Json::array();
            for (const Chord& d : f) set.push_back(Json{d.a, d.b});
            jfaces.push_back(set);
        }
        emit_json(opt.out, Json{{"size", opt.size}, {"codim", opt.codim},
                                {"count", faces.size()}, {"faces", jfaces}},
                  opt.rng_seed);
        return kExitOk;
    }
    if (cmd == "canon") {
        Lamination l = lamination_from_json(read_json(opt.lamination_path));
        Triangulation t = triangulation_from_json(read_json(opt.triangulation_path));
        LaurentPoly f = canonical_in_chart(l, t);
        bool positive = f.all_positive();
        Json out{{"laurent", laurent_to_json(f)}, {"text", f.to_text()},
                 {"positive", positive}};
        if (!opt.point_path.empty()) {
            // pairing convenience: the valuation of the canonical function at
            // an integral tropical point of the same chart
            TropicalPoint p = tropical_point_from_json(read_json(opt.point_path));
            std::vector<std::string> vars;
            for (int i = 0; i < t.rank(); ++i) vars.push_back("X" + std::to_string(i));
            if (p.coords.size() != vars.size())
                throw std::invalid_argument("--point arity does not match the chart");
            out["pairing"] = to_string(valuation_of(PosRational(f), vars, p.coords));
        }
        emit_json(opt.out, std::move(out), opt.rng_seed);
        if (opt.check_positivity && !positive) return kExitPropertyFailure;
        return kExitOk;
    }
    if (cmd == "laminations") {
        auto ls = enumerate_laminations(opt.size, opt.bound);
        Json out = Json::array();
        for (const Lamination& l : ls) out.push_back(lamination_to_json(l));
        emit_json(opt.out, Json{{"size", opt.size}, {"bound", opt.bound},
                                {"count", ls.size()}, {"laminations", out}},
                  opt.rng_seed);
        return kExitOk;
    }
    if (cmd == "completion") {
        Seed s = seed_from_json(read_json(opt.seed_path));
        ExchangeGraph g = explore_exchange_graph(s, opt.max_nodes);
        if (g.truncated()) {
            std::cerr << "error: exchange graph truncated at " << opt.max_nodes
                      << " charts; strata need a finite graph\n";
            return kExitTruncated;
        }
        StrataPoset poset = strata_poset(g);
        // decorate with polygon geometry when the seed is an A_n adjacency
        std::optional<PolygonAlignment> alignment;
        int polygon_size = g.rank() + 3;
        for (const Triangulation& t : enumerate_triangulations(polygon_size)) {
            if (adjacency_epsilon(t) == g.nodes()[0].seed.epsilon()) {
                alignment = align_polygon_charts(g, t);
                if (alignment) break;
            }
        }
        emit_json(opt.out, poset_to_json(poset, g, alignment, polygon_size), opt.rng_seed);
        return kExitOk;
    }
    if (cmd == "torus-boundary") {
        auto patch = orbit_patch(opt.max_len);
        emit(opt.out, render_hemisphere(patch, opt.format, opt.rays));
        return kExitOk;
    }
    if (cmd == "verify") {
        VerifyOptions vo;
        vo.rng_seed = opt.rng_seed;
        vo.size_cap = opt.size_cap;
        vo.mode = opt.serial ? par::Mode::serial : par::Mode::parallel;
        std::string report = verify_report(opt.suite, vo);
        emit(opt.out, report);
        return report.find("FAIL") == std::string::npos ? kExitOk : kExitPropertyFailure;
    }
    throw std::invalid_argument("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "clusterx: exact seed mutation, exchange graphs, tropical points,\n"
        "polygon charts, canonical basis functions, completion strata, and\n"
        "the punctured-torus boundary. Set CLUSTERX_THREADS to cap the\n"
        "parallel sweeps."};
    app.require_subcommand(1);
    Options opt;

    auto add_out = [&](CLI::App* c) { c->add_option("--out", opt.out, "output path (default stdout)"); };
    auto add_rng = [&](CLI::App* c) {
        c->add_option("--rng-seed", opt.rng_seed, "seed recorded in outputs and used by sampling");
    };

    auto* mutate = app.add_subcommand("mutate", "mutate a seed and print the chart map");
    mutate->add_option("--seed", opt.seed_path, "seed JSON")->required();
    mutate->add_option("--at", opt.at, "mutation direction")->required();
    add_out(mutate);
    add_rng(mutate);

    auto* graph = app.add_subcommand("graph", "explore the exchange graph");
    graph->add_option("--seed", opt.seed_path, "seed JSON")->required();
    graph->add_option("--max-nodes", opt.max_nodes, "chart bound (exit 3 when hit)");
    graph->add_flag("--transitions", opt.transitions, "include chart transitions");
    add_out(graph);
    add_rng(graph);

    auto* trop = app.add_subcommand("trop-mutate", "PL mutation of a tropical point");
    trop->add_option("--seed", opt.seed_path, "seed JSON")->required();
    trop->add_option("--point", opt.point_path, "tropical point JSON")->required();
    trop->add_option("--at", opt.at, "mutation direction")->required();
    trop->add_option("--max-nodes", opt.max_nodes, "chart bound");
    add_out(trop);
    add_rng(trop);

    auto* cones = app.add_subcommand("cones", "charts where the point is nonnegative");
    cones->add_option("--seed", opt.seed_path, "seed JSON")->required();
    cones->add_option("--point", opt.point_path, "tropical point JSON")->required();
    cones->add_option("--max-nodes", opt.max_nodes, "chart bound");
    add_out(cones);
    add_rng(cones);

    auto* valuation = app.add_subcommand("valuation", "strict valuation -F^t(x)");
    valuation->add_option("--f", opt.f_path, "subtraction-free expression (text)")->required();
    valuation->add_option("--point", opt.point_path, "integral tropical point JSON")->required();
    add_out(valuation);
    add_rng(valuation);

    auto* flip_cmd = app.add_subcommand("flip", "flip a diagonal of a triangulation");
    flip_cmd->add_option("--triangulation", opt.triangulation_path, "triangulation JSON")->required();
    flip_cmd->add_option("--diagonal", opt.diagonal, "diagonal to flip, as 'a,b'")->required();
    add_out(flip_cmd);
    add_rng(flip_cmd);

    auto* chart = app.add_subcommand("chart", "cross-ratio chart of a configuration");
    chart->add_option("--config", opt.config_path, "configuration JSON")->required();
    chart->add_option("--triangulation", opt.triangulation_path, "triangulation JSON")->required();
    add_out(chart);
    add_rng(chart);

    auto* assoc = app.add_subcommand("associahedron", "codim-k faces: non-crossing diagonal sets");
    assoc->add_option("--size", opt.size, "polygon size")->required();
    assoc->add_option("--codim", opt.codim, "face codimension")->required();
    add_out(assoc);
    add_rng(assoc);

    auto* canon = app.add_subcommand("canon", "canonical function of a lamination in a chart");
    canon->add_option("--lamination", opt.lamination_path, "lamination JSON")->required();
    canon->add_option("--triangulation", opt.triangulation_path, "triangulation JSON")->required();
    canon->add_flag("--check-positivity", opt.check_positivity,
                    "exit 1 unless all coefficients are positive");
    canon->add_option("--point", opt.point_path,
                      "integral tropical point: also emit the pairing (valuation)");
    add_out(canon);
    add_rng(canon);

    auto* lams = app.add_subcommand("laminations", "all laminations with bounded tree coordinates");
    lams->add_option("--size", opt.size, "polygon size")->required();
    lams->add_option("--bound", opt.bound, "coordinate bound")->required();
    add_out(lams);
    add_rng(lams);

    auto* completion = app.add_subcommand("completion", "strata poset of the special completion");
    completion->add_option("--seed", opt.seed_path, "seed JSON")->required();
    completion->add_option("--max-nodes", opt.max_nodes, "chart bound");
    add_out(completion);
    add_rng(completion);

    auto* torus = app.add_subcommand("torus-boundary", "triangle patch of the PL modular action");
    torus->add_option("--max-len", opt.max_len, "maximal word length");
    torus->add_option("--format", opt.format, "svg or json")
        ->check(CLI::IsMember({"svg", "json"}));
    torus->add_flag("--rays", opt.rays, "draw the vertex rays");
    add_out(torus);
    add_rng(torus);

    auto* verify = app.add_subcommand("verify", "run the property suite");
    verify->add_option("--suite", opt.suite,
                       "all, seed, polygon, tropical, laurent, lamination, completion, torus");
    verify->add_option("--size-cap", opt.size_cap, "largest polygon size in sweeps");
    verify->add_flag("--serial", opt.serial, "use the serial reference sweeps");
    add_out(verify);
    add_rng(verify);

    CLI11_PARSE(app, argc, argv);

    try {
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
}
