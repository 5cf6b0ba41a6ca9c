#include "delzant/cli.hpp"

#include "delzant/geometry.hpp"
#include "delzant/polytope3.hpp"
#include "delzant/reconstruct.hpp"
#include "delzant/spectral.hpp"
#include "delzant/svg.hpp"
#include "delzant/zoo.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

namespace delzant::cli {

namespace {

using io::Json;

struct Context {
    std::istream* in = nullptr;
    bool json = false;
    std::string out_path;
    std::vector<std::string> diagnostics;
};

// What a command hands back before printing.
struct Produced {
    Json payload;
    std::string human;  // empty: print the payload
    int exit_code = kExitOk;
    bool raw = false;   // human is the full output (SVG)
};

std::string read_text(Context& ctx, const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(*ctx.in), std::istreambuf_iterator<char>());
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

Json load_document(Context& ctx, const std::string& path) {
    Json doc = io::parse_document(read_text(ctx, path));
    if (doc.is_object() && !doc.contains("dim") && doc.contains("polygon")) return doc["polygon"];
    return doc;
}

DelzantPolygon polygon_of(Context& ctx, const Json& doc) {
    auto parsed = io::polygon_from_json(doc);
    for (auto& w : parsed.warnings) ctx.diagnostics.push_back("warning: " + w);
    return std::move(parsed.polygon);
}

DelzantPolygon load_polygon(Context& ctx, const std::string& path) {
    Json doc = load_document(ctx, path);
    if (doc.is_object() && doc.value("dim", 2) != 2) {
        throw Error(ErrorKind::Unsupported, "this command needs a polygon (dim 2)");
    }
    return polygon_of(ctx, doc);
}

Polytope load_polytope(Context& ctx, const std::string& path) {
    Json doc = load_document(ctx, path);
    if (doc.is_object() && doc.value("dim", 2) == 3) return io::polytope3_from_json(doc);
    return polygon_of(ctx, doc);
}

Rational rational_option(const std::string& text, const char* name) {
    try {
        return parse_rational(text);
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, std::string("--") + name + ": " + e.what());
    }
}

IntVec2 theta_option(const std::vector<long long>& theta) {
    if (theta.size() != 2) throw Error(ErrorKind::Parse, "--theta expects two integers, e.g. --theta 1,0");
    return {Integer(theta[0]), Integer(theta[1])};
}

unsigned thread_count(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv(kThreadsEnv)) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

Json vec_json(const Vec2& v) { return Json::array({to_string(v.x), to_string(v.y)}); }
Json int_vec_json(const IntVec2& v) { return Json::array({v.x.convert_to<long long>(), v.y.convert_to<long long>()}); }

const char* face_name(FaceKind kind) {
    switch (kind) {
        case FaceKind::Polygon: return "polygon";
        case FaceKind::Edge: return "edge";
        case FaceKind::Vertex: return "vertex";
    }
    return "?";
}

Json polytope_json(const Polytope& p) {
    return std::visit([](const auto& x) { return io::to_json(x); }, p);
}

// ---- commands ----

Produced cmd_validate(Context& ctx, const std::string& input) {
    Polytope p = load_polytope(ctx, input);
    Produced r;
    std::ostringstream human;
    if (const auto* polygon = std::get_if<DelzantPolygon>(&p)) {
        auto report = validate_delzant(*polygon);
        r.payload["dim"] = 2;
        r.payload["valid"] = report.valid;
        Json defects = Json::array();
        for (const auto& d : report.defects) {
            defects.push_back({{"vertex", d.vertex_index}, {"at", vec_json(d.vertex)}, {"determinant", d.determinant.str()}});
            human << "vertex " << d.vertex_index << " (" << to_string(d.vertex.x) << ", " << to_string(d.vertex.y)
                  << "): determinant " << d.determinant.str() << "\n";
        }
        r.payload["defects"] = std::move(defects);
        r.exit_code = report.valid ? kExitOk : kExitValidation;
        human << (report.valid ? "valid" : "not Delzant") << " (d=" << polygon->size() << ")\n";
    } else {
        const auto& poly3 = std::get<Polytope3>(p);
        auto report = validate_delzant(poly3);
        r.payload["dim"] = 3;
        r.payload["valid"] = report.valid;
        Json defects = Json::array();
        for (const auto& d : report.defects) {
            defects.push_back({{"vertex", d.vertex_index}, {"facets", d.facet_count}, {"determinant", d.determinant.str()}});
            human << "vertex " << d.vertex_index << ": " << d.facet_count << " facets, determinant "
                  << d.determinant.str() << "\n";
        }
        r.payload["defects"] = std::move(defects);
        r.exit_code = report.valid ? kExitOk : kExitValidation;
        human << (report.valid ? "valid" : "not Delzant") << " (3-polytope, " << poly3.vertices().size()
              << " vertices)\n";
    }
    r.human = human.str();
    if (!r.payload["valid"].get<bool>()) ctx.diagnostics.push_back("error: validation: polytope is not Delzant");
    return r;
}

Produced cmd_info(Context& ctx, const std::string& input) {
    DelzantPolygon p = load_polygon(ctx, input);
    Produced r;
    const auto data = spectral_data(p);
    r.payload["d"] = p.size();
    r.payload["area"] = to_string(area(p));
    Json edges = Json::array();
    Json normals = Json::array();
    for (const auto& e : p.edges()) {
        normals.push_back(int_vec_json(e.outward_normal));
        edges.push_back({{"direction", int_vec_json(e.direction)}, {"latticeLength", to_string(e.lattice_length)}});
    }
    r.payload["normals"] = std::move(normals);
    r.payload["edges"] = std::move(edges);
    r.payload["delzant"] = validate_delzant(p).valid;
    r.payload["parallelPairs"] = data.parallel_pairs();
    r.payload["eulerCharacteristic"] = euler_characteristic(static_cast<int>(p.size()));
    r.payload["spectral"] = io::to_json(data);

    std::ostringstream human;
    human << "d = " << p.size() << ", area = " << to_string(area(p)) << ", parallel pairs = " << data.parallel_pairs()
          << ", Delzant = " << (r.payload["delzant"].get<bool>() ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& e = p.edges()[i];
        human << "  edge " << i << ": normal (" << e.outward_normal.x.str() << ", " << e.outward_normal.y.str()
              << "), lattice length " << to_string(e.lattice_length) << "\n";
    }
    human << "hearable data:\n";
    for (const auto& c : data.classes) {
        human << "  normal +-(" << c.normal.x.str() << ", " << c.normal.y.str() << "): length sum "
              << to_string(c.length_sum) << "\n";
    }
    r.human = human.str();
    return r;
}

Produced cmd_hirzebruch(unsigned m, const std::string& w, const std::string& h) {
    Produced r;
    r.payload = io::to_json(hirzebruch(m, rational_option(w, "w"), rational_option(h, "h")));
    return r;
}

Produced cmd_chop(Context& ctx, const std::string& input, std::size_t vertex, const std::string& depth) {
    Produced r;
    r.payload = io::to_json(chop(load_polygon(ctx, input), {vertex, rational_option(depth, "depth")}));
    return r;
}

Produced cmd_random(int edges, std::uint64_t seed, int bound, bool twist) {
    Produced r;
    r.payload = io::to_json(random_delzant(edges, seed, bound, {twist}));
    r.payload["edges"] = edges;
    r.payload["seed"] = seed;
    r.payload["bound"] = bound;
    return r;
}

Produced cmd_spectral(Context& ctx, const std::string& input) {
    Produced r;
    r.payload = io::to_json(spectral_data(load_polygon(ctx, input)));
    return r;
}

Produced cmd_strata(Context& ctx, const std::string& input, const std::vector<long long>& theta_in) {
    const IntVec2 theta = theta_option(theta_in);
    DelzantPolygon p = load_polygon(ctx, input);
    Produced r;
    r.payload["theta"] = int_vec_json(theta);
    Json list = Json::array();
    std::ostringstream human;
    for (const auto& s : fixed_point_strata(p, theta)) {
        list.push_back({{"face", face_name(s.face.kind)}, {"index", s.face.index}, {"codimension", s.codimension}});
        human << face_name(s.face.kind) << ' ' << s.face.index << "  codimension " << s.codimension << "\n";
    }
    r.payload["strata"] = std::move(list);
    r.human = human.str();
    return r;
}

Produced cmd_heat(Context& ctx, const std::string& input, const std::vector<long long>& theta_in,
                  std::optional<double> eval) {
    const IntVec2 theta = theta_option(theta_in);
    DelzantPolygon p = load_polygon(ctx, input);
    Produced r;
    r.payload["theta"] = int_vec_json(theta);
    if (eval) r.payload["s"] = *eval;
    Json list = Json::array();
    std::ostringstream human;
    human.precision(17);
    for (const auto& term : donnelly_leading_term(p, theta)) {
        Json t;
        t["face"] = face_name(term.face.kind);
        t["index"] = term.face.index;
        t["codimension"] = term.codimension;
        t["tExponent"] = term.t_exponent;
        Json vol;
        vol["twoPiPower"] = term.volume.two_pi_power;
        vol["measure"] = to_string(term.volume.measure);
        if (term.volume.direction) vol["direction"] = int_vec_json(*term.volume.direction);
        vol["value"] = term.volume.value();
        t["volume"] = std::move(vol);
        t["weights"] = term.weights;
        human << face_name(term.face.kind) << ' ' << term.face.index << ": t^" << term.t_exponent << ", volume "
              << term.volume.value();
        if (eval) {
            try {
                double c = evaluate_leading_coefficient(term, *eval);
                t["coefficient"] = c;
                human << ", coefficient " << c;
            } catch (const Error&) {
                t["coefficient"] = nullptr;
                t["pole"] = true;
                human << ", pole";
            }
        }
        human << "\n";
        list.push_back(std::move(t));
    }
    r.payload["terms"] = std::move(list);
    r.human = human.str();
    return r;
}

Produced cmd_reconstruct(Context& ctx, const std::string& input, bool with_counts, int max_pairs) {
    Json doc = load_document(ctx, input);
    SpectralData data = doc.is_object() && doc.contains("dim") ? spectral_data(polygon_of(ctx, doc))
                                                                : io::spectral_from_json(doc);
    if (with_counts && std::any_of(data.classes.begin(), data.classes.end(),
                                   [](const NormalClass& c) { return c.edge_count == 0; })) {
        throw Error(ErrorKind::InvalidInput, "--with-counts needs a count for every class");
    }
    EnumerateOptions options;
    options.trust_counts = with_counts;
    options.max_parallel_pairs = max_pairs;
    Produced r;
    r.payload = io::to_json(enumerate_candidates(data, options));
    return r;
}

Produced cmd_roundtrip(int edges, std::uint64_t seed, int trials, int bound, int budget) {
    Produced r;
    r.payload["edges"] = edges;
    r.payload["seed"] = seed;
    r.payload["bound"] = bound;
    r.payload["trials"] = trials;
    Json results = Json::array();
    int passed = 0;
    std::ostringstream human;
    for (int k = 0; k < trials; ++k) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
        Json entry;
        entry["seed"] = s;
        try {
            DelzantPolygon p = random_delzant(edges, s, bound);
            entry["parallelPairs"] = parallel_pair_count(p);
            if (!is_generic(p).generic) {
                p = perturb_generic(p, budget);
                entry["perturbed"] = true;
            }
            const auto set = enumerate_candidates(spectral_data(p));
            const DelzantPolygon canon = normalize_translation(p);
            const bool found = std::find(set.candidates.begin(), set.candidates.end(), canon) != set.candidates.end();
            entry["polygon"] = io::to_json(p);
            entry["candidates"] = set.candidates.size();
            entry["found"] = found;
            passed += found ? 1 : 0;
        } catch (const Error& e) {
            entry["found"] = false;
            entry["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
        }
        human << "seed " << s << ": " << (entry["found"].get<bool>() ? "recovered" : "FAILED");
        if (entry.contains("candidates")) human << " (" << entry["candidates"].get<std::size_t>() << " candidates)";
        if (entry.contains("error")) human << " (" << entry["error"]["message"].get<std::string>() << ")";
        human << "\n";
        results.push_back(std::move(entry));
    }
    r.payload["results"] = std::move(results);
    r.payload["passed"] = passed;
    human << passed << "/" << trials << " recovered\n";
    r.human = human.str();
    r.exit_code = passed == trials ? kExitOk : kExitInfeasible;
    return r;
}

Produced cmd_equiv(Context& ctx, const std::string& a, const std::string& b) {
    DelzantPolygon p = load_polygon(ctx, a);
    DelzantPolygon q = load_polygon(ctx, b);
    Produced r;
    auto map = sl2z_equivalent(p, q);
    r.payload["equivalent"] = map.has_value();
    if (map) {
        const auto& m = map->matrix;
        r.payload["matrix"] = Json::array({Json::array({m.a.str(), m.b.str()}), Json::array({m.c.str(), m.d.str()})});
        r.payload["translation"] = vec_json(map->translation);
        r.human = "equivalent: A = [[" + m.a.str() + ", " + m.b.str() + "], [" + m.c.str() + ", " + m.d.str() +
                  "]], v = (" + to_string(map->translation.x) + ", " + to_string(map->translation.y) + ")\n";
    } else {
        r.human = "not equivalent\n";
    }
    return r;
}

Produced cmd_bundle_data(Context& ctx, const std::string& input) {
    Produced r;
    r.payload = std::visit([](const auto& x) { return io::to_json(bundle_facet_data(x)); }, load_polytope(ctx, input));
    return r;
}

Produced cmd_bundle_reconstruct(Context& ctx, const std::string& input) {
    Produced r;
    r.payload = polytope_json(bundle_reconstruct(io::halfspaces_from_json(load_document(ctx, input))));
    return r;
}

Produced cmd_census(Context& ctx, int edges, int bound, unsigned threads, std::uint64_t budget) {
    CensusOptions options;
    options.threads = thread_count(threads);
    if (budget > 0) options.node_budget = budget;
    Produced r;
    ZooCensus census;
    try {
        census = parallel_pair_census(edges, bound, options);
    } catch (const CensusBudgetError& e) {
        r.payload = io::to_json(e.partial);
        r.payload["partial"] = true;
        r.exit_code = exit_code_for(e.kind());
        ctx.diagnostics.push_back(std::string("error: budget: ") + e.what());
        return r;
    }
    r.payload = io::to_json(census);
    std::ostringstream human;
    human << "d = " << edges << ", bound = " << bound << ", total = " << census.total << "\n";
    for (const auto& [pairs, count] : census.histogram) {
        human << "  " << pairs << " parallel pairs: " << count << "\n";
    }
    r.human = human.str();
    return r;
}

Produced cmd_render(Context& ctx, const std::string& input, const std::string& overlay) {
    Polytope p = load_polytope(ctx, input);
    std::vector<DelzantPolygon> overlays;
    if (!overlay.empty()) overlays = io::candidate_polygons_from_json(load_document(ctx, overlay));
    Produced r;
    r.human = render_svg(p, overlays);
    r.raw = true;
    return r;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Validation:
        case ErrorKind::Structural: return kExitValidation;
        case ErrorKind::Infeasible:
        case ErrorKind::Inconsistent: return kExitInfeasible;
        case ErrorKind::Unsupported:
        case ErrorKind::Budget: return kExitUnsupported;
        case ErrorKind::Parse:
        case ErrorKind::InvalidInput: return kExitParse;
    }
    return 1;
}

CommandResult execute(const std::vector<std::string>& args, std::istream& in) {
    Context ctx;
    ctx.in = &in;
    CommandResult result;

    CLI::App app{"Delzant polygon toolkit", "delzant"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", ctx.json, "Machine-readable JSON output");
    app.add_option("--out", ctx.out_path, "Write output to this file instead of stdout");
    std::function<Produced()> action;

    std::string input = "-";
    auto add_input = [&input](CLI::App* sub) {
        sub->add_option("input", input, "Input JSON file ('-' for stdin)");
    };

    auto* validate = app.add_subcommand("validate", "Check the Delzant condition");
    add_input(validate);
    validate->callback([&] { action = [&] { return cmd_validate(ctx, input); }; });

    auto* info = app.add_subcommand("info", "Area, normals and hearable data");
    add_input(info);
    info->callback([&] { action = [&] { return cmd_info(ctx, input); }; });

    auto* generate = app.add_subcommand("generate", "Generate zoo polygons");
    generate->require_subcommand(1);
    unsigned m = 0;
    std::string w = "1", h = "1";
    auto* hirz = generate->add_subcommand("hirzebruch", "Hirzebruch trapezoid");
    hirz->set_help_flag("--help", "Print this help message and exit");
    hirz->add_option("--m", m, "Slope parameter")->required();
    hirz->add_option("--w", w, "Width (p/q)")->required();
    hirz->add_option("--h", h, "Height (p/q)")->required();
    hirz->callback([&] { action = [&] { return cmd_hirzebruch(m, w, h); }; });

    auto* chop_cmd = app.add_subcommand("chop", "Corner chop at a vertex");
    add_input(chop_cmd);
    std::size_t vertex = 0;
    std::string depth;
    chop_cmd->add_option("--vertex", vertex, "Vertex index")->required();
    chop_cmd->add_option("--depth", depth, "Lattice depth (p/q)")->required();
    chop_cmd->callback([&] { action = [&] { return cmd_chop(ctx, input, vertex, depth); }; });

    int edges = 0, bound = 4;
    std::uint64_t seed = 0;
    bool twist = false;
    auto* random = app.add_subcommand("random", "Seeded random Delzant polygon");
    random->add_option("--edges", edges, "Number of edges")->required();
    random->add_option("--seed", seed, "Seed")->required();
    random->add_option("--bound", bound, "Parameter bound");
    random->add_flag("--twist", twist, "Apply a random SL(2,Z) map (d >= 4)");
    random->callback([&] { action = [&] { return cmd_random(edges, seed, bound, twist); }; });

    auto* spectral = app.add_subcommand("spectral", "Hearable data of a polygon");
    add_input(spectral);
    spectral->callback([&] { action = [&] { return cmd_spectral(ctx, input); }; });

    std::vector<long long> theta;
    std::optional<double> eval;
    auto* strata = app.add_subcommand("strata", "Fixed-point strata for a circle direction");
    add_input(strata);
    strata->add_option("--theta", theta, "Direction a,b")->required()->delimiter(',')->expected(2);
    strata->callback([&] { action = [&] { return cmd_strata(ctx, input, theta); }; });

    auto* heat = app.add_subcommand("heat", "Leading heat-trace terms");
    add_input(heat);
    heat->add_option("--theta", theta, "Direction a,b")->required()->delimiter(',')->expected(2);
    heat->add_option("--eval", eval, "Evaluate coefficients at s");
    heat->callback([&] { action = [&] { return cmd_heat(ctx, input, theta, eval); }; });

    bool with_counts = false;
    int max_pairs = 3;
    auto* reconstruct = app.add_subcommand("reconstruct", "Candidate polygons from hearable data");
    add_input(reconstruct);
    reconstruct->add_flag("--with-counts", with_counts, "Trust per-class edge counts");
    reconstruct->add_option("--max-pairs", max_pairs, "Largest supported number of parallel pairs");
    reconstruct->callback([&] { action = [&] { return cmd_reconstruct(ctx, input, with_counts, max_pairs); }; });

    int trials = 10, budget = 32;
    auto* roundtrip = app.add_subcommand("roundtrip", "Random polygon -> data -> candidates");
    roundtrip->add_option("--edges", edges, "Number of edges")->required();
    roundtrip->add_option("--seed", seed, "First seed")->required();
    roundtrip->add_option("--trials", trials, "Number of trials");
    roundtrip->add_option("--bound", bound, "Parameter bound");
    roundtrip->add_option("--perturb-budget", budget, "Perturbation attempts");
    roundtrip->callback([&] { action = [&] { return cmd_roundtrip(edges, seed, trials, bound, budget); }; });

    std::string other;
    auto* equiv = app.add_subcommand("equiv", "SL(2,Z) equivalence of two polygons");
    equiv->add_option("first", input, "First polygon")->required();
    equiv->add_option("second", other, "Second polygon")->required();
    equiv->callback([&] { action = [&] { return cmd_equiv(ctx, input, other); }; });

    auto* bundle_data = app.add_subcommand("bundle-data", "Facet half-spaces and volumes");
    add_input(bundle_data);
    bundle_data->callback([&] { action = [&] { return cmd_bundle_data(ctx, input); }; });

    auto* bundle_rec = app.add_subcommand("bundle-reconstruct", "Polytope from half-space data");
    add_input(bundle_rec);
    bundle_rec->callback([&] { action = [&] { return cmd_bundle_reconstruct(ctx, input); }; });

    unsigned threads = 0;
    std::uint64_t node_budget = 0;
    auto* census = app.add_subcommand("census", "Parallel-pair census of the zoo");
    census->add_option("--edges", edges, "Number of edges")->required();
    census->add_option("--bound", bound, "Parameter bound")->required();
    census->add_option("--threads", threads, std::string("Worker threads (default: $") + kThreadsEnv + " or 1)");
    census->add_option("--node-budget", node_budget, "Abort after this many search nodes");
    census->callback([&] { action = [&] { return cmd_census(ctx, edges, bound, threads, node_budget); }; });

    std::string overlay;
    auto* render = app.add_subcommand("render", "SVG picture");
    add_input(render);
    render->add_option("--overlay", overlay, "Candidate set JSON to overlay");
    render->callback([&] { action = [&] { return cmd_render(ctx, input, overlay); }; });

    auto fail = [&](int code, const std::string& kind, const std::string& message) {
        result.exit_code = code;
        result.payload = Json::object();
        result.payload["error"] = {{"kind", kind}, {"message", message}};
        if (ctx.json) {
            result.diagnostics.push_back(result.payload.dump());
        } else {
            result.diagnostics.push_back("error: " + kind + ": " + message);
        }
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.output = app.help();
        return result;
    } catch (const CLI::CallForAllHelp&) {
        result.output = app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::ParseError& e) {
        fail(kExitParse, "usage", e.what());
        return result;
    }

    Produced produced;
    try {
        produced = action();
    } catch (const Error& e) {
        result.diagnostics = std::move(ctx.diagnostics);
        fail(exit_code_for(e.kind()), to_string(e.kind()), e.what());
        return result;
    } catch (const std::exception& e) {
        result.diagnostics = std::move(ctx.diagnostics);
        fail(1, "internal", e.what());
        return result;
    }

    result.exit_code = produced.exit_code;
    result.payload = std::move(produced.payload);
    result.diagnostics = std::move(ctx.diagnostics);
    std::string text;
    if (produced.raw) {
        text = produced.human;
    } else if (ctx.json || produced.human.empty()) {
        text = result.payload.dump() + "\n";
    } else {
        text = produced.human;
    }
    if (!ctx.out_path.empty()) {
        std::ofstream file(ctx.out_path, std::ios::binary);
        if (!file || !(file << text)) {
            fail(kExitParse, to_string(ErrorKind::InvalidInput), "cannot write " + ctx.out_path);
        }
    } else {
        result.output = std::move(text);
    }
    return result;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CommandResult result = execute(args, in);
    out << result.output;
    for (const auto& d : result.diagnostics) err << d << "\n";
    return result.exit_code;
}

}  // namespace delzant::cli
