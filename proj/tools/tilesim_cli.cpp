// Command-line front end: simulate, compile, verify, ladders, enumerate, rescale, render.
#include "tilesim/enumeration.hpp"
#include "tilesim/io.hpp"
#include "tilesim/ladder.hpp"
#include "tilesim/stability.hpp"
#include "tilesim/weak.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>

using namespace tilesim;

namespace {

// Exploration bound used by `render --supertile` to look a fingerprint up.
constexpr std::size_t kRenderSearchBound = 12;

int fail(const std::string& kind, const std::string& message) {
    std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
    return 2;
}

TAS load_tas(const std::string& path) { return parse_tas(read_file(path)); }

Json half_ladder_json(const HalfLadder& h, const LadderSystem& sys) {
    return Json{{"side", h.side == LadderSide::Left ? "left" : "right"},
                {"rungs", h.rungs},
                {"supertile", supertile_to_json(h.supertile, sys.tiles)}};
}

CompiledSimulator compile_with(const TAS& tas, const std::string& method, std::optional<int> k,
                               std::optional<int> simulator_tau) {
    if (method == "strong2" || method == "strong1") {
        StrongOptions options;
        options.k = k;
        options.simulator_temperature = simulator_tau;
        return compile_strong(tas, method == "strong2" ? StrongVariant::Strong2 : StrongVariant::Strong1, options);
    }
    if (k || simulator_tau) throw Error(ErrorKind::InvalidArgument, "--k and --simulator-tau apply to strong methods only");
    if (method == "weak1") return compile_weak(tas, WeakVariant::Weak1);
    if (method == "weak2") return compile_weak(tas, WeakVariant::Weak2);
    return compile_weak(tas, WeakVariant::Weak3);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-handed tile assembly simulator and simulation checker"};
    app.require_subcommand(1);

    std::string tas_path, out_path, compiled_path, method, relation = "all", weak_def = "standard", fingerprint;
    std::size_t size_bound = 0;
    std::optional<std::size_t> step_bound;
    std::optional<int> k, simulator_tau;
    int tau = 2, height = 4, factor = 1;
    std::uint64_t index = 0;
    bool matrix = false;
    unsigned threads = 0;

    auto* simulate = app.add_subcommand("simulate", "Explore producible supertiles up to a size bound");
    simulate->add_option("--tas", tas_path, "System document")->required();
    simulate->add_option("--size-bound", size_bound, "Largest supertile size to keep")->required();
    simulate->add_option("--step-bound", step_bound, "Rounds of pairwise combination");
    simulate->add_option("--out", out_path, "Directory for producibles.json and edges.json");
    simulate->add_option("--threads", threads, "Worker threads (0 = all cores)");

    auto* compile = app.add_subcommand("compile", "Compile a system into a simulating system");
    compile->add_option("--tas", tas_path, "System document")->required();
    compile->add_option("--method", method, "Compiler")
        ->required()
        ->check(CLI::IsMember({"strong2", "strong1", "weak1", "weak2", "weak3"}));
    compile->add_option("--out", out_path, "Compiled document")->required();
    compile->add_option("--k", k, "Macrotile body side (strong methods)");
    compile->add_option("--simulator-tau", simulator_tau, "Override the simulator temperature (strong methods)");

    auto* verify = app.add_subcommand("verify", "Check the simulation relations on bounded producible sets");
    verify->add_option("--tas", tas_path, "Simulated system document")->required();
    verify->add_option("--compiled", compiled_path, "Compiled document")->required();
    verify->add_option("--size-bound", size_bound, "Target size bound; the simulator bound scales with the tile footprint")
        ->required();
    verify->add_option("--relation", relation, "Relation to check")
        ->check(CLI::IsMember({"productions", "follows", "weak", "strong", "all"}));
    verify->add_option("--weak-def", weak_def, "Reading of the weak-modeling definition")
        ->check(CLI::IsMember({"standard", "literal"}));
    verify->add_option("--threads", threads, "Worker threads (0 = all cores)");

    auto* ladders = app.add_subcommand("ladders", "Half-ladder experiments");
    ladders->add_option("--tau", tau, "Temperature")->required();
    ladders->add_option("--height", height, "Ladder height")->required();
    ladders->add_flag("--matrix", matrix, "Print the left-right binding matrix");

    auto* enumerate = app.add_subcommand("enumerate", "Print the n-th canonical tile set");
    enumerate->add_option("--index", index, "Index")->required();
    enumerate->add_option("--tau", tau, "Temperature")->required();

    auto* rescale = app.add_subcommand("rescale", "Multiply every glue strength and the temperature");
    rescale->add_option("--tas", tas_path, "System document")->required();
    rescale->add_option("--factor", factor, "Factor")->required();
    rescale->add_option("--out", out_path, "Output document")->required();

    auto* render = app.add_subcommand("render", "Draw a supertile as SVG");
    render->add_option("--tas", tas_path, "System document")->required();
    render->add_option("--supertile", fingerprint, "Fingerprint of a producible supertile");
    render->add_option("--out", out_path, "SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("UsageError", e.what());
    }

    try {
        if (*simulate) {
            TAS tas = load_tas(tas_path);
            ExploreOptions options;
            options.step_bound = step_bound;
            options.threads = threads;
            ProducibleSet p = explore(tas, size_bound, options);
            Json doc = producible_set_to_json(p);
            if (out_path.empty()) {
                std::cout << dump(doc);
            } else {
                std::filesystem::create_directories(out_path);
                Json edges = doc["edges"];
                doc.erase("edges");
                write_file(out_path + "/producibles.json", dump(doc));
                write_file(out_path + "/edges.json", dump(edges));
                std::cout << dump(Json{{"supertiles", p.supertiles.size()},
                                       {"edges", p.edges.size()},
                                       {"overflow", p.overflow},
                                       {"rounds", p.rounds}});
            }
        } else if (*compile) {
            TAS tas = load_tas(tas_path);
            CompiledSimulator compiled = compile_with(tas, method, k, simulator_tau);
            write_file(out_path, serialize_compiled(compiled));
            std::cout << dump(Json{{"method", compiled.method},
                                   {"scale", compiled.m},
                                   {"simulator_tiles", compiled.simulator.tiles.size()},
                                   {"input_supertiles", compiled.simulator.initial.size()}});
        } else if (*verify) {
            TAS tas = load_tas(tas_path);
            CompiledSimulator compiled = parse_compiled(read_file(compiled_path), tas);
            VerifyOptions options;
            options.target_bound = size_bound;
            options.weak_definition = weak_def == "literal" ? WeakDefinition::Literal : WeakDefinition::Standard;
            options.threads = threads;
            VerifyResult result = verify_simulation(tas, compiled, options);
            Json reports = Json::array();
            bool pass = true;
            for (const char* name : {"productions", "follows", "weak", "strong"}) {
                if (relation != "all" && relation != name) continue;
                const RelationReport& r = result.by_name(std::string(name) == "weak" ? "weakly"
                                                         : std::string(name) == "strong" ? "strongly"
                                                                                         : name);
                pass = pass && r.pass;
                reports.push_back(report_to_json(r));
            }
            std::cout << dump(Json{{"method", compiled.method},
                                   {"pass", pass},
                                   {"target_bound", result.target_bound},
                                   {"sim_bound", result.sim_bound},
                                   {"target_producibles", result.target_producibles},
                                   {"sim_producibles", result.sim_producibles},
                                   {"reports", std::move(reports)}});
            return pass ? 0 : 1;
        } else if (*ladders) {
            LadderSystem sys = build_ladder_system(tau);
            auto lefts = enumerate_half_ladders(sys, height, LadderSide::Left);
            Json doc{{"tau", tau}, {"height", height}, {"half_ladders", lefts.size()}};
            Json list = Json::array();
            for (const HalfLadder& h : lefts) {
                Json entry = half_ladder_json(h, sys);
                entry["stable"] = is_tau_stable(h.supertile.cells, sys.tiles, tau);
                entry["sequence_valid"] = verify_sequence(assembly_sequence(h, sys), sys.tiles, tau);
                list.push_back(std::move(entry));
            }
            doc["left"] = std::move(list);
            if (matrix) {
                BindingMatrix bm = binding_strength_matrix(sys, height);
                Json combines = Json::array();
                for (const auto& row : bm.combines) {
                    Json r = Json::array();
                    for (char c : row) r.push_back(c != 0);
                    combines.push_back(std::move(r));
                }
                doc["matrix"] = Json{{"aligned", bm.aligned}, {"best", bm.best}, {"combines", std::move(combines)}};
            }
            std::cout << dump(doc);
        } else if (*enumerate) {
            TileSet ts = get_nth_tas(index, tau);
            TAS tas{ts, default_initial_state(ts), tau};
            std::cout << serialize_tas(tas);
        } else if (*rescale) {
            write_file(out_path, serialize_tas(rescale_temperature(load_tas(tas_path), factor)));
        } else if (*render) {
            TAS tas = load_tas(tas_path);
            if (tas.initial.empty()) throw Error(ErrorKind::EmptyAssembly, "system has no initial supertiles");
            Supertile target = tas.initial.front().first;
            if (!fingerprint.empty()) {
                auto fp = parse_fingerprint(fingerprint);
                if (!fp) throw Error(ErrorKind::InvalidArgument, "malformed fingerprint '" + fingerprint + "'");
                ProducibleSet p = explore(tas, kRenderSearchBound);
                auto i = p.index_of_fingerprint(*fp);
                if (!i)
                    throw Error(ErrorKind::NotProducible,
                                "no producible supertile of size <= " + std::to_string(kRenderSearchBound) +
                                    " has fingerprint " + fingerprint);
                target = p.supertiles[*i];
            }
            write_file(out_path, render_svg(target, tas.tiles));
        }
    } catch (const Error& e) {
        return fail(error_name(e.kind()), e.what());
    } catch (const std::exception& e) {
        return fail("InternalError", e.what());
    }
    return 0;
}
