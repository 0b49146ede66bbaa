// Command-line front end: gen / build / verify / bench / replay.
// Exit codes: 0 ok (and no violations), 1 stretch violations found,
// 2 usage error, 3 I/O or format error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "addspan/builders.hpp"
#include "addspan/graph_io.hpp"
#include "addspan/verify.hpp"
#include "addspan/version.hpp"

using json = nlohmann::ordered_json;
using namespace addspan;

namespace {

constexpr const char* kAlgNames = "6w, 2w-subset, 6w-fast, 6wmax-fast, 6eps-wmax, 4w-fast";

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

void write_manifest(const std::string& path, const std::string& command,
                    const std::vector<std::string>& argv, const json& parameters,
                    const std::vector<std::string>& outputs) {
    json j;
    j["tool"] = "addspan";
    j["version"] = kVersion;
    j["command"] = command;
    j["argv"] = argv;
    j["parameters"] = parameters;
    j["outputs"] = outputs;
    write_text_file(path, j.dump(2) + "\n");
}

void save_spanner(const Graph& g, const EdgeSet& spanner, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << g.num_vertices() << ' ' << spanner.size() << '\n';
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!spanner.contains(e)) continue;
        const Edge& ed = g.edge(e);
        out << ed.u << ' ' << ed.v << ' ' << format_weight(ed.w) << '\n';
    }
    if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

// A spanner file must be an exact edge subset of the graph it is checked
// against, weights included.
EdgeSet match_spanner(const Graph& g, const Graph& h, const std::string& path) {
    if (h.num_vertices() != g.num_vertices())
        throw std::runtime_error(path + ": spanner has " + std::to_string(h.num_vertices()) +
                                 " vertices, graph has " + std::to_string(g.num_vertices()));
    EdgeSet set(g.num_edges());
    for (const Edge& e : h.edges()) {
        auto id = g.find_edge(e.u, e.v);
        if (!id || g.edge(*id).w != e.w)
            throw std::runtime_error(path + ": edge " + std::to_string(e.u) + "-" +
                                     std::to_string(e.v) + " is not an edge of the graph");
        set.insert(*id);
    }
    return set;
}

json report_to_json(const BuildReport& rep) {
    json j;
    j["algorithm"] = rep.algorithm;
    j["seed"] = rep.seed;
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["spanner_edges"] = rep.spanner_edges;
    json names = json::array(), edges = json::array(), millis = json::array();
    for (const PhaseStats& p : rep.phases) {
        names.push_back(p.name);
        edges.push_back(p.edges_added);
        millis.push_back(p.millis);
    }
    j["phase_names"] = names;
    j["phase_edges"] = edges;
    j["phase_millis"] = millis;
    json samples = json::object();
    for (const auto& [label, size] : rep.sample_sizes) samples[label] = size;
    j["sample_sizes"] = samples;
    json params = json::object();
    for (const auto& [key, value] : rep.params) params[key] = value;
    j["params"] = params;
    return j;
}

struct GenArgs {
    VertexId n = 0;
    double p = 0;
    double wmin = 1.0, wmax = 10.0;
    std::uint64_t seed = 0;
    std::string out;
};

struct BuildArgs {
    std::string alg, input, out, report, subset;
    std::uint64_t seed = 0;
    double epsilon = -1;
    std::optional<std::uint32_t> d, heavy, miss;
};

struct VerifyArgs {
    std::string graph, spanner, bound, subset, report;
    double epsilon = 0.5;
    double a = 0, b = 0;
    VertexId apsp_cap = 2000;
    std::optional<std::uint64_t> seed;
};

struct BenchArgs {
    std::string algs = "6w,2w-subset,6w-fast,6wmax-fast,6eps-wmax,4w-fast";
    std::string ns = "64,128,256";
    double p = -1;          // exclusive with avg_deg
    double avg_deg = 16.0;
    double wmin = 1.0, wmax = 10.0;
    unsigned seeds = 1;
    std::uint64_t seed_base = 0;
    double epsilon = 0.5;
    std::string out;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

BuildResult run_builder(const std::string& alg, const Graph& g,
                        std::span<const VertexId> subset, double epsilon,
                        const BuildParams& params) {
    if (alg == "6w") return build_6w(g, params);
    if (alg == "6w-fast") return build_6w_fast(g, params);
    if (alg == "2w-subset") return build_2w_subsetwise(g, subset, params);
    if (alg == "6wmax-fast") return build_6wmax_fast(g, params);
    if (alg == "6eps-wmax") return build_6eps_wmax(g, epsilon, params);
    if (alg == "4w-fast") return build_4w_fast(g, params);
    throw std::invalid_argument("unknown algorithm \"" + alg + "\"; expected one of: " + kAlgNames);
}

StretchBound parse_bound(const VerifyArgs& a) {
    StretchBound b;
    if (a.bound == "6w") {
        b.kind = BoundKind::six_w;
    } else if (a.bound == "2w-subset") {
        b.kind = BoundKind::two_w_subset;
    } else if (a.bound == "max-6w-2wmax") {
        b.kind = BoundKind::max_6w_2wmax;
    } else if (a.bound == "4w-eps-wmax") {
        b.kind = BoundKind::four_w_eps_wmax;
        b.epsilon = a.epsilon;
    } else if (a.bound == "max-4w-2wmax") {
        b.kind = BoundKind::max_4w_2wmax;
    } else if (a.bound == "custom") {
        b.kind = BoundKind::custom;
        b.coeff_w = a.a;
        b.coeff_wmax = a.b;
    } else {
        throw std::invalid_argument(
            "unknown bound \"" + a.bound +
            "\"; expected 6w, 2w-subset, max-6w-2wmax, 4w-eps-wmax, max-4w-2wmax or custom");
    }
    return b;
}

int cmd_gen(const GenArgs& a, const std::vector<std::string>& argv) {
    Graph g = generate_gnp(a.n, a.p, a.wmin, a.wmax, a.seed);
    save_graph(g, a.out);
    json params{{"n", a.n},       {"p", a.p},       {"wmin", a.wmin},
                {"wmax", a.wmax}, {"seed", a.seed}, {"out", a.out}};
    write_manifest(a.out + ".manifest.json", "gen", argv, params, {a.out});
    std::cout << "wrote G(n=" << g.num_vertices() << ", m=" << g.num_edges() << ") -> " << a.out
              << "\n";
    return 0;
}

int cmd_build(const BuildArgs& a, const std::vector<std::string>& argv) {
    Graph g = load_graph(a.input);
    std::vector<VertexId> subset;
    if (a.alg == "2w-subset") {
        if (a.subset.empty()) throw std::invalid_argument("--alg 2w-subset requires --subset");
        subset = load_subset(a.subset, g.num_vertices());
    }
    if (a.alg == "6eps-wmax" && a.epsilon < 0)
        throw std::invalid_argument("--alg 6eps-wmax requires --epsilon");

    BuildParams params;
    params.seed = a.seed;
    params.d_override = a.d;
    params.heavy_override = a.heavy;
    params.miss_override = a.miss;
    BuildResult res = run_builder(a.alg, g, subset, a.epsilon, params);

    save_spanner(g, res.spanner.edges(), a.out);
    std::string report_path = a.report.empty() ? a.out + ".report.json" : a.report;
    write_text_file(report_path, report_to_json(res.report).dump(2) + "\n");

    json params_j{{"alg", a.alg}, {"input", a.input}, {"out", a.out},
                  {"seed", a.seed}, {"report", report_path}};
    if (!a.subset.empty()) params_j["subset"] = a.subset;
    if (a.epsilon >= 0) params_j["epsilon"] = a.epsilon;
    if (a.d) params_j["d"] = *a.d;
    if (a.heavy) params_j["heavy"] = *a.heavy;
    if (a.miss) params_j["l"] = *a.miss;
    write_manifest(a.out + ".manifest.json", "build", argv, params_j, {a.out, report_path});

    double total_ms = 0;
    for (const PhaseStats& p : res.report.phases) total_ms += p.millis;
    std::cout << a.alg << ": n=" << g.num_vertices() << " m=" << g.num_edges()
              << " spanner=" << res.report.spanner_edges << " edges (" << total_ms << " ms) -> "
              << a.out << "\n";
    return 0;
}

int cmd_verify(const VerifyArgs& a, const std::vector<std::string>& argv) {
    Graph g = load_graph(a.graph);
    Graph h = load_graph(a.spanner);
    EdgeSet spanner = match_spanner(g, h, a.spanner);
    std::vector<VertexId> subset;
    if (!a.subset.empty()) subset = load_subset(a.subset, g.num_vertices());
    StretchBound bound = parse_bound(a);

    StretchReport rep = verify_stretch(g, spanner, bound, subset, a.apsp_cap);

    json j;
    j["bound"] = bound.name();
    j["pairs_checked"] = rep.pairs_checked;
    j["pairs_skipped"] = rep.pairs_skipped;
    json viols = json::array();
    for (const Violation& v : rep.violations) {
        viols.push_back({{"s", v.s},
                         {"t", v.t},
                         {"d_g", v.d_g},
                         {"d_h", v.d_h == kInf ? -1.0 : v.d_h},
                         {"w_st_min", v.w_st_min},
                         {"w_st_tree", v.w_st_tree},
                         {"excess", v.excess == kInf ? -1.0 : v.excess},
                         {"violates_tree_bound", v.violates_tree_bound}});
    }
    j["violations"] = viols;
    j["max_excess_ratio"] = std::isfinite(rep.max_excess_ratio) ? rep.max_excess_ratio : -1.0;
    json seeds = json::array();
    if (a.seed) seeds.push_back(*a.seed);
    j["seeds"] = seeds;

    std::string report_path = a.report.empty() ? a.spanner + ".verify.json" : a.report;
    write_text_file(report_path, j.dump(2) + "\n");
    write_manifest(report_path + ".manifest.json", "verify", argv,
                   json{{"graph", a.graph},
                        {"spanner", a.spanner},
                        {"bound", a.bound},
                        {"report", report_path}},
                   {report_path});

    std::cout << "bound " << bound.name() << ": " << rep.pairs_checked << " pairs, "
              << rep.violations.size() << " violations (" << rep.tree_violations()
              << " also with tree bottleneck), max excess ratio " << rep.max_excess_ratio << "\n";
    return rep.ok() ? 0 : 1;
}

int cmd_bench(const BenchArgs& a, const std::vector<std::string>& argv) {
    if (a.out.empty()) throw std::invalid_argument("bench requires --out");
    std::vector<std::string> algs = split_csv(a.algs);
    std::vector<VertexId> ns;
    for (const std::string& tok : split_csv(a.ns)) ns.push_back(static_cast<VertexId>(std::stoul(tok)));
    if (algs.empty() || ns.empty()) throw std::invalid_argument("bench needs --algs and --n");

    std::string csv = "algorithm,n,m,edges,millis,seed\n";
    for (const std::string& alg : algs) {
        for (VertexId n : ns) {
            double p = a.p >= 0 ? a.p : std::min(1.0, a.avg_deg / std::max<double>(1, n - 1));
            for (unsigned k = 0; k < a.seeds; ++k) {
                std::uint64_t seed = a.seed_base + k;
                Graph g = generate_gnp(n, p, a.wmin, a.wmax, seed);
                std::vector<VertexId> subset;
                if (alg == "2w-subset") {
                    VertexId want = ceil_pow(n, 1, 2);
                    for (VertexId i = 0; i < want; ++i)
                        subset.push_back(static_cast<VertexId>(static_cast<std::uint64_t>(i) * n / want));
                }
                BuildParams params;
                params.seed = seed;
                auto t0 = std::chrono::steady_clock::now();
                BuildResult res = run_builder(alg, g, subset, a.epsilon, params);
                double ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
                char row[192];
                std::snprintf(row, sizeof(row), "%s,%u,%zu,%zu,%.3f,%llu\n", alg.c_str(), n,
                              g.num_edges(), res.report.spanner_edges, ms,
                              static_cast<unsigned long long>(seed));
                csv += row;
            }
        }
    }
    write_text_file(a.out, csv);
    write_manifest(a.out + ".manifest.json", "bench", argv,
                   json{{"algs", a.algs}, {"n", a.ns}, {"seeds", a.seeds}, {"out", a.out}},
                   {a.out});
    std::cout << "wrote " << a.out << "\n";
    return 0;
}

int run(const std::vector<std::string>& args);

int cmd_replay(const std::string& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw std::runtime_error("cannot open manifest: " + manifest_path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(manifest_path + ": not a valid manifest: " + e.what());
    }
    if (!j.contains("argv") || !j["argv"].is_array())
        throw std::runtime_error(manifest_path + ": manifest has no argv record");
    std::vector<std::string> argv = j["argv"].get<std::vector<std::string>>();
    return run(argv);
}

int run(const std::vector<std::string>& args) {
    CLI::App app{"additive spanner toolkit"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* sgen = app.add_subcommand("gen", "generate a random weighted graph");
    sgen->add_option("--n", gen.n, "number of vertices")->required()->check(CLI::Range(1u, 100000000u));
    sgen->add_option("--p", gen.p, "edge probability")->required()->check(CLI::Range(0.0, 1.0));
    sgen->add_option("--wmin", gen.wmin, "minimum weight");
    sgen->add_option("--wmax", gen.wmax, "maximum weight");
    sgen->add_option("--seed", gen.seed, "random seed");
    sgen->add_option("--out", gen.out, "output graph path")->required();

    BuildArgs build;
    auto* sbuild = app.add_subcommand("build", "build an additive spanner");
    sbuild->add_option("--alg", build.alg, std::string("algorithm: ") + kAlgNames)->required();
    sbuild->add_option("--input", build.input, "input graph path")->required();
    sbuild->add_option("--out", build.out, "output spanner path")->required();
    sbuild->add_option("--seed", build.seed, "random seed");
    sbuild->add_option("--subset", build.subset, "subset file (2w-subset)");
    sbuild->add_option("--epsilon", build.epsilon, "epsilon in (0,1) (6eps-wmax)");
    sbuild->add_option("--report", build.report, "report path (default <out>.report.json)");
    std::uint32_t d_opt = 0, heavy_opt = 0, miss_opt = 0;
    auto* od = sbuild->add_option("--d", d_opt, "override light-init degree");
    auto* oh = sbuild->add_option("--heavy", heavy_opt, "override heavy-vertex cutoff");
    auto* ol = sbuild->add_option("--l", miss_opt, "override missing-edge budget parameter");

    VerifyArgs verify;
    auto* sverify = app.add_subcommand("verify", "check a spanner against a stretch bound");
    sverify->add_option("--graph", verify.graph, "base graph path")->required();
    sverify->add_option("--spanner", verify.spanner, "spanner path")->required();
    sverify
        ->add_option("--bound", verify.bound,
                     "6w, 2w-subset, max-6w-2wmax, 4w-eps-wmax, max-4w-2wmax, custom")
        ->required();
    sverify->add_option("--subset", verify.subset, "restrict pairs to a subset file");
    sverify->add_option("--epsilon", verify.epsilon, "epsilon for 4w-eps-wmax");
    sverify->add_option("--a", verify.a, "W_st coefficient for custom bound");
    sverify->add_option("--b", verify.b, "W_max coefficient for custom bound");
    sverify->add_option("--apsp-cap", verify.apsp_cap, "refuse verification above this n");
    std::uint64_t verify_seed = 0;
    auto* oseed = sverify->add_option("--seed", verify_seed, "seed echoed into the report");
    sverify->add_option("--report", verify.report, "report path (default <spanner>.verify.json)");

    BenchArgs bench;
    auto* sbench = app.add_subcommand("bench", "time builders over an instance grid");
    sbench->add_option("--algs", bench.algs, "comma list of algorithms");
    sbench->add_option("--n", bench.ns, "comma list of vertex counts");
    sbench->add_option("--p", bench.p, "edge probability (overrides --avg-deg)");
    sbench->add_option("--avg-deg", bench.avg_deg, "target average degree");
    sbench->add_option("--wmin", bench.wmin, "minimum weight");
    sbench->add_option("--wmax", bench.wmax, "maximum weight");
    sbench->add_option("--seeds", bench.seeds, "seeds per cell")->check(CLI::Range(1u, 1000u));
    sbench->add_option("--seed", bench.seed_base, "first seed");
    sbench->add_option("--epsilon", bench.epsilon, "epsilon for 6eps-wmax");
    sbench->add_option("--out", bench.out, "output CSV path")->required();

    std::string manifest_path;
    auto* sreplay = app.add_subcommand("replay", "re-run the command recorded in a manifest");
    sreplay->add_option("manifest", manifest_path, "manifest path")->required();

    std::vector<const char*> argv;
    argv.push_back("addspan");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sgen->parsed()) return cmd_gen(gen, args);
        if (sbuild->parsed()) {
            if (od->count()) build.d = d_opt;
            if (oh->count()) build.heavy = heavy_opt;
            if (ol->count()) build.miss = miss_opt;
            return cmd_build(build, args);
        }
        if (sverify->parsed()) {
            if (oseed->count()) verify.seed = verify_seed;
            return cmd_verify(verify, args);
        }
        if (sbench->parsed()) return cmd_bench(bench, args);
        if (sreplay->parsed()) return cmd_replay(manifest_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args);
}
