#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "addspan/graph_io.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

const fs::path kWork = fs::path("cli_work");

struct RunResult {
    int code;
    std::string out;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    fs::path log = kWork / "last_run.log";
    std::string cmd = std::string("\"") + ADDSPAN_CLI_PATH + "\" " + args + " > " +
                      log.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = (status == -1) ? -1 : (WIFEXITED(status) ? WEXITSTATUS(status) : -2);
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
}

std::string path_of(const std::string& name) { return (kWork / name).string(); }

struct WorkspaceFixture {
    WorkspaceFixture() {
        fs::remove_all(kWork);
        fs::create_directories(kWork);
    }
};

WorkspaceFixture workspace;  // one shared scratch dir for the whole binary

}  // namespace

TEST_CASE("gen writes a loadable graph with a manifest") {
    RunResult r = run_cli("gen --n 30 --p 0.3 --seed 4 --out " + path_of("g.graph"));
    CHECK(r.code == 0);
    addspan::Graph g = addspan::load_graph(path_of("g.graph"));
    CHECK(g.num_vertices() == 30);
    CHECK(g.num_edges() > 0);

    json manifest = json::parse(read_file(path_of("g.graph.manifest.json")));
    CHECK(manifest["tool"] == "addspan");
    CHECK(manifest["command"] == "gen");
    REQUIRE(manifest["argv"].is_array());
    CHECK(manifest["parameters"]["n"] == 30);

    RunResult again = run_cli("gen --n 30 --p 0.3 --seed 4 --out " + path_of("g2.graph"));
    CHECK(again.code == 0);
    CHECK(read_file(path_of("g.graph")) == read_file(path_of("g2.graph")));
}

TEST_CASE("gen rejects bad parameters with exit 2") {
    CHECK(run_cli("gen --n 0 --p 0.3 --out " + path_of("x.graph")).code == 2);
    CHECK(run_cli("gen --n 10 --p 1.5 --out " + path_of("x.graph")).code == 2);
    CHECK(run_cli("gen --n 10 --out " + path_of("x.graph")).code == 2);  // missing --p
    CHECK(run_cli("nonsense --n 10").code == 2);
}

TEST_CASE("build runs every algorithm and emits spanner, report, manifest") {
    REQUIRE(run_cli("gen --n 40 --p 0.3 --seed 11 --out " + path_of("b.graph")).code == 0);
    addspan::Graph g = addspan::load_graph(path_of("b.graph"));

    std::vector<addspan::VertexId> subset{0, 3, 9, 17, 25, 33};
    addspan::save_subset(subset, path_of("b.subset"));

    for (std::string alg : {"6w", "6w-fast", "2w-subset", "6wmax-fast", "6eps-wmax", "4w-fast"}) {
        std::string out = path_of("b_" + alg + ".spanner");
        std::string args = "build --alg " + alg + " --input " + path_of("b.graph") + " --out " +
                           out + " --seed 2";
        if (alg == "2w-subset") args += " --subset " + path_of("b.subset");
        if (alg == "6eps-wmax") args += " --epsilon 0.5";
        RunResult r = run_cli(args);
        INFO("alg ", alg, ": ", r.out);
        REQUIRE(r.code == 0);

        addspan::Graph h = addspan::load_graph(out);
        CHECK(h.num_vertices() == g.num_vertices());
        CHECK(h.num_edges() <= g.num_edges());
        CHECK(h.num_edges() > 0);

        json rep = json::parse(read_file(out + ".report.json"));
        CHECK(rep["algorithm"] == alg);
        CHECK(rep["n"] == 40);
        CHECK(rep["seed"] == 2);
        CHECK(rep["spanner_edges"] == h.num_edges());
        REQUIRE(rep["phase_names"].is_array());
        REQUIRE(rep["phase_edges"].is_array());
        REQUIRE(rep["phase_millis"].is_array());
        CHECK(rep["phase_names"].size() == rep["phase_edges"].size());
        CHECK(rep["phase_names"].size() == rep["phase_millis"].size());
        std::size_t total = 0;
        for (const auto& v : rep["phase_edges"]) total += v.get<std::size_t>();
        CHECK(total == h.num_edges());
        CHECK(rep["sample_sizes"].is_object());
        CHECK(rep["params"].is_object());

        json manifest = json::parse(read_file(out + ".manifest.json"));
        CHECK(manifest["command"] == "build");
    }
}

TEST_CASE("build argument errors exit 2") {
    std::string in = path_of("b.graph");
    CHECK(run_cli("build --alg nope --input " + in + " --out " + path_of("n.spanner")).code == 2);
    CHECK(run_cli("build --alg 2w-subset --input " + in + " --out " + path_of("n.spanner")).code ==
          2);
    CHECK(run_cli("build --alg 6eps-wmax --input " + in + " --out " + path_of("n.spanner")).code ==
          2);
    CHECK(run_cli("build --alg 6eps-wmax --epsilon 2.0 --input " + in + " --out " +
                  path_of("n.spanner"))
              .code == 2);
    CHECK(run_cli("build --alg 6w --input " + in).code == 2);  // missing --out
}

TEST_CASE("missing or malformed inputs exit 3") {
    CHECK(run_cli("build --alg 6w --input " + path_of("absent.graph") + " --out " +
                  path_of("n.spanner"))
              .code == 3);
    write_file(kWork / "junk.graph", "this is not a graph\n");
    CHECK(run_cli("build --alg 6w --input " + path_of("junk.graph") + " --out " +
                  path_of("n.spanner"))
              .code == 3);
    write_file(kWork / "short.graph", "3 2\n0 1 1.0\n");
    CHECK(run_cli("build --alg 6w --input " + path_of("short.graph") + " --out " +
                  path_of("n.spanner"))
              .code == 3);
    CHECK(run_cli("replay " + path_of("absent.manifest.json")).code == 3);
    write_file(kWork / "bad.manifest.json", "{}");
    CHECK(run_cli("replay " + path_of("bad.manifest.json")).code == 3);
}

TEST_CASE("verify accepts a valid spanner and flags violations") {
    std::string g = path_of("v.graph");
    write_file(kWork / "v.graph", "4 4\n0 1 1\n1 2 1\n2 3 1\n0 3 1\n");
    // Keep the path 0-1-2-3: pair (0,3) stretches from 1 to 3.
    write_file(kWork / "v.spanner", "4 3\n0 1 1\n1 2 1\n2 3 1\n");

    RunResult ok = run_cli("verify --graph " + g + " --spanner " + path_of("v.spanner") +
                           " --bound 6w");
    CHECK(ok.code == 0);
    json rep = json::parse(read_file(path_of("v.spanner.verify.json")));
    CHECK(rep["pairs_checked"] == 6);
    CHECK(rep["violations"].empty());

    RunResult bad = run_cli("verify --graph " + g + " --spanner " + path_of("v.spanner") +
                            " --bound custom --a 1 --b 0 --report " + path_of("v2.json"));
    CHECK(bad.code == 1);
    json rep2 = json::parse(read_file(path_of("v2.json")));
    REQUIRE(rep2["violations"].size() == 1);
    CHECK(rep2["violations"][0]["s"] == 0);
    CHECK(rep2["violations"][0]["t"] == 3);
    CHECK(rep2["violations"][0]["excess"] == 2.0);
    CHECK(rep2["max_excess_ratio"] == 2.0);

    // Unknown bound and subsetless subset bound are usage errors.
    CHECK(run_cli("verify --graph " + g + " --spanner " + path_of("v.spanner") +
                  " --bound wat")
              .code == 2);
    CHECK(run_cli("verify --graph " + g + " --spanner " + path_of("v.spanner") +
                  " --bound 2w-subset")
              .code == 2);

    // A spanner that is not an edge subset of the graph is a format error.
    write_file(kWork / "alien.spanner", "4 1\n0 2 1\n");
    CHECK(run_cli("verify --graph " + g + " --spanner " + path_of("alien.spanner") +
                  " --bound 6w")
              .code == 3);
    write_file(kWork / "rewt.spanner", "4 1\n0 1 2\n");  // weight mismatch
    CHECK(run_cli("verify --graph " + g + " --spanner " + path_of("rewt.spanner") +
                  " --bound 6w")
              .code == 3);
}

TEST_CASE("verify honors a subset file") {
    write_file(kWork / "s.graph", "4 4\n0 1 1\n1 2 1\n2 3 1\n0 3 1\n");
    write_file(kWork / "s.spanner", "4 3\n0 1 1\n1 2 1\n2 3 1\n");
    write_file(kWork / "s.subset", "0\n1\n2\n");
    RunResult r = run_cli("verify --graph " + path_of("s.graph") + " --spanner " +
                          path_of("s.spanner") + " --bound 2w-subset --subset " +
                          path_of("s.subset"));
    CHECK(r.code == 0);
    json rep = json::parse(read_file(path_of("s.spanner.verify.json")));
    CHECK(rep["pairs_checked"] == 3);
}

TEST_CASE("replay reproduces byte-identical outputs") {
    std::string graph = path_of("r.graph");
    REQUIRE(run_cli("gen --n 36 --p 0.4 --seed 21 --out " + graph).code == 0);
    std::string spanner = path_of("r.spanner");
    REQUIRE(run_cli("build --alg 6w-fast --input " + graph + " --out " + spanner + " --seed 3")
                .code == 0);
    std::string first = read_file(spanner);
    std::string first_report = read_file(spanner + ".report.json");

    fs::remove(spanner);
    REQUIRE(run_cli("replay " + spanner + ".manifest.json").code == 0);
    CHECK(read_file(spanner) == first);

    json rep = json::parse(read_file(spanner + ".report.json"));
    json rep_first = json::parse(first_report);
    CHECK(rep["spanner_edges"] == rep_first["spanner_edges"]);  // timings may differ

    // Replaying the generator reproduces the graph too.
    std::string gbytes = read_file(graph);
    fs::remove(graph);
    REQUIRE(run_cli("replay " + graph + ".manifest.json").code == 0);
    CHECK(read_file(graph) == gbytes);
}

TEST_CASE("bench writes the expected CSV grid") {
    std::string csv = path_of("bench.csv");
    RunResult r = run_cli("bench --algs 6w-fast,4w-fast --n 24,32 --seeds 2 --avg-deg 6 --out " +
                          csv);
    REQUIRE(r.code == 0);
    std::istringstream in(read_file(csv));
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "algorithm,n,m,edges,millis,seed");
    std::size_t rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 8);  // 2 algs x 2 sizes x 2 seeds
    CHECK(run_cli("bench --algs 6w --n 8").code == 2);  // missing --out
}
