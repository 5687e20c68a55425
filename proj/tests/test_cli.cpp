#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lagrel/cli.hpp"
#include "lagrel/diagram.hpp"

using namespace lagrel;
namespace fs = std::filesystem;

namespace {

const fs::path fixtures = LAGREL_FIXTURES;
const fs::path golden = fixtures.parent_path() / "golden";

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

// Splits on spaces; "@/" expands to the fixture directory.
Outcome run_line(const std::string& line) {
    std::vector<std::string> args;
    std::istringstream words(line);
    for (std::string w; words >> w;) {
        if (w.rfind("@/", 0) == 0) w = (fixtures / w.substr(2)).string();
        args.push_back(w);
    }
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GoldenCase {
    const char* name;
    int code;
    const char* args;
};

const GoldenCase golden_cases[] = {
    {"eq_id_id", 0, "eq @/id.diagram.json @/id.diagram.json"},
    {"eq_id_antipode_twice", 0, "eq @/id.diagram.json @/antipode_twice.diagram.json --calculus gqga"},
    {"eq_id_antipode", 1, "eq @/id.diagram.json @/antipode.diagram.json"},
    {"eq_diagram_relation", 0, "eq @/id.diagram.json @/id.relation.json --calculus gga"},
    {"eq_affine", 0, "eq @/id.diagram.json @/antipode_twice.diagram.json --calculus gaa"},
    {"interpret_squeezed_vacuum", 0, "interpret @/squeezed_vacuum.diagram.json --calculus gqga"},
    {"interpret_bell_affine", 0, "interpret @/bell.diagram.json --calculus gaa"},
    {"interpret_json", 0, "interpret @/id.diagram.json --json"},
    {"canon_bell", 0, "canon @/bell.diagram.json"},
    {"canon_fourier", 0, "canon @/fourier.diagram.json"},
    {"canon_synthesize_vacuum", 0, "canon @/vacuum.diagram.json --calculus gqga --synthesize"},
    {"check_positive_vacuum", 0, "check @/squeezed_vacuum.diagram.json --property positive --calculus gqga"},
    {"check_positive_complex", 1, "check @/anti_vacuum.diagram.json --property positive"},
    {"check_quasi_real_fourier", 1, "check @/fourier.diagram.json --property quasi-real"},
    {"check_quasi_real_vacuum", 0, "check @/vacuum.diagram.json --property quasi-real --calculus gqga"},
    {"check_in_calculus", 1, "check @/complex_state.diagram.json --property in-calculus --calculus gqga"},
    {"check_lagrangian_relation", 0, "check @/id.relation.json --property lagrangian"},
    {"axioms_gsa", 0, "axioms --calculus gsa"},
    {"axioms_all", 0, "axioms --calculus all --samples 3 --seed 7"},
    {"import_graph_edge", 0, "import-graph --u 0,1;1,0 --v 1,0;0,1"},
    {"lov_circuit", 0, "lov @/mzi.circuit.json"},
    {"lov_generator_relation", 0, "lov --generator polarising-beamsplitter --relation"},
    {"lov_float", 0, "--backend float lov --generator wave-plate --theta 0.25"},
    {"teleport_perfect", 0, "demo-teleport --epsilon 0"},
    {"teleport_noisy", 0, "demo-teleport --epsilon 1/4"},
    {"teleport_outcome", 0, "demo-teleport --epsilon 1 --a 3 --b 1/2"},
    {"export_dot", 0, "export @/bell.diagram.json --dot"},
    {"export_tikz", 0, "export @/squeezed_vacuum.diagram.json --tikz"},
};

}  // namespace

TEST_CASE("reports match the golden files") {
    for (const GoldenCase& c : golden_cases) {
        CAPTURE(c.name);
        Outcome r = run_line(c.args);
        CHECK(r.code == c.code);
        CHECK(r.err.empty());
        CHECK(r.out == slurp(golden / (std::string(c.name) + ".out")));
    }
}

TEST_CASE("perfect teleportation prints the identity generator matrix") {
    Outcome r = run_line("demo-teleport --epsilon 0");
    CHECK(r.code == 0);
    CHECK(r.out.find("generator\n1 0 1 0\n0 1 0 1\n") != std::string::npos);
    CHECK(r.out.find("identity yes") != std::string::npos);
}

TEST_CASE("diagram fixtures print canonically") {
    for (const auto& entry : fs::directory_iterator(fixtures)) {
        const std::string name = entry.path().filename().string();
        if (name.find(".diagram.json") == std::string::npos) continue;
        CAPTURE(name);
        std::string text = slurp(entry.path());
        Diagram d = Diagram::from_json(text);
        CHECK(d.to_json() == text);
        CHECK(Diagram::from_json(d.to_json()).to_json() == text);
    }
}

TEST_CASE("usage errors exit with code 2") {
    for (const char* line : {"", "frobnicate", "eq @/id.diagram.json", "eq @/id.diagram.json @/id.diagram.json --bogus",
                             "check @/id.diagram.json", "axioms --samples many", "demo-teleport"}) {
        CAPTURE(line);
        Outcome r = run_line(line);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK(r.err.rfind("error: ", 0) == 0);
        CHECK(r.err.find("Usage: lagrel") != std::string::npos);
    }
    CHECK(run_line("frobnicate").err.rfind("error: unknown verb 'frobnicate'", 0) == 0);
    Outcome help = run_line("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("demo-teleport") != std::string::npos);
}

TEST_CASE("module errors report their kind and exit with code 2") {
    struct Expect {
        const char* args;
        const char* prefix;
    };
    const Expect cases[] = {
        {"interpret @/no-such-file.diagram.json", "error: cannot read"},
        {"interpret @/complex_state.diagram.json --calculus gqga", "error: IllFormedDiagram:"},
        {"interpret @/id.diagram.json --calculus qqq", "error: UnknownKind:"},
        {"demo-teleport --epsilon -1/4", "error: NegativeEpsilon:"},
        {"demo-teleport --epsilon x", "error: ParseError:"},
        {"import-graph --u 0 --v 0", "error: NotPositiveDefinite:"},
        {"lov --generator mirror", "error: UnknownGenerator:"},
        {"lov --generator wave-plate --angle 1,1", "error: NotOnCircle:"},
        {"lov --generator wave-plate --theta 1", "error: BackendMismatch:"},
        {"--backend float eq @/id.diagram.json @/id.diagram.json", "error: BackendMismatch:"},
        {"--backend float interpret @/id.diagram.json", "error: BackendMismatch:"},
        {"--backend fast interpret @/id.diagram.json", "error: UnknownKind:"},
        {"check @/id.diagram.json --property shiny", "error: UnknownKind:"},
        {"canon @/anti_vacuum.diagram.json --calculus gqga --synthesize", "error: IllFormedDiagram:"},
        {"export @/id.diagram.json", "error: ParseError:"},
    };
    for (const Expect& e : cases) {
        CAPTURE(e.args);
        Outcome r = run_line(e.args);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK(r.err.rfind(e.prefix, 0) == 0);
    }
}

TEST_CASE("malformed files report line and column") {
    const fs::path bad = fs::temp_directory_path() / "lagrel_malformed.diagram.json";
    std::ofstream(bad) << "{\n  \"inputs\": [],\n  \"nodes\": [,]\n}\n";
    std::ostringstream out, err;
    CHECK(run({"interpret", bad.string()}, out, err) == 2);
    CHECK(err.str().rfind("error: ParseError: line 3, column", 0) == 0);

    const fs::path bad_circuit = fs::temp_directory_path() / "lagrel_malformed.circuit.json";
    std::ofstream(bad_circuit) << "{\"wires\": 2,\n \"gates\": [}\n";
    std::ostringstream out2, err2;
    CHECK(run({"lov", bad_circuit.string()}, out2, err2) == 2);
    CHECK(err2.str().find("line 2, column") != std::string::npos);
    fs::remove(bad);
    fs::remove(bad_circuit);
}

TEST_CASE("the backend variable selects the default backend") {
    ::setenv("LAGREL_BACKEND", "float", 1);
    Outcome floating = run_line("eq @/id.diagram.json @/id.diagram.json");
    Outcome matrix = run_line("lov --generator wave-plate --theta 0.25");
    Outcome overridden = run_line("--backend exact eq @/id.diagram.json @/id.diagram.json");
    ::setenv("LAGREL_BACKEND", "exact", 1);
    Outcome exact = run_line("eq @/id.diagram.json @/id.diagram.json");
    ::unsetenv("LAGREL_BACKEND");
    CHECK(floating.code == 2);
    CHECK(floating.err.rfind("error: BackendMismatch:", 0) == 0);
    CHECK(matrix.code == 0);
    CHECK(matrix.out == slurp(golden / "lov_float.out"));
    CHECK(overridden.code == 0);
    CHECK(exact.code == 0);
}

TEST_CASE("export writes renderer files") {
    const fs::path dot = fs::temp_directory_path() / "lagrel_export.dot";
    Outcome r = run_line("export @/bell.diagram.json --dot -o " + dot.string());
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(dot) == slurp(golden / "export_dot.out"));
    fs::remove(dot);
}
