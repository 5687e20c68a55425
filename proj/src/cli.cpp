#include "lagrel/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "lagrel/axioms.hpp"
#include "lagrel/io.hpp"
#include "lagrel/protocols.hpp"
#include "lagrel/render.hpp"
#include "lagrel/synthesis.hpp"

namespace lagrel {

namespace {

struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw FileError("cannot write '" + path + "'");
}

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_relation_file(const std::string& path) { return ends_with(path, ".relation.json"); }

// A file operand denotes either a diagram, read in the given calculus, or a relation record.
struct Operand {
    std::optional<Diagram> diagram;
    std::optional<LagrangianRelation> relation;
    std::optional<Relation> affine;
};

Operand load(const std::string& path, Calculus c, Backend backend) {
    Operand op;
    const std::string text = read_file(path);
    if (is_relation_file(path)) {
        require(backend == Backend::Exact, ErrorKind::BackendMismatch, "relation records need the exact backend");
        op.relation = relation_from_json(text);
        if (c == Calculus::GAA) op.affine = op.relation->affine();
        return op;
    }
    op.diagram = Diagram::from_json(text);
    if (c == Calculus::GAA) {
        require(backend == Backend::Exact, ErrorKind::BackendMismatch, "affine interpretation needs the exact backend");
        op.affine = interpret_affine(*op.diagram);
    } else {
        op.relation = interpret(*op.diagram, c, backend);
    }
    return op;
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

std::string affine_fingerprint(const Relation& r) { return one_line(r.str()); }

std::string operand_fingerprint(const Operand& op) {
    return op.affine ? affine_fingerprint(*op.affine) : fingerprint(*op.relation);
}

// Rows spanning the direction space in reduced echelon form, and one point when nonempty.
void print_generators(std::ostream& out, const Relation& r) {
    if (r.is_empty()) {
        out << "generator\n(empty relation)\n";
        return;
    }
    Matrix<Q> basis = kernel(r.constraints());
    auto rr = rref(basis.transpose());
    out << "generator\n";
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        for (std::size_t j = 0; j < rr.reduced.cols(); ++j) out << (j ? " " : "") << rr.reduced(i, j).str();
        out << "\n";
    }
    auto point = solve_affine(r.constraints(), r.rhs());
    out << "point " << vector_to_string(*point) << "\n";
}

// Mode counts followed by the canonical constraint rows over (z_in, x_in, z_out, x_out).
std::string relation_text(const LagrangianRelation& r) {
    std::string head = std::to_string(r.in()) + "->" + std::to_string(r.out());
    if (r.is_empty()) return head + " EMPTY";
    std::string body = r.str();
    auto newline = body.find('\n');
    return newline == std::string::npos ? head : head + body.substr(newline);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Rational rational_arg(const std::string& text, const char* what) {
    try {
        return Rational::parse(text);
    } catch (const Error& e) {
        fail(ErrorKind::ParseError, std::string(what) + ": " + e.what());
    }
}

CirclePoint angle_arg(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) fail(ErrorKind::ParseError, "angle must be written c,s");
    Rational c = rational_arg(text.substr(0, comma), "angle");
    Rational s = rational_arg(text.substr(comma + 1), "angle");
    return CirclePoint(c, s);
}

Matrix<Q> matrix_arg(const std::string& text, const char* what) {
    try {
        return parse_matrix(text);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        fail(ErrorKind::ParseError, std::string(what) + ": " + e.what());
    }
}

struct Options {
    std::string backend;
    std::string calculus = "gsa";
    std::vector<std::string> files;
    std::string property;
    std::string suite = "all";
    std::size_t samples = 8;
    std::uint64_t seed = 2024;
    std::string u, v;
    bool lov_relation = false;
    std::string generator;
    std::string angle;
    std::optional<double> theta;
    std::string epsilon, a = "0", b = "0";
    bool show_diagram = false;
    bool dot = false, tikz = false;
    std::string output;
    bool canon_synthesize = false;
    bool interpret_json = false;
};

Backend resolve_backend(const Options& o) {
    if (!o.backend.empty()) return parse_backend(o.backend);
    if (const char* env = std::getenv("LAGREL_BACKEND"); env && *env) return parse_backend(env);
    return Backend::Exact;
}

int cmd_interpret(const Options& o, std::ostream& out) {
    Calculus c = parse_calculus(o.calculus);
    Operand op = load(o.files.at(0), c, resolve_backend(o));
    if (op.affine) {
        out << op.affine->str() << "\n";
        return 0;
    }
    if (o.interpret_json) {
        out << relation_to_json(*op.relation);
        return 0;
    }
    out << "relation " << relation_text(*op.relation) << "\n";
    out << "fingerprint " << fingerprint(*op.relation) << "\n";
    return 0;
}

int cmd_canon(const Options& o, std::ostream& out) {
    Calculus c = parse_calculus(o.calculus);
    Operand op = load(o.files.at(0), c, resolve_backend(o));
    if (op.affine) {
        if (o.canon_synthesize)
            out << synthesize_affine(*op.affine).to_json();
        else
            out << affine_fingerprint(*op.affine) << "\n";
        return 0;
    }
    if (o.canon_synthesize) {
        out << synthesize_normal_form(*op.relation, c).to_json();
        return 0;
    }
    const LagrangianRelation& r = *op.relation;
    out << "relation " << r.in() << "->" << r.out() << "\n";
    if (r.is_empty()) {
        out << "EMPTY\n";
        return 0;
    }
    APForm ap = canonical_ap(r);
    auto list = [](const std::vector<std::size_t>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    out << "vertices [" << list(ap.vertices) << "]\n";
    out << "leaves [" << list(ap.leaves) << "]\n";
    out << "L [" << matrix_to_string(ap.L) << "]\n";
    out << "phi [" << matrix_to_string(ap.phi) << "]\n";
    out << "mu [" << vector_to_string(ap.mu) << "]\n";
    out << "xshift [" << vector_to_string(ap.xshift) << "]\n";
    out << "fingerprint " << fingerprint(r) << "\n";
    return 0;
}

int cmd_eq(const Options& o, std::ostream& out) {
    Calculus c = parse_calculus(o.calculus);
    Backend backend = resolve_backend(o);
    require(backend == Backend::Exact, ErrorKind::BackendMismatch, "equality decisions need the exact backend");
    Operand lhs = load(o.files.at(0), c, backend);
    Operand rhs = load(o.files.at(1), c, backend);
    bool equal = lhs.affine ? *lhs.affine == *rhs.affine : *lhs.relation == *rhs.relation;
    out << (equal ? "EQUAL" : "DISTINCT") << "\n";
    out << "lhs " << operand_fingerprint(lhs) << "\n";
    out << "rhs " << operand_fingerprint(rhs) << "\n";
    return equal ? 0 : 1;
}

int cmd_check(const Options& o, std::ostream& out) {
    Calculus c = parse_calculus(o.calculus);
    Backend backend = resolve_backend(o);
    require(backend == Backend::Exact, ErrorKind::BackendMismatch, "property checks need the exact backend");
    const std::string& path = o.files.at(0);
    bool holds = false;
    if (o.property == "in-calculus") {
        require(!is_relation_file(path), ErrorKind::ParseError, "in-calculus applies to diagram files");
        Diagram d = Diagram::from_json(read_file(path));
        try {
            d.check_calculus(c);
            holds = true;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotInFragment && e.kind() != ErrorKind::IllFormedDiagram) throw;
            out << "reason " << e.what() << "\n";
        }
    } else {
        require(c != Calculus::GAA, ErrorKind::NotInFragment, "property '" + o.property + "' needs a Lagrangian calculus");
        Operand op = load(path, c, backend);
        if (o.property == "positive") holds = is_positive(*op.relation);
        else if (o.property == "quasi-real") holds = is_quasi_real(*op.relation);
        else if (o.property == "lagrangian") holds = is_lagrangian(op.relation->affine());
        else if (o.property == "empty") holds = op.relation->is_empty();
        else fail(ErrorKind::UnknownKind, "unknown property '" + o.property + "'");
    }
    out << o.property << " " << (holds ? "true" : "false") << "\n";
    return holds ? 0 : 1;
}

int cmd_axioms(const Options& o, std::ostream& out) {
    std::vector<Calculus> suites;
    if (o.suite == "all")
        suites = {Calculus::GSA, Calculus::GAA, Calculus::GGA, Calculus::GQGA};
    else
        suites = {parse_calculus(o.suite)};
    require(o.samples > 0, ErrorKind::ParseError, "--samples must be positive");
    std::size_t total = 0, ok = 0;
    out << std::left << std::setw(6) << "calc" << std::setw(28) << "axiom" << std::setw(10) << "samples"
        << std::setw(10) << "mutant" << "status\n";
    for (Calculus c : suites) {
        for (const AxiomResult& r : run_axiom_suite(c, o.samples, o.seed)) {
            ++total;
            ok += r.ok();
            out << std::left << std::setw(6) << calculus_name(c) << std::setw(28) << r.name << std::setw(10)
                << (std::to_string(r.passed) + "/" + std::to_string(r.samples)) << std::setw(10)
                << (r.mutant_rejected ? "rejected" : "ACCEPTED") << (r.ok() ? "PASS" : "FAIL") << "\n";
        }
    }
    out << ok << "/" << total << " axiom families sound\n";
    return ok == total ? 0 : 1;
}

int cmd_import_graph(const Options& o, std::ostream& out) {
    out << import_graph_state(matrix_arg(o.u, "--u"), matrix_arg(o.v, "--v")).to_json();
    return 0;
}

void print_float_matrix(std::ostream& out, const std::vector<std::vector<double>>& m) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(12);
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) ss << (j ? " " : "") << (row[j] == 0 ? 0.0 : row[j]);
        ss << "\n";
    }
    out << ss.str();
}

int cmd_lov(const Options& o, std::ostream& out) {
    Backend backend = resolve_backend(o);
    if (!o.generator.empty()) {
        require(o.files.empty(), ErrorKind::ParseError, "give either a circuit file or --generator");
        LovGenerator g = parse_lov_generator(o.generator);
        if (backend == Backend::Float) {
            require(o.theta.has_value(), ErrorKind::ParseError, "the float backend needs --theta");
            print_float_matrix(out, lov_float_matrix(g, *o.theta));
            return 0;
        }
        require(!o.theta.has_value(), ErrorKind::BackendMismatch, "--theta needs the float backend");
        Diagram d = lov_to_diagram(g, o.angle.empty() ? CirclePoint() : angle_arg(o.angle));
        if (o.lov_relation)
            out << relation_to_json(interpret(d, Calculus::GQGA));
        else
            out << d.to_json();
        return 0;
    }
    require(o.files.size() == 1, ErrorKind::ParseError, "lov needs a circuit file or --generator");
    require(backend == Backend::Exact, ErrorKind::BackendMismatch, "circuit files need the exact backend");
    Diagram d = lov_to_diagram(LovCircuit::from_json(read_file(o.files[0])));
    if (o.lov_relation)
        out << relation_to_json(interpret(d, Calculus::GQGA));
    else
        out << d.to_json();
    return 0;
}

int cmd_demo_teleport(const Options& o, std::ostream& out) {
    require(resolve_backend(o) == Backend::Exact, ErrorKind::BackendMismatch, "teleportation needs the exact backend");
    Rational eps = rational_arg(o.epsilon, "--epsilon");
    Rational a = rational_arg(o.a, "--a"), b = rational_arg(o.b, "--b");
    if (o.show_diagram) {
        require(eps.sign() >= 0, ErrorKind::NegativeEpsilon, "epsilon must be non-negative");
        out << teleportation_diagram(eps, a, b).to_json();
        return 0;
    }
    LagrangianRelation channel = demo_teleportation(eps, a, b);
    require(channel == teleportation_relation(eps, a, b), ErrorKind::InternalDisagreement,
            "diagrammatic and relational teleportation differ");
    out << "teleportation epsilon=" << eps.str() << " outcome=(" << a.str() << "," << b.str() << ")\n";
    out << "channel " << relation_text(channel) << "\n";
    print_generators(out, channel.affine());
    out << "identity " << yes_no(channel == LagrangianRelation::identity(1)) << "\n";
    return 0;
}

int cmd_export(const Options& o, std::ostream& out) {
    require(o.dot != o.tikz, ErrorKind::ParseError, "choose exactly one of --dot and --tikz");
    Diagram d = Diagram::from_json(read_file(o.files.at(0)));
    std::string text = o.dot ? to_dot(d) : to_tikz(d);
    if (o.output.empty())
        out << text;
    else
        write_file(o.output, text);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Lagrangian relations, Gaussian calculi and their diagrams", "lagrel"};
    app.require_subcommand(1, 1);
    Options o;
    app.add_option("--backend", o.backend, "exact or float (default: $LAGREL_BACKEND, else exact)");

    auto calculus = [&](CLI::App* sub) {
        sub->add_option("--calculus", o.calculus, "gsa, gaa, gga or gqga")->capture_default_str();
    };

    CLI::App* interpret_cmd = app.add_subcommand("interpret", "Print the relation denoted by a diagram");
    interpret_cmd->add_option("file", o.files, "diagram or relation file")->required()->expected(1);
    interpret_cmd->add_flag("--json", o.interpret_json, "print a relation record");
    calculus(interpret_cmd);

    CLI::App* canon_cmd = app.add_subcommand("canon", "Print the canonical AP form");
    canon_cmd->add_option("file", o.files, "diagram or relation file")->required()->expected(1);
    canon_cmd->add_flag("--synthesize", o.canon_synthesize, "print the normal-form diagram instead");
    calculus(canon_cmd);

    CLI::App* eq_cmd = app.add_subcommand("eq", "Decide semantic equality of two diagrams");
    eq_cmd->add_option("files", o.files, "two diagram or relation files")->required()->expected(2);
    calculus(eq_cmd);

    CLI::App* check_cmd = app.add_subcommand("check", "Decide a property of a diagram or relation");
    check_cmd->add_option("file", o.files, "diagram or relation file")->required()->expected(1);
    check_cmd->add_option("--property", o.property, "positive, quasi-real, lagrangian, empty or in-calculus")
        ->required();
    calculus(check_cmd);

    CLI::App* axioms_cmd = app.add_subcommand("axioms", "Run the axiom soundness suite");
    axioms_cmd->add_option("--calculus", o.suite, "gsa, gaa, gga, gqga or all")->capture_default_str();
    axioms_cmd->add_option("--samples", o.samples, "random instances per family")->capture_default_str();
    axioms_cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();

    CLI::App* import_cmd = app.add_subcommand("import-graph", "Build the GQGA diagram of a weighted graph state");
    import_cmd->add_option("--u", o.u, "real symmetric matrix, e.g. 0,1;1,0")->required();
    import_cmd->add_option("--v", o.v, "positive definite matrix")->required();

    CLI::App* lov_cmd = app.add_subcommand("lov", "Translate linear optics into GQGA");
    lov_cmd->add_option("file", o.files, "circuit file")->expected(0, 1);
    lov_cmd->add_option("--generator", o.generator, "single generator name");
    lov_cmd->add_option("--angle", o.angle, "exact angle c,s on the unit circle");
    lov_cmd->add_option("--theta", o.theta, "angle in radians for the float backend");
    lov_cmd->add_flag("--relation", o.lov_relation, "print the relation record instead of the diagram");

    CLI::App* tele_cmd = app.add_subcommand("demo-teleport", "Run the continuous-variable teleportation demo");
    tele_cmd->add_option("--epsilon", o.epsilon, "position noise of the Bell resource")->required();
    tele_cmd->add_option("--a", o.a, "position outcome")->capture_default_str();
    tele_cmd->add_option("--b", o.b, "momentum outcome")->capture_default_str();
    tele_cmd->add_flag("--diagram", o.show_diagram, "print the protocol diagram instead");

    CLI::App* export_cmd = app.add_subcommand("export", "Render a diagram");
    export_cmd->add_option("file", o.files, "diagram file")->required()->expected(1);
    export_cmd->add_flag("--dot", o.dot, "Graphviz output");
    export_cmd->add_flag("--tikz", o.tikz, "TikZ output");
    export_cmd->add_option("-o,--output", o.output, "output file (default: standard output)");

    for (std::size_t k = 0; k < args.size(); ++k) {
        const std::string& arg = args[k];
        if (arg == "--backend") ++k;
        if (arg.empty() || arg[0] == '-') continue;
        bool known = false;
        for (const CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
            known = known || sub->get_name() == arg;
        if (!known) {
            err << "error: unknown verb '" << arg << "'\n" << app.help();
            return 2;
        }
        break;
    }
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    const std::map<CLI::App*, int (*)(const Options&, std::ostream&)> verbs = {
        {interpret_cmd, cmd_interpret}, {canon_cmd, cmd_canon},         {eq_cmd, cmd_eq},
        {check_cmd, cmd_check},         {axioms_cmd, cmd_axioms},       {import_cmd, cmd_import_graph},
        {lov_cmd, cmd_lov},             {tele_cmd, cmd_demo_teleport},  {export_cmd, cmd_export},
    };
    try {
        for (const auto& [sub, fn] : verbs)
            if (sub->parsed()) return fn(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const FileError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << app.help();
    return 2;
}

}  // namespace lagrel
