#include "gitseq/diagram.hpp"
#include "gitseq/json_io.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace gitseq;
using io::json;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + path);
    out << content;
}

// "key: value" lines mirroring the JSON content, for --format text
void render_text(const json& j, const std::string& prefix, std::ostringstream& os) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            render_text(value, prefix.empty() ? key : prefix + "." + key, os);
    } else if (j.is_array()) {
        bool scalar = true;
        for (const auto& item : j)
            if (item.is_structured()) scalar = false;
        if (scalar) {
            os << prefix << ": " << j.dump() << "\n";
        } else {
            int idx = 0;
            for (const auto& item : j) render_text(item, prefix + "[" + std::to_string(idx++) + "]", os);
        }
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
}

std::string emit(const json& j, const std::string& format) {
    if (format == "text") {
        std::ostringstream os;
        render_text(j, "", os);
        return os.str();
    }
    return j.dump(2) + "\n";
}

struct Options {
    std::string in, out, format = "json";
    double tol_constraint = 1e-8;
    double tol_cluster    = 1e-6;
    double tol_snap       = 1e-6;
    double tol_bisect     = 1e-9;
    int k_max             = 6;
    int diagram_kmax      = 0;
    int n                 = 2;
    int m                 = 4;
    std::uint64_t seed    = 1;
    double scale          = 1e-3;
    std::string config_path, signature;
    std::string layer = "all";
    bool degrees_table = false, poset = false, branch_complex = false, quotient = false;

    Tolerances tols() const { return {tol_constraint, tol_cluster, tol_snap}; }
};

void add_tolerance_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--tol-constraint", opt.tol_constraint, "Wonenburger identity tolerance");
    cmd->add_option("--tol-cluster", opt.tol_cluster, "eigenvalue clustering tolerance");
    cmd->add_option("--tol-snap", opt.tol_snap, "+-1 membership tolerance");
}

json krein_entries(const Mat& m, double snap_tol, double cluster_tol) {
    json entries = json::array();
    Eigen::EigenSolver<Mat> solver(m, false);
    if (solver.info() != Eigen::Success) throw NumericError("classify: eigen-solver failed");
    std::vector<cplx> eigs(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
    const auto spec = cluster_eigenvalues(eigs, cluster_tol);
    for (const auto& c : spec.complex_clusters) {
        if (std::abs(std::abs(c.value) - 1.0) > snap_tol) continue;  // elliptic pairs only
        const auto pair = krein_signature(m, c.value, cluster_tol);
        json e;
        e["eigenvalue"] = json::array({c.value.real(), c.value.imag()});
        e["p"]          = pair.p;
        e["q"]          = pair.q;
        e["conjugate"]  = io::sign_pair_to_json(pair.swapped());
        entries.push_back(e);
    }
    return entries;
}

json cmd_classify(const Options& opt) {
    const json input = load_json(opt.in);
    json report;
    Mat m;
    if (input.contains("A")) {
        const auto triple = io::triple_from_json(input);
        auto violated     = validate_wonenburger(triple, opt.tol_constraint);
        if (!violated.empty()) {
            std::string msg = "input violates:";
            for (const auto& v : violated) msg += " " + v;
            throw ValidationError(msg);
        }
        m               = assemble(triple, opt.tol_constraint);
        report["input"] = "wonenburger";
        const auto spec = spectral_decomposition(triple.a, opt.tol_cluster);
        json top;
        top["region"]    = io::region_to_json(classify_clusters(spec));
        top["signature"] = io::signature_to_json(partial_b_signature(triple, opt.tol_cluster));
        report["top"]    = top;
        json middle;
        middle["region"] = top["region"];
        middle["krein"]  = krein_entries(m, opt.tol_snap, opt.tol_cluster);
        report["middle"] = middle;
        json base;
        base["point"]  = io::point_to_json(stability_point(triple.a));
        base["region"] = top["region"];
        report["base"] = base;
    } else {
        m = io::matrix_from_json(input);
        if (!is_symplectic(m, opt.tol_constraint))
            throw ValidationError("input matrix is not symplectic at the given tolerance");
        report["input"] = "symplectic";
        const auto spec = stability_index_decomposition(m, opt.tol_cluster);
        json middle;
        middle["region"] = io::region_to_json(classify_clusters(spec));
        middle["krein"]  = krein_entries(m, opt.tol_snap, opt.tol_cluster);
        report["middle"] = middle;
        std::vector<cplx> values;
        for (const auto& c : spec.real_clusters)
            for (int j = 0; j < c.mult; ++j) values.emplace_back(c.value, 0.0);
        for (const auto& c : spec.complex_clusters)
            for (int j = 0; j < c.mult; ++j) {
                values.push_back(c.value);
                values.push_back(std::conj(c.value));
            }
        json base;
        base["point"]  = io::point_to_json(stability_point(values));
        base["region"] = middle["region"];
        report["base"] = base;
    }
    json stab;
    stab["stable"]       = is_stable(m, opt.tol_snap);
    stab["verdict"]      = to_string(strong_stability(m, opt.tol_snap));
    report["stability"]  = stab;
    return report;
}

json branch_complex(int n) {
    const auto nodes = stable_nodes(n);
    std::vector<BranchLabel> branches;
    std::vector<int> node_of;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (const auto& branch : stable_branches(nodes[i])) {
            branches.push_back(branch);
            node_of.push_back(static_cast<int>(i));
        }

    json j;
    json jnodes = json::array();
    for (const auto& b : branches)
        jnodes.push_back({{"label", b.label()}, {"dim", b.node.dim()}});
    j["nodes"] = jnodes;

    json arcs = json::array();
    for (std::size_t up = 0; up < branches.size(); ++up)
        for (std::size_t lo = 0; lo < branches.size(); ++lo) {
            if (branches[up].node.dim() != branches[lo].node.dim() + 1) continue;
            if (branch_adjacent(branches[up], branches[lo]))
                arcs.push_back(json::array({lo, up}));
        }
    j["arcs"] = arcs;
    return j;
}

std::string branch_complex_dot(const json& complex) {
    std::ostringstream os;
    os << "digraph branches {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
    int idx = 0;
    for (const auto& node : complex.at("nodes"))
        os << "  b" << idx++ << " [label=\"" << node.at("label").get<std::string>() << "\"];\n";
    for (const auto& arc : complex.at("arcs"))
        os << "  b" << arc[0].get<int>() << " -> b" << arc[1].get<int>() << ";\n";
    os << "}\n";
    return os.str();
}

json cmd_analyze_path(const Options& opt) {
    const auto path = io::path_from_json(load_json(opt.in));
    const auto tols = opt.tols();
    const auto pts  = trace(path, tols);
    const auto events = detect_events(path, opt.k_max, opt.tol_bisect, tols);

    json report;
    report["kind"]  = path.kind == PathKind::wonenburger ? "wonenburger" : "symplectic";
    report["trace"] = io::trace_to_json(pts);
    json jevents    = json::array();
    for (const auto& e : events) jevents.push_back(io::event_to_json(e));
    report["events"] = jevents;

    json collisions = json::array(), hn = json::array();
    for (const auto& e : events) {
        if (e.kind != EventKind::region_transition) continue;
        collisions.push_back(io::event_to_json(krein_collision_check(path, e, tols)));
        hn.push_back(io::event_to_json(hn_check(path, e, tols)));
    }
    report["collision_checks"] = collisions;
    report["hn_checks"]        = hn;
    return report;
}

int dispatch(CLI::App& app, Options& opt) {
    if (app.got_subcommand("classify")) {
        write_output(opt.out, emit(cmd_classify(opt), opt.format));
    } else if (app.got_subcommand("sample")) {
        const auto t = sample_wonenburger(opt.n, opt.seed, opt.scale);
        write_output(opt.out, emit(io::triple_to_json(t), opt.format));
    } else if (app.got_subcommand("normal-form")) {
        const auto cfg = io::config_from_json(load_json(opt.config_path));
        const auto sig = io::parse_signature_pairs(opt.signature);
        const auto t   = normal_form(cfg, sig);
        write_output(opt.out, emit(io::triple_to_json(t), opt.format));
    } else if (app.got_subcommand("strata")) {
        if (opt.n > 6) throw LimitError("strata: n must be <= 6");
        if (opt.degrees_table) {
            if (opt.layer != "all" && opt.layer != "top" && opt.layer != "middle" &&
                opt.layer != "base")
                throw ValidationError("strata: --layer must be top, middle, base or all");
            json rows = json::array();
            for (const auto& region : enumerate_regions(opt.n)) {
                json row;
                row["region"]    = io::region_to_json(region);
                row["canonical"] = region.canonical();
                row["dim"]       = stratum_dimension(region);
                const auto deg   = degrees(region);
                if (opt.layer == "all")
                    row["degrees"] = io::degrees_to_json(deg);
                else
                    row["degree"] = opt.layer == "top"      ? deg.top
                                    : opt.layer == "middle" ? deg.middle
                                                            : 1;  // base covers itself
                rows.push_back(row);
            }
            json j;
            j["n"]      = opt.n;
            j["layer"]  = opt.layer;
            j["strata"] = rows;
            write_output(opt.out, emit(j, opt.format));
        } else if (opt.branch_complex) {
            const json j = branch_complex(opt.n);
            write_output(opt.out, opt.format == "dot" ? branch_complex_dot(j) : emit(j, opt.format));
        } else {
            const auto poset = stable_region_poset(opt.n);
            write_output(opt.out,
                         opt.format == "dot" ? to_dot(poset) : emit(io::poset_to_json(poset), opt.format));
        }
    } else if (app.got_subcommand("associahedron")) {
        if (opt.m > 8) throw LimitError("associahedron: m must be <= 8");
        const auto assoc = associahedron(opt.m);
        if (opt.quotient) {
            const auto q = quotient_to_stable_region(assoc);
            write_output(opt.out, opt.format == "dot" ? to_dot(q.poset)
                                                      : emit(io::quotient_to_json(q), opt.format));
        } else {
            write_output(opt.out, opt.format == "dot"
                                      ? to_dot(assoc.poset)
                                      : emit(io::poset_to_json(assoc.poset), opt.format));
        }
    } else if (app.got_subcommand("analyze-path")) {
        write_output(opt.out, emit(cmd_analyze_path(opt), opt.format));
    } else if (app.got_subcommand("diagram")) {
        if (opt.n != 2) throw ValidationError("diagram: only n = 2 is supported");
        DiagramOptions dopt;
        dopt.k_max = opt.diagram_kmax;
        if (!opt.in.empty()) {
            const auto path   = io::path_from_json(load_json(opt.in));
            const auto tols   = opt.tols();
            const auto pts    = trace(path, tols);
            const auto events =
                detect_events(path, std::max(opt.diagram_kmax, 1), opt.tol_bisect, tols);
            write_output(opt.out, broucke_svg(dopt, &pts, &events));
        } else {
            write_output(opt.out, broucke_svg(dopt));
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GIT-sequence toolkit: stability classification of symplectic monodromy matrices"};
    app.require_subcommand(1);
    Options opt;

    auto* classify = app.add_subcommand("classify", "three-layer classification of a triple or symplectic matrix");
    classify->add_option("--in", opt.in, "triple or matrix JSON")->required();
    classify->add_option("--out", opt.out, "output file (default stdout)");
    classify->add_option("--format", opt.format, "json|text");
    add_tolerance_flags(classify, opt);

    auto* sample = app.add_subcommand("sample", "random valid Wonenburger triple");
    sample->add_option("--n", opt.n, "degrees of freedom")->required();
    sample->add_option("--seed", opt.seed, "RNG seed");
    sample->add_option("--scale", opt.scale, "condition-number bound 1/scale for B");
    sample->add_option("--out", opt.out, "output file");
    sample->add_option("--format", opt.format, "json|text");

    auto* nf = app.add_subcommand("normal-form", "normal-form triple for a configuration");
    nf->add_option("--config", opt.config_path, "SpectralConfig JSON")->required();
    nf->add_option("--signature", opt.signature, "pairs like \"(2,0)\" or \"(1,0),(0,1)\"");
    nf->add_option("--out", opt.out, "output file");
    nf->add_option("--format", opt.format, "json|text");

    auto* strata_cmd = app.add_subcommand("strata", "stable-region strata, degrees, branch complex");
    strata_cmd->add_option("--n", opt.n, "degrees of freedom (<= 6)")->required();
    strata_cmd->add_flag("--degrees", opt.degrees_table, "degree table over all regions");
    strata_cmd->add_option("--layer", opt.layer, "top|middle|base|all (degree table)");
    strata_cmd->add_flag("--poset", opt.poset, "stable-region face poset (default)");
    strata_cmd->add_flag("--branch-complex", opt.branch_complex, "top-layer branches and adjacency arcs");
    strata_cmd->add_option("--format", opt.format, "json|dot|text");
    strata_cmd->add_option("--out", opt.out, "output file");

    auto* assoc = app.add_subcommand("associahedron", "associahedron face lattice and its quotient");
    assoc->add_option("--m", opt.m, "letters (3..8)")->required();
    assoc->add_flag("--quotient", opt.quotient, "collapse to the stable region, with tally");
    assoc->add_option("--format", opt.format, "json|dot|text");
    assoc->add_option("--out", opt.out, "output file");

    auto* analyze = app.add_subcommand("analyze-path", "events and verdicts along a matrix path");
    analyze->add_option("--in", opt.in, "path JSON")->required();
    analyze->add_option("--kmax", opt.k_max, "pencil depth");
    analyze->add_option("--tol", opt.tol_bisect, "bisection interval width");
    analyze->add_option("--report,--out", opt.out, "report file");
    analyze->add_option("--format", opt.format, "json|text");
    add_tolerance_flags(analyze, opt);

    auto* diagram = app.add_subcommand("diagram", "n=2 stability diagram as SVG");
    diagram->add_option("--n", opt.n, "must be 2");
    diagram->add_option("--kmax", opt.diagram_kmax, "elliptic pencil depth (0 = off)");
    diagram->add_option("--in", opt.in, "optional path JSON overlay");
    diagram->add_option("--tol", opt.tol_bisect, "bisection interval width");
    diagram->add_option("--out", opt.out, "output file");
    add_tolerance_flags(diagram, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        return dispatch(app, opt);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const LimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
