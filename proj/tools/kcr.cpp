#include "CLI11.hpp"
#include "kcr/io.hpp"
#include "kcr/reduce3d.hpp"
#include "kcr/reduceplanar.hpp"
#include "kcr/solver.hpp"
#include "kcr/sumset.hpp"

#include <chrono>
#include <iostream>

using namespace kcr;

namespace {

// 0 all checks pass, 1 a check failed, 2 resource or configuration error
constexpr int kPass = 0, kFail = 1, kConfig = 2;

struct Options {
    RunConfig cfg;
    std::string delta = "full", limits, radius, kind = "gap", to, planted = "yes", witness, witness_out;
    long rows = 1, cols = 2;
    double density = 0.5;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void emit(const Options& o, const std::string& text) {
    if (o.cfg.output.empty() || o.cfg.output == "-") std::cout << text;
    else write_file(o.cfg.output, text);
}

const std::string& input(const Options& o, size_t i = 0) {
    if (o.cfg.inputs.size() <= i) throw std::invalid_argument(o.cfg.command + ": missing input file");
    return o.cfg.inputs[i];
}

GapInstance read_gap(const std::string& path) {
    auto p = parse_instance(read_file(path));
    if (!p.gap) throw std::invalid_argument(path + ": expected a gap file");
    return *p.gap;
}

RadiusMode radius_or(const Options& o, RadiusMode def) { return o.radius.empty() ? def : parse_radius_mode(o.radius); }

void print_report(const CertificateReport& r) {
    std::cout << r.kind << ": " << (r.verdict ? "pass" : "fail") << " (" << r.checks() << " checks, " << r.failures()
              << " failed)";
    if (!r.summary.empty()) std::cout << " " << r.summary;
    std::cout << "\n";
    for (const auto& c : r.records)
        if (!c.pass) std::cout << "  FAILED " << c.lemma << " " << c.id << " " << c.inputs << " margin " << c.margin << "\n";
}

int finish(const Options& o, CertificateReport r, std::chrono::steady_clock::time_point t0) {
    r.seconds = seconds_since(t0);
    r.config["command"] = o.cfg.command;
    r.config["delta"] = o.delta;
    if (!o.radius.empty()) r.config["radius_mode"] = o.radius;
    if (!o.cfg.suite.empty()) r.config["suite"] = o.cfg.suite;
    print_report(r);
    if (!o.cfg.output.empty()) write_file(o.cfg.output, write_report(r));
    return r.verdict ? kPass : kFail;
}

int cmd_gen(const Options& o) {
    const RunConfig& c = o.cfg;
    bool yes = o.planted == "yes";
    if (o.planted != "yes" && o.planted != "no") throw std::invalid_argument("--planted must be yes or no");
    if (o.kind == "conv") {
        auto a = gen_planted(c.n, yes, c.seed);
        emit(o, write_conv(a));
        auto s = brute_conv(a);
        std::cerr << "brute_conv: " << (s ? "solvable (" + std::to_string(s->i) + "," + std::to_string(s->j) + "," +
                                                std::to_string(s->k) + ")"
                                          : "unsolvable")
                  << "\n";
    } else if (o.kind == "gap") {
        auto x = gen_gap(c.n, yes, c.seed);
        emit(o, write_gap(x));
        std::cerr << "classify_gap: " << gap_tag_name(classify_gap(x).tag) << "\n";
    } else if (o.kind == "csp" || o.kind == "sumset") {
        auto csp = gen_csp(grid_block(o.rows, o.cols), c.n, o.density, c.seed);
        if (o.kind == "csp") {
            emit(o, write_csp(csp));
            std::cerr << "brute_csp: " << (brute_csp(csp) ? "satisfiable" : "unsatisfiable") << "\n";
        } else {
            auto s = csp_to_sumset(csp);
            emit(o, write_sumset(s));
            std::cerr << "brute_sumset: " << (brute_sumset(s) ? "satisfiable" : "unsatisfiable") << "\n";
        }
    } else {
        throw std::invalid_argument("gen: unknown --kind " + o.kind);
    }
    return kPass;
}

int cmd_reduce(const Options& o) {
    std::string text = read_file(input(o));
    std::string kind = file_kind(text);
    std::optional<CoverWitness> w;
    GeometricFile g;
    if (kind == "conv") {
        if (!o.to.empty() && o.to != "gap") throw std::invalid_argument("reduce: a conv file only reduces to gap");
        auto x = conv_to_gap(*parse_instance(text).conv);
        emit(o, write_gap(x));
        std::cerr << "gap n=" << x.n << " classify_gap: " << gap_tag_name(classify_gap(x).tag) << "\n";
        return kPass;
    } else if (kind == "gap") {
        auto x = *parse_instance(text).gap;
        auto s = o.cfg.scale(x.n);
        auto cls = classify_gap(x);
        if (o.to == "3d") {
            auto t = build_2center3d(x, s, radius_or(o, RadiusMode::Cube3D));
            g = to_file(t);
            if (cls.witness) {
                auto p = witness_3d(t, *cls.witness);
                w = CoverWitness{{p.c_plus, p.c_minus}};
            }
        } else if (o.to == "6" || o.to == "10") {
            auto m = radius_or(o, RadiusMode::Standard);
            auto p = o.to == "6" ? build_6center(x, s, m) : build_10center(x, s, m);
            g = to_file(p);
            if (cls.witness) w = CoverWitness{witness_planar(p, *cls.witness).centers};
        } else {
            throw std::invalid_argument("reduce: --to must be 3d, 6 or 10 for a gap file");
        }
    } else if (kind == "sumset") {
        if (!o.to.empty() && o.to != "kcenter2d") throw std::invalid_argument("reduce: a sumset file only reduces to kcenter2d");
        auto s = parse_sumset(text);
        auto k = build_kcenter2d(s, o.cfg.scale(sumset_range(s)), radius_or(o, RadiusMode::Standard));
        g = to_file(k);
        if (auto sol = brute_sumset(s)) w = witness_kcenter2d(k, *sol).centers;
    } else if (kind == "csp") {
        emit(o, write_sumset(csp_to_sumset(parse_csp(text))));
        return kPass;
    } else {
        throw std::invalid_argument("reduce: unsupported input kind " + kind);
    }
    emit(o, write_geometric(g));
    std::cerr << g.header["construction"] << ": " << g.inst.points.size() << " points, k=" << g.inst.k;
    for (const char* key : {"t", "Delta"})
        if (g.header.count(key)) std::cerr << ", " << key << "=" << g.header[key];
    std::cerr << "\n";
    if (!o.witness_out.empty()) {
        if (!w) throw std::invalid_argument("reduce: the input has no solution, so there is no witness to emit");
        write_file(o.witness_out, write_witness(*w, g.inst.dim));
    }
    return kPass;
}

int cmd_solve(const Options& o) {
    auto g = parse_geometric(read_file(input(o)));
    auto d = decide_cover(g.inst, o.cfg.limits);
    std::cout << cover_tag_name(d.tag) << " nodes=" << d.stats.nodes << " subsets=" << d.stats.subsets
              << " candidates=" << d.stats.candidates;
    if (!d.detail.empty()) std::cout << " (" << d.detail << ")";
    std::cout << "\n";
    if (d.tag == CoverTag::ResourceExceeded) return kConfig;
    if (d.tag == CoverTag::Coverable && !o.cfg.output.empty()) write_file(o.cfg.output, write_witness(d.witness, g.inst.dim));
    return kPass;
}

CertificateReport run_suite(const Options& o, const std::string& path) {
    const std::string& tag = o.cfg.suite;
    auto x = read_gap(path);
    auto s = o.cfg.scale(x.n);
    auto m = radius_or(o, RadiusMode::Standard);
    if (tag == "covering-basic") return suite_covering_basic(x, x, x, s, m);
    if (tag == "d4-covering") return suite_d4_covering(x, x, x, s, m);
    if (tag == "consistency") return suite_consistency(x, s, m);
    if (tag == "b12") return suite_b12(x, s, m);
    if (tag == "shared-edge") return suite_shared_edge(x, x, x, s, m);
    if (tag == "anchor-force") return anchor_force_check(o.to == "10" ? build_10center(x, s, m) : build_6center(x, s, m));
    if (tag == "ranges" || tag == "monotone") {
        auto t = build_2center3d(x, s, radius_or(o, RadiusMode::Cube3D));
        auto cls = classify_gap(x);
        if (!cls.witness) throw std::invalid_argument("--suite " + tag + ": needs a YES instance");
        auto w = witness_3d(t, *cls.witness);
        return tag == "ranges" ? ranges_check(t, w.c_plus, w.c_minus) : monotone_distance_check(t, w);
    }
    throw std::invalid_argument("unknown --suite " + tag);
}

int cmd_verify(const Options& o) {
    auto t0 = std::chrono::steady_clock::now();
    if (!o.cfg.suite.empty()) return finish(o, run_suite(o, input(o)), t0);
    if (o.witness.empty()) throw std::invalid_argument("verify: give --witness or --suite");
    auto g = parse_geometric(read_file(input(o)));
    auto w = parse_witness(read_file(o.witness));
    auto v = verify_witness(g.inst, w);
    CertificateReport r;
    r.kind = "witness";
    r.add({"cover", "witness-cover", std::to_string(g.inst.points.size()) + "-points", v.ok, fe_summary(v.worst)});
    r.summary = "worst point " + std::to_string(v.worst_point);
    return finish(o, r, t0);
}

int cmd_certify(const Options& o) {
    auto t0 = std::chrono::steady_clock::now();
    std::string text = read_file(input(o));
    std::string kind = file_kind(text);
    if (kind == "sumset") {
        auto s = parse_sumset(text);
        auto k = build_kcenter2d(s, o.cfg.scale(sumset_range(s)), radius_or(o, RadiusMode::Standard));
        auto d = decide_split_cover(k);
        CertificateReport r;
        r.kind = "certify-kcenter2d";
        bool agree = d.feasible == bool(brute_sumset(s));
        bool decoded_ok = !d.feasible || (d.decoded && is_sumset_solution(s, *d.decoded));
        r.add({"split-search", "sumset-equivalence", d.feasible ? "feasible" : "infeasible", agree && decoded_ok,
               std::to_string(d.meb_evaluations)});
        r.summary = d.feasible ? "feasible split" : "no feasible split";
        return finish(o, r, t0);
    }
    auto x = *parse_instance(text).gap;
    auto s = o.cfg.scale(x.n);
    CertificateReport r;
    if (o.to == "3d") {
        auto c = certify_no_3d(build_2center3d(x, s, radius_or(o, RadiusMode::Cube3D)));
        r = c.report;
        if (c.decoded) r.summary = "feasible split decodes to (" + std::to_string(c.decoded->i) + "," +
                                   std::to_string(c.decoded->j) + "," + std::to_string(c.decoded->k) + ")";
        else r.summary = "no feasible split";
    } else if (o.to == "6" || o.to == "10") {
        auto m = radius_or(o, RadiusMode::Standard);
        auto c = certify_no_planar(o.to == "6" ? build_6center(x, s, m) : build_10center(x, s, m));
        r = c.report;
        if (c.decoded) r.summary = "feasible split decodes to (" + std::to_string(c.decoded->i) + "," +
                                   std::to_string(c.decoded->j) + "," + std::to_string(c.decoded->k) + ")";
        else r.summary = "no feasible split";
    } else {
        throw std::invalid_argument("certify: --to must be 3d, 6 or 10");
    }
    return finish(o, r, t0);
}

int cmd_render(const Options& o) {
    auto g = parse_geometric(read_file(input(o)));
    RenderOptions ro;
    if (!o.witness.empty()) ro.witness = parse_witness(read_file(o.witness));
    if (o.cfg.output.empty()) throw std::invalid_argument("render: -o is required");
    try {
        write_file(o.cfg.output, render_svg(g, ro));
    } catch (const Render3DUnsupported& e) {
        std::string base = o.cfg.output;
        if (base.size() > 4 && base.substr(base.size() - 4) == ".svg") base.resize(base.size() - 4);
        std::cerr << e.what() << "; writing three projections\n";
        for (const auto& [name, svg] : render_projections(g, ro)) write_file(base + "-" + name + ".svg", svg);
    }
    return kPass;
}

int cmd_report(const Options& o) {
    bool all = true;
    for (const auto& path : o.cfg.inputs) {
        auto r = parse_report(read_file(path));
        print_report(r);
        all = all && r.verdict;
    }
    if (o.cfg.inputs.empty()) throw std::invalid_argument("report: no report files given");
    return all ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-center reduction toolkit"};
    app.require_subcommand(1);
    Options o;
    auto shared = [&](CLI::App* sub) {
        sub->add_option("inputs", o.cfg.inputs, "input files");
        sub->add_option("-o,--output", o.cfg.output, "output file");
        sub->add_option("--n", o.cfg.n, "instance size")->envname("KCR_N");
        sub->add_option("--seed", o.cfg.seed, "random seed")->envname("KCR_SEED");
        sub->add_option("--delta", o.delta, "'full' for (10n)^-10, or a rational for the relaxed mode")->envname("KCR_DELTA");
        sub->add_option("--radius-mode", o.radius, "standard, gap or cube3d")->envname("KCR_RADIUS_MODE");
        sub->add_option("--limits", o.limits, "candidates[,nodes] for the cover solver")->envname("KCR_LIMITS");
        sub->add_option("--suite", o.cfg.suite, "lemma suite tag")->envname("KCR_SUITE");
        sub->add_option("--to", o.to, "target construction: gap, 3d, 6, 10, kcenter2d");
        sub->add_option("--witness", o.witness, "witness file");
    };
    auto* gen = app.add_subcommand("gen", "generate an instance");
    shared(gen);
    gen->add_option("--kind", o.kind, "conv, gap, csp or sumset");
    gen->add_option("--planted", o.planted, "yes or no");
    gen->add_option("--rows", o.rows, "grid rows (csp, sumset)");
    gen->add_option("--cols", o.cols, "grid columns (csp, sumset)");
    gen->add_option("--density", o.density, "relation density (csp, sumset)");
    auto* reduce = app.add_subcommand("reduce", "build a geometric instance");
    shared(reduce);
    reduce->add_option("--witness-out", o.witness_out, "write the construction witness of a YES input");
    for (const char* name : {"solve", "verify", "certify", "render", "report"}) shared(app.add_subcommand(name));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kConfig;
    }
    try {
        o.cfg.command = app.get_subcommands().front()->get_name();
        o.cfg.set_delta(o.delta);
        if (!o.limits.empty()) o.cfg.set_limits(o.limits);
        if (!o.radius.empty()) o.cfg.radius = parse_radius_mode(o.radius);
        const std::string& c = o.cfg.command;
        if (c == "gen") return cmd_gen(o);
        if (c == "reduce") return cmd_reduce(o);
        if (c == "solve") return cmd_solve(o);
        if (c == "verify") return cmd_verify(o);
        if (c == "certify") return cmd_certify(o);
        if (c == "render") return cmd_render(o);
        if (c == "report") return cmd_report(o);
    } catch (const ResourceExceeded& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfig;
    }
    return kConfig;
}
