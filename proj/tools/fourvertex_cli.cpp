// Command-line front end: analyze | evolute | decompose | fuzz | sample | render
//
// Exit codes: 0 ok, 1 suite failure, 2 parse error, 3 precondition failure.
// FOURVERTEX_SEED overrides the default fuzz seed.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "fourvertex/io.hpp"

using namespace fourvertex;

namespace {

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw GeometryError(Fault::ParseError, "cannot write " + path);
    out << text;
}

void emit_json(const Json& j, const std::string& path) {
    write_text(path, j.dump(2) + "\n");
}

GenericityCheck parse_genericity(const std::string& s) {
    if (s == "full") return GenericityCheck::Full;
    if (s == "consecutive") return GenericityCheck::ConsecutiveOnly;
    throw GeometryError(Fault::ParseError,
                        "--genericity must be 'full' or 'consecutive'");
}

int run_analyze(const std::string& input, const std::string& out,
                const std::string& genericity, bool lenient) {
    Polygon p = parse_polygon_file(input).polygon();
    AnalyzeOptions opt;
    opt.genericity = parse_genericity(genericity);
    opt.lenient_ties = lenient;
    emit_json(report_to_json(analyze(p, opt)), out);
    return 0;
}

int run_evolute(const std::string& input, const std::string& out,
                const std::string& svg_out, bool require_winding) {
    Polygon p = parse_polygon_file(input).polygon();
    Evolute e = evolute(p);
    if (require_winding && (e.degenerate || e.distinct_cycle().size() < 3))
        throw GeometryError(Fault::DegenerateEvolute,
                            "winding requested on a degenerate evolute");
    emit_json(evolute_to_json(p, e), out);
    if (!svg_out.empty()) {
        RenderSpec spec;
        write_text(svg_out, render_svg(p, e, spec));
    }
    return 0;
}

int run_decompose(const std::string& input, const std::vector<std::size_t>& diag,
                  bool audit, const std::string& out) {
    Polygon p = parse_polygon_file(input).polygon();
    if (audit) {
        AnalyzeOptions fast;
        fast.genericity = GenericityCheck::ConsecutiveOnly;
        fast.with_bose = false;
        emit_json(audit_to_json(audit_all_diagonals(p, fast)), out);
        return 0;
    }
    if (diag.size() != 2)
        throw GeometryError(Fault::ParseError,
                            "--diagonal needs two vertex indices");
    Decomposition d = decompose(p, diag[0], diag[1]);
    emit_json(inequality_report_to_json(verify_inequalities(d)), out);
    return 0;
}

int run_fuzz(const std::string& range, std::size_t count, std::uint64_t seed,
             const std::vector<std::string>& tags, const std::string& fixtures,
             const std::string& out) {
    SuiteConfig cfg;
    auto dots = range.find("..");
    if (dots == std::string::npos)
        throw GeometryError(Fault::ParseError, "--n must look like 4..12");
    cfg.n_min = std::stoul(range.substr(0, dots));
    cfg.n_max = std::stoul(range.substr(dots + 2));
    if (cfg.n_min < 3 || cfg.n_max < cfg.n_min)
        throw GeometryError(Fault::ParseError, "bad --n range");
    cfg.count = count;
    cfg.seed = seed;
    cfg.tags = tags;
    cfg.fixtures_path = fixtures;
    SuiteReport rep = run_suite(cfg);
    for (const auto& e : rep.entries) {
        std::cout << (e.passed() ? "PASS " : e.skipped ? "SKIP " : "FAIL ")
                  << e.tag << "  cases=" << e.cases
                  << " failures=" << e.failures << "\n";
        for (const auto& note : e.notes) std::cout << "     note: " << note << "\n";
        for (const auto& w : e.witnesses) {
            std::cout << "     witness: " << w.description << "\n";
            std::istringstream csv(w.polygon_csv);
            std::string line;
            while (std::getline(csv, line))
                std::cout << "       " << line << "\n";
        }
    }
    std::cout << "elapsed: " << rep.elapsed_seconds << " s\n";
    if (!out.empty()) emit_json(suite_to_json(rep), out);
    return rep.all_passed() ? 0 : 1;
}

int run_sample(const std::string& kind, double a, double b, int k,
               double amplitude, std::size_t m, const std::string& out) {
    Polygon p = kind == "ellipse"
                    ? sample_ellipse(EllipseParams{a, b}, m)
                    : sample_flower(FlowerParams{k, amplitude}, m);
    write_text(out, polygon_to_csv(p));
    return 0;
}

int run_render(const std::string& input, const std::string& out,
               bool show_evolute, bool show_circles, bool label_vertices,
               double canvas) {
    Polygon p = parse_polygon_file(input).polygon();
    RenderSpec spec;
    spec.show_evolute = show_evolute;
    spec.show_circles = show_circles;
    spec.label_vertices = label_vertices;
    spec.canvas = canvas;
    std::optional<Evolute> e;
    if (show_evolute) e = evolute(p);
    AnalyzeOptions opt;
    opt.genericity = GenericityCheck::ConsecutiveOnly;
    opt.with_bose = false;
    ExtremalityReport rep = analyze(p, opt);
    write_text(out, render_svg(p, e, spec, &rep));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete four-vertex toolkit: extremality, evolutes, "
                 "triangulations, decompositions"};
    app.require_subcommand(1);

    std::string input, out, svg_out, genericity = "full";
    bool lenient = false, require_winding = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "extremality report (JSON)");
    analyze_cmd->add_option("input", input, "polygon file (.csv or .json)")
        ->required();
    analyze_cmd->add_option("--json", out, "output path (default stdout)");
    analyze_cmd->add_option("--genericity", genericity, "full | consecutive");
    analyze_cmd->add_flag("--lenient-ties", lenient,
                          "tied neighboring radii count as extremal");

    auto* evolute_cmd =
        app.add_subcommand("evolute", "evolute centers, windings, cusps (JSON)");
    evolute_cmd->add_option("input", input, "polygon file")->required();
    evolute_cmd->add_option("--json", out, "output path (default stdout)");
    evolute_cmd->add_option("--svg", svg_out, "also render polygon + evolute");
    evolute_cmd->add_flag("--winding", require_winding,
                          "fail (exit 3) if the evolute winding is undefined");

    std::vector<std::size_t> diag;
    bool audit = false;
    auto* decompose_cmd =
        app.add_subcommand("decompose", "diagonal cut bounds (JSON)");
    decompose_cmd->add_option("input", input, "polygon file")->required();
    decompose_cmd->add_option("--diagonal", diag,
                              "two vertex indices (0-based)")
        ->expected(2);
    decompose_cmd->add_flag("--audit", audit, "report every valid diagonal");
    decompose_cmd->add_option("--json", out, "output path (default stdout)");

    std::string range = "4..12", fixtures;
    std::size_t count = 500, m = 64;
    std::uint64_t seed = 20240101;
    if (const char* env = std::getenv("FOURVERTEX_SEED"))
        seed = std::strtoull(env, nullptr, 10);
    std::vector<std::string> tags;
    auto* fuzz_cmd = app.add_subcommand(
        "fuzz", "run the randomized theorem suite; exit 1 on any failure");
    fuzz_cmd->add_option("--n", range, "vertex count range, e.g. 4..12");
    fuzz_cmd->add_option("--count", count, "convex draws (other pools scale)");
    fuzz_cmd->add_option("--seed", seed, "suite seed (FOURVERTEX_SEED honored)");
    fuzz_cmd->add_option("--tags", tags, "run only these tags")->delimiter(',');
    fuzz_cmd->add_option("--fixtures", fixtures, "pinned fixture file");
    fuzz_cmd->add_option("--json", out, "also write the JSON report");

    std::string kind = "ellipse";
    double a_param = 1.0, b_param = 0.63, amplitude = 0.01;
    int k_param = 6;
    auto* sample_cmd =
        app.add_subcommand("sample", "sample a parametric demo curve to CSV");
    sample_cmd->add_option("--kind", kind, "ellipse | flower")
        ->check(CLI::IsMember({"ellipse", "flower"}));
    sample_cmd->add_option("--a", a_param, "ellipse x semi-axis");
    sample_cmd->add_option("--b", b_param, "ellipse y semi-axis");
    sample_cmd->add_option("--k", k_param, "flower petal frequency");
    sample_cmd->add_option("--amplitude", amplitude, "flower radial amplitude");
    sample_cmd->add_option("-m,--samples", m, "sample count (>= 8)");
    sample_cmd->add_option("-o,--out", out, "output path (default stdout)");

    bool show_evolute = false, show_circles = false, label_vertices = false;
    double canvas = 640.0;
    auto* render_cmd = app.add_subcommand("render", "SVG drawing");
    render_cmd->add_option("input", input, "polygon file")->required();
    render_cmd->add_option("-o,--out", out, "output path (default stdout)");
    render_cmd->add_flag("--show-evolute", show_evolute, "draw the evolute");
    render_cmd->add_flag("--show-circles", show_circles,
                         "draw neighboring circumcircles");
    render_cmd->add_flag("--label-vertices", label_vertices, "index labels");
    render_cmd->add_option("--canvas", canvas, "canvas size in px");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze_cmd))
            return run_analyze(input, out, genericity, lenient);
        if (app.got_subcommand(evolute_cmd))
            return run_evolute(input, out, svg_out, require_winding);
        if (app.got_subcommand(decompose_cmd))
            return run_decompose(input, diag, audit, out);
        if (app.got_subcommand(fuzz_cmd))
            return run_fuzz(range, count, seed, tags, fixtures, out);
        if (app.got_subcommand(sample_cmd))
            return run_sample(kind, a_param, b_param, k_param, amplitude, m, out);
        if (app.got_subcommand(render_cmd))
            return run_render(input, out, show_evolute, show_circles,
                              label_vertices, canvas);
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what();
        if (!e.witness().empty()) {
            std::cerr << " [witness:";
            for (auto i : e.witness()) std::cerr << " " << i;
            std::cerr << "]";
        }
        std::cerr << "\n";
        return e.fault() == Fault::ParseError ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
