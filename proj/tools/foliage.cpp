// Command-line front end: resolve, verify, balanced, audit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "foliage/foliage.hpp"
#include "report.hpp"

namespace {

using namespace foliage;

enum Exit { ok = 0, usage = 1, violation = 2, unsupported = 3 };

struct Options {
    std::string input;
    std::string format = "table";
    unsigned max_depth = 64;
    std::vector<std::string> params;
    std::string points;
    unsigned offset = 0;
};

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

Bindings parse_params(const std::vector<std::string>& params) {
    Bindings b;
    for (const auto& s : params) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw std::runtime_error("--param expects NAME=RAT, got '" + s + "'");
        b[s.substr(0, eq)] = parse_rational(s.substr(eq + 1));
    }
    return b;
}

void emit(const Options& o, const report::Json& j, const std::string& table) {
    if (o.format == "json")
        std::cout << j.dump(2) << '\n';
    else
        std::cout << table;
}

OneFormGerm local_germ(const InputSpec& spec) {
    if (spec.kind != InputKind::local) throw std::runtime_error("this command expects a germ (P = ..., Q = ...)");
    return OneFormGerm::saturated(spec.p, spec.q);
}

int run(const std::string& command, const Options& o) {
    const InputSpec spec = parse_input(slurp(o.input), parse_params(o.params));
    ReduceOptions ro;
    ro.max_depth = o.max_depth;

    if (command == "audit") {
        if (spec.kind != InputKind::projective) throw std::runtime_error("audit expects a projective form (A, B, C)");
        const ProjForm form = validate(spec.form);
        const SingularLocus locus = find_rational_singularities(form);
        std::vector<ProjPoint> pts = o.points.empty() ? locus.points : parse_points(slurp(o.points));
        bool complete = locus.complete;
        for (const auto& p : locus.points)
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) complete = false;
        const AuditReport r = audit(form, pts, complete, ro);
        emit(o, report::audit_json(r), report::audit_table(r));
        for (const auto& p : r.points)
            if (!p.error.empty()) std::cerr << "point " << to_string(p.point) << ": " << p.error << '\n';
        bool points_ok = true;
        for (const auto& p : r.points)
            if (p.report && !p.report->all_ok()) points_ok = false;
        if (!r.all_resolved) return unsupported;
        return r.consistent && points_ok && r.inequality_holds ? ok : violation;
    }

    const ResolutionTree tree = reduce(local_germ(spec), ro);
    if (command == "resolve") {
        emit(o, report::tree_json(tree), report::tree_table(tree));
        return ok;
    }
    const SeparatrixDivisor div = balanced_divisor(tree, o.offset);
    if (command == "balanced") {
        emit(o, report::divisor_json(tree, div), report::divisor_table(tree, div));
        return report::balanced_ok(tree, div) ? ok : violation;
    }
    const ValuationReport r = verify(tree, div);
    emit(o, report::valuation_json(r), report::valuation_table(r));
    return r.all_ok() ? ok : violation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reduction of singularities of plane foliations and divisor valuations"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"resolve", "Blow up until reduced and print the resolution tree"},
        {"verify", "Print divisor valuations and check the valuation identities"},
        {"balanced", "Print a balanced divisor of separatrices"},
        {"audit", "Audit a projective foliation at its singular points"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("input", o.input, "Input file, '-' for stdin")->required();
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--max-depth", o.max_depth, "Maximum blow-up depth");
        sub->add_option("--param", o.params, "Parameter binding NAME=RAT")->take_all();
        if (name == "audit") sub->add_option("--points", o.points, "File listing singular points [a:b:c]");
        if (name == "verify" || name == "balanced")
            sub->add_option("--offset", o.offset, "Shift of the curvetta placement on dicritical components");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : usage;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, o);
    } catch (const UnsupportedFieldError& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return unsupported;
    } catch (const ResolutionDepthError& e) {
        std::cerr << "unsupported: " << e.what() << " after " << e.partial_tree().blowup_count() << " blow-ups\n";
        return unsupported;
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
}
