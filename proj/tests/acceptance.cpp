// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "foliage/foliage.hpp"
#include "report.hpp"
#include "support/oracles.hpp"

using namespace foliage;
using namespace foliage::poly;

namespace {

constexpr double time_limit_seconds = 5.0;
constexpr int corpus_size = 150;
constexpr int corpus_minimum = 100;
constexpr unsigned corpus_degree = 6;
constexpr int json_runs = 10;

struct Outcome {
    bool pass = true;
    std::string detail;

    void check(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

OneFormGerm germ(const BiPoly& p, const BiPoly& q) { return OneFormGerm::saturated(p, q); }

OneFormGerm omega(unsigned k, long lambda) {
    const BiPoly l1 = c(lambda + 1);
    return germ(y() * (c(2) * x().pow(2 * k - 2) + c(2) * l1 * x() * x() * y().pow(k - 2) - y().pow(k - 1)),
                x() * (y().pow(k - 1) - l1 * x() * x() * y().pow(k - 2) - x().pow(2 * k - 2)));
}

template <class T>
std::string str(const std::vector<T>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

Outcome omega_examples() {
    Outcome o;
    for (unsigned k = 3; k <= 5; ++k) {
        const auto start = std::chrono::steady_clock::now();
        const ResolutionTree t = reduce(omega(k, 1));
        const ValuationReport r = verify(t);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const std::string tag = "k=" + std::to_string(k) + ": ";
        o.check(secs < time_limit_seconds, tag + "took " + std::to_string(secs) + " s");
        if (r.components.size() != 2) {
            o.check(false, tag + "expected two components");
            continue;
        }
        const auto& d1 = r.components[0];
        const auto& d2 = r.components[1];
        o.check(d1.dicritical && !d2.dicritical, tag + "shape");
        o.check(d1.nu_F == k + 1 && d2.nu_F == 2 * k, tag + "nu_F");
        o.check(d1.xi == k - 1 && d2.xi == 2 * k - 2, tag + "xi");
        o.check(d1.nu_Psi == 2 && d2.nu_Psi == 3, tag + "nu_Psi");
        o.check(d1.theorem_ok && d2.theorem_ok, tag + "theorem");
        unsigned stage1 = 0;
        for (const auto& p : t.points())
            if (p.stage == 1 && is_non_reduced(p.cls)) ++stage1;
        o.check(stage1 == 1, tag + "non-reduced points at stage 1: " + std::to_string(stage1));
    }
    return o;
}

Outcome classical_oracles() {
    Outcome o;
    {
        const ResolutionTree t = reduce(germ(-y(), x()));
        const ValuationReport r = verify(t);
        o.check(r.components.size() == 1 && r.components[0].dicritical, "radial shape");
        if (!r.components.empty())
            o.check(r.components[0].nu_F == 2 && r.components[0].nu_Psi == 2 && r.components[0].xi == 0, "radial values");
    }
    {
        const ResolutionTree t = reduce(germ(c(-3) * x() * x(), c(2) * y()));
        const ValuationReport r = verify(t);
        std::vector<unsigned> nu_f, nu_direct, xi;
        std::vector<long> nu_psi, nu_curve;
        bool invariant = true;
        for (const auto& c : r.components) {
            nu_f.push_back(c.nu_F);
            nu_direct.push_back(c.nu_F_direct);
            nu_psi.push_back(c.nu_Psi);
            xi.push_back(c.xi);
            nu_curve.push_back(oracle::order_along(t, c.id, y() * y() - x().pow(3)));
            invariant = invariant && !c.dicritical;
        }
        o.check(invariant && r.components.size() == 3, "cusp shape");
        o.check(nu_f == std::vector<unsigned>{1, 2, 5}, "cusp nu_F " + str(nu_f));
        o.check(nu_direct == nu_f, "cusp nu_F_direct " + str(nu_direct));
        o.check(nu_psi == std::vector<long>{2, 3, 6}, "cusp nu_Psi " + str(nu_psi));
        o.check(nu_curve == nu_psi, "cusp order of y^2 - x^3 " + str(nu_curve));
        o.check(xi == std::vector<unsigned>{0, 0, 0}, "cusp xi " + str(xi));
        o.check(r.second_type, "cusp second type");
    }
    for (unsigned k = 1; k <= 8; ++k) {
        const OneFormGerm g = germ(-y() * (c(1) + x().pow(k)), x().pow(k + 1));
        const bool sn = std::holds_alternative<SaddleNode>(classify(g));
        o.check(sn && weak_index_along(g, CoordLine::y_zero) == k + 1, "saddle-node k=" + std::to_string(k));
    }
    return o;
}

struct Corpus {
    std::vector<OneFormGerm> forms;
    int skipped = 0;
};

Corpus build_corpus() {
    Corpus c;
    oracle::FormGenerator gen(2024);
    int drawn = 0;
    while (static_cast<int>(c.forms.size()) < corpus_size && drawn < 20 * corpus_size) {
        ++drawn;
        auto [p, q] = gen.form(corpus_degree);
        if (p.is_zero() && q.is_zero()) continue;
        const OneFormGerm g = germ(p, q);
        if (!is_non_reduced(classify(g))) continue;
        try {
            reduce(g);
            c.forms.push_back(g);
        } catch (const UnsupportedFieldError&) {
            ++c.skipped;
        }
    }
    return c;
}

Outcome property_suite(const Corpus& corpus) {
    Outcome o;
    int components = 0;
    for (const auto& g : corpus.forms) {
        const ResolutionTree t = reduce(g);
        const ValuationReport r = verify(t);
        for (const auto& c : r.components) {
            ++components;
            if (c.nu_F != c.nu_F_direct) o.check(false, g.to_string() + ": nu_F_along != nu_F_direct");
            if (!c.theorem_ok) o.check(false, g.to_string() + ": theorem");
            if (!c.corollary_ok) o.check(false, g.to_string() + ": corollary");
        }
        if (!r.root_ok) o.check(false, g.to_string() + ": root identity");
        for (PointId id : t.final_points())
            if (is_non_reduced(t.point(id).cls)) o.check(false, g.to_string() + ": non-reduced final point");
    }
    o.check(static_cast<int>(corpus.forms.size()) >= corpus_minimum, "corpus too small");
    std::ostringstream os;
    os << corpus.forms.size() << " forms, " << components << " components, " << corpus.skipped
       << " skipped (irrational points)";
    if (o.pass) o.detail = os.str();
    else o.detail = os.str() + "; " + o.detail;
    return o;
}

using Signature = std::map<std::string, std::vector<long>>;

Signature signature(const ResolutionTree& t, unsigned offset) {
    Signature s;
    const ValuationReport r = verify(t, offset);
    for (const auto& c : r.components)
        s[t.address_string(t.component(c.id).birth)] = {static_cast<long>(c.nu_F), c.nu_Psi, static_cast<long>(c.xi),
                                                         static_cast<long>(c.rho), static_cast<long>(c.valence)};
    return s;
}

Outcome choice_independence(const Corpus& corpus) {
    Outcome o;
    ReduceOptions reversed;
    reversed.order = BlowupOrder::highest_id_first;
    for (const auto& g : corpus.forms) {
        const ResolutionTree a = reduce(g);
        const ResolutionTree b = reduce(g, reversed);
        const Signature base = signature(a, 0);
        if (signature(a, 3) != base) o.check(false, g.to_string() + ": curvetta offset");
        if (signature(b, 0) != base) o.check(false, g.to_string() + ": blow-up order");
        if (signature(b, 5) != base) o.check(false, g.to_string() + ": order and offset");
    }
    return o;
}

Outcome projective_audit() {
    Outcome o;
    const InputSpec spec = parse_input("A = y*z\nB = z*(y - x)\nC = -y^2\n");
    const AuditReport r = audit(spec.form);
    o.check(r.degree == 1, "degree");
    o.check(r.locus_complete, "locus incomplete");
    o.check(r.all_resolved, "unresolved point");
    o.check(r.lhs <= 0 && r.inequality_holds, "LHS = " + std::to_string(r.lhs));
    o.check(r.consistent, "term mismatch");
    for (const auto& p : r.points) o.check(p.terms_agree, to_string(p.point) + ": terms differ");
    if (o.pass) o.detail = "LHS " + std::to_string(r.lhs) + " <= 0 over " + std::to_string(r.points.size()) +
                           " points; internal consistency only (" + r.disclaimer + ")";
    return o;
}

std::string capture(const std::string& cmd, int& code) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        code = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

Outcome json_stability() {
    Outcome o;
    const std::string cmd = std::string(FOLIAGE_CLI) + " verify --format json " + FOLIAGE_SAMPLES + "/omega3.txt";
    std::string first;
    for (int i = 0; i < json_runs; ++i) {
        int code = 0;
        const std::string out = capture(cmd, code);
        o.check(code == 0, "exit code " + std::to_string(code));
        if (i == 0) first = out;
        else if (out != first) o.check(false, "run " + std::to_string(i) + " differs");
    }
    o.check(!first.empty(), "empty output");
    // the same report in-process
    const ResolutionTree t = reduce(omega(3, 1));
    const std::string again = report::valuation_json(verify(t)).dump(2) + "\n";
    o.check(again == first, "in-process report differs from the CLI");
    return o;
}

}  // namespace

int main() {
    bool all = true;
    const auto report_line = [&](int n, const std::string& name, const std::function<Outcome()>& f) {
        Outcome o;
        try {
            o = f();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << n << ". " << name;
        if (!o.detail.empty()) std::cout << "  [" << o.detail << "]";
        std::cout << std::endl;
    };
    report_line(1, "family examples k = 3, 4, 5", omega_examples);
    report_line(2, "radial, cusp and saddle-node oracles", classical_oracles);
    const Corpus corpus = build_corpus();
    report_line(3, "identities on the generated corpus", [&] { return property_suite(corpus); });
    report_line(4, "independence of curvetta placement and blow-up order", [&] { return choice_independence(corpus); });
    report_line(5, "projective audit of a degree-1 example", projective_audit);
    report_line(6, "byte-stable JSON over repeated runs", json_stability);
    return all ? 0 : 1;
}
