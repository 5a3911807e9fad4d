#pragma once

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "foliage/foliage.hpp"

namespace foliage::report {

using Json = nlohmann::ordered_json;

/// Components are shown 1-based, points 0-based (p0 is the root).
inline std::string component_label(ComponentId id) { return "D" + std::to_string(id + 1); }

inline Json component_ref(const std::optional<ComponentId>& c) {
    return c ? Json(*c + 1) : Json(nullptr);
}

inline Json param_json(const Param& g) { return Json{{"x", g.x.to_string("t")}, {"y", g.y.to_string("t")}}; }

inline Json tree_json(const ResolutionTree& tree) {
    Json j;
    j["germ"] = tree.root_germ().to_string();
    j["blowups"] = tree.blowup_count();
    Json points = Json::array();
    for (const auto& p : tree.points()) {
        Json e;
        e["id"] = p.id;
        e["address"] = tree.address_string(p.id);
        e["stage"] = p.stage;
        e["parent"] = p.parent ? Json(*p.parent) : Json(nullptr);
        e["chart"] = p.parent ? Json(p.chart.to_string()) : Json(nullptr);
        e["on_x_zero"] = component_ref(p.on_x_zero);
        e["on_y_zero"] = component_ref(p.on_y_zero);
        e["class"] = class_name(p.cls);
        e["germ"] = p.germ.to_string();
        e["blown_up"] = p.is_center();
        e["exceptional"] = component_ref(p.exceptional);
        points.push_back(std::move(e));
    }
    j["points"] = std::move(points);
    Json comps = Json::array();
    for (const auto& c : tree.components()) {
        Json e;
        e["id"] = c.id + 1;
        e["birth"] = c.birth;
        e["dicritical"] = c.dicritical;
        e["rho"] = c.rho;
        e["val"] = c.valence;
        e["epsilon"] = c.epsilon;
        Json nb = Json::array();
        for (ComponentId n : c.neighbours) nb.push_back(n + 1);
        e["neighbours"] = std::move(nb);
        comps.push_back(std::move(e));
    }
    j["components"] = std::move(comps);
    Json sn = Json::array();
    for (const auto& s : tangent_saddle_nodes(tree))
        sn.push_back(Json{{"point", s.point}, {"component", s.component + 1}, {"weak_index", s.weak_index}});
    j["tangent_saddle_nodes"] = std::move(sn);
    return j;
}

inline Json valuation_json(const ValuationReport& r) {
    Json j;
    Json comps = Json::array();
    for (const auto& c : r.components) {
        comps.push_back(Json{{"id", c.id + 1},
                             {"dicritical", c.dicritical},
                             {"rho", c.rho},
                             {"val", c.valence},
                             {"epsilon", c.epsilon},
                             {"nu_F", c.nu_F},
                             {"nu_F_direct", c.nu_F_direct},
                             {"nu_Psi", c.nu_Psi},
                             {"xi", c.xi},
                             {"theorem_ok", c.theorem_ok},
                             {"corollary_ok", c.corollary_ok}});
    }
    j["components"] = std::move(comps);
    j["root"] = Json{{"nu_p", r.nu_p},
                     {"nu_B", r.nu_B},
                     {"xi_p", r.xi_p},
                     {"second_type", r.second_type},
                     {"root_ok", r.root_ok}};
    return j;
}

struct BalanceRow {
    ComponentId component;
    unsigned valence;
    long sum;
    long target;
    bool ok() const { return sum == target; }
};

inline std::vector<BalanceRow> balance_rows(const ResolutionTree& tree, const SeparatrixDivisor& div) {
    std::vector<BalanceRow> rows;
    for (const auto& c : tree.components())
        if (c.dicritical) rows.push_back({c.id, c.valence, div.coefficient_sum(c.id), 2 - static_cast<long>(c.valence)});
    return rows;
}

inline bool balanced_ok(const ResolutionTree& tree, const SeparatrixDivisor& div) {
    const auto rows = balance_rows(tree, div);
    return div.is_primitive() && std::all_of(rows.begin(), rows.end(), [](const BalanceRow& r) { return r.ok(); });
}

inline Json divisor_json(const ResolutionTree& tree, const SeparatrixDivisor& div) {
    Json j;
    Json terms = Json::array();
    for (const auto& t : div.terms) {
        const BranchData& b = t.branch;
        Json e;
        e["component"] = component_ref(b.component);
        e["attach_point"] = b.attach_point;
        e["attach_offset"] = b.attach_offset ? Json(b.attach_offset->get_str()) : Json(nullptr);
        e["kind"] = to_string(b.kind);
        e["formal"] = b.formal;
        e["coefficient"] = t.coefficient;
        e["base_multiplicity"] = b.base_multiplicity;
        Json m = Json::array();
        for (const auto& [q, v] : b.m) m.push_back(Json{{"point", q}, {"m", v}});
        e["m"] = std::move(m);
        e["parametrization"] = b.parametrization ? param_json(*b.parametrization) : Json(nullptr);
        terms.push_back(std::move(e));
    }
    j["terms"] = std::move(terms);
    j["nu_B"] = div.multiplicity();
    j["primitive"] = div.is_primitive();
    Json bal = Json::array();
    for (const auto& r : balance_rows(tree, div))
        bal.push_back(Json{{"component", r.component + 1}, {"val", r.valence}, {"sum", r.sum}, {"target", r.target}, {"ok", r.ok()}});
    j["balance"] = std::move(bal);
    return j;
}

inline Json audit_json(const AuditReport& r) {
    Json j;
    j["degree"] = r.degree;
    Json pts = Json::array();
    for (const auto& p : r.points) {
        Json e;
        e["point"] = to_string(p.point);
        e["chart"] = to_string(p.chart);
        e["germ"] = p.germ;
        e["error"] = p.error.empty() ? Json(nullptr) : Json(p.error);
        e["sum_nu_F"] = p.sum_nu_F;
        e["sum_rewritten"] = p.sum_rewritten;
        e["terms_agree"] = p.terms_agree;
        e["valuation"] = p.report ? valuation_json(*p.report) : Json(nullptr);
        pts.push_back(std::move(e));
    }
    j["points"] = std::move(pts);
    j["lhs"] = r.lhs;
    j["lhs_rewritten"] = r.lhs_rewritten;
    j["rhs"] = r.rhs;
    j["inequality_holds"] = r.inequality_holds;
    j["rewritten_holds"] = r.rewritten_holds;
    j["consistent"] = r.consistent;
    j["locus_complete"] = r.locus_complete;
    j["all_resolved"] = r.all_resolved;
    j["hypothesis"] = r.disclaimer;
    return j;
}

/// Plain-text table with right-aligned columns except the last.
class Table {
public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    std::string str() const {
        std::vector<std::size_t> width;
        for (const auto& r : rows_) {
            if (width.size() < r.size()) width.resize(r.size(), 0);
            for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
        }
        std::ostringstream os;
        for (const auto& r : rows_) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) line += "  ";
                const std::size_t pad = width[i] - r[i].size();
                line += i + 1 == r.size() ? r[i] : std::string(pad, ' ') + r[i];
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            os << line << '\n';
        }
        return os.str();
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

inline std::string yes_no(bool b) { return b ? "yes" : "NO"; }

/// "2 = 4 - 2" for dicritical, "3 = 6 + 1 - 4" for invariant components.
inline std::string identity_text(const ComponentValuation& c) {
    std::string s = std::to_string(c.nu_Psi) + " = " + std::to_string(c.nu_F);
    if (!c.dicritical) s += " + 1";
    s += " - " + std::to_string(c.xi);
    return s;
}

inline std::string tree_table(const ResolutionTree& tree) {
    std::ostringstream os;
    os << "germ: " << tree.root_germ().to_string() << "\n";
    os << "blow-ups: " << tree.blowup_count() << "\n\n";
    Table pts({"point", "stage", "address", "on", "class", "blown", "germ"});
    for (const auto& p : tree.points()) {
        std::string on;
        for (ComponentId c : p.components()) on += (on.empty() ? "" : ",") + component_label(c);
        pts.add({"p" + std::to_string(p.id), std::to_string(p.stage), tree.address_string(p.id), on.empty() ? "-" : on,
                 class_name(p.cls), p.exceptional ? component_label(*p.exceptional) : "-", p.germ.to_string()});
    }
    os << pts.str();
    if (!tree.components().empty()) {
        os << "\n";
        Table comps({"D", "type", "birth", "rho", "val", "meets"});
        for (const auto& c : tree.components()) {
            std::string nb;
            for (ComponentId n : c.neighbours) nb += (nb.empty() ? "" : ",") + component_label(n);
            comps.add({component_label(c.id), c.dicritical ? "dicritical" : "invariant", "p" + std::to_string(c.birth),
                       std::to_string(c.rho), std::to_string(c.valence), nb.empty() ? "-" : nb});
        }
        os << comps.str();
    }
    const auto sns = tangent_saddle_nodes(tree);
    if (!sns.empty()) {
        os << "\n";
        Table t({"saddle-node", "weak along", "weak index"});
        for (const auto& s : sns) t.add({"p" + std::to_string(s.point), component_label(s.component), std::to_string(s.weak_index)});
        os << t.str();
    }
    return os.str();
}

inline std::string valuation_table(const ValuationReport& r) {
    std::ostringstream os;
    if (!r.components.empty()) {
        Table t({"D", "type", "rho", "val", "eps", "nu_F", "nu_F*", "nu_Psi", "xi", "cor", "identity"});
        for (const auto& c : r.components) {
            const bool ok = c.theorem_ok && c.nu_F == c.nu_F_direct;
            t.add({component_label(c.id), c.dicritical ? "dic" : "inv", std::to_string(c.rho), std::to_string(c.valence),
                   std::to_string(c.epsilon), std::to_string(c.nu_F), std::to_string(c.nu_F_direct),
                   std::to_string(c.nu_Psi), std::to_string(c.xi), yes_no(c.corollary_ok),
                   identity_text(c) + (ok ? "" : "  FAILED")});
        }
        os << t.str() << "\n";
    } else {
        os << "no exceptional components\n\n";
    }
    os << "nu_p(F) = " << r.nu_p << ", nu_p(B) = " << r.nu_B << ", xi_p = " << r.xi_p << "\n";
    os << "root identity " << r.nu_p << " = " << r.nu_B << " - 1 + " << r.xi_p << ": " << yes_no(r.root_ok) << "\n";
    os << "second type: " << (r.second_type ? "yes" : "no") << "\n";
    return os.str();
}

inline std::string divisor_table(const ResolutionTree& tree, const SeparatrixDivisor& div) {
    std::ostringstream os;
    Table t({"coef", "kind", "on", "at", "nu_p", "m", "curvetta"});
    for (const auto& term : div.terms) {
        const BranchData& b = term.branch;
        std::string m;
        for (const auto& [q, v] : b.m) m += (m.empty() ? "" : ",") + ("p" + std::to_string(q) + ":" + std::to_string(v));
        std::string at = tree.address_string(b.attach_point);
        if (b.attach_offset) at += "/1:" + b.attach_offset->get_str();
        std::string kind = to_string(b.kind) + (b.formal ? " (formal)" : "");
        std::string curve = b.parametrization ? "(" + b.parametrization->x.to_string() + ", " + b.parametrization->y.to_string() + ")" : "-";
        t.add({std::to_string(term.coefficient), kind, b.component ? component_label(*b.component) : "-", at,
               std::to_string(b.base_multiplicity), m.empty() ? "-" : m, curve});
    }
    os << t.str() << "\n";
    os << "nu_p(B) = " << div.multiplicity() << ", primitive: " << yes_no(div.is_primitive()) << "\n";
    for (const auto& r : balance_rows(tree, div))
        os << component_label(r.component) << ": sum of coefficients " << r.sum << ", 2 - Val = " << r.target << ": "
           << yes_no(r.ok()) << "\n";
    return os.str();
}

inline std::string audit_table(const AuditReport& r) {
    std::ostringstream os;
    os << "degree d = " << r.degree << "\n\n";
    Table t({"point", "chart", "components", "sum (nu_F-1)^2", "sum rewritten", "agree", "note"});
    for (const auto& p : r.points) {
        t.add({to_string(p.point), to_string(p.chart), p.report ? std::to_string(p.report->components.size()) : "-",
               std::to_string(p.sum_nu_F), std::to_string(p.sum_rewritten), yes_no(p.terms_agree), p.error.empty() ? "" : p.error});
    }
    os << t.str() << "\n";
    os << "first sum " << r.lhs << " <= (d-1)^2 = " << r.rhs << ": " << yes_no(r.inequality_holds) << "\n";
    os << "rewritten sum " << r.lhs_rewritten << " <= " << r.rhs << ": " << yes_no(r.rewritten_holds) << "\n";
    os << "internal consistency: " << yes_no(r.consistent) << "\n";
    os << "singular locus complete: " << (r.locus_complete ? "yes" : "not guaranteed") << "\n";
    os << "note: " << r.disclaimer << "\n";
    return os.str();
}

}  // namespace foliage::report
