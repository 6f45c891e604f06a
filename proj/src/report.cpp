#include "strata/report.hpp"

#include <sstream>

namespace strata {

using ojson = nlohmann::ordered_json;

std::string format_combination(const std::vector<std::pair<Scalar, std::string>>& terms) {
    std::string out;
    for (const auto& [coeff, name] : terms) {
        if (coeff.is_zero()) continue;
        std::string term;
        if (coeff.is_one()) {
            term = name;
        } else if (coeff == Scalar(-1)) {
            term = "-" + name;
        } else if (coeff.is_real() || coeff.re() == 0) {
            term = to_string(coeff) + "*" + name;
        } else {
            term = "(" + to_string(coeff) + ")*" + name;
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

std::vector<std::pair<Scalar, std::string>> vec_terms(const Vec& v,
                                                      const std::vector<std::string>& names) {
    std::vector<std::pair<Scalar, std::string>> out;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.emplace_back(v[i], names[i]);
    return out;
}

std::vector<std::string> cycle_names(const Fixture& f) {
    std::vector<std::string> out;
    for (const Cycle& c : f.model.cycles) out.push_back(c.id);
    return out;
}

ojson vec_json(const Vec& v, const std::vector<std::string>& names) {
    ojson out;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out[names[i]] = to_string(v[i]);
    return out;
}

ojson header_json(const char* command, const Fixture& f) {
    ojson j;
    j["command"] = command;
    j["fixture"] = fixture_digest(f);
    return j;
}

std::string header_text(const char* command, const Fixture& f) {
    return std::string("command: ") + command + "\nfixture: " + fixture_digest(f) + "\n";
}

std::string residue_form_text(const Fixture& f, const std::map<std::string, Scalar>& coeffs) {
    std::vector<std::pair<Scalar, std::string>> terms;
    for (const Edge& e : f.graph.edges()) {
        auto it = coeffs.find(e.id);
        if (it != coeffs.end()) terms.emplace_back(it->second, "r_" + e.id);
    }
    return format_combination(terms);
}

ojson residue_form_json(const Fixture& f, const std::map<std::string, Scalar>& coeffs) {
    ojson out;
    for (const Edge& e : f.graph.edges()) {
        auto it = coeffs.find(e.id);
        if (it != coeffs.end()) out[e.id] = to_string(it->second);
    }
    return out;
}

ojson matrix_json(const Mat& m) {
    ojson rows = ojson::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string matrix_text(const Mat& m, const std::string& indent) {
    std::ostringstream out;
    for (size_t i = 0; i < m.rows(); ++i) {
        out << indent << "[";
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) out << " ";
            out << to_string(m.at(i, j));
        }
        out << "]\n";
    }
    return out.str();
}

ojson validation_json_body(const ValidationReport& report) {
    ojson j;
    j["ok"] = report.ok();
    ojson items = ojson::array();
    for (const Finding& f : report.findings)
        items.push_back({{"rule", f.rule}, {"subject", f.subject}, {"detail", f.detail}});
    j["findings"] = std::move(items);
    return j;
}

std::string validation_text_body(const ValidationReport& report) {
    std::ostringstream out;
    out << "status: " << (report.ok() ? "ok" : "invalid") << "\n";
    out << "findings: " << report.findings.size() << "\n";
    for (const Finding& f : report.findings)
        out << "  " << f.rule << " [" << f.subject << "] " << f.detail << "\n";
    return out.str();
}

ojson boundary_json_body(const Fixture& f, const BoundaryEquationSet& set) {
    ojson j;
    ojson deleted = ojson::array();
    for (const DeletionEntry& d : set.log) {
        ojson entry;
        entry["row"] = d.row;
        entry["reason"] = d.reason;
        entry["level"] = d.level;
        entry["edges"] = d.edges;
        entry["combination"] = vec_json(d.ambient, cycle_names(f));
        deleted.push_back(std::move(entry));
    }
    j["deleted"] = std::move(deleted);
    ojson blocks = ojson::array();
    for (const BoundaryBlock& b : set.blocks) {
        ojson entry;
        entry["level"] = b.level;
        entry["structure"] = b.projective ? "projective" : "linear";
        ojson eqs = ojson::array();
        for (size_t k = 0; k < b.equations.rows(); ++k)
            eqs.push_back(vec_json(b.equations.row(k), f.model.level(b.level).basis));
        entry["equations"] = std::move(eqs);
        blocks.push_back(std::move(entry));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

std::string boundary_text_body(const Fixture& f, const BoundaryEquationSet& set) {
    std::ostringstream out;
    out << "deleted: " << set.log.size() << "\n";
    for (const DeletionEntry& d : set.log) {
        out << "  row " << d.row << " [" << d.reason << "] level " << d.level;
        if (!d.edges.empty()) {
            out << " edges=";
            for (size_t i = 0; i < d.edges.size(); ++i) {
                if (i) out << ",";
                out << d.edges[i];
            }
        }
        out << " :: " << format_combination(vec_terms(d.ambient, cycle_names(f))) << "\n";
    }
    for (const BoundaryBlock& b : set.blocks) {
        out << "level " << b.level << " (" << (b.projective ? "projective" : "linear")
            << "): " << b.equations.rows()
            << (b.equations.rows() == 1 ? " equation" : " equations") << "\n";
        for (size_t k = 0; k < b.equations.rows(); ++k)
            out << "  "
                << format_combination(
                       vec_terms(b.equations.row(k), f.model.level(b.level).basis))
                << " = 0\n";
    }
    return out.str();
}

ojson grc_json_body(const Fixture& f, const std::vector<GrcSpanEntry>& spans) {
    ojson levels = ojson::array();
    for (const GrcSpanEntry& s : spans) {
        ojson entry;
        entry["level"] = s.level;
        entry["rank"] = s.reduced.mat.rows();
        ojson gens = ojson::array();
        for (const GrcGenerator& g : s.generators)
            gens.push_back({{"label", g.label},
                            {"combination", vec_json(g.coords, f.model.level(s.level).basis)}});
        entry["generators"] = std::move(gens);
        levels.push_back(std::move(entry));
    }
    ojson j;
    j["levels"] = std::move(levels);
    return j;
}

std::string grc_text_body(const Fixture& f, const std::vector<GrcSpanEntry>& spans) {
    std::ostringstream out;
    for (const GrcSpanEntry& s : spans) {
        out << "level " << s.level << ": rank " << s.reduced.mat.rows() << "\n";
        for (const GrcGenerator& g : s.generators)
            out << "  " << g.label << " :: "
                << format_combination(vec_terms(g.coords, f.model.level(s.level).basis))
                << " = 0\n";
    }
    return out.str();
}

ojson sigma_json(const SigmaSpec& sigma) {
    ojson j;
    ojson levels;
    for (auto it = sigma.levels.rbegin(); it != sigma.levels.rend(); ++it)
        levels[std::to_string(it->first)] = it->second;
    j["levels"] = std::move(levels);
    ojson edges;
    for (const auto& [id, w] : sigma.edges) edges[id] = w;
    j["edges"] = std::move(edges);
    return j;
}

std::string sigma_text(const SigmaSpec& sigma) {
    std::ostringstream out;
    out << "sigma:";
    for (auto it = sigma.levels.rbegin(); it != sigma.levels.rend(); ++it)
        out << " level " << it->first << "=" << it->second;
    for (const auto& [id, w] : sigma.edges) out << " edge " << id << "=" << w;
    out << "\n";
    return out.str();
}

ojson forced_json_body(const Fixture& f, const SigmaSpec& sigma,
                       const std::vector<ResidueForm>& forms) {
    ojson j;
    j["sigma"] = sigma_json(sigma);
    ojson rows = ojson::array();
    for (const ResidueForm& form : forms) {
        ojson entry;
        entry["row"] = form.row;
        entry["raw"] = residue_form_json(f, form.raw);
        entry["reduced"] = residue_form_json(f, form.reduced);
        entry["vacuous"] = form.vacuous;
        rows.push_back(std::move(entry));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string forced_text_body(const Fixture& f, const SigmaSpec& sigma,
                             const std::vector<ResidueForm>& forms) {
    std::ostringstream out;
    out << sigma_text(sigma);
    for (const ResidueForm& form : forms) {
        out << "row " << form.row << ": ";
        if (form.vacuous)
            out << "vacuous";
        else
            out << residue_form_text(f, form.reduced) << " = 0";
        out << "  (raw: " << residue_form_text(f, form.raw) << ")\n";
    }
    return out.str();
}

} // namespace

Rendered render_validation(const Fixture& f, const ValidationReport& report) {
    Rendered r;
    r.json = header_json("validate", f);
    ojson body = validation_json_body(report);
    for (auto it = body.begin(); it != body.end(); ++it) r.json[it.key()] = it.value();
    r.text = header_text("validate", f) + validation_text_body(report);
    return r;
}

Rendered render_boundary(const Fixture& f, const BoundaryEquationSet& set) {
    Rendered r;
    r.json = header_json("boundary", f);
    ojson body = boundary_json_body(f, set);
    for (auto it = body.begin(); it != body.end(); ++it) r.json[it.key()] = it.value();
    r.text = header_text("boundary", f) + boundary_text_body(f, set);
    return r;
}

Rendered render_grc(const Fixture& f, const std::vector<GrcSpanEntry>& spans) {
    Rendered r;
    r.json = header_json("grc", f);
    ojson body = grc_json_body(f, spans);
    for (auto it = body.begin(); it != body.end(); ++it) r.json[it.key()] = it.value();
    r.text = header_text("grc", f) + grc_text_body(f, spans);
    return r;
}

Rendered render_forced(const Fixture& f, const SigmaSpec& sigma,
                       const std::vector<ResidueForm>& forms) {
    Rendered r;
    r.json = header_json("forced", f);
    ojson body = forced_json_body(f, sigma, forms);
    for (auto it = body.begin(); it != body.end(); ++it) r.json[it.key()] = it.value();
    r.text = header_text("forced", f) + forced_text_body(f, sigma, forms);
    return r;
}

Rendered render_monodromy(const Fixture& f, const Generator& gen, const Mat& twist,
                          const Mat& log) {
    Rendered r;
    r.json = header_json("monodromy", f);
    r.json["generator"] = to_string(gen);
    r.json["twist"] = matrix_json(twist);
    r.json["log"] = matrix_json(log);
    std::ostringstream text;
    text << header_text("monodromy", f);
    text << "generator: " << to_string(gen) << "\n";
    text << "twist:\n" << matrix_text(twist, "  ");
    text << "log:\n" << matrix_text(log, "  ");
    r.text = text.str();
    return r;
}

Rendered render_report(const Fixture& f, const ValidationReport& validation,
                       const BoundaryEquationSet& set, const std::vector<GrcSpanEntry>& spans,
                       const SigmaSpec* sigma, const std::vector<ResidueForm>* forms) {
    Rendered r;
    r.json = header_json("report", f);
    r.json["validation"] = validation_json_body(validation);
    r.json["boundary"] = boundary_json_body(f, set);
    r.json["grc"] = grc_json_body(f, spans);
    if (sigma && forms) r.json["forced"] = forced_json_body(f, *sigma, *forms);

    std::ostringstream text;
    text << header_text("report", f);
    text << "-- validation --\n" << validation_text_body(validation);
    text << "-- boundary --\n" << boundary_text_body(f, set);
    text << "-- grc --\n" << grc_text_body(f, spans);
    if (sigma && forms) text << "-- forced --\n" << forced_text_body(f, *sigma, *forms);
    r.text = text.str();
    return r;
}

} // namespace strata
