#include "strata/fixture.hpp"

#include "strata/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace strata {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

const json& need(const json& o, const std::string& key, const std::string& path) {
    if (!o.is_object()) throw ParseError(path, "expected an object");
    auto it = o.find(key);
    if (it == o.end()) throw ParseError(path + "." + key, "missing field");
    return *it;
}

long need_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw ParseError(path, "expected an integer");
    return v.get<long>();
}

std::string need_str(const json& v, const std::string& path) {
    if (!v.is_string()) throw ParseError(path, "expected a string");
    return v.get<std::string>();
}

std::string need_id(const json& v, const std::string& path) {
    std::string s = need_str(v, path);
    if (!is_identifier(s))
        throw ParseError(path, "'" + s + "' is not a valid identifier");
    return s;
}

const json& need_array(const json& v, const std::string& path) {
    if (!v.is_array()) throw ParseError(path, "expected an array");
    return v;
}

const json& need_object(const json& v, const std::string& path) {
    if (!v.is_object()) throw ParseError(path, "expected an object");
    return v;
}

Scalar need_scalar(const json& v, const std::string& path) {
    if (v.is_number_integer()) return Scalar(Rational(v.get<long>()));
    if (v.is_number_float())
        throw ParseError(path, "floating point not accepted; write \"p/q\" as a string");
    if (v.is_string()) {
        try {
            return parse_scalar(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(path, e.what());
        }
    }
    throw ParseError(path, "expected an integer or a scalar string");
}

long parse_level_key(const std::string& key, const std::string& path) {
    size_t pos = 0;
    long value = 0;
    try {
        value = std::stol(key, &pos);
    } catch (const std::exception&) {
        throw ParseError(path, "'" + key + "' is not an integer level");
    }
    if (pos != key.size())
        throw ParseError(path, "'" + key + "' is not an integer level");
    return value;
}

std::vector<long> dense_coords(const json& obj, const std::vector<std::string>& names,
                               const std::string& path) {
    need_object(obj, path);
    std::vector<long> out(names.size(), 0);
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        auto slot = std::find(names.begin(), names.end(), it.key());
        if (slot == names.end())
            throw ParseError(path, "unknown basis name '" + it.key() + "'");
        out[slot - names.begin()] = need_int(it.value(), path + "." + it.key());
    }
    return out;
}

SigmaSpec parse_sigma_block(const json& v, const LevelGraph& g, const std::string& path) {
    SigmaSpec out;
    need_object(v, path);
    for (auto it = v.begin(); it != v.end(); ++it)
        if (it.key() != "levels" && it.key() != "edges")
            throw ParseError(path + "." + it.key(), "unknown field");
    if (v.contains("levels")) {
        const json& lv = need_object(v["levels"], path + ".levels");
        for (auto it = lv.begin(); it != lv.end(); ++it) {
            long level = parse_level_key(it.key(), path + ".levels");
            out.levels[level] = need_int(it.value(), path + ".levels." + it.key());
        }
    }
    if (v.contains("edges")) {
        const json& ed = need_object(v["edges"], path + ".edges");
        for (auto it = ed.begin(); it != ed.end(); ++it) {
            if (!g.has_edge(it.key()) || !g.horizontal(g.edge(it.key())))
                throw ParseError(path + ".edges." + it.key(),
                                 "not a horizontal edge of the graph");
            out.edges[it.key()] = need_int(it.value(), path + ".edges." + it.key());
        }
    }
    return out;
}

} // namespace

Fixture parse_fixture(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError("document", e.what());
    }
    need_object(doc, "document");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        static const char* known[] = {"mu",        "graph",     "levels", "basis",
                                      "vanishing", "equations", "residues", "sigma"};
        if (std::find_if(std::begin(known), std::end(known), [&](const char* k) {
                return it.key() == k;
            }) == std::end(known))
            throw ParseError(it.key(), "unknown top-level field");
    }

    Fixture f;

    const json& mu = need_array(need(doc, "mu", "document"), "mu");
    for (size_t i = 0; i < mu.size(); ++i)
        f.mu.push_back(need_int(mu[i], "mu[" + std::to_string(i) + "]"));

    {
        const json& graph = need_object(need(doc, "graph", "document"), "graph");
        std::vector<Vertex> vertices;
        const json& vs = need_array(need(graph, "vertices", "graph"), "graph.vertices");
        for (size_t i = 0; i < vs.size(); ++i) {
            std::string p = "graph.vertices[" + std::to_string(i) + "]";
            vertices.push_back({need_id(need(vs[i], "id", p), p + ".id"),
                                need_int(need(vs[i], "genus", p), p + ".genus"),
                                need_int(need(vs[i], "level", p), p + ".level")});
        }
        std::vector<Edge> edges;
        const json& es = need_array(need(graph, "edges", "graph"), "graph.edges");
        for (size_t i = 0; i < es.size(); ++i) {
            std::string p = "graph.edges[" + std::to_string(i) + "]";
            edges.push_back({need_id(need(es[i], "id", p), p + ".id"),
                             need_str(need(es[i], "plus", p), p + ".plus"),
                             need_str(need(es[i], "minus", p), p + ".minus"),
                             need_int(need(es[i], "kappa", p), p + ".kappa")});
        }
        std::vector<Leg> legs;
        const json& ls = need_array(need(graph, "legs", "graph"), "graph.legs");
        for (size_t i = 0; i < ls.size(); ++i) {
            std::string p = "graph.legs[" + std::to_string(i) + "]";
            legs.push_back({need_id(need(ls[i], "id", p), p + ".id"),
                            need_str(need(ls[i], "vertex", p), p + ".vertex"),
                            need_int(need(ls[i], "order", p), p + ".order")});
        }
        f.graph = LevelGraph(std::move(vertices), std::move(edges), std::move(legs));
    }

    {
        const json& levels = need_object(need(doc, "levels", "document"), "levels");
        for (auto it = levels.begin(); it != levels.end(); ++it) {
            long level = parse_level_key(it.key(), "levels");
            std::string p = "levels." + it.key();
            LevelModel lm;
            const json& basis = need_array(need(it.value(), "basis", p), p + ".basis");
            for (size_t i = 0; i < basis.size(); ++i) {
                std::string name = need_id(basis[i], p + ".basis[" + std::to_string(i) + "]");
                if (std::find(lm.basis.begin(), lm.basis.end(), name) != lm.basis.end())
                    throw ParseError(p + ".basis", "duplicate name '" + name + "'");
                lm.basis.push_back(name);
            }
            if (it.value().contains("classes")) {
                const json& classes = need_object(it.value()["classes"], p + ".classes");
                for (auto cl = classes.begin(); cl != classes.end(); ++cl) {
                    std::string key = cl.key();
                    std::string cp = p + ".classes." + key;
                    std::string base = key;
                    bool side = !key.empty() && (key.back() == '+' || key.back() == '-');
                    if (side) base = key.substr(0, key.size() - 1);
                    if (!f.graph.has_edge(base))
                        throw ParseError(cp, "unknown edge '" + base + "'");
                    const Edge& e = f.graph.edge(base);
                    if (side && (!f.graph.horizontal(e) || f.graph.level_plus(e) != level))
                        throw ParseError(cp, "'" + base + "' is not horizontal at this level");
                    if (!side && (f.graph.horizontal(e) || f.graph.level_minus(e) != level))
                        throw ParseError(cp,
                                         "'" + base + "' does not bottom out at this level");
                    lm.classes[key] = dense_coords(cl.value(), lm.basis, cp);
                }
            }
            f.model.levels[level] = std::move(lm);
        }
    }

    {
        const json& basis = need_array(need(doc, "basis", "document"), "basis");
        for (size_t i = 0; i < basis.size(); ++i) {
            std::string p = "basis[" + std::to_string(i) + "]";
            Cycle c;
            c.id = need_id(need(basis[i], "id", p), p + ".id");
            c.level = need_int(need(basis[i], "level", p), p + ".level");
            std::string kind = need_str(need(basis[i], "kind", p), p + ".kind");
            if (kind == "alpha")
                c.kind = CycleKind::Alpha;
            else if (kind == "delta")
                c.kind = CycleKind::Delta;
            else if (kind == "other")
                c.kind = CycleKind::Other;
            else
                throw ParseError(p + ".kind", "expected alpha, delta, or other");
            if (!f.model.levels.count(c.level))
                throw ParseError(p + ".level",
                                 "no levels entry for " + std::to_string(c.level));
            if (basis[i].contains("intersections")) {
                const json& in = need_object(basis[i]["intersections"], p + ".intersections");
                for (auto it = in.begin(); it != in.end(); ++it) {
                    if (!f.graph.has_edge(it.key()))
                        throw ParseError(p + ".intersections", "unknown edge '" + it.key() + "'");
                    long v = need_int(it.value(), p + ".intersections." + it.key());
                    if (v != 0) c.intersections[it.key()] = v;
                }
            }
            const std::vector<std::string>& names = f.model.levels.at(c.level).basis;
            c.restriction.assign(names.size(), Scalar());
            if (basis[i].contains("restriction")) {
                const json& re = need_object(basis[i]["restriction"], p + ".restriction");
                for (auto it = re.begin(); it != re.end(); ++it) {
                    auto slot = std::find(names.begin(), names.end(), it.key());
                    if (slot == names.end())
                        throw ParseError(p + ".restriction",
                                         "unknown basis name '" + it.key() + "'");
                    c.restriction[slot - names.begin()] =
                        need_scalar(it.value(), p + ".restriction." + it.key());
                }
            }
            f.model.cycles.push_back(std::move(c));
        }
        std::set<std::string> ids;
        for (const Cycle& c : f.model.cycles)
            if (!ids.insert(c.id).second)
                throw ParseError("basis", "duplicate cycle id '" + c.id + "'");
    }

    {
        const json& vanishing = need_object(need(doc, "vanishing", "document"), "vanishing");
        for (auto it = vanishing.begin(); it != vanishing.end(); ++it) {
            if (!f.graph.has_edge(it.key()))
                throw ParseError("vanishing", "unknown edge '" + it.key() + "'");
            std::string p = "vanishing." + it.key();
            const json& coords = need_object(it.value(), p);
            std::vector<long> dense(f.model.dim(), 0);
            for (auto c = coords.begin(); c != coords.end(); ++c) {
                if (!f.model.has_cycle(c.key()))
                    throw ParseError(p, "unknown cycle '" + c.key() + "'");
                dense[f.model.cycle_index(c.key())] =
                    need_int(c.value(), p + "." + c.key());
            }
            f.model.vanishing[it.key()] = std::move(dense);
        }
    }

    {
        const json& eqs = need_array(need(doc, "equations", "document"), "equations");
        f.equations = Mat(0, f.model.dim());
        for (size_t i = 0; i < eqs.size(); ++i) {
            std::string p = "equations[" + std::to_string(i) + "]";
            const json& row = need_object(eqs[i], p);
            Vec dense(f.model.dim());
            for (auto it = row.begin(); it != row.end(); ++it) {
                if (!f.model.has_cycle(it.key()))
                    throw ParseError(p, "unknown cycle '" + it.key() + "'");
                dense[f.model.cycle_index(it.key())] =
                    need_scalar(it.value(), p + "." + it.key());
            }
            f.equations.append_row(dense);
        }
    }

    if (doc.contains("residues")) {
        const json& res = need_object(doc["residues"], "residues");
        f.has_residues = true;
        for (auto it = res.begin(); it != res.end(); ++it) {
            if (!f.graph.has_edge(it.key()))
                throw ParseError("residues", "unknown edge '" + it.key() + "'");
            f.residues[it.key()] = need_scalar(it.value(), "residues." + it.key());
        }
    }

    if (doc.contains("sigma")) {
        f.has_sigma = true;
        f.sigma = parse_sigma_block(doc["sigma"], f.graph, "sigma");
    }

    return f;
}

Fixture parse_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fixture(buf.str());
}

SigmaSpec parse_sigma_spec(const Fixture& f, const std::string& inline_or_path) {
    std::string text = inline_or_path;
    bool inline_json = false;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) {
            inline_json = c == '{';
            break;
        }
    if (!inline_json) {
        std::ifstream in(inline_or_path);
        if (!in) throw ParseError(inline_or_path, "cannot open sigma file");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError("sigma", e.what());
    }
    return parse_sigma_block(doc, f.graph, "sigma");
}

namespace {

ojson scalar_json(const Scalar& s) { return to_string(s); }

} // namespace

std::string serialize_fixture(const Fixture& f) {
    ojson doc;

    doc["mu"] = f.mu;

    ojson graph;
    graph["vertices"] = ojson::array();
    for (const Vertex& v : f.graph.vertices())
        graph["vertices"].push_back({{"id", v.id}, {"genus", v.genus}, {"level", v.level}});
    graph["edges"] = ojson::array();
    for (const Edge& e : f.graph.edges())
        graph["edges"].push_back(
            {{"id", e.id}, {"plus", e.plus}, {"minus", e.minus}, {"kappa", e.kappa}});
    graph["legs"] = ojson::array();
    for (const Leg& l : f.graph.legs())
        graph["legs"].push_back({{"id", l.id}, {"vertex", l.vertex}, {"order", l.order}});
    doc["graph"] = std::move(graph);

    ojson levels = ojson::object();
    for (auto it = f.model.levels.rbegin(); it != f.model.levels.rend(); ++it) {
        ojson lm;
        lm["basis"] = it->second.basis;
        ojson classes = ojson::object();
        for (const auto& [key, coords] : it->second.classes) {
            ojson entry = ojson::object();
            for (size_t k = 0; k < coords.size(); ++k)
                if (coords[k] != 0) entry[it->second.basis[k]] = coords[k];
            classes[key] = std::move(entry);
        }
        lm["classes"] = std::move(classes);
        levels[std::to_string(it->first)] = std::move(lm);
    }
    doc["levels"] = std::move(levels);

    ojson basis = ojson::array();
    for (const Cycle& c : f.model.cycles) {
        ojson entry;
        entry["id"] = c.id;
        entry["level"] = c.level;
        entry["kind"] = to_string(c.kind);
        ojson inter = ojson::object();
        for (const Edge& e : f.graph.edges()) {
            auto it = c.intersections.find(e.id);
            if (it != c.intersections.end() && it->second != 0) inter[e.id] = it->second;
        }
        entry["intersections"] = std::move(inter);
        ojson restr = ojson::object();
        const std::vector<std::string>& names = f.model.levels.at(c.level).basis;
        for (size_t k = 0; k < c.restriction.size(); ++k)
            if (!c.restriction[k].is_zero()) restr[names[k]] = scalar_json(c.restriction[k]);
        entry["restriction"] = std::move(restr);
        basis.push_back(std::move(entry));
    }
    doc["basis"] = std::move(basis);

    ojson vanishing = ojson::object();
    for (const Edge& e : f.graph.edges()) {
        auto it = f.model.vanishing.find(e.id);
        if (it == f.model.vanishing.end()) continue;
        ojson coords = ojson::object();
        for (size_t l = 0; l < it->second.size(); ++l)
            if (it->second[l] != 0) coords[f.model.cycles[l].id] = it->second[l];
        vanishing[e.id] = std::move(coords);
    }
    doc["vanishing"] = std::move(vanishing);

    ojson eqs = ojson::array();
    for (size_t r = 0; r < f.equations.rows(); ++r) {
        ojson row = ojson::object();
        for (size_t l = 0; l < f.equations.cols(); ++l)
            if (!f.equations.at(r, l).is_zero())
                row[f.model.cycles[l].id] = scalar_json(f.equations.at(r, l));
        eqs.push_back(std::move(row));
    }
    doc["equations"] = std::move(eqs);

    if (f.has_residues) {
        ojson res = ojson::object();
        for (const Edge& e : f.graph.edges()) {
            auto it = f.residues.find(e.id);
            if (it != f.residues.end()) res[e.id] = scalar_json(it->second);
        }
        doc["residues"] = std::move(res);
    }

    if (f.has_sigma) {
        ojson sig;
        ojson lv = ojson::object();
        for (auto it = f.sigma.levels.rbegin(); it != f.sigma.levels.rend(); ++it)
            lv[std::to_string(it->first)] = it->second;
        sig["levels"] = std::move(lv);
        ojson ed = ojson::object();
        for (const Edge& e : f.graph.edges()) {
            auto it = f.sigma.edges.find(e.id);
            if (it != f.sigma.edges.end()) ed[e.id] = it->second;
        }
        sig["edges"] = std::move(ed);
        doc["sigma"] = std::move(sig);
    }

    return doc.dump(2) + "\n";
}

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string fixture_digest(const Fixture& f) {
    uint64_t h = fnv1a64(serialize_fixture(f));
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xF];
        h >>= 4;
    }
    return out;
}

ValidationReport validate_fixture(const Fixture& f) {
    ValidationReport report = validate_graph(f.graph, f.mu);
    report.merge(validate_adapted_basis(f.model, f.graph));
    if (f.equations.cols() != f.model.dim())
        report.add("EquationShape", "equations",
                   "rows have " + std::to_string(f.equations.cols()) + " columns, expected " +
                       std::to_string(f.model.dim()));
    if (f.has_residues) report.merge(residue_consistency(f.model, f.graph, f.residues));
    if (f.has_sigma) report.merge(validate_sigma(f, f.sigma));
    return report;
}

ValidationReport validate_sigma(const Fixture& f, const SigmaSpec& sigma) {
    ValidationReport report;
    std::set<long> lower;
    for (long i : f.graph.levels())
        if (i < 0) lower.insert(i);
    for (long i : lower) {
        auto it = sigma.levels.find(i);
        if (it == sigma.levels.end())
            report.add("MonodromyType", "level " + std::to_string(i), "no weight declared");
        else if (it->second < 1)
            report.add("MonodromyType", "level " + std::to_string(i),
                       "weight " + std::to_string(it->second) + " is not positive");
    }
    for (const auto& [level, value] : sigma.levels) {
        (void)value;
        if (!lower.count(level))
            report.add("MonodromyType", "level " + std::to_string(level),
                       "not a level below the top");
    }
    for (const Edge& e : f.graph.edges()) {
        if (!f.graph.horizontal(e)) continue;
        auto it = sigma.edges.find(e.id);
        if (it == sigma.edges.end())
            report.add("MonodromyType", e.id, "no weight declared");
        else if (it->second < 1)
            report.add("MonodromyType", e.id,
                       "weight " + std::to_string(it->second) + " is not positive");
    }
    for (const auto& [edge, value] : sigma.edges) {
        (void)value;
        if (!f.graph.has_edge(edge) || !f.graph.horizontal(f.graph.edge(edge)))
            report.add("MonodromyType", edge, "not a horizontal edge");
    }
    return report;
}

} // namespace strata
