#include "strata/homology.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <set>

namespace strata {

std::string to_string(CycleKind k) {
    switch (k) {
        case CycleKind::Alpha: return "alpha";
        case CycleKind::Delta: return "delta";
        case CycleKind::Other: return "other";
    }
    return "other";
}

const std::vector<long>& LevelModel::class_coords(const std::string& key) const {
    auto it = classes.find(key);
    if (it == classes.end())
        throw DomainError(DomainError::Code::MissingBoundaryCoordinates,
                          "no boundary class declared under key '" + key + "'");
    return it->second;
}

bool BasisModel::has_cycle(const std::string& id) const {
    for (const Cycle& c : cycles)
        if (c.id == id) return true;
    return false;
}

size_t BasisModel::cycle_index(const std::string& id) const {
    for (size_t i = 0; i < cycles.size(); ++i)
        if (cycles[i].id == id) return i;
    throw DomainError(DomainError::Code::UnknownGenerator, "unknown cycle '" + id + "'");
}

const LevelModel& BasisModel::level(long i) const {
    auto it = levels.find(i);
    if (it == levels.end())
        throw DomainError(DomainError::Code::MissingBoundaryCoordinates,
                          "no boundary model for level " + std::to_string(i));
    return it->second;
}

long BasisModel::pairing(const std::string& cycle_id, const std::string& edge_id) const {
    const Cycle& c = cycles[cycle_index(cycle_id)];
    auto it = c.intersections.find(edge_id);
    return it == c.intersections.end() ? 0 : it->second;
}

Scalar BasisModel::pairing_with(const Vec& x, const std::string& edge_id) const {
    if (x.size() != dim())
        throw DomainError(DomainError::Code::DimensionMismatch, "pairing_with: bad vector size");
    Scalar s;
    for (size_t l = 0; l < cycles.size(); ++l) {
        if (x[l].is_zero()) continue;
        auto it = cycles[l].intersections.find(edge_id);
        if (it != cycles[l].intersections.end() && it->second != 0)
            s += x[l] * Scalar(Rational(it->second));
    }
    return s;
}

Vec BasisModel::lambda(const std::string& edge_id) const {
    auto it = vanishing.find(edge_id);
    if (it == vanishing.end())
        throw DomainError(DomainError::Code::MissingBoundaryCoordinates,
                          "no vanishing-class coordinates for edge '" + edge_id + "'");
    Vec v(dim());
    for (size_t l = 0; l < v.size(); ++l) v[l] = Scalar(Rational(it->second[l]));
    return v;
}

Filtrations build_filtrations(const BasisModel& model, const LevelGraph& g) {
    Filtrations out;
    size_t n = model.dim();
    for (long i : g.levels()) {
        Mat L(0, n);
        for (size_t l = 0; l < n; ++l) {
            if (model.cycles[l].level > i) continue;
            Vec unit(n);
            unit[l] = Scalar(1);
            L.append_row(unit);
        }
        std::vector<std::string> horiz = g.horizontal_edges_at(i);
        if (horiz.empty()) {
            out.W[i] = L;
        } else {
            Mat constraints(0, n);
            for (const std::string& e : horiz) {
                Vec row(n);
                for (size_t l = 0; l < n; ++l)
                    row[l] = Scalar(Rational(model.pairing(model.cycles[l].id, e)));
                constraints.append_row(row);
            }
            out.W[i] = row_space_intersection(L, right_kernel(constraints));
        }
        out.L[i] = std::move(L);
    }
    return out;
}

namespace {

std::string component_label(const std::vector<std::string>& verts) {
    std::string label = "Y:";
    for (size_t k = 0; k < verts.size(); ++k) {
        if (k) label += "+";
        label += verts[k];
    }
    return label;
}

} // namespace

GrcSpanEntry grc_span(const BasisModel& model, const LevelGraph& g, long i) {
    const LevelModel& lm = model.level(i);
    GrcSpanEntry out;
    out.level = i;

    LevelGraph upper = restrict_levels(g, LevelPredicate::Above, i);
    for (const std::vector<std::string>& comp : upper.components()) {
        bool pole_free = true;
        for (const Leg& leg : g.legs())
            if (leg.order < 0 &&
                std::find(comp.begin(), comp.end(), leg.vertex) != comp.end())
                pole_free = false;
        if (!pole_free) continue;

        Vec sum(lm.dim());
        bool any_edge = false;
        for (const Edge& e : g.edges()) {
            if (g.horizontal(e) || g.level_minus(e) != i) continue;
            if (std::find(comp.begin(), comp.end(), e.plus) == comp.end()) continue;
            const std::vector<long>& coords = lm.class_coords(e.id);
            for (size_t k = 0; k < sum.size(); ++k)
                sum[k] += Scalar(Rational(coords[k]));
            any_edge = true;
        }
        if (any_edge) out.generators.push_back({component_label(comp), std::move(sum)});
    }

    for (const std::string& e : g.horizontal_edges_at(i)) {
        const std::vector<long>& plus = lm.class_coords(e + "+");
        const std::vector<long>& minus = lm.class_coords(e + "-");
        Vec diff(lm.dim());
        for (size_t k = 0; k < diff.size(); ++k)
            diff[k] = Scalar(Rational(plus[k])) - Scalar(Rational(minus[k]));
        out.generators.push_back({"mrh:" + e, std::move(diff)});
    }

    Mat gens(0, lm.dim());
    for (const GrcGenerator& gen : out.generators) gens.append_row(gen.coords);
    out.reduced = rref(gens);
    return out;
}

namespace {

// Shared linear-extension core of the two level maps.
Vec extend_restrictions(const BasisModel& model, const Vec& x, long i) {
    const LevelModel& lm = model.level(i);
    Vec out(lm.dim());
    for (size_t l = 0; l < model.cycles.size(); ++l) {
        if (x[l].is_zero() || model.cycles[l].level != i) continue;
        const Vec& r = model.cycles[l].restriction;
        if (r.size() != lm.dim())
            throw DomainError(DomainError::Code::DimensionMismatch,
                              "restriction of '" + model.cycles[l].id + "' has wrong size");
        for (size_t k = 0; k < out.size(); ++k) out[k] += x[l] * r[k];
    }
    return out;
}

} // namespace

Vec specialize(const BasisModel& model, const LevelGraph& g, const Vec& x, long i) {
    if (x.size() != model.dim())
        throw DomainError(DomainError::Code::DimensionMismatch, "specialize: bad vector size");
    for (size_t l = 0; l < model.cycles.size(); ++l)
        if (model.cycles[l].level > i && !x[l].is_zero())
            throw DomainError(DomainError::Code::NotInVerticalFiltration,
                              "vector has support above level " + std::to_string(i));
    for (const std::string& e : g.horizontal_edges_at(i))
        if (!model.pairing_with(x, e).is_zero())
            throw DomainError(DomainError::Code::NotInVerticalFiltration,
                              "vector pairs nontrivially with horizontal edge '" + e + "'");
    Vec out = extend_restrictions(model, x, i);
    return reduce_row_mod(std::move(out), grc_span(model, g, i).reduced);
}

Vec restrict_to_level(const BasisModel& model, const Vec& x, long i) {
    if (x.size() != model.dim())
        throw DomainError(DomainError::Code::DimensionMismatch, "restrict: bad vector size");
    for (size_t l = 0; l < model.cycles.size(); ++l)
        if (model.cycles[l].level > i && !x[l].is_zero())
            throw DomainError(DomainError::Code::NotInLevelFiltration,
                              "vector has support above level " + std::to_string(i));
    return extend_restrictions(model, x, i);
}

ValidationReport validate_adapted_basis(const BasisModel& model, const LevelGraph& g) {
    ValidationReport report;
    size_t n = model.dim();

    // Shape checks first; the rank checks below assume consistent sizes.
    std::set<std::string> seen;
    for (const Cycle& c : model.cycles)
        if (!seen.insert(c.id).second) report.add("DuplicateCycle", c.id, "repeated cycle id");

    std::vector<long> graph_levels = g.levels();
    for (const Cycle& c : model.cycles) {
        if (std::find(graph_levels.begin(), graph_levels.end(), c.level) ==
            graph_levels.end()) {
            report.add("CycleLevel", c.id,
                       "declared level " + std::to_string(c.level) + " not in the graph");
            continue;
        }
        auto lm = model.levels.find(c.level);
        if (lm != model.levels.end() && c.restriction.size() != lm->second.dim())
            report.add("RestrictionShape", c.id, "restriction size does not match level basis");
        for (const auto& [edge_id, value] : c.intersections) {
            (void)value;
            if (!g.has_edge(edge_id))
                report.add("UnknownEdge", c.id, "intersection against unknown edge '" + edge_id + "'");
        }
    }
    for (long i : graph_levels)
        if (!model.levels.count(i))
            report.add("MissingLevelModel", "level " + std::to_string(i),
                       "no boundary basis declared");
    for (const Edge& e : g.edges()) {
        auto it = model.vanishing.find(e.id);
        if (it == model.vanishing.end())
            report.add("VanishingShape", e.id, "no ambient coordinates for the vanishing class");
        else if (it->second.size() != n)
            report.add("VanishingShape", e.id, "ambient coordinate vector has wrong size");
        long bottom = g.has_vertex(e.minus) ? g.level_minus(e) : 0;
        auto lm = model.levels.find(bottom);
        if (lm == model.levels.end()) continue;
        if (g.horizontal(e)) {
            for (const char* side : {"+", "-"}) {
                auto cl = lm->second.classes.find(e.id + side);
                if (cl == lm->second.classes.end())
                    report.add("MissingClass", e.id,
                               std::string("no boundary class for side '") + side + "'");
                else if (cl->second.size() != lm->second.dim())
                    report.add("MissingClass", e.id, "boundary class has wrong size");
            }
        } else {
            auto cl = lm->second.classes.find(e.id);
            if (cl == lm->second.classes.end())
                report.add("MissingClass", e.id, "no boundary class at the bottom level");
            else if (cl->second.size() != lm->second.dim())
                report.add("MissingClass", e.id, "boundary class has wrong size");
        }
    }
    if (!report.ok()) return report;

    // Kronecker rule for delta cycles, one delta per horizontal edge.
    std::map<std::string, int> deltas_per_edge;
    for (const Cycle& c : model.cycles) {
        if (c.kind != CycleKind::Delta) continue;
        std::string matched;
        bool clean = true;
        for (const Edge& e : g.edges()) {
            if (!g.horizontal(e)) continue;
            long v = model.pairing(c.id, e.id);
            if (v == 1 && matched.empty())
                matched = e.id;
            else if (v != 0)
                clean = false;
        }
        if (matched.empty() || !clean) {
            report.add("KroneckerRule", c.id,
                       "delta cycle must pair 1 with exactly one horizontal edge and 0 "
                       "with the rest");
            continue;
        }
        if (g.level_plus(g.edge(matched)) != c.level)
            report.add("KroneckerRule", c.id,
                       "matched edge '" + matched + "' is not at the cycle's level");
        if (++deltas_per_edge[matched] > 1)
            report.add("DeltaMultiplicity", matched, "more than one delta cycle for this edge");
    }

    for (const Cycle& c : model.cycles) {
        if (c.kind == CycleKind::Alpha)
            for (const std::string& e : g.horizontal_edges_at(c.level))
                if (model.pairing(c.id, e) != 0)
                    report.add("AlphaHorizontalPairing", c.id,
                               "alpha cycle pairs with horizontal edge '" + e + "'");
        // Cycles never reach above their own level, so classes of strictly
        // higher levels must pair to zero; W-membership of truncations
        // depends on this.
        for (const Edge& e : g.edges())
            if (g.horizontal(e) && g.level_plus(e) > c.level &&
                model.pairing(c.id, e.id) != 0)
                report.add("LevelPairing", c.id,
                           "pairs with horizontal edge '" + e.id + "' above its level");
    }

    for (const Edge& e : g.edges()) {
        Vec le = model.lambda(e.id);
        for (const Edge& f : g.edges()) {
            Scalar v = model.pairing_with(le, f.id);
            if (!v.is_zero())
                report.add("VanishingClassPairing", e.id + "," + f.id,
                           "vanishing classes pair to " + to_string(v));
        }
    }

    for (long i : graph_levels) {
        const LevelModel& lm = model.level(i);
        GrcSpanEntry grc = grc_span(model, g, i);
        size_t grc_rank = grc.reduced.mat.rows();
        Mat images(0, lm.dim());
        size_t alphas = 0;
        for (const Cycle& c : model.cycles) {
            if (c.level != i || c.kind != CycleKind::Alpha) continue;
            ++alphas;
            images.append_row(reduce_row_mod(c.restriction, grc.reduced));
        }
        size_t want = lm.dim() - grc_rank;
        if (alphas != want || rank(images) != want)
            report.add("SpanningFailure", "level " + std::to_string(i),
                       std::to_string(alphas) + " alpha cycles of rank " +
                           std::to_string(rank(images)) + " cannot span a quotient of dimension " +
                           std::to_string(want));
    }

    return report;
}

ValidationReport residue_consistency(const BasisModel& model, const LevelGraph& g,
                                     const std::map<std::string, Scalar>& residues) {
    ValidationReport report;
    for (const Edge& e : g.edges())
        if (!residues.count(e.id))
            report.add("MissingResidue", e.id, "no residue declared");
    if (!report.ok()) return report;

    // Relations already satisfied by the classes themselves transfer to the
    // residues: any combination with zero class must have zero residue sum.
    Mat van(0, model.dim());
    for (const Edge& e : g.edges()) van.append_row(model.lambda(e.id));
    Mat relations = left_kernel(van);
    for (size_t k = 0; k < relations.rows(); ++k) {
        Scalar sum;
        std::string relation;
        for (size_t j = 0; j < g.edges().size(); ++j) {
            const Scalar& c = relations.at(k, j);
            if (c.is_zero()) continue;
            sum += c * residues.at(g.edges()[j].id);
            if (!relation.empty()) relation += " + ";
            relation += "(" + to_string(c) + ")*r_" + g.edges()[j].id;
        }
        if (!sum.is_zero())
            report.add("ResidueRelation", relation,
                       "evaluates to " + to_string(sum) + ", expected 0");
    }

    for (long i : g.levels()) {
        LevelGraph upper = restrict_levels(g, LevelPredicate::Above, i);
        for (const std::vector<std::string>& comp : upper.components()) {
            bool pole_free = true;
            for (const Leg& leg : g.legs())
                if (leg.order < 0 &&
                    std::find(comp.begin(), comp.end(), leg.vertex) != comp.end())
                    pole_free = false;
            if (!pole_free) continue;
            Scalar sum;
            bool any = false;
            for (const Edge& e : g.edges()) {
                if (g.horizontal(e) || g.level_minus(e) != i) continue;
                if (std::find(comp.begin(), comp.end(), e.plus) == comp.end()) continue;
                sum += residues.at(e.id);
                any = true;
            }
            if (any && !sum.is_zero())
                report.add("GrcSum",
                           "level " + std::to_string(i) + " " + component_label(comp),
                           "residues sum to " + to_string(sum) + ", expected 0");
        }
    }
    return report;
}

} // namespace strata
