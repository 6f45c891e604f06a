#include "strata/graph.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace strata {

LevelGraph::LevelGraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
                       std::vector<Leg> legs)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), legs_(std::move(legs)) {
    for (size_t i = 0; i < vertices_.size(); ++i) {
        if (!vertex_index_.emplace(vertices_[i].id, i).second)
            throw ParseError("graph.vertices", "duplicate vertex id '" + vertices_[i].id + "'");
    }
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (!edge_index_.emplace(edges_[i].id, i).second)
            throw ParseError("graph.edges", "duplicate edge id '" + edges_[i].id + "'");
        for (const std::string* end : {&edges_[i].plus, &edges_[i].minus})
            if (!vertex_index_.count(*end))
                throw ParseError("graph.edges[" + std::to_string(i) + "]",
                                 "unknown vertex '" + *end + "'");
    }
    std::set<std::string> leg_ids;
    for (size_t i = 0; i < legs_.size(); ++i) {
        if (!leg_ids.insert(legs_[i].id).second)
            throw ParseError("graph.legs", "duplicate leg id '" + legs_[i].id + "'");
        if (!vertex_index_.count(legs_[i].vertex))
            throw ParseError("graph.legs[" + std::to_string(i) + "]",
                             "unknown vertex '" + legs_[i].vertex + "'");
    }
}

bool LevelGraph::has_vertex(const std::string& id) const { return vertex_index_.count(id); }

const Vertex& LevelGraph::vertex(const std::string& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end())
        throw DomainError(DomainError::Code::UnknownGenerator, "unknown vertex '" + id + "'");
    return vertices_[it->second];
}

bool LevelGraph::has_edge(const std::string& id) const { return edge_index_.count(id); }

const Edge& LevelGraph::edge(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end())
        throw DomainError(DomainError::Code::UnknownGenerator, "unknown edge '" + id + "'");
    return edges_[it->second];
}

std::vector<std::string> LevelGraph::horizontal_edges_at(long i) const {
    std::vector<std::string> out;
    for (const Edge& e : edges_)
        if (horizontal(e) && level_plus(e) == i) out.push_back(e.id);
    return out;
}

std::vector<long> LevelGraph::levels() const {
    std::set<long, std::greater<long>> seen;
    for (const Vertex& v : vertices_) seen.insert(v.level);
    return {seen.begin(), seen.end()};
}

long LevelGraph::min_level() const {
    if (vertices_.empty())
        throw DomainError(DomainError::Code::LevelOutOfRange, "empty graph has no levels");
    long m = 0;
    for (const Vertex& v : vertices_) m = std::min(m, v.level);
    return m;
}

std::vector<std::vector<std::string>> LevelGraph::components() const {
    std::map<std::string, std::string> parent;
    for (const Vertex& v : vertices_) parent[v.id] = v.id;
    auto find = [&](std::string x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    for (const Edge& e : edges_) parent[find(e.plus)] = find(e.minus);

    std::map<std::string, size_t> root_slot;
    std::vector<std::vector<std::string>> out;
    for (const Vertex& v : vertices_) {
        std::string r = find(v.id);
        auto [it, fresh] = root_slot.emplace(r, out.size());
        if (fresh) out.emplace_back();
        out[it->second].push_back(v.id);
    }
    return out;
}

long LevelGraph::first_betti() const {
    return static_cast<long>(edges_.size()) - static_cast<long>(vertices_.size()) +
           static_cast<long>(components().size());
}

long LevelGraph::genus() const {
    long g = first_betti();
    for (const Vertex& v : vertices_) g += v.genus;
    return g;
}

ValidationReport validate_graph(const LevelGraph& g, const std::vector<long>& mu) {
    ValidationReport report;

    if (g.vertices().empty()) {
        report.add("LevelGap", "graph", "graph has no vertices");
        return report;
    }

    std::set<long> level_set;
    for (const Vertex& v : g.vertices()) {
        level_set.insert(v.level);
        if (v.genus < 0) report.add("Unstable", v.id, "negative genus");
    }
    if (!level_set.count(0)) {
        report.add("LevelGap", "graph", "no vertex at level 0");
    } else {
        long lo = *level_set.begin();
        for (long k = lo; k <= 0; ++k)
            if (!level_set.count(k))
                report.add("LevelGap", "graph", "missing level " + std::to_string(k));
    }
    if (*level_set.rbegin() > 0)
        report.add("LevelGap", "graph", "positive level present");

    for (const Edge& e : g.edges()) {
        long lp = g.level_plus(e);
        long lm = g.level_minus(e);
        if (e.kappa < 0) {
            report.add("EnhancementMismatch", e.id, "negative prong count");
        } else if (lp == lm && e.kappa != 0) {
            report.add("EnhancementMismatch", e.id,
                       "level-preserving edge must have zero prongs");
        } else if (lp != lm && e.kappa == 0) {
            report.add("EnhancementMismatch", e.id,
                       "level-crossing edge must have positive prongs");
        }
        if (lp < lm)
            report.add("EnhancementMismatch", e.id, "plus endpoint below minus endpoint");
    }

    if (g.components().size() > 1)
        report.add("Disconnected", "graph",
                   std::to_string(g.components().size()) + " components");

    std::map<std::string, long> valence;
    for (const Edge& e : g.edges()) {
        ++valence[e.plus];
        ++valence[e.minus];
    }
    for (const Leg& l : g.legs()) ++valence[l.vertex];
    for (const Vertex& v : g.vertices())
        if (2 * v.genus - 2 + valence[v.id] <= 0)
            report.add("Unstable", v.id,
                       "2g-2+valence = " + std::to_string(2 * v.genus - 2 + valence[v.id]));

    // Matching-orders rule per vertex, then the global degree count.
    LocalOrders orders = local_orders(g);
    for (const Vertex& v : g.vertices()) {
        long want = 2 * v.genus - 2;
        long got = orders.vertex_sum.count(v.id) ? orders.vertex_sum.at(v.id) : 0;
        if (got != want)
            report.add("DegreeMismatch", v.id,
                       "half-edge orders sum to " + std::to_string(got) + ", expected " +
                           std::to_string(want));
    }
    long mu_sum = std::accumulate(mu.begin(), mu.end(), 0L);
    long want_global = 2 * g.genus() - 2;
    if (mu_sum != want_global)
        report.add("DegreeMismatch", "global",
                   "signature sums to " + std::to_string(mu_sum) + ", expected " +
                       std::to_string(want_global));
    std::multiset<long> mu_set(mu.begin(), mu.end());
    std::multiset<long> leg_set;
    for (const Leg& l : g.legs()) leg_set.insert(l.order);
    if (mu_set != leg_set)
        report.add("DegreeMismatch", "mu", "leg orders do not match the signature");

    if (level_set.count(0)) {
        long lo = *level_set.begin();
        for (long i = -1; i >= lo; --i) {
            bool crossed = false;
            for (const Edge& e : g.edges())
                if (e.kappa > 0 && g.crosses(e, i)) crossed = true;
            if (!crossed)
                report.add("LevelNotCrossed", "level " + std::to_string(i),
                           "no vertical edge spans this level");
        }
    }

    return report;
}

LevelGraph restrict_levels(const LevelGraph& g, LevelPredicate pred, long i) {
    std::vector<long> lv = g.levels();
    if (std::find(lv.begin(), lv.end(), i) == lv.end())
        throw DomainError(DomainError::Code::LevelOutOfRange,
                          "level " + std::to_string(i) + " not present");
    auto keep = [&](long l) {
        switch (pred) {
            case LevelPredicate::AtMost: return l <= i;
            case LevelPredicate::Equal: return l == i;
            case LevelPredicate::Above: return l > i;
        }
        return false;
    };
    std::vector<Vertex> vs;
    for (const Vertex& v : g.vertices())
        if (keep(v.level)) vs.push_back(v);
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (keep(g.level_plus(e)) && keep(g.level_minus(e))) es.push_back(e);
    std::vector<Leg> ls;
    for (const Leg& l : g.legs())
        if (keep(g.vertex(l.vertex).level)) ls.push_back(l);
    return LevelGraph(std::move(vs), std::move(es), std::move(ls));
}

ProngData prong_data(const LevelGraph& g, long i) {
    if (i >= 0 || i < g.min_level())
        throw DomainError(DomainError::Code::LevelOutOfRange,
                          "prong data undefined at level " + std::to_string(i));
    ProngData out;
    for (const Edge& e : g.edges())
        if (g.crosses(e, i)) out.a = std::lcm(out.a, e.kappa);
    bool any = false;
    for (const Edge& e : g.edges())
        if (g.crosses(e, i)) {
            out.m[e.id] = out.a / e.kappa;
            any = true;
        }
    if (!any)
        throw DomainError(DomainError::Code::LevelOutOfRange,
                          "no edge crosses level " + std::to_string(i));
    return out;
}

LocalOrders local_orders(const LevelGraph& g) {
    LocalOrders out;
    for (const Vertex& v : g.vertices()) {
        out.by_vertex[v.id];
        out.vertex_sum[v.id] = 0;
    }
    for (const Edge& e : g.edges()) {
        long plus_order = e.kappa == 0 ? -1 : e.kappa - 1;
        long minus_order = e.kappa == 0 ? -1 : -e.kappa - 1;
        out.by_vertex[e.plus][e.id + "+"] = plus_order;
        out.by_vertex[e.minus][e.id + "-"] = minus_order;
        out.vertex_sum[e.plus] += plus_order;
        out.vertex_sum[e.minus] += minus_order;
    }
    for (const Leg& l : g.legs()) {
        out.by_vertex[l.vertex][l.id] = l.order;
        out.vertex_sum[l.vertex] += l.order;
    }
    return out;
}

Monomial scaling_monomial(const LevelGraph& g, long i) {
    if (i > 0 || i < g.min_level())
        throw DomainError(DomainError::Code::LevelOutOfRange,
                          "no scaling monomial at level " + std::to_string(i));
    Monomial m;
    for (long k = i; k <= -1; ++k)
        m *= Monomial::var(MonomialVar::level_var(k), prong_data(g, k).a);
    return m;
}

Monomial plumbing_monomial(const LevelGraph& g, const std::string& edge_id) {
    const Edge& e = g.edge(edge_id);
    if (g.horizontal(e)) return Monomial::var(MonomialVar::edge_var(e.id));
    Monomial m;
    for (long k = g.level_minus(e); k <= g.level_plus(e) - 1; ++k)
        m *= Monomial::var(MonomialVar::level_var(k), prong_data(g, k).m.at(e.id));
    return m;
}

std::map<std::string, bool> check_plumbing_relation(const LevelGraph& g) {
    std::map<std::string, bool> out;
    for (const Edge& e : g.edges()) {
        if (g.horizontal(e)) continue;
        Monomial lhs = scaling_monomial(g, g.level_minus(e));
        Monomial rhs =
            plumbing_monomial(g, e.id).pow(e.kappa) * scaling_monomial(g, g.level_plus(e));
        out[e.id] = lhs == rhs;
    }
    return out;
}

} // namespace strata
