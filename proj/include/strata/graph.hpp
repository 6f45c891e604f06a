#pragma once

#include "strata/monomial.hpp"
#include "strata/validation.hpp"

#include <map>
#include <string>
#include <vector>

namespace strata {

struct Vertex {
    std::string id;
    long genus = 0;
    long level = 0;
};

// Endpoints are an ordered (plus, minus) pair. For vertical edges plus is the
// higher-level end; for horizontal edges the file's declared order is kept
// and fixes all downstream signs. kappa == 0 exactly for horizontal edges.
struct Edge {
    std::string id;
    std::string plus;
    std::string minus;
    long kappa = 0;
};

struct Leg {
    std::string id;
    std::string vertex;
    long order = 0;
};

// A level graph with prong enhancement. The constructor enforces structural
// well-formedness only (unique ids, resolvable endpoints); the mathematical
// rules live in validate_graph so that bad fixtures produce findings rather
// than exceptions. Disconnected and empty graphs are representable because
// level restrictions produce them.
class LevelGraph {
public:
    LevelGraph() = default;
    LevelGraph(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<Leg> legs);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Leg>& legs() const { return legs_; }

    bool has_vertex(const std::string& id) const;
    const Vertex& vertex(const std::string& id) const;
    bool has_edge(const std::string& id) const;
    const Edge& edge(const std::string& id) const;

    bool horizontal(const Edge& e) const { return e.kappa == 0; }
    long level_plus(const Edge& e) const { return vertex(e.plus).level; }
    long level_minus(const Edge& e) const { return vertex(e.minus).level; }

    // Vertical edge spanning level i: strictly above on the plus side,
    // at or below on the minus side.
    bool crosses(const Edge& e, long i) const {
        return !horizontal(e) && level_plus(e) > i && i >= level_minus(e);
    }

    std::vector<std::string> horizontal_edges_at(long i) const;

    // Distinct levels, descending. Empty for the empty graph.
    std::vector<long> levels() const;
    long min_level() const;

    // Vertex ids grouped by connected component; components and members are
    // each ordered by first appearance in the vertex list.
    std::vector<std::vector<std::string>> components() const;

    long first_betti() const;
    // Sum of vertex genera plus first Betti number.
    long genus() const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<Leg> legs_;
    std::map<std::string, size_t> vertex_index_;
    std::map<std::string, size_t> edge_index_;
};

ValidationReport validate_graph(const LevelGraph& g, const std::vector<long>& mu);

enum class LevelPredicate { AtMost, Equal, Above };

LevelGraph restrict_levels(const LevelGraph& g, LevelPredicate pred, long i);

struct ProngData {
    long a = 1;
    std::map<std::string, long> m; // crossing edge id -> a / kappa
};

// Defined for the levels strictly below the top.
ProngData prong_data(const LevelGraph& g, long i);

// Half-edge orders per vertex: legs carry their signature order, edge ends
// carry kappa-1 on the plus side and -kappa-1 on the minus side. Keys are
// leg ids and edge ids suffixed with "+" or "-".
struct LocalOrders {
    std::map<std::string, std::map<std::string, long>> by_vertex;
    std::map<std::string, long> vertex_sum;
};

LocalOrders local_orders(const LevelGraph& g);

Monomial scaling_monomial(const LevelGraph& g, long i);
Monomial plumbing_monomial(const LevelGraph& g, const std::string& edge_id);

// Exponent identity relating the two monomial families across each vertical
// edge; true on every edge of every valid graph, exposed as a self-test.
std::map<std::string, bool> check_plumbing_relation(const LevelGraph& g);

} // namespace strata
