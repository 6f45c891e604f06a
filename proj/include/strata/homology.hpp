#pragma once

#include "strata/graph.hpp"
#include "strata/matrix.hpp"
#include "strata/validation.hpp"

#include <map>
#include <string>
#include <vector>

namespace strata {

enum class CycleKind { Alpha, Delta, Other };

std::string to_string(CycleKind k);

// One ambient basis cycle. `level` is the deepest level the cycle touches,
// `intersections` pairs it against each edge's vanishing class (missing keys
// mean zero), `restriction` gives its declared image in the boundary basis
// of its own level.
struct Cycle {
    std::string id;
    long level = 0;
    CycleKind kind = CycleKind::Other;
    std::map<std::string, long> intersections;
    Vec restriction;
};

// Boundary homology model of one level: a named basis, plus the coordinates
// of the classes contributed by edges. Vertical edges bottoming out at this
// level appear under their id; a horizontal edge at this level contributes
// two classes, keyed id+"+" and id+"-".
struct LevelModel {
    std::vector<std::string> basis;
    std::map<std::string, std::vector<long>> classes;

    size_t dim() const { return basis.size(); }
    const std::vector<long>& class_coords(const std::string& key) const;
};

struct BasisModel {
    std::vector<Cycle> cycles;
    // Ambient coordinates of each edge's vanishing class, dense, length dim().
    std::map<std::string, std::vector<long>> vanishing;
    std::map<long, LevelModel> levels;

    size_t dim() const { return cycles.size(); }
    bool has_cycle(const std::string& id) const;
    size_t cycle_index(const std::string& id) const;
    const LevelModel& level(long i) const;

    long pairing(const std::string& cycle_id, const std::string& edge_id) const;
    // Bilinear extension of the intersection table to an ambient vector.
    Scalar pairing_with(const Vec& x, const std::string& edge_id) const;
    Vec lambda(const std::string& edge_id) const;
};

// L is the by-level filtration (span of cycles at or below each level); W
// additionally intersects with the kernel of the pairings against that
// level's horizontal vanishing classes. Rows of each entry are an exact
// basis of the subspace in ambient coordinates.
struct Filtrations {
    std::map<long, Mat> L;
    std::map<long, Mat> W;
};

Filtrations build_filtrations(const BasisModel& model, const LevelGraph& g);

struct GrcGenerator {
    std::string label; // "Y:<vertices>" for component sums, "mrh:<edge>" for
                       // horizontal matching
    Vec coords;        // in the level's boundary basis
};

struct GrcSpanEntry {
    long level = 0;
    std::vector<GrcGenerator> generators;
    Rref reduced; // canonical form of the span
};

GrcSpanEntry grc_span(const BasisModel& model, const LevelGraph& g, long i);

// Specialization to level i, reduced to the canonical representative modulo
// the residue-condition span. Requires x in W_i.
Vec specialize(const BasisModel& model, const LevelGraph& g, const Vec& x, long i);

// Plain restriction to level i, no quotient. Requires x in L_i.
Vec restrict_to_level(const BasisModel& model, const Vec& x, long i);

ValidationReport validate_adapted_basis(const BasisModel& model, const LevelGraph& g);

ValidationReport residue_consistency(const BasisModel& model, const LevelGraph& g,
                                     const std::map<std::string, Scalar>& residues);

} // namespace strata
