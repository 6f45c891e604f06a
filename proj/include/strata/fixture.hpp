#pragma once

#include "strata/graph.hpp"
#include "strata/homology.hpp"
#include "strata/matrix.hpp"
#include "strata/validation.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace strata {

// Declared weights of a degeneration arc: one positive integer per level
// below the top and one per horizontal edge. Weights of vertical edges are
// derived, never declared.
struct SigmaSpec {
    std::map<long, long> levels;
    std::map<std::string, long> edges;
};

struct Fixture {
    std::vector<long> mu;
    LevelGraph graph;
    BasisModel model;
    Mat equations; // columns follow the basis cycle order

    bool has_residues = false;
    std::map<std::string, Scalar> residues;

    bool has_sigma = false;
    SigmaSpec sigma;
};

// Strict reader for the documented schema. Throws ParseError carrying the
// dotted path of the first offending field; never reports mathematical
// problems (that is validate_fixture's job).
Fixture parse_fixture(const std::string& text);
Fixture parse_fixture_file(const std::string& path);

// Inline JSON object or a path to one, same schema as the fixture's own
// sigma block.
SigmaSpec parse_sigma_spec(const Fixture& f, const std::string& inline_or_path);

// Canonical emission: fixed key order, scalars in canonical string form,
// zero entries omitted. parse(serialize(f)) is semantically f, and
// serialize is idempotent across the round trip.
std::string serialize_fixture(const Fixture& f);

uint64_t fnv1a64(const std::string& bytes);
// Hex digest of the canonical serialization; stamped on every report.
std::string fixture_digest(const Fixture& f);

// Graph rules, adapted-basis rules, residue consistency when residues are
// present, sigma completeness/positivity when sigma is present.
ValidationReport validate_fixture(const Fixture& f);

ValidationReport validate_sigma(const Fixture& f, const SigmaSpec& sigma);

} // namespace strata
