#pragma once

#include "strata/fixture.hpp"
#include "strata/matrix.hpp"

#include <string>
#include <vector>

namespace strata {

// Columns sorted by cycle level descending; within a level delta cycles
// first, then alphas, then the rest; ties keep input order. Echelon pivots
// under this order land on the highest-level cycles first.
std::vector<size_t> canonical_column_order(const Fixture& f);

// Reduced echelon form under the canonical column order.
Rref rref_equations(const Fixture& f, const Mat& A);

struct RowClassification {
    long top_level = 0;
    std::vector<std::string> crossed; // horizontal edges at top_level with
                                      // nonzero pairing against the row
    bool horizontal_crossing = false;
};

RowClassification classify_row(const Fixture& f, const Vec& row);

struct BoundaryBlock {
    long level = 0;
    bool projective = false; // all blocks below the top level are
    Mat equations;           // rows over the level's boundary basis, echelon form
};

struct DeletionEntry {
    std::string reason; // "horizontal-crossing" or "reduced-to-zero"
    size_t row = 0;     // index into the echelon form of the input
    long level = 0;
    std::vector<std::string> edges; // crossing witnesses, when applicable
    Vec ambient;                    // the deleted row
};

struct BoundaryEquationSet {
    std::vector<BoundaryBlock> blocks; // one per graph level, descending
    std::vector<DeletionEntry> log;
};

// Echelonize, classify each row at its top level, delete rows crossing a
// horizontal edge there, specialize survivors into their level, drop rows
// that reduce to zero, and echelonize each level block.
BoundaryEquationSet boundary_equations(const Fixture& f, const Mat& A);

// The same per-level subspaces computed without row bookkeeping: intersect
// the row space with each vertical filtration piece and push it down.
std::vector<BoundaryBlock> coordfree_boundary(const Fixture& f, const Mat& A);

} // namespace strata
