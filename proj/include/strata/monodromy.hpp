#pragma once

#include "strata/fixture.hpp"
#include "strata/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace strata {

// One twist generator: either a single horizontal edge or a whole level
// below the top (the multitwist along every vanishing class crossing it).
struct Generator {
    enum class Kind { HorizontalEdge, Level };
    Kind kind = Kind::Level;
    std::string edge;
    long level = 0;
};

// Accepts "edge:<id>" and "level:<integer>".
Generator parse_generator(const Fixture& f, const std::string& spec);

std::string to_string(const Generator& g);

// Every generator the fixture admits: horizontal edges in input order, then
// levels below the top in descending order.
std::vector<Generator> all_generators(const Fixture& f);

// Twist action on ambient coordinates; column l is the image of cycle l.
Mat twist_matrix(const Fixture& f, const Generator& gen);

// N = I - T. Nilpotency of order two is asserted, not assumed.
Mat monodromy_log(const Fixture& f, const Generator& gen);

// Total weight a vertical edge picks up from the level weights it crosses.
long derived_sigma(const Fixture& f, const Edge& e, const SigmaSpec& sigma);

// Weighted sum of the logs over all generators.
Mat arc_log(const Fixture& f, const SigmaSpec& sigma);

// Whether the solution set of A is carried into itself by N, acting on
// solution vectors through the transpose.
bool preserves(const Mat& A, const Mat& N);

// Linear form over the residue symbols of the edges; `raw` is the direct
// coefficient extraction from one equation row, `reduced` its canonical
// representative modulo the relations the vanishing classes already satisfy.
struct ResidueForm {
    size_t row = 0;
    std::map<std::string, Scalar> raw;
    std::map<std::string, Scalar> reduced;
    bool vacuous = false;
};

// One form per row of A. A must already be in reduced echelon form so the
// row indices in the result are meaningful to the caller.
std::vector<ResidueForm> forced_residue_equations(const Fixture& f, const Mat& A,
                                                  const SigmaSpec& sigma);

} // namespace strata
