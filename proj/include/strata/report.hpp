#pragma once

#include "strata/boundary.hpp"
#include "strata/fixture.hpp"
#include "strata/homology.hpp"
#include "strata/monodromy.hpp"
#include "strata/validation.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace strata {

// Every command renders to both shapes; the CLI picks one. Output is a pure
// function of the fixture and payload, so repeated runs are byte-identical.
struct Rendered {
    std::string text;
    nlohmann::ordered_json json;
};

// "3*a - 10/3*b", "-x + y", "0" for the empty combination.
std::string format_combination(const std::vector<std::pair<Scalar, std::string>>& terms);

Rendered render_validation(const Fixture& f, const ValidationReport& report);
Rendered render_boundary(const Fixture& f, const BoundaryEquationSet& set);
Rendered render_grc(const Fixture& f, const std::vector<GrcSpanEntry>& spans);
Rendered render_forced(const Fixture& f, const SigmaSpec& sigma,
                       const std::vector<ResidueForm>& forms);
Rendered render_monodromy(const Fixture& f, const Generator& gen, const Mat& twist,
                          const Mat& log);
Rendered render_report(const Fixture& f, const ValidationReport& validation,
                       const BoundaryEquationSet& set, const std::vector<GrcSpanEntry>& spans,
                       const SigmaSpec* sigma, const std::vector<ResidueForm>* forms);

} // namespace strata
