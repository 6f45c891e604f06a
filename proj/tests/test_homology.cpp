#include "strata/errors.hpp"
#include "strata/homology.hpp"
#include "strata/graph.hpp"
#include "support/testutil.hpp"

#include <doctest.h>

#include <algorithm>

using namespace strata;

namespace {

bool has_rule(const ValidationReport& r, const std::string& rule) {
    return std::any_of(r.findings.begin(), r.findings.end(),
                       [&](const Finding& f) { return f.rule == rule; });
}

Vec ambient_unit(const Fixture& f, const std::string& cycle) {
    Vec v(f.model.dim());
    v[f.model.cycle_index(cycle)] = Scalar(1);
    return v;
}

size_t slot(const Fixture& f, long level, const std::string& name) {
    const auto& basis = f.model.level(level).basis;
    return std::find(basis.begin(), basis.end(), name) - basis.begin();
}

Vec level_unit(const Fixture& f, long level, const std::string& name, Scalar coeff = Scalar(1)) {
    Vec v(f.model.level(level).dim());
    v[slot(f, level, name)] = coeff;
    return v;
}

} // namespace

TEST_CASE("filtrations of the worked example") {
    Fixture f = testutil::load("g7.json");
    Filtrations fl = build_filtrations(f.model, f.graph);
    REQUIRE(fl.L.count(0));
    REQUIRE(fl.L.count(-1));
    CHECK(fl.L.at(0).rows() == 13);
    CHECK(fl.L.at(-1).rows() == 5);
    CHECK(fl.W.at(0).rows() == 11);
    CHECK(fl.W.at(-1).rows() == 5);
    CHECK(row_spaces_equal(fl.W.at(-1), fl.L.at(-1)));

    // W at the top level drops exactly the delta directions.
    CHECK(!in_row_space(ambient_unit(f, "delta1"), fl.W.at(0)));
    CHECK(!in_row_space(ambient_unit(f, "delta2"), fl.W.at(0)));
    CHECK(in_row_space(ambient_unit(f, "alpha"), fl.W.at(0)));
    CHECK(in_row_space(ambient_unit(f, "lambda1"), fl.W.at(0)));

    // Chain: L_{-1} inside W_0 inside L_0.
    for (size_t r = 0; r < fl.L.at(-1).rows(); ++r)
        CHECK(in_row_space(fl.L.at(-1).row(r), fl.W.at(0)));
    for (size_t r = 0; r < fl.W.at(0).rows(); ++r)
        CHECK(in_row_space(fl.W.at(0).row(r), fl.L.at(0)));
}

TEST_CASE("filtrations without horizontal edges collapse to the level spans") {
    Fixture f = testutil::load("c3.json");
    Filtrations fl = build_filtrations(f.model, f.graph);
    CHECK(fl.L.at(0).rows() == 7);
    CHECK(fl.L.at(-1).rows() == 3);
    CHECK(fl.L.at(-2).rows() == 2);
    for (long i : {0L, -1L, -2L}) CHECK(row_spaces_equal(fl.W.at(i), fl.L.at(i)));
}

TEST_CASE("residue condition spans per level") {
    Fixture t1 = testutil::load("t1.json");
    GrcSpanEntry none = grc_span(t1.model, t1.graph, -1);
    CHECK(none.generators.empty());
    CHECK(none.reduced.mat.rows() == 0);

    Fixture t2 = testutil::load("t2.json");
    GrcSpanEntry mrh = grc_span(t2.model, t2.graph, 0);
    REQUIRE(mrh.generators.size() == 1);
    CHECK(mrh.generators[0].label == "mrh:eh");
    Vec expected = level_unit(t2, 0, "Lhp");
    expected[slot(t2, 0, "Lhm")] = Scalar(-1);
    CHECK(mrh.generators[0].coords == expected);

    Fixture c3 = testutil::load("c3.json");
    GrcSpanEntry comp = grc_span(c3.model, c3.graph, -1);
    REQUIRE(comp.generators.size() == 1);
    CHECK(comp.generators[0].label == "Y:v0");
    CHECK(comp.generators[0].coords == level_unit(c3, -1, "L01"));
    CHECK(grc_span(c3.model, c3.graph, -2).generators.empty());

    Fixture g7 = testutil::load("g7.json");
    GrcSpanEntry top = grc_span(g7.model, g7.graph, 0);
    REQUIRE(top.generators.size() == 2);
    CHECK(top.generators[0].label == "mrh:lambda1");
    CHECK(top.generators[1].label == "mrh:lambda2");
    CHECK(top.reduced.mat.rows() == 2);

    GrcSpanEntry low = grc_span(g7.model, g7.graph, -1);
    REQUIRE(low.generators.size() == 2);
    CHECK(low.generators[0].label == "Y:A+C");
    CHECK(low.generators[1].label == "Y:B");
    Vec ac = level_unit(g7, -1, "l4");
    ac[slot(g7, -1, "l5")] = Scalar(1);
    Vec b = level_unit(g7, -1, "l3");
    b[slot(g7, -1, "l6")] = Scalar(1);
    CHECK(low.generators[0].coords == ac);
    CHECK(low.generators[1].coords == b);
    CHECK(low.reduced.mat.rows() == 2);
}

TEST_CASE("specialization reduces modulo the residue span") {
    Fixture f = testutil::load("g7.json");

    CHECK(specialize(f.model, f.graph, ambient_unit(f, "alpha"), 0) ==
          level_unit(f, 0, "a_top"));
    CHECK(specialize(f.model, f.graph, ambient_unit(f, "gamma5"), 0) ==
          level_unit(f, 0, "g5_top", Scalar(-1)));

    // The matching horizontal pieces are identified, so the plus-side slot
    // lands on the minus-side representative.
    CHECK(specialize(f.model, f.graph, ambient_unit(f, "lambda1"), 0) ==
          level_unit(f, 0, "l1m"));
    CHECK(restrict_to_level(f.model, ambient_unit(f, "lambda1"), 0) ==
          level_unit(f, 0, "l1p"));

    // Lower-level support dies at the top level.
    CHECK(is_zero(specialize(f.model, f.graph, ambient_unit(f, "gamma3"), 0)));

    // Linearity on a mixed vector.
    Vec x = ambient_unit(f, "alpha");
    Vec y = ambient_unit(f, "lambda2");
    Vec combo(f.model.dim());
    for (size_t l = 0; l < combo.size(); ++l) combo[l] = x[l] + Scalar(2) * y[l];
    Vec image = specialize(f.model, f.graph, combo, 0);
    Vec expect = specialize(f.model, f.graph, x, 0);
    Vec other = specialize(f.model, f.graph, y, 0);
    for (size_t k = 0; k < image.size(); ++k)
        CHECK(image[k] == expect[k] + Scalar(2) * other[k]);

    // Deltas pair the horizontal classes, so they are not in the domain.
    CHECK_THROWS_AS(specialize(f.model, f.graph, ambient_unit(f, "delta1"), 0), DomainError);
    // Plain restriction does not care.
    CHECK(restrict_to_level(f.model, ambient_unit(f, "delta1"), 0) ==
          level_unit(f, 0, "l1p"));

    // Support above the target level is rejected by both maps.
    CHECK_THROWS_AS(specialize(f.model, f.graph, ambient_unit(f, "alpha"), -1), DomainError);
    CHECK_THROWS_AS(restrict_to_level(f.model, ambient_unit(f, "alpha"), -1), DomainError);

    // At the lower level the component sums are quotiented away.
    Vec l3 = specialize(f.model, f.graph, ambient_unit(f, "lambda3"), -1);
    CHECK(l3 == level_unit(f, -1, "l6", Scalar(-1)));
}

TEST_CASE("adapted basis validation accepts the corpus") {
    for (const char* name : {"t1.json", "t2.json", "c3.json", "s1.json", "g7.json"}) {
        Fixture f = testutil::load(name);
        ValidationReport r = validate_adapted_basis(f.model, f.graph);
        INFO(name);
        CHECK(r.ok());
    }
}

TEST_CASE("adapted basis validation pinpoints violations") {
    auto broken = [](auto mutate) {
        Fixture f = testutil::load("g7.json");
        mutate(f);
        return validate_adapted_basis(f.model, f.graph);
    };

    CHECK(has_rule(broken([](Fixture& f) {
              f.model.cycles[f.model.cycle_index("delta1")].intersections["lambda1"] = 2;
          }),
          "KroneckerRule"));
    CHECK(has_rule(broken([](Fixture& f) {
              auto& c = f.model.cycles[f.model.cycle_index("delta2")];
              c.intersections.erase("lambda2");
              c.intersections["lambda1"] = 1;
          }),
          "DeltaMultiplicity"));
    CHECK(has_rule(broken([](Fixture& f) {
              f.model.cycles[f.model.cycle_index("gamma1")].intersections["lambda1"] = 1;
          }),
          "AlphaHorizontalPairing"));
    CHECK(has_rule(broken([](Fixture& f) {
              f.model.cycles[f.model.cycle_index("gamma3")].intersections["lambda1"] = 1;
          }),
          "LevelPairing"));
    CHECK(has_rule(broken([](Fixture& f) {
              std::vector<long> v(f.model.dim(), 0);
              v[f.model.cycle_index("delta1")] = 1;
              f.model.vanishing["lambda1"] = v;
          }),
          "VanishingClassPairing"));
    CHECK(has_rule(broken([](Fixture& f) {
              auto& c = f.model.cycles[f.model.cycle_index("lambda1")];
              c.restriction.assign(c.restriction.size(), Scalar(0));
          }),
          "SpanningFailure"));
    CHECK(has_rule(broken([](Fixture& f) { f.model.vanishing.erase("lambda5"); }),
          "VanishingShape"));
    CHECK(has_rule(broken([](Fixture& f) {
              f.model.levels.at(-1).classes.erase("lambda3");
          }),
          "MissingClass"));
    CHECK(has_rule(broken([](Fixture& f) {
              f.model.cycles[f.model.cycle_index("gamma3")].level = 5;
          }),
          "CycleLevel"));
    CHECK(has_rule(broken([](Fixture& f) {
              f.model.cycles[f.model.cycle_index("alpha")].restriction.resize(3);
          }),
          "RestrictionShape"));
    CHECK(has_rule(broken([](Fixture& f) {
              f.model.cycles[f.model.cycle_index("alpha")].intersections["nope"] = 1;
          }),
          "UnknownEdge"));
    CHECK(has_rule(broken([](Fixture& f) { f.model.cycles.push_back(f.model.cycles[2]); }),
          "DuplicateCycle"));
}

TEST_CASE("residue consistency") {
    Fixture g7 = testutil::load("g7.json");
    REQUIRE(g7.has_residues);
    CHECK(residue_consistency(g7.model, g7.graph, g7.residues).ok());

    // Breaking one of the forced relations trips both detectors.
    auto bad = g7.residues;
    bad["lambda3"] = Scalar(8);
    ValidationReport r = residue_consistency(g7.model, g7.graph, bad);
    CHECK(has_rule(r, "ResidueRelation"));
    CHECK(has_rule(r, "GrcSum"));

    auto incomplete = g7.residues;
    incomplete.erase("lambda6");
    CHECK(has_rule(residue_consistency(g7.model, g7.graph, incomplete), "MissingResidue"));

    // With a pole above, the single residue is unconstrained.
    Fixture t1 = testutil::load("t1.json");
    CHECK(residue_consistency(t1.model, t1.graph, t1.residues).ok());
    CHECK(residue_consistency(t1.model, t1.graph, {{"e1", Scalar(-5)}}).ok());

    // The chain fixture pins its top edge residue to zero.
    Fixture c3 = testutil::load("c3.json");
    CHECK(residue_consistency(c3.model, c3.graph, c3.residues).ok());
    auto pinned = c3.residues;
    pinned["e01"] = Scalar(1);
    ValidationReport rc = residue_consistency(c3.model, c3.graph, pinned);
    CHECK(has_rule(rc, "ResidueRelation"));
    CHECK(has_rule(rc, "GrcSum"));

    Fixture t2 = testutil::load("t2.json");
    CHECK(residue_consistency(t2.model, t2.graph, t2.residues).ok());
}
