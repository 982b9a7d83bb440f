#include <doctest.h>

#include "superjac/modrep.hpp"

using namespace superjac;

TEST_SUITE("modrep") {

TEST_CASE("standard generators and group orders") {
    PermGenerators s5 = standard_generators(5, GroupLabel::SymmetricFull);
    CHECK(s5.generators.size() == 2);
    CHECK(group_order(s5) == 120);

    PermGenerators a6 = standard_generators(6, GroupLabel::Alternating);
    for (const Perm& g : a6.generators) CHECK(perm_is_even(g));
    CHECK(group_order(a6) == 360);

    PermGenerators a3 = standard_generators(3, GroupLabel::Alternating);
    CHECK(a3.generators.size() == 1);
    CHECK(group_order(a3) == 3);

    CHECK(group_order(standard_generators(7, GroupLabel::Alternating)) == 2520);
    CHECK_THROWS_AS(standard_generators(2, GroupLabel::SymmetricFull), ValidationError);
}

TEST_CASE("double transitivity") {
    CHECK(is_doubly_transitive(standard_generators(6, GroupLabel::SymmetricFull)));
    CHECK(is_doubly_transitive(standard_generators(5, GroupLabel::Alternating)));

    PermGenerators cyclic;
    cyclic.n = 5;
    cyclic.generators.push_back(perm_cycle(5, {1, 2, 3, 4, 5}));
    CHECK(!is_doubly_transitive(cyclic));
}

TEST_CASE("module dimensions and permutation matrices") {
    PermGenerators s6 = standard_generators(6, GroupLabel::SymmetricFull);
    FpModule full = build_module(s6, 3, ModuleTag::FullPerm);
    CHECK(full.dim == 6);
    for (const FpMatrix& g : full.action) {
        for (int i = 0; i < 6; ++i) {
            int row_ones = 0, col_ones = 0;
            for (int j = 0; j < 6; ++j) {
                CHECK((g.at(i, j) == 0 || g.at(i, j) == 1));
                row_ones += g.at(i, j) == 1;
                col_ones += g.at(j, i) == 1;
            }
            CHECK(row_ones == 1);
            CHECK(col_ones == 1);
        }
    }
    CHECK(build_module(s6, 3, ModuleTag::Deg0).dim == 5);
    CHECK(build_module(s6, 3, ModuleTag::V).dim == 5);
    CHECK(build_module(s6, 3, ModuleTag::W).dim == 4);
    CHECK_THROWS_AS(build_module(standard_generators(5, GroupLabel::SymmetricFull), 3,
                                 ModuleTag::W),
                    ValidationError);
}

TEST_CASE("module actions respect composition") {
    PermGenerators a6 = standard_generators(6, GroupLabel::Alternating);
    for (ModuleTag tag : {ModuleTag::FullPerm, ModuleTag::Deg0, ModuleTag::V, ModuleTag::W}) {
        FpModule mod = build_module(a6, 3, tag);
        // matrix of g1 then g2 equals matrix(g2) * matrix(g1)
        PermGenerators composed;
        composed.n = 6;
        composed.generators.push_back(perm_compose(a6.generators[0], a6.generators[1]));
        FpModule cm = build_module(composed, 3, tag);
        CHECK(cm.action[0] == mod.action[1] * mod.action[0]);
    }
}

TEST_CASE("commutant of the quotient module is scalar") {
    PermGenerators a6 = standard_generators(6, GroupLabel::Alternating);
    Commutant c = commutant(build_module(a6, 3, ModuleTag::V));
    CHECK(c.dimension == 1);
    CHECK(c.basis.front().is_scalar());
}

TEST_CASE("commutant of the permutation module is two-dimensional") {
    PermGenerators s5 = standard_generators(5, GroupLabel::SymmetricFull);
    Commutant c = commutant(build_module(s5, 2, ModuleTag::FullPerm));
    CHECK(c.dimension == 2);
    // identity and all-ones span it
    FpMatrix id = FpMatrix::identity(2, 5);
    FpMatrix ones(2, 5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) ones.set(i, j, 1);
    EchelonBasis span(2, 25);
    auto flatten = [](const FpMatrix& m) {
        FpVec v;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
        return v;
    };
    span.add(flatten(id));
    span.add(flatten(ones));
    for (const FpMatrix& b : c.basis) CHECK(span.contains(flatten(b)));
}

TEST_CASE("commutant under the trivial group is everything") {
    PermGenerators trivial;
    trivial.n = 6;
    CHECK(commutant(build_module(trivial, 3, ModuleTag::V)).dimension == 25);
}

TEST_CASE("commutant dimension 2 for doubly transitive permutation modules") {
    for (int n = 5; n <= 10; ++n)
        for (long long p : {2LL, 3LL, 5LL})
            for (GroupLabel label : {GroupLabel::SymmetricFull, GroupLabel::Alternating}) {
                PermGenerators g = standard_generators(n, label);
                CHECK(commutant(build_module(g, p, ModuleTag::FullPerm)).dimension == 2);
            }
}

TEST_CASE("simplicity verdicts") {
    PermGenerators a6 = standard_generators(6, GroupLabel::Alternating);

    SimplicityResult heart = is_simple(build_module(a6, 3, ModuleTag::W), 42);
    CHECK(heart.simple);

    FpModule v = build_module(a6, 3, ModuleTag::V);
    SimplicityResult quot = is_simple(v, 42);
    CHECK(!quot.simple);
    REQUIRE(quot.witness.has_value());
    // the only proper submodule of V is the heart, of dimension n - 2
    CHECK(quot.witness->size() == 4);

    FpModule full = build_module(standard_generators(6, GroupLabel::SymmetricFull), 3,
                                 ModuleTag::FullPerm);
    SimplicityResult perm = is_simple(full, 42);
    CHECK(!perm.simple);
    REQUIRE(perm.witness.has_value());

    // every witness is validated: proper, nonzero, invariant
    for (const auto& [mod, res] :
         std::vector<std::pair<FpModule, SimplicityResult>>{{v, quot}, {full, perm}}) {
        const auto& rows = *res.witness;
        REQUIRE(!rows.empty());
        EchelonBasis basis(mod.p, mod.dim);
        for (const FpVec& r : rows) basis.add(r);
        CHECK(basis.size() < mod.dim);
        CHECK(basis.size() > 0);
        for (const FpVec& r : rows)
            for (const FpMatrix& g : mod.action) CHECK(basis.contains(g.apply(r)));
    }
}

TEST_CASE("simplicity is deterministic in the seed") {
    PermGenerators a6 = standard_generators(6, GroupLabel::Alternating);
    FpModule v = build_module(a6, 3, ModuleTag::V);
    SimplicityResult r1 = is_simple(v, 7);
    SimplicityResult r2 = is_simple(v, 7);
    CHECK(r1.simple == r2.simple);
    CHECK(r1.trials_used == r2.trials_used);
    CHECK(*r1.witness == *r2.witness);
}

TEST_CASE("scalar commutant reports across the grid") {
    CommutantReport a = commutant_report(6, 3, GroupLabel::Alternating);
    CHECK(a.passed);
    CommutantReport s = commutant_report(6, 2, GroupLabel::SymmetricFull);
    CHECK(s.passed);
    CommutantReport big = commutant_report(10, 5, GroupLabel::Alternating);
    CHECK(big.passed);
    CHECK(big.v_commutant_dim == 1);

    CHECK_THROWS_AS(commutant_report(5, 3, GroupLabel::Alternating), ValidationError);
    CHECK_THROWS_AS(commutant_report(4, 2, GroupLabel::SymmetricFull), ValidationError);
}

} // TEST_SUITE
