#include <doctest.h>

#include <random>

#include "superjac/multanalysis.hpp"

using namespace superjac;

TEST_SUITE("multanalysis") {

TEST_CASE("orbit partitions of the unit group") {
    UnitPartition p98 = orbit_partition(9, 3, 8);
    CHECK(p98.blocks == std::vector<std::vector<long long>>{{1, 8}, {2, 7}, {4, 5}});

    UnitPartition ident = orbit_partition(9, 3, 1);
    CHECK(ident.blocks.size() == 6);
    for (const auto& b : ident.blocks) CHECK(b.size() == 1);

    UnitPartition p167 = orbit_partition(16, 2, 7);
    CHECK(p167.blocks ==
          std::vector<std::vector<long long>>{{1, 7}, {3, 5}, {9, 15}, {11, 13}});

    CHECK_THROWS_AS(orbit_partition(9, 3, 3), ValidationError);
}

TEST_CASE("constancy propagation") {
    ConstancyResult odd = monotone_constancy(9, 3, 8);
    CHECK(odd.fully_constant);
    CHECK(odd.classes.size() == 1);

    ConstancyResult even = monotone_constancy(16, 2, 7);
    CHECK(!even.fully_constant);
    CHECK(even.forced_prefix == 7);
    REQUIRE(even.classes.size() == 2);
    CHECK(even.classes[0] == std::vector<long long>{1, 3, 5, 7});
    CHECK(even.classes[1] == std::vector<long long>{9, 11, 13, 15});
    REQUIRE(even.witness.has_value());
    const auto& w = *even.witness;
    // theta_7-invariant, nondecreasing, non-constant
    for (long long u : {1LL, 3LL, 5LL, 7LL}) CHECK(w.at(u) == 0);
    for (long long u : {9LL, 11LL, 13LL, 15LL}) CHECK(w.at(u) == 1);
    for (const auto& [u, val] : w) {
        long long ku = (7 * u) % 16;
        CHECK(w.at(ku) == val);
    }

    CHECK(monotone_constancy(27, 3, 4).fully_constant);
    CHECK_THROWS_AS(monotone_constancy(9, 3, 1), ValidationError);

    // the nonincreasing orientation keeps the classes, flips the witness
    ConstancyResult down = monotone_constancy(16, 2, 7, true);
    CHECK(down.classes == even.classes);
    REQUIRE(down.witness.has_value());
    CHECK(down.witness->at(1) == 1);
    CHECK(down.witness->at(9) == 0);
}

TEST_CASE("constancy sweeps") {
    SweepReport odd = constancy_sweep(3, 3);  // q = 3, 9, 27
    CHECK(odd.all_pass);
    CHECK(odd.sharp_cases.empty());

    SweepReport even = constancy_sweep(2, 5);  // q up to 32
    CHECK(even.all_pass);
    bool has_16_7 = false;
    for (const SweepCase& sc : even.sharp_cases)
        if (sc.q == 16 && sc.k == 7) has_16_7 = true;
    CHECK(has_16_7);

    CHECK(constancy_sweep(5, 2).all_pass);
}

TEST_CASE("invariant multipliers") {
    CurveFamily f = make_family(3, 2, 1, 2);
    CHECK(invariant_multipliers(multiplicity_profile(f), 3) == std::set<long long>{1});

    // constant profile: every unit preserves it
    MultiplicityProfile constant;
    constant.q = 9;
    for (long long i : {1, 2, 4, 5, 7, 8}) constant.values[i] = 3;
    CHECK(invariant_multipliers(constant, 3).size() == 6);

    // q = 4 family: n_1 = 1 != 4 = n_3 rules out k = 3
    CurveFamily g = make_family(2, 2, 1, 3);
    CHECK(invariant_multipliers(multiplicity_profile(g), 2) == std::set<long long>{1});
}

TEST_CASE("multiplier sets are subgroups") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        long long q = std::vector<long long>{8, 9, 16, 25, 27}[rng() % 5];
        long long p = q % 2 == 0 ? 2 : (q % 3 == 0 ? 3 : 5);
        MultiplicityProfile prof;
        prof.q = q;
        long long v = 0;
        for (long long i = 1; i <= q; ++i) {
            if (i % p == 0) continue;
            v += static_cast<long long>(rng() % 3);
            prof.values[i] = v;
        }
        std::set<long long> ks = invariant_multipliers(prof, p);
        REQUIRE(ks.count(1) == 1);
        for (long long a : ks)
            for (long long b : ks) {
                long long ab = (a * b) % q;
                if (ab == 0) ab = q;
                CHECK(ks.count(ab) == 1);
            }
    }
}

TEST_CASE("center verdicts") {
    CenterReport a = center_verdict(make_family(3, 2, 1, 2));
    CHECK(a.verified);
    CHECK(a.center == "Q(zeta_9)");

    CenterReport b = center_verdict(make_family(2, 2, 1, 3));
    CHECK(b.verified);
    CHECK(b.center == "Q(zeta_4)");

    CHECK_THROWS_AS(center_verdict(make_family(3, 2, 0, 7)), RegimeError);
}

TEST_CASE("certificate for (3,2,1,2) alternating") {
    Certificate cert = endomorphism_certificate(make_family(3, 2, 1, 2), GroupLabel::Alternating);
    CHECK(!cert.failed());
    REQUIRE(cert.conclusion.has_value());
    CHECK(cert.algebra_product == "Q(zeta_3) x Q(zeta_9)");
    REQUIRE(cert.conclusion->size() == 2);
    CHECK((*cert.conclusion)[0].dimension == 4);
    CHECK((*cert.conclusion)[0].provenance == "cited");
    CHECK((*cert.conclusion)[1].dimension == 15);
    CHECK((*cert.conclusion)[1].provenance == "verified");

    // every cited entry names its source
    for (const CertificateCheck& c : cert.checks) {
        CHECK((c.status == "verified" || c.status == "cited"));
        if (c.status == "cited") CHECK(!c.detail.empty());
    }
}

TEST_CASE("certificate for (2,3,1,3) symmetric") {
    Certificate cert =
        endomorphism_certificate(make_family(2, 3, 1, 3), GroupLabel::SymmetricFull);
    REQUIRE(cert.conclusion.has_value());
    CHECK(cert.algebra_product == "Q(zeta_2) x Q(zeta_4) x Q(zeta_8)");
    std::vector<long long> dims;
    for (const CertificateLevel& lv : *cert.conclusion) dims.push_back(lv.dimension);
    CHECK(dims == std::vector<long long>{2, 5, 10});
}

TEST_CASE("certificate dimensions sum to the genus") {
    for (auto f : {make_family(3, 2, 1, 2), make_family(2, 3, 1, 3), make_family(5, 2, 1, 1),
                   make_family(2, 4, 2, 3)}) {
        Certificate cert = endomorphism_certificate(f, GroupLabel::SymmetricFull);
        REQUIRE(cert.conclusion.has_value());
        long long total = 0;
        for (const CertificateLevel& lv : *cert.conclusion) total += lv.dimension;
        CHECK(total == genus(f));
    }
}

TEST_CASE("certificate rejects out-of-regime families") {
    CHECK_THROWS_AS(
        endomorphism_certificate(make_family(3, 2, 2, 2), GroupLabel::Alternating),
        RegimeError);
    CHECK_THROWS_AS(
        endomorphism_certificate(make_family(3, 2, 0, 5), GroupLabel::SymmetricFull),
        RegimeError);
}

TEST_CASE("certificates are deterministic") {
    Certificate a = endomorphism_certificate(make_family(2, 3, 1, 3), GroupLabel::Alternating, 9);
    Certificate b = endomorphism_certificate(make_family(2, 3, 1, 3), GroupLabel::Alternating, 9);
    CHECK(a.checks == b.checks);
    CHECK(a.algebra_product == b.algebra_product);
}

} // TEST_SUITE
