#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "superjac/divisor.hpp"
#include "superjac/verify.hpp"

using namespace superjac;

namespace {

Divisor branch_div(const CurveFamily& f, std::vector<long long> coeffs) {
    Divisor d(f);
    for (size_t i = 0; i < coeffs.size(); ++i)
        d.add(Point::branch(static_cast<int>(i) + 1), coeffs[i]);
    return d;
}

Divisor full_infinity(const CurveFamily& f, long long c) {
    Divisor d(f);
    for (int j = 1; j <= f.infinity_count(); ++j) d.add(Point::infinity(j), c);
    return d;
}

} // namespace

TEST_SUITE("divisor") {

TEST_CASE("divisor of x - alpha_i") {
    CurveFamily f = make_family(3, 2, 1, 2);
    Divisor d = div_x_minus_alpha(f, 1);
    CHECK(d.coeff(Point::branch(1)) == 9);
    for (int j = 1; j <= 3; ++j) CHECK(d.coeff(Point::infinity(j)) == -3);
    CHECK(d.degree() == 0);

    Divisor e = div_x_minus_alpha(make_family(5, 2, 1, 1), 2);
    CHECK(e.coeff(Point::branch(2)) == 25);
    CHECK(e.coeff(Point::infinity(1)) == -5);
    CHECK(e.degree() == 0);

    CHECK_THROWS_AS(div_x_minus_alpha(f, 0), ValidationError);
    CHECK_THROWS_AS(div_x_minus_alpha(f, 7), ValidationError);
}

TEST_CASE("divisor of the unit combination") {
    CurveFamily f = make_family(3, 2, 1, 2);
    Divisor d = div_unit_combo(f, 1);  // (a, b) = (2, -1)
    CHECK(d.coeff(Point::branch(1)) == 2 - 9);
    for (int k = 2; k <= 6; ++k) CHECK(d.coeff(Point::branch(k)) == 2);
    for (int j = 1; j <= 3; ++j) CHECK(d.coeff(Point::infinity(j)) == -1);
    CHECK(d.degree() == 0);

    // (5,2,1,1): (a, b) = (1, 0)
    CurveFamily g = make_family(5, 2, 1, 1);
    Divisor e = div_unit_combo(g, 1);
    for (int k = 1; k <= 5; ++k) CHECK(e.coeff(Point::branch(k)) == 1);
    CHECK(e.coeff(Point::infinity(1)) == -1);
    CHECK(e.degree() == 0);
}

TEST_CASE("automorphism pushforward") {
    CurveFamily f = make_family(3, 2, 1, 2);
    Divisor d(f);
    d.add(Point::infinity(1), BigInt(1));
    Divisor moved = automorphism_pushforward(f, d);
    CHECK(moved.coeff(Point::infinity(2)) == 1);
    CHECK(moved.coeff(Point::infinity(1)) == 0);

    Divisor b(f);
    b.add(Point::branch(1), BigInt(1));
    CHECK(automorphism_pushforward(f, b) == b);

    Divisor fiber = full_infinity(f, 1);
    CHECK(automorphism_pushforward(f, fiber) == fiber);
}

TEST_CASE("polynomial in the automorphism") {
    CurveFamily f = make_family(3, 2, 1, 2);
    Divisor seed(f);
    seed.add(Point::branch(1), BigInt(1));
    seed.add(Point::infinity(1), BigInt(-1));

    Divisor spread = apply_automorphism_poly(f, geometric_series_poly(3, 1), seed);
    CHECK(spread.coeff(Point::branch(1)) == 3);
    for (int j = 1; j <= 3; ++j) CHECK(spread.coeff(Point::infinity(j)) == -1);

    CHECK(apply_automorphism_poly(f, IntPoly::one(), seed) == seed);

    // t^{p^s} stabilizes the fiber pointwise
    Divisor inf(f);
    inf.add(Point::infinity(2), BigInt(5));
    CHECK(apply_automorphism_poly(f, IntPoly::monomial(BigInt(1), 3), inf) == inf);
}

TEST_CASE("eliminating the infinity part") {
    CurveFamily f = make_family(3, 2, 1, 2);
    Divisor d(f);
    d.add(Point::branch(1), BigInt(3));
    d = d + full_infinity(f, -1);
    Divisor reduced = eliminate_infinity(f, d, 1);
    // 12 (P_1) - 2 sum(P_k), i.e. coefficient 10 at P_1
    CHECK(reduced == branch_div(f, {10, -2, -2, -2, -2, -2}));
    CHECK(reduced.degree() == 0);

    Divisor on_b = branch_div(f, {1, -1});
    CHECK(eliminate_infinity(f, on_b, 1) == on_b);

    // the relation applied to itself cancels
    Divisor self = full_infinity(f, 1);
    for (int k = 1; k <= 6; ++k) self.add(Point::branch(k), BigInt(-2));
    self.add(Point::branch(1), BigInt(9));
    CHECK(eliminate_infinity(f, self, 1).is_zero());

    Divisor lopsided(f);
    lopsided.add(Point::infinity(1), BigInt(1));
    lopsided.add(Point::infinity(2), BigInt(2));
    lopsided.add(Point::infinity(3), BigInt(1));
    CHECK_THROWS_AS(eliminate_infinity(f, lopsided, 1), ValidationError);
}

TEST_CASE("elimination preserves the class modulo the function lattice") {
    // the discarded part is an exact multiple of the unit-combination divisor
    for (auto f : {make_family(3, 2, 1, 2), make_family(2, 3, 1, 3)}) {
        for (long long w : {1LL, -2LL, 5LL}) {
            Divisor d = full_infinity(f, w) + branch_div(f, {4, -1});
            for (int pivot : {1, 2}) {
                Divisor reduced = eliminate_infinity(f, d, pivot);
                Divisor diff = d - reduced;
                CHECK(diff == div_unit_combo(f, pivot).scaled(BigInt(-w)));
            }
        }
    }
}

TEST_CASE("pivot choice does not change the class") {
    CurveFamily f = make_family(3, 2, 1, 2);
    Divisor d = full_infinity(f, 2) + branch_div(f, {1, 0, -1});
    Divisor r1 = eliminate_infinity(f, d, 1);
    Divisor r2 = eliminate_infinity(f, d, 4);
    CHECK(is_principal_on_branch(f, r1 - r2));
    CHECK(!(r1 == r2));
}

TEST_CASE("principality criterion") {
    CurveFamily f = make_family(3, 2, 1, 2);
    CHECK(is_principal_on_branch(f, branch_div(f, {9, -9})));
    CHECK(!is_principal_on_branch(f, branch_div(f, {1, -1})));
    CHECK(is_principal_on_branch(f, Divisor(f)));

    CHECK_THROWS_AS(is_principal_on_branch(f, branch_div(f, {1})), ValidationError);
    Divisor touches_infinity = branch_div(f, {1, -1});
    touches_infinity.add(Point::infinity(1), BigInt(1));
    touches_infinity.add(Point::infinity(2), BigInt(-1));
    CHECK_THROWS_AS(is_principal_on_branch(f, touches_infinity), ValidationError);
}

TEST_CASE("function lattice generators") {
    CurveFamily f = make_family(3, 2, 1, 2);
    IntMatrix g = principal_function_lattice(f);
    CHECK(g.cols() == 6);
    CHECK(g.rows() == 15 + 6);
    // second-kind row for i = 1
    std::vector<BigInt> row;
    for (int j = 0; j < 6; ++j) row.push_back(g.at(15, j));
    CHECK(row == std::vector<BigInt>{-15, 3, 3, 3, 3, 3});
    // q (e_1 - e_2) is a generator row and passes the congruence criterion
    Divisor d = branch_div(f, {9, -9});
    CHECK(is_principal_on_branch(f, d));
    RowLattice lat(g);
    CHECK(lat.contains(d.branch_vector()));
}

TEST_CASE("criterion matches lattice membership on random vectors") {
    std::mt19937_64 rng(101);
    for (auto f : {make_family(3, 2, 1, 2), make_family(2, 2, 1, 3), make_family(2, 2, 0, 5)}) {
        RowLattice lat(principal_function_lattice(f));
        std::uniform_int_distribution<long long> dist(-2 * f.q, 2 * f.q);
        for (int t = 0; t < 200; ++t) {
            std::vector<BigInt> v(static_cast<size_t>(f.n));
            long long acc = 0;
            bool ok = false;
            while (!ok) {
                acc = 0;
                for (size_t i = 0; i + 1 < v.size(); ++i) {
                    long long x = dist(rng);
                    v[i] = x;
                    acc += x;
                }
                ok = std::abs(acc) <= 2 * f.q;
            }
            v.back() = -acc;
            Divisor d(f);
            for (size_t i = 0; i < v.size(); ++i)
                d.add(Point::branch(static_cast<int>(i) + 1), v[i]);
            CHECK(is_principal_on_branch(f, d) == lat.contains(v));
        }
    }
}

TEST_CASE("picard structure") {
    CurveFamily f = make_family(3, 2, 1, 2);
    PicardStructure pic = picard_structure(f);
    CHECK(pic.p_rank == 5);
    // regression baseline for the full decomposition; each factor a power of
    // 3 and the chain ordered
    std::vector<BigInt> expect{3, 9, 9, 9, 9};
    CHECK(pic.group.invariant_factors == expect);
    CHECK(pic.group.free_rank == 0);

    CHECK(picard_structure(make_family(2, 3, 1, 3)).p_rank == 5);

    for (const CurveFamily& g : family_grid(27, 12)) {
        if (g.s >= g.r) continue;  // holds for s = 0 as well
        PicardStructure ps = picard_structure(g);
        CHECK(ps.p_rank == g.n - 1);
        BigInt prev = 1;
        for (const BigInt& d : ps.group.invariant_factors) {
            CHECK(d % prev == 0);
            prev = d;
            BigInt v = d;
            while (v % g.p == 0) v /= g.p;
            CHECK(v == 1);  // a power of p
        }
    }
}

TEST_CASE("order-p classes") {
    CurveFamily f = make_family(3, 2, 1, 2);
    auto classes = p_torsion_classes(f);
    REQUIRE(classes.size() == 6);
    CHECK(classes[0] == branch_div(f, {10, -2, -2, -2, -2, -2}));
    for (const Divisor& d : classes) {
        CHECK(d.degree() == 0);
        CHECK(!is_principal_on_branch(f, d));
        CHECK(is_principal_on_branch(f, d.scaled(BigInt(3))));
    }

    CurveFamily g = make_family(5, 2, 1, 1);
    auto five = p_torsion_classes(g);
    CHECK(five[0] == branch_div(g, {4, -1, -1, -1, -1}));

    CHECK_THROWS_AS(p_torsion_classes(make_family(3, 2, 0, 2)), RegimeError);
    CHECK_THROWS_AS(p_torsion_classes(make_family(3, 2, 2, 2)), RegimeError);
}

TEST_CASE("classes do not depend on the infinity base point") {
    CurveFamily f = make_family(2, 3, 1, 3);
    IntPoly reducer = geometric_series_poly(f.p, f.r - 1);
    for (int j = 1; j <= f.infinity_count(); ++j) {
        Divisor seed(f);
        seed.add(Point::branch(2), BigInt(1));
        seed.add(Point::infinity(j), BigInt(-1));
        Divisor spread = apply_automorphism_poly(f, reducer, seed);
        Divisor reduced = eliminate_infinity(f, spread, 2);
        CHECK(reduced == p_torsion_classes(f)[1]);
    }
}

TEST_CASE("torsion map kernel and rank") {
    CurveFamily f = make_family(3, 2, 1, 2);
    TorsionMap tm = torsion_map(f);
    REQUIRE(tm.kernel.size() == 1);
    CHECK(tm.kernel.front() == FpVec{1, 1, 1, 1, 1, 1});
    CHECK(tm.rank == 5);

    // the images of phi_1 - phi_2 stay apart
    auto classes = p_torsion_classes(f);
    CHECK(!is_principal_on_branch(f, classes[0] - classes[1]));
}

TEST_CASE("torsion map is equivariant under branch relabeling") {
    CurveFamily f = make_family(2, 3, 1, 3);
    TorsionMap tm = torsion_map(f);
    std::mt19937_64 rng(55);
    std::vector<int> sigma(static_cast<size_t>(f.n));
    for (int t = 0; t < 20; ++t) {
        for (size_t i = 0; i < sigma.size(); ++i) sigma[i] = static_cast<int>(i);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        // column sigma(i) of the matrix is the image of the relabeled index
        auto classes = p_torsion_classes(f);
        PicardStructure pic = picard_structure(f);
        for (int i = 0; i < f.n; ++i) {
            auto y = pic.coordinates(classes[static_cast<size_t>(sigma[static_cast<size_t>(i)])]
                                         .branch_vector());
            // compare against the stored column
            for (int row = 0; row < tm.matrix.rows(); ++row) {
                const BigInt& d = pic.diagonal[static_cast<size_t>(row)];
                BigInt step = d / f.p;
                CHECK(tm.matrix.at(row, sigma[static_cast<size_t>(i)]) ==
                      static_cast<long long>(mod_floor(y[static_cast<size_t>(row)], d) / step));
            }
        }
    }
}

TEST_CASE("torsion rank identities") {
    TorsionRankReport a = torsion_rank_report(make_family(3, 2, 1, 2));
    CHECK(a.tate_rank == 5);
    CHECK(a.n_minus_1 == 5);
    CHECK(a.picard_p_rank == 5);
    CHECK(a.consistent);

    CHECK(torsion_rank_report(make_family(2, 3, 1, 3)).tate_rank == 5);
    CHECK(torsion_rank_report(make_family(5, 2, 1, 1)).tate_rank == 4);
}

} // TEST_SUITE
