#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "superjac/cli.hpp"
#include "superjac/reports.hpp"

using namespace superjac;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("invariants text output") {
    CliRun r = cli({"invariants", "--p", "3", "--r", "2", "--s", "1", "--m", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("genus: 19") != std::string::npos);
    CHECK(r.out.find("points at infinity: 3") != std::string::npos);
}

TEST_CASE("invariants from a polynomial file") {
    std::string path = "test_poly_input.txt";
    {
        std::ofstream f(path);
        f << "-1 -1 0 0 0 0 1\n";  // x^6 - x - 1
    }
    CliRun r = cli({"invariants", "--poly", path, "--p", "3", "--r", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("genus: 19") != std::string::npos);
    std::remove(path.c_str());

    CliRun missing = cli({"invariants", "--poly", "no_such_file.txt", "--p", "3", "--r", "2"});
    CHECK(missing.code == 2);
}

TEST_CASE("polynomial line parsing") {
    auto coeffs = parse_polynomial_line("1/2 0 -3");
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[0] == Rational(1, 2));
    CHECK(coeffs[2] == Rational(-3));
    CHECK_THROWS_AS(parse_polynomial_line(""), ValidationError);
    CHECK_THROWS_AS(parse_polynomial_line("x + 1"), ValidationError);
    CHECK_THROWS_AS(parse_polynomial_line("1/0"), ValidationError);
}

TEST_CASE("exit codes") {
    CHECK(cli({"invariants", "--p", "4", "--r", "1", "--s", "0", "--m", "3"}).code == 2);
    CHECK(cli({"verdict", "--p", "3", "--r", "2", "--s", "0", "--m", "5", "--galois", "S"}).code ==
          3);
    CHECK(cli({"decompose", "--p", "2", "--r", "3", "--s", "1", "--m", "3"}).code == 0);
    CHECK(cli({"nonsense"}).code == 2);
    CHECK(cli({}).code == 2);
}

TEST_CASE("decompose output") {
    CliRun r = cli({"decompose", "--p", "2", "--r", "3", "--s", "1", "--m", "3"});
    CHECK(r.out.find("total: 17 (genus: 17)") != std::string::npos);
}

TEST_CASE("commutant command") {
    CliRun r = cli({"commutant", "--n", "6", "--p", "3", "--group", "A"});
    CHECK(r.code == 0);
    CHECK(r.out.find("quotient commutant dimension: 1") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("symmetry sweep command") {
    CliRun r = cli({"symmetry", "--p", "2", "--rmax", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all pass") != std::string::npos);

    CliRun m = cli({"symmetry", "--p", "3", "--r", "2", "--s", "1", "--m", "2"});
    CHECK(m.code == 0);
    CHECK(m.out.find("trivial") != std::string::npos);
}

TEST_CASE("verdict output and determinism") {
    std::vector<std::string> args{"verdict", "--p", "3", "--r", "2", "--s", "1",
                                  "--m", "2", "--galois", "A", "--format", "json"};
    CliRun a = cli(args);
    CliRun b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);  // byte-identical under the same config
    Json j = Json::parse(a.out);
    CHECK(j["certificate_version"] == 1);
    CHECK(j["passed"] == true);
    CHECK(j["endomorphism_algebra"] == "Q(zeta_3) x Q(zeta_9)");
}

TEST_CASE("seed comes from the environment when set") {
    setenv("SUPERJAC_SEED", "99", 1);
    CliRun r = cli({"verdict", "--p", "3", "--r", "2", "--s", "1", "--m", "2", "--galois", "A",
                    "--format", "json"});
    unsetenv("SUPERJAC_SEED");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["seed"] == "99");

    setenv("SUPERJAC_SEED", "not_a_number", 1);
    CliRun bad = cli({"verdict", "--p", "3", "--r", "2", "--s", "1", "--m", "2", "--galois", "A"});
    unsetenv("SUPERJAC_SEED");
    CHECK(bad.code == 2);
}

TEST_CASE("json reports round-trip") {
    CurveFamily f = make_family(3, 2, 1, 2);

    InvariantsReport inv = make_invariants_report(f);
    CHECK(Json::parse(Json(inv).dump()).get<InvariantsReport>() == inv);

    DecomposeReport dec = make_decompose_report(f);
    CHECK(Json::parse(Json(dec).dump()).get<DecomposeReport>() == dec);

    PicardReport pic = make_picard_report(f);
    CHECK(Json::parse(Json(pic).dump()).get<PicardReport>() == pic);

    CommutantCliReport com = make_commutant_report(6, 3, GroupLabel::Alternating, 1);
    CHECK(Json::parse(Json(com).dump()).get<CommutantCliReport>() == com);

    SymmetrySweepReport sym = make_symmetry_report(2, 5);
    CHECK(Json::parse(Json(sym).dump()).get<SymmetrySweepReport>() == sym);

    MultiplierReport mul = make_multiplier_report(f);
    CHECK(Json::parse(Json(mul).dump()).get<MultiplierReport>() == mul);

    Certificate cert = endomorphism_certificate(f, GroupLabel::Alternating);
    CertificateReport cr = make_certificate_report(cert);
    CHECK(Json::parse(Json(cr).dump()).get<CertificateReport>() == cr);
}

TEST_CASE("verify-all on a reduced grid") {
    CliRun r = cli({"verify-all", "--qmax", "9", "--nmax", "6", "--format", "json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["failed"] == 0);
    CHECK(j["criteria"] == 9);
}

TEST_CASE("fault injection makes verify-all fail") {
    CliRun r = cli({"verify-all", "--qmax", "9", "--nmax", "6", "--inject-fault", "genus"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);

    CliRun unknown = cli({"verify-all", "--inject-fault", "bogus"});
    CHECK(unknown.code == 2);
}

} // TEST_SUITE
