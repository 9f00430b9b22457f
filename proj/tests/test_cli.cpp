#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <liftspin/cli.hpp>
#include <liftspin/errors.hpp>

using namespace liftspin;
using json = nlohmann::ordered_json;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("eigenvalues")
{
    auto r = run({"eigenvalues", "--weight", "12", "--prime", "2"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["eigenvalues"][0]["lambda"] == "-24");

    r = run({"eigenvalues", "--weight", "12", "--prime", "1"});
    CHECK(r.code == exit_usage);
    CHECK(r.err.find("NonPrime") != std::string::npos);

    r = run({"eigenvalues", "--weight", "20", "--primes-up-to", "11"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["eigenvalues"].size() == 5);
    const auto f = eigenform(20, 20);
    for (const auto &row : j["eigenvalues"]) {
        CHECK(mpq_class(row["lambda"].get<std::string>()) == f.qexp->coeffs[row["p"].get<int>()]);
    }

    CHECK(run({"eigenvalues", "--weight", "24", "--prime", "2"}).code == exit_unsupported);
    CHECK(run({"eigenvalues", "--weight", "14", "--prime", "2"}).code == exit_unsupported);
}

TEST_CASE("euler")
{
    auto lhs = run({"euler", "lhs", "main_theorem", "--n", "2", "--k", "10"});
    auto rhs = run({"euler", "rhs", "main_theorem", "--n", "2", "--k", "10"});
    REQUIRE(lhs.code == 0);
    REQUIRE(rhs.code == 0);
    auto jl = json::parse(lhs.out), jr = json::parse(rhs.out);
    CHECK(jl["degree"] == 8);
    CHECK(jl["coeffs"] == jr["coeffs"]);

    auto sp = run({"euler", "lhs", "ikeda_spinor", "--n", "2", "--k", "10"});
    CHECK(json::parse(sp.out)["degree"] == 16);

    CHECK(run({"euler", "lhs", "main_theorem", "--n", "5", "--k", "10"}).code == exit_unsupported);
    auto fac = run({"euler", "lhs", "main_theorem", "--n", "5", "--k", "10", "--factored"});
    REQUIRE(fac.code == 0);
    CHECK(json::parse(fac.out)["degree"] == 512);

    CHECK(run({"euler", "lhs", "main_theorem", "--n", "7", "--k", "10", "--factored"}).code == exit_unsupported);
    CHECK(run({"euler", "lhs", "nope", "--n", "2", "--k", "10"}).code == exit_usage);
    CHECK(run({"euler", "middle", "main_theorem", "--n", "2", "--k", "10"}).code == exit_usage);

    auto num = run({"euler", "lhs", "main_theorem", "--n", "2", "--k", "10", "--mode", "numeric", "--prime", "2"});
    REQUIRE(num.code == 0);
    auto jn = json::parse(num.out);
    CHECK(jn[0]["prime"] == 2);
    CHECK(jn[0]["coeffs"].size() == 9);
}

TEST_CASE("beta-table")
{
    auto r = run({"beta-table", "--n", "3"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    bool found = false;
    for (const auto &e : j["entries"]) {
        if (e["m"] == 2 && e["r"] == 0) {
            CHECK(e["alpha"] == 3);
            CHECK(e["beta"] == 2);
            found = true;
        }
    }
    CHECK(found);
    auto t = run({"beta-table", "--n", "3", "--format", "text"});
    CHECK(t.out.find("alpha") != std::string::npos);
    CHECK(run({"beta-table"}).code == exit_usage);
}

TEST_CASE("lvalue")
{
    auto lhs = run({"lvalue", "lhs", "main_theorem", "--n", "2", "--k", "10", "--s", "25", "--primes-up-to", "50"});
    auto rhs = run({"lvalue", "rhs", "main_theorem", "--n", "2", "--k", "10", "--s", "25", "--primes-up-to", "50"});
    REQUIRE(lhs.code == 0);
    REQUIRE(rhs.code == 0);
    const auto jl = json::parse(lhs.out), jr = json::parse(rhs.out);
    const std::complex<double> vl(jl["value"][0].get<double>(), jl["value"][1].get<double>());
    const std::complex<double> vr(jr["value"][0].get<double>(), jr["value"][1].get<double>());
    CHECK(std::abs(vl - vr) <= 1e-8 * std::abs(vl));
    CHECK(jl["note"] == "non-rigorous approximation");

    auto zero = run({"lvalue", "lhs", "main_theorem", "--n", "2", "--k", "10", "--s", "25", "--primes-up-to", "0"});
    REQUIRE(zero.code == 0);
    const auto jz = json::parse(zero.out);
    CHECK(jz["value"][0] == 1.0);
    CHECK(jz["value"][1] == 0.0);

    auto far = run({"lvalue", "lhs", "main_theorem", "--n", "2", "--k", "10", "--s", "25", "--primes-up-to", "100"});
    const auto jf = json::parse(far.out);
    const double change = std::abs(jf["log_value"][0].get<double>() - jl["log_value"][0].get<double>());
    CHECK(change < jl["tail_bound"].get<double>());
    CHECK(jl["last_prime"] == 47);

    auto out = run({"lvalue", "lhs", "main_theorem", "--n", "2", "--k", "10", "--s", "16", "--primes-up-to", "50"});
    CHECK(out.code == exit_usage);
    CHECK(out.err.find("OutOfConvergenceRegion") != std::string::npos);
}

TEST_CASE("verify")
{
    auto all = run({"verify", "--all", "--symbolic"});
    CHECK(all.code == 0);
    const auto ja = json::parse(all.out);
    CHECK(ja.size() > 40);
    for (const auto &r : ja) CHECK(r["verdict"] == "pass");

    auto one = run({"verify", "main", "--n", "3"});
    CHECK(one.code == 0);
    const auto jo = json::parse(one.out);
    REQUIRE(jo.size() == 1);
    CHECK(jo[0]["verdict"] == "pass");
    CHECK(jo[0]["n"] == 3);

    auto bad = run({"verify", "main", "--n", "3", "--corrupt-beta"});
    CHECK(bad.code == exit_verification_failure);
    const auto jb = json::parse(bad.out);
    CHECK(jb[0]["verdict"] == "fail");
    CHECK(jb[0].contains("witness"));

    auto num = run({"verify", "main", "--mode", "numeric", "--primes-up-to", "30"});
    CHECK(num.code == 0);
    CHECK(json::parse(num.out).size() == 10);

    CHECK(run({"verify", "bogus"}).code == exit_usage);
    CHECK(run({"verify", "main", "--n", "9"}).code == exit_unsupported);
    CHECK(run({"verify", "c1", "--mode", "numeric"}).code == exit_usage);
    CHECK(run({}).code == exit_usage);
    CHECK(run({"verify", "--format", "xml"}).code == exit_usage);
    CHECK(run({"verify", "--help"}).code == 0);
}

TEST_CASE("text and json carry the same data")
{
    auto j = run({"verify", "c1", "--n", "2"});
    auto t = run({"verify", "c1", "--n", "2", "--format", "text"});
    const auto report = json::parse(j.out)[0];
    std::string line;
    for (const auto &[key, value] : report.items()) {
        const std::string v = value.is_string() ? value.get<std::string>() : value.dump();
        CHECK(t.out.find(key + "=" + v) != std::string::npos);
    }
}

TEST_CASE("deterministic output")
{
    const std::vector<std::string> args{"euler", "rhs", "main_theorem", "--n", "3", "--k", "4"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("eigenvalue files and output path")
{
    const auto dir = std::filesystem::temp_directory_path();
    const auto table = dir / "liftspin_test_delta.txt";
    {
        std::ofstream f(table);
        f << "# Delta\n2 -24\n3 252\n";
    }
    auto r = run({"eigenvalues", "--weight", "12", "--prime", "3", "--eigenvalues-file", table.string()});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["eigenvalues"][0]["lambda"] == "252");
    CHECK(run({"eigenvalues", "--weight", "12", "--prime", "5", "--eigenvalues-file", table.string()}).code ==
          exit_unsupported);

    const auto out = dir / "liftspin_test_out.json";
    r = run({"beta-table", "--n", "2", "--output", out.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out);
    CHECK(json::parse(in)["n"] == 2);
    std::filesystem::remove(table);
    std::filesystem::remove(out);
}

TEST_CASE("environment variables fill in unset flags")
{
    ::setenv("LIFTSPIN_N", "2", 1);
    auto r = run({"verify", "c1"});
    CHECK(json::parse(r.out)[0]["n"] == 2);
    // flags win over the environment
    r = run({"verify", "c1", "--n", "3"});
    CHECK(json::parse(r.out)[0]["n"] == 3);
    ::unsetenv("LIFTSPIN_N");
}

TEST_CASE("convergence abscissa")
{
    for (int n = 2; n <= 4; ++n) {
        for (int k : {4, 10}) {
            const auto lhs = identity_lhs(IdentityId::main_theorem, n, k);
            CHECK(convergence_abscissa(lhs) == doctest::Approx((n - 0.5) * k + 1 + (n - 1) * (n - 1) / 2.0));
            CHECK(convergence_abscissa(identity_rhs(IdentityId::main_theorem, n, k)) == convergence_abscissa(lhs));
        }
    }
    const auto f = eigenform(20, 60);
    const auto g = eigenform(12, 60);
    CHECK_THROWS_AS(truncated_lvalue(IdentityId::main_theorem, Side::lhs, 2, 10, 16.5, 10, f, &g), OutOfConvergenceRegion);
    const auto r = truncated_lvalue(IdentityId::main_theorem, Side::lhs, 2, 10, 16.6, 10, f, &g);
    CHECK(r.last_prime == 7);
    CHECK(std::isfinite(r.value.real()));
}
