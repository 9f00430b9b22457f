#include <doctest.h>

#include <numeric>
#include <sstream>

#include <liftspin/errors.hpp>
#include <liftspin/modforms.hpp>

using namespace liftspin;

namespace
{

// q prod (1 - q^n)^24, expanded with plain integers.
std::vector<mpz_class> eta_delta(int precision)
{
    std::vector<mpz_class> c(precision + 1, 0);
    c[0] = 1; // the product without the leading q
    for (int n = 1; n <= precision; ++n) {
        for (int rep = 0; rep < 24; ++rep) {
            for (int j = precision; j >= n; --j) c[j] -= c[j - n];
        }
    }
    std::vector<mpz_class> out(precision + 1, 0);
    for (int j = 1; j <= precision; ++j) out[j] = c[j - 1];
    return out;
}

mpz_class sigma(int n, int e)
{
    mpz_class s = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d == 0) {
            mpz_class t;
            mpz_ui_pow_ui(t.get_mpz_t(), d, e);
            s += t;
        }
    }
    return s;
}

} // namespace

TEST_CASE("eisenstein")
{
    const auto e4 = eisenstein(4, 2);
    CHECK(e4.coeffs == std::vector<mpq_class>{1, 240, 2160});
    const auto e6 = eisenstein(6, 1);
    CHECK(e6.coeffs == std::vector<mpq_class>{1, -504});
    for (int w = 4; w <= 26; w += 2) CHECK(eisenstein(w, 5).coeffs[0] == 1);
    // divisor-sum oracle for E_8 = 1 + 480 sum sigma_7(n) q^n
    const auto e8 = eisenstein(8, 30);
    for (int n = 1; n <= 30; ++n) CHECK(e8.coeffs[n] == mpq_class(480 * sigma(n, 7)));
    CHECK_THROWS_AS(eisenstein(3, 5), UnsupportedWeight);
    CHECK_THROWS_AS(eisenstein(2, 5), UnsupportedWeight);
}

TEST_CASE("bernoulli")
{
    CHECK(bernoulli(1) == mpq_class(-1, 2));
    CHECK(bernoulli(4) == mpq_class(-1, 30));
    CHECK(bernoulli(6) == mpq_class(1, 42));
    CHECK(bernoulli(12) == mpq_class(-691, 2730));
}

TEST_CASE("delta against eta product")
{
    const int N = 200;
    const auto d = delta(N);
    const auto eta = eta_delta(N);
    CHECK(d.coeffs[0] == 0);
    CHECK(d.coeffs[1] == 1);
    CHECK(d.coeffs[2] == -24);
    for (int n = 0; n <= N; ++n) CHECK(d.coeffs[n] == mpq_class(eta[n]));
}

TEST_CASE("victor_miller_basis")
{
    const auto b12 = victor_miller_basis(12, 50);
    REQUIRE(b12.size() == 1);
    CHECK(b12[0].coeffs == delta(50).coeffs);
    const auto b20 = victor_miller_basis(20, 50);
    REQUIRE(b20.size() == 1);
    CHECK(b20[0].coeffs[1] == 1);
    const auto b24 = victor_miller_basis(24, 50);
    REQUIRE(b24.size() == 2);
    CHECK(b24[0].coeffs[1] == 1);
    CHECK(b24[0].coeffs[2] == 0);
    CHECK(b24[1].coeffs[1] == 0);
    CHECK(b24[1].coeffs[2] == 1);
    CHECK_THROWS_AS(victor_miller_basis(14, 20), EmptySpace);
    CHECK(cusp_dimension(12) == 1);
    CHECK(cusp_dimension(14) == 0);
    CHECK(cusp_dimension(24) == 2);
}

TEST_CASE("hecke eigenvalues")
{
    const auto d = eigenform(12);
    CHECK(hecke_eigenvalue(d, 2) == -24);
    CHECK(hecke_eigenvalue(d, 3) == 252);
    CHECK_THROWS_AS(hecke_eigenvalue(d, 1), NonPrime);
    CHECK_THROWS_AS(hecke_eigenvalue(d, 4), NonPrime);
    CHECK_THROWS_AS(hecke_eigenvalue(eigenform(12, 20), 23), InsufficientPrecision);

    for (int w : {12, 16, 18, 20, 22, 26}) {
        const auto f = eigenform(w, 60);
        REQUIRE(f.qexp);
        for (const auto &[p, lambda] : f.eigenvalues) CHECK(f.qexp->coeffs[p] == lambda * f.qexp->coeffs[1]);
    }
}

TEST_CASE("weight 20 Hecke self-consistency")
{
    const auto f = eigenform(20, 200);
    REQUIRE(f.qexp);
    for (int p : {2, 3, 5, 7}) {
        const auto tf = apply_hecke(*f.qexp, p);
        const mpq_class lambda = hecke_eigenvalue(f, p);
        for (int n = 1; n <= 20; ++n) CHECK(tf.coeffs[n] == lambda * f.qexp->coeffs[n]);
    }
    CHECK(hecke_eigenvalue(f, 2) == 456);
}

TEST_CASE("multiplicativity")
{
    for (int w : {12, 20}) {
        const auto f = eigenform(w, 200);
        const auto &a = f.qexp->coeffs;
        for (int m = 1; m <= 14; ++m) {
            for (int n = 1; n <= 14; ++n) {
                if (std::gcd(m, n) == 1) CHECK(a[m * n] == a[m] * a[n]);
            }
        }
        // a(p^2) = a(p)^2 - p^{w-1}
        for (int p : {2, 3, 5, 7, 11, 13}) {
            mpz_class pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), p, w - 1);
            CHECK(a[p * p] == a[p] * a[p] - pw);
        }
    }
}

TEST_CASE("rational eigenbasis of weight 24")
{
    // S_24 has an irrational eigenbasis.
    CHECK_THROWS_AS(rational_eigenforms(24, 40), IrrationalEigenspace);
}

TEST_CASE("eigenvalue tables")
{
    std::istringstream in("# Delta\n2 -24\n\n3 252\n5 4830/1\n");
    const auto t = read_eigenvalue_table(in, 12);
    CHECK(!t.qexp);
    CHECK(hecke_eigenvalue(t, 2) == -24);
    CHECK(hecke_eigenvalue(t, 5) == 4830);
    CHECK_THROWS(hecke_eigenvalue(t, 7));
    std::istringstream bad("4 10\n");
    CHECK_THROWS_AS(read_eigenvalue_table(bad, 12), NonPrime);
    std::istringstream junk("2 abc\n");
    CHECK_THROWS_AS(read_eigenvalue_table(junk, 12), InvalidInput);
}

TEST_CASE("numeric_satake")
{
    const auto [x, y] = numeric_satake(0.0, 11, 2);
    CHECK(std::abs(x - std::complex<double>(0, 1)) < 1e-12);
    CHECK(std::abs(y - std::complex<double>(0, -1)) < 1e-12);
    const auto [u, v] = numeric_satake(2.0 * std::pow(5.0, 5.5), 11, 5);
    CHECK(std::abs(u - 1.0) < 1e-6);
    CHECK(std::abs(v - 1.0) < 1e-6);
    const auto [r, s] = numeric_satake(mpq_class(-24), 11, 2);
    CHECK(std::abs(r * s - 1.0) < 1e-12);
    CHECK(std::abs(r + s - (-24.0 / std::pow(2.0, 5.5))) < 1e-12);
    CHECK(std::abs(std::abs(r) - 1.0) < 1e-12);
}

TEST_CASE("primes")
{
    CHECK(primes_up_to(20) == std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19});
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(199).size() == 46);
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(199));
}
