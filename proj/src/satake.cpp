#include <liftspin/satake.hpp>

#include <algorithm>
#include <cmath>

namespace liftspin
{

namespace
{

// <n> = n(n+1)/2
int triangular(int n)
{
    return n * (n + 1) / 2;
}

} // namespace

SymbolicSatake ikeda_satake(int n, int k)
{
    if (n <= 0 || k <= 0) throw InvalidInput("ikeda_satake needs n >= 1 and k >= 1");
    SymbolicSatake s;
    s.mu0 = Monomial(-n, 0, n * (2 * k - 1));
    for (int i = 1; i <= 2 * n; ++i) s.mus.emplace_back(1, 0, 2 * i - 2 * n - 1);
    // genus 2n, weight k+n: exponent of p is 2n(k+n) - <2n>.
    s.similitude_exponent = 2 * (2 * n * (k + n) - triangular(2 * n));
    return s;
}

SymbolicSatake miyawaki_satake(int n, int k)
{
    if (n < 2 || k <= 0) throw InvalidInput("miyawaki_satake needs n >= 2 and k >= 1");
    SymbolicSatake s;
    s.mu0 = Monomial(-(n - 1), -1, (n - 1) * (2 * k - 1) + (k + n - 1));
    for (int i = 1; i <= 2 * n - 2; ++i) s.mus.emplace_back(1, 0, 2 * i - 2 * n + 1);
    s.mus.emplace_back(0, 2, 0);
    s.similitude_exponent = 2 * ((2 * n - 1) * (k + n) - triangular(2 * n - 1));
    return s;
}

bool similitude_holds(const SymbolicSatake &params)
{
    return params.similitude_product() == Monomial(0, 0, params.similitude_exponent);
}

bool similitude_holds(const NumericSatake &params, double p, double tol)
{
    const double expected = std::pow(p, params.similitude_exponent / 2.0);
    return std::abs(params.similitude_product() - expected) <= tol * expected;
}

NumericSatake instantiate(const SymbolicSatake &params, std::complex<double> alpha, std::complex<double> beta,
                          double p)
{
    const std::complex<double> q = std::sqrt(p);
    auto value = [&](const Monomial &m) { return ipow(alpha, m.a()) * ipow(beta, m.b()) * ipow(q, m.q()); };
    NumericSatake r;
    r.mu0 = value(params.mu0);
    for (const auto &m : params.mus) r.mus.push_back(value(m));
    r.similitude_exponent = params.similitude_exponent;
    return r;
}

LaurentPoly reduce_b_squared_minus_one(const LaurentPoly &x)
{
    std::vector<LaurentPoly::Term> terms;
    for (const auto &[m, c] : x.terms()) {
        const int e = m.b();
        const int low = ((e % 2) + 2) % 2;
        const int half = (e - low) / 2;
        mpz_class coeff = (half % 2 == 0) ? c : mpz_class(-c);
        terms.emplace_back(Monomial(m.a(), low, m.q(), m.t()), std::move(coeff));
    }
    return LaurentPoly::from_terms(std::move(terms));
}

bool miyawaki_inverse_mu_check(int n, int k)
{
    const SymbolicSatake params = miyawaki_satake(n, k);
    const int last = params.genus();
    const SymbolicSatake moved = weyl_sigma(params, last);

    auto reduce = [](const Monomial &m) { return reduce_b_squared_minus_one(LaurentPoly(m)); };

    // Target: {-mu_0, mu_1, ..., mu_{2n-2}, -1} with mu_{2n-1} = b^2 = -1.
    if (reduce(moved.mu0) != -reduce(params.mu0)) return false;
    if (reduce(moved.mus[last - 1]) != LaurentPoly(-1)) return false;
    if (reduce(params.mus[last - 1]) != LaurentPoly(-1)) return false;

    std::vector<LaurentPoly> got;
    std::vector<LaurentPoly> want;
    for (int i = 0; i < last - 1; ++i) {
        got.push_back(reduce(moved.mus[i]));
        want.push_back(reduce(params.mus[i]));
    }
    auto by_string = [](const LaurentPoly &x, const LaurentPoly &y) { return x.to_string() < y.to_string(); };
    std::sort(got.begin(), got.end(), by_string);
    std::sort(want.begin(), want.end(), by_string);
    return got == want;
}

} // namespace liftspin
