#ifndef LIFTSPIN_SATAKE_HPP
#define LIFTSPIN_SATAKE_HPP

#include <complex>
#include <vector>

#include <liftspin/errors.hpp>
#include <liftspin/exactalg.hpp>

namespace liftspin
{

namespace detail
{

inline Monomial invert_value(const Monomial &m)
{
    return m.inverse();
}
inline std::complex<double> invert_value(const std::complex<double> &z)
{
    return 1.0 / z;
}

} // namespace detail

// Satake parameters {mu_0; mu_1, ..., mu_g} of a genus-g eigenform at one
// prime, together with the q-exponent e of the similitude constraint
// mu_0^2 * prod mu_i = q^e.
//
// Value is Monomial in symbolic mode and std::complex<double> in numeric
// mode. Symbolic parameters are single monomials so the Weyl action can
// invert them exactly.
template <typename Value>
struct SatakeParams {
    Value mu0{};
    std::vector<Value> mus;
    int similitude_exponent = 0;

    int genus() const noexcept
    {
        return static_cast<int>(mus.size());
    }

    Value similitude_product() const
    {
        Value r = mu0 * mu0;
        for (const auto &m : mus) r = r * m;
        return r;
    }

    friend bool operator==(const SatakeParams &, const SatakeParams &) = default;
};

using SymbolicSatake = SatakeParams<Monomial>;
using NumericSatake = SatakeParams<std::complex<double>>;

// Duke-Imamoglu-Ibukiyama-Ikeda lift F_{2n} of f in S_{2k}: genus 2n,
// mu_0 = a^{-n} q^{n(2k-1)}, mu_i = a q^{2i-2n-1}.
SymbolicSatake ikeda_satake(int n, int k);

// Miyawaki-Ikeda lift F_{f,g} of f in S_{2k} and g in S_{k+n}: genus 2n-1,
// mu_0 = a^{-(n-1)} b^{-1} q^{(n-1)(2k-1)+(k+n-1)}, mu_i = a q^{2i-2n+1}
// for i <= 2n-2 and mu_{2n-1} = b^2.
SymbolicSatake miyawaki_satake(int n, int k);

// Weyl generator sigma_i (1-based): mu_0 -> mu_0 mu_i, mu_i -> mu_i^{-1}.
template <typename Value>
SatakeParams<Value> weyl_sigma(const SatakeParams<Value> &params, int i)
{
    if (i < 1 || i > params.genus()) {
        throw IndexOutOfRange("sigma index " + std::to_string(i) + " outside 1.." + std::to_string(params.genus()));
    }
    SatakeParams<Value> r = params;
    r.mu0 = params.mu0 * params.mus[i - 1];
    r.mus[i - 1] = detail::invert_value(params.mus[i - 1]);
    return r;
}

// perm is a 1-based bijection of 1..genus; new mus[j] = old mus[perm[j]].
template <typename Value>
SatakeParams<Value> weyl_permute(const SatakeParams<Value> &params, const std::vector<int> &perm)
{
    const int g = params.genus();
    if (static_cast<int>(perm.size()) != g) throw InvalidPermutation("permutation length does not match genus");
    std::vector<bool> seen(g, false);
    SatakeParams<Value> r = params;
    for (int j = 0; j < g; ++j) {
        const int src = perm[j];
        if (src < 1 || src > g || seen[src - 1]) throw InvalidPermutation("not a bijection of 1..genus");
        seen[src - 1] = true;
        r.mus[j] = params.mus[src - 1];
    }
    return r;
}

// Exact check of the symbolic similitude invariant.
bool similitude_holds(const SymbolicSatake &params);
// Numeric similitude invariant: |mu_0^2 prod mu_i - p^{e/2}| <= tol * p^{e/2}.
bool similitude_holds(const NumericSatake &params, double p, double tol = 1e-10);

// Substitute a = alpha, b = beta, q = sqrt(p).
NumericSatake instantiate(const SymbolicSatake &params, std::complex<double> alpha, std::complex<double> beta,
                          double p);

// Applies sigma at the index of b^2 = mu_{2n-1} and reduces modulo
// b^2 = -1; true iff the result is {-mu_0, mu_1, ..., mu_{2n-2}, -1}.
bool miyawaki_inverse_mu_check(int n, int k);

// Ring map Z[a,b,q]^{+-1} -> Z[a,q]^{+-1}[b]/(b^2+1): b^e -> (-1)^{floor(e/2)} b^{e mod 2}.
LaurentPoly reduce_b_squared_minus_one(const LaurentPoly &x);

} // namespace liftspin

#endif
