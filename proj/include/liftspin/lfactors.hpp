#ifndef LIFTSPIN_LFACTORS_HPP
#define LIFTSPIN_LFACTORS_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <liftspin/exactalg.hpp>
#include <liftspin/satake.hpp>

namespace liftspin
{

// Genus cap for the 2^g subset product of the spinor factor.
inline constexpr int max_spinor_genus = 12;

// Local Euler factor prod_i (1 - r_i T)^{m_i} with T-free monomial roots r_i.
//
// Every factor in scope splits into linear factors with monomial roots, so
// the root multiset is the primary representation; expand() recovers the
// coefficient list in T. Because Z[a,b,q]^{+-1}[T] is a UFD and the
// polynomials 1 - rT are pairwise non-associate, two factors are equal as
// polynomials exactly when their root multisets agree. Multiplicities may be
// negative, in which case the factor is a rational function of T.
class LocalFactor
{
public:
    using RootMap = std::map<Monomial, std::int64_t>;

    LocalFactor() = default;
    LocalFactor(std::string label, const std::vector<Monomial> &roots);
    LocalFactor(std::string label, RootMap roots);

    const std::string &label() const noexcept
    {
        return m_label;
    }
    const RootMap &roots() const noexcept
    {
        return m_roots;
    }
    // Sum of multiplicities.
    std::int64_t degree() const noexcept;
    bool is_polynomial() const noexcept;

    // T -> q^c T, i.e. s -> s - c/2.
    LocalFactor shifted(int c) const;
    LocalFactor pow(std::int64_t e) const;
    LocalFactor relabeled(std::string label) const;
    LocalFactor &operator*=(const LocalFactor &other);
    friend LocalFactor operator*(LocalFactor x, const LocalFactor &y)
    {
        return x *= y;
    }

    // Coefficients of T^0..T^max_degree. For a polynomial the default is the
    // full degree; for a rational factor the power series is truncated.
    std::vector<LaurentPoly> expand(int max_degree = -1) const;
    // Full expansion as one polynomial in a, b, q, T.
    LaurentPoly to_poly() const;
    // Coefficient of T^1, i.e. -sum m_i r_i.
    LaurentPoly linear_coefficient() const;

    std::complex<double> eval(std::complex<double> a, std::complex<double> b, std::complex<double> q,
                              std::complex<double> t) const;

    // Root multisets agree; labels are ignored.
    friend bool operator==(const LocalFactor &x, const LocalFactor &y)
    {
        return x.m_roots == y.m_roots;
    }

private:
    void add_root(const Monomial &r, std::int64_t mult);

    std::string m_label;
    RootMap m_roots;
};

// Numeric counterpart: complex roots at a fixed prime.
class NumericLocalFactor
{
public:
    NumericLocalFactor() = default;
    NumericLocalFactor(std::string label, int p, std::vector<std::complex<double>> roots);

    const std::string &label() const noexcept
    {
        return m_label;
    }
    int prime() const noexcept
    {
        return m_p;
    }
    const std::vector<std::pair<std::complex<double>, std::int64_t>> &roots() const noexcept
    {
        return m_roots;
    }
    std::int64_t degree() const noexcept;

    NumericLocalFactor shifted(int c) const;
    NumericLocalFactor pow(std::int64_t e) const;
    NumericLocalFactor &operator*=(const NumericLocalFactor &other);
    friend NumericLocalFactor operator*(NumericLocalFactor x, const NumericLocalFactor &y)
    {
        return x *= y;
    }

    // Coefficients of u^j where T = u / p^{normalization/2}; with the
    // normalization at the weight of the roots they have unit size.
    std::vector<std::complex<double>> expand(double normalization = 0.0) const;
    std::complex<double> eval(std::complex<double> t) const;
    // sum m_i log(1 - r_i t)
    std::complex<double> log_eval(std::complex<double> t) const;

private:
    std::string m_label;
    int m_p = 0;
    std::vector<std::pair<std::complex<double>, std::int64_t>> m_roots;
};

enum class HeckeRole { f, g };

// f: (1 - a q^{2k-1} T)(1 - a^{-1} q^{2k-1} T)
// g: (1 - b q^{k+n-1} T)(1 - b^{-1} q^{k+n-1} T)
LocalFactor hecke_factor(HeckeRole role, int k, int n);
// prod_{j=0}^{m} (1 - a^{m-2j} q^{m(2k-1)} T); m = 0 gives 1 - T.
LocalFactor sym_power_factor(int m, int k);
// det(1 - A_{p,m-1} (x) B_p q^{(m-1)(2k-1)+(k+n-1)} T), degree 2m.
LocalFactor tensor_factor(int m, int k, int n);
LocalFactor spinor_factor(const SymbolicSatake &params);
LocalFactor standard_factor(const SymbolicSatake &params);

NumericLocalFactor spinor_factor(const NumericSatake &params, int p);
NumericLocalFactor standard_factor(const NumericSatake &params, int p);
// 1 - lambda T + p^{twice_exponent} T^2 through its Satake roots.
NumericLocalFactor hecke_factor_numeric(double lambda, int twice_exponent, int p, std::string label = "L(s)");
// Numeric tensor factor built directly from alpha_p and beta_p.
NumericLocalFactor tensor_factor_numeric(int m, int k, int n, std::complex<double> alpha, std::complex<double> beta,
                                         int p);
// Substitute a = alpha, b = beta, q = sqrt(p) into every root.
NumericLocalFactor instantiate(const LocalFactor &factor, std::complex<double> alpha, std::complex<double> beta,
                               int p);

// D(a, q) = prod_{i=1}^{n-1} (1 + a q^{1-2i})(1 + a^{-1} q^{1-2i}); G_p = 1 / D.
LaurentPoly gp_constant(int n);
// lambda_g(p) C_1 = (b + b^{-1}) q^{k+n-1} q^{-(n-1)(n+2)} q^{2(n-1)(k+n)} D(a, q)
LaurentPoly c1_eigenvalue(int n, int k);
// mu_0 prod (1 + mu_i)
LaurentPoly frobenius_eigenvalue(const SymbolicSatake &params);

std::string shift_label(const std::string &label, int c);

} // namespace liftspin

#endif
