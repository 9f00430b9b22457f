#ifndef LIFTSPIN_EXACTALG_HPP
#define LIFTSPIN_EXACTALG_HPP

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace liftspin
{

// The four formal variables. a, b and q are Laurent variables standing for
// alpha_p, beta_p and p^{1/2}; T stands for p^{-s} and only occurs with
// nonnegative exponents.
enum class Var { a, b, q, T };

class Monomial
{
public:
    Monomial() = default;
    // Throws InvalidInput when t < 0.
    Monomial(int a, int b, int q, int t = 0);

    static Monomial of(Var v, int exponent = 1);

    int a() const noexcept
    {
        return m_a;
    }
    int b() const noexcept
    {
        return m_b;
    }
    int q() const noexcept
    {
        return m_q;
    }
    int t() const noexcept
    {
        return m_t;
    }
    int exponent(Var v) const noexcept;

    bool is_one() const noexcept
    {
        return m_a == 0 && m_b == 0 && m_q == 0 && m_t == 0;
    }

    Monomial operator*(const Monomial &other) const;
    Monomial &operator*=(const Monomial &other);
    // Inversion is only defined for T-free monomials.
    Monomial inverse() const;
    Monomial pow(int e) const;
    // Same exponents with the T part removed.
    Monomial without_T() const noexcept;
    Monomial with_T(int t) const;

    friend bool operator==(const Monomial &, const Monomial &) = default;
    // Canonical order: lexicographic on (t, a, b, q).
    friend std::strong_ordering operator<=>(const Monomial &x, const Monomial &y) noexcept
    {
        if (auto c = x.m_t <=> y.m_t; c != 0) return c;
        if (auto c = x.m_a <=> y.m_a; c != 0) return c;
        if (auto c = x.m_b <=> y.m_b; c != 0) return c;
        return x.m_q <=> y.m_q;
    }

    std::string to_string() const;

private:
    int m_a = 0;
    int m_b = 0;
    int m_q = 0;
    int m_t = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const noexcept
    {
        std::uint64_t h = static_cast<std::uint32_t>(m.a());
        h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(m.b());
        h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(m.q());
        h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(m.t());
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

// Sparse Laurent polynomial in a, b, q (and polynomial in T) with
// arbitrary-precision integer coefficients.
//
// Terms are kept sorted in canonical monomial order with no zero
// coefficients, so two equal polynomials always have identical term lists.
class LaurentPoly
{
public:
    using Term = std::pair<Monomial, mpz_class>;

    LaurentPoly() = default;
    explicit LaurentPoly(long c);
    explicit LaurentPoly(const mpz_class &c);
    explicit LaurentPoly(const Monomial &m, const mpz_class &c = 1);

    // Arbitrary term list; duplicates are merged and zeros dropped.
    static LaurentPoly from_terms(std::vector<Term> terms);
    static LaurentPoly variable(Var v)
    {
        return LaurentPoly(Monomial::of(v));
    }

    const std::vector<Term> &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }
    // The single monomial when this is exactly one term with coefficient 1.
    std::optional<Monomial> as_monomial() const;

    LaurentPoly operator-() const;
    LaurentPoly &operator+=(const LaurentPoly &other);
    LaurentPoly &operator-=(const LaurentPoly &other);
    LaurentPoly &operator*=(const LaurentPoly &other);
    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly &y)
    {
        return x += y;
    }
    friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly &y)
    {
        return x -= y;
    }
    friend LaurentPoly operator*(const LaurentPoly &x, const LaurentPoly &y);

    // Multiplication by c * m; keeps the term order, so it is linear time.
    LaurentPoly scaled(const Monomial &m, const mpz_class &c = 1) const;
    LaurentPoly pow(unsigned e) const;

    // Replace T by q^c T.
    LaurentPoly substitute_T_scale(int c) const;
    // Replace the given Laurent variable by its inverse.
    LaurentPoly invert(Var v) const;
    // Apply an exponent map to every monomial and recanonicalize.
    LaurentPoly map_monomials(const std::function<Monomial(const Monomial &)> &f) const;

    // -1 for the zero polynomial.
    int max_T_degree() const noexcept;
    // Coefficient of T^j as a T-free polynomial.
    LaurentPoly coefficient_of_T(int j) const;

    std::complex<double> eval(std::complex<double> a, std::complex<double> b, std::complex<double> q,
                              std::complex<double> t) const;

    std::string to_string() const;

    friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

private:
    std::vector<Term> m_terms;
};

LaurentPoly add(const LaurentPoly &x, const LaurentPoly &y);
LaurentPoly mul(const LaurentPoly &x, const LaurentPoly &y);
LaurentPoly substitute_T_scale(const LaurentPoly &x, int c);
// Throws DivisionByZero when a zero is raised to a negative power.
std::complex<double> eval_complex(const LaurentPoly &x, std::complex<double> a, std::complex<double> b,
                                  std::complex<double> q, std::complex<double> t);

// Integer power by repeated squaring; negative exponents invert the base.
std::complex<double> ipow(std::complex<double> z, int e);

} // namespace liftspin

#endif
