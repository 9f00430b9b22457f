#include <liftspin/exactalg.hpp>

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include <liftspin/errors.hpp>

namespace liftspin
{

Monomial::Monomial(int a, int b, int q, int t) : m_a(a), m_b(b), m_q(q), m_t(t)
{
    if (t < 0) {
        throw InvalidInput("negative T exponent " + std::to_string(t));
    }
}

Monomial Monomial::of(Var v, int exponent)
{
    switch (v) {
        case Var::a:
            return Monomial(exponent, 0, 0, 0);
        case Var::b:
            return Monomial(0, exponent, 0, 0);
        case Var::q:
            return Monomial(0, 0, exponent, 0);
        case Var::T:
            return Monomial(0, 0, 0, exponent);
    }
    return {};
}

int Monomial::exponent(Var v) const noexcept
{
    switch (v) {
        case Var::a:
            return m_a;
        case Var::b:
            return m_b;
        case Var::q:
            return m_q;
        case Var::T:
            return m_t;
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial &other) const
{
    Monomial r = *this;
    r *= other;
    return r;
}

Monomial &Monomial::operator*=(const Monomial &other)
{
    m_a += other.m_a;
    m_b += other.m_b;
    m_q += other.m_q;
    m_t += other.m_t;
    return *this;
}

Monomial Monomial::inverse() const
{
    if (m_t != 0) {
        throw InvalidInput("cannot invert a monomial containing T");
    }
    return Monomial(-m_a, -m_b, -m_q, 0);
}

Monomial Monomial::pow(int e) const
{
    return Monomial(m_a * e, m_b * e, m_q * e, m_t * e);
}

Monomial Monomial::without_T() const noexcept
{
    Monomial r = *this;
    r.m_t = 0;
    return r;
}

Monomial Monomial::with_T(int t) const
{
    return Monomial(m_a, m_b, m_q, t);
}

std::string Monomial::to_string() const
{
    std::ostringstream os;
    bool first = true;
    auto put = [&](const char *name, int e) {
        if (e == 0) return;
        if (!first) os << '*';
        first = false;
        os << name;
        if (e != 1) os << '^' << e;
    };
    put("a", m_a);
    put("b", m_b);
    put("q", m_q);
    put("T", m_t);
    if (first) os << '1';
    return os.str();
}

namespace
{

// Merge two canonical term lists, y scaled by sign.
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term> &x,
                                           const std::vector<LaurentPoly::Term> &y, int sign)
{
    std::vector<LaurentPoly::Term> out;
    out.reserve(x.size() + y.size());
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == x.end() || j->first < i->first) {
            out.emplace_back(j->first, sign > 0 ? j->second : mpz_class(-j->second));
            ++j;
        } else {
            mpz_class c = sign > 0 ? mpz_class(i->second + j->second) : mpz_class(i->second - j->second);
            if (c != 0) out.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

LaurentPoly::LaurentPoly(long c)
{
    if (c != 0) m_terms.emplace_back(Monomial(), mpz_class(c));
}

LaurentPoly::LaurentPoly(const mpz_class &c)
{
    if (c != 0) m_terms.emplace_back(Monomial(), c);
}

LaurentPoly::LaurentPoly(const Monomial &m, const mpz_class &c)
{
    if (c != 0) m_terms.emplace_back(m, c);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term &x, const Term &y) { return x.first < y.first; });
    LaurentPoly r;
    for (auto &t : terms) {
        if (!r.m_terms.empty() && r.m_terms.back().first == t.first) {
            r.m_terms.back().second += t.second;
        } else {
            if (!r.m_terms.empty() && r.m_terms.back().second == 0) r.m_terms.pop_back();
            r.m_terms.push_back(std::move(t));
        }
    }
    if (!r.m_terms.empty() && r.m_terms.back().second == 0) r.m_terms.pop_back();
    return r;
}

std::optional<Monomial> LaurentPoly::as_monomial() const
{
    if (m_terms.size() == 1 && m_terms.front().second == 1) return m_terms.front().first;
    return std::nullopt;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto &t : r.m_terms) t.second = -t.second;
    return r;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &other)
{
    m_terms = merge_terms(m_terms, other.m_terms, 1);
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &other)
{
    m_terms = merge_terms(m_terms, other.m_terms, -1);
    return *this;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &other)
{
    *this = *this * other;
    return *this;
}

LaurentPoly operator*(const LaurentPoly &x, const LaurentPoly &y)
{
    if (x.is_zero() || y.is_zero()) return {};
    if (x.size() == 1) return y.scaled(x.m_terms.front().first, x.m_terms.front().second);
    if (y.size() == 1) return x.scaled(y.m_terms.front().first, y.m_terms.front().second);

    std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
    acc.reserve(x.size() * y.size());
    mpz_class prod;
    for (const auto &[mx, cx] : x.m_terms) {
        for (const auto &[my, cy] : y.m_terms) {
            mpz_mul(prod.get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
            acc[mx * my] += prod;
        }
    }
    LaurentPoly r;
    r.m_terms.reserve(acc.size());
    for (auto &kv : acc) {
        if (kv.second != 0) r.m_terms.emplace_back(kv.first, std::move(kv.second));
    }
    std::sort(r.m_terms.begin(), r.m_terms.end(),
              [](const LaurentPoly::Term &s, const LaurentPoly::Term &t) { return s.first < t.first; });
    return r;
}

LaurentPoly LaurentPoly::scaled(const Monomial &m, const mpz_class &c) const
{
    LaurentPoly r;
    if (c == 0) return r;
    r.m_terms.reserve(m_terms.size());
    for (const auto &[mono, coeff] : m_terms) r.m_terms.emplace_back(mono * m, coeff * c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const
{
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (e != 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::substitute_T_scale(int c) const
{
    return map_monomials([c](const Monomial &m) { return Monomial(m.a(), m.b(), m.q() + c * m.t(), m.t()); });
}

LaurentPoly LaurentPoly::invert(Var v) const
{
    if (v == Var::T) throw InvalidInput("T is a polynomial variable and cannot be inverted");
    return map_monomials([v](const Monomial &m) {
        return Monomial(v == Var::a ? -m.a() : m.a(), v == Var::b ? -m.b() : m.b(), v == Var::q ? -m.q() : m.q(),
                        m.t());
    });
}

LaurentPoly LaurentPoly::map_monomials(const std::function<Monomial(const Monomial &)> &f) const
{
    std::vector<Term> terms;
    terms.reserve(m_terms.size());
    for (const auto &[m, c] : m_terms) terms.emplace_back(f(m), c);
    return from_terms(std::move(terms));
}

int LaurentPoly::max_T_degree() const noexcept
{
    // T is the leading key of the canonical order.
    return m_terms.empty() ? -1 : m_terms.back().first.t();
}

LaurentPoly LaurentPoly::coefficient_of_T(int j) const
{
    LaurentPoly r;
    auto lo = std::lower_bound(m_terms.begin(), m_terms.end(), j,
                               [](const Term &t, int deg) { return t.first.t() < deg; });
    for (auto it = lo; it != m_terms.end() && it->first.t() == j; ++it) {
        r.m_terms.emplace_back(it->first.without_T(), it->second);
    }
    return r;
}

std::complex<double> ipow(std::complex<double> z, int e)
{
    if (e < 0) {
        if (z == 0.0) throw DivisionByZero("zero raised to negative power " + std::to_string(e));
        z = 1.0 / z;
        e = -e;
    }
    std::complex<double> r = 1.0;
    while (e != 0) {
        if (e & 1) r *= z;
        e >>= 1;
        if (e != 0) z *= z;
    }
    return r;
}

std::complex<double> LaurentPoly::eval(std::complex<double> a, std::complex<double> b, std::complex<double> q,
                                       std::complex<double> t) const
{
    // Horner in T over the canonical (T-major) term order.
    std::complex<double> acc = 0.0;
    int deg = max_T_degree();
    auto it = m_terms.rbegin();
    for (int j = deg; j >= 0; --j) {
        std::complex<double> cj = 0.0;
        for (; it != m_terms.rend() && it->first.t() == j; ++it) {
            const auto &m = it->first;
            cj += it->second.get_d() * ipow(a, m.a()) * ipow(b, m.b()) * ipow(q, m.q());
        }
        acc = acc * t + cj;
    }
    return acc;
}

std::string LaurentPoly::to_string() const
{
    if (m_terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : m_terms) {
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            os << m.to_string();
        }
    }
    return os.str();
}

LaurentPoly add(const LaurentPoly &x, const LaurentPoly &y)
{
    return x + y;
}

LaurentPoly mul(const LaurentPoly &x, const LaurentPoly &y)
{
    return x * y;
}

LaurentPoly substitute_T_scale(const LaurentPoly &x, int c)
{
    return x.substitute_T_scale(c);
}

std::complex<double> eval_complex(const LaurentPoly &x, std::complex<double> a, std::complex<double> b,
                                  std::complex<double> q, std::complex<double> t)
{
    return x.eval(a, b, q, t);
}

} // namespace liftspin
