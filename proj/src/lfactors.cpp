#include <liftspin/lfactors.hpp>

#include <algorithm>
#include <cmath>

#include <liftspin/errors.hpp>
#include <liftspin/modforms.hpp>

namespace liftspin
{

namespace
{

template <typename Value>
std::vector<Value> spinor_roots(const SatakeParams<Value> &params)
{
    // Doubling over mu_1..mu_g enumerates mu_0 prod_{i in S} mu_i for all S.
    std::vector<Value> roots{params.mu0};
    roots.reserve(std::size_t{1} << params.genus());
    for (const auto &mu : params.mus) {
        const std::size_t half = roots.size();
        for (std::size_t i = 0; i < half; ++i) roots.push_back(roots[i] * mu);
    }
    return roots;
}

template <typename Value>
std::vector<Value> standard_roots(const SatakeParams<Value> &params, Value one)
{
    std::vector<Value> roots{one};
    for (const auto &mu : params.mus) {
        roots.push_back(mu);
        roots.push_back(detail::invert_value(mu));
    }
    return roots;
}

std::string half_integer(int c)
{
    if (c % 2 == 0) return std::to_string(c / 2);
    return std::to_string(c) + "/2";
}

} // namespace

std::string shift_label(const std::string &label, int c)
{
    if (c == 0) return label;
    // Shifting T by q^c means evaluating at s - c/2.
    return label + "[s" + (c > 0 ? "-" : "+") + half_integer(std::abs(c)) + "]";
}

LocalFactor::LocalFactor(std::string label, const std::vector<Monomial> &roots) : m_label(std::move(label))
{
    for (const auto &r : roots) add_root(r, 1);
}

LocalFactor::LocalFactor(std::string label, RootMap roots) : m_label(std::move(label))
{
    for (const auto &[r, m] : roots) add_root(r, m);
}

void LocalFactor::add_root(const Monomial &r, std::int64_t mult)
{
    if (r.t() != 0) throw InvalidInput("local factor roots must be T-free");
    if (mult == 0) return;
    auto [it, inserted] = m_roots.emplace(r, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) m_roots.erase(it);
    }
}

std::int64_t LocalFactor::degree() const noexcept
{
    std::int64_t d = 0;
    for (const auto &kv : m_roots) d += kv.second;
    return d;
}

bool LocalFactor::is_polynomial() const noexcept
{
    for (const auto &kv : m_roots) {
        if (kv.second < 0) return false;
    }
    return true;
}

LocalFactor LocalFactor::shifted(int c) const
{
    LocalFactor r;
    r.m_label = shift_label(m_label, c);
    const Monomial scale(0, 0, c);
    for (const auto &[root, m] : m_roots) r.add_root(root * scale, m);
    return r;
}

LocalFactor LocalFactor::pow(std::int64_t e) const
{
    LocalFactor r;
    r.m_label = e == 1 ? m_label : "(" + m_label + ")^" + std::to_string(e);
    for (const auto &[root, m] : m_roots) r.add_root(root, m * e);
    return r;
}

LocalFactor LocalFactor::relabeled(std::string label) const
{
    LocalFactor r = *this;
    r.m_label = std::move(label);
    return r;
}

LocalFactor &LocalFactor::operator*=(const LocalFactor &other)
{
    if (m_label.empty()) {
        m_label = other.m_label;
    } else if (!other.m_label.empty()) {
        m_label += " * " + other.m_label;
    }
    for (const auto &[root, m] : other.m_roots) add_root(root, m);
    return *this;
}

std::vector<LaurentPoly> LocalFactor::expand(int max_degree) const
{
    if (max_degree < 0) {
        if (!is_polynomial()) throw InvalidInput("rational local factor needs an explicit truncation degree");
        max_degree = static_cast<int>(degree());
    }
    std::vector<LaurentPoly> c(max_degree + 1);
    c[0] = LaurentPoly(1);
    int top = 0; // highest possibly nonzero index
    for (const auto &[root, mult] : m_roots) {
        if (mult > 0) {
            for (std::int64_t rep = 0; rep < mult; ++rep) {
                // c <- c * (1 - r T)
                top = std::min(top + 1, max_degree);
                for (int j = top; j >= 1; --j) {
                    if (!c[j - 1].is_zero()) c[j] -= c[j - 1].scaled(root);
                }
            }
        } else {
            for (std::int64_t rep = 0; rep < -mult; ++rep) {
                // c <- c / (1 - r T) = c * sum r^i T^i
                top = max_degree;
                for (int j = 1; j <= top; ++j) {
                    if (!c[j - 1].is_zero()) c[j] += c[j - 1].scaled(root);
                }
            }
        }
    }
    return c;
}

LaurentPoly LocalFactor::to_poly() const
{
    const auto coeffs = expand();
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        for (const auto &[m, c] : coeffs[j].terms()) terms.emplace_back(m.with_T(static_cast<int>(j)), c);
    }
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly LocalFactor::linear_coefficient() const
{
    std::vector<LaurentPoly::Term> terms;
    for (const auto &[root, m] : m_roots) terms.emplace_back(root, mpz_class(static_cast<long>(-m)));
    return LaurentPoly::from_terms(std::move(terms));
}

std::complex<double> LocalFactor::eval(std::complex<double> a, std::complex<double> b, std::complex<double> q,
                                       std::complex<double> t) const
{
    std::complex<double> r = 1.0;
    for (const auto &[root, m] : m_roots) {
        const auto value = ipow(a, root.a()) * ipow(b, root.b()) * ipow(q, root.q());
        r *= ipow(1.0 - value * t, static_cast<int>(m));
    }
    return r;
}

NumericLocalFactor::NumericLocalFactor(std::string label, int p, std::vector<std::complex<double>> roots)
    : m_label(std::move(label)), m_p(p)
{
    for (const auto &r : roots) m_roots.emplace_back(r, 1);
}

std::int64_t NumericLocalFactor::degree() const noexcept
{
    std::int64_t d = 0;
    for (const auto &kv : m_roots) d += kv.second;
    return d;
}

NumericLocalFactor NumericLocalFactor::shifted(int c) const
{
    NumericLocalFactor r = *this;
    r.m_label = shift_label(m_label, c);
    const double scale = std::pow(static_cast<double>(m_p), 0.5 * c);
    for (auto &kv : r.m_roots) kv.first *= scale;
    return r;
}

NumericLocalFactor NumericLocalFactor::pow(std::int64_t e) const
{
    NumericLocalFactor r = *this;
    if (e != 1) r.m_label = "(" + m_label + ")^" + std::to_string(e);
    r.m_roots.clear();
    if (e == 0) return r;
    for (const auto &[root, m] : m_roots) r.m_roots.emplace_back(root, m * e);
    return r;
}

NumericLocalFactor &NumericLocalFactor::operator*=(const NumericLocalFactor &other)
{
    if (m_p == 0) m_p = other.m_p;
    if (other.m_p != 0 && other.m_p != m_p) throw InvalidInput("cannot multiply local factors at different primes");
    if (m_label.empty()) {
        m_label = other.m_label;
    } else if (!other.m_label.empty()) {
        m_label += " * " + other.m_label;
    }
    m_roots.insert(m_roots.end(), other.m_roots.begin(), other.m_roots.end());
    return *this;
}

std::vector<std::complex<double>> NumericLocalFactor::expand(double normalization) const
{
    const double scale = std::pow(static_cast<double>(m_p), -0.5 * normalization);
    std::vector<std::complex<double>> c{1.0};
    for (const auto &[root, mult] : m_roots) {
        if (mult < 0) throw InvalidInput("numeric expansion of a rational local factor");
        const std::complex<double> r = root * scale;
        for (std::int64_t rep = 0; rep < mult; ++rep) {
            c.push_back(0.0);
            for (std::size_t j = c.size() - 1; j >= 1; --j) c[j] -= r * c[j - 1];
        }
    }
    return c;
}

std::complex<double> NumericLocalFactor::eval(std::complex<double> t) const
{
    std::complex<double> r = 1.0;
    for (const auto &[root, m] : m_roots) r *= ipow(1.0 - root * t, static_cast<int>(m));
    return r;
}

std::complex<double> NumericLocalFactor::log_eval(std::complex<double> t) const
{
    std::complex<double> r = 0.0;
    for (const auto &[root, m] : m_roots) {
        // log1p keeps precision when |r t| is tiny.
        const std::complex<double> z = -root * t;
        const std::complex<double> term =
            std::abs(z) < 1e-4 ? z - 0.5 * z * z + z * z * z / 3.0 : std::log(1.0 + z);
        r += static_cast<double>(m) * term;
    }
    return r;
}

LocalFactor hecke_factor(HeckeRole role, int k, int n)
{
    if (role == HeckeRole::f) {
        const int e = 2 * k - 1;
        return LocalFactor("L(s, f)", std::vector<Monomial>{Monomial(1, 0, e), Monomial(-1, 0, e)});
    }
    const int e = k + n - 1;
    return LocalFactor("L(s, g)", std::vector<Monomial>{Monomial(0, 1, e), Monomial(0, -1, e)});
}

LocalFactor sym_power_factor(int m, int k)
{
    if (m < 0) throw InvalidInput("symmetric power degree must be nonnegative");
    std::vector<Monomial> roots;
    for (int j = 0; j <= m; ++j) roots.emplace_back(m - 2 * j, 0, m * (2 * k - 1));
    return LocalFactor(m == 0 ? "zeta(s)" : "L(s, sym" + std::to_string(m) + " f)", roots);
}

LocalFactor tensor_factor(int m, int k, int n)
{
    if (m < 0) throw InvalidInput("tensor factor index must be nonnegative");
    if (m <= 1) return hecke_factor(HeckeRole::g, k, n);
    const int e = (m - 1) * (2 * k - 1) + (k + n - 1);
    std::vector<Monomial> roots;
    for (int j = 0; j <= m - 1; ++j) {
        for (int eps : {1, -1}) roots.emplace_back(m - 1 - 2 * j, eps, e);
    }
    const std::string inner = m == 2 ? "f" : "sym" + std::to_string(m - 1) + " f";
    return LocalFactor("L(s, g x " + inner + ")", roots);
}

LocalFactor spinor_factor(const SymbolicSatake &params)
{
    if (params.genus() > max_spinor_genus) {
        throw GenusTooLarge("spinor factor of genus " + std::to_string(params.genus()) + " exceeds cap " +
                            std::to_string(max_spinor_genus));
    }
    return LocalFactor("L(s, F, spin) genus " + std::to_string(params.genus()), spinor_roots(params));
}

LocalFactor standard_factor(const SymbolicSatake &params)
{
    return LocalFactor("L(s, F, st) genus " + std::to_string(params.genus()), standard_roots(params, Monomial()));
}

NumericLocalFactor spinor_factor(const NumericSatake &params, int p)
{
    if (params.genus() > max_spinor_genus) throw GenusTooLarge("spinor factor genus cap exceeded");
    return NumericLocalFactor("L(s, F, spin) genus " + std::to_string(params.genus()), p, spinor_roots(params));
}

NumericLocalFactor standard_factor(const NumericSatake &params, int p)
{
    return NumericLocalFactor("L(s, F, st) genus " + std::to_string(params.genus()), p,
                              standard_roots(params, std::complex<double>(1.0)));
}

NumericLocalFactor hecke_factor_numeric(double lambda, int twice_exponent, int p, std::string label)
{
    const auto [alpha, alpha_inv] = numeric_satake(lambda, twice_exponent, p);
    const double scale = std::pow(static_cast<double>(p), 0.5 * twice_exponent);
    return NumericLocalFactor(std::move(label), p, {alpha * scale, alpha_inv * scale});
}

NumericLocalFactor tensor_factor_numeric(int m, int k, int n, std::complex<double> alpha, std::complex<double> beta,
                                         int p)
{
    if (m < 0) throw InvalidInput("tensor factor index must be nonnegative");
    const int top = std::max(m, 1);
    const double scale = std::pow(static_cast<double>(p), 0.5 * ((top - 1) * (2 * k - 1) + (k + n - 1)));
    std::vector<std::complex<double>> roots;
    for (int j = 0; j <= top - 1; ++j) {
        const std::complex<double> a_part = ipow(alpha, top - 1 - 2 * j);
        roots.push_back(a_part * beta * scale);
        roots.push_back(a_part / beta * scale);
    }
    return NumericLocalFactor("L(s, g x sym" + std::to_string(top - 1) + " f)", p, std::move(roots));
}

NumericLocalFactor instantiate(const LocalFactor &factor, std::complex<double> alpha, std::complex<double> beta,
                               int p)
{
    const std::complex<double> q = std::sqrt(static_cast<double>(p));
    std::vector<std::complex<double>> roots;
    for (const auto &[root, m] : factor.roots()) {
        if (m < 0) throw InvalidInput("cannot instantiate a rational local factor");
        const auto value = ipow(alpha, root.a()) * ipow(beta, root.b()) * ipow(q, root.q());
        for (std::int64_t i = 0; i < m; ++i) roots.push_back(value);
    }
    return NumericLocalFactor(factor.label(), p, std::move(roots));
}

LaurentPoly gp_constant(int n)
{
    if (n < 1) throw InvalidInput("gp_constant needs n >= 1");
    LaurentPoly d(1);
    for (int i = 1; i <= n - 1; ++i) {
        const LaurentPoly plus = LaurentPoly(1) + LaurentPoly(Monomial(1, 0, 1 - 2 * i));
        const LaurentPoly minus = LaurentPoly(1) + LaurentPoly(Monomial(-1, 0, 1 - 2 * i));
        d = d * plus * minus;
    }
    return d;
}

LaurentPoly c1_eigenvalue(int n, int k)
{
    if (n < 2) throw InvalidInput("c1_eigenvalue needs n >= 2");
    const LaurentPoly lambda_g = LaurentPoly(Monomial(0, 1, k + n - 1)) + LaurentPoly(Monomial(0, -1, k + n - 1));
    const int q_exp = -(n - 1) * (n + 2) + 2 * (n - 1) * (k + n);
    return lambda_g * LaurentPoly(Monomial(0, 0, q_exp)) * gp_constant(n);
}

LaurentPoly frobenius_eigenvalue(const SymbolicSatake &params)
{
    LaurentPoly r(params.mu0);
    for (const auto &mu : params.mus) r = r * (LaurentPoly(1) + LaurentPoly(mu));
    return r;
}

} // namespace liftspin
