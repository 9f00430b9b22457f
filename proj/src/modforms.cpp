#include <liftspin/modforms.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <liftspin/errors.hpp>

namespace liftspin
{

namespace
{

int common_precision(const QExpansion &x, const QExpansion &y)
{
    return std::min(x.precision(), y.precision());
}

QExpansion zero_series(int weight, int precision)
{
    QExpansion r;
    r.weight = weight;
    r.coeffs.assign(precision + 1, mpq_class(0));
    return r;
}

mpz_class divisor_power_sum(int n, int e)
{
    mpz_class s = 0;
    mpz_class term;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(term.get_mpz_t(), d, e);
        s += term;
        const int other = n / d;
        if (other != d) {
            mpz_ui_pow_ui(term.get_mpz_t(), other, e);
            s += term;
        }
    }
    return s;
}

QExpansion power(const QExpansion &x, int e, int precision)
{
    QExpansion r = zero_series(0, precision);
    r.coeffs[0] = 1;
    for (int i = 0; i < e; ++i) r = r * x;
    r.weight = x.weight * e;
    return r;
}

// Characteristic polynomial det(xI - M), coefficients low to high, by
// Faddeev-LeVerrier.
std::vector<mpq_class> characteristic_polynomial(const std::vector<std::vector<mpq_class>> &m)
{
    const std::size_t d = m.size();
    std::vector<mpq_class> c(d + 1);
    c[d] = 1;
    std::vector<std::vector<mpq_class>> acc(d, std::vector<mpq_class>(d, 0)); // M_k
    for (std::size_t k = 1; k <= d; ++k) {
        // M_k = M * M_{k-1} + c_{d-k+1} I  (M_0 = 0)
        std::vector<std::vector<mpq_class>> next(d, std::vector<mpq_class>(d, 0));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                mpq_class s = 0;
                for (std::size_t l = 0; l < d; ++l) s += m[i][l] * acc[l][j];
                if (i == j) s += c[d - k + 1];
                next[i][j] = s;
            }
        }
        acc = std::move(next);
        mpq_class trace = 0;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t l = 0; l < d; ++l) trace += m[i][l] * acc[l][i];
        }
        c[d - k] = -trace / mpq_class(static_cast<long>(k));
    }
    return c;
}

mpq_class evaluate(const std::vector<mpq_class> &poly, const mpq_class &x)
{
    mpq_class r = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = r * x + *it;
    return r;
}

// Candidate real roots of a monic polynomial via Durand-Kerner iteration.
std::vector<double> approximate_real_roots(const std::vector<mpq_class> &poly)
{
    const std::size_t d = poly.size() - 1;
    double bound = 0.0;
    for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, std::abs(poly[i].get_d()));
    bound = 1.0 + std::pow(bound, 1.0 / static_cast<double>(d));
    // Cauchy-type bound rescaled into the unit disk.
    std::vector<std::complex<long double>> coeffs(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        coeffs[i] = static_cast<long double>(poly[i].get_d()) /
                    std::pow(static_cast<long double>(bound), static_cast<long double>(d - i));
    }
    auto eval = [&](std::complex<long double> z) {
        std::complex<long double> r = 0;
        for (std::size_t i = d + 1; i-- > 0;) r = r * z + coeffs[i];
        return r;
    };
    std::vector<std::complex<long double>> z(d);
    const std::complex<long double> seed(0.4L, 0.9L);
    for (std::size_t i = 0; i < d; ++i) z[i] = std::pow(seed, static_cast<long double>(i));
    for (int iter = 0; iter < 2000; ++iter) {
        for (std::size_t i = 0; i < d; ++i) {
            std::complex<long double> denom = 1;
            for (std::size_t j = 0; j < d; ++j) {
                if (j != i) denom *= (z[i] - z[j]);
            }
            z[i] -= eval(z[i]) / denom;
        }
    }
    std::vector<double> out;
    for (const auto &root : z) out.push_back(static_cast<double>(root.real() * bound));
    return out;
}

// Left null vector of (M - lambda I), normalized to v[0] = 1.
std::vector<mpq_class> left_eigenvector(const std::vector<std::vector<mpq_class>> &m, const mpq_class &lambda)
{
    const std::size_t d = m.size();
    // Solve (M - lambda I)^T v = 0 by Gauss-Jordan elimination.
    std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) a[i][j] = m[j][i] - (i == j ? lambda : mpq_class(0));
    }
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < d && row < d; ++col) {
        std::size_t sel = row;
        while (sel < d && a[sel][col] == 0) ++sel;
        if (sel == d) continue;
        std::swap(a[sel], a[row]);
        const mpq_class inv = 1 / a[row][col];
        for (auto &x : a[row]) x *= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const mpq_class f = a[r][col];
            for (std::size_t j = 0; j < d; ++j) a[r][j] -= f * a[row][j];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    // Pick the first free column and back-substitute.
    std::vector<bool> is_pivot(d, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < d && is_pivot[free_col]) ++free_col;
    if (free_col == d) throw IrrationalEigenspace("eigenvalue has trivial eigenspace");
    std::vector<mpq_class> v(d, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free_col];
    if (v[0] == 0) throw IrrationalEigenspace("eigenvector with vanishing first coefficient");
    const mpq_class inv = 1 / v[0];
    for (auto &x : v) x *= inv;
    return v;
}

EigenformData make_eigenform(QExpansion qexp)
{
    EigenformData form;
    form.weight = qexp.weight;
    for (int p : primes_up_to(qexp.precision())) form.eigenvalues.emplace(p, qexp.coeffs[p]);
    form.qexp = std::move(qexp);
    return form;
}

} // namespace

QExpansion operator*(const QExpansion &x, const QExpansion &y)
{
    const int n = common_precision(x, y);
    QExpansion r = zero_series(x.weight + y.weight, n);
    for (int i = 0; i <= n; ++i) {
        if (x.coeffs[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) r.coeffs[i + j] += x.coeffs[i] * y.coeffs[j];
    }
    return r;
}

QExpansion operator-(const QExpansion &x, const QExpansion &y)
{
    const int n = common_precision(x, y);
    QExpansion r = zero_series(x.weight, n);
    for (int i = 0; i <= n; ++i) r.coeffs[i] = x.coeffs[i] - y.coeffs[i];
    return r;
}

QExpansion operator+(const QExpansion &x, const QExpansion &y)
{
    const int n = common_precision(x, y);
    QExpansion r = zero_series(x.weight, n);
    for (int i = 0; i <= n; ++i) r.coeffs[i] = x.coeffs[i] + y.coeffs[i];
    return r;
}

QExpansion scale(const QExpansion &x, const mpq_class &c)
{
    QExpansion r = x;
    for (auto &v : r.coeffs) v *= c;
    return r;
}

bool is_prime(long n)
{
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<int> primes_up_to(int bound)
{
    std::vector<int> out;
    for (int p = 2; p <= bound; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

mpq_class bernoulli(int n)
{
    if (n < 0) throw InvalidInput("bernoulli index must be nonnegative");
    std::vector<mpq_class> b(n + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        // B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j
        mpq_class s = 0;
        mpz_class binom = 1; // C(m+1, 0)
        for (int j = 0; j < m; ++j) {
            s += mpq_class(binom) * b[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b[m] = -s / mpq_class(m + 1);
    }
    return b[n];
}

QExpansion eisenstein(int weight, int precision)
{
    if (weight < 4 || weight % 2 != 0) {
        throw UnsupportedWeight("Eisenstein series needs even weight >= 4, got " + std::to_string(weight));
    }
    if (precision < 0) throw InvalidInput("negative precision");
    QExpansion e = zero_series(weight, precision);
    e.coeffs[0] = 1;
    const mpq_class factor = -mpq_class(2 * weight) / bernoulli(weight);
    for (int n = 1; n <= precision; ++n) e.coeffs[n] = factor * mpq_class(divisor_power_sum(n, weight - 1));
    return e;
}

QExpansion delta(int precision)
{
    if (precision < 1) throw InvalidInput("delta needs precision >= 1");
    const QExpansion e4 = eisenstein(4, precision);
    const QExpansion e6 = eisenstein(6, precision);
    QExpansion d = scale(e4 * e4 * e4 - e6 * e6, mpq_class(1, 1728));
    d.weight = 12;
    return d;
}

int cusp_dimension(int weight)
{
    if (weight < 0 || weight % 2 != 0) return 0;
    if (weight == 2) return 0;
    const int base = weight / 12;
    return (weight % 12 == 2) ? base - 1 : base;
}

std::vector<QExpansion> victor_miller_basis(int weight, int precision)
{
    if (weight < 4 || weight % 2 != 0) throw UnsupportedWeight("weight must be even and >= 4");
    const int dim = cusp_dimension(weight);
    if (dim == 0) throw EmptySpace("S_" + std::to_string(weight) + " is zero");
    if (precision < dim) throw InsufficientPrecision("precision below dimension of the space");

    const QExpansion e4 = eisenstein(4, precision);
    const QExpansion e6 = eisenstein(6, precision);
    const QExpansion d = delta(precision);

    std::vector<QExpansion> basis;
    for (int j = 1; j <= dim; ++j) {
        const int rest = weight - 12 * j;
        const int b = (rest % 4 == 2) ? 1 : 0;
        const int a = (rest - 6 * b) / 4;
        QExpansion f = power(d, j, precision) * power(e4, a, precision) * power(e6, b, precision);
        f.weight = weight;
        basis.push_back(std::move(f));
    }
    // f_j = q^j + O(q^{j+1}); clear entry j from the earlier rows.
    for (int j = 2; j <= dim; ++j) {
        for (int i = 1; i < j; ++i) {
            const mpq_class c = basis[i - 1].coeffs[j];
            if (c != 0) {
                basis[i - 1] = basis[i - 1] - scale(basis[j - 1], c);
                basis[i - 1].weight = weight;
            }
        }
    }
    return basis;
}

QExpansion apply_hecke(const QExpansion &f, int p)
{
    if (!is_prime(p)) throw NonPrime(std::to_string(p) + " is not prime");
    const int n_max = f.precision() / p;
    QExpansion r = zero_series(f.weight, n_max);
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, f.weight - 1);
    for (int n = 0; n <= n_max; ++n) {
        r.coeffs[n] = f.coeffs[n * p];
        if (n % p == 0) r.coeffs[n] += mpq_class(pk) * f.coeffs[n / p];
    }
    return r;
}

std::vector<EigenformData> rational_eigenforms(int weight, int precision)
{
    std::vector<QExpansion> basis = victor_miller_basis(weight, precision);
    const int dim = static_cast<int>(basis.size());
    if (dim == 1) return {make_eigenform(std::move(basis.front()))};

    if (precision < 2 * dim) throw InsufficientPrecision("T_2 matrix needs precision >= 2 * dim");
    // Row i holds the coordinates of T_2 f_i in the echelon basis.
    std::vector<std::vector<mpq_class>> t2(dim, std::vector<mpq_class>(dim));
    for (int i = 0; i < dim; ++i) {
        const QExpansion image = apply_hecke(basis[i], 2);
        for (int j = 0; j < dim; ++j) t2[i][j] = image.coeffs[j + 1];
    }
    const std::vector<mpq_class> charpoly = characteristic_polynomial(t2);

    std::vector<mpq_class> roots;
    for (double approx : approximate_real_roots(charpoly)) {
        const mpq_class candidate(static_cast<long>(std::llround(approx)));
        if (evaluate(charpoly, candidate) == 0 &&
            std::find(roots.begin(), roots.end(), candidate) == roots.end()) {
            roots.push_back(candidate);
        }
    }
    if (static_cast<int>(roots.size()) != dim) {
        throw IrrationalEigenspace("T_2 on S_" + std::to_string(weight) + " has no rational eigenbasis");
    }
    std::sort(roots.begin(), roots.end());

    std::vector<EigenformData> forms;
    for (const auto &lambda : roots) {
        const std::vector<mpq_class> v = left_eigenvector(t2, lambda);
        QExpansion f = zero_series(weight, precision);
        for (int i = 0; i < dim; ++i) f = f + scale(basis[i], v[i]);
        f.weight = weight;
        forms.push_back(make_eigenform(std::move(f)));
    }
    return forms;
}

EigenformData eigenform(int weight, int precision)
{
    return rational_eigenforms(weight, precision).front();
}

mpq_class hecke_eigenvalue(const EigenformData &form, int p)
{
    if (!is_prime(p)) throw NonPrime(std::to_string(p) + " is not prime");
    auto it = form.eigenvalues.find(p);
    if (it == form.eigenvalues.end()) {
        throw InsufficientPrecision("no eigenvalue available for p = " + std::to_string(p));
    }
    return it->second;
}

EigenformData read_eigenvalue_table(std::istream &in, int weight)
{
    EigenformData form;
    form.weight = weight;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        long p = 0;
        std::string value;
        if (!(fields >> p >> value)) {
            throw InvalidInput("eigenvalue table line " + std::to_string(lineno) + ": expected '<p> <value>'");
        }
        if (!is_prime(p)) throw NonPrime("eigenvalue table line " + std::to_string(lineno));
        mpq_class lambda;
        if (lambda.set_str(value, 10) != 0) {
            throw InvalidInput("eigenvalue table line " + std::to_string(lineno) + ": bad rational '" + value + "'");
        }
        lambda.canonicalize();
        form.eigenvalues[static_cast<int>(p)] = lambda;
    }
    return form;
}

EigenformData read_eigenvalue_table_file(const std::string &path, int weight)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open eigenvalue table '" + path + "'");
    return read_eigenvalue_table(in, weight);
}

std::pair<std::complex<double>, std::complex<double>> numeric_satake(double lambda, int twice_exponent, int p)
{
    const double x = lambda * std::pow(static_cast<double>(p), -0.5 * twice_exponent);
    const std::complex<double> disc = std::sqrt(std::complex<double>(x * x - 4.0, 0.0));
    std::complex<double> r1 = 0.5 * (x + disc);
    std::complex<double> r2 = 0.5 * (x - disc);
    auto first = [](std::complex<double> u, std::complex<double> v) {
        const bool u_up = u.imag() >= 0.0;
        const bool v_up = v.imag() >= 0.0;
        if (u_up != v_up) return u_up;
        return u.real() >= v.real();
    };
    const std::complex<double> alpha = first(r1, r2) ? r1 : r2;
    return {alpha, 1.0 / alpha};
}

std::pair<std::complex<double>, std::complex<double>> numeric_satake(const mpq_class &lambda, int twice_exponent,
                                                                     int p)
{
    return numeric_satake(lambda.get_d(), twice_exponent, p);
}

} // namespace liftspin
