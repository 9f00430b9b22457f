#ifndef LIFTSPIN_MODFORMS_HPP
#define LIFTSPIN_MODFORMS_HPP

#include <complex>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace liftspin
{

inline constexpr int default_qexp_precision = 200;

// Truncated q-expansion sum_{n=0}^{N} c_n q^n of a level-one form.
struct QExpansion {
    int weight = 0;
    std::vector<mpq_class> coeffs;

    int precision() const noexcept
    {
        return static_cast<int>(coeffs.size()) - 1;
    }
};

QExpansion operator*(const QExpansion &x, const QExpansion &y);
QExpansion operator-(const QExpansion &x, const QExpansion &y);
QExpansion operator+(const QExpansion &x, const QExpansion &y);
QExpansion scale(const QExpansion &x, const mpq_class &c);

bool is_prime(long n);
std::vector<int> primes_up_to(int bound);

// B_n as an exact rational (B_1 = -1/2).
mpq_class bernoulli(int n);

// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n.
QExpansion eisenstein(int weight, int precision = default_qexp_precision);
// (E_4^3 - E_6^2) / 1728
QExpansion delta(int precision = default_qexp_precision);

int cusp_dimension(int weight);

// Echelonized basis of S_weight: element i has coeffs[j] = [i == j] for
// 1 <= j <= dim. Throws EmptySpace when dim = 0.
std::vector<QExpansion> victor_miller_basis(int weight, int precision = default_qexp_precision);

// (T_p f)(n) = a(np) + p^{k-1} a(n/p), valid up to floor(N / p).
QExpansion apply_hecke(const QExpansion &f, int p);

struct EigenformData {
    int weight = 0;
    // Absent when the eigenvalues were read from a table.
    std::optional<QExpansion> qexp;
    // Precomputed for every prime within precision; read-only afterwards.
    std::map<int, mpq_class> eigenvalues;
};

// All normalized eigenforms of weight `weight` when S_weight has a
// rational Hecke eigenbasis. Throws IrrationalEigenspace otherwise.
std::vector<EigenformData> rational_eigenforms(int weight, int precision = default_qexp_precision);
// The first rational eigenform; weights 12, 16, 18, 20, 22, 26 have exactly one.
EigenformData eigenform(int weight, int precision = default_qexp_precision);

mpq_class hecke_eigenvalue(const EigenformData &form, int p);

// Parses "<p> <num>[/<den>]" lines. Blank lines and lines starting with '#'
// are skipped.
EigenformData read_eigenvalue_table(std::istream &in, int weight);
EigenformData read_eigenvalue_table_file(const std::string &path, int weight);

// Roots of X^2 - lambda p^{-twice_exponent/2} X + 1, ordered with the
// nonnegative-imaginary root first (ties: larger real part first). The
// second element is the reciprocal of the first.
std::pair<std::complex<double>, std::complex<double>> numeric_satake(double lambda, int twice_exponent, int p);
std::pair<std::complex<double>, std::complex<double>> numeric_satake(const mpq_class &lambda, int twice_exponent,
                                                                     int p);

} // namespace liftspin

#endif
