#ifndef LIFTSPIN_CLI_HPP
#define LIFTSPIN_CLI_HPP

#include <complex>
#include <ostream>
#include <string>
#include <vector>

#include <liftspin/modforms.hpp>
#include <liftspin/verify.hpp>

namespace liftspin
{

enum ExitCode : int {
    exit_success = 0,
    exit_verification_failure = 1,
    exit_usage = 2,
    exit_unsupported = 3,
};

enum class Side { lhs, rhs };

// Truncated Euler product prod_{p <= bound} F_p(p^{-s})^{-1}. A heuristic,
// not a certified value.
struct LValueResult {
    std::complex<double> value = 1.0;
    std::complex<double> log_value = 0.0;
    int last_prime = 0;
    // |log F_p(p^{-s})| at the last prime included.
    double last_increment = 0.0;
    // Bound on the omitted tail of log L assuming |alpha_p| = |beta_p| = 1.
    double tail_bound = 0.0;
};

// Re(s) must exceed 1 + the largest root weight of the chosen side; for the
// main theorem this is (n - 1/2) k + 1. g is only consulted when the side
// depends on beta_p.
LValueResult truncated_lvalue(IdentityId id, Side side, int n, int k, std::complex<double> s, int prime_bound,
                              const EigenformData &f, const EigenformData *g);

// The smallest Re(s) excluded from the convergence half-plane.
double convergence_abscissa(const LocalFactor &factor);

// Entry point of the executable; args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace liftspin

#endif
