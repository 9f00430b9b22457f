#ifndef LIFTSPIN_VERIFY_HPP
#define LIFTSPIN_VERIFY_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <liftspin/combinat.hpp>
#include <liftspin/lfactors.hpp>
#include <liftspin/modforms.hpp>
#include <liftspin/satake.hpp>

namespace liftspin
{

enum class IdentityId {
    main_theorem,
    ikeda_spinor,
    ikeda_standard,
    miyawaki_standard,
    c1_frobenius,
    example_deg3,
    example_deg5,
    example_deg7,
    beta_epsilon_match,
};

std::string to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(const std::string &name);

enum class Mode { symbolic, numeric };

// First differing coefficient between the two sides.
struct Witness {
    int t_degree = -1;
    LaurentPoly lhs;
    LaurentPoly rhs;
    // Set in numeric mode; coefficients of the normalized variable.
    std::optional<std::complex<double>> numeric_lhs;
    std::optional<std::complex<double>> numeric_rhs;
};

struct VerificationReport {
    IdentityId identity = IdentityId::main_theorem;
    int n = 0;
    int k = 0;
    Mode mode = Mode::symbolic;
    std::optional<int> prime;
    bool pass = false;
    std::int64_t lhs_degree = 0;
    std::int64_t rhs_degree = 0;
    // Whether the coefficient lists were also expanded and compared.
    bool expanded_check = false;
    // Largest normalized coefficient error in numeric mode.
    double max_error = 0.0;
    std::string detail;
    std::optional<Witness> witness;
};

struct VerifyOptions {
    // Expanded coefficient comparison runs when both sides have degree <= this.
    int expand_degree_cap = 64;
    // Per-coefficient tolerance in numeric mode.
    double numeric_tolerance = 1e-9;
};

// Largest n accepted by the symbolic checks.
inline constexpr int max_main_theorem_n = 6;
inline constexpr int max_ikeda_spinor_n = 4;
inline constexpr int max_standard_n = 6;

// One factor L(s - shift/2, g x sym_{tensor_index-1} f)^{multiplicity} of the
// right-hand side of the main theorem, with its (m, r) provenance.
struct RhsTerm {
    int tensor_index = 0;
    int shift = 0;
    std::int64_t multiplicity = 0;
    int m = 0;
    int r = 0;
};

struct MainTheoremInputs {
    SymbolicSatake lhs_params;
    std::vector<RhsTerm> rhs;
};

std::vector<RhsTerm> main_theorem_recipe(int n, int k, const BetaTable &beta);
MainTheoremInputs main_theorem_inputs(int n, int k);
LocalFactor assemble_rhs(const std::vector<RhsTerm> &recipe, int k, int n);

// Same shape for the Ikeda spinor identity: L(s - shift/2, sym_{sym_degree} f)^{multiplicity}.
struct SymTerm {
    int sym_degree = 0;
    int shift = 0;
    std::int64_t multiplicity = 0;
    int m = 0;
    int r = 0;
};
std::vector<SymTerm> ikeda_spinor_recipe(int n, int k, const BetaTable &beta);
LocalFactor assemble_sym_rhs(const std::vector<SymTerm> &recipe, int k);

// Factored comparison plus, when cheap, expanded comparison.
VerificationReport compare_factors(const LocalFactor &lhs, const LocalFactor &rhs, const VerifyOptions &opts = {});

VerificationReport verify_main_theorem(int n, int k, const VerifyOptions &opts = {});
VerificationReport verify_main_theorem(int n, int k, const MainTheoremInputs &inputs, const VerifyOptions &opts = {});
// Numeric instantiation at one prime from eigenvalues of f (weight 2k) and g (weight k+n).
VerificationReport verify_main_theorem_numeric(int n, int k, int p, const mpq_class &lambda_f,
                                               const mpq_class &lambda_g, const VerifyOptions &opts = {});

VerificationReport verify_ikeda_spinor(int n, int k, const VerifyOptions &opts = {});
VerificationReport verify_ikeda_spinor(int n, int k, const BetaTable &beta, const VerifyOptions &opts = {});
VerificationReport verify_ikeda_standard(int n, int k, const VerifyOptions &opts = {});
VerificationReport verify_ikeda_standard_numeric(int n, int k, int p, const mpq_class &lambda_f,
                                                 const VerifyOptions &opts = {});
VerificationReport verify_miyawaki_standard(int n, int k, const VerifyOptions &opts = {});
VerificationReport verify_c1_frobenius(int n, int k);

// The displayed degree-3/5/7 products (n = 2, 3, 4) against both the
// spinor factor and the assembled right-hand side.
VerificationReport verify_example(int n, int k, const VerifyOptions &opts = {});
LocalFactor displayed_example_product(int n, int k);

// Printed exponent lists of the degree-7 example, indexed from i = -3.
inline constexpr std::array<int, 9> deg7_epsilon = {1, 1, 2, 2, 2, 2, 2, 1, 1};
inline constexpr std::array<int, 10> deg7_epsilon_prime = {1, 1, 1, 2, 2, 2, 2, 1, 1, 1};
VerificationReport verify_deg7_epsilons();
VerificationReport verify_deg7_epsilons(const BetaTable &beta3);

// Builders for each side, shared with the CLI.
LocalFactor identity_lhs(IdentityId id, int n, int k);
LocalFactor identity_rhs(IdentityId id, int n, int k);

} // namespace liftspin

#endif
