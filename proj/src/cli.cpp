#include <liftspin/cli.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include <liftspin/errors.hpp>
#include <liftspin/serialize.hpp>

namespace liftspin
{

namespace
{

struct RunConfig {
    std::optional<int> n;
    std::optional<int> k;
    int weight = 0;
    std::string mode = "symbolic";
    std::vector<int> primes;
    int primes_up_to = 0;
    int precision = default_qexp_precision;
    std::string eigenvalues_file;
    std::string g_eigenvalues_file;
    std::string format = "json";
    std::string output;

    // subcommand specific
    std::string side;
    std::string identity;
    bool factored = false;
    double s_real = 0.0;
    double s_imag = 0.0;
    std::vector<std::string> suites;
    bool all = false;
    bool symbolic = false;
    bool witness = false;
    bool corrupt_beta = false;
};

const std::vector<std::string> suite_names = {"main",     "ikeda-spinor", "ikeda-standard", "miyawaki-standard",
                                              "c1",       "examples",     "epsilons"};

bool depends_on_beta(const LocalFactor &factor)
{
    return std::any_of(factor.roots().begin(), factor.roots().end(),
                       [](const auto &entry) { return entry.first.b() != 0; });
}

EigenformData load_form(int weight, const std::string &file, int precision)
{
    if (!file.empty()) return read_eigenvalue_table_file(file, weight);
    return eigenform(weight, precision);
}

std::complex<double> alpha_at(const EigenformData &f, int k, int p)
{
    return numeric_satake(hecke_eigenvalue(f, p), 2 * k - 1, p).first;
}

std::complex<double> beta_at(const EigenformData *g, int k, int n, int p)
{
    if (g == nullptr) return 1.0;
    return numeric_satake(hecke_eigenvalue(*g, p), k + n - 1, p).first;
}

// Prime list from --prime / --primes-up-to.
std::vector<int> selected_primes(const RunConfig &cfg, int default_bound)
{
    std::vector<int> ps = cfg.primes;
    const int bound = cfg.primes_up_to > 0 ? cfg.primes_up_to : (ps.empty() ? default_bound : 0);
    for (int p : primes_up_to(bound)) ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

std::string scalar_text(const json &v)
{
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// One line of key=value pairs; nested values are compact JSON.
std::string object_line(const json &obj)
{
    std::string line;
    for (const auto &[key, value] : obj.items()) {
        if (!line.empty()) line += ' ';
        line += key + "=" + scalar_text(value);
    }
    return line;
}

std::string poly_text(const json &poly)
{
    return laurent_from_json(poly).to_string();
}

void emit(const json &data, const std::string &format, std::ostream &out)
{
    if (format == "json") {
        out << data.dump(2) << '\n';
        return;
    }
    if (data.is_array()) {
        for (const auto &item : data) out << object_line(item) << '\n';
    } else {
        out << object_line(data) << '\n';
    }
}

// ---- eigenvalues ----

int cmd_eigenvalues(const RunConfig &cfg, std::ostream &out)
{
    const auto ps = selected_primes(cfg, 11);
    const int precision = std::max(cfg.precision, ps.empty() ? 0 : ps.back());
    const EigenformData form = load_form(cfg.weight, cfg.eigenvalues_file, precision);
    json rows = json::array();
    for (int p : ps) rows.push_back({{"p", p}, {"lambda", hecke_eigenvalue(form, p).get_str()}});
    json data = {{"weight", cfg.weight}, {"eigenvalues", rows}};
    if (cfg.format == "json") {
        out << data.dump(2) << '\n';
    } else {
        out << "# weight " << cfg.weight << '\n';
        for (const auto &row : rows) out << row["p"].get<int>() << ' ' << row["lambda"].get<std::string>() << '\n';
    }
    return exit_success;
}

// ---- euler ----

IdentityId parse_identity(const std::string &name)
{
    const auto id = identity_from_string(name);
    if (!id) throw InvalidInput("unknown identity '" + name + "'");
    return *id;
}

LocalFactor build_side(IdentityId id, Side side, int n, int k)
{
    return side == Side::lhs ? identity_lhs(id, n, k) : identity_rhs(id, n, k);
}

int largest_q_exponent(const LocalFactor &factor)
{
    int e = std::numeric_limits<int>::min();
    for (const auto &[root, m] : factor.roots()) e = std::max(e, root.q());
    return factor.roots().empty() ? 0 : e;
}

json factored_json(const LocalFactor &factor)
{
    json roots = json::array();
    for (const auto &[root, m] : factor.roots()) {
        roots.push_back({{"root", {root.a(), root.b(), root.q()}}, {"multiplicity", m}});
    }
    return {{"label", factor.label()}, {"degree", factor.degree()}, {"roots", std::move(roots)}};
}

int cmd_euler(const RunConfig &cfg, std::ostream &out)
{
    if (!cfg.n || !cfg.k) throw InvalidInput("euler needs --n and --k");
    const int n = *cfg.n, k = *cfg.k;
    const IdentityId id = parse_identity(cfg.identity);
    const Side side = cfg.side == "lhs" ? Side::lhs : Side::rhs;
    const LocalFactor factor = build_side(id, side, n, k);

    if (cfg.mode == "symbolic") {
        if (cfg.factored) {
            const json data = factored_json(factor);
            if (cfg.format == "json") {
                out << data.dump(2) << '\n';
            } else {
                out << "label=" << factor.label() << " degree=" << factor.degree() << '\n';
                for (const auto &[root, m] : factor.roots()) out << root.to_string() << " ^" << m << '\n';
            }
            return exit_success;
        }
        if (factor.degree() > VerifyOptions{}.expand_degree_cap) {
            throw GenusTooLarge("degree " + std::to_string(factor.degree()) +
                                " is too large to expand; use --factored");
        }
        const json data = to_json(factor);
        if (cfg.format == "json") {
            out << data.dump(2) << '\n';
        } else {
            out << "label=" << factor.label() << " degree=" << factor.degree() << '\n';
            int j = 0;
            for (const auto &c : data["coeffs"]) out << "T^" << j++ << ": " << poly_text(c) << '\n';
        }
        return exit_success;
    }

    // numeric: one factor per requested prime
    const auto ps = selected_primes(cfg, 0);
    if (ps.empty()) throw InvalidInput("numeric euler needs --prime or --primes-up-to");
    const int precision = std::max(cfg.precision, ps.back());
    const EigenformData f = load_form(2 * k, cfg.eigenvalues_file, precision);
    std::optional<EigenformData> g;
    if (depends_on_beta(factor)) g = load_form(k + n, cfg.g_eigenvalues_file, precision);
    const double normalization = largest_q_exponent(factor);
    json rows = json::array();
    for (int p : ps) {
        if (!is_prime(p)) throw NonPrime(std::to_string(p) + " is not prime");
        const auto num = instantiate(factor, alpha_at(f, k, p), beta_at(g ? &*g : nullptr, k, n, p), p);
        rows.push_back(to_json(num, normalization));
    }
    if (cfg.format == "json") {
        out << rows.dump(2) << '\n';
    } else {
        for (const auto &row : rows) {
            out << "label=" << row["label"].get<std::string>() << " prime=" << row["prime"].get<int>()
                << " degree=" << row["degree"].get<std::int64_t>()
                << " normalization=" << row["normalization"].dump() << '\n';
            int j = 0;
            for (const auto &c : row["coeffs"]) out << "u^" << j++ << ": " << c[0].dump() << ' ' << c[1].dump() << '\n';
        }
    }
    return exit_success;
}

// ---- beta-table ----

int cmd_beta_table(const RunConfig &cfg, std::ostream &out)
{
    if (!cfg.n) throw InvalidInput("beta-table needs --n");
    if (*cfg.n < 0) throw InvalidInput("beta-table needs n >= 0");
    const BetaTable table(*cfg.n);
    const json data = beta_table_json(table);
    if (cfg.format == "json") {
        out << data.dump(2) << '\n';
        return exit_success;
    }
    out << "# n=" << table.n() << '\n';
    out << std::setw(4) << "m" << std::setw(6) << "r" << std::setw(14) << "alpha" << std::setw(14) << "beta" << '\n';
    for (const auto &e : data["entries"]) {
        out << std::setw(4) << e["m"].get<int>() << std::setw(6) << e["r"].get<int>() << std::setw(14)
            << e["alpha"].get<std::int64_t>() << std::setw(14) << e["beta"].get<std::int64_t>() << '\n';
    }
    return exit_success;
}

// ---- lvalue ----

int cmd_lvalue(const RunConfig &cfg, std::ostream &out)
{
    if (!cfg.n || !cfg.k) throw InvalidInput("lvalue needs --n and --k");
    const int n = *cfg.n, k = *cfg.k;
    const IdentityId id = parse_identity(cfg.identity);
    const Side side = cfg.side == "lhs" ? Side::lhs : Side::rhs;
    const int bound = cfg.primes_up_to;
    const int precision = std::max(cfg.precision, bound);

    const LocalFactor factor = build_side(id, side, n, k);
    std::optional<EigenformData> f, g;
    if (bound >= 2) {
        f = load_form(2 * k, cfg.eigenvalues_file, precision);
        if (depends_on_beta(factor)) g = load_form(k + n, cfg.g_eigenvalues_file, precision);
    }
    const EigenformData empty;
    const std::complex<double> s(cfg.s_real, cfg.s_imag);
    const LValueResult res = truncated_lvalue(id, side, n, k, s, bound, f ? *f : empty, g ? &*g : nullptr);

    const json data = {{"identity", to_string(id)},
                       {"side", cfg.side},
                       {"n", n},
                       {"k", k},
                       {"s", {s.real(), s.imag()}},
                       {"prime_bound", bound},
                       {"value", {res.value.real(), res.value.imag()}},
                       {"log_value", {res.log_value.real(), res.log_value.imag()}},
                       {"last_prime", res.last_prime},
                       {"last_increment", res.last_increment},
                       {"tail_bound", res.tail_bound},
                       {"note", "non-rigorous approximation"}};
    emit(data, cfg.format, out);
    return exit_success;
}

// ---- verify ----

struct Job {
    std::string suite;
    int n;
    int k;
};

std::vector<int> restrict_to(const std::optional<int> &chosen, std::vector<int> grid)
{
    if (chosen) return {*chosen};
    return grid;
}

VerificationReport run_symbolic(const Job &job, bool corrupt)
{
    VerificationReport r;
    if (job.suite == "main") {
        if (!corrupt) return verify_main_theorem(job.n, job.k);
        const BetaTable base(job.n - 1);
        const int r0 = base.max_sum(1);
        MainTheoremInputs inputs{miyawaki_satake(job.n, job.k),
                                 main_theorem_recipe(job.n, job.k, base.with_beta_delta(r0, 1, 1))};
        r = verify_main_theorem(job.n, job.k, inputs);
        r.detail = "beta(" + std::to_string(r0) + ",1," + std::to_string(job.n - 1) + ") corrupted by +1";
    } else if (job.suite == "ikeda-spinor") {
        if (!corrupt) return verify_ikeda_spinor(job.n, job.k);
        const BetaTable base(job.n);
        const int r0 = base.max_sum(1);
        r = verify_ikeda_spinor(job.n, job.k, base.with_beta_delta(r0, 1, 1));
        r.detail = "beta(" + std::to_string(r0) + ",1," + std::to_string(job.n) + ") corrupted by +1";
    } else if (job.suite == "ikeda-standard") {
        r = verify_ikeda_standard(job.n, job.k);
    } else if (job.suite == "miyawaki-standard") {
        r = verify_miyawaki_standard(job.n, job.k);
    } else if (job.suite == "c1") {
        r = verify_c1_frobenius(job.n, job.k);
    } else if (job.suite == "examples") {
        r = verify_example(job.n, job.k);
    } else {
        if (!corrupt) return verify_deg7_epsilons();
        r = verify_deg7_epsilons(BetaTable(3).with_beta_delta(0, 2, 1));
        r.detail = "beta(0,2,3) corrupted by +1";
    }
    return r;
}

std::vector<Job> symbolic_jobs(const RunConfig &cfg, const std::vector<std::string> &suites)
{
    std::vector<Job> jobs;
    for (const auto &suite : suites) {
        std::vector<int> ns, ks;
        if (suite == "main") {
            ns = {2, 3, 4, 5, 6};
            ks = {4, 10, 16};
        } else if (suite == "ikeda-spinor") {
            ns = {1, 2, 3, 4};
            ks = {4, 10};
        } else if (suite == "ikeda-standard") {
            ns = {1, 2, 3, 4, 5, 6};
            ks = {10};
        } else if (suite == "miyawaki-standard" || suite == "c1") {
            ns = {2, 3, 4, 5, 6};
            ks = {10};
        } else if (suite == "examples") {
            ns = {2, 3, 4};
            ks = {10};
        } else {
            jobs.push_back({suite, 3, 0});
            continue;
        }
        // A fixed n without k picks one weight rather than the whole k grid.
        if (cfg.n && !cfg.k && ks.size() > 1) ks = {10};
        for (int n : restrict_to(cfg.n, ns)) {
            for (int k : restrict_to(cfg.k, ks)) jobs.push_back({suite, n, k});
        }
    }
    return jobs;
}

std::vector<VerificationReport> numeric_reports(const RunConfig &cfg, const std::vector<std::string> &suites)
{
    const auto ps = selected_primes(cfg, 199);
    const int precision = std::max(cfg.precision, ps.empty() ? 0 : ps.back());
    std::vector<VerificationReport> out;
    for (const auto &suite : suites) {
        if (suite == "main") {
            const int n = cfg.n.value_or(2), k = cfg.k.value_or(10);
            const EigenformData f = load_form(2 * k, cfg.eigenvalues_file, precision);
            const EigenformData g = load_form(k + n, cfg.g_eigenvalues_file, precision);
            for (int p : ps) {
                out.push_back(verify_main_theorem_numeric(n, k, p, hecke_eigenvalue(f, p), hecke_eigenvalue(g, p)));
            }
        } else if (suite == "ikeda-standard") {
            const int k = cfg.k.value_or(10);
            const EigenformData f = load_form(2 * k, cfg.eigenvalues_file, precision);
            for (int n : restrict_to(cfg.n, {1, 2, 3, 4, 5, 6})) {
                for (int p : ps) out.push_back(verify_ikeda_standard_numeric(n, k, p, hecke_eigenvalue(f, p)));
            }
        } else {
            throw InvalidInput("suite '" + suite + "' has no numeric mode");
        }
    }
    return out;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out)
{
    std::vector<std::string> suites = cfg.suites;
    const bool numeric = cfg.mode == "numeric" && !cfg.symbolic;
    if (cfg.all || suites.empty()) {
        suites = numeric ? std::vector<std::string>{"main", "ikeda-standard"} : suite_names;
    }
    for (const auto &s : suites) {
        if (std::find(suite_names.begin(), suite_names.end(), s) == suite_names.end()) {
            throw InvalidInput("unknown suite '" + s + "'");
        }
    }

    std::vector<VerificationReport> reports;
    if (numeric) {
        reports = numeric_reports(cfg, suites);
    } else {
        for (const auto &job : symbolic_jobs(cfg, suites)) reports.push_back(run_symbolic(job, cfg.corrupt_beta));
    }

    const bool with_witness = cfg.witness || cfg.corrupt_beta;
    json data = json::array();
    bool all_pass = true;
    for (const auto &r : reports) {
        data.push_back(to_json(r, with_witness));
        all_pass = all_pass && r.pass;
    }
    emit(data, cfg.format, out);
    return all_pass ? exit_success : exit_verification_failure;
}

void add_shared(CLI::App *sub, RunConfig &cfg)
{
    sub->add_option("--n", cfg.n, "Genus parameter n")->envname("LIFTSPIN_N");
    sub->add_option("--k", cfg.k, "Weight parameter k")->envname("LIFTSPIN_K");
    sub->add_option("--mode", cfg.mode, "symbolic or numeric")
        ->envname("LIFTSPIN_MODE")
        ->check(CLI::IsMember({"symbolic", "numeric"}));
    sub->add_option("--prime", cfg.primes, "Prime(s) to use")->envname("LIFTSPIN_PRIME");
    sub->add_option("--primes-up-to", cfg.primes_up_to, "Use every prime up to this bound")
        ->envname("LIFTSPIN_PRIMES_UP_TO")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--precision", cfg.precision, "q-expansion precision")
        ->envname("LIFTSPIN_PRECISION")
        ->check(CLI::PositiveNumber);
    sub->add_option("--eigenvalues-file", cfg.eigenvalues_file, "Eigenvalue table for f (weight 2k)")
        ->envname("LIFTSPIN_EIGENVALUES_FILE");
    sub->add_option("--g-eigenvalues-file", cfg.g_eigenvalues_file, "Eigenvalue table for g (weight k+n)")
        ->envname("LIFTSPIN_G_EIGENVALUES_FILE");
    sub->add_option("--format", cfg.format, "json or text")
        ->envname("LIFTSPIN_FORMAT")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", cfg.output, "Write to this file instead of stdout")->envname("LIFTSPIN_OUTPUT");
}

void add_side_identity(CLI::App *sub, RunConfig &cfg)
{
    sub->add_option("side", cfg.side, "lhs or rhs")->required()->check(CLI::IsMember({"lhs", "rhs"}));
    sub->add_option("identity", cfg.identity, "Identity id, e.g. main_theorem")->required();
}

int map_error(const Error &e, std::ostream &err)
{
    err << "error: " << e.what() << '\n';
    return e.error_class() == ErrorClass::usage ? exit_usage : exit_unsupported;
}

} // namespace

double convergence_abscissa(const LocalFactor &factor)
{
    return 1.0 + largest_q_exponent(factor) / 2.0;
}

LValueResult truncated_lvalue(IdentityId id, Side side, int n, int k, std::complex<double> s, int prime_bound,
                              const EigenformData &f, const EigenformData *g)
{
    const LocalFactor factor = build_side(id, side, n, k);
    const double abscissa = convergence_abscissa(factor);
    if (!(s.real() > abscissa)) {
        std::ostringstream msg;
        msg << "Re(s) = " << s.real() << " must exceed " << abscissa;
        throw OutOfConvergenceRegion(msg.str());
    }
    if (depends_on_beta(factor) && g == nullptr && prime_bound >= 2) {
        throw InvalidInput("this side needs eigenvalues of g");
    }

    LValueResult res;
    for (int p : primes_up_to(prime_bound)) {
        const auto local = instantiate(factor, alpha_at(f, k, p), beta_at(g, k, n, p), p);
        const std::complex<double> t = std::exp(-s * std::log(static_cast<double>(p)));
        const std::complex<double> inc = -local.log_eval(t);
        res.log_value += inc;
        res.last_prime = p;
        res.last_increment = std::abs(inc);
    }
    res.value = std::exp(res.log_value);

    // sum_{p > B} sum |m| |log(1 - r p^{-s})| with |r| <= p^{w}, c = Re(s) - w > 1:
    // -log(1 - x) <= x / (1 - 2^{-c}) and sum_{m > B} m^{-c} <= B^{1-c} / (c - 1).
    std::int64_t total = 0;
    for (const auto &[root, m] : factor.roots()) total += m < 0 ? -m : m;
    const double c = s.real() - (abscissa - 1.0);
    const double b = std::max(1, prime_bound);
    res.tail_bound = static_cast<double>(total) / (1.0 - std::pow(2.0, -c)) * std::pow(b, 1.0 - c) / (c - 1.0);
    return res;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Euler factors of Ikeda and Miyawaki-Ikeda lifts, and checks of their factorizations", "liftspin"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto *eig = app.add_subcommand("eigenvalues", "Hecke eigenvalues of a level-one eigenform");
    add_shared(eig, cfg);
    eig->add_option("--weight", cfg.weight, "Weight of the form")->required();

    auto *euler = app.add_subcommand("euler", "Emit one side of an identity as a local factor");
    add_shared(euler, cfg);
    add_side_identity(euler, cfg);
    euler->add_flag("--factored", cfg.factored, "Emit the root multiset instead of coefficients");

    auto *beta = app.add_subcommand("beta-table", "Dump the alpha/beta subset-sum table");
    add_shared(beta, cfg);

    auto *lval = app.add_subcommand("lvalue", "Truncated Euler product at s (non-rigorous)");
    add_shared(lval, cfg);
    add_side_identity(lval, cfg);
    lval->add_option("--s", cfg.s_real, "Real part of s")->required();
    lval->add_option("--s-imag", cfg.s_imag, "Imaginary part of s");

    auto *ver = app.add_subcommand("verify", "Run verification suites");
    add_shared(ver, cfg);
    ver->add_option("suites", cfg.suites, "main, ikeda-spinor, ikeda-standard, miyawaki-standard, c1, examples, epsilons");
    ver->add_flag("--all", cfg.all, "Run every suite");
    ver->add_flag("--symbolic", cfg.symbolic, "Force symbolic mode");
    ver->add_flag("--witness", cfg.witness, "Include the first differing coefficient on failure");
    ver->add_flag("--corrupt-beta", cfg.corrupt_beta, "Self-test: perturb one beta entry; failures are expected");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_success : exit_usage;
    }

    std::ofstream file;
    std::ostream *sink = &out;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            err << "error: cannot open " << cfg.output << '\n';
            return exit_usage;
        }
        sink = &file;
    }

    try {
        if (eig->parsed()) return cmd_eigenvalues(cfg, *sink);
        if (euler->parsed()) return cmd_euler(cfg, *sink);
        if (beta->parsed()) return cmd_beta_table(cfg, *sink);
        if (lval->parsed()) return cmd_lvalue(cfg, *sink);
        return cmd_verify(cfg, *sink);
    } catch (const Error &e) {
        return map_error(e, err);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace liftspin
