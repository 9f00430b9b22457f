#include <liftspin/serialize.hpp>

#include <liftspin/errors.hpp>

namespace liftspin
{

namespace
{

json complex_json(std::complex<double> z)
{
    return json::array({z.real(), z.imag()});
}

} // namespace

json to_json(const LaurentPoly &x)
{
    json terms = json::array();
    for (const auto &[m, c] : x.terms()) {
        terms.push_back({{"e", {m.a(), m.b(), m.q(), m.t()}}, {"c", c.get_str()}});
    }
    return {{"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
        throw InvalidInput("LaurentPoly JSON needs a \"terms\" array");
    }
    std::vector<LaurentPoly::Term> terms;
    for (const auto &t : j.at("terms")) {
        const auto &e = t.at("e");
        if (!e.is_array() || e.size() != 4) throw InvalidInput("monomial exponent must have four entries");
        mpz_class c;
        if (c.set_str(t.at("c").get<std::string>(), 10) != 0) throw InvalidInput("bad integer coefficient");
        terms.emplace_back(Monomial(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>()), c);
    }
    return LaurentPoly::from_terms(std::move(terms));
}

json to_json(const SymbolicSatake &params)
{
    json mus = json::array();
    for (const auto &m : params.mus) mus.push_back(to_json(LaurentPoly(m)));
    return {{"genus", params.genus()},
            {"mode", "symbolic"},
            {"mu0", to_json(LaurentPoly(params.mu0))},
            {"mus", std::move(mus)},
            {"similitude_exponent", params.similitude_exponent}};
}

json to_json(const NumericSatake &params)
{
    json mus = json::array();
    for (const auto &m : params.mus) mus.push_back(complex_json(m));
    return {{"genus", params.genus()},
            {"mode", "numeric"},
            {"mu0", complex_json(params.mu0)},
            {"mus", std::move(mus)},
            {"similitude_exponent", params.similitude_exponent}};
}

json to_json(const LocalFactor &factor)
{
    json coeffs = json::array();
    for (const auto &c : factor.expand()) coeffs.push_back(to_json(c));
    return {{"label", factor.label()}, {"degree", factor.degree()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const NumericLocalFactor &factor, double normalization)
{
    json coeffs = json::array();
    for (const auto &c : factor.expand(normalization)) coeffs.push_back(complex_json(c));
    return {{"label", factor.label()},
            {"degree", factor.degree()},
            {"prime", factor.prime()},
            {"normalization", normalization},
            {"coeffs", std::move(coeffs)}};
}

json to_json(const VerificationReport &report, bool include_witness)
{
    json j = {{"identity", to_string(report.identity)},
              {"n", report.n},
              {"k", report.k},
              {"mode", report.mode == Mode::symbolic ? "symbolic" : "numeric"}};
    if (report.prime) j["prime"] = *report.prime;
    j["verdict"] = report.pass ? "pass" : "fail";
    j["lhs_degree"] = report.lhs_degree;
    j["rhs_degree"] = report.rhs_degree;
    j["expanded_check"] = report.expanded_check;
    if (report.mode == Mode::numeric) j["max_error"] = report.max_error;
    if (!report.detail.empty()) j["detail"] = report.detail;
    if (include_witness && report.witness) {
        const Witness &w = *report.witness;
        json wj = {{"t_degree", w.t_degree}};
        if (w.numeric_lhs) {
            wj["lhs"] = complex_json(*w.numeric_lhs);
            wj["rhs"] = complex_json(*w.numeric_rhs);
        } else {
            wj["lhs"] = to_json(w.lhs);
            wj["rhs"] = to_json(w.rhs);
        }
        j["witness"] = std::move(wj);
    }
    return j;
}

json beta_table_json(const BetaTable &table)
{
    json entries = json::array();
    for (int m = 0; m <= table.n(); ++m) {
        const int bound = table.max_sum(m);
        for (int r = -bound; r <= bound; r += 2) {
            entries.push_back({{"m", m}, {"r", r}, {"alpha", table.alpha(r, m)}, {"beta", table.beta(r, m)}});
        }
    }
    return {{"n", table.n()}, {"entries", std::move(entries)}};
}

} // namespace liftspin
