#include "qwsearch/theory.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace qws {

double PredictionReport::curve(double t) const {
    const double s = std::sin(omega * t);
    return amplitude * s * s;
}

double critical_gamma(const SrgParams& p, CaseTag tag) {
    validate_srg_params(p);
    const double k = static_cast<double>(p.k);
    if (tag == CaseTag::Case1) return 1.0 / k;
    return 1.0 / k + 1.0 / (static_cast<double>(p.n - 1) * static_cast<double>(p.mu));
}

Case2Vector case2_vector_c(const SrgParams& p) {
    validate_srg_params(p);
    Case2Vector v;
    v.k_lm = p.k - p.lambda + p.mu;
    // integer identity implied by the counting identity: k divides (N-k-1) mu
    if (((p.n - p.k - 1) * p.mu) % p.k != 0 ||
        v.k_lm != ((p.n - p.k - 1) * p.mu) / p.k + p.mu + 1)
        throw std::logic_error("case2_vector_c: integer identity violated for feasible params");
    const double k = static_cast<double>(p.k);
    const double klm = static_cast<double>(v.k_lm);
    v.c_exact = 1.0 / std::sqrt(1.0 + klm * klm / k);
    v.c_wre3 = {v.c_exact * klm / std::sqrt(k), 0.0, v.c_exact};
    return v;
}

PredictionReport predict(const SrgParams& p, CaseTag tag) {
    validate_srg_params(p);
    PredictionReport r;
    r.params = p;
    r.case_tag = tag;
    r.gamma_c1 = critical_gamma(p, CaseTag::Case1);
    r.gamma_c2 = critical_gamma(p, CaseTag::Case2);
    const Case2Vector c = case2_vector_c(p);
    r.k_lm = c.k_lm;
    r.c_exact = c.c_exact;
    const double n = static_cast<double>(p.n);
    const double k = static_cast<double>(p.k);
    const double mu = static_cast<double>(p.mu);
    const double k32 = k * std::sqrt(k);
    r.c_approx = k32 / (mu * n);
    const double prefactor = r.c_exact * mu * n / k32;  // = c_exact / c_approx
    r.predicted_peak_probability = std::min(1.0, prefactor * prefactor);
    if (tag == CaseTag::Case1) {
        r.amplitude = 1.0;
        r.omega = 1.0 / std::sqrt(n);
    } else {
        r.amplitude = r.predicted_peak_probability;
        r.omega = r.c_exact * mu * std::sqrt(n) / k32;
    }
    r.t_star_curve = std::numbers::pi / (2.0 * r.omega);
    r.t_star_asymptotic = std::numbers::pi * std::sqrt(n) / 2.0;
    return r;
}

std::array<double, 9> case2_leading_hamiltonian(const SrgParams& p, double gamma) {
    validate_srg_params(p);
    if (!(gamma > 0.0))
        throw std::invalid_argument("case2_leading_hamiltonian: gamma must be positive");
    const double k = static_cast<double>(p.k);
    const double sk = std::sqrt(k);
    const double lm = static_cast<double>(p.lambda - p.mu);
    return {-1.0,        0.0,        -gamma * sk,
            0.0,         -gamma * k, 0.0,
            -gamma * sk, 0.0,        -gamma * lm};
}

CompleteGraphReference complete_graph_reference(std::int64_t n) {
    if (n < 2)
        throw std::invalid_argument("complete_graph_reference: need at least 2 vertices");
    CompleteGraphReference r;
    r.n = n;
    const double nd = static_cast<double>(n);
    const double rt = std::sqrt(nd);
    r.gamma_c = 1.0 / nd;
    r.e_low = -1.0 - 1.0 / rt;
    r.e_high = -1.0 + 1.0 / rt;

    // -|s><s| - |w><w| in the {|w>, |r>} frame
    const double a = -1.0 / nd - 1.0;
    const double b = -std::sqrt(nd - 1.0) / nd;
    const double d = -(nd - 1.0) / nd;
    const double mid = 0.5 * (a + d);
    const double rad = std::sqrt(0.25 * (a - d) * (a - d) + b * b);
    r.e_low_numeric = mid - rad;
    r.e_high_numeric = mid + rad;

    r.t_star = std::numbers::pi / (r.e_high - r.e_low);  // = pi sqrt(N) / 2
    return r;
}

namespace {

const char* case_name(CaseTag tag) { return tag == CaseTag::Case1 ? "1" : "2"; }

}  // namespace

void write_prediction_json(const PredictionReport& r, std::ostream& os, std::string_view family) {
    nlohmann::ordered_json j;
    if (!family.empty()) j["family"] = std::string(family);
    j["N"] = r.params.n;
    j["k"] = r.params.k;
    j["lambda"] = r.params.lambda;
    j["mu"] = r.params.mu;
    j["case"] = case_name(r.case_tag);
    j["gamma_c1"] = r.gamma_c1;
    j["gamma_c2"] = r.gamma_c2;
    j["k_minus_lambda_plus_mu"] = r.k_lm;
    j["c_exact"] = r.c_exact;
    j["c_approx"] = r.c_approx;
    j["curve_amplitude"] = r.amplitude;
    j["curve_omega"] = r.omega;
    j["t_star_curve"] = r.t_star_curve;
    j["t_star_asymptotic"] = r.t_star_asymptotic;
    j["predicted_peak_probability"] = r.predicted_peak_probability;
    os << j.dump(2) << '\n';
}

void write_prediction_json(const CompleteGraphReference& r, std::ostream& os,
                           std::string_view family) {
    nlohmann::ordered_json j;
    if (!family.empty()) j["family"] = std::string(family);
    j["N"] = r.n;
    j["gamma_c"] = r.gamma_c;
    j["e_low"] = r.e_low;
    j["e_high"] = r.e_high;
    j["e_low_numeric"] = r.e_low_numeric;
    j["e_high_numeric"] = r.e_high_numeric;
    j["t_star"] = r.t_star;
    j["curve_amplitude"] = 1.0;
    j["curve_omega"] = 1.0 / std::sqrt(static_cast<double>(r.n));
    j["predicted_peak_probability"] = 1.0;
    os << j.dump(2) << '\n';
}

}  // namespace qws
