#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string_view>

#include "qwsearch/srg.hpp"

namespace qws {

/// Case1 applies when the degree grows like N, Case2 when it grows slower;
/// the distinction only changes which critical coupling makes the
/// leading-order Hamiltonian degenerate.
enum class CaseTag { Case1, Case2 };

/// Perturbation-theory outputs for one parameter tuple.
///
/// gamma_c1 = 1/k and gamma_c2 = 1/k + 1/((N-1) mu) are the two critical
/// couplings. c_exact = (1 + (k-lambda+mu)^2/k)^(-1/2) normalizes the
/// degenerate eigenvector; c_approx = k^(3/2)/(mu N) is its large-N form.
/// The predicted success-probability curve is amplitude * sin^2(omega t):
/// Case1 degenerates to sin^2(t/sqrt(N)); Case2 uses the exact constant in
/// both the prefactor and the frequency.
struct PredictionReport {
    SrgParams params;
    CaseTag case_tag = CaseTag::Case2;
    double gamma_c1 = 0.0;
    double gamma_c2 = 0.0;
    std::int64_t k_lm = 0;  // k - lambda + mu
    double c_exact = 0.0;
    double c_approx = 0.0;
    double amplitude = 0.0;
    double omega = 0.0;
    double t_star_curve = 0.0;       // pi / (2 omega)
    double t_star_asymptotic = 0.0;  // pi sqrt(N) / 2
    double predicted_peak_probability = 0.0;

    double curve(double t) const;
};

double critical_gamma(const SrgParams& p, CaseTag tag);

/// The second degenerate eigenvector of the Case-2 leading-order
/// Hamiltonian, c_exact * ((k-lambda+mu)/sqrt(k), 0, 1) in the WRE3 frame.
/// Construction checks the integer identity
/// k - lambda + mu = (N-k-1) mu / k + mu + 1 exactly.
struct Case2Vector {
    std::int64_t k_lm = 0;
    double c_exact = 0.0;
    std::array<double, 3> c_wre3{};
};
Case2Vector case2_vector_c(const SrgParams& p);

PredictionReport predict(const SrgParams& p, CaseTag tag);

/// Case-2 leading-order Hamiltonian in the WRE3 frame with the
/// off-block entries zeroed:
///   -gamma [[1/gamma, 0, sqrt(k)], [0, k, 0], [sqrt(k), 0, lambda-mu]].
/// At gamma = gamma_c2 both |r> and the Case2Vector are eigenvectors with
/// eigenvalue -gamma k.
std::array<double, 9> case2_leading_hamiltonian(const SrgParams& p, double gamma);

/// Complete-graph baseline at the critical coupling 1/N: exact eigenvalues
/// -1 -+ 1/sqrt(N) of the projected two-dimensional Hamiltonian
/// -|s><s| - |w><w|, alongside their numerical counterparts, and the
/// rotation time t* = pi / (e_high - e_low) = pi sqrt(N) / 2.
struct CompleteGraphReference {
    std::int64_t n = 0;
    double gamma_c = 0.0;
    double e_low = 0.0;   // -1 - 1/sqrt(N)
    double e_high = 0.0;  // -1 + 1/sqrt(N)
    double e_low_numeric = 0.0;
    double e_high_numeric = 0.0;
    double t_star = 0.0;
};
CompleteGraphReference complete_graph_reference(std::int64_t n);

/// Flat JSON record with documented keys; values keep full precision.
void write_prediction_json(const PredictionReport& r, std::ostream& os,
                           std::string_view family = {});
void write_prediction_json(const CompleteGraphReference& r, std::ostream& os,
                           std::string_view family = {});

}  // namespace qws
