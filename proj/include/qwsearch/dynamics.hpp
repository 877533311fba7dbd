#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qwsearch/graph.hpp"
#include "qwsearch/linalg.hpp"
#include "qwsearch/srg.hpp"

namespace qws {

using Complex = std::complex<double>;

/// FullVertex: amplitudes over all N vertices. ReducedWAB: the invariant
/// 3-dimensional subspace {|w>, |a>, |b>} of marked vertex, uniform
/// superposition of its neighbors, uniform superposition of the rest.
/// ReducedWRE3: the rotated frame {|w>, |r>, |e3>} where |r> is the uniform
/// superposition of all non-marked vertices.
enum class Basis { FullVertex, ReducedWAB, ReducedWRE3 };

/// AdjacencyOnly drops the degree matrix; for a regular graph that is an
/// energy shift with no observable effect, and it is the convention used by
/// the reduced 3x3 forms below.
enum class LaplacianMode { AdjacencyOnly, FullLaplacian };

struct QuantumState {
    Basis basis = Basis::FullVertex;
    std::vector<Complex> amp;

    double norm() const;
};

/// H = -gamma L - |w><w| with L the graph Laplacian (or -gamma A - |w><w|
/// in AdjacencyOnly mode).
struct HamiltonianSpec {
    const Graph* graph = nullptr;
    int marked = 0;
    double gamma = 0.0;
    LaplacianMode mode = LaplacianMode::AdjacencyOnly;
};

/// Equal superposition of all basis states, expressed in the given basis.
QuantumState initial_state_full(int n);
QuantumState initial_state_reduced(Basis basis, const SrgParams& p);

/// out = H * in over the full vertex space, by neighbor-list traversal.
void apply_hamiltonian(const HamiltonianSpec& spec, std::span<const Complex> in,
                       std::span<Complex> out);

struct ReducedHamiltonian3 {
    Basis basis = Basis::ReducedWAB;
    std::array<double, 9> h{};  // row-major, symmetric
};

/// The search Hamiltonian restricted to {|w>, |a>, |b>}:
///   -gamma [[1/gamma, sqrt(k), 0],
///           [sqrt(k), lambda, sqrt(mu) sqrt(k-lambda-1)],
///           [0, sqrt(mu) sqrt(k-lambda-1), k-mu]].
ReducedHamiltonian3 reduced_hamiltonian_wab(const SrgParams& p, double gamma);

/// Change-of-basis matrix T whose columns are |w>, |r>, |e3> written in the
/// {|w>, |a>, |b>} basis. Orthogonal.
std::array<double, 9> basis_change_wab_to_wre3(const SrgParams& p);

/// T^t H T of a WAB-basis reduced Hamiltonian.
ReducedHamiltonian3 transform_wre3(const ReducedHamiltonian3& wab, const SrgParams& p);

/// The same matrix assembled entrywise from its closed form, used to
/// cross-check the conjugation path.
ReducedHamiltonian3 reduced_hamiltonian_wre3(const SrgParams& p, double gamma);

/// |w>, |a>, |b> of the marked vertex lifted to full vertex-space vectors.
/// For a complete graph the |b> class is empty and its vector is zero.
std::array<std::vector<double>, 3> lifted_wab_basis(const Graph& g, int marked);

/// <e_i| H |e_j> over the lifted basis; for an exact strongly regular graph
/// this reproduces reduced_hamiltonian_wab.
std::array<double, 9> projected_hamiltonian_wab(const HamiltonianSpec& spec);

/// Largest norm of the component of H|e_j> falling outside
/// span{|w>, |a>, |b>}; zero (to rounding) iff the subspace is invariant.
double subspace_closure_residual(const HamiltonianSpec& spec);

struct TraceMeta {
    std::string family;
    std::string engine;
    std::string laplacian = "adjacency";
    std::optional<SrgParams> params;
    int n = 0;
    int marked = -1;  // negative: not applicable (reduced engines)
    double gamma = 0.0;
    double t_max = 0.0;
    double dt_sample = 0.0;
    double dt_internal = 0.0;  // zero for exact (eigenbasis) evolution
    double max_norm_drift = 0.0;
};

/// Time series of the marked-vertex, neighbor-class, and far-class
/// probabilities on a uniform grid. The three track the full probability:
/// their sum is 1 up to tolerance whenever the input graph is an exact SRG.
struct EvolutionTrace {
    std::vector<double> t;
    std::vector<double> p_w;
    std::vector<double> p_a;
    std::vector<double> p_b;
    TraceMeta meta;

    std::size_t size() const { return t.size(); }
};

struct EvolveOptions {
    /// Multiplies the internal RK4 substep count (2 halves the step).
    int step_refinement = 1;
};

/// Integrates i d/dt psi = H psi with fixed-step classic RK4. The internal
/// step h satisfies h * (2 gamma k_max + 1) <= 0.025; the norm is checked at
/// every sample and drift beyond 1e-6 aborts with std::runtime_error.
EvolutionTrace evolve_full(const HamiltonianSpec& spec, const QuantumState& s0, double t_max,
                           double dt_sample, const EvolveOptions& opts = {});

/// Exact evolution in the invariant 3-dimensional subspace via symmetric
/// eigendecomposition of the reduced Hamiltonian. The state basis selects
/// the WAB or WRE3 frame; reported probabilities are identical.
EvolutionTrace evolve_reduced(const SrgParams& p, double gamma, const QuantumState& s0,
                              double t_max, double dt_sample);

/// Complete graph: the invariant subspace is 2-dimensional ({|w>, |a>},
/// every non-marked vertex is a neighbor) and p_b is identically zero.
EvolutionTrace evolve_reduced_complete(std::int64_t n, double gamma, double t_max,
                                       double dt_sample);

/// Largest pointwise difference between two traces on the same grid, over
/// all three probability channels.
double max_trace_deviation(const EvolutionTrace& x, const EvolutionTrace& y);

struct Peak {
    double t = 0.0;
    double p = 0.0;
    bool at_boundary = false;
};

/// Sample of maximal p_w (earliest on ties), refined by a quadratic fit
/// through the three surrounding samples. A maximum at either end of the
/// trace is returned unrefined with at_boundary set.
Peak find_peak(const EvolutionTrace& trace);

/// Shortest-width formatting with 15 significant digits.
std::string format_g15(double v);

/// CSV export: "# key=value" metadata comment lines, a "t,p_w,p_a,p_b"
/// header, then one row per sample with 15 significant digits.
void write_trace_csv(const EvolutionTrace& trace, std::ostream& os);

/// JSON export mirroring the CSV columns as arrays plus a metadata object.
void write_trace_json(const EvolutionTrace& trace, std::ostream& os);

}  // namespace qws
