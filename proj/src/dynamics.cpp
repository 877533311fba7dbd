#include "qwsearch/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace qws {

namespace {

// Internal RK4 step budget: h * (2 gamma k_max + 1) <= this. Keeps the
// accumulated phase error well below the 1e-8 step-halving tolerance on
// every supported run length.
constexpr double kStepBudget = 0.025;
constexpr double kFullDriftLimit = 1e-6;
constexpr double kStateNormTol = 1e-9;

void require_normalized(const QuantumState& s, const char* who) {
    if (std::abs(s.norm() - 1.0) > kStateNormTol)
        throw std::invalid_argument(std::string(who) + ": initial state is not normalized");
}

int sample_count(double t_max, double dt_sample, const char* who) {
    if (!(t_max > 0.0)) throw std::invalid_argument(std::string(who) + ": t_max must be positive");
    if (!(dt_sample > 0.0) || dt_sample > t_max * (1.0 + 1e-12))
        throw std::invalid_argument(std::string(who) + ": dt_sample must lie in (0, t_max]");
    const int n = static_cast<int>(std::floor(t_max / dt_sample + 1e-9));
    return n < 1 ? 1 : n;
}

std::array<double, 9> mat3_mul(const std::array<double, 9>& a, const std::array<double, 9>& b) {
    std::array<double, 9> c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) c[3 * i + j] += a[3 * i + l] * b[3 * l + j];
    return c;
}

std::array<double, 9> mat3_transpose(const std::array<double, 9>& a) {
    return {a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8]};
}

}  // namespace

double QuantumState::norm() const {
    double s = 0.0;
    for (const Complex& c : amp) s += std::norm(c);
    return std::sqrt(s);
}

QuantumState initial_state_full(int n) {
    if (n < 1) throw std::invalid_argument("initial_state_full: empty vertex set");
    QuantumState s;
    s.basis = Basis::FullVertex;
    s.amp.assign(static_cast<std::size_t>(n), Complex(1.0 / std::sqrt(double(n)), 0.0));
    return s;
}

QuantumState initial_state_reduced(Basis basis, const SrgParams& p) {
    validate_srg_params(p);
    const double n = static_cast<double>(p.n);
    const double k = static_cast<double>(p.k);
    QuantumState s;
    s.basis = basis;
    switch (basis) {
        case Basis::ReducedWAB:
            s.amp = {Complex(1.0 / std::sqrt(n), 0.0), Complex(std::sqrt(k / n), 0.0),
                     Complex(std::sqrt((n - k - 1.0) / n), 0.0)};
            return s;
        case Basis::ReducedWRE3:
            s.amp = {Complex(1.0 / std::sqrt(n), 0.0), Complex(std::sqrt((n - 1.0) / n), 0.0),
                     Complex(0.0, 0.0)};
            return s;
        case Basis::FullVertex: break;
    }
    throw std::invalid_argument("initial_state_reduced: basis must be ReducedWAB or ReducedWRE3");
}

void apply_hamiltonian(const HamiltonianSpec& spec, std::span<const Complex> in,
                       std::span<Complex> out) {
    if (!spec.graph) throw std::invalid_argument("apply_hamiltonian: null graph");
    const Graph& g = *spec.graph;
    const int n = g.vertex_count();
    if (static_cast<int>(in.size()) != n || static_cast<int>(out.size()) != n)
        throw std::invalid_argument("apply_hamiltonian: state length does not match vertex count");
    if (spec.marked < 0 || spec.marked >= n)
        throw std::invalid_argument("apply_hamiltonian: marked vertex out of range");
    const double gamma = spec.gamma;
    for (int v = 0; v < n; ++v) {
        Complex acc(0.0, 0.0);
        for (std::int32_t u : g.neighbors(v)) acc += in[static_cast<std::size_t>(u)];
        Complex hv = -gamma * acc;
        if (spec.mode == LaplacianMode::FullLaplacian)
            hv += gamma * static_cast<double>(g.degree(v)) * in[static_cast<std::size_t>(v)];
        out[static_cast<std::size_t>(v)] = hv;
    }
    out[static_cast<std::size_t>(spec.marked)] -= in[static_cast<std::size_t>(spec.marked)];
}

ReducedHamiltonian3 reduced_hamiltonian_wab(const SrgParams& p, double gamma) {
    validate_srg_params(p);
    if (!(gamma > 0.0)) throw std::invalid_argument("reduced_hamiltonian_wab: gamma must be positive");
    const double k = static_cast<double>(p.k);
    const double lambda = static_cast<double>(p.lambda);
    const double mu = static_cast<double>(p.mu);
    const double cross = std::sqrt(mu) * std::sqrt(k - lambda - 1.0);
    ReducedHamiltonian3 h;
    h.basis = Basis::ReducedWAB;
    h.h = {-1.0,
           -gamma * std::sqrt(k),
           0.0,
           -gamma * std::sqrt(k),
           -gamma * lambda,
           -gamma * cross,
           0.0,
           -gamma * cross,
           -gamma * (k - mu)};
    return h;
}

std::array<double, 9> basis_change_wab_to_wre3(const SrgParams& p) {
    validate_srg_params(p);
    const double n = static_cast<double>(p.n);
    const double k = static_cast<double>(p.k);
    const double rk = std::sqrt(k / (n - 1.0));
    const double rb = std::sqrt((n - k - 1.0) / (n - 1.0));
    return {1.0, 0.0, 0.0, 0.0, rk, rb, 0.0, rb, -rk};
}

ReducedHamiltonian3 transform_wre3(const ReducedHamiltonian3& wab, const SrgParams& p) {
    if (wab.basis != Basis::ReducedWAB)
        throw std::invalid_argument("transform_wre3: input must be in the WAB basis");
    const std::array<double, 9> t = basis_change_wab_to_wre3(p);
    ReducedHamiltonian3 out;
    out.basis = Basis::ReducedWRE3;
    out.h = mat3_mul(mat3_transpose(t), mat3_mul(wab.h, t));
    // symmetrize away conjugation round-off
    out.h[3] = out.h[1] = 0.5 * (out.h[1] + out.h[3]);
    out.h[6] = out.h[2] = 0.5 * (out.h[2] + out.h[6]);
    out.h[7] = out.h[5] = 0.5 * (out.h[5] + out.h[7]);
    return out;
}

ReducedHamiltonian3 reduced_hamiltonian_wre3(const SrgParams& p, double gamma) {
    validate_srg_params(p);
    if (!(gamma > 0.0)) throw std::invalid_argument("reduced_hamiltonian_wre3: gamma must be positive");
    const double n = static_cast<double>(p.n);
    const double k = static_cast<double>(p.k);
    const double lambda = static_cast<double>(p.lambda);
    const double mu = static_cast<double>(p.mu);
    const double snm1 = std::sqrt(n - 1.0);
    const double skb = std::sqrt(k) * std::sqrt(n - k - 1.0);
    ReducedHamiltonian3 h;
    h.basis = Basis::ReducedWRE3;
    h.h = {-1.0,
           -gamma * k / snm1,
           -gamma * skb / snm1,
           -gamma * k / snm1,
           -gamma * k * (n - 2.0) / (n - 1.0),
           gamma * skb / (n - 1.0),
           -gamma * skb / snm1,
           gamma * skb / (n - 1.0),
           -gamma * ((lambda - mu) * (n - 1.0) + k) / (n - 1.0)};
    return h;
}

std::array<std::vector<double>, 3> lifted_wab_basis(const Graph& g, int marked) {
    const int n = g.vertex_count();
    if (marked < 0 || marked >= n)
        throw std::invalid_argument("lifted_wab_basis: marked vertex out of range");
    const int k = g.degree(marked);
    const int far = n - k - 1;
    std::array<std::vector<double>, 3> basis;
    for (auto& v : basis) v.assign(static_cast<std::size_t>(n), 0.0);
    basis[0][static_cast<std::size_t>(marked)] = 1.0;
    const double na = 1.0 / std::sqrt(static_cast<double>(k));
    for (std::int32_t u : g.neighbors(marked)) basis[1][static_cast<std::size_t>(u)] = na;
    if (far > 0) {
        const double nb = 1.0 / std::sqrt(static_cast<double>(far));
        for (int v = 0; v < n; ++v)
            if (v != marked && !g.adjacent(marked, v)) basis[2][static_cast<std::size_t>(v)] = nb;
    }
    return basis;
}

namespace {

std::vector<double> apply_real(const HamiltonianSpec& spec, const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<Complex> in(n), out(n);
    for (std::size_t i = 0; i < n; ++i) in[i] = Complex(x[i], 0.0);
    apply_hamiltonian(spec, in, out);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = out[i].real();
    return y;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

std::array<double, 9> projected_hamiltonian_wab(const HamiltonianSpec& spec) {
    if (!spec.graph) throw std::invalid_argument("projected_hamiltonian_wab: null graph");
    const auto basis = lifted_wab_basis(*spec.graph, spec.marked);
    std::array<double, 9> h{};
    for (int j = 0; j < 3; ++j) {
        const std::vector<double> hj = apply_real(spec, basis[static_cast<std::size_t>(j)]);
        for (int i = 0; i < 3; ++i) h[static_cast<std::size_t>(3 * i + j)] = dot(basis[static_cast<std::size_t>(i)], hj);
    }
    return h;
}

double subspace_closure_residual(const HamiltonianSpec& spec) {
    if (!spec.graph) throw std::invalid_argument("subspace_closure_residual: null graph");
    const auto basis = lifted_wab_basis(*spec.graph, spec.marked);
    double worst = 0.0;
    for (int j = 0; j < 3; ++j) {
        const auto& bj = basis[static_cast<std::size_t>(j)];
        if (dot(bj, bj) == 0.0) continue;  // empty far class on complete graphs
        std::vector<double> hj = apply_real(spec, bj);
        for (int i = 0; i < 3; ++i) {
            const auto& bi = basis[static_cast<std::size_t>(i)];
            const double c = dot(bi, hj);
            for (std::size_t v = 0; v < hj.size(); ++v) hj[v] -= c * bi[v];
        }
        worst = std::max(worst, std::sqrt(dot(hj, hj)));
    }
    return worst;
}

namespace {

struct TraceAccumulator {
    EvolutionTrace trace;
    bool abort_on_drift = false;

    void push(double t, double pw, double pa, double pb, double norm) {
        trace.t.push_back(t);
        trace.p_w.push_back(pw);
        trace.p_a.push_back(pa);
        trace.p_b.push_back(pb);
        const double drift = std::abs(norm - 1.0);
        if (drift > trace.meta.max_norm_drift) trace.meta.max_norm_drift = drift;
        if (abort_on_drift && drift > kFullDriftLimit)
            throw std::runtime_error("evolve_full: integrator accuracy lost, norm drift " +
                                     format_g15(drift) + " at t=" + format_g15(t));
    }
};

}  // namespace

EvolutionTrace evolve_full(const HamiltonianSpec& spec, const QuantumState& s0, double t_max,
                           double dt_sample, const EvolveOptions& opts) {
    if (!spec.graph) throw std::invalid_argument("evolve_full: null graph");
    const Graph& g = *spec.graph;
    const int n = g.vertex_count();
    if (spec.marked < 0 || spec.marked >= n)
        throw std::invalid_argument("evolve_full: marked vertex out of range");
    if (!(spec.gamma > 0.0)) throw std::invalid_argument("evolve_full: gamma must be positive");
    if (s0.basis != Basis::FullVertex || static_cast<int>(s0.amp.size()) != n)
        throw std::invalid_argument("evolve_full: initial state must be a full-vertex state");
    require_normalized(s0, "evolve_full");
    const int n_samples = sample_count(t_max, dt_sample, "evolve_full");

    int k_max = 0;
    for (int v = 0; v < n; ++v) k_max = std::max(k_max, g.degree(v));
    const double energy_bound = 2.0 * spec.gamma * static_cast<double>(k_max) + 1.0;
    const int refine = std::max(1, opts.step_refinement);
    const int substeps =
        std::max(1, static_cast<int>(std::ceil(dt_sample * energy_bound / kStepBudget))) * refine;
    const double h = dt_sample / substeps;

    const int w = spec.marked;
    const int kw = g.degree(w);
    const int far = n - kw - 1;

    std::vector<Complex> psi = s0.amp;
    std::vector<Complex> k1(psi.size()), k2(psi.size()), k3(psi.size()), k4(psi.size()),
        tmp(psi.size());
    const auto deriv = [&](const std::vector<Complex>& y, std::vector<Complex>& out) {
        apply_hamiltonian(spec, y, out);
        for (Complex& c : out) c = Complex(c.imag(), -c.real());  // multiply by -i
    };

    TraceAccumulator acc;
    acc.abort_on_drift = true;
    acc.trace.meta.engine = "full";
    acc.trace.meta.laplacian = spec.mode == LaplacianMode::FullLaplacian ? "full" : "adjacency";
    acc.trace.meta.n = n;
    acc.trace.meta.marked = w;
    acc.trace.meta.gamma = spec.gamma;
    acc.trace.meta.t_max = t_max;
    acc.trace.meta.dt_sample = dt_sample;
    acc.trace.meta.dt_internal = h;

    const auto record = [&](double t) {
        double norm2 = 0.0;
        Complex total(0.0, 0.0);
        for (const Complex& c : psi) {
            norm2 += std::norm(c);
            total += c;
        }
        Complex sum_a(0.0, 0.0);
        for (std::int32_t u : g.neighbors(w)) sum_a += psi[static_cast<std::size_t>(u)];
        const Complex sum_b = total - psi[static_cast<std::size_t>(w)] - sum_a;
        const double pw = std::norm(psi[static_cast<std::size_t>(w)]);
        const double pa = kw > 0 ? std::norm(sum_a) / kw : 0.0;
        const double pb = far > 0 ? std::norm(sum_b) / far : 0.0;
        acc.push(t, pw, pa, pb, std::sqrt(norm2));
    };

    record(0.0);
    for (int i = 1; i <= n_samples; ++i) {
        for (int s = 0; s < substeps; ++s) {
            deriv(psi, k1);
            for (std::size_t v = 0; v < psi.size(); ++v) tmp[v] = psi[v] + (0.5 * h) * k1[v];
            deriv(tmp, k2);
            for (std::size_t v = 0; v < psi.size(); ++v) tmp[v] = psi[v] + (0.5 * h) * k2[v];
            deriv(tmp, k3);
            for (std::size_t v = 0; v < psi.size(); ++v) tmp[v] = psi[v] + h * k3[v];
            deriv(tmp, k4);
            for (std::size_t v = 0; v < psi.size(); ++v)
                psi[v] += (h / 6.0) * (k1[v] + 2.0 * (k2[v] + k3[v]) + k4[v]);
        }
        record(i * dt_sample);
    }
    return acc.trace;
}

namespace {

using ProbExtractor = std::function<void(const std::array<Complex, 3>&, double&, double&, double&)>;

EvolutionTrace evolve_eigenbasis(const std::vector<double>& hmat, int dim,
                                 const std::vector<Complex>& psi0, double t_max, double dt_sample,
                                 const ProbExtractor& extract, const char* engine) {
    const int n_samples = sample_count(t_max, dt_sample, "evolve_reduced");
    const SymEig eig = jacobi_eigensolve(hmat, dim);

    std::array<Complex, 3> coeff{};
    for (int j = 0; j < dim; ++j) {
        Complex a(0.0, 0.0);
        for (int i = 0; i < dim; ++i) a += eig.vec(i, j) * psi0[static_cast<std::size_t>(i)];
        coeff[static_cast<std::size_t>(j)] = a;
    }

    TraceAccumulator acc;
    acc.trace.meta.engine = engine;
    acc.trace.meta.t_max = t_max;
    acc.trace.meta.dt_sample = dt_sample;

    std::array<Complex, 3> psi{};
    for (int i = 0; i <= n_samples; ++i) {
        const double t = i * dt_sample;
        psi.fill(Complex(0.0, 0.0));
        for (int j = 0; j < dim; ++j) {
            const Complex phase = std::polar(1.0, -eig.values[static_cast<std::size_t>(j)] * t);
            const Complex cj = phase * coeff[static_cast<std::size_t>(j)];
            for (int r = 0; r < dim; ++r) psi[static_cast<std::size_t>(r)] += eig.vec(r, j) * cj;
        }
        double norm2 = 0.0;
        for (int r = 0; r < dim; ++r) norm2 += std::norm(psi[static_cast<std::size_t>(r)]);
        double pw = 0.0, pa = 0.0, pb = 0.0;
        extract(psi, pw, pa, pb);
        acc.push(t, pw, pa, pb, std::sqrt(norm2));
    }
    return acc.trace;
}

}  // namespace

EvolutionTrace evolve_reduced(const SrgParams& p, double gamma, const QuantumState& s0,
                              double t_max, double dt_sample) {
    validate_srg_params(p);
    if (!(gamma > 0.0)) throw std::invalid_argument("evolve_reduced: gamma must be positive");
    if (s0.amp.size() != 3)
        throw std::invalid_argument("evolve_reduced: initial state must have 3 components");
    require_normalized(s0, "evolve_reduced");
    const std::vector<Complex> psi0(s0.amp.begin(), s0.amp.end());

    EvolutionTrace trace;
    if (s0.basis == Basis::ReducedWAB) {
        const ReducedHamiltonian3 h = reduced_hamiltonian_wab(p, gamma);
        trace = evolve_eigenbasis(
            std::vector<double>(h.h.begin(), h.h.end()), 3, psi0, t_max, dt_sample,
            [](const std::array<Complex, 3>& psi, double& pw, double& pa, double& pb) {
                pw = std::norm(psi[0]);
                pa = std::norm(psi[1]);
                pb = std::norm(psi[2]);
            },
            "reduced-wab");
    } else if (s0.basis == Basis::ReducedWRE3) {
        const ReducedHamiltonian3 h = transform_wre3(reduced_hamiltonian_wab(p, gamma), p);
        const std::array<double, 9> t = basis_change_wab_to_wre3(p);
        trace = evolve_eigenbasis(
            std::vector<double>(h.h.begin(), h.h.end()), 3, psi0, t_max, dt_sample,
            [t](const std::array<Complex, 3>& psi, double& pw, double& pa, double& pb) {
                std::array<Complex, 3> wab{};
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        wab[static_cast<std::size_t>(i)] +=
                            t[static_cast<std::size_t>(3 * i + j)] * psi[static_cast<std::size_t>(j)];
                pw = std::norm(wab[0]);
                pa = std::norm(wab[1]);
                pb = std::norm(wab[2]);
            },
            "reduced-wre3");
    } else {
        throw std::invalid_argument("evolve_reduced: state basis must be ReducedWAB or ReducedWRE3");
    }
    trace.meta.params = p;
    trace.meta.n = static_cast<int>(p.n);
    trace.meta.gamma = gamma;
    return trace;
}

EvolutionTrace evolve_reduced_complete(std::int64_t n, double gamma, double t_max,
                                       double dt_sample) {
    if (n < 2) throw std::invalid_argument("evolve_reduced_complete: need at least 2 vertices");
    if (!(gamma > 0.0))
        throw std::invalid_argument("evolve_reduced_complete: gamma must be positive");
    const double nd = static_cast<double>(n);
    // -gamma A - |w><w| restricted to {|w>, |a>}: A|w> = sqrt(N-1)|a>,
    // and the neighbor class induces a complete graph of degree N-2.
    const std::vector<double> h = {-1.0, -gamma * std::sqrt(nd - 1.0), -gamma * std::sqrt(nd - 1.0),
                                   -gamma * (nd - 2.0)};
    const std::vector<Complex> psi0 = {Complex(1.0 / std::sqrt(nd), 0.0),
                                       Complex(std::sqrt((nd - 1.0) / nd), 0.0)};
    EvolutionTrace trace = evolve_eigenbasis(
        h, 2, psi0, t_max, dt_sample,
        [](const std::array<Complex, 3>& psi, double& pw, double& pa, double& pb) {
            pw = std::norm(psi[0]);
            pa = std::norm(psi[1]);
            pb = 0.0;
        },
        "reduced-2d");
    trace.meta.n = static_cast<int>(n);
    trace.meta.gamma = gamma;
    return trace;
}

double max_trace_deviation(const EvolutionTrace& x, const EvolutionTrace& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("max_trace_deviation: traces have different sample counts");
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        worst = std::max(worst, std::abs(x.p_w[i] - y.p_w[i]));
        worst = std::max(worst, std::abs(x.p_a[i] - y.p_a[i]));
        worst = std::max(worst, std::abs(x.p_b[i] - y.p_b[i]));
    }
    return worst;
}

Peak find_peak(const EvolutionTrace& trace) {
    const std::size_t n = trace.size();
    if (n < 3) throw std::invalid_argument("find_peak: trace shorter than 3 samples");
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (trace.p_w[i] > trace.p_w[best]) best = i;

    if (best == 0 || best == n - 1)
        return Peak{trace.t[best], trace.p_w[best], true};

    const double ym = trace.p_w[best - 1];
    const double y0 = trace.p_w[best];
    const double yp = trace.p_w[best + 1];
    const double d2 = ym - 2.0 * y0 + yp;
    if (std::abs(d2) < 1e-300) return Peak{trace.t[best], y0, false};
    double shift = 0.5 * (ym - yp) / d2;
    shift = std::clamp(shift, -1.0, 1.0);
    const double dt = trace.t[best] - trace.t[best - 1];
    const double refined = y0 - 0.25 * (ym - yp) * shift;
    return Peak{trace.t[best] + shift * dt, refined, false};
}

std::string format_g15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

namespace {

void write_meta_lines(const TraceMeta& m, std::size_t samples, std::ostream& os) {
    os << "# family=" << (m.family.empty() ? "unspecified" : m.family) << '\n';
    os << "# engine=" << m.engine << '\n';
    os << "# laplacian=" << m.laplacian << '\n';
    os << "# N=" << m.n << '\n';
    if (m.params) {
        os << "# k=" << m.params->k << '\n';
        os << "# lambda=" << m.params->lambda << '\n';
        os << "# mu=" << m.params->mu << '\n';
    }
    if (m.marked >= 0) os << "# marked=" << m.marked << '\n';
    os << "# gamma=" << format_g15(m.gamma) << '\n';
    os << "# t_max=" << format_g15(m.t_max) << '\n';
    os << "# dt_sample=" << format_g15(m.dt_sample) << '\n';
    if (m.dt_internal > 0.0) os << "# dt_internal=" << format_g15(m.dt_internal) << '\n';
    os << "# samples=" << samples << '\n';
    os << "# max_norm_drift=" << format_g15(m.max_norm_drift) << '\n';
}

}  // namespace

void write_trace_csv(const EvolutionTrace& trace, std::ostream& os) {
    write_meta_lines(trace.meta, trace.size(), os);
    os << "t,p_w,p_a,p_b\n";
    for (std::size_t i = 0; i < trace.size(); ++i) {
        os << format_g15(trace.t[i]) << ',' << format_g15(trace.p_w[i]) << ','
           << format_g15(trace.p_a[i]) << ',' << format_g15(trace.p_b[i]) << '\n';
    }
}

void write_trace_json(const EvolutionTrace& trace, std::ostream& os) {
    nlohmann::ordered_json meta;
    const TraceMeta& m = trace.meta;
    meta["family"] = m.family.empty() ? "unspecified" : m.family;
    meta["engine"] = m.engine;
    meta["laplacian"] = m.laplacian;
    meta["N"] = m.n;
    if (m.params) {
        meta["k"] = m.params->k;
        meta["lambda"] = m.params->lambda;
        meta["mu"] = m.params->mu;
    }
    if (m.marked >= 0) meta["marked"] = m.marked;
    meta["gamma"] = m.gamma;
    meta["t_max"] = m.t_max;
    meta["dt_sample"] = m.dt_sample;
    if (m.dt_internal > 0.0) meta["dt_internal"] = m.dt_internal;
    meta["samples"] = trace.size();
    meta["max_norm_drift"] = m.max_norm_drift;

    nlohmann::ordered_json j;
    j["meta"] = std::move(meta);
    j["t"] = trace.t;
    j["p_w"] = trace.p_w;
    j["p_a"] = trace.p_a;
    j["p_b"] = trace.p_b;
    os << j.dump(2) << '\n';
}

}  // namespace qws
