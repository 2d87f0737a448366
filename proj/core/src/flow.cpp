#include "elastica/flow.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <memory>
#include <numbers>
#include <string>

namespace elastica {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reusable FFTW plans and buffers for one grid size. Plan creation is not
// thread-safe, so workspaces are cached per thread.
class Workspace {
  public:
    explicit Workspace(std::size_t n) : n_(n), nc_(n / 2 + 1) {
        real_ = fftw_alloc_real(n_);
        spec_ = fftw_alloc_complex(nc_);
        fwd_ = fftw_plan_dft_r2c_1d(static_cast<int>(n_), real_, spec_,
                                    FFTW_ESTIMATE);
        inv_ = fftw_plan_dft_c2r_1d(static_cast<int>(n_), spec_, real_,
                                    FFTW_ESTIMATE);
    }
    ~Workspace() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(inv_);
        fftw_free(real_);
        fftw_free(spec_);
    }
    Workspace(const Workspace&) = delete;
    Workspace& operator=(const Workspace&) = delete;

    std::size_t size() const { return n_; }
    std::size_t spec_size() const { return nc_; }

    // real -> normalized spectrum (out size nc_).
    void forward(const double* in, std::complex<double>* out) {
        std::copy(in, in + n_, real_);
        fftw_execute(fwd_);
        const double scale = 1.0 / static_cast<double>(n_);
        for (std::size_t j = 0; j < nc_; ++j)
            out[j] = scale * std::complex<double>(spec_[j][0], spec_[j][1]);
    }
    // normalized spectrum -> real.
    void inverse(const std::complex<double>* in, double* out) {
        for (std::size_t j = 0; j < nc_; ++j) {
            spec_[j][0] = in[j].real();
            spec_[j][1] = in[j].imag();
        }
        fftw_execute(inv_);
        std::copy(real_, real_ + n_, out);
    }

  private:
    std::size_t n_, nc_;
    double* real_;
    fftw_complex* spec_;
    fftw_plan fwd_, inv_;
};

Workspace& workspace_for(std::size_t n) {
    thread_local std::map<std::size_t, std::unique_ptr<Workspace>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<Workspace>(n);
    return *slot;
}

using Spectrum = std::vector<std::complex<double>>;

double k_of(std::size_t j, double L) {
    return kTwoPi * static_cast<double>(j) / L;
}

// In-place spectral derivative of given order; odd orders zero the Nyquist
// mode.
void apply_derivative(Spectrum& f, double L, int order, std::size_t n) {
    for (std::size_t j = 0; j < f.size(); ++j) {
        std::complex<double> mult{1.0, 0.0};
        const std::complex<double> ik{0.0, k_of(j, L)};
        for (int o = 0; o < order; ++o) mult *= ik;
        f[j] *= mult;
    }
    if (order % 2 == 1 && n % 2 == 0) f[f.size() - 1] = 0.0;
}

// 2/3-rule truncation: keep modes j <= floor(N/3).
void apply_dealias(Spectrum& f, std::size_t n) {
    const std::size_t keep = n / 3;
    for (std::size_t j = keep + 1; j < f.size(); ++j) f[j] = 0.0;
}

double sup_norm(std::span<const double> f) {
    double m = 0.0;
    for (double v : f) {
        if (!std::isfinite(v)) return std::numeric_limits<double>::quiet_NaN();
        if (std::abs(v) > m) m = std::abs(v);
    }
    return m;
}

double grid_mean(std::span<const double> f) {
    double s = 0.0;
    for (double v : f) s += v;
    return s / static_cast<double>(f.size());
}

void check_zero_mean(std::span<const double> f, const char* what) {
    const double m = grid_mean(f);
    if (std::abs(m) > 1e-10 * std::max(1.0, sup_norm(f)))
        throw std::invalid_argument(std::string(what) +
                                    ": nonzero mean input, mean = " +
                                    std::to_string(m));
}

// Kernel forms operating on raw vectors (shared by the public functions and
// by evolve).

std::vector<double> kernel_derivative(std::span<const double> f, double L,
                                      int order) {
    const std::size_t n = f.size();
    Workspace& ws = workspace_for(n);
    Spectrum spec(ws.spec_size());
    ws.forward(f.data(), spec.data());
    apply_derivative(spec, L, order, n);
    std::vector<double> out(n);
    ws.inverse(spec.data(), out.data());
    return out;
}

std::vector<double> kernel_antiderivative(std::span<const double> f, double L) {
    const std::size_t n = f.size();
    Workspace& ws = workspace_for(n);
    Spectrum spec(ws.spec_size());
    ws.forward(f.data(), spec.data());
    spec[0] = 0.0;  // zero-mean gauge
    for (std::size_t j = 1; j < spec.size(); ++j)
        spec[j] /= std::complex<double>(0.0, k_of(j, L));
    if (n % 2 == 0) spec[spec.size() - 1] = 0.0;
    std::vector<double> out(n);
    ws.inverse(spec.data(), out.data());
    return out;
}

std::vector<double> kernel_mkdv_rhs(std::span<const double> kappa, double L) {
    const std::size_t n = kappa.size();
    Workspace& ws = workspace_for(n);
    Spectrum khat(ws.spec_size()), cube(ws.spec_size());
    ws.forward(kappa.data(), khat.data());
    std::vector<double> k3(n);
    for (std::size_t i = 0; i < n; ++i) k3[i] = kappa[i] * kappa[i] * kappa[i];
    ws.forward(k3.data(), cube.data());
    apply_dealias(cube, n);
    for (std::size_t j = 0; j < khat.size(); ++j) {
        const double k = k_of(j, L);
        const std::complex<double> ik{0.0, k};
        khat[j] = 0.5 * ik * cube[j] - ik * (k * k) * khat[j];
    }
    if (n % 2 == 0) khat[khat.size() - 1] = 0.0;
    std::vector<double> out(n);
    ws.inverse(khat.data(), out.data());
    return out;
}

std::vector<double> kernel_tangential_velocity(std::span<const double> kappa,
                                               std::span<const double> u2,
                                               double L, const char* what) {
    const std::size_t n = kappa.size();
    std::vector<double> g(n);
    double k2sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        g[i] = kappa[i] * u2[i];
        k2sum += kappa[i] * kappa[i];
    }
    check_zero_mean(g, what);
    std::vector<double> u1 = kernel_antiderivative(g, L);
    const double gauge = 0.5 * k2sum / static_cast<double>(n);
    for (double& v : u1) v += gauge;
    return u1;
}

std::vector<double> kernel_omega(std::span<const double> kappa,
                                 std::span<const double> v, double L) {
    const std::size_t n = kappa.size();
    std::vector<double> u1 = kernel_tangential_velocity(kappa, v, L, "omega_apply");
    std::vector<double> ku1(n);
    for (std::size_t i = 0; i < n; ++i) ku1[i] = kappa[i] * u1[i];
    std::vector<double> term1 = kernel_derivative(v, L, 2);
    std::vector<double> term2 = kernel_derivative(ku1, L, 1);
    for (std::size_t i = 0; i < n; ++i) term1[i] += term2[i];
    return term1;
}

}  // namespace

void validate_flow_state(const FlowState& s) {
    const std::size_t n = s.kappa.size();
    if (n < 32 || (n & (n - 1)) != 0)
        throw std::invalid_argument(
            "FlowState: grid size must be a power of two, >= 32");
    if (!(s.L > 0.0)) throw std::invalid_argument("FlowState: L must be positive");
    for (double v : s.kappa)
        if (!std::isfinite(v))
            throw std::invalid_argument("FlowState: non-finite curvature");
}

std::vector<double> spectral_derivative(std::span<const double> f, double L,
                                        int order) {
    if (f.size() < 4) throw std::invalid_argument("spectral_derivative: grid too short");
    if (!(L > 0.0)) throw std::invalid_argument("spectral_derivative: L must be positive");
    return kernel_derivative(f, L, order);
}

std::vector<double> antiderivative_periodic(std::span<const double> f, double L) {
    if (f.size() < 4)
        throw std::invalid_argument("antiderivative_periodic: grid too short");
    if (!(L > 0.0))
        throw std::invalid_argument("antiderivative_periodic: L must be positive");
    check_zero_mean(f, "antiderivative_periodic");
    return kernel_antiderivative(f, L);
}

std::vector<double> tangential_velocity(std::span<const double> kappa,
                                        std::span<const double> u2, double L) {
    if (kappa.size() != u2.size())
        throw std::invalid_argument("tangential_velocity: size mismatch");
    return kernel_tangential_velocity(kappa, u2, L, "tangential_velocity");
}

DeformationFields deformation_fields(std::span<const double> kappa,
                                     std::span<const double> u2, double L) {
    DeformationFields f;
    f.u1 = tangential_velocity(kappa, u2, L);
    f.u2.assign(u2.begin(), u2.end());
    return f;
}

std::vector<double> omega_apply(std::span<const double> kappa,
                                std::span<const double> v, double L) {
    if (kappa.size() != v.size())
        throw std::invalid_argument("omega_apply: size mismatch");
    return kernel_omega(kappa, v, L);
}

std::vector<double> omega_tilde_apply(std::span<const double> kappa,
                                      std::span<const double> u1, double L) {
    const std::size_t n = kappa.size();
    if (u1.size() != n) throw std::invalid_argument("omega_tilde_apply: size mismatch");
    double kmin = std::numeric_limits<double>::max(), kmax = 0.0;
    for (double v : kappa) {
        kmin = std::min(kmin, std::abs(v));
        kmax = std::max(kmax, std::abs(v));
    }
    if (kmin <= 1e-6 * kmax)
        throw std::invalid_argument(
            "omega_tilde_apply: curvature vanishes on the grid");
    std::vector<double> du1 = kernel_derivative(u1, L, 1);
    std::vector<double> ku1(n);
    for (std::size_t i = 0; i < n; ++i) {
        du1[i] /= kappa[i];
        ku1[i] = kappa[i] * u1[i];
    }
    std::vector<double> term1 = kernel_derivative(du1, L, 2);
    std::vector<double> term2 = kernel_derivative(ku1, L, 1);
    for (std::size_t i = 0; i < n; ++i) term1[i] += term2[i];
    return term1;
}

std::vector<double> mkdv_rhs(std::span<const double> kappa, double L) {
    if (kappa.size() < 4) throw std::invalid_argument("mkdv_rhs: grid too short");
    if (!(L > 0.0)) throw std::invalid_argument("mkdv_rhs: L must be positive");
    return kernel_mkdv_rhs(kappa, L);
}

double stable_dt(double L, std::size_t N, int hierarchy_index) {
    if (hierarchy_index < 0 || hierarchy_index > 2)
        throw std::invalid_argument("stable_dt: hierarchy index in {0,1,2}");
    const double kmax = kTwoPi / L * std::floor(static_cast<double>(N) / 3.0);
    return 1.0 / std::pow(kmax, 2 * hierarchy_index + 1);
}

FlowState evolve(FlowState state, int hierarchy_index, double dt,
                 std::size_t steps) {
    validate_flow_state(state);
    if (hierarchy_index < 0 || hierarchy_index > 2)
        throw std::invalid_argument("evolve: hierarchy index in {0,1,2}");
    if (!(dt > 0.0)) throw std::invalid_argument("evolve: dt must be positive");

    const std::size_t n = state.kappa.size();
    const std::size_t nc = n / 2 + 1;
    const double L = state.L;
    Workspace& ws = workspace_for(n);

    // The state lives in spectral space, band-limited to the dealiased band
    // (2/3 rule); the right-hand side is masked to the same band, so no mode
    // beyond the stability bound's kmax ever carries dynamics.
    Spectrum y(nc), k1(nc), k2(nc), k3(nc), k4(nc), stage(nc), wtmp(nc), ghat(nc);
    std::vector<double> phys(n), work(n), work2(n);
    ws.forward(state.kappa.data(), y.data());
    apply_dealias(y, n);

    auto rhs_mkdv = [&](const Spectrum& in, Spectrum& out) {
        ws.inverse(in.data(), phys.data());
        for (std::size_t i = 0; i < n; ++i) work[i] = phys[i] * phys[i] * phys[i];
        ws.forward(work.data(), out.data());
        apply_dealias(out, n);
        for (std::size_t j = 0; j < nc; ++j) {
            const double k = k_of(j, L);
            const std::complex<double> ik{0.0, k};
            out[j] = 0.5 * ik * out[j] - ik * (k * k) * in[j];
        }
        if (n % 2 == 0) out[nc - 1] = 0.0;
    };
    // Omega applied to a spectral field w, with kappa taken from `in`:
    // out = ds^2 w + ds(kappa * (dsinv(kappa w) + mean(kappa^2)/2)).
    auto apply_omega_spec = [&](const Spectrum& in, const Spectrum& w,
                                Spectrum& out) {
        ws.inverse(in.data(), phys.data());   // kappa
        ws.inverse(w.data(), work.data());    // w physical
        double k2sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            work2[i] = phys[i] * work[i];
            k2sum += phys[i] * phys[i];
        }
        ws.forward(work2.data(), ghat.data());
        // kappa*w is a total derivative analytically; on the grid the
        // quartic's aliasing leaves a spurious mean, which is projected out
        // so the flow stays exactly inextensible (blowup is monitored on the
        // state itself).
        ghat[0] = 0.0;
        for (std::size_t j = 1; j < nc; ++j)
            ghat[j] /= std::complex<double>(0.0, k_of(j, L));
        if (n % 2 == 0) ghat[nc - 1] = 0.0;
        ws.inverse(ghat.data(), work2.data());  // dsinv(kappa w)
        const double gauge = 0.5 * k2sum / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) work2[i] = phys[i] * (work2[i] + gauge);
        ws.forward(work2.data(), out.data());
        for (std::size_t j = 0; j < nc; ++j) {
            const double k = k_of(j, L);
            out[j] = std::complex<double>(0.0, k) * out[j] -
                     (k * k) * w[j];
        }
        if (n % 2 == 0) out[nc - 1] = 0.0;
        apply_dealias(out, n);
    };
    auto rhs = [&](const Spectrum& in, Spectrum& out) {
        switch (hierarchy_index) {
            case 0:
                for (std::size_t j = 0; j < nc; ++j)
                    out[j] = std::complex<double>(0.0, k_of(j, L)) * in[j];
                if (n % 2 == 0) out[nc - 1] = 0.0;
                break;
            case 1:
                rhs_mkdv(in, out);
                break;
            default:
                rhs_mkdv(in, wtmp);
                apply_omega_spec(in, wtmp, out);
                break;
        }
    };

    const double sup0 = sup_norm(state.kappa);
    for (std::size_t step = 0; step < steps; ++step) {
        rhs(y, k1);
        for (std::size_t j = 0; j < nc; ++j) stage[j] = y[j] + 0.5 * dt * k1[j];
        rhs(stage, k2);
        for (std::size_t j = 0; j < nc; ++j) stage[j] = y[j] + 0.5 * dt * k2[j];
        rhs(stage, k3);
        for (std::size_t j = 0; j < nc; ++j) stage[j] = y[j] + dt * k3[j];
        rhs(stage, k4);
        for (std::size_t j = 0; j < nc; ++j)
            y[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        state.t += dt;
        if (step % 64 == 0 || step + 1 == steps) {
            ws.inverse(y.data(), phys.data());
            const double sup = sup_norm(phys);
            if (!(sup <= 1e3 * std::max(sup0, 1e-300)))
                throw numerical_error(
                    "evolve: blowup at step " + std::to_string(step) + ", t = " +
                    std::to_string(state.t) + ", sup|kappa| = " +
                    std::to_string(sup) + " (initial " + std::to_string(sup0) +
                    "); dt too large");
        }
    }
    ws.inverse(y.data(), state.kappa.data());
    return state;
}

PlanarCurve deform_curve(const PlanarCurve& curve, std::span<const double> u2,
                         double dt) {
    validate_curve(curve);
    if (!curve.closed)
        throw std::invalid_argument("deform_curve: closed curve required");
    const std::size_t n = curve.points.size();
    if (u2.size() != n) throw std::invalid_argument("deform_curve: size mismatch");
    const double L = curve.total_length();

    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = curve.points[i].x;
        y[i] = curve.points[i].y;
    }
    const std::vector<double> xp = kernel_derivative(x, L, 1);
    const std::vector<double> yp = kernel_derivative(y, L, 1);
    const std::vector<double> xpp = kernel_derivative(x, L, 2);
    const std::vector<double> ypp = kernel_derivative(y, L, 2);

    std::vector<double> kappa(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double speed = std::hypot(xp[i], yp[i]);
        kappa[i] = (xp[i] * ypp[i] - yp[i] * xpp[i]) / (speed * speed * speed);
    }
    const std::vector<double> u1 =
        kernel_tangential_velocity(kappa, u2, L, "deform_curve");

    std::vector<Vec2> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double speed = std::hypot(xp[i], yp[i]);
        const Vec2 T{xp[i] / speed, yp[i] / speed};
        const Vec2 N{-T.y, T.x};
        pts[i] = curve.points[i] + dt * (u1[i] * T + u2[i] * N);
    }
    return make_curve(std::move(pts), true);
}

}  // namespace elastica
