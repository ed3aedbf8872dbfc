// fock.hpp — Truncated Fock space: ladder operators, quadratures, Hermite
// wavefunctions, displacement operators, and the sampled Weyl system.
//
// Conventions. The displacement operator carries the quantum-optics label,
// D(alpha) = exp(alpha a^dag - alpha^* a), so D(alpha)|0> is the coherent
// state |alpha> with |<0|alpha>|^2 = exp(-|alpha|^2). The Weyl system on the
// (q,p) plane is U(q,p) = exp(i(p qhat - q phat)) = D((q+ip)/sqrt(2)), and the
// Haar measure matching d_U = 1 is dq dp / (2 pi).

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "framequant/frame_engine.hpp"
#include "framequant/grid.hpp"
#include "framequant/operator_space.hpp"

namespace framequant::fock {

// ----------------------------- basic operators ------------------------------

// a |n> = sqrt(n) |n-1>
inline Operator lowering(Eigen::Index n_fock) {
    Operator a = Operator::Zero(n_fock, n_fock);
    for (Eigen::Index n = 1; n < n_fock; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

inline Operator raising(Eigen::Index n_fock) { return lowering(n_fock).adjoint(); }

inline Operator position(Eigen::Index n_fock) {
    Operator a = lowering(n_fock);
    return (a + a.adjoint()) / std::sqrt(2.0);
}

inline Operator momentum(Eigen::Index n_fock) {
    Operator a = lowering(n_fock);
    return (a - a.adjoint()) / Complex(0.0, std::sqrt(2.0));
}

inline Operator number(Eigen::Index n_fock) {
    Operator n = Operator::Zero(n_fock, n_fock);
    for (Eigen::Index k = 0; k < n_fock; ++k) n(k, k) = static_cast<double>(k);
    return n;
}

inline Operator parity(Eigen::Index n_fock) {
    Operator p = Operator::Zero(n_fock, n_fock);
    for (Eigen::Index k = 0; k < n_fock; ++k) p(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
    return p;
}

inline Vector fock_state(Eigen::Index n_fock, Eigen::Index n) {
    if (n < 0 || n >= n_fock) throw std::invalid_argument("fock_state: level out of range");
    return ops::basis_vector(n_fock, n);
}

// -------------------------- displacement engine -----------------------------

// Evaluates D(alpha) = exp(alpha a^dag - alpha^* a) on the truncated space as
// an exact matrix exponential of the truncated generator. Writing
// alpha = r e^{i theta} and R = diag(e^{i theta n}),
//     alpha a^dag - alpha^* a = R [ r (a^dag - a) ] R^dag,
// so one Hermitian eigendecomposition of i(a^dag - a) serves every alpha.
class DisplacementEngine {
public:
    explicit DisplacementEngine(Eigen::Index n_fock) : n_fock_(n_fock) {
        if (n_fock < 2) throw std::invalid_argument("DisplacementEngine: n_fock >= 2 required");
        Operator h = Complex(0.0, 1.0) * (raising(n_fock) - lowering(n_fock));
        Eigen::SelfAdjointEigenSolver<Operator> es(h);
        eigvecs_ = es.eigenvectors();
        eigvals_ = es.eigenvalues();
    }

    Eigen::Index n_fock() const { return n_fock_; }

    Operator matrix(Complex alpha) const {
        const double r = std::abs(alpha);
        Vector phase = rotation_phase(alpha);
        Operator core = eigvecs_ *
                        (-Complex(0.0, 1.0) * r * eigvals_.cast<Complex>().array()).exp().matrix().asDiagonal() *
                        eigvecs_.adjoint();
        return phase.asDiagonal() * core * phase.conjugate().asDiagonal();
    }

    // D(alpha) applied to a block of column vectors
    Operator apply(Complex alpha, const Operator& block) const {
        const double r = std::abs(alpha);
        Vector phase = rotation_phase(alpha);
        Operator x = phase.conjugate().asDiagonal() * block;
        x = eigvecs_.adjoint() * x;
        x = (-Complex(0.0, 1.0) * r * eigvals_.cast<Complex>().array()).exp().matrix().asDiagonal() * x;
        x = eigvecs_ * x;
        return phase.asDiagonal() * x;
    }

    Vector apply(Complex alpha, const Vector& v) const {
        return apply(alpha, Operator(v)).col(0);
    }

private:
    Vector rotation_phase(Complex alpha) const {
        const double theta = (std::abs(alpha) > 0.0) ? std::arg(alpha) : 0.0;
        Vector phase(n_fock_);
        for (Eigen::Index n = 0; n < n_fock_; ++n) {
            phase(n) = std::exp(Complex(0.0, theta * static_cast<double>(n)));
        }
        return phase;
    }

    Eigen::Index n_fock_;
    Operator eigvecs_;
    Eigen::VectorXd eigvals_;
};

inline Complex weyl_alpha(double q, double p) { return Complex(q, p) / std::sqrt(2.0); }

inline Vector coherent_state(const DisplacementEngine& engine, Complex alpha) {
    return engine.apply(alpha, fock_state(engine.n_fock(), 0));
}

// Truncation headroom guard: displaced states with |alpha|^2 close to the
// cutoff lose norm through the top of the space.
inline bool displacement_headroom_ok(Complex alpha, Eigen::Index n_fock) {
    const double nf = static_cast<double>(n_fock);
    return std::norm(alpha) + 6.0 * std::sqrt(nf) <= nf;
}

// ------------------------- sampled Weyl system ------------------------------

// U(q,p) = exp(i (p qhat - q phat)) sampled on a Grid; quadrature weights
// h^2/(2 pi) make the family act like a Haar-normalized system.
class TruncatedWeylSystem {
public:
    TruncatedWeylSystem(Eigen::Index n_fock, Grid grid)
        : grid_(std::move(grid)), engine_(n_fock) {}

    const Grid& grid() const { return grid_; }
    Eigen::Index n_fock() const { return engine_.n_fock(); }
    const DisplacementEngine& engine() const { return engine_; }

    Operator matrix(double q, double p) const { return engine_.matrix(weyl_alpha(q, p)); }
    Operator matrix_at(Eigen::Index idx) const {
        return matrix(grid_.q(grid_.j_of(idx)), grid_.p(grid_.k_of(idx)));
    }
    Vector apply(double q, double p, const Vector& v) const {
        return engine_.apply(weyl_alpha(q, p), v);
    }

    // ||(U(z)^dag U(z) - I) restricted to the first n_states levels||. The
    // exponential of the truncated generator is exactly unitary (the generator
    // stays anti-Hermitian under truncation), so this sits at rounding level
    // for every z; kept as a sanity diagnostic.
    double unitarity_defect(double q, double p, Eigen::Index n_states) const {
        Operator u = matrix(q, p);
        Operator block = Operator::Identity(n_fock(), std::min(n_states, n_fock()));
        Operator d = u.adjoint() * (u * block) - block;
        return d.norm();
    }

    // ||(U(q,p) - e^{-iqp/2} U(0,p) U(q,0)) restricted to the first n_states
    // levels||. Collinear compositions live on one exponential subgroup and
    // survive truncation exactly; this non-collinear split does not, and the
    // residual grows with |z| and with shrinking headroom.
    double composition_defect(double q, double p, Eigen::Index n_states) const {
        Operator block = Operator::Identity(n_fock(), std::min(n_states, n_fock()));
        const Complex phase = std::exp(Complex(0.0, -0.5 * q * p));
        Operator d = matrix(q, p) * block -
                     phase * (matrix(0.0, p) * (matrix(q, 0.0) * block));
        return d.norm();
    }

    // Orbit {U(z) psi} as a VectorFrame over the grid's point set.
    frames::VectorFrame orbit_frame(const Vector& psi) const {
        if (psi.size() != n_fock()) throw std::invalid_argument("orbit_frame: dimension mismatch");
        Operator vecs(n_fock(), grid_.size());
        for (Eigen::Index idx = 0; idx < grid_.size(); ++idx) {
            vecs.col(idx) = apply(grid_.q(grid_.j_of(idx)), grid_.p(grid_.k_of(idx)), psi);
        }
        return frames::VectorFrame(grid_.point_set(), std::move(vecs));
    }

private:
    Grid grid_;
    DisplacementEngine engine_;
};

inline TruncatedWeylSystem weyl_system_truncated(Eigen::Index n_fock, const Grid& grid) {
    return TruncatedWeylSystem(n_fock, grid);
}

// --------------------------- line wavefunctions -----------------------------

// Harmonic-oscillator eigenfunctions phi_n(x) via the stable recurrence
// phi_{n+1} = sqrt(2/(n+1)) x phi_n - sqrt(n/(n+1)) phi_{n-1}.
inline Eigen::MatrixXd hermite_functions(const Eigen::VectorXd& x, Eigen::Index n_max) {
    Eigen::MatrixXd phi(x.size(), n_max);
    const double norm0 = std::pow(std::numbers::pi, -0.25);
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        phi(i, 0) = norm0 * std::exp(-0.5 * x(i) * x(i));
        if (n_max > 1) phi(i, 1) = std::sqrt(2.0) * x(i) * phi(i, 0);
        for (Eigen::Index n = 1; n + 1 < n_max; ++n) {
            phi(i, n + 1) = std::sqrt(2.0 / static_cast<double>(n + 1)) * x(i) * phi(i, n) -
                            std::sqrt(static_cast<double>(n) / static_cast<double>(n + 1)) * phi(i, n - 1);
        }
    }
    return phi;
}

// A wavefunction sampled on the symmetric lattice x_j = (j - (N-1)/2) dx.
struct SampledWavefunction {
    Eigen::VectorXd x;
    Vector values;
    double dx = 0.0;

    double squared_norm() const { return values.cwiseAbs2().sum() * dx; }
};

inline Eigen::VectorXd symmetric_line(double half_extent, double dx) {
    const Eigen::Index n = 2 * static_cast<Eigen::Index>(std::llround(half_extent / dx)) + 1;
    Eigen::VectorXd x(n);
    for (Eigen::Index j = 0; j < n; ++j) x(j) = (static_cast<double>(j) - static_cast<double>(n - 1) / 2.0) * dx;
    return x;
}

// Fock-basis coefficients -> sampled wavefunction.
inline SampledWavefunction sample_fock_vector(const Vector& coeffs, double half_extent, double dx) {
    Eigen::VectorXd x = symmetric_line(half_extent, dx);
    Eigen::MatrixXd phi = hermite_functions(x, coeffs.size());
    return SampledWavefunction{x, phi.cast<Complex>() * coeffs, dx};
}

// Coherent state |alpha| in position representation:
// pi^{-1/4} exp(-(x - q0)^2 / 2 + i p0 x - i p0 q0 / 2), q0 + i p0 = sqrt(2) alpha.
inline SampledWavefunction sample_coherent(Complex alpha, double half_extent, double dx) {
    const double q0 = std::sqrt(2.0) * alpha.real();
    const double p0 = std::sqrt(2.0) * alpha.imag();
    Eigen::VectorXd x = symmetric_line(half_extent, dx);
    Vector v(x.size());
    const double norm0 = std::pow(std::numbers::pi, -0.25);
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        v(j) = norm0 * std::exp(Complex(-0.5 * (x(j) - q0) * (x(j) - q0),
                                        p0 * x(j) - 0.5 * p0 * q0));
    }
    return SampledWavefunction{std::move(x), std::move(v), dx};
}

inline SampledWavefunction sample_fock_state(Eigen::Index n, double half_extent, double dx) {
    return sample_fock_vector(ops::basis_vector(n + 1, n), half_extent, dx);
}

} // namespace framequant::fock
