// wigner_weyl.hpp — Generalized Wigner transform and Weyl map for a square
// integrable projective representation, symplectic Fourier transforms, and
// the concrete Wigner / Fourier-Wigner distributions on phase-space grids.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "framequant/fock.hpp"
#include "framequant/grid.hpp"
#include "framequant/group_rep.hpp"
#include "framequant/operator_space.hpp"
#include "framequant/point_set.hpp"

namespace framequant::wigner {

// ----------------- transforms attached to a representation ------------------

// (S_U a)(g) = d_U^{-1} tr(U(g)^dag a); an isometry B_2(H) -> L^2(G) for a
// unimodular group with Haar weight matched to d_U.
inline PhaseFunction generalized_wigner(const groups::ProjectiveRep& rep, const Operator& a) {
    if (a.rows() != rep.dim() || a.cols() != rep.dim()) {
        throw std::invalid_argument("generalized_wigner: dimension mismatch");
    }
    Vector values(rep.order());
    for (Eigen::Index g = 0; g < rep.order(); ++g) {
        values(g) = (rep.matrix(g).adjoint() * a).trace() / rep.duflo_constant();
    }
    return PhaseFunction(rep.point_set(), values);
}

// S_U^* f = d_U^{-1} sum_g mu(g) f(g) U(g); adjoint and inverse-on-range of S_U.
inline Operator weyl_map(const groups::ProjectiveRep& rep, const PhaseFunction& f) {
    if (!same_point_set(f.points, rep.point_set())) {
        throw std::invalid_argument("weyl_map: function not over this group");
    }
    Operator out = Operator::Zero(rep.dim(), rep.dim());
    for (Eigen::Index g = 0; g < rep.order(); ++g) {
        out += rep.weight(g) * f.values(g) * rep.matrix(g);
    }
    return out / rep.duflo_constant();
}

// (U v U)(g) a = U(g) a U(g)^dag.
inline Operator uvu_action(const groups::ProjectiveRep& rep, Eigen::Index g, const Operator& a) {
    return rep.matrix(g) * a * rep.matrix(g).adjoint();
}

// (T_m(g) f)(g') = m(g, g^{-1} g')^* m(g^{-1} g', g) f(g^{-1} g' g)
// (Delta_G = 1 throughout: finite groups are unimodular).
inline PhaseFunction tm_action(const groups::ProjectiveRep& rep, Eigen::Index g,
                               const PhaseFunction& f) {
    const auto& grp = rep.group();
    const auto& m = rep.multiplier();
    const Eigen::Index ginv = grp.inv(g);
    Vector out(rep.order());
    for (Eigen::Index gp = 0; gp < rep.order(); ++gp) {
        const Eigen::Index conj_arg = grp.mul(ginv, gp);
        out(gp) = std::conj(m(g, conj_arg)) * m(conj_arg, g) * f.values(grp.mul(conj_arg, g));
    }
    return PhaseFunction(f.points, out);
}

// Rank of the map vec(a) -> S_U a; equals dim(H)^2 when the transform is
// onto L^2(G).
inline Eigen::Index generalized_wigner_rank(const groups::ProjectiveRep& rep,
                                            double tol = 1e-10) {
    const Eigen::Index n = rep.dim();
    Eigen::MatrixXcd transform(rep.order(), n * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            PhaseFunction f = generalized_wigner(rep, ops::rank_one(ops::basis_vector(n, i),
                                                                   ops::basis_vector(n, j)));
            transform.col(i * n + j) = f.values;
        }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(transform);
    const double scale = svd.singularValues()(0);
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
        if (svd.singularValues()(k) > tol * scale) ++rank;
    }
    return rank;
}

// -------------------- symplectic Fourier transform ---------------------------

// Finite phase space Z_d x Z_d with Haar weight 1/d:
// (F f)(q,p) = (1/d) sum_{q',p'} f(q',p') omega^{q p' - p q'}. Involutive and
// self-adjoint in the weighted L^2 inner product.
inline PhaseFunction symplectic_fourier_finite(Eigen::Index d, const PhaseFunction& f) {
    if (f.size() != d * d) {
        throw std::invalid_argument("symplectic_fourier_finite: function not on Z_d x Z_d");
    }
    auto omega_pow = [d](Eigen::Index e) {
        e = ((e % d) + d) % d;
        return std::exp(Complex(0.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(d)));
    };
    Vector out(d * d);
    for (Eigen::Index q = 0; q < d; ++q)
        for (Eigen::Index p = 0; p < d; ++p) {
            Complex acc = 0.0;
            for (Eigen::Index q2 = 0; q2 < d; ++q2)
                for (Eigen::Index p2 = 0; p2 < d; ++p2) {
                    acc += f.values(q2 * d + p2) * omega_pow(q * p2 - p * q2);
                }
            out(q * d + p) = acc / static_cast<double>(d);
        }
    return PhaseFunction(f.points, out);
}

// ------------------------- grid distributions -------------------------------

enum class WignerKind { wigner, fourier_wigner, s_param };

struct WignerFunction {
    Grid grid;
    Vector values; // row-major over (q index, p index)
    WignerKind kind = WignerKind::wigner;

    Complex at(Eigen::Index j, Eigen::Index k) const { return values(grid.index(j, k)); }
};

// Pointwise evaluation of a sampled wavefunction: exact on lattice points,
// centered 4-point Lagrange (cubic) interpolation off-lattice, linear at the
// edges, zero outside the sampled range. Cubic rather than linear keeps the
// off-lattice quadrature error below the phase-space identity tolerances.
inline Complex value_at(const fock::SampledWavefunction& wf, double x) {
    const Eigen::Index n = wf.x.size();
    const double t = (x - wf.x(0)) / wf.dx;
    if (t < -1e-9 || t > static_cast<double>(n - 1) + 1e-9) return 0.0;
    const double floor_t = std::floor(t + 1e-9);
    const Eigen::Index i1 = static_cast<Eigen::Index>(floor_t);
    const double u = t - floor_t;
    if (std::abs(u) < 1e-9) return wf.values(std::min(i1, n - 1));
    if (i1 + 1 >= n) return 0.0;
    if (i1 == 0 || i1 + 2 >= n) {
        return (1.0 - u) * wf.values(i1) + u * wf.values(i1 + 1);
    }
    const Complex p0 = wf.values(i1 - 1), p1 = wf.values(i1);
    const Complex p2 = wf.values(i1 + 1), p3 = wf.values(i1 + 2);
    return -u * (u - 1.0) * (u - 2.0) / 6.0 * p0 +
           (u + 1.0) * (u - 1.0) * (u - 2.0) / 2.0 * p1 -
           (u + 1.0) * u * (u - 2.0) / 2.0 * p2 +
           (u + 1.0) * u * (u - 1.0) / 6.0 * p3;
}

// Q_{phi psi}(q,p) = (2 pi)^{-1} Int e^{-ipx} psi(q - x/2)^* phi(q + x/2) dx,
// by a Riemann sum with step = grid spacing. When the wavefunctions are
// sampled at dx = h/4 every argument lands on a lattice point; otherwise
// value_at interpolates linearly.
inline WignerFunction wigner_rank_one(const fock::SampledWavefunction& phi,
                                      const fock::SampledWavefunction& psi,
                                      const Grid& grid) {
    if (phi.dx != psi.dx || phi.x.size() != psi.x.size()) {
        throw std::invalid_argument("wigner_rank_one: incompatible wavefunction samplings");
    }
    const double hx = grid.spacing();
    const double x_max = phi.x(phi.x.size() - 1);
    const Eigen::Index k_max = static_cast<Eigen::Index>(std::floor(2.0 * x_max / hx));
    Vector values(grid.size());
    const Complex minus_i(0.0, -1.0);
    for (Eigen::Index j = 0; j < grid.n_per_axis(); ++j) {
        const double q = grid.q(j);
        // tabulate the q-dependent product once per column
        Vector prod(2 * k_max + 1);
        for (Eigen::Index k = -k_max; k <= k_max; ++k) {
            const double x = static_cast<double>(k) * hx;
            prod(k + k_max) = std::conj(value_at(psi, q - 0.5 * x)) * value_at(phi, q + 0.5 * x);
        }
        for (Eigen::Index kp = 0; kp < grid.n_per_axis(); ++kp) {
            const double p = grid.p(kp);
            Complex acc = 0.0;
            for (Eigen::Index k = -k_max; k <= k_max; ++k) {
                const double x = static_cast<double>(k) * hx;
                acc += std::exp(minus_i * (p * x)) * prod(k + k_max);
            }
            values(grid.index(j, kp)) = acc * hx / (2.0 * std::numbers::pi);
        }
    }
    return WignerFunction{grid, std::move(values), WignerKind::wigner};
}

inline WignerFunction wigner_distribution(const fock::SampledWavefunction& psi, const Grid& grid) {
    return wigner_rank_one(psi, psi, grid);
}

// V_{phi psi}(q,p) = (2 pi)^{-1} Int e^{-ipx} psi(x - q/2)^* phi(x + q/2) dx
// = (2 pi)^{-1} tr(U(q,p)^dag |phi><psi|).
inline WignerFunction fourier_wigner(const fock::SampledWavefunction& phi,
                                     const fock::SampledWavefunction& psi,
                                     const Grid& grid) {
    if (phi.dx != psi.dx || phi.x.size() != psi.x.size()) {
        throw std::invalid_argument("fourier_wigner: incompatible wavefunction samplings");
    }
    const double hx = grid.spacing();
    const double x_max = phi.x(phi.x.size() - 1);
    const Eigen::Index k_max = static_cast<Eigen::Index>(std::floor(x_max / hx));
    Vector values(grid.size());
    const Complex minus_i(0.0, -1.0);
    for (Eigen::Index j = 0; j < grid.n_per_axis(); ++j) {
        const double q = grid.q(j);
        Vector prod(2 * k_max + 1);
        for (Eigen::Index k = -k_max; k <= k_max; ++k) {
            const double x = static_cast<double>(k) * hx;
            prod(k + k_max) = std::conj(value_at(psi, x - 0.5 * q)) * value_at(phi, x + 0.5 * q);
        }
        for (Eigen::Index kp = 0; kp < grid.n_per_axis(); ++kp) {
            const double p = grid.p(kp);
            Complex acc = 0.0;
            for (Eigen::Index k = -k_max; k <= k_max; ++k) {
                const double x = static_cast<double>(k) * hx;
                acc += std::exp(minus_i * (p * x)) * prod(k + k_max);
            }
            values(grid.index(j, kp)) = acc * hx / (2.0 * std::numbers::pi);
        }
    }
    return WignerFunction{grid, std::move(values), WignerKind::fourier_wigner};
}

// (F_sp f)(q,p) = (2 pi)^{-1} IntInt f(q',p') e^{i(q p' - p q')} dq' dp',
// evaluated separably on the common grid.
inline WignerFunction symplectic_fourier(const WignerFunction& f) {
    const Grid& grid = f.grid;
    const Eigen::Index n = grid.n_per_axis();
    const Complex i_unit(0.0, 1.0);
    // stage 1: s(q', p) = sum_{p'} f(q',p') e^{-i p q'} ... split carefully:
    // out(q,p) = (2pi)^{-1} h^2 sum_{q'} e^{-i p q'} [ sum_{p'} f(q',p') e^{i q p'} ]
    Eigen::MatrixXcd inner(n, n); // inner(q', q) = sum_{p'} f(q', p') e^{i q p'}
    for (Eigen::Index jq2 = 0; jq2 < n; ++jq2) {
        for (Eigen::Index jq = 0; jq < n; ++jq) {
            Complex acc = 0.0;
            for (Eigen::Index kp2 = 0; kp2 < n; ++kp2) {
                acc += f.values(grid.index(jq2, kp2)) *
                       std::exp(i_unit * (grid.q(jq) * grid.p(kp2)));
            }
            inner(jq2, jq) = acc;
        }
    }
    Vector out(grid.size());
    for (Eigen::Index jq = 0; jq < n; ++jq) {
        for (Eigen::Index kp = 0; kp < n; ++kp) {
            Complex acc = 0.0;
            for (Eigen::Index jq2 = 0; jq2 < n; ++jq2) {
                acc += inner(jq2, jq) * std::exp(-i_unit * (grid.p(kp) * grid.q(jq2)));
            }
            out(grid.index(jq, kp)) = acc * grid.cell_area() / (2.0 * std::numbers::pi);
        }
    }
    return WignerFunction{grid, std::move(out), f.kind};
}

// --------------------------- grid functionals -------------------------------

// Int Q(q, p) dp at each q index.
inline Eigen::VectorXcd marginal_p(const WignerFunction& w) {
    const Eigen::Index n = w.grid.n_per_axis();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k) out(j) += w.values(w.grid.index(j, k));
    return out * w.grid.spacing();
}

// Int Q(q, p) dq at each p index.
inline Eigen::VectorXcd marginal_q(const WignerFunction& w) {
    const Eigen::Index n = w.grid.n_per_axis();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k) out(k) += w.values(w.grid.index(j, k));
    return out * w.grid.spacing();
}

// IntInt conj(W1) W2 dq dp.
inline Complex overlap(const WignerFunction& a, const WignerFunction& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("overlap: grid mismatch");
    return a.values.dot(b.values) * a.grid.cell_area();
}

} // namespace framequant::wigner
