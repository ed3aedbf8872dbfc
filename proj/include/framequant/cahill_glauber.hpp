// cahill_glauber.hpp — The s-parametrized operator family on truncated Fock
// space: closed-form norms, displaced probes, quasi-distributions on grids,
// and tight-frame reconstruction over the product phase space.
//
// Phase-space points are (q,p) with z = q + ip and Haar weight h^2/(2 pi);
// the displacement entering T_s(z) = U(z) T_s U(z)^dag is the Weyl system
// U(z) = exp(i(p qhat - q phat)) = D(z / sqrt(2)).

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "framequant/errors.hpp"
#include "framequant/fock.hpp"
#include "framequant/grid.hpp"
#include "framequant/operator_space.hpp"

namespace framequant::cg {

// ------------------------------ s parameter ----------------------------------

enum class Regime { trace_class, bounded_only, unbounded };

struct SParameter {
    Complex value;

    explicit SParameter(Complex s) : value(s) {
        if (s == Complex(1.0, 0.0)) {
            throw std::invalid_argument("SParameter: s = 1 is not defined");
        }
    }

    Regime regime() const {
        if (value.real() < 0.0) return Regime::trace_class;
        if (value.real() == 0.0) return Regime::bounded_only;
        return Regime::unbounded;
    }

    // r = (s+1)/(s-1); |r| < 1 exactly in the trace-class regime
    Complex ratio() const { return (value + 1.0) / (value - 1.0); }

    bool formal() const { return regime() == Regime::unbounded; }
};

// ------------------------------- T_s family -----------------------------------

// Diagonal Fock-basis coefficients t_n = (2/(1-s)) r^n.
inline Vector t_s_coefficients(const SParameter& s, Eigen::Index n_fock) {
    const Complex pref = 2.0 / (1.0 - s.value);
    const Complex r = s.ratio();
    Vector t(n_fock);
    Complex rn = 1.0;
    for (Eigen::Index n = 0; n < n_fock; ++n) {
        t(n) = pref * rn;
        rn *= r;
    }
    return t;
}

inline Operator t_s_operator(const SParameter& s, Eigen::Index n_fock) {
    if (n_fock < 2) throw std::invalid_argument("t_s_operator: n_fock >= 2 required");
    return Operator(t_s_coefficients(s, n_fock).asDiagonal());
}

struct TsNormReport {
    double op_norm = 0.0;
    double hs_norm = 0.0;
    double trace_norm = 0.0;
    Complex trace;
    // closed forms valid in the trace-class regime
    double op_norm_closed = 0.0;
    double hs_norm_closed = 0.0;
    double trace_norm_closed = 0.0;
    Complex trace_closed;
    // geometric truncation-tail estimates
    double trace_tail = 0.0;
    double hs_tail = 0.0;
};

inline TsNormReport t_s_norm_report(const SParameter& s, Eigen::Index n_fock) {
    if (s.regime() == Regime::unbounded) {
        throw std::invalid_argument("t_s_norm_report: norms require Re(s) <= 0");
    }
    Operator t = t_s_operator(s, n_fock);
    TsNormReport rep;
    rep.op_norm = ops::op_norm(t);
    rep.hs_norm = ops::hs_norm(t);
    rep.trace_norm = ops::trace_norm(t);
    rep.trace = t.trace();
    const double abs_pref = std::abs(2.0 / (1.0 - s.value));
    const double abs_r = std::abs(s.ratio());
    rep.op_norm_closed = abs_pref;
    if (s.regime() == Regime::trace_class) {
        rep.hs_norm_closed = 1.0 / std::sqrt(std::abs(s.value.real()));
        rep.trace_norm_closed = 2.0 / (std::abs(1.0 - s.value) - std::abs(1.0 + s.value));
        rep.trace_closed = 1.0;
        const double rn = std::pow(abs_r, static_cast<double>(n_fock));
        rep.trace_tail = abs_pref * rn / (1.0 - abs_r);
        rep.hs_tail = abs_pref * std::pow(abs_r, static_cast<double>(n_fock)) /
                      std::sqrt(1.0 - abs_r * abs_r);
    }
    return rep;
}

// T_s(z) = U(z) T_s U(z)^dag with the truncated Weyl displacement.
inline Operator displaced_t_s(const SParameter& s, Complex z,
                              const fock::DisplacementEngine& engine) {
    Operator u = engine.matrix(fock::weyl_alpha(z.real(), z.imag()));
    Operator t = t_s_operator(s, engine.n_fock());
    return u * t * u.adjoint();
}

inline Operator displaced_t_s(const SParameter& s, Complex z, Eigen::Index n_fock) {
    return displaced_t_s(s, z, fock::DisplacementEngine(n_fock));
}

// Accuracy guard for the displacement entering T_s(z).
inline bool displaced_t_s_accurate(Complex z, Eigen::Index n_fock) {
    return fock::displacement_headroom_ok(fock::weyl_alpha(z.real(), z.imag()), n_fock);
}

// --------------------------- quasi-distributions ------------------------------

struct QuasiDistribution {
    SParameter s;
    Grid grid;
    Vector values;
    std::string operator_ref;
    bool formal = false; // probe outside the bounded regimes
};

namespace detail {

// smallest K with |r|^K below eps (coefficients beyond are negligible)
inline Eigen::Index coefficient_cutoff(const SParameter& s, Eigen::Index n_fock, double eps) {
    const double abs_r = std::abs(s.ratio());
    if (abs_r == 0.0) return 1;
    if (abs_r >= 1.0) return n_fock;
    const double k = std::log(eps) / std::log(abs_r);
    return std::min<Eigen::Index>(n_fock, static_cast<Eigen::Index>(std::ceil(k)) + 1);
}

} // namespace detail

// A_s(z) = tr(T_s(z) a) per grid point, evaluated through the displaced Fock
// columns U(z)|n> with the diagonal coefficients t_n truncated at working
// precision.
inline QuasiDistribution quasi_distribution(const Operator& a, const SParameter& s,
                                            const Grid& grid, Eigen::Index n_fock,
                                            const std::string& operator_ref = "operator") {
    if (a.rows() != n_fock || a.cols() != n_fock) {
        throw std::invalid_argument("quasi_distribution: operator must act on the Fock truncation");
    }
    const fock::DisplacementEngine engine(n_fock);
    const Vector t = t_s_coefficients(s, n_fock);
    const Eigen::Index cutoff = detail::coefficient_cutoff(s, n_fock, 1e-14);
    Operator block = Operator::Identity(n_fock, cutoff);
    Vector values(grid.size());
    for (Eigen::Index idx = 0; idx < grid.size(); ++idx) {
        const Complex alpha = fock::weyl_alpha(grid.q(grid.j_of(idx)), grid.p(grid.k_of(idx)));
        Operator cols = engine.apply(alpha, block);
        Operator acols = a * cols;
        Complex acc = 0.0;
        for (Eigen::Index n = 0; n < cutoff; ++n) {
            acc += t(n) * cols.col(n).dot(acols.col(n));
        }
        values(idx) = acc;
    }
    return QuasiDistribution{s, grid, std::move(values), operator_ref, s.formal()};
}

// | sum_z w(z) A_s(z) - tr(a) | with w = h^2/(2 pi); the phase-space integral
// of a quasi-distribution reproduces the trace.
inline double diagonal_trace_check(const Operator& a, const SParameter& s, const Grid& grid,
                                   Eigen::Index n_fock) {
    if (s.regime() != Regime::trace_class) {
        throw std::invalid_argument("diagonal_trace_check: Re(s) < 0 required");
    }
    QuasiDistribution q = quasi_distribution(a, s, grid, n_fock);
    Complex integral = q.values.sum() * grid.cell_weight();
    return std::abs(integral - a.trace());
}

// ------------------------------ reconstruction --------------------------------

struct ReconstructionReport {
    Operator reconstructed;
    double relative_hs_error = 0.0;
};

// Tight-frame roundtrip over the product grid:
//   a_rec = |Re s| sum_{m,n} t_m^* t_n P_nm a P_nm^dag,
//   P_nm  = sum_z w(z) U(z)|n><m|U(z)^dag,
// which is the product-lattice quadrature of the decomposition
//   a = (|Re s|^{1/2} / (2 pi)^2) IntInt A_s(z1,z2) T_s(z1,z2) dz1 dz2
// written out through the diagonal eigenbasis of T_s, with the coefficient
// tail truncated at relative 1e-8. At s = -1 this collapses to the
// non-diagonal coherent-state representation P a P with P = sum_z w |z><z|.
inline ReconstructionReport reconstruct(const Operator& a, const SParameter& s, const Grid& grid,
                                        Eigen::Index n_fock) {
    if (s.regime() != Regime::trace_class) {
        throw std::invalid_argument("reconstruct: Re(s) < 0 required for the tight frame");
    }
    if (a.rows() != n_fock || a.cols() != n_fock) {
        throw std::invalid_argument("reconstruct: operator must act on the Fock truncation");
    }
    const fock::DisplacementEngine engine(n_fock);
    const Vector t = t_s_coefficients(s, n_fock);
    const Eigen::Index cutoff = detail::coefficient_cutoff(s, n_fock, 3e-4);
    const double w = grid.cell_weight();
    Operator block = Operator::Identity(n_fock, cutoff);

    // Stack the displaced columns into one vector per point; the Gram-type
    // accumulator M((a,n),(b,m)) = sum_z w C(a,n) conj(C(b,m)) holds every
    // P_nm(a,b) as a block, built by Hermitian rank-one updates.
    Operator gram = Operator::Zero(n_fock * cutoff, n_fock * cutoff);
    Vector stacked(n_fock * cutoff);
    for (Eigen::Index idx = 0; idx < grid.size(); ++idx) {
        const Complex alpha = fock::weyl_alpha(grid.q(grid.j_of(idx)), grid.p(grid.k_of(idx)));
        Operator cols = engine.apply(alpha, block);
        for (Eigen::Index n = 0; n < cutoff; ++n) stacked.segment(n * n_fock, n_fock) = cols.col(n);
        gram.selfadjointView<Eigen::Lower>().rankUpdate(stacked, w);
    }
    gram.triangularView<Eigen::StrictlyUpper>() = gram.adjoint();

    Operator rec = Operator::Zero(n_fock, n_fock);
    for (Eigen::Index n = 0; n < cutoff; ++n)
        for (Eigen::Index m = 0; m < cutoff; ++m) {
            const auto pnm = gram.block(n * n_fock, m * n_fock, n_fock, n_fock);
            rec.noalias() += std::conj(t(m)) * t(n) * (pnm * a * pnm.adjoint());
        }
    rec *= std::abs(s.value.real());

    const double denom = ops::hs_norm(a);
    const double err = (denom > 0.0) ? ops::hs_norm(rec - a) / denom : ops::hs_norm(rec);
    return ReconstructionReport{std::move(rec), err};
}

} // namespace framequant::cg
