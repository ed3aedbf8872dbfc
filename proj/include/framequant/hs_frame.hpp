// hs_frame.hpp — Tight frames {U(g1) T U(g2)^dag} in the Hilbert-Schmidt space,
// dequantization/quantization maps, star products, left/right/gamma kernels,
// trace and expectation formulas, intrinsic norms, pure-state classification.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "framequant/errors.hpp"
#include "framequant/group_rep.hpp"
#include "framequant/operator_space.hpp"
#include "framequant/point_set.hpp"

namespace framequant::hsf {

using BiPhaseFunction = PhaseFunction;

// Tight normalized frame {T(g1,g2) = U(g1) T U(g2)^dag} in B_2(H) over the
// product group G x G with product Haar weights. Requires ||T||_HS = 1.
class OperatorFrame {
public:
    OperatorFrame(std::shared_ptr<const groups::ProjectiveRep> rep, Operator analyzer,
                  double norm_tol = 1e-8)
        : rep_(std::move(rep)), analyzer_(std::move(analyzer)) {
        if (!rep_) throw std::invalid_argument("OperatorFrame: null representation");
        if (analyzer_.rows() != rep_->dim() || analyzer_.cols() != rep_->dim()) {
            throw std::invalid_argument("OperatorFrame: analyzer dimension mismatch");
        }
        if (std::abs(ops::hs_norm(analyzer_) - 1.0) > norm_tol) {
            throw InvalidFrame("OperatorFrame: analyzing operator must have unit HS norm");
        }
        const Eigen::Index ng = rep_->order();
        n_points_ = ng * ng;
        std::vector<std::string> labels(static_cast<std::size_t>(n_points_));
        Eigen::VectorXd weights(n_points_);
        for (Eigen::Index g1 = 0; g1 < ng; ++g1)
            for (Eigen::Index g2 = 0; g2 < ng; ++g2) {
                const Eigen::Index y = g1 * ng + g2;
                labels[static_cast<std::size_t>(y)] = "y" + std::to_string(g1) + "," + std::to_string(g2);
                weights(y) = rep_->weight(g1) * rep_->weight(g2);
            }
        points_ = std::make_shared<const WeightedPointSet>(std::move(labels), std::move(weights));
        if (n_points_ <= 1000) { // materialize T(y) for small phase spaces
            cache_.reserve(static_cast<std::size_t>(n_points_));
            for (Eigen::Index y = 0; y < n_points_; ++y) cache_.push_back(compute(y));
        }
    }

    const groups::ProjectiveRep& rep() const { return *rep_; }
    std::shared_ptr<const groups::ProjectiveRep> rep_ptr() const { return rep_; }
    const Operator& analyzer() const { return analyzer_; }
    const PointSetPtr& points() const { return points_; }
    Eigen::Index size() const { return n_points_; }
    Eigen::Index dim() const { return rep_->dim(); }

    Eigen::Index first(Eigen::Index y) const { return y / rep_->order(); }
    Eigen::Index second(Eigen::Index y) const { return y % rep_->order(); }
    Eigen::Index point(Eigen::Index g1, Eigen::Index g2) const { return g1 * rep_->order() + g2; }
    Eigen::Index diagonal_point(Eigen::Index g) const { return point(g, g); }
    double weight(Eigen::Index y) const { return points_->weights(y); }

    Operator element(Eigen::Index y) const {
        if (!cache_.empty()) return cache_[static_cast<std::size_t>(y)];
        return compute(y);
    }

    // Full element table for kernel-heavy loops; copies the cache or computes.
    std::vector<Operator> materialize() const {
        if (!cache_.empty()) return cache_;
        std::vector<Operator> out;
        out.reserve(static_cast<std::size_t>(n_points_));
        for (Eigen::Index y = 0; y < n_points_; ++y) out.push_back(compute(y));
        return out;
    }

    bool analyzer_self_adjoint(double tol = 1e-10) const {
        return ops::is_hermitian(analyzer_, tol);
    }

private:
    Operator compute(Eigen::Index y) const {
        return rep_->matrix(first(y)) * analyzer_ * rep_->matrix(second(y)).adjoint();
    }

    std::shared_ptr<const groups::ProjectiveRep> rep_;
    Operator analyzer_;
    PointSetPtr points_;
    Eigen::Index n_points_ = 0;
    std::vector<Operator> cache_;
};

// --------------------- dequantization / quantization -------------------------

// (D_T a)(g1,g2) = <T(g1,g2), a>_HS; an isometry B_2(H) -> L^2(G x G).
inline BiPhaseFunction dequantize(const OperatorFrame& frame, const Operator& a) {
    if (a.rows() != frame.dim() || a.cols() != frame.dim()) {
        throw std::invalid_argument("dequantize: dimension mismatch");
    }
    Vector values(frame.size());
    for (Eigen::Index y = 0; y < frame.size(); ++y) {
        values(y) = ops::hs_inner(frame.element(y), a);
    }
    return BiPhaseFunction(frame.points(), values);
}

// Q_T Phi = sum_y w(y) Phi(y) T(y); adjoint and pseudo-inverse of D_T.
inline Operator quantize(const OperatorFrame& frame, const BiPhaseFunction& Phi) {
    if (!same_point_set(Phi.points, frame.points())) {
        throw std::invalid_argument("quantize: point-set mismatch");
    }
    Operator out = Operator::Zero(frame.dim(), frame.dim());
    for (Eigen::Index y = 0; y < frame.size(); ++y) {
        out += frame.weight(y) * Phi.values(y) * frame.element(y);
    }
    return out;
}

// | <D_T a, D_S b>_{L^2} - <a,b>_HS <S,T>_HS |.
inline double orthogonality_check(const OperatorFrame& frame_t, const OperatorFrame& frame_s,
                                  const Operator& a, const Operator& b) {
    if (frame_t.rep_ptr() != frame_s.rep_ptr()) {
        throw std::invalid_argument("orthogonality_check: frames over different representations");
    }
    Complex lhs = inner(dequantize(frame_t, a), dequantize(frame_s, b));
    Complex rhs = ops::hs_inner(a, b) * ops::hs_inner(frame_s.analyzer(), frame_t.analyzer());
    return std::abs(lhs - rhs);
}

// ------------------------------ star product ---------------------------------

// kappa(y, y1, y2) = tr(T(y)^dag T(y1) T(y2)); the dual frame coincides with
// the frame itself (tight, normalized).
inline Complex star_kernel(const OperatorFrame& frame, Eigen::Index y, Eigen::Index y1,
                           Eigen::Index y2) {
    return ops::hs_inner(frame.element(y), frame.element(y1) * frame.element(y2));
}

// Operator-path star product: Phi1 * Phi2 = D_T((Q_T Phi1)(Q_T Phi2)).
inline BiPhaseFunction star_product(const OperatorFrame& frame, const BiPhaseFunction& f1,
                                    const BiPhaseFunction& f2) {
    return dequantize(frame, quantize(frame, f1) * quantize(frame, f2));
}

// Kernel-path star product, as the literal triple sum
// (Phi1 * Phi2)(y) = sum_{y1,y2} w(y1) w(y2) kappa(y,y1,y2) Phi1(y1) Phi2(y2)
// with every kappa(y,y1,y2) = tr(T(y)^dag T(y1) T(y2)) evaluated. Cubic in
// |G x G|; meant for small d.
inline BiPhaseFunction star_product_triple_sum(const OperatorFrame& frame,
                                               const BiPhaseFunction& f1,
                                               const BiPhaseFunction& f2) {
    const Eigen::Index n = frame.size();
    Vector u(n), v(n);
    for (Eigen::Index y = 0; y < n; ++y) {
        u(y) = frame.weight(y) * f1.values(y);
        v(y) = frame.weight(y) * f2.values(y);
    }
    const std::vector<Operator> mats = frame.materialize();
    std::vector<Operator> pair_products(static_cast<std::size_t>(n * n));
    for (Eigen::Index y1 = 0; y1 < n; ++y1)
        for (Eigen::Index y2 = 0; y2 < n; ++y2) {
            pair_products[static_cast<std::size_t>(y1 * n + y2)] =
                mats[static_cast<std::size_t>(y1)] * mats[static_cast<std::size_t>(y2)];
        }
    Vector out = Vector::Zero(n);
    for (Eigen::Index y = 0; y < n; ++y) {
        const Operator& ty = mats[static_cast<std::size_t>(y)];
        Complex acc = 0.0;
        for (Eigen::Index y1 = 0; y1 < n; ++y1)
            for (Eigen::Index y2 = 0; y2 < n; ++y2) {
                const Complex kappa =
                    (ty.conjugate().cwiseProduct(pair_products[static_cast<std::size_t>(y1 * n + y2)])).sum();
                acc += kappa * u(y1) * v(y2);
            }
        out(y) = acc;
    }
    return BiPhaseFunction(frame.points(), out);
}

// --------------------------- left/right kernels ------------------------------

// chi^L(A; y, y') = <T(y), A T(y')>_HS.
inline Complex left_kernel(const OperatorFrame& frame, const Operator& a, Eigen::Index y,
                           Eigen::Index y2) {
    return ops::hs_inner(frame.element(y), a * frame.element(y2));
}

// chi^R(A; y, y') = <T(y), T(y') A>_HS.
inline Complex right_kernel(const OperatorFrame& frame, const Operator& a, Eigen::Index y,
                            Eigen::Index y2) {
    return ops::hs_inner(frame.element(y), frame.element(y2) * a);
}

inline Operator left_kernel_matrix(const OperatorFrame& frame, const Operator& a) {
    const std::vector<Operator> mats = frame.materialize();
    Operator k(frame.size(), frame.size());
    for (Eigen::Index y = 0; y < frame.size(); ++y) {
        // column index is the primed argument
        Operator at = a * mats[static_cast<std::size_t>(y)];
        for (Eigen::Index y1 = 0; y1 < frame.size(); ++y1) {
            k(y1, y) = (mats[static_cast<std::size_t>(y1)].conjugate().cwiseProduct(at)).sum();
        }
    }
    return k;
}

inline Operator right_kernel_matrix(const OperatorFrame& frame, const Operator& a) {
    const std::vector<Operator> mats = frame.materialize();
    Operator k(frame.size(), frame.size());
    for (Eigen::Index y = 0; y < frame.size(); ++y) {
        Operator ta = mats[static_cast<std::size_t>(y)] * a;
        for (Eigen::Index y1 = 0; y1 < frame.size(); ++y1) {
            k(y1, y) = (mats[static_cast<std::size_t>(y1)].conjugate().cwiseProduct(ta)).sum();
        }
    }
    return k;
}

// (chi^L(A) Phi)(y) = sum_{y'} w(y') chi^L(A; y, y') Phi(y'); maps D_T b to D_T(A b).
inline BiPhaseFunction apply_left_kernel(const OperatorFrame& frame, const Operator& a,
                                         const BiPhaseFunction& Phi) {
    return dequantize(frame, a * quantize(frame, Phi));
}

inline BiPhaseFunction apply_right_kernel(const OperatorFrame& frame, const Operator& a,
                                          const BiPhaseFunction& Phi) {
    return dequantize(frame, quantize(frame, Phi) * a);
}

// Weighted composition (chi1 . chi2)(y1, y2) = sum_y w(y) chi1(y1, y) chi2(y, y2).
inline Operator compose_kernels(const OperatorFrame& frame, const Operator& k1, const Operator& k2) {
    return k1 * frame.points()->weights.cast<Complex>().asDiagonal() * k2;
}

// ------------------------------ gamma kernel ---------------------------------

// gamma_{T,S}(g, y) = <(UvU)(g) S, T(y)>_HS for a trace-one reference S
// (rank-one |psi><psi| in the standard setup).
inline Complex gamma_kernel(const OperatorFrame& frame, const Operator& s, Eigen::Index g,
                            Eigen::Index y, double norm_tol = 1e-8) {
    if (std::abs(s.trace() - Complex(1.0)) > norm_tol) {
        throw InvalidNormalization("gamma_kernel: reference operator must have unit trace");
    }
    const Operator& u = frame.rep().matrix(g);
    return ops::hs_inner(u * s * u.adjoint(), frame.element(y));
}

// gamma as a |G| x |G x G| matrix.
inline Operator gamma_matrix(const OperatorFrame& frame, const Operator& s,
                             double norm_tol = 1e-8) {
    if (std::abs(s.trace() - Complex(1.0)) > norm_tol) {
        throw InvalidNormalization("gamma_matrix: reference operator must have unit trace");
    }
    Operator out(frame.rep().order(), frame.size());
    for (Eigen::Index g = 0; g < frame.rep().order(); ++g) {
        const Operator& u = frame.rep().matrix(g);
        Operator moved = u * s * u.adjoint();
        for (Eigen::Index y = 0; y < frame.size(); ++y) {
            out(g, y) = ops::hs_inner(moved, frame.element(y));
        }
    }
    return out;
}

// tr(rho) = sum_g mu(g) sum_y w(y) gamma(g,y) (D_T rho)(y).
inline Complex trace_via_gamma(const OperatorFrame& frame, const Operator& s,
                               const BiPhaseFunction& rho_fn) {
    Operator gamma = gamma_matrix(frame, s);
    Complex acc = 0.0;
    for (Eigen::Index g = 0; g < frame.rep().order(); ++g) {
        Complex inner_sum = 0.0;
        for (Eigen::Index y = 0; y < frame.size(); ++y) {
            inner_sum += frame.weight(y) * gamma(g, y) * rho_fn.values(y);
        }
        acc += frame.rep().weight(g) * inner_sum;
    }
    return acc;
}

// tr(rho) = tr(T)^{* -1} sum_g mu(g) (D_T rho)(g, g); needs tr(T) != 0.
inline Complex trace_diagonal(const OperatorFrame& frame, const Operator& rho) {
    const Complex trt = frame.analyzer().trace();
    if (std::abs(trt) <= 1e-10) {
        throw DegenerateAnalyzer("trace_diagonal: analyzing operator is traceless");
    }
    BiPhaseFunction rho_fn = dequantize(frame, rho);
    Complex acc = 0.0;
    for (Eigen::Index g = 0; g < frame.rep().order(); ++g) {
        acc += frame.rep().weight(g) * rho_fn.values(frame.diagonal_point(g));
    }
    return acc / std::conj(trt);
}

// |tr(rho)| via the diagonal normalizer sqrt(sum_g mu(g) (D_T T)(g,g)).
inline double trace_abs_diagonal(const OperatorFrame& frame, const Operator& rho) {
    BiPhaseFunction t_fn = dequantize(frame, frame.analyzer());
    BiPhaseFunction rho_fn = dequantize(frame, rho);
    Complex denom = 0.0, num = 0.0;
    for (Eigen::Index g = 0; g < frame.rep().order(); ++g) {
        denom += frame.rep().weight(g) * t_fn.values(frame.diagonal_point(g));
        num += frame.rep().weight(g) * rho_fn.values(frame.diagonal_point(g));
    }
    if (std::abs(denom) <= 1e-20) {
        throw DegenerateAnalyzer("trace_abs_diagonal: vanishing diagonal normalizer");
    }
    return std::abs(num) / std::sqrt(std::abs(denom));
}

// ------------------------------ expectation ----------------------------------

enum class KernelSide { left, right };

// tr(A rho) as the triple sum over gamma, chi and the dequantized state.
inline Complex expectation(const OperatorFrame& frame, const Operator& fiducial_state,
                           const Operator& a, const Operator& rho,
                           KernelSide side = KernelSide::left) {
    Operator gamma = gamma_matrix(frame, fiducial_state);
    Operator chi = (side == KernelSide::left) ? left_kernel_matrix(frame, a)
                                              : right_kernel_matrix(frame, a);
    BiPhaseFunction rho_fn = dequantize(frame, rho);
    Vector w = frame.points()->weights.cast<Complex>();
    Vector chi_rho = chi * w.cwiseProduct(rho_fn.values);
    Complex acc = 0.0;
    for (Eigen::Index g = 0; g < frame.rep().order(); ++g) {
        Complex s = 0.0;
        for (Eigen::Index y = 0; y < frame.size(); ++y) {
            s += frame.weight(y) * gamma(g, y) * chi_rho(y);
        }
        acc += frame.rep().weight(g) * s;
    }
    return acc;
}

// ------------------------- intrinsic operator norm ---------------------------

// ||A|| as the largest |eigenvalue| of the weighted left-kernel matrix
// sqrt(w) chi^L(A) sqrt(w); requires A self-adjoint.
inline double operator_norm_via_kernel(const OperatorFrame& frame, const Operator& a,
                                       double herm_tol = 1e-10) {
    if (!ops::is_hermitian(a, herm_tol)) {
        throw NotSelfAdjoint("operator_norm_via_kernel: operator must be self-adjoint");
    }
    Operator chi = left_kernel_matrix(frame, a);
    Eigen::VectorXd sw = frame.points()->weights.cwiseSqrt();
    Operator weighted = sw.cast<Complex>().asDiagonal() * chi * sw.cast<Complex>().asDiagonal();
    Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (weighted + weighted.adjoint()),
                                               Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

// ----------------------- Jordan and Lie kernel products ----------------------

inline Operator jordan_kernel(const OperatorFrame& frame, const Operator& a1, const Operator& a2,
                              double herm_tol = 1e-10) {
    if (!ops::is_hermitian(a1, herm_tol) || !ops::is_hermitian(a2, herm_tol)) {
        throw NotSelfAdjoint("jordan_kernel: operators must be self-adjoint");
    }
    Operator k1 = left_kernel_matrix(frame, a1);
    Operator k2 = left_kernel_matrix(frame, a2);
    return 0.5 * (compose_kernels(frame, k1, k2) + compose_kernels(frame, k2, k1));
}

inline Operator lie_kernel(const OperatorFrame& frame, const Operator& a1, const Operator& a2,
                           double herm_tol = 1e-10) {
    if (!ops::is_hermitian(a1, herm_tol) || !ops::is_hermitian(a2, herm_tol)) {
        throw NotSelfAdjoint("lie_kernel: operators must be self-adjoint");
    }
    Operator k1 = left_kernel_matrix(frame, a1);
    Operator k2 = left_kernel_matrix(frame, a2);
    return (compose_kernels(frame, k1, k2) - compose_kernels(frame, k2, k1)) / Complex(0.0, 1.0);
}

// ------------------------- involution and pure states ------------------------

// Phi^<> (g1,g2) = Phi(g2,g1)^*.
inline BiPhaseFunction involution(const OperatorFrame& frame, const BiPhaseFunction& Phi) {
    Vector out(frame.size());
    for (Eigen::Index y = 0; y < frame.size(); ++y) {
        out(y) = std::conj(Phi.values(frame.point(frame.second(y), frame.first(y))));
    }
    return BiPhaseFunction(Phi.points, out);
}

// For self-adjoint T, Phi in Ran(D_T) is the image of a self-adjoint operator
// iff Phi agrees with its involution.
inline bool is_selfadjoint_image(const OperatorFrame& frame, const BiPhaseFunction& Phi,
                                 double tol = 1e-8) {
    if (!frame.analyzer_self_adjoint()) {
        throw NotSelfAdjoint("is_selfadjoint_image: analyzing operator must be self-adjoint");
    }
    BiPhaseFunction flipped = involution(frame, Phi);
    return norm(PhaseFunction(Phi.points, Phi.values - flipped.values)) <=
           tol * std::max(1.0, norm(Phi));
}

// Pure-state test: after projecting onto Ran(D_T), Phi must satisfy
// Phi = Phi^<>, Phi * Phi = Phi, and the gamma trace sum must equal one.
inline bool pure_state_test(const OperatorFrame& frame, const Vector& fiducial,
                            const BiPhaseFunction& Phi, double tol = 1e-7) {
    if (!frame.analyzer_self_adjoint()) {
        throw NotSelfAdjoint("pure_state_test: analyzing operator must be self-adjoint");
    }
    BiPhaseFunction projected = dequantize(frame, quantize(frame, Phi));
    const double scale = std::max(1.0, norm(projected));
    BiPhaseFunction flipped = involution(frame, projected);
    if (norm(PhaseFunction(projected.points, projected.values - flipped.values)) > tol * scale) {
        return false;
    }
    BiPhaseFunction squared = star_product(frame, projected, projected);
    if (norm(PhaseFunction(projected.points, squared.values - projected.values)) > tol * scale) {
        return false;
    }
    Operator proj = ops::rank_one(fiducial, fiducial) / fiducial.squaredNorm();
    Complex tr = trace_via_gamma(frame, proj, projected);
    return std::abs(tr - Complex(1.0)) <= std::sqrt(tol);
}

// --------------------------- intertwining with L_M ----------------------------

// M(g; g1, g2) = m(g^{-1}, g1) m(g^{-1}, g2)^*.
inline Complex lm_phase(const OperatorFrame& frame, Eigen::Index g, Eigen::Index g1,
                        Eigen::Index g2) {
    const auto& m = frame.rep().multiplier();
    const Eigen::Index ginv = frame.rep().group().inv(g);
    return m(ginv, g1) * std::conj(m(ginv, g2));
}

// (L_M(g) f)(g1,g2) = M(g;g1,g2) f(g^{-1} g1, g^{-1} g2).
inline BiPhaseFunction lm_action(const OperatorFrame& frame, Eigen::Index g,
                                 const BiPhaseFunction& f) {
    const auto& grp = frame.rep().group();
    const Eigen::Index ginv = grp.inv(g);
    Vector out(frame.size());
    for (Eigen::Index y = 0; y < frame.size(); ++y) {
        const Eigen::Index g1 = frame.first(y), g2 = frame.second(y);
        out(y) = lm_phase(frame, g, g1, g2) *
                 f.values(frame.point(grp.mul(ginv, g1), grp.mul(ginv, g2)));
    }
    return BiPhaseFunction(f.points, out);
}

// max over g in G and sampled a of || D_T((UvU)(g) a) - L_M(g) (D_T a) ||.
inline double intertwining_lm_residual(const OperatorFrame& frame, int n_random = 10,
                                       std::uint64_t seed = 20240607) {
    rng::Engine eng(seed);
    double worst = 0.0;
    for (int k = 0; k < n_random; ++k) {
        Operator a = rng::matrix(frame.dim(), eng);
        BiPhaseFunction da = dequantize(frame, a);
        for (Eigen::Index g = 0; g < frame.rep().order(); ++g) {
            const Operator& u = frame.rep().matrix(g);
            BiPhaseFunction lhs = dequantize(frame, u * a * u.adjoint());
            BiPhaseFunction rhs = lm_action(frame, g, da);
            worst = std::max(worst, (lhs.values - rhs.values).cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

// ---------------------------- kernel round trip -------------------------------

// chi^L(b) from D_T b through the star kernel, then D_T b back from chi^L(b)
// through gamma and delta(y1,y2) = <T(y1), T(y2)^dag>_HS; returns the worse of
// the two directions (max-abs residual).
inline double kernel_roundtrip(const OperatorFrame& frame, const Operator& b,
                               const Vector& fiducial) {
    const Eigen::Index n = frame.size();
    const std::vector<Operator> mats = frame.materialize();
    BiPhaseFunction bfn = dequantize(frame, b);

    // direction 1: chi^L(b; y1, y2) = sum_{y3} w(y3) kappa(y1, y3, y2) B(y3),
    // with the y3 sum evaluated kernel-wise
    Operator chi_direct = left_kernel_matrix(frame, b);
    Operator chi_from_b = Operator::Zero(n, n);
    for (Eigen::Index y2 = 0; y2 < n; ++y2) {
        for (Eigen::Index y3 = 0; y3 < n; ++y3) {
            Operator t32 = mats[static_cast<std::size_t>(y3)] * mats[static_cast<std::size_t>(y2)];
            const Complex coeff = frame.weight(y3) * bfn.values(y3);
            for (Eigen::Index y1 = 0; y1 < n; ++y1) {
                chi_from_b(y1, y2) +=
                    coeff * (mats[static_cast<std::size_t>(y1)].conjugate().cwiseProduct(t32)).sum();
            }
        }
    }
    double res1 = (chi_direct - chi_from_b).cwiseAbs().maxCoeff();

    // direction 2: B(y) = sum_{x,y1,y2} mu(x) w(y1) w(y2)
    //                     gamma(x,y1) chi^L(b;y1,y2) delta(y2,y)
    Operator proj = ops::rank_one(fiducial, fiducial) / fiducial.squaredNorm();
    Operator gamma = gamma_matrix(frame, proj);
    Operator delta(n, n);
    for (Eigen::Index y2 = 0; y2 < n; ++y2) {
        Operator t_adj = mats[static_cast<std::size_t>(y2)].adjoint();
        for (Eigen::Index y1 = 0; y1 < n; ++y1) {
            delta(y1, y2) = (mats[static_cast<std::size_t>(y1)].conjugate().cwiseProduct(t_adj)).sum();
        }
    }
    Vector mu = frame.rep().point_set()->weights.cast<Complex>();
    Vector w = frame.points()->weights.cast<Complex>();
    Eigen::RowVectorXcd u = (mu.transpose() * gamma).cwiseProduct(w.transpose()); // over y1
    Eigen::RowVectorXcd v = u * chi_direct;                                       // over y2
    Eigen::RowVectorXcd b_rec = v.cwiseProduct(w.transpose()) * delta;            // over y
    double res2 = (b_rec.transpose() - bfn.values).cwiseAbs().maxCoeff();

    return std::max(res1, res2);
}

} // namespace framequant::hsf
