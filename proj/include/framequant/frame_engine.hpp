// frame_engine.hpp — Frames over finite measure spaces: analysis/synthesis,
// metric operator, dual frame, reproducing kernels, trace via frame.

#pragma once

#include <Eigen/Dense>

#include <memory>
#include <utility>

#include "framequant/errors.hpp"
#include "framequant/operator_space.hpp"
#include "framequant/point_set.hpp"
#include "framequant/tolerances.hpp"

namespace framequant::frames {

// Indexed family {psi_x} of vectors in C^n over (X, mu). The metric operator
// M = sum_x mu(x) |psi_x><psi_x| and its inverse are cached at construction;
// the frame condition (smallest eigenvalue of M bounded away from zero) is
// enforced there.
class VectorFrame {
public:
    VectorFrame(PointSetPtr points, Operator vectors)
        : points_(std::move(points)), vectors_(std::move(vectors)) {
        if (!points_) throw std::invalid_argument("VectorFrame: null point set");
        if (vectors_.cols() != points_->size()) {
            throw std::invalid_argument("VectorFrame: one vector per point required");
        }
        if (vectors_.rows() == 0) {
            throw std::invalid_argument("VectorFrame: ambient dimension must be positive");
        }
        metric_ = vectors_ * points_->weights.cast<Complex>().asDiagonal() * vectors_.adjoint();
        Eigen::SelfAdjointEigenSolver<Operator> es(metric_);
        lower_ = es.eigenvalues().minCoeff();
        upper_ = es.eigenvalues().maxCoeff();
        if (lower_ <= tol::frame_degeneracy * upper_ || upper_ <= 0.0) {
            throw NotAFrame("VectorFrame: stability condition fails (alpha ~ 0)");
        }
        metric_inverse_ = es.eigenvectors() *
                          es.eigenvalues().cwiseInverse().cast<Complex>().asDiagonal() *
                          es.eigenvectors().adjoint();
    }

    const PointSetPtr& points() const { return points_; }
    Eigen::Index ambient_dim() const { return vectors_.rows(); }
    Eigen::Index size() const { return vectors_.cols(); }
    Vector vector_at(Eigen::Index x) const { return vectors_.col(x); }
    Vector dual_vector_at(Eigen::Index x) const { return metric_inverse_ * vectors_.col(x); }
    const Operator& vectors() const { return vectors_; }

    const Operator& metric_operator() const { return metric_; }
    const Operator& metric_inverse() const { return metric_inverse_; }
    std::pair<double, double> frame_bounds() const { return {lower_, upper_}; }
    double condition_number() const { return upper_ / lower_; }

    bool is_tight(double tol = 1e-10) const { return upper_ - lower_ <= tol * upper_; }

private:
    PointSetPtr points_;
    Operator vectors_; // ambient_dim x size, one column per point
    Operator metric_;
    Operator metric_inverse_;
    double lower_ = 0.0, upper_ = 0.0;
};

// Frame transform: (F phi)(x) = <psi_x, phi>.
inline PhaseFunction analyze(const VectorFrame& frame, const Vector& phi) {
    if (phi.size() != frame.ambient_dim()) {
        throw std::invalid_argument("analyze: dimension mismatch");
    }
    return PhaseFunction(frame.points(), frame.vectors().adjoint() * phi);
}

// Adjoint of analyze: F* Phi = sum_x mu(x) Phi(x) psi_x.
inline Vector synthesize(const VectorFrame& frame, const PhaseFunction& Phi) {
    if (!same_point_set(frame.points(), Phi.points)) {
        throw std::invalid_argument("synthesize: point-set mismatch");
    }
    return frame.vectors() *
           Phi.values.cwiseProduct(frame.points()->weights.cast<Complex>());
}

inline VectorFrame dual_frame(const VectorFrame& frame) {
    return VectorFrame(frame.points(), frame.metric_inverse() * frame.vectors());
}

// Pseudo-inverse applied to a function: M^{-1} F* Phi. Reconstructs phi from
// analyze(phi) and annihilates the orthogonal complement of Ran(F).
inline Vector pseudo_inverse_apply(const VectorFrame& frame, const PhaseFunction& Phi) {
    return frame.metric_inverse() * synthesize(frame, Phi);
}

// kappa(x, x') = <psi_x, psi^{x'}>.
inline Complex reproducing_kernel(const VectorFrame& frame, Eigen::Index x, Eigen::Index x2) {
    return frame.vector_at(x).dot(frame.dual_vector_at(x2));
}

// kappa(A; x, x') = <psi_x, A psi^{x'}>.
inline Complex operator_kernel(const VectorFrame& frame, const Operator& a,
                               Eigen::Index x, Eigen::Index x2) {
    if (a.rows() != frame.ambient_dim() || a.cols() != frame.ambient_dim()) {
        throw std::invalid_argument("operator_kernel: dimension mismatch");
    }
    return frame.vector_at(x).dot(a * frame.dual_vector_at(x2));
}

// Orthogonal projection onto Ran(F): P = F M^{-1} F*.
inline PhaseFunction project_onto_range(const VectorFrame& frame, const PhaseFunction& Phi) {
    return analyze(frame, pseudo_inverse_apply(frame, Phi));
}

// Apply kappa(A; ., .) as an integral kernel: (K Phi)(x) = sum_x' mu(x') kappa(A;x,x') Phi(x').
inline PhaseFunction apply_operator_kernel(const VectorFrame& frame, const Operator& a,
                                           const PhaseFunction& Phi) {
    // F A M^{-1} F* Phi, assembled without materializing the kernel matrix
    return analyze(frame, a * pseudo_inverse_apply(frame, Phi));
}

// tr(A) = sum_x mu(x) kappa(A; x, x).
inline Complex trace_via_frame(const VectorFrame& frame, const Operator& a) {
    if (a.rows() != frame.ambient_dim() || a.cols() != frame.ambient_dim()) {
        throw std::invalid_argument("trace_via_frame: dimension mismatch");
    }
    Operator am = a * frame.metric_inverse();
    Complex sum = 0.0;
    for (Eigen::Index x = 0; x < frame.size(); ++x) {
        sum += frame.points()->weights(x) * frame.vector_at(x).dot(am * frame.vector_at(x));
    }
    return sum;
}

} // namespace framequant::frames
