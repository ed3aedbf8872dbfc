// operator_space.hpp — Dense complex matrix algebra: Hilbert-Schmidt inner
// product, trace/operator/trace-class norms, canonical (singular value)
// decomposition, positive square root, matrix exponential.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "framequant/errors.hpp"
#include "framequant/tolerances.hpp"

namespace framequant {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace ops {

inline void require_square(const Operator& a, const char* who) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw std::invalid_argument(std::string(who) + ": square nonempty matrix required");
    }
}

inline void require_same_dim(const Operator& a, const Operator& b, const char* who) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
    }
}

// --------------------------- basic scalar maps ------------------------------

// <A,B> := tr(A^dag B), conjugate-linear in the first argument.
inline Complex hs_inner(const Operator& a, const Operator& b) {
    require_same_dim(a, b, "hs_inner");
    return (a.adjoint() * b).trace();
}

inline double hs_norm(const Operator& a) {
    return a.norm(); // Frobenius = Hilbert-Schmidt
}

inline Complex trace(const Operator& a) {
    require_square(a, "trace");
    return a.trace();
}

inline Operator adjoint(const Operator& a) {
    return a.adjoint();
}

inline Eigen::VectorXd singular_values(const Operator& a) {
    return Eigen::JacobiSVD<Operator>(a).singularValues();
}

// Largest singular value.
inline double op_norm(const Operator& a) {
    require_square(a, "op_norm");
    if (a.isZero(0.0)) return 0.0;
    return singular_values(a)(0);
}

// Sum of singular values.
inline double trace_norm(const Operator& a) {
    require_square(a, "trace_norm");
    return singular_values(a).sum();
}

// ------------------------------ predicates ----------------------------------

inline bool is_hermitian(const Operator& a, double tol = tol::identity) {
    if (a.rows() != a.cols()) return false;
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

inline bool is_positive(const Operator& a, double tol = tol::identity) {
    if (!is_hermitian(a, tol)) return false;
    Eigen::SelfAdjointEigenSolver<Operator> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

inline bool is_unitary(const Operator& a, double tol = tol::identity) {
    if (a.rows() != a.cols()) return false;
    Operator d = a.adjoint() * a - Operator::Identity(a.rows(), a.cols());
    return d.cwiseAbs().maxCoeff() <= tol;
}

// ------------------------- canonical decomposition --------------------------

// A = sum_n tau_n |phi_n><psi_n| with tau_n >= 0 descending; phi = left
// singular vectors (columns), psi = right singular vectors (columns).
struct CanonicalDecomposition {
    Eigen::VectorXd singular_values;
    Operator left_vectors;
    Operator right_vectors;

    Operator reconstruct() const {
        return left_vectors * singular_values.asDiagonal() * right_vectors.adjoint();
    }
};

inline CanonicalDecomposition canonical_decompose(const Operator& a) {
    require_square(a, "canonical_decompose");
    Eigen::JacobiSVD<Operator> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return CanonicalDecomposition{svd.singularValues(), svd.matrixU(), svd.matrixV()};
}

// ------------------------- functions of a matrix ----------------------------

// Positive square root of a positive semidefinite matrix. Eigenvalues in
// [-tol, 0) are clamped to zero; anything lower signals NotPositive.
inline Operator positive_sqrt(const Operator& a, double tol = tol::identity) {
    require_square(a, "positive_sqrt");
    if (!is_hermitian(a, tol)) {
        throw NotPositive("positive_sqrt: input is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Operator> es(a);
    Eigen::VectorXd ev = es.eigenvalues();
    if (ev.minCoeff() < -tol * std::max(1.0, ev.cwiseAbs().maxCoeff())) {
        throw NotPositive("positive_sqrt: negative eigenvalue " + std::to_string(ev.minCoeff()));
    }
    Eigen::VectorXd root = ev.cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

// Matrix exponential (scaling-and-squaring Pade behind Eigen's interface).
inline Operator matrix_exp(const Operator& a) {
    require_square(a, "matrix_exp");
    return a.exp();
}

// ------------------------------ small helpers -------------------------------

inline Operator identity(Eigen::Index n) { return Operator::Identity(n, n); }

inline Vector basis_vector(Eigen::Index n, Eigen::Index i) {
    Vector v = Vector::Zero(n);
    v(i) = 1.0;
    return v;
}

// |phi><psi|
inline Operator rank_one(const Vector& phi, const Vector& psi) {
    return phi * psi.adjoint();
}

} // namespace ops
} // namespace framequant
