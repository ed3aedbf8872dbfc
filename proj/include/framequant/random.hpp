// random.hpp — Seeded deterministic random matrices and vectors.
// Generator is pinned: mt19937_64 driving an explicit Box-Muller transform,
// so identical seeds give identical streams on every platform.

#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "framequant/operator_space.hpp"

namespace framequant::rng {

using Engine = std::mt19937_64;

inline double uniform01(Engine& eng) {
    // 53-bit mantissa from the top bits of one 64-bit draw
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double gaussian(Engine& eng) {
    double u1 = 0.0;
    do { u1 = uniform01(eng); } while (u1 == 0.0);
    const double u2 = uniform01(eng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

inline Complex complex_gaussian(Engine& eng) {
    const double re = gaussian(eng);
    const double im = gaussian(eng);
    return {re, im};
}

inline Vector vector(Eigen::Index n, Engine& eng) {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = complex_gaussian(eng);
    return v;
}

inline Vector unit_vector(Eigen::Index n, Engine& eng) {
    Vector v = vector(n, eng);
    return v / v.norm();
}

inline Operator matrix(Eigen::Index n, Engine& eng) {
    Operator m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = complex_gaussian(eng);
    return m;
}

inline Operator hermitian(Eigen::Index n, Engine& eng) {
    Operator m = matrix(n, eng);
    return 0.5 * (m + m.adjoint());
}

inline Operator positive(Eigen::Index n, Engine& eng) {
    Operator m = matrix(n, eng);
    return m.adjoint() * m;
}

inline Operator unitary(Eigen::Index n, Engine& eng) {
    Eigen::HouseholderQR<Operator> qr(matrix(n, eng));
    Operator q = qr.householderQ();
    // fix the phase so the factorization is unique-ish
    Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < n; ++i) {
        Complex d = r(i, i);
        q.col(i) *= (std::abs(d) > 0.0) ? d / std::abs(d) : 1.0;
    }
    return q;
}

} // namespace framequant::rng
