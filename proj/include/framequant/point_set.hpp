// point_set.hpp — Finite measure spaces and complex functions on them

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "framequant/operator_space.hpp"

namespace framequant {

// A finite measure space (X, mu): labeled atoms with strictly positive weights.
struct WeightedPointSet {
    std::vector<std::string> labels;
    Eigen::VectorXd weights;

    WeightedPointSet(std::vector<std::string> lab, Eigen::VectorXd w)
        : labels(std::move(lab)), weights(std::move(w)) {
        if (static_cast<Eigen::Index>(labels.size()) != weights.size()) {
            throw std::invalid_argument("WeightedPointSet: labels/weights size mismatch");
        }
        if (weights.size() == 0) {
            throw std::invalid_argument("WeightedPointSet: empty point set");
        }
        if (weights.minCoeff() <= 0.0) {
            throw std::invalid_argument("WeightedPointSet: weights must be strictly positive");
        }
        std::unordered_set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size()) {
            throw std::invalid_argument("WeightedPointSet: duplicate labels");
        }
    }

    Eigen::Index size() const { return weights.size(); }
    double total_mass() const { return weights.sum(); }

    static std::shared_ptr<const WeightedPointSet> uniform(Eigen::Index n, double weight,
                                                           const std::string& prefix = "x") {
        std::vector<std::string> lab(static_cast<std::size_t>(n));
        for (Eigen::Index i = 0; i < n; ++i) lab[static_cast<std::size_t>(i)] = prefix + std::to_string(i);
        return std::make_shared<const WeightedPointSet>(std::move(lab),
                                                        Eigen::VectorXd::Constant(n, weight));
    }
};

using PointSetPtr = std::shared_ptr<const WeightedPointSet>;

inline bool same_point_set(const PointSetPtr& a, const PointSetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->labels == b->labels && a->weights == b->weights;
}

// Complex-valued function on a WeightedPointSet, carrying the weighted
// L^2 structure <F,G> = sum_x mu(x) conj(F(x)) G(x).
struct PhaseFunction {
    PointSetPtr points;
    Vector values;

    PhaseFunction(PointSetPtr pts, Vector vals)
        : points(std::move(pts)), values(std::move(vals)) {
        if (!points) throw std::invalid_argument("PhaseFunction: null point set");
        if (values.size() != points->size()) {
            throw std::invalid_argument("PhaseFunction: values/points size mismatch");
        }
    }

    static PhaseFunction zero(PointSetPtr pts) {
        Eigen::Index n = pts->size();
        return PhaseFunction(std::move(pts), Vector::Zero(n));
    }

    Eigen::Index size() const { return values.size(); }
};

inline Complex inner(const PhaseFunction& f, const PhaseFunction& g) {
    if (!same_point_set(f.points, g.points)) {
        throw std::invalid_argument("PhaseFunction inner: point-set mismatch");
    }
    return (f.values.conjugate().cwiseProduct(g.values)
                .cwiseProduct(f.points->weights.cast<Complex>()))
        .sum();
}

inline double norm(const PhaseFunction& f) {
    return std::sqrt(std::abs(
        (f.values.cwiseAbs2().cwiseProduct(f.points->weights)).sum()));
}

} // namespace framequant
