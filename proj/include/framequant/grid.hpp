// grid.hpp — Uniform midpoint lattice on the phase-space square [-L, L]^2,
// carrying the Haar normalization h^2/(2 pi) per cell.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>

#include "framequant/point_set.hpp"

namespace framequant {

class Grid {
public:
    Grid(double half_extent, double spacing)
        : half_extent_(half_extent), spacing_(spacing) {
        if (half_extent <= 0.0 || spacing <= 0.0) {
            throw std::invalid_argument("Grid: half_extent and spacing must be positive");
        }
        const double ratio = 2.0 * half_extent / spacing;
        n_per_axis_ = static_cast<Eigen::Index>(std::llround(ratio));
        if (std::abs(ratio - static_cast<double>(n_per_axis_)) > 1e-9 ||
            n_per_axis_ <= 0 || n_per_axis_ % 2 != 0) {
            throw std::invalid_argument("Grid: 2L/h must be a positive even integer");
        }
    }

    double half_extent() const { return half_extent_; }
    double spacing() const { return spacing_; }
    Eigen::Index n_per_axis() const { return n_per_axis_; }
    Eigen::Index size() const { return n_per_axis_ * n_per_axis_; }

    // cell midpoints; the lattice is symmetric about the origin
    double q(Eigen::Index j) const { return -half_extent_ + (static_cast<double>(j) + 0.5) * spacing_; }
    double p(Eigen::Index k) const { return q(k); }

    Eigen::Index index(Eigen::Index j, Eigen::Index k) const { return j * n_per_axis_ + k; }
    Eigen::Index j_of(Eigen::Index idx) const { return idx / n_per_axis_; }
    Eigen::Index k_of(Eigen::Index idx) const { return idx % n_per_axis_; }

    double cell_weight() const { return spacing_ * spacing_ / (2.0 * std::numbers::pi); }
    double cell_area() const { return spacing_ * spacing_; }

    // (X, mu) view with the Haar weight h^2/(2 pi) per atom
    PointSetPtr point_set() const {
        if (!point_set_) {
            std::vector<std::string> labels(static_cast<std::size_t>(size()));
            for (Eigen::Index i = 0; i < size(); ++i) {
                labels[static_cast<std::size_t>(i)] =
                    "z" + std::to_string(j_of(i)) + "," + std::to_string(k_of(i));
            }
            point_set_ = std::make_shared<const WeightedPointSet>(
                std::move(labels), Eigen::VectorXd::Constant(size(), cell_weight()));
        }
        return point_set_;
    }

    bool operator==(const Grid& other) const {
        return half_extent_ == other.half_extent_ && spacing_ == other.spacing_;
    }

private:
    double half_extent_;
    double spacing_;
    Eigen::Index n_per_axis_;
    mutable PointSetPtr point_set_;
};

} // namespace framequant
