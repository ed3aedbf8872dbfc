// group_rep.hpp — Finite groups, projective representations with multipliers,
// square-integrability diagnostics, wavelet transforms, and the two trace
// formulas. Ships the discrete Weyl-Heisenberg system on Z_d x Z_d.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "framequant/frame_engine.hpp"
#include "framequant/operator_space.hpp"
#include "framequant/point_set.hpp"
#include "framequant/random.hpp"

namespace framequant::groups {

// ------------------------------ group table ---------------------------------

struct FiniteGroupTable {
    Eigen::Index order = 0;
    Eigen::MatrixXi product;   // product(i, j) = index of g_i g_j
    Eigen::VectorXi inverse;
    Eigen::Index identity = 0;
    Eigen::VectorXd haar_weight;

    FiniteGroupTable(Eigen::MatrixXi prod, Eigen::VectorXi inv, Eigen::Index id,
                     Eigen::VectorXd weight)
        : order(prod.rows()), product(std::move(prod)), inverse(std::move(inv)),
          identity(id), haar_weight(std::move(weight)) {
        if (product.rows() != product.cols() || order == 0) {
            throw std::invalid_argument("FiniteGroupTable: product table must be square");
        }
        if (inverse.size() != order || haar_weight.size() != order) {
            throw std::invalid_argument("FiniteGroupTable: table size mismatch");
        }
        if (haar_weight.minCoeff() <= 0.0) {
            throw std::invalid_argument("FiniteGroupTable: Haar weights must be positive");
        }
        validate();
    }

    Eigen::Index mul(Eigen::Index a, Eigen::Index b) const { return product(a, b); }
    Eigen::Index inv(Eigen::Index a) const { return inverse(a); }

private:
    void validate() const {
        for (Eigen::Index g = 0; g < order; ++g) {
            if (mul(identity, g) != g || mul(g, identity) != g) {
                throw std::invalid_argument("FiniteGroupTable: identity is not neutral");
            }
            if (mul(g, inv(g)) != identity || mul(inv(g), g) != identity) {
                throw std::invalid_argument("FiniteGroupTable: inverse table inconsistent");
            }
        }
        // associativity: exhaustive up to order 100, coarse stride above
        Eigen::Index step = order <= 100 ? 1 : order / 37 + 1;
        for (Eigen::Index a = 0; a < order; a += step)
            for (Eigen::Index b = 0; b < order; b += step)
                for (Eigen::Index c = 0; c < order; c += step)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                        throw std::invalid_argument("FiniteGroupTable: product not associative");
                    }
    }
};

// ------------------------------- multiplier ---------------------------------

struct Multiplier {
    Operator table; // m(g, h), unit modulus

    explicit Multiplier(Operator t) : table(std::move(t)) {
        if (table.rows() != table.cols() || table.rows() == 0) {
            throw std::invalid_argument("Multiplier: square table required");
        }
    }

    Complex operator()(Eigen::Index g, Eigen::Index h) const { return table(g, h); }

    // |m| = 1, m(g,e) = m(e,g) = 1, and the cocycle identity
    // m(g1, g2 g3) m(g2, g3) = m(g1 g2, g3) m(g1, g2), exhaustively for small
    // groups. Returns the largest violation.
    double cocycle_residual(const FiniteGroupTable& group) const {
        const Eigen::Index n = group.order;
        double worst = 0.0;
        for (Eigen::Index g = 0; g < n; ++g) {
            worst = std::max(worst, std::abs(std::abs(table(g, group.identity)) - 1.0));
            worst = std::max(worst, std::abs(table(g, group.identity) - Complex(1.0)));
            worst = std::max(worst, std::abs(table(group.identity, g) - Complex(1.0)));
            for (Eigen::Index h = 0; h < n; ++h) {
                worst = std::max(worst, std::abs(std::abs(table(g, h)) - 1.0));
            }
        }
        Eigen::Index step = n <= 100 ? 1 : n / 37 + 1;
        for (Eigen::Index a = 0; a < n; a += step)
            for (Eigen::Index b = 0; b < n; b += step)
                for (Eigen::Index c = 0; c < n; c += step) {
                    Complex lhs = table(a, group.mul(b, c)) * table(b, c);
                    Complex rhs = table(group.mul(a, b), c) * table(a, b);
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
        return worst;
    }
};

// --------------------------- projective rep ---------------------------------

class ProjectiveRep {
public:
    ProjectiveRep(std::shared_ptr<const FiniteGroupTable> group,
                  std::vector<Operator> matrices, Multiplier multiplier,
                  double validation_tol = 1e-12)
        : group_(std::move(group)), matrices_(std::move(matrices)),
          multiplier_(std::move(multiplier)) {
        if (!group_) throw std::invalid_argument("ProjectiveRep: null group");
        if (static_cast<Eigen::Index>(matrices_.size()) != group_->order) {
            throw std::invalid_argument("ProjectiveRep: one matrix per group element");
        }
        dim_ = matrices_.front().rows();
        validate(validation_tol);
        point_set_ = make_point_set();
        duflo_constant_ = estimate_duflo_constant();
    }

    const FiniteGroupTable& group() const { return *group_; }
    Eigen::Index order() const { return group_->order; }
    Eigen::Index dim() const { return dim_; }
    const Operator& matrix(Eigen::Index g) const { return matrices_[static_cast<std::size_t>(g)]; }
    const Multiplier& multiplier() const { return multiplier_; }
    double duflo_constant() const { return duflo_constant_; }
    double weight(Eigen::Index g) const { return group_->haar_weight(g); }
    const PointSetPtr& point_set() const { return point_set_; }

    // ||D_U psi|| = d_U ||psi|| for a unimodular group.
    double duflo_norm(const Vector& psi) const { return duflo_constant_ * psi.norm(); }

    // Dimension of {A : [A, U(g)] = 0 for all g}; 1 certifies irreducibility.
    Eigen::Index commutant_dimension(double tol = 1e-8) const {
        const Eigen::Index n = dim_;
        Eigen::MatrixXcd stacked(group_->order * n * n, n * n);
        Operator eye = Operator::Identity(n, n);
        for (Eigen::Index g = 0; g < group_->order; ++g) {
            // vec(AU - UA) = (U^T kron I - I kron U) vec(A), column-major vec
            const Operator& u = matrix(g);
            Eigen::MatrixXcd block(n * n, n * n);
            for (Eigen::Index col = 0; col < n; ++col)
                for (Eigen::Index row = 0; row < n; ++row) {
                    for (Eigen::Index c2 = 0; c2 < n; ++c2)
                        for (Eigen::Index r2 = 0; r2 < n; ++r2) {
                            Complex v = u(c2, col) * eye(row, r2) - eye(c2, col) * u(row, r2);
                            block(col * n + row, c2 * n + r2) = v;
                        }
                }
            stacked.middleRows(g * n * n, n * n) = block;
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
        Eigen::Index null_dim = 0;
        double scale = svd.singularValues()(0);
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
            if (svd.singularValues()(i) <= tol * scale) ++null_dim;
        }
        return null_dim;
    }

private:
    void validate(double tol) const {
        for (const Operator& u : matrices_) {
            if (u.rows() != dim_ || u.cols() != dim_) {
                throw std::invalid_argument("ProjectiveRep: matrices of mixed dimension");
            }
        }
        const Operator eye = Operator::Identity(dim_, dim_);
        if ((matrices_[static_cast<std::size_t>(group_->identity)] - eye).cwiseAbs().maxCoeff() > tol) {
            throw std::invalid_argument("ProjectiveRep: U(e) != I");
        }
        for (Eigen::Index g = 0; g < group_->order; ++g) {
            if (!ops::is_unitary(matrix(g), tol)) {
                throw std::invalid_argument("ProjectiveRep: U(g) not unitary at g=" + std::to_string(g));
            }
        }
        for (Eigen::Index g = 0; g < group_->order; ++g)
            for (Eigen::Index h = 0; h < group_->order; ++h) {
                Operator lhs = multiplier_(g, h) * matrix(g) * matrix(h);
                if ((lhs - matrix(group_->mul(g, h))).cwiseAbs().maxCoeff() > tol) {
                    throw std::invalid_argument("ProjectiveRep: projective relation fails");
                }
            }
    }

    PointSetPtr make_point_set() const {
        std::vector<std::string> labels(static_cast<std::size_t>(group_->order));
        for (Eigen::Index g = 0; g < group_->order; ++g) {
            labels[static_cast<std::size_t>(g)] = "g" + std::to_string(g);
        }
        return std::make_shared<const WeightedPointSet>(std::move(labels), group_->haar_weight);
    }

    // d_U^2 = sum_g mu(g) |<U(g) psi, phi>|^2 / (||psi||^2 ||phi||^2); averaged
    // over a few basis pairs so a fluke zero coefficient cannot skew it.
    double estimate_duflo_constant() const {
        double acc = 0.0;
        int count = 0;
        for (Eigen::Index i = 0; i < std::min<Eigen::Index>(dim_, 2); ++i)
            for (Eigen::Index j = 0; j < std::min<Eigen::Index>(dim_, 2); ++j) {
                Vector psi = ops::basis_vector(dim_, i);
                Vector phi = ops::basis_vector(dim_, j);
                double s = 0.0;
                for (Eigen::Index g = 0; g < group_->order; ++g) {
                    s += weight(g) * std::norm(phi.dot(matrix(g) * psi));
                }
                acc += s;
                ++count;
            }
        return std::sqrt(acc / count);
    }

    std::shared_ptr<const FiniteGroupTable> group_;
    std::vector<Operator> matrices_;
    Multiplier multiplier_;
    Eigen::Index dim_ = 0;
    double duflo_constant_ = 1.0;
    PointSetPtr point_set_;
};

// -------------------- discrete Weyl-Heisenberg system -----------------------

// Modular inverse via extended Euclid (d odd, gcd(2, d) = 1 guaranteed).
inline Eigen::Index mod_inverse(Eigen::Index a, Eigen::Index m) {
    Eigen::Index t = 0, new_t = 1, r = m, new_r = a % m;
    while (new_r != 0) {
        Eigen::Index q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
    return (t % m + m) % m;
}

// U(q,p) = omega^{-2^{-1} qp} Z^p X^q on C^d, with X the cyclic shift
// (X e_j = e_{j+1 mod d}), Z = diag(omega^j), omega = exp(2 pi i / d).
// Z_d x Z_d carries uniform Haar weight 1/d, which makes d_U = 1; the
// multiplier is m((q,p),(q',p')) = omega^{2^{-1}(q p' - p q')}.
inline ProjectiveRep weyl_heisenberg_finite(Eigen::Index d) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("weyl_heisenberg_finite: d must be odd and >= 3");
    }
    const Eigen::Index n = d * d;
    const Eigen::Index inv2 = mod_inverse(2, d);
    const Complex omega = std::exp(Complex(0.0, 2.0 * std::numbers::pi / static_cast<double>(d)));
    auto idx = [d](Eigen::Index q, Eigen::Index p) { return q * d + p; };

    Eigen::MatrixXi product(n, n);
    Eigen::VectorXi inverse(n);
    for (Eigen::Index q = 0; q < d; ++q)
        for (Eigen::Index p = 0; p < d; ++p) {
            inverse(idx(q, p)) = static_cast<int>(idx((d - q) % d, (d - p) % d));
            for (Eigen::Index q2 = 0; q2 < d; ++q2)
                for (Eigen::Index p2 = 0; p2 < d; ++p2) {
                    product(idx(q, p), idx(q2, p2)) =
                        static_cast<int>(idx((q + q2) % d, (p + p2) % d));
                }
        }
    auto group = std::make_shared<const FiniteGroupTable>(
        std::move(product), std::move(inverse), idx(0, 0),
        Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(d)));

    Operator x_shift = Operator::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) x_shift((j + 1) % d, j) = 1.0;
    Operator z_clock = Operator::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) z_clock(j, j) = std::pow(omega, static_cast<double>(j));

    auto omega_pow = [&](Eigen::Index e) {
        e = ((e % d) + d) % d;
        return std::exp(Complex(0.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(d)));
    };

    std::vector<Operator> mats(static_cast<std::size_t>(n));
    for (Eigen::Index q = 0; q < d; ++q) {
        Operator xq = Operator::Identity(d, d);
        for (Eigen::Index k = 0; k < q; ++k) xq = x_shift * xq;
        for (Eigen::Index p = 0; p < d; ++p) {
            Operator zp = Operator::Identity(d, d);
            for (Eigen::Index k = 0; k < p; ++k) zp = z_clock * zp;
            mats[static_cast<std::size_t>(idx(q, p))] = omega_pow(-inv2 * q * p) * zp * xq;
        }
    }

    Operator mult_table(n, n);
    for (Eigen::Index q = 0; q < d; ++q)
        for (Eigen::Index p = 0; p < d; ++p)
            for (Eigen::Index q2 = 0; q2 < d; ++q2)
                for (Eigen::Index p2 = 0; p2 < d; ++p2) {
                    mult_table(idx(q, p), idx(q2, p2)) = omega_pow(inv2 * (q * p2 - p * q2));
                }

    return ProjectiveRep(group, std::move(mats), Multiplier(std::move(mult_table)));
}

// ------------------------------ coefficients --------------------------------

// c(g) = <U(g) psi, phi>.
inline PhaseFunction coefficient(const ProjectiveRep& rep, const Vector& psi, const Vector& phi) {
    if (psi.size() != rep.dim() || phi.size() != rep.dim()) {
        throw std::invalid_argument("coefficient: dimension mismatch");
    }
    Vector values(rep.order());
    for (Eigen::Index g = 0; g < rep.order(); ++g) {
        values(g) = (rep.matrix(g) * psi).dot(phi);
    }
    return PhaseFunction(rep.point_set(), values);
}

struct OrthogonalityReport {
    double residual = 0.0;       // worst violation over the test set
    double duflo_estimate = 0.0; // by-product estimate of d_U
};

// max over a fixed random test set of
// | sum_g mu(g) <phi1, U(g) psi1> <U(g) psi2, phi2> - d_U^2 <phi1,phi2><psi2,psi1> |.
inline OrthogonalityReport orthogonality_residual(const ProjectiveRep& rep,
                                                  int quadruples = 20,
                                                  std::uint64_t seed = 20240601) {
    rng::Engine eng(seed);
    const Eigen::Index n = rep.dim();
    const double du2 = rep.duflo_constant() * rep.duflo_constant();
    double worst = 0.0;
    double du2_acc = 0.0;
    for (int k = 0; k < quadruples; ++k) {
        Vector psi1 = rng::vector(n, eng), psi2 = rng::vector(n, eng);
        Vector phi1 = rng::vector(n, eng), phi2 = rng::vector(n, eng);
        Complex sum = 0.0;
        for (Eigen::Index g = 0; g < rep.order(); ++g) {
            Vector u1 = rep.matrix(g) * psi1;
            Vector u2 = rep.matrix(g) * psi2;
            sum += rep.weight(g) * phi1.dot(u1) * u2.dot(phi2);
        }
        Complex target = phi1.dot(phi2) * psi2.dot(psi1);
        worst = std::max(worst, std::abs(sum - du2 * target));

        double diag = 0.0;
        for (Eigen::Index g = 0; g < rep.order(); ++g) {
            diag += rep.weight(g) * std::norm((rep.matrix(g) * psi1).dot(phi1));
        }
        du2_acc += diag / (psi1.squaredNorm() * phi1.squaredNorm());
    }
    return {worst, std::sqrt(du2_acc / quadruples)};
}

// ------------------------- wavelet transform --------------------------------

// W_psi phi = ||D_U psi||^{-1} c_{psi, phi}; an isometry H -> L^2(G).
inline PhaseFunction wavelet_transform(const ProjectiveRep& rep, const Vector& psi,
                                       const Vector& phi) {
    const double dn = rep.duflo_norm(psi);
    if (dn == 0.0) throw std::invalid_argument("wavelet_transform: zero fiducial vector");
    PhaseFunction c = coefficient(rep, psi, phi);
    return PhaseFunction(c.points, c.values / dn);
}

// W_psi^* f = ||D_U psi||^{-1} sum_g mu(g) f(g) U(g) psi.
inline Vector wavelet_adjoint(const ProjectiveRep& rep, const Vector& psi,
                              const PhaseFunction& f) {
    const double dn = rep.duflo_norm(psi);
    if (dn == 0.0) throw std::invalid_argument("wavelet_adjoint: zero fiducial vector");
    if (!same_point_set(f.points, rep.point_set())) {
        throw std::invalid_argument("wavelet_adjoint: function not over this group");
    }
    Vector out = Vector::Zero(rep.dim());
    for (Eigen::Index g = 0; g < rep.order(); ++g) {
        out += rep.weight(g) * f.values(g) * (rep.matrix(g) * psi);
    }
    return out / dn;
}

// (R_m(g) f)(g') = m(g, g^{-1})^* m(g^{-1}, g') f(g^{-1} g').
inline PhaseFunction left_regular_m_rep(const ProjectiveRep& rep, Eigen::Index g,
                                        const PhaseFunction& f) {
    const auto& grp = rep.group();
    const auto& m = rep.multiplier();
    const Eigen::Index ginv = grp.inv(g);
    Vector out(rep.order());
    for (Eigen::Index gp = 0; gp < rep.order(); ++gp) {
        out(gp) = std::conj(m(g, ginv)) * m(ginv, gp) * f.values(grp.mul(ginv, gp));
    }
    return PhaseFunction(f.points, out);
}

// ------------------- kernels and weak-integral reconstruction ---------------

// kappa_psi(A; g, g') = ||D_U psi||^{-2} <U(g) psi, A U(g') psi>.
inline Complex rep_kernel(const ProjectiveRep& rep, const Vector& psi, const Operator& a,
                          Eigen::Index g, Eigen::Index g2) {
    const double dn = rep.duflo_norm(psi);
    if (dn == 0.0) throw std::invalid_argument("rep_kernel: zero fiducial vector");
    return (rep.matrix(g) * psi).dot(a * (rep.matrix(g2) * psi)) / (dn * dn);
}

inline Operator rep_kernel_matrix(const ProjectiveRep& rep, const Vector& psi, const Operator& a) {
    Operator k(rep.order(), rep.order());
    const double dn = rep.duflo_norm(psi);
    if (dn == 0.0) throw std::invalid_argument("rep_kernel_matrix: zero fiducial vector");
    std::vector<Vector> orbit(static_cast<std::size_t>(rep.order()));
    for (Eigen::Index g = 0; g < rep.order(); ++g) orbit[static_cast<std::size_t>(g)] = rep.matrix(g) * psi;
    for (Eigen::Index g = 0; g < rep.order(); ++g)
        for (Eigen::Index g2 = 0; g2 < rep.order(); ++g2) {
            k(g, g2) = orbit[static_cast<std::size_t>(g)].dot(a * orbit[static_cast<std::size_t>(g2)]) / (dn * dn);
        }
    return k;
}

// A = ||D_U psi||^{-2} sum_{g,g'} mu(g) mu(g') kappa(A;g,g') |U(g)psi><U(g')psi|.
inline Operator weak_integral_reconstruct(const ProjectiveRep& rep, const Vector& psi,
                                          const Operator& kernel) {
    if (kernel.rows() != rep.order() || kernel.cols() != rep.order()) {
        throw std::invalid_argument("weak_integral_reconstruct: kernel must be |G| x |G|");
    }
    const double dn = rep.duflo_norm(psi);
    if (dn == 0.0) throw std::invalid_argument("weak_integral_reconstruct: zero fiducial vector");
    std::vector<Vector> orbit(static_cast<std::size_t>(rep.order()));
    for (Eigen::Index g = 0; g < rep.order(); ++g) orbit[static_cast<std::size_t>(g)] = rep.matrix(g) * psi;
    Operator out = Operator::Zero(rep.dim(), rep.dim());
    for (Eigen::Index g = 0; g < rep.order(); ++g)
        for (Eigen::Index g2 = 0; g2 < rep.order(); ++g2) {
            out += rep.weight(g) * rep.weight(g2) * kernel(g, g2) *
                   ops::rank_one(orbit[static_cast<std::size_t>(g)], orbit[static_cast<std::size_t>(g2)]);
        }
    return out / (dn * dn);
}

// --------------------------- trace formulas ---------------------------------

// | sum_g mu(g) <U(g)psi, A U(g)phi> - tr(A) <D_U psi, D_U phi> |.
inline double first_trace_formula_residual(const ProjectiveRep& rep, const Vector& psi,
                                           const Vector& phi, const Operator& a) {
    Complex lhs = 0.0;
    for (Eigen::Index g = 0; g < rep.order(); ++g) {
        lhs += rep.weight(g) * (rep.matrix(g) * psi).dot(a * (rep.matrix(g) * phi));
    }
    const double du2 = rep.duflo_constant() * rep.duflo_constant();
    Complex rhs = a.trace() * du2 * psi.dot(phi);
    return std::abs(lhs - rhs);
}

// | d_U^{-2} sum_g mu(g) tr(U(g) T U(g)^dag A) - tr(A) tr(T) |.
inline double second_trace_formula_residual(const ProjectiveRep& rep, const Operator& a,
                                            const Operator& t) {
    Complex lhs = 0.0;
    for (Eigen::Index g = 0; g < rep.order(); ++g) {
        lhs += rep.weight(g) * (rep.matrix(g) * t * rep.matrix(g).adjoint() * a).trace();
    }
    const double du2 = rep.duflo_constant() * rep.duflo_constant();
    return std::abs(lhs / du2 - a.trace() * t.trace());
}

// ------------------------------ orbit frame ---------------------------------

// {||D_U psi||^{-1} U(g) psi}_{g in G} is a normalized tight frame in C^n.
inline frames::VectorFrame orbit_frame(const ProjectiveRep& rep, const Vector& psi) {
    const double dn = rep.duflo_norm(psi);
    if (dn == 0.0) throw std::invalid_argument("orbit_frame: zero fiducial vector");
    Operator vecs(rep.dim(), rep.order());
    for (Eigen::Index g = 0; g < rep.order(); ++g) {
        vecs.col(g) = rep.matrix(g) * psi / dn;
    }
    return frames::VectorFrame(rep.point_set(), std::move(vecs));
}

} // namespace framequant::groups
