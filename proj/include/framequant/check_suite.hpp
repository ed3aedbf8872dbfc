// check_suite.hpp — Named residual checks aggregating the library's identity
// suite; powers the command-line `check` report.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "framequant/cahill_glauber.hpp"
#include "framequant/fock.hpp"
#include "framequant/frame_engine.hpp"
#include "framequant/group_rep.hpp"
#include "framequant/hs_frame.hpp"
#include "framequant/operator_space.hpp"
#include "framequant/random.hpp"
#include "framequant/wigner_weyl.hpp"

namespace framequant::checks {

inline constexpr const char* library_version = "1.0.0";

struct SuiteConfig {
    Eigen::Index d = 3;
    Eigen::Index n_fock = 40;
    double grid_half_extent = 6.0;
    double grid_spacing = 0.2;
    std::uint64_t seed = 7;
    std::map<std::string, double> tolerance_overrides;

    void validate() const {
        if (d < 3 || d % 2 == 0) throw std::invalid_argument("config: d must be odd and >= 3");
        if (n_fock < 2) throw std::invalid_argument("config: n_fock must be >= 2");
        Grid probe(grid_half_extent, grid_spacing); // throws on a bad lattice
    }
};

struct CheckResult {
    std::string name;
    std::string math_ref;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

namespace detail {

// pinned 64-bit FNV-1a so per-check seeds do not depend on the platform hash
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct Check {
    std::string name;
    std::string math_ref;
    double tolerance;
    std::function<double(const SuiteConfig&, rng::Engine&)> run;
};

inline std::shared_ptr<const groups::ProjectiveRep> rep_for(const SuiteConfig& cfg) {
    return std::make_shared<const groups::ProjectiveRep>(groups::weyl_heisenberg_finite(cfg.d));
}

inline hsf::OperatorFrame default_frame(const SuiteConfig& cfg) {
    auto rep = rep_for(cfg);
    const Eigen::Index n = rep->dim();
    return hsf::OperatorFrame(rep,
                              ops::rank_one(ops::basis_vector(n, 0), ops::basis_vector(n, 0)));
}

inline std::vector<Check> build_checks() {
    using E = rng::Engine;
    std::vector<Check> list;
    auto add = [&](std::string name, std::string ref, double tol,
                   std::function<double(const SuiteConfig&, E&)> fn) {
        list.push_back(Check{std::move(name), std::move(ref), tol, std::move(fn)});
    };

    // ---------------------------- frame engine ------------------------------

    add("frame.trace_formula", "trace formula for frames", 1e-10,
        [](const SuiteConfig& cfg, E& eng) {
            auto rep = groups::weyl_heisenberg_finite(cfg.d);
            auto tight = groups::orbit_frame(rep, rng::unit_vector(cfg.d, eng));
            Operator loose_vecs(cfg.d, 2 * cfg.d + 1);
            for (Eigen::Index i = 0; i < loose_vecs.cols(); ++i) {
                loose_vecs.col(i) = rng::vector(cfg.d, eng);
            }
            frames::VectorFrame loose(WeightedPointSet::uniform(loose_vecs.cols(), 0.7),
                                      loose_vecs);
            double worst = 0.0;
            for (int k = 0; k < 20; ++k) {
                Operator a = rng::matrix(cfg.d, eng);
                worst = std::max(worst, std::abs(frames::trace_via_frame(tight, a) - a.trace()));
                worst = std::max(worst, std::abs(frames::trace_via_frame(loose, a) - a.trace()));
            }
            return worst;
        });

    add("frame.reconstruction", "dual-frame reconstruction formula", 1e-11,
        [](const SuiteConfig& cfg, E& eng) {
            Operator vecs(cfg.d, 3 * cfg.d);
            for (Eigen::Index i = 0; i < vecs.cols(); ++i) vecs.col(i) = rng::vector(cfg.d, eng);
            frames::VectorFrame fr(WeightedPointSet::uniform(vecs.cols(), 1.0), vecs);
            double worst = 0.0;
            for (int k = 0; k < 20; ++k) {
                Vector phi = rng::vector(cfg.d, eng);
                worst = std::max(
                    worst,
                    (frames::pseudo_inverse_apply(fr, frames::analyze(fr, phi)) - phi).norm());
            }
            return worst;
        });

    add("frame.range_projection", "reproducing-kernel projection idempotence", 1e-10,
        [](const SuiteConfig& cfg, E& eng) {
            Operator vecs(cfg.d, 2 * cfg.d + 1);
            for (Eigen::Index i = 0; i < vecs.cols(); ++i) vecs.col(i) = rng::vector(cfg.d, eng);
            frames::VectorFrame fr(WeightedPointSet::uniform(vecs.cols(), 1.0), vecs);
            double worst = 0.0;
            for (int k = 0; k < 10; ++k) {
                PhaseFunction f(fr.points(), rng::vector(vecs.cols(), eng));
                PhaseFunction p1 = frames::project_onto_range(fr, f);
                PhaseFunction p2 = frames::project_onto_range(fr, p1);
                worst = std::max(worst, (p2.values - p1.values).cwiseAbs().maxCoeff());
            }
            return worst;
        });

    // ----------------------------- group reps -------------------------------

    add("grouprep.orthogonality", "orthogonality relations", 1e-11,
        [](const SuiteConfig& cfg, E&) {
            return groups::orthogonality_residual(groups::weyl_heisenberg_finite(cfg.d), 20,
                                                  cfg.seed)
                .residual;
        });

    add("grouprep.duflo_constant", "Duflo-Moore normalization d_U = 1", 1e-11,
        [](const SuiteConfig& cfg, E&) {
            return std::abs(groups::orthogonality_residual(groups::weyl_heisenberg_finite(cfg.d),
                                                           10, cfg.seed)
                                .duflo_estimate -
                            1.0);
        });

    add("grouprep.multiplier_cocycle", "multiplier cocycle identity", 1e-12,
        [](const SuiteConfig& cfg, E&) {
            auto rep = groups::weyl_heisenberg_finite(cfg.d);
            return rep.multiplier().cocycle_residual(rep.group());
        });

    add("grouprep.irreducibility", "trivial commutant certificate", 0.5,
        [](const SuiteConfig& cfg, E&) {
            return std::abs(static_cast<double>(
                groups::weyl_heisenberg_finite(cfg.d).commutant_dimension() - 1));
        });

    add("grouprep.wavelet_isometry", "wavelet-transform isometry and inversion", 1e-11,
        [](const SuiteConfig& cfg, E& eng) {
            auto rep = groups::weyl_heisenberg_finite(cfg.d);
            double worst = 0.0;
            for (int k = 0; k < 10; ++k) {
                Vector psi = rng::unit_vector(cfg.d, eng);
                Vector phi = rng::vector(cfg.d, eng);
                PhaseFunction w = groups::wavelet_transform(rep, psi, phi);
                worst = std::max(worst, std::abs(norm(w) - phi.norm()));
                worst = std::max(worst, (groups::wavelet_adjoint(rep, psi, w) - phi).norm());
            }
            return worst;
        });

    add("grouprep.first_trace_formula", "first trace formula", 1e-10,
        [](const SuiteConfig& cfg, E& eng) {
            auto rep = groups::weyl_heisenberg_finite(cfg.d);
            double worst = 0.0;
            for (int k = 0; k < 10; ++k) {
                worst = std::max(worst, groups::first_trace_formula_residual(
                                            rep, rng::unit_vector(cfg.d, eng),
                                            rng::unit_vector(cfg.d, eng), rng::matrix(cfg.d, eng)));
            }
            return worst;
        });

    add("grouprep.second_trace_formula", "second trace formula", 1e-10,
        [](const SuiteConfig& cfg, E& eng) {
            auto rep = groups::weyl_heisenberg_finite(cfg.d);
            double worst = 0.0;
            for (int k = 0; k < 10; ++k) {
                worst = std::max(worst,
                                 groups::second_trace_formula_residual(
                                     rep, rng::matrix(cfg.d, eng), rng::matrix(cfg.d, eng)));
            }
            return worst;
        });

    add("grouprep.weak_reconstruction", "weak-integral reconstruction", 1e-10,
        [](const SuiteConfig& cfg, E& eng) {
            auto rep = groups::weyl_heisenberg_finite(cfg.d);
            Vector psi = rng::unit_vector(cfg.d, eng);
            double worst = 0.0;
            for (int k = 0; k < 5; ++k) {
                Operator a = rng::matrix(cfg.d, eng);
                Operator kmat = groups::rep_kernel_matrix(rep, psi, a);
                worst = std::max(worst,
                                 (groups::weak_integral_reconstruct(rep, psi, kmat) - a).norm());
            }
            return worst;
        });

    // ----------------------------- Wigner/Weyl ------------------------------

    add("wigner.isometry", "generalized Wigner transform isometry", 1e-11,
        [](const SuiteConfig& cfg, E& eng) {
            auto rep = groups::weyl_heisenberg_finite(cfg.d);
            double worst = 0.0;
            for (int k = 0; k < 30; ++k) {
                Operator a = rng::matrix(cfg.d, eng);
                worst = std::max(worst, std::abs(norm(wigner::generalized_wigner(rep, a)) -
                                                 ops::hs_norm(a)));
            }
            return worst;
        });

    add("wigner.weyl_inversion", "Weyl map inverts the Wigner transform", 1e-11,
        [](const SuiteConfig& cfg, E& eng) {
            auto rep = groups::weyl_heisenberg_finite(cfg.d);
            double worst = 0.0;
            for (int k = 0; k < 10; ++k) {
                Operator a = rng::matrix(cfg.d, eng);
                worst = std::max(
                    worst,
                    (wigner::weyl_map(rep, wigner::generalized_wigner(rep, a)) - a).norm());
            }
            return worst;
        });

    add("wigner.intertwining_tm", "Wigner transform intertwines UvU with T_m", 1e-11,
        [](const SuiteConfig& cfg, E& eng) {
            auto rep = groups::weyl_heisenberg_finite(cfg.d);
            double worst = 0.0;
            for (int k = 0; k < 5; ++k) {
                Operator a = rng::matrix(cfg.d, eng);
                PhaseFunction sa = wigner::generalized_wigner(rep, a);
                for (Eigen::Index g = 0; g < rep.order(); ++g) {
                    PhaseFunction lhs =
                        wigner::generalized_wigner(rep, wigner::uvu_action(rep, g, a));
                    PhaseFunction rhs = wigner::tm_action(rep, g, sa);
                    worst = std::max(worst, (lhs.values - rhs.values).cwiseAbs().maxCoeff());
                }
            }
            return worst;
        });

    add("wigner.symplectic_involution", "finite symplectic Fourier transform squares to one",
        1e-12, [](const SuiteConfig& cfg, E& eng) {
            auto rep = groups::weyl_heisenberg_finite(cfg.d);
            double worst = 0.0;
            for (int k = 0; k < 5; ++k) {
                PhaseFunction f(rep.point_set(), rng::vector(rep.order(), eng));
                PhaseFunction ff = wigner::symplectic_fourier_finite(
                    cfg.d, wigner::symplectic_fourier_finite(cfg.d, f));
                worst = std::max(worst, (ff.values - f.values).cwiseAbs().maxCoeff());
            }
            return worst;
        });

    add("wigner.surjectivity_rank", "transform rank equals dim(H)^2", 0.5,
        [](const SuiteConfig& cfg, E&) {
            auto rep = groups::weyl_heisenberg_finite(cfg.d);
            return std::abs(
                static_cast<double>(wigner::generalized_wigner_rank(rep) - cfg.d * cfg.d));
        });

    add("wigner.vacuum_gaussian", "vacuum distribution matches the Gaussian closed form", 1e-5,
        [](const SuiteConfig& cfg, E&) {
            Grid grid(cfg.grid_half_extent, cfg.grid_spacing);
            auto vac = fock::sample_fock_state(0, 2.0 * grid.half_extent(), grid.spacing() / 4.0);
            wigner::WignerFunction w = wigner::wigner_distribution(vac, grid);
            double worst = 0.0;
            for (Eigen::Index j = 0; j < grid.n_per_axis(); ++j)
                for (Eigen::Index k = 0; k < grid.n_per_axis(); ++k) {
                    const double q = grid.q(j), p = grid.p(k);
                    const double exact = std::exp(-q * q - p * p) / std::numbers::pi;
                    worst = std::max(worst, std::abs(w.at(j, k) - Complex(exact)));
                }
            return worst;
        });

    add("wigner.marginal_position", "position marginal matches |psi(q)|^2", 1e-4,
        [](const SuiteConfig& cfg, E&) {
            Grid grid(cfg.grid_half_extent, cfg.grid_spacing);
            auto coh = fock::sample_coherent(Complex(1.0, 0.5), 2.0 * grid.half_extent(),
                                             grid.spacing() / 4.0);
            wigner::WignerFunction w = wigner::wigner_distribution(coh, grid);
            Eigen::VectorXcd mp = wigner::marginal_p(w);
            double worst = 0.0;
            for (Eigen::Index j = 0; j < grid.n_per_axis(); ++j) {
                worst = std::max(worst, std::abs(mp(j).real() -
                                                 std::norm(wigner::value_at(coh, grid.q(j)))));
            }
            return worst;
        });

    add("wigner.moyal_identity", "Moyal identity by phase-space quadrature", 1e-3,
        [](const SuiteConfig& cfg, E& eng) {
            Grid grid(cfg.grid_half_extent, cfg.grid_spacing);
            const Eigen::Index band = 8;
            double worst = 0.0;
            for (int k = 0; k < 3; ++k) {
                Vector c1 = rng::vector(band, eng), d1 = rng::vector(band, eng);
                Vector c2 = rng::vector(band, eng), d2 = rng::vector(band, eng);
                auto f1 = fock::sample_fock_vector(c1, 2.0 * grid.half_extent(), grid.spacing() / 4.0);
                auto g1 = fock::sample_fock_vector(d1, 2.0 * grid.half_extent(), grid.spacing() / 4.0);
                auto f2 = fock::sample_fock_vector(c2, 2.0 * grid.half_extent(), grid.spacing() / 4.0);
                auto g2 = fock::sample_fock_vector(d2, 2.0 * grid.half_extent(), grid.spacing() / 4.0);
                Complex lhs = wigner::overlap(wigner::wigner_rank_one(f1, g1, grid),
                                              wigner::wigner_rank_one(f2, g2, grid));
                Complex rhs = c1.dot(c2) * d2.dot(d1) / (2.0 * std::numbers::pi);
                worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
            }
            return worst;
        });

    add("wigner.negativity_witness", "first excited state is negative at the origin", 1e-15,
        [](const SuiteConfig& cfg, E&) {
            Grid grid(cfg.grid_half_extent, cfg.grid_spacing);
            auto one = fock::sample_fock_state(1, 2.0 * grid.half_extent(), grid.spacing() / 4.0);
            wigner::WignerFunction w = wigner::wigner_distribution(one, grid);
            double min_val = 0.0;
            for (Eigen::Index i = 0; i < w.values.size(); ++i) {
                min_val = std::min(min_val, w.values(i).real());
            }
            return std::max(0.0, min_val + 0.05);
        });

    add("wigner.sup_bound", "Cauchy-Schwarz supremum bound", 1e-10,
        [](const SuiteConfig& cfg, E& eng) {
            Grid grid(cfg.grid_half_extent, cfg.grid_spacing);
            Vector c = rng::vector(6, eng);
            c /= c.norm();
            auto wf = fock::sample_fock_vector(c, 2.0 * grid.half_extent(), grid.spacing() / 4.0);
            wigner::WignerFunction w = wigner::wigner_distribution(wf, grid);
            return std::max(0.0,
                            w.values.cwiseAbs().maxCoeff() - 1.0 / std::numbers::pi);
        });

    // ------------------------------ HS frames -------------------------------

    add("hsframe.isometry", "tight-frame dequantization isometry", 1e-11,
        [](const SuiteConfig& cfg, E& eng) {
            auto rep = rep_for(cfg);
            const Eigen::Index n = rep->dim();
            std::vector<Operator> analyzers = {
                ops::rank_one(ops::basis_vector(n, 0), ops::basis_vector(n, 0)),
                rng::matrix(n, eng),
                rng::hermitian(n, eng),
            };
            double worst = 0.0;
            for (Operator t : analyzers) {
                t /= ops::hs_norm(t);
                hsf::OperatorFrame frame(rep, t);
                for (int k = 0; k < 10; ++k) {
                    Operator a = rng::matrix(n, eng);
                    worst = std::max(worst, std::abs(norm(hsf::dequantize(frame, a)) -
                                                     ops::hs_norm(a)));
                }
            }
            return worst;
        });

    add("hsframe.quantize_roundtrip", "quantization inverts dequantization", 1e-11,
        [](const SuiteConfig& cfg, E& eng) {
            hsf::OperatorFrame frame = default_frame(cfg);
            double worst = 0.0;
            for (int k = 0; k < 10; ++k) {
                Operator a = rng::matrix(cfg.d, eng);
                worst = std::max(
                    worst, (hsf::quantize(frame, hsf::dequantize(frame, a)) - a).norm());
            }
            return worst;
        });

    add("hsframe.orthogonality", "paired-frame orthogonality relation", 1e-10,
        [](const SuiteConfig& cfg, E& eng) {
            auto rep = rep_for(cfg);
            const Eigen::Index n = rep->dim();
            double worst = 0.0;
            for (int k = 0; k < 5; ++k) {
                Operator t = rng::matrix(n, eng), su = rng::matrix(n, eng);
                hsf::OperatorFrame f1(rep, Operator(t / ops::hs_norm(t)));
                hsf::OperatorFrame f2(rep, Operator(su / ops::hs_norm(su)));
                worst = std::max(worst, hsf::orthogonality_check(f1, f2, rng::matrix(n, eng),
                                                                 rng::matrix(n, eng)));
            }
            // HS-orthogonal analyzers give orthogonal ranges
            hsf::OperatorFrame f1(rep, ops::rank_one(ops::basis_vector(n, 0),
                                                     ops::basis_vector(n, 0)));
            hsf::OperatorFrame f2(rep, ops::rank_one(ops::basis_vector(n, 1),
                                                     ops::basis_vector(n, 0)));
            worst = std::max(worst, std::abs(inner(hsf::dequantize(f1, rng::matrix(n, eng)),
                                                   hsf::dequantize(f2, rng::matrix(n, eng)))));
            return worst;
        });

    add("hsframe.star_operator_path", "star product via quantize-multiply-dequantize", 1e-9,
        [](const SuiteConfig& cfg, E& eng) {
            hsf::OperatorFrame frame = default_frame(cfg);
            double worst = 0.0;
            for (int k = 0; k < 10; ++k) {
                Operator a = rng::matrix(cfg.d, eng), b = rng::matrix(cfg.d, eng);
                hsf::BiPhaseFunction lhs = hsf::star_product(frame, hsf::dequantize(frame, a),
                                                             hsf::dequantize(frame, b));
                hsf::BiPhaseFunction rhs = hsf::dequantize(frame, a * b);
                worst = std::max(worst, norm(PhaseFunction(lhs.points, lhs.values - rhs.values)));
            }
            return worst;
        });

    add("hsframe.star_kernel_path", "star product via the kernel triple sum", 1e-9,
        [](const SuiteConfig& cfg, E& eng) {
            hsf::OperatorFrame frame = default_frame(cfg);
            double worst = 0.0;
            for (int k = 0; k < 3; ++k) {
                Operator a = rng::matrix(cfg.d, eng), b = rng::matrix(cfg.d, eng);
                hsf::BiPhaseFunction lhs = hsf::star_product_triple_sum(
                    frame, hsf::dequantize(frame, a), hsf::dequantize(frame, b));
                hsf::BiPhaseFunction rhs = hsf::dequantize(frame, a * b);
                worst = std::max(worst, norm(PhaseFunction(lhs.points, lhs.values - rhs.values)));
            }
            return worst;
        });

    add("hsframe.star_range_projection", "star product factors through the range projection",
        1e-10, [](const SuiteConfig& cfg, E& eng) {
            hsf::OperatorFrame frame = default_frame(cfg);
            const Eigen::Index n2 = frame.size();
            double worst = 0.0;
            for (int k = 0; k < 3; ++k) {
                hsf::BiPhaseFunction f1(frame.points(), rng::vector(n2, eng));
                hsf::BiPhaseFunction f2(frame.points(), rng::vector(n2, eng));
                hsf::BiPhaseFunction p1 = hsf::dequantize(frame, hsf::quantize(frame, f1));
                hsf::BiPhaseFunction p2 = hsf::dequantize(frame, hsf::quantize(frame, f2));
                hsf::BiPhaseFunction s = hsf::star_product(frame, f1, f2);
                hsf::BiPhaseFunction sp = hsf::star_product(frame, p1, p2);
                worst = std::max(worst, (s.values - sp.values).cwiseAbs().maxCoeff());
            }
            return worst;
        });

    add("hsframe.kernel_roundtrip", "left kernel from and back to the frame transform", 1e-9,
        [](const SuiteConfig& cfg, E& eng) {
            hsf::OperatorFrame frame = default_frame(cfg);
            double worst = 0.0;
            for (int k = 0; k < 3; ++k) {
                worst = std::max(worst, hsf::kernel_roundtrip(frame, rng::matrix(cfg.d, eng),
                                                              ops::basis_vector(cfg.d, 0)));
            }
            return worst;
        });

    add("hsframe.gamma_trace", "trace via the gamma kernel", 1e-10,
        [](const SuiteConfig& cfg, E& eng) {
            hsf::OperatorFrame frame = default_frame(cfg);
            Vector psi = rng::unit_vector(cfg.d, eng);
            Operator psihat = ops::rank_one(psi, psi);
            double worst = 0.0;
            for (int k = 0; k < 5; ++k) {
                Operator rho = rng::matrix(cfg.d, eng);
                worst = std::max(
                    worst, std::abs(hsf::trace_via_gamma(frame, psihat,
                                                         hsf::dequantize(frame, rho)) -
                                    rho.trace()));
            }
            return worst;
        });

    add("hsframe.diagonal_trace", "trace from the diagonal restriction", 1e-10,
        [](const SuiteConfig& cfg, E& eng) {
            hsf::OperatorFrame frame = default_frame(cfg);
            double worst = 0.0;
            for (int k = 0; k < 5; ++k) {
                Operator rho = rng::matrix(cfg.d, eng);
                worst = std::max(worst, std::abs(hsf::trace_diagonal(frame, rho) - rho.trace()));
            }
            return worst;
        });

    add("hsframe.expectation", "expectation values through both kernel sides", 1e-9,
        [](const SuiteConfig& cfg, E& eng) {
            hsf::OperatorFrame frame = default_frame(cfg);
            Vector psi = rng::unit_vector(cfg.d, eng);
            Operator psihat = ops::rank_one(psi, psi);
            double worst = 0.0;
            for (int k = 0; k < 5; ++k) {
                Operator a = rng::hermitian(cfg.d, eng), rho = rng::hermitian(cfg.d, eng);
                Complex direct = (a * rho).trace();
                worst = std::max(worst, std::abs(hsf::expectation(frame, psihat, a, rho,
                                                                  hsf::KernelSide::left) -
                                                 direct));
                worst = std::max(worst, std::abs(hsf::expectation(frame, psihat, a, rho,
                                                                  hsf::KernelSide::right) -
                                                 direct));
            }
            return worst;
        });

    add("hsframe.intrinsic_norm", "operator norm from the weighted kernel spectrum", 1e-8,
        [](const SuiteConfig& cfg, E& eng) {
            hsf::OperatorFrame frame = default_frame(cfg);
            double worst = 0.0;
            for (int k = 0; k < 5; ++k) {
                Operator a = rng::hermitian(cfg.d, eng);
                worst = std::max(worst, std::abs(hsf::operator_norm_via_kernel(frame, a) -
                                                 ops::op_norm(a)));
            }
            return worst;
        });

    add("hsframe.jordan_lie", "Jordan and Lie kernel products", 1e-10,
        [](const SuiteConfig& cfg, E& eng) {
            hsf::OperatorFrame frame = default_frame(cfg);
            Operator a1 = rng::hermitian(cfg.d, eng), a2 = rng::hermitian(cfg.d, eng);
            Operator jordan_direct = hsf::left_kernel_matrix(
                frame, Operator(0.5 * (a1 * a2 + a2 * a1)));
            Operator lie_direct = hsf::left_kernel_matrix(
                frame, Operator((a1 * a2 - a2 * a1) / Complex(0.0, 1.0)));
            double worst = (hsf::jordan_kernel(frame, a1, a2) - jordan_direct)
                               .cwiseAbs()
                               .maxCoeff();
            worst = std::max(worst,
                             (hsf::lie_kernel(frame, a1, a2) - lie_direct).cwiseAbs().maxCoeff());
            return worst;
        });

    add("hsframe.involution", "involution represents the operator adjoint", 1e-11,
        [](const SuiteConfig& cfg, E& eng) {
            hsf::OperatorFrame frame = default_frame(cfg);
            double worst = 0.0;
            for (int k = 0; k < 5; ++k) {
                Operator a = rng::matrix(cfg.d, eng);
                hsf::BiPhaseFunction lhs = hsf::dequantize(frame, a.adjoint());
                hsf::BiPhaseFunction rhs = hsf::involution(frame, hsf::dequantize(frame, a));
                worst = std::max(worst, (lhs.values - rhs.values).cwiseAbs().maxCoeff());
            }
            return worst;
        });

    add("hsframe.pure_state_classifier", "pure-state characterization", 1e-15,
        [](const SuiteConfig& cfg, E& eng) {
            hsf::OperatorFrame frame = default_frame(cfg);
            Vector fid = ops::basis_vector(cfg.d, 0);
            int wrong = 0;
            for (int k = 0; k < 10; ++k) {
                Vector v = rng::unit_vector(cfg.d, eng);
                if (!hsf::pure_state_test(frame, fid, hsf::dequantize(frame, ops::rank_one(v, v)))) {
                    ++wrong;
                }
                Vector v2 = rng::unit_vector(cfg.d, eng);
                Operator mixed = 0.5 * ops::rank_one(v, v) + 0.5 * ops::rank_one(v2, v2);
                if (hsf::pure_state_test(frame, fid, hsf::dequantize(frame, mixed))) ++wrong;
            }
            return static_cast<double>(wrong);
        });

    add("hsframe.intertwining_lm", "dequantization intertwines UvU with L_M", 1e-11,
        [](const SuiteConfig& cfg, E&) {
            hsf::OperatorFrame frame = default_frame(cfg);
            return hsf::intertwining_lm_residual(frame, 5, 977);
        });

    // ---------------------------- Cahill-Glauber ----------------------------

    add("cg.special_points", "probe family at s = -1 and s = 0", 1e-14,
        [](const SuiteConfig& cfg, E&) {
            Operator tm1 = cg::t_s_operator(cg::SParameter(Complex(-1.0, 0.0)), cfg.n_fock);
            Operator vac = ops::rank_one(ops::basis_vector(cfg.n_fock, 0),
                                         ops::basis_vector(cfg.n_fock, 0));
            double worst = (tm1 - vac).cwiseAbs().maxCoeff();
            Operator t0 = cg::t_s_operator(cg::SParameter(Complex(0.0, 0.0)), cfg.n_fock);
            worst = std::max(worst, (t0 - 2.0 * fock::parity(cfg.n_fock)).cwiseAbs().maxCoeff());
            return worst;
        });

    add("cg.closed_form_norms", "Hilbert-Schmidt and trace norms of the probe family", 1e-6,
        [](const SuiteConfig&, E&) {
            auto rep = cg::t_s_norm_report(cg::SParameter(Complex(-0.5, 0.0)), 60);
            double worst = std::abs(rep.hs_norm - std::sqrt(2.0));
            worst = std::max(worst, std::abs(rep.trace_norm - 2.0));
            return worst;
        });

    add("cg.trace_and_op_norm", "unit trace and operator norm of the probe family", 1e-10,
        [](const SuiteConfig&, E&) {
            auto rep = cg::t_s_norm_report(cg::SParameter(Complex(-0.5, 0.0)), 60);
            double worst = std::abs(rep.trace - Complex(1.0));
            worst = std::max(worst, std::abs(rep.op_norm - 4.0 / 3.0));
            return worst;
        });

    add("cg.husimi_positivity", "husimi values of positive operators are nonnegative", 1e-10,
        [](const SuiteConfig& cfg, E& eng) {
            Grid grid(cfg.grid_half_extent, std::max(cfg.grid_spacing, 0.25));
            Operator pos = rng::positive(cfg.n_fock, eng);
            auto q = cg::quasi_distribution(pos, cg::SParameter(Complex(-1.0, 0.0)), grid,
                                            cfg.n_fock);
            double worst = 0.0;
            for (Eigen::Index i = 0; i < q.values.size(); ++i) {
                worst = std::max(worst, -q.values(i).real());
                worst = std::max(worst, std::abs(q.values(i).imag()) / pos.norm());
            }
            return std::max(0.0, worst);
        });

    add("cg.wigner_cross_check", "s = 0 values match the scaled Wigner distribution", 1e-5,
        [](const SuiteConfig& cfg, E&) {
            Grid grid(4.0, 0.2);
            Operator vac_proj = ops::rank_one(fock::fock_state(cfg.n_fock, 0),
                                              fock::fock_state(cfg.n_fock, 0));
            auto q0 = cg::quasi_distribution(vac_proj, cg::SParameter(Complex(0.0, 0.0)), grid,
                                             cfg.n_fock);
            auto vac = fock::sample_fock_state(0, 2.0 * grid.half_extent(), grid.spacing() / 4.0);
            wigner::WignerFunction w = wigner::wigner_distribution(vac, grid);
            return (q0.values - 2.0 * std::numbers::pi * w.values).cwiseAbs().maxCoeff();
        });

    add("cg.diagonal_trace", "phase-space integral of the quasi-distribution", 1e-3,
        [](const SuiteConfig& cfg, E&) {
            Grid grid(cfg.grid_half_extent, std::max(cfg.grid_spacing, 0.25));
            Operator one_proj = ops::rank_one(fock::fock_state(cfg.n_fock, 1),
                                              fock::fock_state(cfg.n_fock, 1));
            return cg::diagonal_trace_check(one_proj, cg::SParameter(Complex(-0.5, 0.0)), grid,
                                            cfg.n_fock);
        });

    add("cg.reconstruction", "tight-frame reconstruction roundtrip", 1e-2,
        [](const SuiteConfig& cfg, E&) {
            Grid grid(cfg.grid_half_extent, cfg.grid_spacing);
            cg::SParameter s(Complex(-0.5, 0.0));
            Operator vac_proj = ops::rank_one(fock::fock_state(cfg.n_fock, 0),
                                              fock::fock_state(cfg.n_fock, 0));
            Operator coh = ops::rank_one(fock::fock_state(cfg.n_fock, 0),
                                         fock::fock_state(cfg.n_fock, 1));
            double worst = cg::reconstruct(vac_proj, s, grid, cfg.n_fock).relative_hs_error;
            worst = std::max(worst,
                             cg::reconstruct(coh, s, grid, cfg.n_fock).relative_hs_error);
            return worst;
        });

    add("cg.husimi_value", "vacuum husimi value is a Gaussian in the coherent label", 1e-6,
        [](const SuiteConfig& cfg, E&) {
            Grid grid(4.0, 0.5);
            Operator vac_proj = ops::rank_one(fock::fock_state(cfg.n_fock, 0),
                                              fock::fock_state(cfg.n_fock, 0));
            auto q = cg::quasi_distribution(vac_proj, cg::SParameter(Complex(-1.0, 0.0)), grid,
                                            cfg.n_fock);
            double worst = 0.0;
            for (Eigen::Index idx = 0; idx < grid.size(); ++idx) {
                const double qq = grid.q(grid.j_of(idx)), pp = grid.p(grid.k_of(idx));
                if (qq * qq + pp * pp > 8.0) continue;
                worst = std::max(worst, std::abs(q.values(idx) -
                                                 Complex(std::exp(-0.5 * (qq * qq + pp * pp)))));
            }
            return worst;
        });

    return list;
}

inline int thread_budget() {
    if (const char* env = std::getenv("FRAMEQUANT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 2;
}

} // namespace detail

// Runs the full identity suite and returns one result per check, sorted by
// name. Each check draws from its own generator seeded by (config seed, check
// name), so results do not depend on scheduling.
inline std::vector<CheckResult> run_check_suite(const SuiteConfig& cfg) {
    cfg.validate();
    std::vector<detail::Check> checks = detail::build_checks();
    std::sort(checks.begin(), checks.end(),
              [](const detail::Check& a, const detail::Check& b) { return a.name < b.name; });

    std::vector<CheckResult> results(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= checks.size()) break;
            const detail::Check& c = checks[i];
            rng::Engine eng(cfg.seed ^ detail::fnv1a(c.name));
            double tol = c.tolerance;
            if (auto it = cfg.tolerance_overrides.find(c.name);
                it != cfg.tolerance_overrides.end()) {
                tol = it->second;
            }
            const double residual = c.run(cfg, eng);
            results[i] = CheckResult{c.name, c.math_ref, residual, tol, residual <= tol};
        }
    };

    const int n_threads = std::min<int>(detail::thread_budget(), static_cast<int>(checks.size()));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return results;
}

} // namespace framequant::checks
