#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "framequant/cahill_glauber.hpp"
#include "framequant/random.hpp"
#include "framequant/wigner_weyl.hpp"

using namespace framequant;
using namespace framequant::cg;
using Catch::Approx;

TEST_CASE("T_s family basics") {
    CHECK_THROWS_AS(SParameter(Complex(1.0, 0.0)), std::invalid_argument);

    // s = -1 is the vacuum projector
    Operator tm1 = t_s_operator(SParameter(Complex(-1.0, 0.0)), 20);
    Operator vac = ops::rank_one(ops::basis_vector(20, 0), ops::basis_vector(20, 0));
    CHECK((tm1 - vac).cwiseAbs().maxCoeff() < 1e-15);

    // s = 0 is twice the parity operator, entrywise
    Operator t0 = t_s_operator(SParameter(Complex(0.0, 0.0)), 20);
    CHECK((t0 - 2.0 * fock::parity(20)).cwiseAbs().maxCoeff() < 1e-14);

    // regimes
    CHECK(SParameter(Complex(-0.5, 0.0)).regime() == Regime::trace_class);
    CHECK(SParameter(Complex(0.0, 1.0)).regime() == Regime::bounded_only);
    CHECK(SParameter(Complex(0.5, 0.0)).regime() == Regime::unbounded);
    CHECK(SParameter(Complex(0.5, 0.0)).formal());
}

TEST_CASE("closed-form norms") {
    // s = -1: every quantity equals one
    auto rep1 = t_s_norm_report(SParameter(Complex(-1.0, 0.0)), 60);
    CHECK(rep1.op_norm == Approx(1.0).margin(1e-12));
    CHECK(rep1.hs_norm == Approx(1.0).margin(1e-12));
    CHECK(rep1.trace_norm == Approx(1.0).margin(1e-12));
    CHECK(std::abs(rep1.trace - Complex(1.0)) < 1e-12);

    // s = -1/2 at n_fock = 60
    auto rep = t_s_norm_report(SParameter(Complex(-0.5, 0.0)), 60);
    CHECK(rep.hs_norm == Approx(std::sqrt(2.0)).margin(1e-6));
    CHECK(rep.trace_norm == Approx(2.0).margin(1e-6));
    CHECK(std::abs(rep.trace - Complex(1.0)) < 1e-10);
    CHECK(rep.op_norm == Approx(4.0 / 3.0).margin(1e-10));
    CHECK(rep.hs_norm_closed == Approx(std::sqrt(2.0)).margin(1e-14));
    CHECK(rep.trace_norm_closed == Approx(2.0).margin(1e-14));

    // tail estimates dominate the actual truncation deficit
    CHECK(std::abs(rep.hs_norm - rep.hs_norm_closed) <= rep.hs_tail + 1e-14);
    CHECK(std::abs(rep.trace - rep.trace_closed) <= rep.trace_tail + 1e-14);

    CHECK_THROWS_AS(t_s_norm_report(SParameter(Complex(0.5, 0.0)), 20), std::invalid_argument);
}

TEST_CASE("hs norm converges geometrically in the truncation") {
    const SParameter s(Complex(-0.5, 0.0));
    const double limit = std::sqrt(2.0);
    const double abs_r = std::abs(s.ratio());

    // visible strict growth at small truncations
    double prev = 0.0;
    for (Eigen::Index n : {2, 6, 10}) {
        const double h = t_s_norm_report(s, n).hs_norm;
        CHECK(h > prev);
        CHECK(h < limit);
        prev = h;
    }

    // at the working sizes the limit is reached to rounding, with the
    // geometric tail bound |r|^{2n} controlling the deficit throughout
    for (Eigen::Index n : {20, 40, 60}) {
        const double h = t_s_norm_report(s, n).hs_norm;
        CHECK(h >= prev - 1e-15);
        CHECK(h <= limit + 1e-15);
        CHECK(limit - h <=
              std::pow(abs_r, 2.0 * static_cast<double>(n) - 1.0) / (1.0 - abs_r * abs_r) + 1e-15);
        prev = h;
    }
    CHECK(limit - prev < 1e-6);
}

TEST_CASE("displaced probes") {
    const Eigen::Index n = 60;
    fock::DisplacementEngine engine(n);

    // z = 0 leaves T_s alone
    SParameter s(Complex(-0.5, 0.0));
    CHECK((displaced_t_s(s, Complex(0.0, 0.0), engine) - t_s_operator(s, n)).norm() < 1e-12);

    // s = -1: coherent-state projector, idempotent within truncation error
    SParameter sm1(Complex(-1.0, 0.0));
    for (Complex z : {Complex(1.0, 0.3), Complex(-1.5, 1.0), Complex(0.0, 2.0)}) {
        Operator proj = displaced_t_s(sm1, z, engine);
        CHECK((proj * proj - proj).norm() < 1e-8);
        CHECK(std::abs(proj.trace() - Complex(1.0)) < 1e-10);
        // HS norm is displacement invariant
        CHECK(ops::hs_norm(displaced_t_s(s, z, engine)) ==
              Approx(ops::hs_norm(t_s_operator(s, n))).margin(1e-8));
    }

    CHECK(displaced_t_s_accurate(Complex(1.0, 0.0), 60));
    CHECK(!displaced_t_s_accurate(Complex(12.0, 0.0), 60));
}

TEST_CASE("Husimi values and positivity") {
    const Eigen::Index n = 40;
    Grid grid(6.0, 0.25);
    SParameter sm1(Complex(-1.0, 0.0));

    Operator vac_proj = ops::rank_one(fock::fock_state(n, 0), fock::fock_state(n, 0));
    QuasiDistribution husimi = quasi_distribution(vac_proj, sm1, grid, n);

    // value at the grid point (q, p) is exp(-|alpha|^2) with alpha = (q+ip)/sqrt(2)
    double worst = 0.0;
    for (Eigen::Index idx = 0; idx < grid.size(); ++idx) {
        const double q = grid.q(grid.j_of(idx)), p = grid.p(grid.k_of(idx));
        if (q * q + p * p > 8.0) continue; // |z| <= 2 sqrt(2): |alpha| <= 2
        const double expected = std::exp(-0.5 * (q * q + p * p));
        worst = std::max(worst, std::abs(husimi.values(idx) - Complex(expected)));
    }
    CHECK(worst < 1e-6);

    // positivity for a positive operator, and realness for Hermitian input
    rng::Engine eng(81);
    Operator pos = rng::positive(n, eng);
    QuasiDistribution hp = quasi_distribution(pos, sm1, grid, n);
    for (Eigen::Index idx = 0; idx < grid.size(); ++idx) {
        CHECK(hp.values(idx).real() >= -1e-10);
        CHECK(std::abs(hp.values(idx).imag()) < 1e-10 * pos.norm());
    }

    // zero operator maps to the zero function
    QuasiDistribution zq = quasi_distribution(Operator::Zero(n, n), sm1, grid, n);
    CHECK(zq.values.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("s = 0 reproduces the scaled Wigner distribution") {
    const Eigen::Index n = 40;
    Grid grid(4.0, 0.2);
    Operator vac_proj = ops::rank_one(fock::fock_state(n, 0), fock::fock_state(n, 0));
    QuasiDistribution q0 = quasi_distribution(vac_proj, SParameter(Complex(0.0, 0.0)), grid, n);

    auto vac = fock::sample_fock_state(0, 2.0 * grid.half_extent(), grid.spacing() / 4.0);
    wigner::WignerFunction w = wigner::wigner_distribution(vac, grid);

    double worst = 0.0;
    for (Eigen::Index idx = 0; idx < grid.size(); ++idx) {
        worst = std::max(worst,
                         std::abs(q0.values(idx) - 2.0 * std::numbers::pi * w.values(idx)));
    }
    CHECK(worst < 1e-5);
}

TEST_CASE("s = 0 values of the first excited state go negative") {
    const Eigen::Index n = 40;
    Grid grid(4.0, 0.25);
    Operator one_proj = ops::rank_one(fock::fock_state(n, 1), fock::fock_state(n, 1));
    QuasiDistribution q0 = quasi_distribution(one_proj, SParameter(Complex(0.0, 0.0)), grid, n);
    double min_val = 0.0;
    for (Eigen::Index i = 0; i < q0.values.size(); ++i) {
        min_val = std::min(min_val, q0.values(i).real());
    }
    CHECK(min_val < -0.1); // 2 pi times the Wigner dip at the origin
}

TEST_CASE("diagonal trace check") {
    const Eigen::Index n = 40;
    Grid grid(6.0, 0.25);
    SParameter s(Complex(-0.5, 0.0));

    Operator vac_proj = ops::rank_one(fock::fock_state(n, 0), fock::fock_state(n, 0));
    CHECK(diagonal_trace_check(vac_proj, s, grid, n) < 1e-3);

    Operator one_proj = ops::rank_one(fock::fock_state(n, 1), fock::fock_state(n, 1));
    CHECK(diagonal_trace_check(one_proj, s, grid, n) < 1e-3);

    // traceless operator integrates to (nearly) zero
    Operator traceless = Operator::Zero(n, n);
    traceless(0, 0) = 1.0;
    traceless(1, 1) = -1.0;
    CHECK(diagonal_trace_check(traceless, s, grid, n) < 1e-3);
}

TEST_CASE("tight-frame reconstruction roundtrip") {
    const Eigen::Index n = 30;
    Grid grid(5.0, 0.25);
    SParameter s(Complex(-0.5, 0.0));

    Operator vac_proj = ops::rank_one(fock::fock_state(n, 0), fock::fock_state(n, 0));
    auto rep = reconstruct(vac_proj, s, grid, n);
    CHECK(rep.relative_hs_error < 2e-2);

    Operator coherence = ops::rank_one(fock::fock_state(n, 0), fock::fock_state(n, 1));
    CHECK(reconstruct(coherence, s, grid, n).relative_hs_error < 2e-2);

    // s = -1 collapses to the non-diagonal coherent-state representation
    CHECK(reconstruct(coherence, SParameter(Complex(-1.0, 0.0)), grid, n).relative_hs_error <
          2e-2);

    // zero reconstructs to zero
    CHECK(ops::hs_norm(reconstruct(Operator::Zero(n, n), s, grid, n).reconstructed) < 1e-12);

    // error decreases with the grid step while the quadrature (rather than
    // the [-L, L] window) dominates; below that the error plateaus at the
    // window floor
    double prev = 1e9;
    for (double h : {2.5, 1.25, 0.625}) {
        const double err =
            reconstruct(vac_proj, s, Grid(5.0, h), n).relative_hs_error;
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-3);

    CHECK_THROWS_AS(reconstruct(vac_proj, SParameter(Complex(0.5, 0.0)), grid, n),
                    std::invalid_argument);
}

TEST_CASE("displacement covariance of quasi-distributions") {
    const Eigen::Index n = 40;
    Grid grid(6.0, 0.25);
    SParameter sm1(Complex(-1.0, 0.0));
    fock::DisplacementEngine engine(n);

    Operator a = ops::rank_one(fock::fock_state(n, 1), fock::fock_state(n, 1));
    QuasiDistribution base = quasi_distribution(a, sm1, grid, n);

    // displace by a lattice vector w = (4h, -2h): midpoints map to midpoints
    const double wq = 4.0 * grid.spacing(), wp = -2.0 * grid.spacing();
    Operator u = engine.matrix(fock::weyl_alpha(wq, wp));
    QuasiDistribution moved = quasi_distribution(u * a * u.adjoint(), sm1, grid, n);

    double worst = 0.0;
    for (Eigen::Index j = 8; j + 8 < grid.n_per_axis(); ++j)
        for (Eigen::Index k = 8; k + 8 < grid.n_per_axis(); ++k) {
            // moved(q, p) should equal base(q - wq, p - wp)
            const Eigen::Index src_j = j - 4, src_k = k + 2;
            worst = std::max(worst, std::abs(moved.values(grid.index(j, k)) -
                                             base.values(grid.index(src_j, src_k))));
        }
    CHECK(worst < 1e-8);
}
