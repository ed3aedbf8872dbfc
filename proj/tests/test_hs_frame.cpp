#include <catch2/catch_amalgamated.hpp>

#include <memory>

#include "framequant/hs_frame.hpp"
#include "framequant/random.hpp"

using namespace framequant;
using namespace framequant::hsf;
using Catch::Approx;

namespace {

std::shared_ptr<const groups::ProjectiveRep> shared_rep(Eigen::Index d = 3) {
    static auto rep3 = std::make_shared<const groups::ProjectiveRep>(
        groups::weyl_heisenberg_finite(3));
    if (d == 3) return rep3;
    return std::make_shared<const groups::ProjectiveRep>(groups::weyl_heisenberg_finite(d));
}

Operator normalized(const Operator& t) { return t / ops::hs_norm(t); }

OperatorFrame default_frame() {
    auto rep = shared_rep();
    return OperatorFrame(rep, ops::rank_one(ops::basis_vector(3, 0), ops::basis_vector(3, 0)));
}

} // namespace

TEST_CASE("dequantization is an isometry") {
    auto rep = shared_rep();
    OperatorFrame frame = default_frame();
    rng::Engine eng(61);

    CHECK(norm(dequantize(frame, Operator::Zero(3, 3))) == 0.0);

    // self-overlap at the identity point
    BiPhaseFunction t_fn = dequantize(frame, frame.analyzer());
    const Eigen::Index origin = frame.point(rep->group().identity, rep->group().identity);
    CHECK(std::abs(t_fn.values(origin) - Complex(1.0)) < 1e-13);

    // isometry for several analyzer types and 30 random operators
    std::vector<Operator> analyzers = {
        frame.analyzer(),
        normalized(rng::matrix(3, eng)),
        normalized(rng::hermitian(3, eng)),
        normalized(Operator(rng::matrix(3, eng).triangularView<Eigen::Upper>())),
    };
    for (const Operator& t : analyzers) {
        OperatorFrame fr(rep, t);
        for (int k = 0; k < 30; ++k) {
            Operator a = rng::matrix(3, eng);
            CHECK(std::abs(norm(dequantize(fr, a)) - ops::hs_norm(a)) < 1e-11 * ops::hs_norm(a));
        }
    }

    CHECK_THROWS_AS(OperatorFrame(rep, 2.0 * frame.analyzer()), InvalidFrame);
}

TEST_CASE("quantization inverts on the range") {
    auto rep = shared_rep();
    OperatorFrame frame = default_frame();
    rng::Engine eng(62);

    CHECK(quantize(frame, BiPhaseFunction::zero(frame.points())).norm() == 0.0);

    for (int k = 0; k < 10; ++k) {
        Operator a = rng::matrix(3, eng);
        CHECK((quantize(frame, dequantize(frame, a)) - a).norm() < 1e-11 * a.norm());
    }

    // adjointness <Q_T Phi, a>_HS = <Phi, D_T a>
    for (int k = 0; k < 10; ++k) {
        BiPhaseFunction f(frame.points(), rng::vector(81, eng));
        Operator a = rng::matrix(3, eng);
        CHECK(std::abs(ops::hs_inner(quantize(frame, f), a) - inner(f, dequantize(frame, a))) <
              1e-12);
    }
}

TEST_CASE("orthogonality of dequantization ranges") {
    auto rep = shared_rep();
    rng::Engine eng(63);

    OperatorFrame ft = default_frame();
    // T = S and a = b reduces to the isometry
    Operator a0 = rng::matrix(3, eng);
    CHECK(orthogonality_check(ft, ft, a0, a0) < 1e-11 * a0.squaredNorm());

    // HS-orthogonal analyzers give orthogonal ranges
    Operator s_raw = ops::rank_one(ops::basis_vector(3, 1), ops::basis_vector(3, 0));
    CHECK(std::abs(ops::hs_inner(s_raw, ft.analyzer())) < 1e-14);
    OperatorFrame fs(rep, s_raw);
    for (int k = 0; k < 5; ++k) {
        Operator a = rng::matrix(3, eng), b = rng::matrix(3, eng);
        CHECK(std::abs(inner(dequantize(ft, a), dequantize(fs, b))) < 1e-11);
        CHECK(orthogonality_check(ft, fs, a, b) < 1e-10);
    }

    // random analyzer pairs
    for (int k = 0; k < 10; ++k) {
        OperatorFrame f1(rep, normalized(rng::matrix(3, eng)));
        OperatorFrame f2(rep, normalized(rng::matrix(3, eng)));
        Operator a = rng::matrix(3, eng), b = rng::matrix(3, eng);
        CHECK(orthogonality_check(f1, f2, a, b) < 1e-10);
    }
}

TEST_CASE("star product mirrors the operator product") {
    auto rep = shared_rep();
    OperatorFrame frame = default_frame();
    rng::Engine eng(64);

    // absorbing the identity: Phi * D_T(I) = D_T(Q_T Phi)
    BiPhaseFunction raw(frame.points(), rng::vector(81, eng));
    BiPhaseFunction idf = dequantize(frame, ops::identity(3));
    BiPhaseFunction lhs = star_product(frame, raw, idf);
    BiPhaseFunction rhs = dequantize(frame, quantize(frame, raw));
    CHECK((lhs.values - rhs.values).cwiseAbs().maxCoeff() < 1e-12);

    // homomorphism along both evaluation paths
    for (int k = 0; k < 20; ++k) {
        Operator a = rng::matrix(3, eng), b = rng::matrix(3, eng);
        BiPhaseFunction da = dequantize(frame, a), db = dequantize(frame, b);
        BiPhaseFunction target = dequantize(frame, a * b);
        BiPhaseFunction path_a = star_product(frame, da, db);
        BiPhaseFunction path_b = star_product_triple_sum(frame, da, db);
        CHECK(norm(BiPhaseFunction(target.points, path_a.values - target.values)) < 1e-9);
        CHECK(norm(BiPhaseFunction(target.points, path_b.values - target.values)) < 1e-9);
        CHECK((path_a.values - path_b.values).cwiseAbs().maxCoeff() < 1e-10);
    }

    // non-commutativity witness on shift and clock
    BiPhaseFunction fx = dequantize(frame, rep->matrix(3)); // a pure shift
    BiPhaseFunction fz = dequantize(frame, rep->matrix(1)); // a pure clock
    BiPhaseFunction xy = star_product(frame, fx, fz);
    BiPhaseFunction yx = star_product(frame, fz, fx);
    CHECK(norm(BiPhaseFunction(fx.points, xy.values - yx.values)) > 0.1);

    // star of projected inputs equals star of the originals
    BiPhaseFunction f1(frame.points(), rng::vector(81, eng));
    BiPhaseFunction f2(frame.points(), rng::vector(81, eng));
    BiPhaseFunction p1 = dequantize(frame, quantize(frame, f1));
    BiPhaseFunction p2 = dequantize(frame, quantize(frame, f2));
    BiPhaseFunction s_raw = star_product(frame, f1, f2);
    BiPhaseFunction s_proj = star_product(frame, p1, p2);
    CHECK((s_raw.values - s_proj.values).cwiseAbs().maxCoeff() < 1e-10);

    // associativity on the range
    Operator a = rng::matrix(3, eng), b = rng::matrix(3, eng), c = rng::matrix(3, eng);
    BiPhaseFunction da = dequantize(frame, a), db = dequantize(frame, b),
                    dc = dequantize(frame, c);
    BiPhaseFunction left = star_product(frame, star_product(frame, da, db), dc);
    BiPhaseFunction right = star_product(frame, da, star_product(frame, db, dc));
    BiPhaseFunction abc = dequantize(frame, a * b * c);
    CHECK(norm(BiPhaseFunction(abc.points, left.values - abc.values)) < 1e-9);
    CHECK(norm(BiPhaseFunction(abc.points, right.values - abc.values)) < 1e-9);
}

TEST_CASE("star kernel") {
    auto rep = shared_rep();
    OperatorFrame frame = default_frame(); // rank-one projector analyzer
    rng::Engine eng(65);

    const Eigen::Index e = rep->group().identity;
    const Eigen::Index origin = frame.point(e, e);
    // projector powers: tr(T^3) = 1
    CHECK(std::abs(star_kernel(frame, origin, origin, origin) - Complex(1.0)) < 1e-13);

    // brute-force trace of the matrix product
    for (int k = 0; k < 20; ++k) {
        Eigen::Index y = static_cast<Eigen::Index>(eng() % 81);
        Eigen::Index y1 = static_cast<Eigen::Index>(eng() % 81);
        Eigen::Index y2 = static_cast<Eigen::Index>(eng() % 81);
        Complex direct = (frame.element(y).adjoint() * frame.element(y1) * frame.element(y2)).trace();
        CHECK(std::abs(star_kernel(frame, y, y1, y2) - direct) < 1e-13);
    }

    // conjugation symmetry for a self-adjoint analyzer:
    // kappa(y, y1, y2)^* = kappa(y~, y2~, y1~) with ~ swapping the two legs
    auto swap_legs = [&](Eigen::Index y) { return frame.point(frame.second(y), frame.first(y)); };
    for (int k = 0; k < 20; ++k) {
        Eigen::Index y = static_cast<Eigen::Index>(eng() % 81);
        Eigen::Index y1 = static_cast<Eigen::Index>(eng() % 81);
        Eigen::Index y2 = static_cast<Eigen::Index>(eng() % 81);
        Complex lhs = std::conj(star_kernel(frame, y, y1, y2));
        Complex rhs = star_kernel(frame, swap_legs(y), swap_legs(y2), swap_legs(y1));
        CHECK(std::abs(lhs - rhs) < 1e-13);
    }
}

TEST_CASE("left and right kernels") {
    auto rep = shared_rep();
    OperatorFrame frame = default_frame();
    rng::Engine eng(66);

    // chi^L(I) is the reproducing kernel <T(y), T(y')>
    Operator chi_id = left_kernel_matrix(frame, ops::identity(3));
    for (int k = 0; k < 10; ++k) {
        Eigen::Index y = static_cast<Eigen::Index>(eng() % 81);
        Eigen::Index y2 = static_cast<Eigen::Index>(eng() % 81);
        CHECK(std::abs(chi_id(y, y2) - ops::hs_inner(frame.element(y), frame.element(y2))) < 1e-13);
    }

    // apply_left_kernel(a, D_T b) = D_T(a b), and the right analogue
    for (int k = 0; k < 10; ++k) {
        Operator a = rng::matrix(3, eng), b = rng::matrix(3, eng);
        BiPhaseFunction db = dequantize(frame, b);
        BiPhaseFunction lhs = apply_left_kernel(frame, a, db);
        BiPhaseFunction target = dequantize(frame, a * b);
        CHECK((lhs.values - target.values).cwiseAbs().maxCoeff() < 1e-10);

        BiPhaseFunction rhs = apply_right_kernel(frame, a, db);
        BiPhaseFunction target_r = dequantize(frame, b * a);
        CHECK((rhs.values - target_r.values).cwiseAbs().maxCoeff() < 1e-10);

        // matrix form agrees with the applied form
        Operator chi = left_kernel_matrix(frame, a);
        Vector applied = chi * frame.points()->weights.cast<Complex>().cwiseProduct(db.values);
        CHECK((applied - lhs.values).cwiseAbs().maxCoeff() < 1e-11);
    }

    // kernel composition: chi^L(a1 a2) = chi^L(a1) o chi^L(a2)
    Operator a1 = rng::matrix(3, eng), a2 = rng::matrix(3, eng);
    Operator composed = compose_kernels(frame, left_kernel_matrix(frame, a1),
                                        left_kernel_matrix(frame, a2));
    CHECK((composed - left_kernel_matrix(frame, a1 * a2)).cwiseAbs().maxCoeff() < 1e-10);

    // tight-frame conjugation symmetry chi^L(a; y, y') = chi^L(a^dag; y', y)^*
    Operator chi_a = left_kernel_matrix(frame, a1);
    Operator chi_adj = left_kernel_matrix(frame, a1.adjoint());
    CHECK((chi_a - chi_adj.adjoint()).cwiseAbs().maxCoeff() < 1e-12);

    // scalar accessors match the matrices
    CHECK(std::abs(left_kernel(frame, a1, 5, 9) - chi_a(5, 9)) < 1e-14);
    Operator chi_r = right_kernel_matrix(frame, a1);
    CHECK(std::abs(right_kernel(frame, a1, 7, 2) - chi_r(7, 2)) < 1e-14);
}

TEST_CASE("kernel round trip") {
    auto rep = shared_rep();
    OperatorFrame frame = default_frame();
    rng::Engine eng(67);
    Vector fiducial = ops::basis_vector(3, 0);

    CHECK(kernel_roundtrip(frame, frame.analyzer(), fiducial) < 1e-10);
    CHECK(kernel_roundtrip(frame, Operator::Zero(3, 3), fiducial) < 1e-14);
    for (int k = 0; k < 5; ++k) {
        CHECK(kernel_roundtrip(frame, rng::matrix(3, eng), fiducial) < 1e-9);
    }
}

TEST_CASE("gamma kernel and trace formulas") {
    auto rep = shared_rep();
    OperatorFrame frame = default_frame();
    rng::Engine eng(68);

    Vector psi = rng::unit_vector(3, eng);
    Operator psihat = ops::rank_one(psi, psi);

    // gamma(g, y) = (L_M(g) D_T psihat)(y)^*
    Operator gamma = gamma_matrix(frame, psihat);
    BiPhaseFunction dpsi = dequantize(frame, psihat);
    for (Eigen::Index g = 0; g < rep->order(); ++g) {
        BiPhaseFunction moved = lm_action(frame, g, dpsi);
        for (Eigen::Index y = 0; y < frame.size(); ++y) {
            CHECK(std::abs(gamma(g, y) - std::conj(moved.values(y))) < 1e-12);
        }
    }

    // trace formula via the gamma triple sum
    for (int k = 0; k < 5; ++k) {
        Operator rho = rng::matrix(3, eng);
        Complex tr = trace_via_gamma(frame, psihat, dequantize(frame, rho));
        CHECK(std::abs(tr - rho.trace()) < 1e-10);
    }
    Operator x = rng::matrix(3, eng), y = rng::matrix(3, eng);
    Operator traceless = x * y - y * x;
    CHECK(std::abs(trace_via_gamma(frame, psihat, dequantize(frame, traceless))) < 1e-11);

    // general trace-one reference operators are accepted, others rejected
    Operator s = rng::matrix(3, eng);
    s /= s.trace();
    CHECK(std::abs(trace_via_gamma(frame, s, dequantize(frame, x)) - x.trace()) < 1e-10);
    CHECK_THROWS_AS(gamma_kernel(frame, 2.0 * s, 0, 0), InvalidNormalization);
}

TEST_CASE("diagonal trace formula") {
    auto rep = shared_rep();
    OperatorFrame frame = default_frame();
    rng::Engine eng(69);

    CHECK(std::abs(trace_diagonal(frame, ops::identity(3) / 3.0) - Complex(1.0)) < 1e-12);
    for (int k = 0; k < 5; ++k) {
        Operator rho = rng::matrix(3, eng);
        CHECK(std::abs(trace_diagonal(frame, rho) - rho.trace()) < 1e-10);
        CHECK(trace_abs_diagonal(frame, rho) == Approx(std::abs(rho.trace())).margin(1e-10));
    }

    // traceless analyzer is rejected
    Operator t_less = normalized(ops::rank_one(ops::basis_vector(3, 0), ops::basis_vector(3, 1)));
    OperatorFrame degenerate(rep, t_less);
    CHECK_THROWS_AS(trace_diagonal(degenerate, ops::identity(3)), DegenerateAnalyzer);
}

TEST_CASE("expectation values through the kernel calculus") {
    auto rep = shared_rep();
    OperatorFrame frame = default_frame();
    rng::Engine eng(70);
    Vector psi = rng::unit_vector(3, eng);
    Operator psihat = ops::rank_one(psi, psi);

    // a = I reduces to the trace formula
    Operator rho0 = rng::matrix(3, eng);
    CHECK(std::abs(expectation(frame, psihat, ops::identity(3), rho0) - rho0.trace()) < 1e-10);

    // random Hermitian pairs, both kernel sides
    for (int k = 0; k < 10; ++k) {
        Operator a = rng::hermitian(3, eng), rho = rng::hermitian(3, eng);
        Complex direct = (a * rho).trace();
        CHECK(std::abs(expectation(frame, psihat, a, rho, KernelSide::left) - direct) < 1e-9);
        CHECK(std::abs(expectation(frame, psihat, a, rho, KernelSide::right) - direct) < 1e-9);
    }

    // projector expectation of itself
    Vector v = rng::unit_vector(3, eng);
    Operator proj = ops::rank_one(v, v);
    CHECK(std::abs(expectation(frame, psihat, proj, proj) - Complex(1.0)) < 1e-10);
}

TEST_CASE("intrinsic operator norm") {
    auto rep = shared_rep();
    OperatorFrame frame = default_frame();
    rng::Engine eng(71);

    CHECK(operator_norm_via_kernel(frame, ops::identity(3)) == Approx(1.0).epsilon(1e-10));

    Operator diag = Operator::Zero(3, 3);
    diag(0, 0) = 1.0;
    diag(1, 1) = -2.0;
    CHECK(operator_norm_via_kernel(frame, diag) == Approx(2.0).epsilon(1e-10));

    for (int k = 0; k < 10; ++k) {
        Operator a = rng::hermitian(3, eng);
        CHECK(std::abs(operator_norm_via_kernel(frame, a) - ops::op_norm(a)) < 1e-8);
    }

    CHECK_THROWS_AS(operator_norm_via_kernel(frame, rng::matrix(3, eng)), NotSelfAdjoint);

    // lower-bound sweep over sampled pure-state images: |tr(A P)| <= ||A||,
    // approaching it from below
    Operator a = rng::hermitian(3, eng);
    const double norm_a = ops::op_norm(a);
    double best = 0.0;
    for (int k = 0; k < 200; ++k) {
        Vector v = rng::unit_vector(3, eng);
        best = std::max(best, std::abs((a * ops::rank_one(v, v)).trace()));
    }
    CHECK(best <= norm_a + 1e-12);
    CHECK(best > 0.5 * norm_a);
}

TEST_CASE("Jordan and Lie kernel products") {
    auto rep = shared_rep();
    OperatorFrame frame = default_frame();
    rng::Engine eng(72);

    Operator a1 = rng::hermitian(3, eng), a2 = rng::hermitian(3, eng);

    // Lie bracket of equal operators vanishes
    CHECK(lie_kernel(frame, a1, a1).cwiseAbs().maxCoeff() < 1e-11);

    // Jordan with the identity reproduces the plain kernel
    CHECK((jordan_kernel(frame, a1, ops::identity(3)) - left_kernel_matrix(frame, a1))
              .cwiseAbs()
              .maxCoeff() < 1e-10);

    // both products agree with the kernels of the direct operator algebra
    Operator jordan_direct = left_kernel_matrix(frame, Operator(0.5 * (a1 * a2 + a2 * a1)));
    Operator lie_direct =
        left_kernel_matrix(frame, Operator((a1 * a2 - a2 * a1) / Complex(0.0, 1.0)));
    CHECK((jordan_kernel(frame, a1, a2) - jordan_direct).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((lie_kernel(frame, a1, a2) - lie_direct).cwiseAbs().maxCoeff() < 1e-10);

    CHECK_THROWS_AS(jordan_kernel(frame, rng::matrix(3, eng), a2), NotSelfAdjoint);
}

TEST_CASE("involution") {
    auto rep = shared_rep();
    OperatorFrame frame = default_frame();
    rng::Engine eng(73);

    // applied twice it is the identity
    BiPhaseFunction f(frame.points(), rng::vector(81, eng));
    BiPhaseFunction ff = involution(frame, involution(frame, f));
    CHECK((ff.values - f.values).cwiseAbs().maxCoeff() < 1e-15);

    // self-adjoint analyzer: D_T(a^dag) = (D_T a)^<>
    for (int k = 0; k < 5; ++k) {
        Operator a = rng::matrix(3, eng);
        BiPhaseFunction lhs = dequantize(frame, a.adjoint());
        BiPhaseFunction rhs = involution(frame, dequantize(frame, a));
        CHECK((lhs.values - rhs.values).cwiseAbs().maxCoeff() < 1e-11);
        CHECK(is_selfadjoint_image(frame, dequantize(frame, rng::hermitian(3, eng))));
        CHECK(!is_selfadjoint_image(frame, dequantize(frame, a)));
    }

    // general analyzer: D_T(a^dag) = (D_{T^dag} a)^<>
    Operator t = normalized(rng::matrix(3, eng));
    OperatorFrame ft(rep, t);
    OperatorFrame ft_adj(rep, t.adjoint());
    for (int k = 0; k < 5; ++k) {
        Operator a = rng::matrix(3, eng);
        BiPhaseFunction lhs = dequantize(ft, a.adjoint());
        BiPhaseFunction rhs = involution(ft, dequantize(ft_adj, a));
        CHECK((lhs.values - rhs.values).cwiseAbs().maxCoeff() < 1e-11);
    }
}

TEST_CASE("pure state characterization") {
    auto rep = shared_rep();
    OperatorFrame frame = default_frame();
    rng::Engine eng(74);
    Vector fid = ops::basis_vector(3, 0);

    for (int k = 0; k < 5; ++k) {
        Vector v = rng::unit_vector(3, eng);
        CHECK(pure_state_test(frame, fid, dequantize(frame, ops::rank_one(v, v))));
    }

    CHECK(!pure_state_test(frame, fid, dequantize(frame, 0.5 * ops::identity(3))));

    // rank-two projector: involution and idempotence hold, the trace does not
    Vector v1 = ops::basis_vector(3, 0), v2 = ops::basis_vector(3, 2);
    Operator rank2 = ops::rank_one(v1, v1) + ops::rank_one(v2, v2);
    CHECK(!pure_state_test(frame, fid, dequantize(frame, rank2)));

    // mixed state and scaled projector
    Operator mixed = 0.6 * ops::rank_one(v1, v1) + 0.4 * ops::rank_one(v2, v2);
    CHECK(!pure_state_test(frame, fid, dequantize(frame, mixed)));
    Vector v = rng::unit_vector(3, eng);
    CHECK(!pure_state_test(frame, fid, dequantize(frame, Operator(0.9 * ops::rank_one(v, v)))));
}

TEST_CASE("intertwining with L_M") {
    auto rep = shared_rep();
    OperatorFrame frame = default_frame();
    rng::Engine eng(75);

    CHECK(intertwining_lm_residual(frame, 10) < 1e-11);

    // the identity element acts trivially
    BiPhaseFunction f(frame.points(), rng::vector(81, eng));
    BiPhaseFunction fe = lm_action(frame, rep->group().identity, f);
    CHECK((fe.values - f.values).cwiseAbs().maxCoeff() < 1e-15);

    // cocycle property of the phase M(g g'; .) = M(g; .) M(g'; shifted .)
    const auto& grp = rep->group();
    for (Eigen::Index g = 0; g < rep->order(); ++g)
        for (Eigen::Index g2 = 0; g2 < rep->order(); ++g2)
            for (Eigen::Index y = 0; y < frame.size(); ++y) {
                const Eigen::Index ginv = grp.inv(g);
                const Eigen::Index a = frame.first(y), b = frame.second(y);
                Complex lhs = lm_phase(frame, grp.mul(g, g2), a, b);
                Complex rhs = lm_phase(frame, g, a, b) *
                              lm_phase(frame, g2, grp.mul(ginv, a), grp.mul(ginv, b));
                CHECK(std::abs(lhs - rhs) < 1e-12);
            }
}
