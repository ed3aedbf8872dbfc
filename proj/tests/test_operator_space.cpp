#include <catch2/catch_amalgamated.hpp>

#include "framequant/operator_space.hpp"
#include "framequant/random.hpp"

using namespace framequant;
using Catch::Approx;

namespace {

Operator pauli_x() {
    Operator m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Operator pauli_z() {
    Operator m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

} // namespace

TEST_CASE("hs_inner basics") {
    Operator i2 = ops::identity(2);
    CHECK(std::abs(ops::hs_inner(i2, i2) - Complex(2.0)) < 1e-14);
    CHECK(std::abs(ops::hs_inner(pauli_x(), pauli_z())) < 1e-14);

    // ||A||^2_HS against the brute-force entry sum
    rng::Engine eng(11);
    Operator a = rng::matrix(5, eng);
    double entry_sum = 0.0;
    for (Eigen::Index i = 0; i < 5; ++i)
        for (Eigen::Index j = 0; j < 5; ++j) entry_sum += std::norm(a(i, j));
    CHECK(std::abs(ops::hs_inner(a, a) - Complex(entry_sum)) < 1e-10 * entry_sum);

    Operator b = rng::matrix(5, eng);
    CHECK(std::abs(ops::hs_inner(a, b) - std::conj(ops::hs_inner(b, a))) < 1e-12);

    CHECK_THROWS_AS(ops::hs_inner(a, ops::identity(3)), std::invalid_argument);
}

TEST_CASE("trace and norms") {
    CHECK(std::abs(ops::trace(ops::identity(3)) - Complex(3.0)) < 1e-14);

    Operator d(2, 2);
    d << 1, 0, 0, -2;
    CHECK(ops::trace_norm(d) == Approx(3.0));

    // op_norm against an independent oracle: sqrt of the largest eigenvalue
    // of A^dag A
    rng::Engine eng(12);
    Operator a = rng::matrix(6, eng);
    Eigen::SelfAdjointEigenSolver<Operator> es(a.adjoint() * a);
    const double oracle = std::sqrt(es.eigenvalues().maxCoeff());
    CHECK(ops::op_norm(a) == Approx(oracle).epsilon(1e-10));

    // norm ordering: trace >= HS >= operator
    for (int k = 0; k < 10; ++k) {
        Operator m = rng::matrix(4, eng);
        CHECK(ops::trace_norm(m) >= ops::hs_norm(m) - 1e-12);
        CHECK(ops::hs_norm(m) >= ops::op_norm(m) - 1e-12);
    }
}

TEST_CASE("canonical decomposition") {
    // rank-one |0><1|
    Operator r = ops::rank_one(ops::basis_vector(2, 0), ops::basis_vector(2, 1));
    auto cd = ops::canonical_decompose(r);
    CHECK(cd.singular_values(0) == Approx(1.0));
    CHECK(cd.singular_values(1) == Approx(0.0).margin(1e-14));

    auto cd_id = ops::canonical_decompose(ops::identity(2));
    CHECK(cd_id.singular_values(0) == Approx(1.0));
    CHECK(cd_id.singular_values(1) == Approx(1.0));

    rng::Engine eng(13);
    Operator a = rng::matrix(4, eng);
    auto cda = ops::canonical_decompose(a);
    CHECK((cda.reconstruct() - a).norm() < 1e-12 * a.norm());
    for (Eigen::Index i = 0; i + 1 < cda.singular_values.size(); ++i) {
        CHECK(cda.singular_values(i) >= cda.singular_values(i + 1));
    }
    CHECK(cda.singular_values.minCoeff() >= 0.0);
}

TEST_CASE("positive sqrt") {
    Operator d(2, 2);
    d << 4, 0, 0, 9;
    Operator root = ops::positive_sqrt(d);
    CHECK(std::abs(root(0, 0) - Complex(2.0)) < 1e-12);
    CHECK(std::abs(root(1, 1) - Complex(3.0)) < 1e-12);

    rng::Engine eng(14);
    for (int k = 0; k < 5; ++k) {
        Operator p = rng::positive(4, eng);
        Operator r = ops::positive_sqrt(p);
        CHECK((r * r - p).norm() < 1e-10 * std::max(1.0, p.norm()));
    }

    Operator neg(2, 2);
    neg << -1, 0, 0, 1;
    CHECK_THROWS_AS(ops::positive_sqrt(neg), NotPositive);
    CHECK_THROWS_AS(ops::positive_sqrt(pauli_x() * Complex(0, 1)), NotPositive);
}

TEST_CASE("matrix exponential") {
    CHECK((ops::matrix_exp(Operator::Zero(3, 3)) - ops::identity(3)).norm() < 1e-14);

    // diagonal oracle: exp of i theta Z matches scalar exponentials entrywise
    const double theta = 0.7341;
    Operator gen = Complex(0, theta) * pauli_z();
    Operator e = ops::matrix_exp(gen);
    CHECK(std::abs(e(0, 0) - std::exp(Complex(0, theta))) < 1e-13);
    CHECK(std::abs(e(1, 1) - std::exp(Complex(0, -theta))) < 1e-13);
    CHECK(std::abs(e(0, 1)) < 1e-14);

    // exp(A) exp(-A) = I for a random generator
    rng::Engine eng(15);
    Operator a = rng::matrix(5, eng);
    CHECK((ops::matrix_exp(a) * ops::matrix_exp(-a) - ops::identity(5)).norm() < 1e-9);
}

TEST_CASE("predicates") {
    rng::Engine eng(16);
    CHECK(ops::is_hermitian(rng::hermitian(4, eng)));
    CHECK(!ops::is_hermitian(rng::matrix(4, eng)));
    CHECK(ops::is_positive(rng::positive(4, eng), 1e-8));
    CHECK(!ops::is_positive(-ops::identity(3)));
    CHECK(ops::is_unitary(rng::unitary(4, eng), 1e-10));
    CHECK(!ops::is_unitary(2.0 * ops::identity(3)));
}
