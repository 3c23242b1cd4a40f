#include "partitions/special_functions.hpp"
#include "test_helpers.hpp"

#include <catch2/catch.hpp>

using namespace partitions;
using R = real50;
using C = complex_for<R>;
using test::abs_err;
using test::rel_err;

static const R tol44 = R("1e-44");
static const R tol45 = R("1e-45");

TEST_CASE("log_gamma known values") {
    CHECK(rel_err(log_gamma(R(1) / 2), log(sqrt(pi_v<R>()))) < tol45);
    CHECK(rel_err(log_gamma(R(5)), log(R(24))) < tol45);
    CHECK(rel_err(gamma_fn(R(1)), R(1)) < tol45);

    // Gamma(-1/2) = -2 sqrt(pi), recovered through the complex branch
    const C g = exp(log_gamma(C(-R(1) / 2)));
    CHECK(rel_err(g.real(), R(-2) * sqrt(pi_v<R>())) < tol44);
    CHECK(abs(g.imag()) < tol44);
}

TEST_CASE("reflection formula on a grid") {
    const std::vector<C> zs = {C(R(3) / 10), C(R(17) / 10, R(2) / 5), C(-R(7) / 10, R(1) / 3),
                               C(R(1) / 4, -R(11) / 10)};
    for (const auto& z : zs) {
        const C lhs = gamma_fn(z) * gamma_fn(C(1) - z);
        const C rhs = pi_v<R>() / sin(pi_v<R>() * z);
        CHECK(abs(lhs - rhs) / abs(rhs) < tol44);
    }
}

TEST_CASE("log_gamma poles") {
    CHECK_THROWS_AS(log_gamma(R(0)), pole_error);
    CHECK_THROWS_AS(log_gamma(R(-3)), pole_error);
    CHECK_THROWS_AS(log_gamma(C(-2)), pole_error);
}

TEST_CASE("riemann zeta special values") {
    CHECK(rel_err(riemann_zeta(R(2)), pi_v<R>() * pi_v<R>() / 6) < tol45);
    CHECK(rel_err(riemann_zeta(R(-1)), -R(1) / 12) < tol45);
    CHECK(rel_err(riemann_zeta(R(0)), -R(1) / 2) < tol45);
    // trivial zeros are exact zeros, not small residues
    for (int j = 1; j <= 10; ++j) CHECK(riemann_zeta(R(-2 * j)) == 0);
    CHECK_THROWS_AS(riemann_zeta(R(1)), pole_error);
}

TEST_CASE("zeta derivative at 0") {
    const R v = zeta_deriv0<R>();
    CHECK(rel_err(v, -log(2 * pi_v<R>()) / 2) < tol45);
    CHECK(rel_err(v, hurwitz_deriv0(R(1))) < tol45);
    CHECK(rel_err(exp(-v), sqrt(2 * pi_v<R>())) < tol45);
    CHECK((v < R("-0.918938") && v > R("-0.918939")));
}

TEST_CASE("hurwitz zeta special values") {
    CHECK(rel_err(hurwitz_zeta(R(0), R(1) / 4), R(1) / 4) < tol45);
    // zeta(-1, a) = -1/12 + a/2 - a^2/2 (here a = 1/3 gives 1/36)
    const R a = R(1) / 3;
    CHECK(rel_err(hurwitz_zeta(R(-1), a), -R(1) / 12 + a / 2 - a * a / 2) < tol45);
    CHECK(rel_err(hurwitz_zeta(R(-1), a), R(1) / 36) < tol45);
    CHECK(rel_err(hurwitz_zeta(R(3), R(1)), riemann_zeta(R(3))) < tol45);

    CHECK_THROWS_AS(hurwitz_zeta(R(1), R(1) / 2), pole_error);
    CHECK_THROWS_AS(hurwitz_zeta(R(2), R(0)), argument_error);
    CHECK_THROWS_AS(hurwitz_zeta(R(2), R(3) / 2), argument_error);
}

TEST_CASE("hurwitz reduces to riemann at a = 1") {
    for (const R s : {R(-3), -R(3) / 2, R(1) / 2, R(2), R(7)})
        CHECK(abs_err(hurwitz_zeta(s, R(1)), riemann_zeta(s)) <
              tol44 * std::max(R(1), abs(riemann_zeta(s))));
}

TEST_CASE("hurwitz multiplication formula") {
    // sum_{a=1..q} zeta(s, a/q) = q^s zeta(s)
    for (const long long q : {2LL, 3LL, 5LL}) {
        for (const R s : {R(-1), R(2)}) {
            R lhs = 0;
            for (long long a = 1; a <= q; ++a) lhs += hurwitz_zeta(s, R(a) / R(q));
            const R rhs = pow(R(q), s) * riemann_zeta(s);
            CHECK(abs_err(lhs, rhs) < tol44 * std::max(R(1), abs(rhs)));
        }
    }
}

TEST_CASE("bernoulli polynomial route matches euler-maclaurin nearby") {
    // continuity across the closed-form switch at integer s
    const R em  = hurwitz_zeta(R(-1) + R("1e-20"), R(2) / 5);
    const R ex  = hurwitz_zeta(R(-1), R(2) / 5);
    CHECK(abs_err(em, ex) < R("1e-18"));
}

TEST_CASE("hurwitz_deriv0 values") {
    CHECK(rel_err(hurwitz_deriv0(R(1) / 2), -log(R(2)) / 2) < tol45);
    CHECK(rel_err(hurwitz_deriv0(R(1) / 4), log_gamma(R(1) / 4) - log(2 * pi_v<R>()) / 2) < tol45);
    // reflection-based oracle: log G(1/4) + log G(3/4) = log(pi sqrt(2))
    CHECK(rel_err(log_gamma(R(1) / 4) + log_gamma(R(3) / 4), log(pi_v<R>() * sqrt(R(2)))) < tol44);
    CHECK_THROWS_AS(hurwitz_deriv0(R(2)), argument_error);
}

TEST_CASE("bernoulli numbers") {
    const auto b = bernoulli(12);
    CHECK(b[0] == bigrat(1));
    CHECK(b[1] == bigrat(-1, 2));
    CHECK(b[2] == bigrat(1, 6));
    CHECK(b[4] == bigrat(-1, 30));
    CHECK(b[12] == bigrat(-691, 2730));
    for (int j = 1; j <= 5; ++j) CHECK(b[2 * j + 1] == bigrat(0));
    CHECK_THROWS_AS(bernoulli(-1), argument_error);
}
