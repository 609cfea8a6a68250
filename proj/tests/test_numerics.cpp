#include <doctest.h>

#include "oracles.hpp"
#include "setcalc/errors.hpp"
#include "setcalc/lp.hpp"

using namespace setcalc;

TEST_CASE("approx_eq follows the absolute and zero thresholds") {
    const ToleranceContext ctx;
    CHECK(approx_eq(1.0, 1.0 + 1e-12, ctx));
    CHECK_FALSE(approx_eq(1.0, 1.1, ctx));
    CHECK(approx_eq(1e-10, 0.0, ctx));
    CHECK_FALSE(approx_eq(1e-6, 0.0, ctx));

    const ToleranceContext loose(0.0, 0.0, 1e-3);
    CHECK(approx_eq(5e-4, 0.0, loose));
    CHECK_FALSE(approx_eq(1.0, 1.0 + 1e-12, loose));

    const ToleranceContext relative(0.0, 1e-6, 0.0);
    CHECK(approx_eq(1e6, 1e6 + 0.5, relative));
}

TEST_CASE("approx_eq is symmetric and reflexive") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const ToleranceContext ctx;
    for (int i = 0; i < 500; ++i) {
        const double a = u(rng);
        const double b = a + u(rng) * 2e-8;
        CHECK(approx_eq(a, a, ctx));
        CHECK(approx_eq(a, b, ctx) == approx_eq(b, a, ctx));
    }
}

TEST_CASE("tolerance contexts are validated") {
    CHECK_THROWS_AS(ToleranceContext(-1.0, 0.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(ToleranceContext(0.0, std::nan(""), 0.0), InvalidArgument);
    CHECK_NOTHROW(ToleranceContext(0.0, 0.0, 0.0));
}

TEST_CASE("the default tolerance freezes on first use") {
    const ToleranceContext& ctx = default_tolerance();
    CHECK(ctx.atol() == 1e-8);
    CHECK(ctx.rtol() == 0.0);
    CHECK(ctx.ztol() == 1e-8);
    CHECK_THROWS_AS(install_default_tolerance(ToleranceContext(1e-6, 0.0, 1e-6)), InvalidArgument);
}

TEST_CASE("format helpers") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(-3.0) == "-3");
    CHECK(std::stod(format_precise(0.1)) == 0.1);
    CHECK(format_precise(-0.8) == "-0.80000000000000004");
}

TEST_CASE("solve_lp on small programs") {
    const ToleranceContext ctx;
    SUBCASE("1-D bounded") {
        const auto out = solve_lp({make_vector({1.0}), {{make_vector({1.0}), 1.0}, {make_vector({-1.0}), 0.0}}}, ctx);
        REQUIRE(out.optimal());
        CHECK(*out.optimum == doctest::Approx(1.0));
        CHECK((*out.optimizer)[0] == doctest::Approx(1.0));
    }
    SUBCASE("unit square") {
        std::vector<LinearConstraint> cs{{make_vector({1, 0}), 1},
                                         {make_vector({0, 1}), 1},
                                         {make_vector({-1, 0}), 0},
                                         {make_vector({0, -1}), 0}};
        const auto out = solve_lp({make_vector({1, 1}), cs}, ctx);
        REQUIRE(out.optimal());
        CHECK(*out.optimum == doctest::Approx(2.0));
        CHECK(approx_eq(*out.optimizer, make_vector({1, 1}), ctx));
    }
    SUBCASE("contradictory bounds") {
        const auto out = solve_lp({make_vector({1.0}), {{make_vector({1.0}), 0.0}, {make_vector({-1.0}), -1.0}}}, ctx);
        CHECK(out.status == LpStatus::Infeasible);
        CHECK_FALSE(out.optimizer.has_value());
    }
    SUBCASE("unbounded") {
        const auto out = solve_lp({make_vector({1.0, 0.0}), {{make_vector({0.0, 1.0}), 1.0}}}, ctx);
        CHECK(out.status == LpStatus::Unbounded);
    }
    SUBCASE("no constraints") {
        CHECK(solve_lp({make_vector({0.0, 0.0}), {}}, ctx).optimal());
        CHECK(*solve_lp({make_vector({0.0, 0.0}), {}}, ctx).optimum == 0.0);
        CHECK(solve_lp({make_vector({1.0, 0.0}), {}}, ctx).status == LpStatus::Unbounded);
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(solve_lp({make_vector({1.0, 0.0}), {{make_vector({1.0}), 1.0}}}, ctx), DimensionMismatch);
    }
}

TEST_CASE("is_feasible and feasible_point") {
    const ToleranceContext ctx;
    CHECK(is_feasible({{make_vector({1.0}), 1.0}, {make_vector({-1.0}), 0.0}}, ctx));
    CHECK_FALSE(is_feasible({{make_vector({1.0}), -1.0}, {make_vector({-1.0}), 0.0}}, ctx));

    // Random 3-D polytopes built around a known point.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Vector p = oracle::random_vector(rng, 3, -5, 5);
        std::vector<LinearConstraint> cs;
        for (int k = 0; k < 8; ++k) {
            const Vector a = oracle::random_direction(rng, 3);
            cs.push_back({a, a.dot(p) + std::uniform_real_distribution<double>(0.0, 1.0)(rng)});
        }
        CHECK(is_feasible(cs, ctx));
        const auto x = feasible_point(cs, 3, ctx);
        REQUIRE(x.has_value());
        for (const auto& c : cs) {
            CHECK(c.normal.dot(*x) <= c.offset + 1e-8);
        }
    }
}

TEST_CASE("solve_lp matches vertex enumeration on random bounded polytopes") {
    const ToleranceContext ctx;
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const Eigen::Index n = 1 + trial % 3;
        const Vector p = oracle::random_vector(rng, n, -3, 3);
        std::vector<LinearConstraint> cs;
        std::vector<oracle::Row> rows;
        // A surrounding box keeps the polytope bounded; the remaining cuts are random.
        for (Eigen::Index i = 0; i < n; ++i) {
            for (double s : {1.0, -1.0}) {
                Vector a = Vector::Zero(n);
                a[i] = s;
                cs.push_back({a, s * p[i] + 4.0});
            }
        }
        const int extra = 8 - static_cast<int>(2 * n);
        for (int k = 0; k < extra; ++k) {
            const Vector a = oracle::random_direction(rng, n);
            cs.push_back({a, a.dot(p) + std::uniform_real_distribution<double>(0.1, 2.0)(rng)});
        }
        for (const auto& c : cs) {
            rows.push_back({c.normal, c.offset});
        }
        const auto vertices = oracle::enumerate_vertices(rows, n);
        REQUIRE_FALSE(vertices.empty());
        const Vector d = oracle::random_direction(rng, n);
        const auto out = solve_lp({d, cs}, ctx);
        REQUIRE(out.optimal());
        CHECK(std::abs(*out.optimum - oracle::max_dot(d, vertices)) <= 1e-6);
        for (const auto& c : cs) {
            CHECK(c.normal.dot(*out.optimizer) <= c.offset + ctx.atol());
        }
        CHECK(std::abs(d.dot(*out.optimizer) - *out.optimum) <= ctx.atol());
        ++checked;
    }
    CHECK(checked == 120);
}
