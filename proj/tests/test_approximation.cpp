#include <doctest.h>

#include "oracles.hpp"
#include "setcalc/approximation.hpp"
#include "setcalc/concrete_ops.hpp"
#include "setcalc/errors.hpp"
#include "setcalc/planar.hpp"

using namespace setcalc;
using oracle::v2;

namespace {

const ToleranceContext kCtx;

VPolygon sample_polygon() {
    return VPolygon({v2(-3, 0.6), v2(-2, -2), v2(0, -2), v2(1, -1), v2(2, 1), v2(0, 2), v2(-0.8, 1.8)});
}

// Support of a point set by brute force.
double rho_points(const Vector& d, const std::vector<Vector>& pts) { return oracle::max_dot(d, pts); }

double max_gap(const ConcreteSet& outer, const std::vector<Vector>& inner) {
    double gap = 0.0;
    for (int k = 0; k < 360; ++k) {
        const Vector d = oracle::unit_circle(2.0 * std::numbers::pi * k / 360.0);
        gap = std::max(gap, support_function(d, outer, kCtx) - rho_points(d, inner));
    }
    return gap;
}

}  // namespace

TEST_CASE("polar directions") {
    const auto dirs = generate_directions(DirectionTemplate::polar(5));
    const std::vector<Vector> printed{v2(1.0, 0.0), v2(0.30901699437494745, 0.9510565162951535),
                                      v2(-0.8090169943749473, 0.5877852522924732),
                                      v2(-0.8090169943749475, -0.587785252292473),
                                      v2(0.30901699437494723, -0.9510565162951536)};
    REQUIRE(dirs.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK((dirs[i] - printed[i]).cwiseAbs().maxCoeff() <= 1e-9);
    }
    CHECK(dirs[0] == v2(1, 0));
    CHECK(DirectionTemplate::polar(5).resolution() == 5);
    CHECK_THROWS_AS(DirectionTemplate::polar(0), InvalidArgument);
}

TEST_CASE("box and octagon directions") {
    const auto box = generate_directions(DirectionTemplate::box(2));
    REQUIRE(box.size() == 4);
    CHECK(box[0] == v2(1, 0));
    CHECK(box[1] == v2(-1, 0));
    CHECK(box[2] == v2(0, 1));
    CHECK(box[3] == v2(0, -1));
    CHECK(generate_directions(DirectionTemplate::box(5)).size() == 10);

    const auto oct = generate_directions(DirectionTemplate::oct(2));
    REQUIRE(oct.size() == 8);
    for (const auto& d : oct) {
        CHECK(std::abs(d.norm() - 1.0) <= 1e-15);
        // Each component is 0 or +-1/sqrt(2) or +-1.
        for (int i = 0; i < 2; ++i) {
            const double a = std::abs(d[i]);
            CHECK((a == 0.0 || a == 1.0 || std::abs(a - std::sqrt(0.5)) <= 1e-15));
        }
        // Closed under negation.
        bool found = false;
        for (const auto& e : oct) {
            found = found || (e + d).norm() <= 1e-15;
        }
        CHECK(found);
    }
    CHECK_THROWS_AS(DirectionTemplate::oct(3), InvalidArgument);
}

TEST_CASE("spherical and custom directions") {
    const auto s = generate_directions(DirectionTemplate::spherical(4));
    CHECK(s.size() == 16);
    for (const auto& d : s) {
        CHECK(d.size() == 3);
        CHECK(std::abs(d.norm() - 1.0) <= 1e-12);
    }
    CHECK(DirectionTemplate::custom({v2(1, 1), v2(-1, 0)}).directions().size() == 2);
    CHECK_THROWS_AS(DirectionTemplate::custom({v2(0, 0)}), InvalidArgument);
    CHECK_THROWS_AS(DirectionTemplate::custom({v2(1, 0), make_vector({1, 0, 0})}), DimensionMismatch);
}

TEST_CASE("template overapproximation") {
    const VPolygon x = sample_polygon();
    const ConcreteSet oct = overapproximate_template(x, DirectionTemplate::oct(2), kCtx);
    REQUIRE(std::holds_alternative<HPolytope>(oct));
    CHECK(std::get<HPolytope>(oct).constraints().size() == 8);
    for (const auto& v : x.vertices()) {
        CHECK(membership(v, oct, kCtx));
    }
    const ConcreteSet boxed = overapproximate_template(x, DirectionTemplate::box(2), kCtx);
    CHECK(is_subset(oct, boxed, kCtx));

    const BallInf b(v2(1, -2), 0.5);
    CHECK(is_equivalent(overapproximate_template(b, DirectionTemplate::box(2), kCtx), b, kCtx));

    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix g(2, 4);
        for (int j = 0; j < 4; ++j) {
            g.col(j) = oracle::random_vector(rng, 2);
        }
        const Zonotope z(oracle::random_vector(rng, 2), g);
        const ConcreteSet o = overapproximate_template(z, DirectionTemplate::oct(2), kCtx);
        for (const auto& v : oracle::zonotope_corners(z.center(), g)) {
            CHECK(membership(v, o, kCtx));
        }
    }

    // Unbounded along some directions: no constraint there, and not a polytope.
    const ConcreteSet half = overapproximate_template(HalfSpace(v2(1, 0), 2.0), DirectionTemplate::box(2), kCtx);
    REQUIRE(std::holds_alternative<HPolyhedron>(half));
    CHECK(std::get<HPolyhedron>(half).constraints().size() == 1);
}

TEST_CASE("box approximation and symmetric interval hull") {
    const BallInf b(v2(1, 4), 1.0);
    const Hyperrectangle h = box_approximation(b, kCtx);
    CHECK(h.center() == b.center());
    CHECK(h.radius() == v2(1, 1));

    const Hyperrectangle ph = box_approximation(sample_polygon(), kCtx);
    CHECK(approx_eq(ph.low(), v2(-3, -2), kCtx));
    CHECK(approx_eq(ph.high(), v2(2, 2), kCtx));

    std::mt19937_64 rng(3);
    Matrix g(2, 5);
    for (int j = 0; j < 5; ++j) {
        g.col(j) = oracle::random_vector(rng, 2);
    }
    const Zonotope z(v2(0.3, -0.2), g);
    const Hyperrectangle zb = box_approximation(z, kCtx);
    CHECK(approx_eq(zb.radius(), g.cwiseAbs().rowwise().sum(), kCtx));
    CHECK(approx_eq(zb.center(), z.center(), kCtx));
    CHECK_THROWS_AS(box_approximation(HalfSpace(v2(1, 0), 0), kCtx), UnboundedError);

    const Hyperrectangle s = symmetric_interval_hull(BallInf(v2(1, 0), 1.0), kCtx);
    CHECK(s.center() == v2(0, 0));
    CHECK(s.radius() == v2(2, 1));
    const Hyperrectangle si = symmetric_interval_hull(Interval(-3, 1), kCtx);
    CHECK(si.low()[0] == -3.0);
    CHECK(si.high()[0] == 3.0);
    const BallInf sym(v2(0, 0), 2.5);
    CHECK(symmetric_interval_hull(sym, kCtx).radius() == box_approximation(sym, kCtx).radius());
}

TEST_CASE("eps-close approximation") {
    const VPolygon x = sample_polygon();
    CHECK_THROWS_AS(overapproximate_eps_2d(x, 0.0, kCtx), InvalidArgument);
    CHECK_THROWS_AS(overapproximate_eps_2d(x, -1.0, kCtx), InvalidArgument);
    CHECK_THROWS_AS(overapproximate_eps_2d(BallInf(Vector::Zero(3), 1.0), 0.1, kCtx), UnsupportedOperation);
    CHECK_THROWS_AS(overapproximate_eps_2d(HalfSpace(v2(1, 0), 0.0), 0.1, kCtx), UnboundedError);

    // A large eps stops at the initial four directions.
    const EpsApproximation coarse = overapproximate_eps_2d(x, 100.0, kCtx);
    CHECK(coarse.polygon.vertices().size() == 4);
    CHECK(is_equivalent(coarse.polygon, box_approximation(x, kCtx), kCtx));

    const EpsApproximation fine = overapproximate_eps_2d(x, 1e-3, kCtx);
    CHECK(is_subset(x, fine.polygon, kCtx));
    CHECK(fine.error.hausdorff_bound <= 1e-3);
    CHECK(max_gap(fine.polygon, x.vertices()) <= 1e-3 + 1e-8);
}

TEST_CASE("eps-close guarantee on random polygons and monotone area") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 10; ++trial) {
        const VPolygon x(oracle::random_cloud(rng, 12));
        double previous = std::numeric_limits<double>::infinity();
        for (double eps : {0.5, 0.25, 0.1, 0.05, 0.01}) {
            const EpsApproximation p = overapproximate_eps_2d(x, eps, kCtx);
            CHECK(max_gap(p.polygon, x.vertices()) <= eps + 1e-8);
            CHECK(is_subset(x, p.polygon, kCtx));
            const double a = planar::area(p.polygon.vertices());
            CHECK(a <= previous + 1e-12);
            previous = a;
        }
    }
}

TEST_CASE("eps-close approximation of lazy sets") {
    const SetExpr sum = lazy::minkowski_sum(sample_polygon(), Zonotope(v2(0, 0), make_matrix({{1, 0.5}, {0, 1}})));
    const EpsApproximation p = overapproximate_eps_2d(sum, 0.05, kCtx);
    const ConcreteSet exact = concretize(sum, kCtx);
    CHECK(max_gap(p.polygon, vertices_list(exact, kCtx)) <= 0.05 + 1e-8);
}

TEST_CASE("zonotope fit") {
    const VPolygon unit({v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)});
    const Zonotope z = overapproximate_zonotope(unit, {v2(1, 0), v2(0, 1)}, kCtx);
    CHECK(approx_eq(z.center(), v2(0.5, 0.5), kCtx));
    CHECK(is_equivalent(z, unit, kCtx));

    const VPolygon x = sample_polygon();
    const Hyperrectangle box = box_approximation(x, kCtx);
    std::vector<Zonotope> fits;
    for (int k : {3, 5}) {
        const Zonotope f = overapproximate_zonotope(x, generate_directions(DirectionTemplate::polar(k)), kCtx);
        CHECK(f.num_generators() == k);
        for (const auto& v : x.vertices()) {
            CHECK(membership(v, f, kCtx));
        }
        CHECK(is_subset(x, f, kCtx));
        CHECK_FALSE(is_subset(f, box, kCtx));
        CHECK_FALSE(is_subset(box, f, kCtx));
        fits.push_back(f);
    }
    CHECK_FALSE(is_subset(fits[0], fits[1], kCtx));
    CHECK_FALSE(is_subset(fits[1], fits[0], kCtx));

    Matrix g(2, 2);
    g << 1, 0.5, 0, 1;
    const Zonotope src(v2(1, 1), g);
    const Zonotope back = overapproximate_zonotope(src, {g.col(0), g.col(1)}, kCtx);
    CHECK(is_subset(src, back, kCtx));

    CHECK_THROWS_AS(overapproximate_zonotope(unit, {v2(1, 0)}, kCtx), InvalidArgument);
    CHECK_THROWS_AS(overapproximate_zonotope(unit, {}, kCtx), InvalidArgument);
}

TEST_CASE("underapproximation") {
    const BallInf b(v2(0, 0), 1.0);
    const VPolytope u = underapproximate(b, generate_directions(DirectionTemplate::box(2)), kCtx);
    CHECK(is_subset(u, b, kCtx));
    for (const Vector& d : generate_directions(DirectionTemplate::box(2))) {
        CHECK(support_function(d, u, kCtx) == 1.0);
    }

    const VPolygon x = sample_polygon();
    std::vector<Vector> dirs;
    const auto& v = x.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vector e1 = v[(i + 1) % v.size()] - v[i];
        const Vector e0 = v[i] - v[(i + v.size() - 1) % v.size()];
        // Sum of the outward normals of the two edges meeting at v[i].
        dirs.push_back(v2(e1[1], -e1[0]).normalized() + v2(e0[1], -e0[0]).normalized());
    }
    CHECK(is_equivalent(underapproximate(x, dirs, kCtx), x, kCtx));
}

TEST_CASE("sandwich property") {
    std::mt19937_64 rng(50);
    for (int trial = 0; trial < 20; ++trial) {
        const VPolygon x(oracle::random_cloud(rng, 8));
        const VPolytope under = underapproximate(x, generate_directions(DirectionTemplate::polar(8)), kCtx);
        const ConcreteSet over = overapproximate_template(x, DirectionTemplate::oct(2), kCtx);
        CHECK(is_subset(under, x, kCtx));
        CHECK(is_subset(x, over, kCtx));
    }
}
