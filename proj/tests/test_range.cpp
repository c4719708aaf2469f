#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "numrange/range.hpp"
#include "numrange/rng.hpp"
#include "numrange/verify.hpp"

using namespace numrange;

namespace {

ConvexPolygon regular_ngon(Complex center, double r, int n) {
    std::vector<Complex> pts;
    for (int k = 0; k < n; ++k)
        pts.push_back(center + std::polar(r, 2.0 * M_PI * k / n));
    return convex_hull(std::move(pts));
}

Vec random_vec(Rng& rng, int d) {
    Vec v(d);
    for (int k = 0; k < d; ++k) v[k] = rng.cgaussian();
    return v;
}

}  // namespace

TEST_CASE("v_at with the euclidean norm evaluates a quadratic form") {
    const auto A = pointwise_algebra(2, 2.0);
    Rng rng(15);
    for (int s = 0; s < 20; ++s) {
        Vec x = random_vec(rng, 2);
        x /= x.norm();
        const Vec a = random_vec(rng, 2);
        const auto cloud = v_at(*A, a, x, 5, 0);
        // D(x) is the single functional y = conj(x), so
        // phi(a*x) = sum_k a_k x_k conj(x_k) = sum_k a_k |x_k|^2
        const Complex want = a[0] * std::norm(x[0]) + a[1] * std::norm(x[1]);
        for (const auto& pt : cloud.points)
            CHECK(std::abs(pt.z - want) <= 1e-12);
    }
}

TEST_CASE("v_at rejects off-sphere x") {
    const auto A = pointwise_algebra(2, 2.0);
    Vec x(2);
    x << 2.0, 0.0;
    CHECK_THROWS_AS(v_at(*A, x, x, 5, 0), std::invalid_argument);
}

TEST_CASE("sphere samples land on the unit sphere, deterministically") {
    for (double p : {1.0, 2.0, kInf}) {
        const auto A = pointwise_algebra(3, p);
        const auto xs = sphere_sample(*A, 200, 42);
        CHECK(xs.size() >= 200);
        for (const auto& x : xs)
            CHECK(std::abs(norm_eval(*A, x) - 1.0) <= 1e-9);
        const auto ys = sphere_sample(*A, 200, 42);
        REQUIRE(ys.size() == xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
            CHECK((xs[i] - ys[i]).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("pointwise sup algebra: range of a diagonal element is the "
          "convex hull of its entries") {
    const auto A = pointwise_algebra(2, kInf);
    Vec a(2);
    a << Complex(1, 0), Complex(0, 1);
    const auto est = spatial_range(*A, a, 300, 20, 1);
    // every phi(ax) is a convex combination of phases*a_k values of modulus
    // <= max; the hull is the segment [1, i], both endpoints attained
    const auto seg = convex_hull({{1, 0}, {0, 1}});
    CHECK(hausdorff(est.hull, seg) <= 1e-9);
    CHECK(numerical_radius(est) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spatial_range is reproducible byte-for-byte") {
    const auto A = example32(1.0);
    Vec a(2);
    a << Complex(0.3, 0.1), Complex(-1, 2);
    const auto e1 = spatial_range(*A, a, 100, 10, 5);
    const auto e2 = spatial_range(*A, a, 100, 10, 5);
    CHECK(cloud_to_csv(e1.cloud) == cloud_to_csv(e2.cloud));
    const auto e3 = spatial_range(*A, a, 100, 10, 6);
    CHECK(cloud_to_csv(e1.cloud) != cloud_to_csv(e3.cloud));
}

TEST_CASE("numerical radius checks hull/cloud consistency") {
    const auto A = pointwise_algebra(2, 2.0);
    Vec a(2);
    a << 2.0, -1.0;
    auto est = spatial_range(*A, a, 100, 5, 0);
    CHECK(numerical_radius(est) <= 2.0 + 1e-12);
    est.hull.vertices.clear();
    est.hull.vertices.push_back(Complex(50, 0));
    CHECK_THROWS_AS(numerical_radius(est), std::runtime_error);
}

TEST_CASE("support oracle at the identity: pointwise sup algebra") {
    const auto A = pointwise_algebra(2, kInf);
    NormEvaluator ne = [&A](const Vec& z) { return norm_eval(*A, z); };
    const Vec one = Vec::Ones(2);
    SUBCASE("b = (1,-1) gives the segment [-1,1]") {
        Vec b(2);
        b << 1.0, -1.0;
        const auto P =
            support_range_at_identity(ne, one, b, 720, default_t_schedule());
        CHECK(hausdorff(P, convex_hull({{-1, 0}, {1, 0}})) <= 2e-3);
    }
    SUBCASE("b = 1 gives the point {1}") {
        const auto P = support_range_at_identity(ne, one, Vec::Ones(2), 720,
                                                 default_t_schedule());
        REQUIRE_FALSE(P.empty());
        for (auto v : P.vertices) CHECK(std::abs(v - Complex(1.0)) <= 1e-4);
    }
    SUBCASE("schedule validation") {
        CHECK_THROWS_AS(
            support_range_at_identity(ne, one, one, 720, {1e-2}),
            std::invalid_argument);
        CHECK_THROWS_AS(
            support_range_at_identity(ne, one, one, 720, {1e-3, 1e-2}),
            std::invalid_argument);
        Vec big = 3.0 * one;
        CHECK_THROWS_AS(support_range_at_identity(ne, big, one, 720,
                                                  default_t_schedule()),
                        std::invalid_argument);
    }
}

TEST_CASE("l1-unitization disk polygon") {
    const auto A = example31(1.0);
    Rng rng(33);
    for (int s = 0; s < 15; ++s) {
        const Vec a = random_vec(rng, 2);
        const Complex lam = rng.cgaussian();
        const auto disk = v1_at_identity(*A, a, lam);
        const double r = pnorm(a, 1.0);
        CHECK(disk.radius == r);
        double maxmod = 0.0;
        for (auto v : disk.polygon.vertices) {
            CHECK(std::abs(v - lam) <= r + 1e-12);
            maxmod = std::max(maxmod, std::abs(v));
        }
        // the phase-pinned extreme vertex attains |lambda| + r exactly
        CHECK(std::abs(maxmod - (std::abs(lam) + r)) <= 1e-12 * (1.0 + r));
        CHECK(hausdorff(disk.polygon, regular_ngon(lam, r, 1440)) <= 1e-4 * r);
    }
    const auto degenerate = v1_at_identity(*A, Vec::Zero(2), Complex(2, 1));
    REQUIRE(degenerate.polygon.size() == 1);
    CHECK(degenerate.polygon.vertices[0] == Complex(2, 1));
}

TEST_CASE("cloud csv round trip") {
    const auto A = example32(kInf);
    Vec a(2);
    a << Complex(0.25, -0.125), Complex(1.0 / 3.0, 7.0);
    const auto est = spatial_range(*A, a, 50, 8, 9);
    const std::string csv = cloud_to_csv(est.cloud);
    const auto back = cloud_from_csv(csv);
    REQUIRE(back.points.size() == est.cloud.points.size());
    for (std::size_t i = 0; i < back.points.size(); ++i) {
        CHECK(back.points[i].z == est.cloud.points[i].z);  // %.17g is exact
        CHECK(back.points[i].x_index == est.cloud.points[i].x_index);
        CHECK(back.points[i].phi_index == est.cloud.points[i].phi_index);
    }
    CHECK_THROWS_AS(cloud_from_csv("wrong,header\n"), std::invalid_argument);
    CHECK_THROWS_AS(cloud_from_csv("re,im,x_index,phi_index\n1,2\n"),
                    std::invalid_argument);
}
