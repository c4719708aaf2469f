#ifndef NUMRANGE_RANGE_HPP
#define NUMRANGE_RANGE_HPP

#include <string>
#include <vector>

#include "numrange/algebra.hpp"
#include "numrange/duality.hpp"
#include "numrange/geometry.hpp"

namespace numrange {

/// One sampled value phi(a*x) with provenance indices into the owning
/// cloud's sphere-point and functional records.
struct CloudPoint {
    Complex z;
    int x_index = 0;
    int phi_index = 0;
};

struct PointCloud {
    std::vector<CloudPoint> points;
    std::vector<Vec> sphere_points;       // recorded x per x_index
    std::vector<Functional> functionals;  // recorded phi per phi_index
    std::string algebra_name;
    Vec element;
    std::uint64_t seed = 0;

    void append(const PointCloud& other);
};

struct RangeEstimate {
    PointCloud cloud;
    ConvexPolygon hull;
    double radius = 0.0;       // max |z| over the cloud
    Complex radius_witness{};  // a point attaining it
};

/// V(a;x) = {phi(a*x) : phi in D(x)} sampled with n_dual functionals.
/// Exact duality families for p-norm algebras, finite-difference norming
/// functionals otherwise.
PointCloud v_at(const Algebra& A, const Vec& a, const Vec& x, int n_dual,
                std::uint64_t seed,
                const DualNormEstimator* shared_estimator = nullptr);

/// Deterministic unit-sphere sample: basis vectors, +/-/i basis pairs,
/// sign-pattern and random-phase extreme points for p = inf, then
/// normalized complex-Gaussian directions up to n points total.
std::vector<Vec> sphere_sample(const Algebra& A, int n, std::uint64_t seed);

/// V(a) as the union of V(a;x) over the sphere sample.
RangeEstimate spatial_range(const Algebra& A, const Vec& a, int n_sphere,
                            int n_dual, std::uint64_t seed);

/// max |z| over the cloud; asserted equal to the hull-vertex maximum.
double numerical_radius(const RangeEstimate& est);

/// Pushes the sampled hull outward by hill-climbing sphere points in n_dirs
/// directions, picking the direction-optimal duality-set member in closed
/// form at each candidate. Every added point is a genuine member of V(a),
/// so this only tightens the inner approximation. p-norm algebras only;
/// no-op otherwise.
void refine_range(const Algebra& A, const Vec& a, RangeEstimate& est,
                  int n_dirs = 64, int n_iters = 200, std::uint64_t seed = 0);

/// Support-function oracle for the numerical range at the identity:
/// h(theta) = lim_{t->0+} (||1 + t e^{-i theta} b|| - 1) / t, bounded above
/// by the smallest sampled difference quotient (the quotient is monotone in
/// t by convexity) and intersected over n_dirs directions.
ConvexPolygon support_range_at_identity(const NormEvaluator& norm_eval_fn,
                                        const Vec& one, const Vec& b, int n_dirs,
                                        const std::vector<double>& t_schedule);

inline const std::vector<double>& default_t_schedule() {
    static const std::vector<double> s = {1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
    return s;
}

/// V_{A_e^1}(a + lambda*1; 1) = closed disk, center lambda, radius ||a||.
struct DiskPolygon {
    ConvexPolygon polygon;  // 720-gon with an exact extreme vertex
    Complex center{};
    double radius = 0.0;
};
DiskPolygon v1_at_identity(const Algebra& A, const Vec& a, Complex lambda);

/// CSV with columns re,im,x_index,phi_index.
std::string cloud_to_csv(const PointCloud& cloud);
PointCloud cloud_from_csv(const std::string& text);

}  // namespace numrange

#endif
