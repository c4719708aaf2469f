#ifndef NUMRANGE_GEOMETRY_HPP
#define NUMRANGE_GEOMETRY_HPP

#include <complex>
#include <string>
#include <vector>

namespace numrange {

using Complex = std::complex<double>;

/// Convex polygon in C, canonical form: vertices CCW starting from the
/// lexicographically least (Re, then Im); no duplicate or interior-collinear
/// vertices. Degenerate cases: empty, single point, segment.
struct ConvexPolygon {
    std::vector<Complex> vertices;

    bool empty() const { return vertices.empty(); }
    std::size_t size() const { return vertices.size(); }
};

/// Monotone-chain hull, canonicalized. Duplicates within 1e-12 collapse.
ConvexPolygon convex_hull(std::vector<Complex> points);

/// h(theta) = max Re(e^{-i theta} v) over vertices.
double support(const ConvexPolygon& P, double theta);

/// Hausdorff distance between convex bodies via support functions over
/// n_dirs equally spaced directions.
double hausdorff(const ConvexPolygon& P, const ConvexPolygon& Q, int n_dirs = 720);

/// Euclidean distance of z to P, negative inside.
double signed_distance(const ConvexPolygon& P, Complex z);

/// {alpha*z + beta : z in P}, re-canonicalized.
ConvexPolygon scale_translate(const ConvexPolygon& P, Complex alpha, Complex beta);

/// Intersection of halfplanes {z : Re(e^{-i theta_j} z) <= h_j}, clipped
/// against a bounding box then canonicalized.
ConvexPolygon halfplane_intersection(const std::vector<double>& thetas,
                                     const std::vector<double>& h);

/// Stable JSON form {"vertices": [[re, im], ...], "meta": {...}}.
std::string polygon_to_json(const ConvexPolygon& P, const std::string& meta_json = "{}");
ConvexPolygon polygon_from_json(const std::string& text);

}  // namespace numrange

#endif
