#include "numrange/geometry.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace numrange {
namespace {

double cross(Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

bool lex_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

ConvexPolygon convex_hull(std::vector<Complex> pts) {
    ConvexPolygon P;
    if (pts.empty()) return P;
    std::sort(pts.begin(), pts.end(), lex_less);
    // collapse near-duplicates
    double scale = 0.0;
    for (auto z : pts) scale = std::max({scale, std::abs(z.real()), std::abs(z.imag())});
    const double eq_tol = 1e-12 * std::max(1.0, scale);
    std::vector<Complex> u;
    for (auto z : pts)
        if (u.empty() || std::abs(z - u.back()) > eq_tol) u.push_back(z);
    if (u.size() == 1) {
        P.vertices = u;
        return P;
    }
    const double area_tol = eq_tol * std::max(1.0, scale);
    std::vector<Complex> hull;
    hull.reserve(2 * u.size());
    for (const auto& z : u) {  // lower
        while (hull.size() >= 2 &&
               cross(hull[hull.size() - 2], hull.back(), z) <= area_tol)
            hull.pop_back();
        hull.push_back(z);
    }
    const std::size_t lower = hull.size() + 1;
    for (auto it = u.rbegin() + 1; it != u.rend(); ++it) {  // upper
        while (hull.size() >= lower &&
               cross(hull[hull.size() - 2], hull.back(), *it) <= area_tol)
            hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();  // last == first
    if (hull.size() == 2 && std::abs(hull[0] - hull[1]) <= eq_tol) hull.pop_back();
    P.vertices = std::move(hull);
    return P;
}

double support(const ConvexPolygon& P, double theta) {
    if (P.empty()) throw std::invalid_argument("support: empty polygon");
    const double c = std::cos(theta), s = std::sin(theta);
    double h = -std::numeric_limits<double>::infinity();
    for (auto v : P.vertices) h = std::max(h, c * v.real() + s * v.imag());
    return h;
}

double hausdorff(const ConvexPolygon& P, const ConvexPolygon& Q, int n_dirs) {
    if (P.empty() || Q.empty())
        throw std::invalid_argument("hausdorff: empty polygon");
    if (n_dirs < 3) throw std::invalid_argument("hausdorff: n_dirs too small");
    double d = 0.0;
    for (int j = 0; j < n_dirs; ++j) {
        const double theta = 2.0 * M_PI * j / n_dirs;
        d = std::max(d, std::abs(support(P, theta) - support(Q, theta)));
    }
    return d;
}

namespace {

double point_segment_distance(Complex z, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(z - a);
    double t = ((z.real() - a.real()) * ab.real() + (z.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(z - (a + t * ab));
}

}  // namespace

double signed_distance(const ConvexPolygon& P, Complex z) {
    if (P.empty()) throw std::invalid_argument("signed_distance: empty polygon");
    const auto& v = P.vertices;
    if (v.size() == 1) return std::abs(z - v[0]);
    if (v.size() == 2) return point_segment_distance(z, v[0], v[1]);
    bool inside = true;
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Complex a = v[i], b = v[(i + 1) % v.size()];
        if (cross(a, b, z) < 0.0) inside = false;
        dmin = std::min(dmin, point_segment_distance(z, a, b));
    }
    return inside ? -dmin : dmin;
}

ConvexPolygon scale_translate(const ConvexPolygon& P, Complex alpha, Complex beta) {
    std::vector<Complex> pts;
    pts.reserve(P.vertices.size());
    for (auto v : P.vertices) pts.push_back(alpha * v + beta);
    return convex_hull(std::move(pts));
}

ConvexPolygon halfplane_intersection(const std::vector<double>& thetas,
                                     const std::vector<double>& h) {
    if (thetas.size() != h.size() || thetas.empty())
        throw std::invalid_argument("halfplane_intersection: bad input");
    double R = 1.0;
    for (double v : h) R = std::max(R, std::abs(v));
    R *= 4.0;
    std::vector<Complex> poly = {{-R, -R}, {R, -R}, {R, R}, {-R, R}};
    for (std::size_t j = 0; j < thetas.size() && !poly.empty(); ++j) {
        const double c = std::cos(thetas[j]), s = std::sin(thetas[j]);
        auto val = [&](Complex z) { return c * z.real() + s * z.imag() - h[j]; };
        std::vector<Complex> next;
        next.reserve(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Complex a = poly[i], b = poly[(i + 1) % poly.size()];
            const double va = val(a), vb = val(b);
            if (va <= 0.0) next.push_back(a);
            if ((va < 0.0 && vb > 0.0) || (va > 0.0 && vb <= 0.0)) {
                const double t = va / (va - vb);
                next.push_back(a + t * (b - a));
            }
        }
        poly = std::move(next);
    }
    return convex_hull(std::move(poly));
}

std::string polygon_to_json(const ConvexPolygon& P, const std::string& meta_json) {
    nlohmann::ordered_json j;
    auto verts = nlohmann::ordered_json::array();
    for (auto v : P.vertices)
        verts.push_back(nlohmann::ordered_json::array({v.real(), v.imag()}));
    j["vertices"] = std::move(verts);
    j["meta"] = nlohmann::ordered_json::parse(meta_json);
    return j.dump(2) + "\n";
}

ConvexPolygon polygon_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("polygon: ") + e.what());
    }
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("polygon: missing vertices array");
    ConvexPolygon P;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2)
            throw std::invalid_argument("polygon: vertices must be [re, im] pairs");
        P.vertices.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
    return P;
}

}  // namespace numrange
