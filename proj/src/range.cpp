#include "numrange/range.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "numrange/rng.hpp"

namespace numrange {

void PointCloud::append(const PointCloud& other) {
    const int x_off = static_cast<int>(sphere_points.size());
    const int phi_off = static_cast<int>(functionals.size());
    sphere_points.insert(sphere_points.end(), other.sphere_points.begin(),
                         other.sphere_points.end());
    functionals.insert(functionals.end(), other.functionals.begin(),
                       other.functionals.end());
    for (auto pt : other.points) {
        pt.x_index += x_off;
        pt.phi_index += phi_off;
        points.push_back(pt);
    }
}

PointCloud v_at(const Algebra& A, const Vec& a, const Vec& x, int n_dual,
                std::uint64_t seed, const DualNormEstimator* shared_estimator) {
    if (n_dual < 1) throw std::invalid_argument("v_at: n_dual >= 1 required");
    if (std::abs(norm_eval(A, x) - 1.0) > 1e-9)
        throw std::invalid_argument("v_at: x is not on the unit sphere");
    DualitySet ds;
    if (std::holds_alternative<PNorm>(A.norm)) {
        ds = duality_set_exact(A, x);
    } else {
        NormEvaluator ne = [&A](const Vec& z) { return norm_eval(A, z); };
        ds = norming_functional_numeric(ne, x, n_dual, 1e-5, mix_seed(seed, 0x0d),
                                        shared_estimator);
        if (std::get<NumericCloud>(ds.family).members.empty())
            throw std::runtime_error("v_at: no feasible norming functional at x");
    }
    PointCloud cloud;
    cloud.algebra_name = A.name;
    cloud.element = a;
    cloud.seed = seed;
    cloud.sphere_points.push_back(x);
    cloud.functionals = sample_duality_set(ds, n_dual, mix_seed(seed, 0xf1));
    const Vec ax = multiply(A, a, x);
    for (int i = 0; i < static_cast<int>(cloud.functionals.size()); ++i)
        cloud.points.push_back({apply_functional(cloud.functionals[i], ax), 0, i});
    return cloud;
}

std::vector<Vec> sphere_sample(const Algebra& A, int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sphere_sample: n >= 1 required");
    const int d = A.dim;
    std::vector<Vec> out;
    auto push_normalized = [&](Vec z) {
        const double nv = norm_eval(A, z);
        if (nv > 1e-12) out.push_back(z / nv);
    };
    const auto* pn = std::get_if<PNorm>(&A.norm);
    for (int i = 0; i < d; ++i) push_normalized(Vec::Unit(d, i));
    if (pn) {
        static const Complex sigmas[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                for (const auto& s : sigmas)
                    push_normalized(Vec::Unit(d, i) + s * Vec::Unit(d, j));
        if (pn->p == kInf) {
            // extreme points of the polydisc: enumerable sign patterns plus
            // seeded random full-modulus phase vectors below
            if (d <= 8) {
                for (long m = 0; m < (1L << d); ++m) {
                    Vec z(d);
                    for (int k = 0; k < d; ++k) z[k] = (m >> k) & 1 ? -1.0 : 1.0;
                    out.push_back(z);
                }
            }
            if (d <= 4) {
                const long total = static_cast<long>(std::pow(4.0, d));
                for (long m = 0; m < total; ++m) {
                    Vec z(d);
                    long t = m;
                    for (int k = 0; k < d; ++k) {
                        z[k] = sigmas[t & 3];
                        t >>= 2;
                    }
                    out.push_back(z);
                }
            }
        }
    }
    Rng rng(mix_seed(seed, 0x5e));
    const bool torus = pn && pn->p == kInf;
    while (static_cast<int>(out.size()) < n) {
        Vec z(d);
        if (torus && (out.size() % 2 == 0)) {
            for (int k = 0; k < d; ++k) z[k] = rng.unit_phase();
            out.push_back(z);
        } else {
            for (int k = 0; k < d; ++k) z[k] = rng.cgaussian();
            push_normalized(z);
        }
    }
    return out;
}

RangeEstimate spatial_range(const Algebra& A, const Vec& a, int n_sphere,
                            int n_dual, std::uint64_t seed) {
    if (n_sphere < 1 || n_dual < 1)
        throw std::invalid_argument("spatial_range: n_sphere, n_dual >= 1 required");
    RangeEstimate est;
    est.cloud.algebra_name = A.name;
    est.cloud.element = a;
    est.cloud.seed = seed;
    const auto xs = sphere_sample(A, n_sphere, seed);
    std::unique_ptr<DualNormEstimator> shared;
    if (!std::holds_alternative<PNorm>(A.norm))
        shared = std::make_unique<DualNormEstimator>(
            [&A](const Vec& z) { return norm_eval(A, z); }, A.dim,
            mix_seed(seed, 0xd0a1));
    for (std::size_t idx = 0; idx < xs.size(); ++idx)
        est.cloud.append(v_at(A, a, xs[idx], n_dual, mix_seed(seed, idx),
                              shared.get()));
    std::vector<Complex> pts;
    pts.reserve(est.cloud.points.size());
    est.radius = 0.0;
    est.radius_witness = 0.0;
    for (const auto& pt : est.cloud.points) {
        pts.push_back(pt.z);
        if (std::abs(pt.z) >= est.radius) {
            est.radius = std::abs(pt.z);
            est.radius_witness = pt.z;
        }
    }
    est.hull = convex_hull(std::move(pts));
    return est;
}

double numerical_radius(const RangeEstimate& est) {
    if (est.cloud.points.empty())
        throw std::invalid_argument("numerical_radius: empty cloud");
    double cloud_max = 0.0;
    for (const auto& pt : est.cloud.points)
        cloud_max = std::max(cloud_max, std::abs(pt.z));
    double hull_max = 0.0;
    for (auto v : est.hull.vertices) hull_max = std::max(hull_max, std::abs(v));
    if (std::abs(cloud_max - hull_max) > 1e-12 * std::max(1.0, cloud_max))
        throw std::runtime_error("numerical_radius: hull/cloud maxima disagree");
    return cloud_max;
}

namespace {

// Direction-optimal member of the exact duality set at x: the functional in
// D(x) maximizing Re(dir * phi(a*x)), in closed form per family.
Functional directional_functional(const DualitySet& ds, const Vec& ax,
                                  Complex dir) {
    if (const auto* sp = std::get_if<SmoothPoint>(&ds.family)) return sp->y;
    if (const auto* l1 = std::get_if<L1Family>(&ds.family)) {
        Functional phi;
        phi.q = kInf;
        phi.y = l1->fixed;
        for (int idx : l1->free_idx) {
            const Complex c = ax[idx];
            const double m = std::abs(c);
            // free coordinate maximizing Re(dir * c * y) over |y| <= 1
            phi.y[idx] = m > 0.0 ? std::conj(c) / (m * dir) : Complex(0.0);
        }
        return phi;
    }
    const auto& li = std::get<LInfFamily>(ds.family);
    int best = li.argmax.front();
    double bv = -std::numeric_limits<double>::infinity();
    for (int j : li.argmax) {
        const double v = (dir * ax[j] * li.phases[j]).real();
        if (v > bv) {
            bv = v;
            best = j;
        }
    }
    Functional phi;
    phi.q = 1.0;
    phi.y = Vec::Zero(ds.x.size());
    phi.y[best] = li.phases[best];
    return phi;
}

}  // namespace

void refine_range(const Algebra& A, const Vec& a, RangeEstimate& est,
                  int n_dirs, int n_iters, std::uint64_t seed) {
    const auto* pn = std::get_if<PNorm>(&A.norm);
    if (!pn) return;
    if (est.cloud.points.empty() || est.cloud.sphere_points.empty()) return;
    const int d = A.dim;
    const bool is_l1 = pn->p == 1.0;
    const bool is_linf = pn->p == kInf;
    Rng rng(mix_seed(seed, 0x4e51));
    auto probe = [&](const Vec& x, Complex dir) {
        const Vec ax = multiply(A, a, x);
        const DualitySet ds = duality_set_exact(A, x);
        Functional phi = directional_functional(ds, ax, dir);
        const Complex z = apply_functional(phi, ax);
        return std::make_tuple((dir * z).real(), std::move(phi), z);
    };
    for (int j = 0; j < n_dirs; ++j) {
        const double theta = 2.0 * M_PI * j / n_dirs;
        const Complex dir = std::polar(1.0, -theta);
        // warm start from the cloud point furthest along this direction
        const CloudPoint* start = &est.cloud.points.front();
        double sv = -std::numeric_limits<double>::infinity();
        for (const auto& pt : est.cloud.points) {
            const double v = (dir * pt.z).real();
            if (v > sv) {
                sv = v;
                start = &pt;
            }
        }
        Vec xb;
        double vb = -std::numeric_limits<double>::infinity();
        Functional phib;
        Complex zb{};
        // warm start from the cloud, plus random restarts: the landscape has
        // local maxima and a single climb gets stuck on some directions
        const int n_starts = 4;
        for (int s = 0; s < n_starts; ++s) {
            Vec x(d);
            if (s == 0) {
                x = est.cloud.sphere_points[
                    static_cast<std::size_t>(start->x_index)];
            } else {
                for (int k = 0; k < d; ++k) x[k] = rng.cgaussian();
                const double nv = norm_eval(A, x);
                if (nv <= 1e-12) continue;
                x /= nv;
            }
            auto [val, phi, z] = probe(x, dir);
            auto consider = [&](Vec cand) {
                const double nv = norm_eval(A, cand);
                if (nv <= 1e-12) return false;
                cand /= nv;
                auto [cv, cphi, cz] = probe(cand, dir);
                if (cv <= val) return false;
                x = std::move(cand);
                val = cv;
                phi = std::move(cphi);
                z = cz;
                return true;
            };
            // The duality set is only rich on degenerate strata that smooth
            // perturbations never reach: for l1, sparse supports (zeroed
            // coordinates become free dual coordinates); for sup norms,
            // modulus ties (every saturated coordinate joins the argmax
            // simplex). Probe single-coordinate degenerations up front and
            // keep them as explicit move types below.
            auto degenerate = [&](Vec& cand, int k) {
                if (is_l1) {
                    cand[k] = 0.0;
                } else if (is_linf) {
                    const double m = std::abs(cand[k]);
                    cand[k] = m > 0.0 ? cand[k] / m : Complex(1.0);
                }
            };
            if (is_l1 || is_linf) {
                for (int k = 0; k < d; ++k) {
                    Vec cand = x;
                    degenerate(cand, k);
                    consider(std::move(cand));
                }
            }
            double step = 0.5;
            for (int it = 0; it < n_iters && step > 1e-10; ++it) {
                Vec cand(d);
                const int move = static_cast<int>(rng.raw() % 3);
                for (int k = 0; k < d; ++k) {
                    if (move != 0 && is_l1 && x[k] == Complex(0.0))
                        cand[k] = 0.0;  // stay on the sparse stratum
                    else if (move != 0 && is_linf && std::abs(x[k]) >= 1.0 - 1e-12)
                        // stay on the tie stratum, perturb the phase only
                        cand[k] = x[k] * std::polar(1.0, step * rng.gaussian());
                    else
                        cand[k] = x[k] + step * rng.cgaussian();
                }
                if (move == 2 && (is_l1 || is_linf)) {
                    if (is_linf) {
                        const double nv = norm_eval(A, cand);
                        if (nv > 1e-12) cand /= nv;
                    }
                    degenerate(cand, static_cast<int>(rng.raw() % d));
                }
                if (!consider(std::move(cand))) step *= 0.97;
            }
            if (val > vb) {
                vb = val;
                xb = std::move(x);
                phib = std::move(phi);
                zb = z;
            }
        }
        Vec x = std::move(xb);
        Functional phi = std::move(phib);
        const Complex z = zb;
        const int xi = static_cast<int>(est.cloud.sphere_points.size());
        const int pi = static_cast<int>(est.cloud.functionals.size());
        est.cloud.sphere_points.push_back(std::move(x));
        est.cloud.functionals.push_back(std::move(phi));
        est.cloud.points.push_back({z, xi, pi});
    }
    std::vector<Complex> pts;
    pts.reserve(est.cloud.points.size());
    est.radius = 0.0;
    est.radius_witness = 0.0;
    for (const auto& pt : est.cloud.points) {
        pts.push_back(pt.z);
        if (std::abs(pt.z) >= est.radius) {
            est.radius = std::abs(pt.z);
            est.radius_witness = pt.z;
        }
    }
    est.hull = convex_hull(std::move(pts));
}

ConvexPolygon support_range_at_identity(const NormEvaluator& norm_eval_fn,
                                        const Vec& one, const Vec& b, int n_dirs,
                                        const std::vector<double>& t_schedule) {
    if (std::abs(norm_eval_fn(one) - 1.0) > 1e-9)
        throw std::invalid_argument("support_range_at_identity: ||1|| != 1");
    if (t_schedule.size() < 2)
        throw std::invalid_argument("support_range_at_identity: need >= 2 t values");
    for (std::size_t i = 0; i < t_schedule.size(); ++i) {
        if (t_schedule[i] <= 0.0 ||
            (i + 1 < t_schedule.size() && t_schedule[i + 1] >= t_schedule[i]))
            throw std::invalid_argument(
                "support_range_at_identity: t_schedule must be strictly decreasing "
                "and positive");
    }
    if (n_dirs < 3)
        throw std::invalid_argument("support_range_at_identity: n_dirs too small");
    std::vector<double> thetas(n_dirs), hs(n_dirs);
    for (int j = 0; j < n_dirs; ++j) {
        const double theta = 2.0 * M_PI * j / n_dirs;
        const Complex dir = std::polar(1.0, -theta);
        double h_min = std::numeric_limits<double>::infinity();
        for (const double t : t_schedule) {
            const double q = (norm_eval_fn(one + (t * dir) * b) - 1.0) / t;
            h_min = std::min(h_min, q);
        }
        thetas[j] = theta;
        // By convexity the quotient decreases monotonically as t -> 0+, so
        // the smallest-step quotient is already a valid upper bound on h.
        // Extrapolating below it is unsafe: for polyhedral norms the
        // quotient is exactly h on the sampled steps and any extrapolation
        // undercuts the body. The uniform 1e-6 slack gives the region
        // positive width so point/segment ranges survive the clipping.
        hs[j] = h_min + 1e-6;
    }
    return halfplane_intersection(thetas, hs);
}

DiskPolygon v1_at_identity(const Algebra& A, const Vec& a, Complex lambda) {
    DiskPolygon disk;
    disk.center = lambda;
    disk.radius = norm_eval(A, a);
    if (disk.radius == 0.0) {
        disk.polygon.vertices = {lambda};
        return disk;
    }
    // phase offset pins an exact extreme vertex at lambda*(1 + r/|lambda|)
    const double phase0 = lambda == Complex(0.0) ? 0.0 : std::arg(lambda);
    std::vector<Complex> pts;
    pts.reserve(720);
    for (int k = 0; k < 720; ++k)
        pts.push_back(lambda + std::polar(disk.radius, phase0 + 2.0 * M_PI * k / 720));
    disk.polygon = convex_hull(std::move(pts));
    return disk;
}

std::string cloud_to_csv(const PointCloud& cloud) {
    std::string out = "re,im,x_index,phi_index\n";
    char buf[128];
    for (const auto& pt : cloud.points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d,%d\n", pt.z.real(),
                      pt.z.imag(), pt.x_index, pt.phi_index);
        out += buf;
    }
    return out;
}

PointCloud cloud_from_csv(const std::string& text) {
    PointCloud cloud;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "re,im,x_index,phi_index")
        throw std::invalid_argument("cloud csv: bad header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        CloudPoint pt;
        double re = 0.0, im = 0.0;
        if (std::sscanf(line.c_str(), "%lg,%lg,%d,%d", &re, &im, &pt.x_index,
                        &pt.phi_index) != 4)
            throw std::invalid_argument("cloud csv: bad row: " + line);
        pt.z = Complex(re, im);
        cloud.points.push_back(pt);
    }
    return cloud;
}

}  // namespace numrange
