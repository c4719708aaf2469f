#include "numrange/duality.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "numrange/rng.hpp"

namespace numrange {

Complex apply_functional(const Functional& phi, const Vec& z) {
    if (phi.y.size() != z.size())
        throw std::invalid_argument("apply_functional: dimension mismatch");
    Complex s = 0.0;
    for (Eigen::Index k = 0; k < z.size(); ++k) s += z[k] * phi.y[k];
    return s;
}

double dual_exponent(double p) {
    if (p < 1.0) throw std::invalid_argument("dual_exponent: p < 1");
    if (p == 1.0) return kInf;
    if (p == kInf) return 1.0;
    return p / (p - 1.0);
}

DualitySet duality_set_exact(const Algebra& A, const Vec& x) {
    const auto* pn = std::get_if<PNorm>(&A.norm);
    if (!pn)
        throw std::invalid_argument("duality_set_exact: requires a p-norm algebra");
    const double p = pn->p;
    if (std::abs(pnorm(x, p) - 1.0) > 1e-9)
        throw std::invalid_argument("duality_set_exact: x is not on the unit sphere");
    const int d = static_cast<int>(x.size());
    DualitySet ds;
    ds.x = x;
    ds.q = dual_exponent(p);
    if (p == 1.0) {
        L1Family fam;
        fam.fixed = Vec::Zero(d);
        for (int k = 0; k < d; ++k) {
            const double m = std::abs(x[k]);
            if (m > 0.0) {
                fam.fixed[k] = std::conj(x[k]) / (m * m) * m;  // conj(x_k)/|x_k|
                fam.support.push_back(k);
            } else {
                fam.free_idx.push_back(k);
            }
        }
        ds.family = std::move(fam);
        return ds;
    }
    if (p == kInf) {
        LInfFamily fam;
        double m = 0.0;
        for (int k = 0; k < d; ++k) m = std::max(m, std::abs(x[k]));
        fam.phases = Vec::Zero(d);
        for (int k = 0; k < d; ++k) {
            const double ak = std::abs(x[k]);
            if (ak >= m - 1e-9) {  // argmax tie tolerance
                fam.argmax.push_back(k);
                // x_k * phases_k = 1 exactly, so <x, y> = sum t_k holds exactly
                fam.phases[k] = std::conj(x[k]) / (ak * ak);
            }
        }
        ds.family = std::move(fam);
        return ds;
    }
    SmoothPoint sp;
    sp.y.q = ds.q;
    sp.y.y = Vec::Zero(d);
    for (int k = 0; k < d; ++k) {
        const double m = std::abs(x[k]);
        if (m > 0.0) sp.y.y[k] = std::conj(x[k]) * std::pow(m, p - 2.0);
    }
    ds.family = std::move(sp);
    return ds;
}

DualNormEstimator::DualNormEstimator(NormEvaluator norm_eval_fn, int dim,
                                     std::uint64_t seed)
    : norm_(std::move(norm_eval_fn)) {
    Rng rng(seed);
    sphere_.reserve(10000 + 2 * dim);
    for (int k = 0; k < dim; ++k) {
        add(Vec::Unit(dim, k));
        add(Vec::Ones(dim));
    }
    for (int s = 0; s < 10000; ++s) {
        Vec z(dim);
        for (int k = 0; k < dim; ++k) z[k] = rng.cgaussian();
        add(z);
    }
}

void DualNormEstimator::add(Vec z) {
    const double n = norm_(z);
    if (n > 0.0) sphere_.push_back(z / n);
}

double DualNormEstimator::estimate(const Vec& y) const {
    double best = 0.0;
    Vec zbest;
    for (const auto& z : sphere_) {
        Complex s = 0.0;
        for (Eigen::Index k = 0; k < z.size(); ++k) s += z[k] * y[k];
        const double v = std::abs(s);
        if (v > best) {
            best = v;
            zbest = z;
        }
    }
    if (zbest.size() == 0) return best;
    // 16 ascent refinements from the best sample
    auto ratio = [&](const Vec& z) {
        const double n = norm_(z);
        if (n <= 0.0) return 0.0;
        Complex s = 0.0;
        for (Eigen::Index k = 0; k < z.size(); ++k) s += z[k] * y[k];
        return std::abs(s) / n;
    };
    Vec z = zbest;
    double step = 0.05;
    // ascend over at most 8 coordinates per iteration (round-robin for
    // determinism); full gradients at dim ~50 cost 4*dim norm evaluations
    // per step and dominate the whole pipeline
    const int d = static_cast<int>(z.size());
    const int width = std::min(d, 8);
    for (int it = 0; it < 16 && step > 1e-9; ++it) {
        const double h = 1e-6;
        Vec grad = Vec::Zero(d);
        for (int c = 0; c < width; ++c) {
            const int k = (it * width + c) % d;
            Vec zp = z, zm = z;
            zp[k] += h;
            zm[k] -= h;
            const double gre = (ratio(zp) - ratio(zm)) / (2 * h);
            zp = z;
            zm = z;
            zp[k] += Complex(0, h);
            zm[k] -= Complex(0, h);
            const double gim = (ratio(zp) - ratio(zm)) / (2 * h);
            grad[k] = Complex(gre, gim);
        }
        const double gn = grad.norm();
        if (gn < 1e-14) break;
        Vec cand = z + (step / gn) * grad;
        if (ratio(cand) > ratio(z)) {
            z = cand;
            best = std::max(best, ratio(z));
        } else {
            step *= 0.5;
        }
    }
    return std::max(best, ratio(z));
}

namespace {

/// Real gradient of the norm at u over the 2*dim real coordinates, central
/// differences with step h; returned already complexified as
/// y_k = g_{re,k} - i * g_{im,k}, i.e. phi(z) = f(z) - i f(iz).
Vec fd_gradient(const NormEvaluator& norm, const Vec& u, double h) {
    const int d = static_cast<int>(u.size());
    Vec y(d);
    for (int k = 0; k < d; ++k) {
        Vec up = u, um = u;
        up[k] += h;
        um[k] -= h;
        const double gre = (norm(up) - norm(um)) / (2 * h);
        up = u;
        um = u;
        up[k] += Complex(0, h);
        um[k] -= Complex(0, h);
        const double gim = (norm(up) - norm(um)) / (2 * h);
        y[k] = Complex(gre, -gim);
    }
    return y;
}

}  // namespace

DualitySet norming_functional_numeric(const NormEvaluator& norm_eval_fn,
                                      const Vec& x, int probe_directions,
                                      double delta, std::uint64_t seed,
                                      const DualNormEstimator* shared_estimator) {
    if (probe_directions < 1)
        throw std::invalid_argument("norming_functional_numeric: need >= 1 probe");
    if (std::abs(norm_eval_fn(x) - 1.0) > 1e-9)
        throw std::invalid_argument(
            "norming_functional_numeric: x is not on the unit sphere");
    const int d = static_cast<int>(x.size());
    NumericCloud cloud;
    cloud.feas_tol = 1e-6;
    cloud.note =
        "dual-norm feasibility uses a sampled lower bound of ||phi||*; "
        "acceptance is permissive";
    std::unique_ptr<DualNormEstimator> own;
    if (!shared_estimator) {
        own = std::make_unique<DualNormEstimator>(norm_eval_fn, d,
                                                  mix_seed(seed, 0xd0a1));
        shared_estimator = own.get();
    }
    const DualNormEstimator& est = *shared_estimator;
    Rng rng(mix_seed(seed, 0x9201));
    int rejected = 0;
    for (int pr = 0; pr < probe_directions; ++pr) {
        Vec w(d);
        if (pr == 0)
            w = Vec::Zero(d);
        else
            for (int k = 0; k < d; ++k) w[k] = rng.cgaussian();
        // Gradients at both steps plus the Richardson pair. For smooth norms
        // all three collapse to the unique norming functional; at kinks the
        // step-dependent smoothing sweeps out the subdifferential.
        const Vec g1 = fd_gradient(norm_eval_fn, x + delta * w, delta);
        const Vec g2 = fd_gradient(norm_eval_fn, x + (delta / 4.0) * w, delta / 4.0);
        const Vec gr = (16.0 * g2 - g1) / 15.0;
        for (const Vec* g : {&g1, &g2, &gr}) {
            Functional phi;
            phi.y = *g;
            Complex at_x = apply_functional(phi, x);
            if (std::abs(at_x) < 0.5) {
                ++rejected;
                continue;
            }
            phi.y /= at_x;  // project to phi(x) = 1
            const double dn = est.estimate(phi.y);
            const double resid = std::max(0.0, dn - 1.0);
            if (resid <= cloud.feas_tol) {
                cloud.members.push_back(std::move(phi));
                cloud.residuals.push_back(resid);
            } else {
                ++rejected;
            }
        }
    }
    if (cloud.members.empty())
        cloud.note += "; all " + std::to_string(rejected) +
                      " probes rejected (norm too degenerate at x)";
    DualitySet ds;
    ds.x = x;
    ds.family = std::move(cloud);
    return ds;
}

std::vector<Functional> sample_duality_set(const DualitySet& ds, int k,
                                           std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("sample_duality_set: k >= 1 required");
    std::vector<Functional> out;
    out.reserve(static_cast<std::size_t>(k));
    const int d = static_cast<int>(ds.x.size());
    Rng rng(seed);
    if (const auto* sp = std::get_if<SmoothPoint>(&ds.family)) {
        for (int i = 0; i < k; ++i) out.push_back(sp->y);
        return out;
    }
    if (const auto* l1 = std::get_if<L1Family>(&ds.family)) {
        for (int i = 0; i < k; ++i) {
            Functional phi;
            phi.q = kInf;
            phi.y = l1->fixed;
            // alternate extreme (circle) and interior (disk) draws: the
            // extreme points carry the hull, the interior ones the convexity
            for (int idx : l1->free_idx)
                phi.y[idx] = i % 2 == 0 ? Complex(rng.unit_phase()) : rng.disk();
            out.push_back(std::move(phi));
        }
        return out;
    }
    if (const auto* li = std::get_if<LInfFamily>(&ds.family)) {
        const int m = static_cast<int>(li->argmax.size());
        for (int i = 0; i < k; ++i) {
            Functional phi;
            phi.q = 1.0;
            phi.y = Vec::Zero(d);
            std::vector<double> t;
            if (m == 1) {
                t = {1.0};
            } else if (i == 0) {
                t.assign(m, 1.0 / m);  // barycenter first, deterministic anchor
            } else {
                t = rng.simplex(m);
            }
            for (int j = 0; j < m; ++j) phi.y[li->argmax[j]] = t[j] * li->phases[li->argmax[j]];
            out.push_back(std::move(phi));
        }
        return out;
    }
    const auto& nc = std::get<NumericCloud>(ds.family);
    if (nc.members.empty())
        throw std::runtime_error("sample_duality_set: empty numeric cloud");
    for (int i = 0; i < k; ++i)
        out.push_back(nc.members[static_cast<std::size_t>(i) % nc.members.size()]);
    return out;
}

double duality_residual(const Functional& phi, const Vec& x, double p) {
    const double q = dual_exponent(p);
    const double r1 = std::abs(apply_functional(phi, x) - Complex(1.0));
    const double r2 = pnorm(phi.y, q) - 1.0;
    return std::max(r1, r2);
}

}  // namespace numrange
