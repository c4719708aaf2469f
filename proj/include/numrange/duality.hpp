#ifndef NUMRANGE_DUALITY_HPP
#define NUMRANGE_DUALITY_HPP

#include <functional>
#include <variant>
#include <vector>

#include "numrange/algebra.hpp"

namespace numrange {

/// Element of the dual, represented by its coefficient vector under the
/// bilinear pairing <x, y> = sum_k x_k y_k (no conjugation).
struct Functional {
    Vec y;
    double q = std::numeric_limits<double>::quiet_NaN();  // dual exponent, when known
};

Complex apply_functional(const Functional& phi, const Vec& z);

/// q with 1/p + 1/q = 1; q(1) = inf, q(inf) = 1.
double dual_exponent(double p);

/// Exact parametrizations of D(x) for p-norms.
struct SmoothPoint {
    Functional y;
};
struct L1Family {
    // y_k fixed to conj(x_k)/|x_k|^2 on support(x); |y_k| <= 1 free elsewhere
    Vec fixed;
    std::vector<int> support;
    std::vector<int> free_idx;
};
struct LInfFamily {
    // y_k = t_k * phases[k] on the argmax set, t in the probability simplex
    std::vector<int> argmax;
    Vec phases;
};
/// Finite-difference norming functionals with feasibility residuals; the
/// dual-norm estimate used for acceptance is a sampled lower bound, so
/// acceptance is permissive (recorded in `note`).
struct NumericCloud {
    std::vector<Functional> members;
    std::vector<double> residuals;
    double feas_tol = 1e-6;
    std::string note;
};

struct DualitySet {
    Vec x;
    double q = std::numeric_limits<double>::quiet_NaN();
    std::variant<SmoothPoint, L1Family, LInfFamily, NumericCloud> family;
};

/// D(x) for a p-norm algebra; requires | ||x|| - 1 | <= 1e-9.
DualitySet duality_set_exact(const Algebra& A, const Vec& x);

using NormEvaluator = std::function<double(const Vec&)>;

/// Sampled lower bound of the dual norm sup{|phi(z)| : ||z|| <= 1}:
/// 10^4 seeded sphere samples plus a few finite-difference ascent
/// refinements. Reusable across functionals of the same predual norm.
class DualNormEstimator {
public:
    DualNormEstimator(NormEvaluator norm_eval_fn, int dim, std::uint64_t seed);
    double estimate(const Vec& y) const;

private:
    void add(Vec z);
    NormEvaluator norm_;
    std::vector<Vec> sphere_;
};

/// Norming functionals for a general norm evaluator, via central
/// finite-difference subgradients at perturbed points x + delta*w.
/// `shared_estimator` (optional) avoids rebuilding the dual-norm sample set
/// when many x share one norm.
DualitySet norming_functional_numeric(const NormEvaluator& norm_eval_fn,
                                      const Vec& x, int probe_directions,
                                      double delta, std::uint64_t seed,
                                      const DualNormEstimator* shared_estimator = nullptr);

/// k deterministic members of the parametrized family.
std::vector<Functional> sample_duality_set(const DualitySet& ds, int k,
                                           std::uint64_t seed);

/// Feasibility residual of phi as a member of D(x) for a p-norm predual:
/// max(| <x,y> - 1 |, ||y||_q - 1). Test/diagnostic helper.
double duality_residual(const Functional& phi, const Vec& x, double p);

}  // namespace numrange

#endif
