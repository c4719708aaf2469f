#ifndef NUMRANGE_VERIFY_HPP
#define NUMRANGE_VERIFY_HPP

#include <string>
#include <utility>
#include <vector>

#include "numrange/algebra.hpp"
#include "numrange/range.hpp"
#include "numrange/unitize.hpp"

namespace numrange {

struct ToleranceProfile {
    double exact_tol = 1e-9;
    double sample_hausdorff_tol = 5e-2;
    double inclusion_tol = 2e-2;
    int n_sphere = 2000;
    int n_dual = 50;
    int n_dirs = 720;
    // budgets for numeric-duality (A^op) sampling, which is far costlier
    int n_sphere_numeric = 150;
    int n_dual_numeric = 12;
    std::uint64_t seed = 0;
};

std::string profile_to_json(const ToleranceProfile& p);
ToleranceProfile profile_from_json(const std::string& text);

enum class CheckStatus { Pass, Fail, ExpectedViolation };
const char* to_string(CheckStatus s);

/// One measured quantity; passes iff value <= tol. tol = +inf marks a
/// reported-only diagnostic that can never fail.
struct Gap {
    std::string name;
    double value = 0.0;
    double tol = 0.0;
    bool ok() const { return value <= tol; }
};

/// A gallery-registered counterexample: the measured value must EXCEED
/// min_required for the case to count as expected-violation.
struct Violation {
    std::string name;
    double value = 0.0;
    double min_required = 0.0;
    bool manifested() const { return value >= min_required; }
};

struct CheckReport {
    std::string theorem;
    std::string instance;
    CheckStatus status = CheckStatus::Fail;
    std::vector<Gap> gaps;
    std::vector<Violation> violations;
    std::vector<std::pair<std::string, std::string>> witnesses;
    std::vector<std::string> notes;
    ToleranceProfile profile;

    void finalize();  // derive status from gaps/violations
};

std::string report_to_json(const CheckReport& r);
std::string reports_to_json(const std::vector<CheckReport>& rs);

/// Fixed-x properties: homogeneity/subadditivity (exact), convexity via
/// averaged functionals, phase invariance for y = alpha*x with |alpha| = 1,
/// and the sequence-closure inclusion for a_n -> a.
CheckReport check_thm21(const Algebra& A, const Vec& a, const Vec& b,
                        Complex alpha, const Vec& x, const Vec* y,
                        const std::vector<Vec>& seq,
                        const ToleranceProfile& profile);

/// V_A-level properties; B given as a subset of standard-basis coordinates
/// (empty = skip the subalgebra item).
CheckReport check_thm22(const Algebra& A, const std::vector<int>& B_coords,
                        const Vec& a, const Vec& b, Complex alpha,
                        const std::vector<Vec>& seq,
                        const ToleranceProfile& profile);

/// Unital case: sampled hull vs the identity support-function oracle, and
/// the e^{-1}||a|| <= nu <= ||a|| bounds.
CheckReport check_cor23(const Algebra& A, const Vec& a,
                        const ToleranceProfile& profile);

/// co-hull(V_A(a)) = V_{A_e^op}(a;1) plus radius identities and 1/e bounds;
/// force admits the seminorm regime (reports are tagged).
CheckReport check_thm24(const AlgebraPtr& A, const Vec& a,
                        const ToleranceProfile& profile, bool force = false);

/// co-hull(V_A(a) u {0}) inside the l1-unitization disk; radius attains
/// ||a + lambda*1||_1.
CheckReport check_thm25(const AlgebraPtr& A, const Vec& a, Complex lambda,
                        const ToleranceProfile& profile);

/// The six summary inclusions among V_A, V_{A^op}, V_{A_e^op}(.;1),
/// V_{A_e^1}(.;1).
CheckReport check_thm26(const AlgebraPtr& A, const Vec& a, Complex lambda,
                        const ToleranceProfile& profile);

/// All registered counterexample/illustration cases, in fixed order.
std::vector<CheckReport> run_gallery(const ToleranceProfile& profile);
std::vector<std::string> gallery_case_names();
std::vector<CheckReport> run_gallery_case(const std::string& name,
                                          const ToleranceProfile& profile);

/// Builders for the standard example algebras.
AlgebraPtr example31(double p);  // xy = (x1 y1, x1 y2) = x1 * y
AlgebraPtr example32(double p);  // xy = (x1 y1, x2 y1) = x * y1

/// Seeded random test algebras: dim 2-3, p in {1, 2, inf}, drawn from
/// associative families (right scalar action x*f(y) with Gaussian f, the
/// same with a pointwise extra coordinate, left scalar action g(x)*y, and
/// weighted pointwise products), scaled so the norm is sub-multiplicative.
/// The latter two fail the faithfulness/identity gates on purpose.
AlgebraPtr random_test_algebra(std::uint64_t seed);

struct RandomSelection {
    std::vector<AlgebraPtr> accepted;
    int n_drawn = 0;
    int n_filtered_unital = 0;
    int n_filtered_nonfaithful = 0;
};
/// First `count` seeded draws that are faithful and non-unital; filter
/// counts are reported, never silently dropped.
RandomSelection random_faithful_nonunital(int count, std::uint64_t seed);

/// Deterministic display form of an element, for witnesses.
std::string format_element(const Vec& v);

}  // namespace numrange

#endif
