#ifndef NUMRANGE_ALGEBRA_HPP
#define NUMRANGE_ALGEBRA_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace numrange {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Norm descriptor. PNorm is the only leaf; the other three delegate to
/// a base algebra (operator norm of left multiplication, or the
/// unitization l1-norm ||a|| + |lambda|).
struct PNorm {
    double p;  // in [1, inf]; inf encoded as kInf
};
struct InducedOperator {
    AlgebraPtr base;
};
struct UnitizationL1 {
    AlgebraPtr base;
};
struct UnitizationOp {
    AlgebraPtr base;
};
using NormSpec = std::variant<PNorm, InducedOperator, UnitizationL1, UnitizationOp>;

/// Finite-dimensional complex algebra given by structure constants:
/// e_i * e_j = sum_k c[i][j][k] e_k, with a norm descriptor.
/// Bilinearity is automatic; associativity is neither assumed nor
/// enforced (see associativity_defect).
struct Algebra {
    int dim = 0;
    std::vector<Complex> structure;  // dim^3, index (i*dim + j)*dim + k
    NormSpec norm = PNorm{2.0};
    std::string name;

    // sparse view of the structure tensor, filled by make_algebra; the
    // example algebras are very sparse and the dense triple loop dominates
    // everything at dim ~50 otherwise
    struct Entry {
        int i, j, k;
        Complex v;
    };
    std::vector<Entry> nonzeros;

    Complex c(int i, int j, int k) const {
        return structure[static_cast<std::size_t>((i * dim + j) * dim + k)];
    }
    Complex& c(int i, int j, int k) {
        return structure[static_cast<std::size_t>((i * dim + j) * dim + k)];
    }
};

AlgebraPtr make_algebra(int dim, std::vector<Complex> structure, NormSpec norm,
                        std::string name = {});

/// Pointwise product algebra on C^dim with the given p-norm.
AlgebraPtr pointwise_algebra(int dim, double p, std::string name = {});

/// Product x*y from the structure tensor.
Vec multiply(const Algebra& A, const Vec& x, const Vec& y);

/// Norm of an element under the algebra's NormSpec.
double norm_eval(const Algebra& A, const Vec& x);

/// p-norm of a coefficient vector (p in [1, inf]).
double pnorm(const Vec& x, double p);

/// Two-sided identity element, if one exists (solved as a linear system).
std::optional<Vec> find_identity(const Algebra& A);

struct FaithfulResult {
    bool faithful = false;
    std::optional<Vec> witness;  // nonzero a with a*A = {0}, when not faithful
};

/// a |-> L_a has trivial nullspace?
FaithfulResult is_faithful(const Algebra& A);

/// Matrix of x |-> a*x + lambda*x in the standard basis.
Mat left_mult_matrix(const Algebra& A, const Vec& a, Complex lambda);

/// Induced matrix p-norm on (C^n, ||.||_p). Closed forms for p in {1, inf};
/// p = 2 via deterministic power iteration on M^H M; other p via the
/// sampled/ascent estimator (best-effort, ~1e-3 relative).
double induced_matrix_norm(const Mat& M, double p);

struct NormBounds {
    double lower = 0.0;  // certified (achieved by a concrete unit vector)
    double upper = 0.0;  // heuristic
};
NormBounds induced_matrix_norm_bounds(const Mat& M, double p);

/// sup ||Mx||_p / ||x||_p estimated from below: seeded sphere samples,
/// structured candidates (basis vectors, sign/phase patterns) and
/// multi-start projected gradient ascent with step halving. Independent of
/// the closed forms; also the production path for general p.
double sampled_matrix_norm(const Mat& M, double p, int n_samples, int n_starts,
                           std::uint64_t seed);

/// ||a + lambda*1||_op = ||L_{a+lambda*1}|| induced by the base p-norm.
double operator_norm(const Algebra& A, const Vec& a, Complex lambda = 0.0);

struct RegularityResult {
    bool regular = false;
    std::optional<Vec> witness;  // element with ||a||_op < (1-tol)||a||
    double gap = 0.0;            // ||witness|| - ||witness||_op
};

/// Finite surrogate for "||.||_op == ||.||": tests all basis vectors, all
/// pairwise basis sums and 50 seeded random elements.
RegularityResult is_regular(const Algebra& A, double tol = 1e-9,
                            std::uint64_t seed = 0);

/// max_{i,j,k} |(e_i e_j) e_k - e_i (e_j e_k)| over basis triples.
double associativity_defect(const Algebra& A);

/// JSON spec file round-trip. Canonical serialization: parse(serialize(A))
/// reproduces A bit-exactly.
AlgebraPtr algebra_from_json(const std::string& text);
std::string algebra_to_json(const Algebra& A);

}  // namespace numrange

#endif
