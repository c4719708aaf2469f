#include "numrange/algebra.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "numrange/rng.hpp"

namespace numrange {
namespace {

using ordered_json = nlohmann::ordered_json;

void ensure_finite(const Vec& x, const char* what) {
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        if (!std::isfinite(x[k].real()) || !std::isfinite(x[k].imag()))
            throw std::invalid_argument(std::string(what) +
                                        ": non-finite coefficient");
    }
}

void ensure_dim(const Algebra& A, const Vec& x, const char* what) {
    if (x.size() != A.dim)
        throw std::invalid_argument(std::string(what) + ": element has dimension " +
                                    std::to_string(x.size()) + ", algebra has " +
                                    std::to_string(A.dim));
    ensure_finite(x, what);
}

Vec normalize_p(const Vec& z, double p) {
    const double n = pnorm(z, p);
    if (n <= 0.0) return z;
    return z / n;
}

}  // namespace

AlgebraPtr make_algebra(int dim, std::vector<Complex> structure, NormSpec norm,
                        std::string name) {
    if (dim <= 0) throw std::invalid_argument("make_algebra: dim must be positive");
    const auto want = static_cast<std::size_t>(dim) * dim * dim;
    if (structure.size() != want)
        throw std::invalid_argument("make_algebra: structure tensor must have dim^3 entries");
    if (const auto* pn = std::get_if<PNorm>(&norm); pn && pn->p < 1.0)
        throw std::invalid_argument("make_algebra: p-norm exponent must be >= 1");
    auto A = std::make_shared<Algebra>();
    A->dim = dim;
    A->structure = std::move(structure);
    A->norm = std::move(norm);
    A->name = std::move(name);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (A->c(i, j, k) != Complex(0.0))
                    A->nonzeros.push_back({i, j, k, A->c(i, j, k)});
    return A;
}

AlgebraPtr pointwise_algebra(int dim, double p, std::string name) {
    std::vector<Complex> c(static_cast<std::size_t>(dim) * dim * dim, 0.0);
    for (int i = 0; i < dim; ++i)
        c[static_cast<std::size_t>((i * dim + i) * dim + i)] = 1.0;
    return make_algebra(dim, std::move(c), PNorm{p}, std::move(name));
}

Vec multiply(const Algebra& A, const Vec& x, const Vec& y) {
    ensure_dim(A, x, "multiply");
    ensure_dim(A, y, "multiply");
    Vec out = Vec::Zero(A.dim);
    for (const auto& e : A.nonzeros) out[e.k] += x[e.i] * y[e.j] * e.v;
    return out;
}

double pnorm(const Vec& x, double p) {
    if (p < 1.0) throw std::invalid_argument("pnorm: p must be >= 1");
    if (x.size() == 0) return 0.0;
    if (p == kInf) {
        double m = 0.0;
        for (Eigen::Index k = 0; k < x.size(); ++k) m = std::max(m, std::abs(x[k]));
        return m;
    }
    if (p == 1.0) {
        double s = 0.0;
        for (Eigen::Index k = 0; k < x.size(); ++k) s += std::abs(x[k]);
        return s;
    }
    if (p == 2.0) return x.norm();
    double m = 0.0;
    for (Eigen::Index k = 0; k < x.size(); ++k) m = std::max(m, std::abs(x[k]));
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (Eigen::Index k = 0; k < x.size(); ++k)
        s += std::pow(std::abs(x[k]) / m, p);
    return m * std::pow(s, 1.0 / p);
}

double norm_eval(const Algebra& A, const Vec& x) {
    if (const auto* pn = std::get_if<PNorm>(&A.norm)) {
        ensure_dim(A, x, "norm_eval");
        return pnorm(x, pn->p);
    }
    if (const auto* io = std::get_if<InducedOperator>(&A.norm)) {
        ensure_dim(A, x, "norm_eval");
        return operator_norm(*io->base, x, 0.0);
    }
    if (const auto* u1 = std::get_if<UnitizationL1>(&A.norm)) {
        ensure_dim(A, x, "norm_eval");
        const int d = u1->base->dim;
        if (A.dim != d + 1)
            throw std::invalid_argument("norm_eval: unitization dimension mismatch");
        return norm_eval(*u1->base, x.head(d)) + std::abs(x[d]);
    }
    const auto& uo = std::get<UnitizationOp>(A.norm);
    ensure_dim(A, x, "norm_eval");
    const int d = uo.base->dim;
    if (A.dim != d + 1)
        throw std::invalid_argument("norm_eval: unitization dimension mismatch");
    return operator_norm(*uo.base, x.head(d), x[d]);
}

std::optional<Vec> find_identity(const Algebra& A) {
    const int d = A.dim;
    // Unknown e; equations e*e_j = e_j and e_j*e = e_j for all j.
    Mat M = Mat::Zero(2 * d * d, d);
    Vec rhs = Vec::Zero(2 * d * d);
    double scale = 0.0;
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            for (int i = 0; i < d; ++i) {
                M(j * d + k, i) = A.c(i, j, k);            // left action
                M(d * d + j * d + k, i) = A.c(j, i, k);    // right action
                scale = std::max(scale, std::abs(A.c(i, j, k)));
            }
            if (j == k) {
                rhs[j * d + k] = 1.0;
                rhs[d * d + j * d + k] = 1.0;
            }
        }
    const Vec e = M.colPivHouseholderQr().solve(rhs);
    const double resid = (M * e - rhs).cwiseAbs().maxCoeff();
    if (resid > 1e-9 * std::max(1.0, scale)) return std::nullopt;
    return e;
}

FaithfulResult is_faithful(const Algebra& A) {
    const int d = A.dim;
    // Column i of F is vec(L_{e_i}); trivial kernel <=> faithful.
    Mat F = Mat::Zero(d * d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) F(j * d + k, i) = A.c(i, j, k);
    Eigen::JacobiSVD<Mat> svd(F, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() ? sv[0] : 0.0;
    const double smin = sv.size() ? sv[sv.size() - 1] : 0.0;
    FaithfulResult r;
    if (smax == 0.0 || smin <= 1e-10 * std::max(smax, 1.0)) {
        r.faithful = false;
        Vec w = svd.matrixV().col(d - 1);
        // tidy the witness: largest coefficient real positive
        Eigen::Index imax = 0;
        w.cwiseAbs().maxCoeff(&imax);
        if (std::abs(w[imax]) > 0) w *= std::conj(w[imax]) / std::abs(w[imax]);
        r.witness = w;
    } else {
        r.faithful = true;
    }
    return r;
}

Mat left_mult_matrix(const Algebra& A, const Vec& a, Complex lambda) {
    ensure_dim(A, a, "left_mult_matrix");
    const int d = A.dim;
    Mat M = Mat::Zero(d, d);
    for (const auto& e : A.nonzeros) M(e.k, e.j) += a[e.i] * e.v;
    for (int j = 0; j < d; ++j) M(j, j) += lambda;
    return M;
}

namespace {

/// Largest singular value via power iteration on M^H M. Deterministic start
/// (1,0,...,0), perturbed if it stalls in the kernel.
double spectral_norm_power(const Mat& M) {
    const int n = static_cast<int>(M.cols());
    if (M.cwiseAbs().maxCoeff() == 0.0) return 0.0;
    Vec z = Vec::Zero(n);
    z[0] = 1.0;
    if ((M * z).norm() < 1e-300 * M.cwiseAbs().maxCoeff()) {
        for (int k = 0; k < n; ++k) z[k] = 1.0 + 0.01 * k;
        z.normalize();
    }
    double sigma = (M * z).norm();
    for (int it = 0; it < 10000; ++it) {
        Vec w = M.adjoint() * (M * z);
        const double wn = w.norm();
        if (wn == 0.0) break;
        z = w / wn;
        const double s = (M * z).norm();
        if (std::abs(s - sigma) <= 1e-12 * std::max(s, 1e-300)) {
            sigma = s;
            break;
        }
        sigma = s;
    }
    return sigma;
}

double eval_ratio(const Mat& M, const Vec& z, double p) {
    const double zn = pnorm(z, p);
    if (zn <= 0.0) return 0.0;
    return pnorm(M * z, p) / zn;
}

/// Gradient ascent on z |-> ||M (z/||z||_p)||_p via central differences over
/// the 2n real coordinates, with step halving.
double ascend(const Mat& M, double p, Vec z, int iters = 100) {
    const int n = static_cast<int>(z.size());
    double best = eval_ratio(M, z, p);
    double step = 0.1;
    for (int it = 0; it < iters && step > 1e-10; ++it) {
        const double h = 1e-6 * std::max(1.0, pnorm(z, p));
        Vec grad = Vec::Zero(n);
        for (int k = 0; k < n; ++k) {
            Vec zp = z, zm = z;
            zp[k] += h;
            zm[k] -= h;
            const double gre = (eval_ratio(M, zp, p) - eval_ratio(M, zm, p)) / (2 * h);
            zp = z;
            zm = z;
            zp[k] += Complex(0, h);
            zm[k] -= Complex(0, h);
            const double gim = (eval_ratio(M, zp, p) - eval_ratio(M, zm, p)) / (2 * h);
            grad[k] = Complex(gre, gim);
        }
        const double gn = grad.norm();
        if (gn < 1e-14) break;
        bool improved = false;
        while (step > 1e-10) {
            Vec cand = z + (step / gn) * grad;
            const double v = eval_ratio(M, cand, p);
            if (v > best) {
                best = v;
                z = normalize_p(cand, p);
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if (!improved) break;
    }
    return best;
}

}  // namespace

double sampled_matrix_norm(const Mat& M, double p, int n_samples, int n_starts,
                           std::uint64_t seed) {
    const int n = static_cast<int>(M.cols());
    if (n == 0 || M.cwiseAbs().maxCoeff() == 0.0) return 0.0;
    std::vector<std::pair<double, Vec>> cand;
    auto push = [&](const Vec& z) {
        const double v = eval_ratio(M, z, p);
        cand.emplace_back(v, z);
    };
    for (int j = 0; j < n; ++j) push(Vec::Unit(n, j));
    // row-phase vectors: unimodular coordinates aligned against one row;
    // the ascent alone stalls near these kinked maximizers for p = inf
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        Vec z(n);
        for (int k = 0; k < n; ++k) {
            const double m = std::abs(M(i, k));
            z[k] = m > 0.0 ? Complex(std::conj(M(i, k)) / m) : Complex(1.0);
        }
        push(z);
    }
    if (n <= 6) {
        // all {1,-1,i,-i} patterns
        static const Complex ph[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        const long total = static_cast<long>(std::pow(4.0, n));
        for (long m = 0; m < total; ++m) {
            Vec z(n);
            long t = m;
            for (int k = 0; k < n; ++k) {
                z[k] = ph[t & 3];
                t >>= 2;
            }
            push(z);
        }
    }
    Rng rng(seed);
    for (int s = 0; s < n_samples; ++s) {
        Vec z(n);
        for (int k = 0; k < n; ++k) z[k] = rng.cgaussian();
        push(z);
    }
    std::stable_sort(cand.begin(), cand.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    double best = cand.empty() ? 0.0 : cand.front().first;
    const int starts = std::min<int>(n_starts, static_cast<int>(cand.size()));
    for (int s = 0; s < starts; ++s)
        best = std::max(best, ascend(M, p, normalize_p(cand[s].second, p)));
    return best;
}

double induced_matrix_norm(const Mat& M, double p) {
    if (p < 1.0) throw std::invalid_argument("induced_matrix_norm: p < 1");
    if (M.size() == 0) return 0.0;
    if (p == 1.0) {
        double m = 0.0;
        for (Eigen::Index j = 0; j < M.cols(); ++j)
            m = std::max(m, M.col(j).cwiseAbs().sum());
        return m;
    }
    if (p == kInf) {
        double m = 0.0;
        for (Eigen::Index i = 0; i < M.rows(); ++i)
            m = std::max(m, M.row(i).cwiseAbs().sum());
        return m;
    }
    if (p == 2.0) return spectral_norm_power(M);
    return sampled_matrix_norm(M, p, 10000, 32, 0x9c0ffee);
}

NormBounds induced_matrix_norm_bounds(const Mat& M, double p) {
    NormBounds b;
    if (p == 1.0 || p == 2.0 || p == kInf) {
        b.lower = b.upper = induced_matrix_norm(M, p);
        return b;
    }
    b.lower = sampled_matrix_norm(M, p, 10000, 32, 0x9c0ffee);
    // Riesz-Thorin interpolation between the exact 1- and inf-norms.
    const double n1 = induced_matrix_norm(M, 1.0);
    const double ninf = induced_matrix_norm(M, kInf);
    b.upper = std::pow(n1, 1.0 / p) * std::pow(ninf, 1.0 - 1.0 / p);
    return b;
}

double operator_norm(const Algebra& A, const Vec& a, Complex lambda) {
    const auto* pn = std::get_if<PNorm>(&A.norm);
    if (!pn)
        throw std::invalid_argument(
            "operator_norm: base algebra must carry a p-norm");
    return induced_matrix_norm(left_mult_matrix(A, a, lambda), pn->p);
}

RegularityResult is_regular(const Algebra& A, double tol, std::uint64_t seed) {
    const auto* pn = std::get_if<PNorm>(&A.norm);
    if (!pn) throw std::invalid_argument("is_regular: requires a p-norm algebra");
    const int d = A.dim;
    std::vector<Vec> probes;
    for (int i = 0; i < d; ++i) probes.push_back(Vec::Unit(d, i));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            probes.push_back(Vec::Unit(d, i) + Vec::Unit(d, j));
    Rng rng(mix_seed(seed, 0xbead));
    for (int s = 0; s < 50; ++s) {
        Vec z(d);
        for (int k = 0; k < d; ++k) z[k] = rng.cgaussian();
        const double n = pnorm(z, pn->p);
        if (n > 0) probes.push_back(z / n);
    }
    RegularityResult r;
    r.regular = true;
    for (const auto& a : probes) {
        const double nv = norm_eval(A, a);
        if (nv == 0.0) continue;
        const double op = operator_norm(A, a, 0.0);
        if (op < (1.0 - tol) * nv) {
            r.regular = false;
            r.witness = a;
            r.gap = nv - op;
            return r;
        }
    }
    return r;
}

double associativity_defect(const Algebra& A) {
    const int d = A.dim;
    double worst = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const Vec lhs = multiply(A, multiply(A, Vec::Unit(d, i), Vec::Unit(d, j)),
                                         Vec::Unit(d, k));
                const Vec rhs = multiply(A, Vec::Unit(d, i),
                                         multiply(A, Vec::Unit(d, j), Vec::Unit(d, k)));
                worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
            }
    return worst;
}

namespace {

ordered_json norm_to_json(const NormSpec& n) {
    ordered_json j;
    if (const auto* pn = std::get_if<PNorm>(&n)) {
        if (pn->p == kInf)
            j["p"] = "inf";
        else
            j["p"] = pn->p;
        return j;
    }
    if (const auto* io = std::get_if<InducedOperator>(&n)) {
        j["flavor"] = "induced-op";
        j["base"] = norm_to_json(io->base->norm);
        return j;
    }
    if (const auto* u1 = std::get_if<UnitizationL1>(&n)) {
        j["flavor"] = "unitize-l1";
        j["base"] = norm_to_json(u1->base->norm);
        return j;
    }
    const auto& uo = std::get<UnitizationOp>(n);
    j["flavor"] = "unitize-op";
    j["base"] = norm_to_json(uo.base->norm);
    return j;
}

NormSpec norm_from_json(const ordered_json& j, int dim,
                        const std::vector<Complex>& structure,
                        const std::string& name);

/// A flavored norm references a base algebra; by construction of the
/// unitization its structure tensor is the leading (dim-1)^3 block.
AlgebraPtr base_from_block(const ordered_json& jbase, int dim,
                           const std::vector<Complex>& structure, int base_dim,
                           const std::string& name) {
    std::vector<Complex> sub(static_cast<std::size_t>(base_dim) * base_dim * base_dim);
    for (int i = 0; i < base_dim; ++i)
        for (int j = 0; j < base_dim; ++j)
            for (int k = 0; k < base_dim; ++k)
                sub[static_cast<std::size_t>((i * base_dim + j) * base_dim + k)] =
                    structure[static_cast<std::size_t>((i * dim + j) * dim + k)];
    NormSpec bn = norm_from_json(jbase, base_dim, sub, name + "~base");
    return make_algebra(base_dim, std::move(sub), std::move(bn), name + "~base");
}

NormSpec norm_from_json(const ordered_json& j, int dim,
                        const std::vector<Complex>& structure,
                        const std::string& name) {
    if (j.contains("p")) {
        if (j["p"].is_string()) {
            if (j["p"].get<std::string>() != "inf")
                throw std::invalid_argument("norm: bad p value");
            return PNorm{kInf};
        }
        const double p = j["p"].get<double>();
        if (p < 1.0) throw std::invalid_argument("norm: p must be >= 1");
        return PNorm{p};
    }
    if (!j.contains("flavor"))
        throw std::invalid_argument("norm: need \"p\" or \"flavor\"");
    const std::string flavor = j["flavor"].get<std::string>();
    if (!j.contains("base"))
        throw std::invalid_argument("norm: flavored norm needs a \"base\" norm");
    if (flavor == "induced-op")
        return InducedOperator{base_from_block(j["base"], dim, structure, dim, name)};
    if (flavor == "unitize-l1")
        return UnitizationL1{base_from_block(j["base"], dim, structure, dim - 1, name)};
    if (flavor == "unitize-op")
        return UnitizationOp{base_from_block(j["base"], dim, structure, dim - 1, name)};
    throw std::invalid_argument("norm: unknown flavor \"" + flavor + "\"");
}

}  // namespace

AlgebraPtr algebra_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("algebra spec: ") + e.what());
    }
    if (!j.contains("dim") || !j.contains("structure") || !j.contains("norm"))
        throw std::invalid_argument("algebra spec: need dim, structure, norm");
    const int dim = j["dim"].get<int>();
    if (dim <= 0 || dim > 64)
        throw std::invalid_argument("algebra spec: dim must be in [1, 64]");
    const auto& js = j["structure"];
    if (!js.is_array() || static_cast<int>(js.size()) != dim)
        throw std::invalid_argument("algebra spec: structure must be a dim^3 array");
    std::vector<Complex> structure(static_cast<std::size_t>(dim) * dim * dim);
    for (int i = 0; i < dim; ++i) {
        const auto& ji = js[i];
        if (!ji.is_array() || static_cast<int>(ji.size()) != dim)
            throw std::invalid_argument("algebra spec: structure must be a dim^3 array");
        for (int jj = 0; jj < dim; ++jj) {
            const auto& jk = ji[jj];
            if (!jk.is_array() || static_cast<int>(jk.size()) != dim)
                throw std::invalid_argument("algebra spec: structure must be a dim^3 array");
            for (int k = 0; k < dim; ++k) {
                const auto& e = jk[k];
                if (!e.is_array() || e.size() != 2)
                    throw std::invalid_argument(
                        "algebra spec: entries must be [re, im] pairs");
                structure[static_cast<std::size_t>((i * dim + jj) * dim + k)] =
                    Complex(e[0].get<double>(), e[1].get<double>());
            }
        }
    }
    const std::string name = j.value("name", std::string());
    NormSpec norm = norm_from_json(j["norm"], dim, structure, name);
    return make_algebra(dim, std::move(structure), std::move(norm), name);
}

std::string algebra_to_json(const Algebra& A) {
    ordered_json j;
    j["dim"] = A.dim;
    if (!A.name.empty()) j["name"] = A.name;
    j["norm"] = norm_to_json(A.norm);
    ordered_json js = ordered_json::array();
    for (int i = 0; i < A.dim; ++i) {
        ordered_json ji = ordered_json::array();
        for (int jj = 0; jj < A.dim; ++jj) {
            ordered_json jk = ordered_json::array();
            for (int k = 0; k < A.dim; ++k) {
                const Complex c = A.c(i, jj, k);
                jk.push_back(ordered_json::array({c.real(), c.imag()}));
            }
            ji.push_back(std::move(jk));
        }
        js.push_back(std::move(ji));
    }
    j["structure"] = std::move(js);
    return j.dump(2) + "\n";
}

}  // namespace numrange
