#include "numrange/unitize.hpp"

#include <cmath>

namespace numrange {

Unitization unitize(AlgebraPtr A, UnitizeFlavor flavor, bool force) {
    if (!A) throw std::invalid_argument("unitize: null algebra");
    Unitization U;
    U.base = A;
    U.flavor = flavor;
    if (flavor == UnitizeFlavor::Op) {
        const auto faithful = is_faithful(*A);
        const auto ident = find_identity(*A);
        if (!faithful.faithful || ident.has_value()) {
            if (!force) {
                if (!faithful.faithful)
                    throw UnitizeError(
                        "unitize: op flavor requires a faithful base "
                        "(||.||_op would be a seminorm); pass force to proceed",
                        faithful.witness);
                throw UnitizeError(
                    "unitize: op flavor requires a non-unital base; pass force "
                    "to proceed",
                    std::nullopt);
            }
            U.seminorm_regime = true;
        }
    }
    const int d = A->dim;
    const int D = d + 1;
    std::vector<Complex> c(static_cast<std::size_t>(D) * D * D, 0.0);
    auto at = [&](int i, int j, int k) -> Complex& {
        return c[static_cast<std::size_t>((i * D + j) * D + k)];
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) at(i, j, k) = A->c(i, j, k);
    for (int i = 0; i < d; ++i) {
        at(i, d, i) = 1.0;  // e_i * 1 = e_i
        at(d, i, i) = 1.0;  // 1 * e_i = e_i
    }
    at(d, d, d) = 1.0;
    NormSpec norm = flavor == UnitizeFlavor::Op ? NormSpec(UnitizationOp{A})
                                                : NormSpec(UnitizationL1{A});
    const std::string suffix = flavor == UnitizeFlavor::Op ? "_e^op" : "_e^1";
    U.extended = make_algebra(D, std::move(c), std::move(norm),
                              A->name.empty() ? "" : A->name + suffix);
    return U;
}

UnitizedElement unitized_multiply(const Unitization& U, const UnitizedElement& u,
                                  const UnitizedElement& v) {
    UnitizedElement w;
    w.a = multiply(*U.base, u.a, v.a) + u.lambda * v.a + v.lambda * u.a;
    w.lambda = u.lambda * v.lambda;
    return w;
}

double unitization_norm_eval(const Unitization& U, const UnitizedElement& u) {
    if (U.flavor == UnitizeFlavor::L1)
        return norm_eval(*U.base, u.a) + std::abs(u.lambda);
    return operator_norm(*U.base, u.a, u.lambda);
}

Vec embed(const Unitization& U, const UnitizedElement& u) {
    const int d = U.base->dim;
    if (u.a.size() != d) throw std::invalid_argument("embed: dimension mismatch");
    Vec out(d + 1);
    out.head(d) = u.a;
    out[d] = u.lambda;
    return out;
}

UnitizedElement split(const Unitization& U, const Vec& coords) {
    const int d = U.base->dim;
    if (coords.size() != d + 1)
        throw std::invalid_argument("split: dimension mismatch");
    return {coords.head(d), coords[d]};
}

}  // namespace numrange
