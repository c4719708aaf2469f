#ifndef NUMRANGE_UNITIZE_HPP
#define NUMRANGE_UNITIZE_HPP

#include "numrange/algebra.hpp"

namespace numrange {

enum class UnitizeFlavor { Op, L1 };

struct UnitizedElement {
    Vec a;
    Complex lambda{};
};

/// A_e = A + C*1 materialized as an ordinary Algebra of dimension dim+1
/// (identity = last basis vector) so all core/duality/range machinery
/// applies unchanged.
struct Unitization {
    AlgebraPtr base;
    UnitizeFlavor flavor = UnitizeFlavor::L1;
    AlgebraPtr extended;
    /// op flavor with a non-faithful or unital base: ||.||_op is only a
    /// seminorm. Reachable only via force; every downstream report must
    /// carry this tag.
    bool seminorm_regime = false;
};

/// Raised when the op-flavor gate fails; carries the annihilator witness
/// when the base is not faithful.
class UnitizeError : public std::runtime_error {
public:
    UnitizeError(std::string msg, std::optional<Vec> witness)
        : std::runtime_error(std::move(msg)), witness(std::move(witness)) {}
    std::optional<Vec> witness;
};

Unitization unitize(AlgebraPtr A, UnitizeFlavor flavor, bool force = false);

UnitizedElement unitized_multiply(const Unitization& U, const UnitizedElement& u,
                                  const UnitizedElement& v);

double unitization_norm_eval(const Unitization& U, const UnitizedElement& u);

/// Coordinates of a + lambda*1 in the extended algebra.
Vec embed(const Unitization& U, const UnitizedElement& u);
UnitizedElement split(const Unitization& U, const Vec& coords);

}  // namespace numrange

#endif
