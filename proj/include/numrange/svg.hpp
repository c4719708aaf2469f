#ifndef NUMRANGE_SVG_HPP
#define NUMRANGE_SVG_HPP

#include <optional>
#include <string>
#include <vector>

#include "numrange/geometry.hpp"

namespace numrange {

/// One drawable layer: a hull outline or a scatter of sample points.
struct SvgLayer {
    enum class Kind { Hull, Points };
    Kind kind = Kind::Hull;
    std::vector<Complex> data;  // polygon vertices (canonical) or points
    std::string label;
};

/// Deterministic standalone SVG: fixed 800x800 viewBox auto-scaled to the
/// content bounds plus a 10% margin, unit-circle reference, optional radius
/// annotation. Floats printed with %.12g; byte-stable for fixed inputs.
std::string render_svg(const std::vector<SvgLayer>& layers,
                       std::optional<double> radius,
                       const std::string& description);

}  // namespace numrange

#endif
