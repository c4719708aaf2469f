#include "numrange/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace numrange {

namespace {

std::string g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

const char* kStrokes[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b"};

}  // namespace

std::string render_svg(const std::vector<SvgLayer>& layers,
                       std::optional<double> radius,
                       const std::string& description) {
    double lo_re = 0.0, hi_re = 0.0, lo_im = 0.0, hi_im = 0.0;
    bool any = false;
    for (const auto& layer : layers)
        for (auto z : layer.data) {
            if (!any) {
                lo_re = hi_re = z.real();
                lo_im = hi_im = z.imag();
                any = true;
            } else {
                lo_re = std::min(lo_re, z.real());
                hi_re = std::max(hi_re, z.real());
                lo_im = std::min(lo_im, z.imag());
                hi_im = std::max(hi_im, z.imag());
            }
        }
    if (!any) {
        lo_re = lo_im = -1.0;
        hi_re = hi_im = 1.0;
    }
    const double span = std::max({hi_re - lo_re, hi_im - lo_im, 1e-9});
    const double scale = 800.0 / (1.1 * span);
    const double cx = 0.5 * (lo_re + hi_re);
    const double cy = 0.5 * (lo_im + hi_im);
    auto mx = [&](double re) { return (re - cx) * scale + 400.0; };
    auto my = [&](double im) { return 400.0 - (im - cy) * scale; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\">\n";
    out += "<desc>" + xml_escape(description) + "</desc>\n";
    out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
    // unit circle reference around the origin
    out += "<circle cx=\"" + g12(mx(0.0)) + "\" cy=\"" + g12(my(0.0)) +
           "\" r=\"" + g12(scale) +
           "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"6 4\"/>\n";
    if (radius && *radius > 0.0)
        out += "<circle cx=\"" + g12(mx(0.0)) + "\" cy=\"" + g12(my(0.0)) +
               "\" r=\"" + g12(scale * *radius) +
               "\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"2 3\"/>\n";

    int hull_idx = 0;
    for (const auto& layer : layers) {
        const char* color = kStrokes[hull_idx % 6];
        if (layer.kind == SvgLayer::Kind::Hull) {
            ++hull_idx;
            const auto& v = layer.data;
            if (v.empty()) continue;
            if (v.size() == 1) {
                out += "<circle cx=\"" + g12(mx(v[0].real())) + "\" cy=\"" +
                       g12(my(v[0].imag())) + "\" r=\"4\" fill=\"" + color +
                       "\"/>\n";
                continue;
            }
            std::string d = "M " + g12(mx(v[0].real())) + " " +
                            g12(my(v[0].imag()));
            for (std::size_t k = 1; k < v.size(); ++k)
                d += " L " + g12(mx(v[k].real())) + " " + g12(my(v[k].imag()));
            if (v.size() >= 3) d += " Z";
            out += "<path d=\"" + d + "\" fill=\"" + color +
                   "\" fill-opacity=\"0.08\" stroke=\"" + color +
                   "\" stroke-width=\"2\"/>\n";
        } else {
            for (auto z : layer.data)
                out += "<circle cx=\"" + g12(mx(z.real())) + "\" cy=\"" +
                       g12(my(z.imag())) + "\" r=\"1.5\" fill=\"#444444\"/>\n";
        }
    }
    if (radius)
        out += "<text x=\"10\" y=\"24\" font-family=\"monospace\" "
               "font-size=\"16\">radius = " + g12(*radius) + "</text>\n";
    double ly = 48.0;
    for (const auto& layer : layers) {
        if (layer.label.empty()) continue;
        out += "<text x=\"10\" y=\"" + g12(ly) +
               "\" font-family=\"monospace\" font-size=\"14\">" +
               xml_escape(layer.label) + "</text>\n";
        ly += 20.0;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace numrange
