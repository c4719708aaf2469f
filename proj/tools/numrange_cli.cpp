// numrange: batch front door for range / unitization / verification runs.
// Exit codes: 0 success, 1 check failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "numrange/algebra.hpp"
#include "numrange/range.hpp"
#include "numrange/svg.hpp"
#include "numrange/unitize.hpp"
#include "numrange/verify.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;
using namespace numrange;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

Complex parse_complex(std::string tok) {
    std::erase(tok, ' ');
    if (tok.empty()) throw std::invalid_argument("empty component in element");
    if (tok.back() != 'i' && tok.back() != 'I') {
        std::size_t used = 0;
        const double re = std::stod(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument("bad element component: " + tok);
        return {re, 0.0};
    }
    tok.pop_back();
    // split at the last +/- not part of an exponent and not leading
    std::size_t split = std::string::npos;
    for (std::size_t k = tok.size(); k-- > 1;) {
        if ((tok[k] == '+' || tok[k] == '-') &&
            tok[k - 1] != 'e' && tok[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto parse_imag = [](const std::string& s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size())
            throw std::invalid_argument("bad imaginary part: " + s + "i");
        return v;
    };
    if (split == std::string::npos) return {0.0, parse_imag(tok)};
    std::size_t used = 0;
    const double re = std::stod(tok.substr(0, split), &used);
    if (used != split)
        throw std::invalid_argument("bad element component: " + tok + "i");
    return {re, parse_imag(tok.substr(split))};
}

Vec parse_element(const std::string& text) {
    std::vector<Complex> parts;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) parts.push_back(parse_complex(tok));
    if (parts.empty()) throw std::invalid_argument("empty element literal");
    Vec v(static_cast<Eigen::Index>(parts.size()));
    for (std::size_t k = 0; k < parts.size(); ++k) v[k] = parts[k];
    return v;
}

ordered_json provenance(const std::string& spec_text, const ToleranceProfile& p) {
    ordered_json j;
    j["tool"] = "numrange";
    j["version"] = kVersion;
    j["spec_hash"] = hex64(fnv1a(spec_text));
    j["seed"] = p.seed;
    j["profile"] = ordered_json::parse(profile_to_json(p));
    return j;
}

std::string norm_desc(const NormSpec& n) {
    if (const auto* pn = std::get_if<PNorm>(&n)) {
        if (pn->p == kInf) return "l_inf";
        char buf[32];
        std::snprintf(buf, sizeof buf, "l_%g", pn->p);
        return buf;
    }
    if (std::holds_alternative<InducedOperator>(n)) return "induced operator norm";
    if (std::holds_alternative<UnitizationL1>(n)) return "unitization l1 norm";
    return "unitization operator norm";
}

struct CommonOpts {
    std::string spec_path;
    std::string profile_path;
    std::int64_t seed_flag = -1;  // -1: unset

    ToleranceProfile profile() const {
        ToleranceProfile p;
        if (!profile_path.empty()) p = profile_from_json(read_file(profile_path));
        if (const char* env = std::getenv("NUMRANGE_SEED"))
            p.seed = std::strtoull(env, nullptr, 10);
        if (seed_flag >= 0) p.seed = static_cast<std::uint64_t>(seed_flag);
        return p;
    }
};

int cmd_describe(const CommonOpts& common) {
    const auto A = algebra_from_json(read_file(common.spec_path));
    std::cout << "name: " << (A->name.empty() ? "(unnamed)" : A->name) << "\n";
    std::cout << "dim: " << A->dim << "\n";
    std::cout << "norm: " << norm_desc(A->norm) << "\n";
    std::cout << "associativity defect: " << associativity_defect(*A) << "\n";
    if (const auto e = find_identity(*A))
        std::cout << "identity: " << format_element(*e) << "\n";
    else
        std::cout << "identity: none\n";
    const auto fr = is_faithful(*A);
    if (fr.faithful)
        std::cout << "faithful: yes\n";
    else
        std::cout << "faithful: NO, annihilator witness "
                  << format_element(*fr.witness) << "\n";
    if (std::holds_alternative<PNorm>(A->norm)) {
        const auto reg = is_regular(*A, 1e-6, common.profile().seed);
        if (reg.regular)
            std::cout << "regular: yes (finite probe set)\n";
        else
            std::cout << "regular: NO, witness " << format_element(*reg.witness)
                      << " with gap " << reg.gap << "\n";
    } else {
        std::cout << "regular: n/a (norm is not a p-norm)\n";
    }
    return 0;
}

int cmd_range(const CommonOpts& common, const std::string& a_text,
              const std::string& out_dir, const std::string& oracle) {
    const std::string spec_text = read_file(common.spec_path);
    const auto A = algebra_from_json(spec_text);
    const Vec a = parse_element(a_text);
    if (a.size() != A->dim)
        throw std::invalid_argument("element has dimension " +
                                    std::to_string(a.size()) + ", algebra has " +
                                    std::to_string(A->dim));
    const auto p = common.profile();
    const auto est = spatial_range(*A, a, p.n_sphere, p.n_dual, p.seed);
    fs::create_directories(out_dir);
    write_file(out_dir + "/cloud.csv", cloud_to_csv(est.cloud));
    ordered_json meta = provenance(spec_text, p);
    meta["element"] = a_text;
    write_file(out_dir + "/hull.json", polygon_to_json(est.hull, meta.dump()));
    ordered_json jr;
    jr["radius"] = est.radius;
    jr["radius_witness"] =
        ordered_json::array({est.radius_witness.real(), est.radius_witness.imag()});
    jr["n_points"] = est.cloud.points.size();
    jr["hull_vertices"] = est.hull.size();
    jr["provenance"] = provenance(spec_text, p);
    write_file(out_dir + "/range.json", jr.dump(2) + "\n");
    if (oracle == "identity") {
        const auto e = find_identity(*A);
        if (!e) throw std::invalid_argument("--oracle identity: algebra is not unital");
        NormEvaluator ne = [&A](const Vec& z) { return norm_eval(*A, z); };
        const auto poly = support_range_at_identity(ne, *e, a, p.n_dirs,
                                                    default_t_schedule());
        write_file(out_dir + "/oracle.json", polygon_to_json(poly, meta.dump()));
    } else if (!oracle.empty()) {
        throw std::invalid_argument("unknown oracle: " + oracle);
    }
    std::cout << "radius " << est.radius << ", " << est.cloud.points.size()
              << " points, " << est.hull.size() << " hull vertices -> "
              << out_dir << "\n";
    return 0;
}

int cmd_unitize(const CommonOpts& common, const std::string& flavor_text,
                bool force, const std::string& out_path) {
    const std::string spec_text = read_file(common.spec_path);
    const auto A = algebra_from_json(spec_text);
    UnitizeFlavor flavor;
    if (flavor_text == "op")
        flavor = UnitizeFlavor::Op;
    else if (flavor_text == "l1")
        flavor = UnitizeFlavor::L1;
    else
        throw std::invalid_argument("--flavor must be op or l1");
    const auto U = unitize(A, flavor, force);
    ordered_json j = ordered_json::parse(algebra_to_json(*U.extended));
    j["provenance"] = provenance(spec_text, common.profile());
    if (U.seminorm_regime) j["seminorm_regime"] = true;
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

int run_case(const std::string& name, const AlgebraPtr& A, const Vec& a,
             const Vec& b, Complex alpha, const Vec& x, const Vec* y,
             Complex lambda, const std::vector<int>& sub_coords, bool force,
             const ToleranceProfile& p, std::vector<CheckReport>& out) {
    if (name == "thm21")
        out.push_back(check_thm21(*A, a, b, alpha, x, y, {}, p));
    else if (name == "thm22")
        out.push_back(check_thm22(*A, sub_coords, a, b, alpha, {}, p));
    else if (name == "cor23")
        out.push_back(check_cor23(*A, a, p));
    else if (name == "thm24")
        out.push_back(check_thm24(A, a, p, force));
    else if (name == "thm25")
        out.push_back(check_thm25(A, a, lambda, p));
    else if (name == "thm26")
        out.push_back(check_thm26(A, a, lambda, p));
    else
        throw std::invalid_argument("unknown case: " + name +
                                    " (expected thm21|thm22|cor23|thm24|thm25|thm26)");
    return 0;
}

int cmd_verify(const CommonOpts& common, const std::string& case_name, bool all,
               const std::string& a_text, const std::string& b_text,
               const std::string& alpha_text, const std::string& x_text,
               const std::string& y_text, const std::string& lambda_text,
               const std::string& sub_text, bool force,
               const std::string& out_path) {
    if (case_name.empty() == !all)
        throw std::invalid_argument("verify: give exactly one of --case or --all");
    const std::string spec_text = read_file(common.spec_path);
    const auto A = algebra_from_json(spec_text);
    const auto p = common.profile();
    const Vec a = parse_element(a_text);
    if (a.size() != A->dim)
        throw std::invalid_argument("element dimension mismatch");
    const Vec b = b_text.empty() ? Vec(Vec::Zero(A->dim)) : parse_element(b_text);
    const Complex alpha =
        alpha_text.empty() ? Complex(1.0) : parse_complex(alpha_text);
    Vec x;
    if (x_text.empty()) {
        x = Vec::Unit(A->dim, 0);
        x /= norm_eval(*A, x);
    } else {
        x = parse_element(x_text);
    }
    Vec y;
    const Vec* yp = nullptr;
    if (!y_text.empty()) {
        y = parse_element(y_text);
        yp = &y;
    }
    const Complex lambda =
        lambda_text.empty() ? Complex(0.0) : parse_complex(lambda_text);
    std::vector<int> sub_coords;
    if (!sub_text.empty()) {
        std::istringstream in(sub_text);
        std::string tok;
        while (std::getline(in, tok, ',')) sub_coords.push_back(std::stoi(tok));
    }
    std::vector<CheckReport> reports;
    if (all) {
        for (const char* name :
             {"thm21", "thm22", "cor23", "thm24", "thm25", "thm26"}) {
            try {
                run_case(name, A, a, b, alpha, x, yp, lambda, sub_coords, force,
                         p, reports);
            } catch (const std::exception& e) {
                std::cout << name << ": skipped (" << e.what() << ")\n";
            }
        }
    } else {
        run_case(case_name, A, a, b, alpha, x, yp, lambda, sub_coords, force, p,
                 reports);
    }
    const std::string text = reports_to_json(reports);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    int fails = 0;
    for (const auto& r : reports) {
        std::cout << r.theorem << " [" << r.instance
                  << "]: " << to_string(r.status) << "\n";
        fails += r.status == CheckStatus::Fail ? 1 : 0;
    }
    return fails ? 1 : 0;
}

int cmd_gallery(const CommonOpts& common, const std::string& case_name, bool all,
                const std::string& out_path) {
    const auto p = common.profile();
    std::vector<CheckReport> reports;
    if (all || case_name.empty())
        reports = run_gallery(p);
    else
        reports = run_gallery_case(case_name, p);
    const std::string text = reports_to_json(reports);
    if (!out_path.empty()) write_file(out_path, text);
    int fails = 0;
    for (const auto& r : reports) {
        std::cout << r.instance << ": " << to_string(r.status) << "\n";
        fails += r.status == CheckStatus::Fail ? 1 : 0;
    }
    if (out_path.empty() && reports.size() == 1) std::cout << text;
    return fails ? 1 : 0;
}

int cmd_plot(const std::string& cloud_path,
             const std::vector<std::string>& hull_paths,
             const std::string& out_path) {
    std::vector<SvgLayer> layers;
    std::string desc = "numrange " + std::string(kVersion);
    double radius = 0.0;
    bool have_radius = false;
    for (const auto& path : hull_paths) {
        const std::string text = read_file(path);
        const auto poly = polygon_from_json(text);
        SvgLayer layer;
        layer.kind = SvgLayer::Kind::Hull;
        layer.data = poly.vertices;
        layer.label = fs::path(path).filename().string();
        layers.push_back(std::move(layer));
        for (auto v : poly.vertices) radius = std::max(radius, std::abs(v));
        have_radius = have_radius || !poly.vertices.empty();
        desc += "; hull " + hex64(fnv1a(text));
    }
    if (!cloud_path.empty()) {
        const std::string text = read_file(cloud_path);
        const auto cloud = cloud_from_csv(text);
        SvgLayer layer;
        layer.kind = SvgLayer::Kind::Points;
        for (const auto& pt : cloud.points) {
            layer.data.push_back(pt.z);
            radius = std::max(radius, std::abs(pt.z));
        }
        have_radius = have_radius || !layer.data.empty();
        layers.push_back(std::move(layer));
        desc += "; cloud " + hex64(fnv1a(text));
    }
    if (layers.empty())
        throw std::invalid_argument("plot: need --cloud and/or --hull inputs");
    const std::string svg = render_svg(
        layers, have_radius ? std::optional<double>(radius) : std::nullopt, desc);
    if (out_path.empty())
        std::cout << svg;
    else
        write_file(out_path, svg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spatial numerical ranges, radii and unitization norms for "
                 "finite-dimensional normed algebras"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string a_text, b_text, alpha_text, x_text, y_text, lambda_text;
    std::string sub_text, out_dir = ".", out_path, oracle, flavor = "l1";
    std::string case_name, cloud_path;
    std::vector<std::string> hull_paths;
    bool all = false, force = false;

    auto add_common = [&](CLI::App* sub, bool need_spec) {
        if (need_spec)
            sub->add_option("--spec", common.spec_path, "algebra spec JSON file")
                ->required();
        sub->add_option("--seed", common.seed_flag, "RNG seed (overrides NUMRANGE_SEED)");
        sub->add_option("--profile", common.profile_path, "tolerance profile JSON");
    };

    auto* describe = app.add_subcommand("describe", "structural summary of an algebra spec");
    add_common(describe, true);

    auto* range = app.add_subcommand("range", "sample V(a): cloud CSV, hull JSON, radius");
    add_common(range, true);
    range->add_option("-a", a_text, "element, e.g. 1,0 or 0.5+0.5i,1")->required();
    range->add_option("--out", out_dir, "output directory");
    range->add_option("--oracle", oracle, "also emit an oracle polygon (identity)");

    auto* unit = app.add_subcommand("unitize", "emit the extended algebra spec JSON");
    add_common(unit, true);
    unit->add_option("--flavor", flavor, "op | l1");
    unit->add_flag("--force", force, "compute the op flavor even in the seminorm regime");
    unit->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run theorem checkers on a spec");
    add_common(verify, true);
    verify->add_option("--case", case_name, "thm21|thm22|cor23|thm24|thm25|thm26");
    verify->add_flag("--all", all, "run every checker whose gate passes");
    verify->add_option("-a", a_text, "element under test")->required();
    verify->add_option("-b", b_text, "second element (subadditivity)");
    verify->add_option("--alpha", alpha_text, "scalar (homogeneity)");
    verify->add_option("-x", x_text, "unit-sphere point (thm21)");
    verify->add_option("-y", y_text, "second sphere point (thm21 phase check)");
    verify->add_option("--lambda", lambda_text, "unitization shift (thm25/thm26)");
    verify->add_option("--subalgebra", sub_text, "coordinate subset, e.g. 0,1 (thm22)");
    verify->add_flag("--force", force, "admit the seminorm regime (thm24)");
    verify->add_option("--out", out_path, "report JSON file");

    auto* gallery = app.add_subcommand("gallery", "run the registered example cases");
    add_common(gallery, false);
    gallery->add_option("--case", case_name, "single case name (see docs)");
    gallery->add_flag("--all", all, "run all cases (default)");
    gallery->add_option("--out", out_path, "report JSON file");

    auto* plot = app.add_subcommand("plot", "render cloud/hull artifacts to SVG");
    plot->add_option("--cloud", cloud_path, "cloud CSV file");
    plot->add_option("--hull", hull_paths, "hull JSON file (repeatable for overlays)");
    plot->add_option("--out", out_path, "SVG file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (describe->parsed()) return cmd_describe(common);
        if (range->parsed()) return cmd_range(common, a_text, out_dir, oracle);
        if (unit->parsed()) return cmd_unitize(common, flavor, force, out_path);
        if (verify->parsed())
            return cmd_verify(common, case_name, all, a_text, b_text, alpha_text,
                              x_text, y_text, lambda_text, sub_text, force,
                              out_path);
        if (gallery->parsed()) return cmd_gallery(common, case_name, all, out_path);
        if (plot->parsed()) return cmd_plot(cloud_path, hull_paths, out_path);
    } catch (const UnitizeError& e) {
        std::cerr << "error: " << e.what();
        if (e.witness) std::cerr << " (witness " << format_element(*e.witness) << ")";
        std::cerr << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
