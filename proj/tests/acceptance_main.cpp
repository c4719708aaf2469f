// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Tolerances and sample budgets are fixed here on purpose;
// do not loosen them to make a run green.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "numrange/range.hpp"
#include "numrange/rng.hpp"
#include "numrange/verify.hpp"

using namespace numrange;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

double now_s() {
    using clock = std::chrono::steady_clock;
    static const auto t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

void report(int idx, bool ok, const std::string& what, double seconds) {
    std::printf("criterion %2d: %s  %s  [%.2fs]\n", idx, ok ? "PASS" : "FAIL",
                what.c_str(), seconds);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

Vec random_vec(Rng& rng, int d) {
    Vec v(d);
    for (int k = 0; k < d; ++k) v[k] = rng.cgaussian();
    return v;
}

ConvexPolygon disk_ngon(double r, int n = 720) {
    std::vector<Complex> pts;
    for (int k = 0; k < n; ++k) pts.push_back(std::polar(r, 2.0 * M_PI * k / n));
    return convex_hull(std::move(pts));
}

double find_gap(const CheckReport& r, const std::string& name) {
    for (const auto& g : r.gaps)
        if (g.name == name) return g.value;
    std::fprintf(stderr, "missing gap %s\n", name.c_str());
    std::exit(3);
}

struct Instance {
    AlgebraPtr A;
    Vec a;
};

/// The shared instance list: both scalar-action products under both norms
/// with three elements each, plus five seeded faithful non-unital draws.
std::vector<Instance> standard_instances() {
    std::vector<Instance> out;
    const Vec a1 = (Vec(2) << 1.0, 0.0).finished();
    const Vec a2 = (Vec(2) << 0.0, 1.0).finished();
    const Vec a3 = (Vec(2) << Complex(1, 0), Complex(0, 1)).finished();
    for (double p : {1.0, kInf})
        for (const Vec& a : {a1, a2, a3}) out.push_back({example32(p), a});
    const auto sel = random_faithful_nonunital(5, 424242);
    for (std::size_t i = 0; i < sel.accepted.size(); ++i) {
        Rng rng(mix_seed(424242, 1000 + i));
        out.push_back({sel.accepted[i], random_vec(rng, sel.accepted[i]->dim)});
    }
    return out;
}

std::string fmt2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 1: the left scalar-action product collapses every sampled range value to a1
void criterion1() {
    const double t0 = now_s();
    double worst = 0.0;
    const double ps[3] = {1.0, 2.0, kInf};
    for (int s = 0; s < 20; ++s) {
        const auto A = example31(ps[s % 3]);
        Rng rng(mix_seed(100, s));
        const Vec a = random_vec(rng, 2);
        const auto est = spatial_range(*A, a, 50, 5, s);
        for (const auto& pt : est.cloud.points)
            worst = std::max(worst, std::abs(pt.z - a[0]));
    }
    const double dt = now_s() - t0;
    report(1, worst <= 1e-12 && dt < 1.0,
           "range of the left scalar action is the point {a_1}; max deviation " +
               fmt2(worst),
           dt);
}

// 2: sup-norm right scalar action, a = (0,1): sampled hull vs the unit disk
void criterion2() {
    const double t0 = now_s();
    const auto A = example32(kInf);
    const Vec a = (Vec(2) << 0.0, 1.0).finished();
    const auto est = spatial_range(*A, a, 2000, 50, 0);
    const double H = hausdorff(est.hull, disk_ngon(1.0));
    const double dt = now_s() - t0;
    report(2, H <= 0.05 && dt < 10.0,
           "sampled hull vs unit disk, Hausdorff " + fmt2(H), dt);
}

// 3: l1-norm right scalar action, a = (1,0): sampled hull vs [0,1]
void criterion3() {
    const double t0 = now_s();
    const auto A = example32(1.0);
    const Vec a = (Vec(2) << 1.0, 0.0).finished();
    const auto est = spatial_range(*A, a, 2000, 50, 0);
    const double H = hausdorff(est.hull, convex_hull({{0, 0}, {1, 0}}));
    const double dt = now_s() - t0;
    report(3, H <= 0.02 && dt < 10.0,
           "sampled hull vs the segment [0,1], Hausdorff " + fmt2(H), dt);
}

// 4: sampled co-hull vs the unitization support oracle on every instance
void criterion4(const std::vector<Instance>& instances,
                std::vector<CheckReport>& reports24) {
    const double t0 = now_s();
    ToleranceProfile p;
    p.seed = 0;
    double worst = 0.0;
    bool ok = true;
    for (const auto& inst : instances) {
        auto r = check_thm24(inst.A, inst.a, p);
        worst = std::max(worst,
                         find_gap(r, "thm2.4(1)_hull_vs_unitization_oracle"));
        ok = ok && r.status == CheckStatus::Pass;
        reports24.push_back(std::move(r));
    }
    const double dt = now_s() - t0;
    report(4, ok && worst <= 0.05 && dt < 60.0,
           "co-hull vs unitization oracle over " +
               std::to_string(instances.size()) + " instances, worst Hausdorff " +
               fmt2(worst),
           dt);
}

// 5: l1-unitization disk: exact radius, containment, and the strict-gap case
void criterion5(const std::vector<Instance>& instances) {
    const double t0 = now_s();
    double worst_radius = 0.0, worst_incl = -1.0;
    for (const auto& inst : instances) {
        const double na = norm_eval(*inst.A, inst.a);
        const auto disk = v1_at_identity(*inst.A, inst.a, 0.0);
        worst_radius = std::max(worst_radius, std::abs(disk.radius - na));
        const auto est = spatial_range(*inst.A, inst.a, 2000, 50, 0);
        std::vector<Complex> pts;
        for (const auto& pt : est.cloud.points) pts.push_back(pt.z);
        pts.push_back(0.0);
        for (auto v : convex_hull(pts).vertices)
            worst_incl = std::max(worst_incl, std::abs(v) - disk.radius);
    }
    const auto strict = check_thm25(example31(1.0),
                                    (Vec(2) << 1.0, 0.0).finished(), 0.0,
                                    ToleranceProfile{});
    const double gap = find_gap(strict, "thm2.5(1)_properness");
    const double dt = now_s() - t0;
    report(5,
           worst_radius <= 1e-12 && worst_incl <= 1e-9 && gap >= 0.9 &&
               strict.status == CheckStatus::Pass,
           "disk radius error " + fmt2(worst_radius) + ", containment slack " +
               fmt2(worst_incl) + ", strict-inclusion gap " + fmt2(gap),
           dt);
}

// 6: radius bounds against the operator norm, and the shifted l1 radius
void criterion6(const std::vector<Instance>& instances) {
    const double t0 = now_s();
    bool ok = true;
    double worst_lo = -1.0, worst_hi = -1.0, worst_shift = 0.0;
    constexpr double kE = 2.718281828459045235360287;
    for (const auto& inst : instances) {
        const auto est = spatial_range(*inst.A, inst.a, 2000, 50, 0);
        const double nu = numerical_radius(est);
        const double no = operator_norm(*inst.A, inst.a);
        worst_lo = std::max(worst_lo, no / kE - nu);
        worst_hi = std::max(worst_hi, nu - no);
        ok = ok && no / kE - nu <= 0.02 && nu <= no + 1e-9;
        if (is_regular(*inst.A, 1e-6, 0).regular) {
            const double na = norm_eval(*inst.A, inst.a);
            ok = ok && na / kE - nu <= 0.02 && nu <= na + 1e-9;
        }
    }
    const auto base = example32(1.0);
    for (int s = 0; s < 20; ++s) {
        Rng rng(mix_seed(600, s));
        const Vec a = random_vec(rng, 2);
        const Complex lam = rng.cgaussian();
        const auto disk = v1_at_identity(*base, a, lam);
        double nu_l = 0.0;
        for (auto v : disk.polygon.vertices) nu_l = std::max(nu_l, std::abs(v));
        worst_shift = std::max(
            worst_shift, std::abs(nu_l - (norm_eval(*base, a) + std::abs(lam))));
    }
    ok = ok && worst_shift <= 1e-6;
    const double dt = now_s() - t0;
    report(6, ok,
           "radius in [||a||_op/e - " + fmt2(std::max(0.0, worst_lo)) +
               ", ||a||_op + " + fmt2(std::max(0.0, worst_hi)) +
               "], shifted-disk radius error " + fmt2(worst_shift),
           dt);
}

// 7: closed-form induced matrix norms vs the independent sampled estimator
void criterion7() {
    const double t0 = now_s();
    double worst_over = -1.0, worst_under = -1.0;
    for (int s = 0; s < 100; ++s) {
        Rng rng(mix_seed(7000, s));
        Mat M(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) M(i, j) = rng.cgaussian();
        for (double p : {1.0, kInf, 2.0}) {
            const double closed = induced_matrix_norm(M, p);
            const double sampled =
                sampled_matrix_norm(M, p, 100000, 8, mix_seed(7100, s));
            worst_over = std::max(worst_over, sampled - closed);
            worst_under = std::max(worst_under, closed - sampled);
        }
    }
    const double dt = now_s() - t0;
    report(7, worst_over <= 1e-9 && worst_under <= 0.01 && dt < 30.0,
           "sampled <= closed <= sampled + 0.01; overshoot " + fmt2(worst_over) +
               ", slack " + fmt2(worst_under),
           dt);
}

// 8: truncated l1 sequence element: small radius, large norm, not regular
void criterion8() {
    const double t0 = now_s();
    const int N = 50, n = 10;
    const auto A = pointwise_algebra(N, 1.0);
    Vec f = Vec::Zero(N);
    for (int k = 0; k < n; ++k) f[k] = 1.0;
    const auto est = spatial_range(*A, f, 2000, 50, 0);
    const double nu = numerical_radius(est);
    const double n1 = norm_eval(*A, f);
    const auto reg = is_regular(*A, 1e-6, 0);
    const double dt = now_s() - t0;
    report(8, nu <= 1.0 + 1e-9 && n1 == 10.0 && !reg.regular && reg.gap >= 0.9,
           "radius " + fmt2(nu) + " vs l1 norm " + fmt2(n1) +
               ", regularity witness gap " + fmt2(reg.gap),
           dt);
}

// 9: the six-range inclusion suite on gallery algebras and random instances
void criterion9(const std::vector<Instance>& instances) {
    const double t0 = now_s();
    std::vector<Instance> suite;
    suite.push_back({example32(1.0), (Vec(2) << 0.0, 1.0).finished()});
    suite.push_back({example32(kInf), (Vec(2) << Complex(1, 0), Complex(0, 1)).finished()});
    suite.push_back({pointwise_algebra(3, kInf), (Vec(3) << 1.0, Complex(0, 1), -0.5).finished()});
    {
        Vec f = Vec::Zero(50);
        for (int k = 0; k < 10; ++k) f[k] = 1.0;
        suite.push_back({pointwise_algebra(50, 1.0), f});
    }
    for (const auto& inst : instances)
        if (inst.A->dim <= 3 && !find_identity(*inst.A).has_value())
            suite.push_back(inst);
    ToleranceProfile p;
    p.seed = 0;
    bool ok = true;
    double worst = -1.0;
    int n_run = 0;
    for (const auto& inst : suite) {
        const auto r = check_thm26(inst.A, inst.a, Complex(0.5, 0.5), p);
        ok = ok && r.status == CheckStatus::Pass;
        for (const auto& g : r.gaps)
            if (!std::isinf(g.tol)) worst = std::max(worst, g.value - g.tol);
        ++n_run;
    }
    const double dt = now_s() - t0;
    report(9, ok,
           "inclusion suite over " + std::to_string(n_run) +
               " instances, worst margin " + fmt2(worst),
           dt);
}

// 10: the example gallery via the CLI: deterministic, exit 0, exactly the
// registered strict-inequality cases flagged
void criterion10() {
    const double t0 = now_s();
    const fs::path dir = fs::temp_directory_path() / "numrange_acceptance";
    fs::create_directories(dir);
    const fs::path out1 = dir / "gallery1.json", out2 = dir / "gallery2.json";
    auto run_once = [&](const fs::path& out) {
        const std::string cmd = std::string(NUMRANGE_CLI_PATH) +
                                " gallery --all --seed 0 --out " + out.string() +
                                " > " + (dir / "stdout.txt").string() + " 2>&1";
        const int raw = std::system(cmd.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    const int c1 = run_once(out1);
    const int c2 = run_once(out2);
    const std::string t1 = slurp(out1), t2 = slurp(out2);
    bool ok = c1 == 0 && c2 == 0 && !t1.empty() && t1 == t2;
    int n_pass = 0, n_violation = 0, n_fail = 0;
    std::vector<std::string> flagged;
    if (ok) {
        const auto j = nlohmann::json::parse(t1);
        for (const auto& r : j["reports"]) {
            const std::string status = r["status"].get<std::string>();
            if (status == "pass") ++n_pass;
            else if (status == "expected-violation") {
                ++n_violation;
                flagged.push_back(r["instance"].get<std::string>());
            } else
                ++n_fail;
        }
        ok = ok && n_fail == 0 && n_violation == 5 &&
             n_pass + n_violation == 10;
        const char* expected[5] = {"3.1(I)", "3.1(II)", "3.1(III)", "3.1(IV)",
                                   "3.2(IV)"};
        for (int i = 0; ok && i < 5; ++i) {
            bool found = false;
            for (const auto& f : flagged)
                found = found || f.rfind(expected[i], 0) == 0;
            ok = ok && found;
        }
    }
    const double dt = now_s() - t0;
    report(10, ok,
           "gallery deterministic, exit " + std::to_string(c1) + "/" +
               std::to_string(c2) + ", " + std::to_string(n_pass) + " pass + " +
               std::to_string(n_violation) + " expected violations",
           dt);
}

}  // namespace

int main() {
    const auto instances = standard_instances();
    std::vector<CheckReport> reports24;
    criterion1();
    criterion2();
    criterion3();
    criterion4(instances, reports24);
    criterion5(instances);
    criterion6(instances);
    criterion7();
    criterion8();
    criterion9(instances);
    criterion10();
    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
