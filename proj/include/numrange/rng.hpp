#ifndef NUMRANGE_RNG_HPP
#define NUMRANGE_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace numrange {

/// Deterministic random source. All draws go through explicit inverse
/// transforms (no std:: distributions, whose output is
/// implementation-defined), so streams are byte-stable across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0,1).
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 6.283185307179586476925287 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    std::complex<double> cgaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

    /// Uniform on the unit circle.
    std::complex<double> unit_phase() {
        const double t = 6.283185307179586476925287 * uniform();
        return {std::cos(t), std::sin(t)};
    }

    /// Uniform on the closed unit disk.
    std::complex<double> disk() {
        const double r = std::sqrt(uniform());
        return r * unit_phase();
    }

    /// Uniform on the standard (n-1)-simplex.
    std::vector<double> simplex(int n) {
        // exponential spacings normalized
        std::vector<double> w(n);
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            double u = uniform();
            while (u <= 1e-300) u = uniform();
            w[i] = -std::log(u);
            s += w[i];
        }
        for (auto& x : w) x /= s;
        return w;
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Derive an independent child seed from (seed, index); splitmix64 finalizer.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t idx) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (idx + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace numrange

#endif
