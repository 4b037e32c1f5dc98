#include <doctest.h>

#include <cmath>
#include <random>

#include "fusefold/errors.hpp"
#include "fusefold/rama.hpp"

using namespace fusefold;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double d2r = kPi / 180.0;
}  // namespace

TEST_CASE("induce_ss3 at the helix center") {
    const Ss3 p = induce_ss3(-60.0 * d2r, -45.0 * d2r);
    // helix kernel = 1; coil kernel = exp(-(60^2 + 45^2) / (2 * 40^2));
    // strand kernel = exp(-(60^2 + 175^2) / (2 * 40^2))
    const double kc = std::exp(-(60.0 * 60.0 + 45.0 * 45.0) / (2.0 * 40.0 * 40.0));
    const double ke = std::exp(-(60.0 * 60.0 + 175.0 * 175.0) / (2.0 * 40.0 * 40.0));
    const double z = 1.0 + kc + ke;
    CHECK(p[0] == doctest::Approx(1.0 / z).epsilon(1e-9));
    CHECK(p[1] == doctest::Approx(ke / z).epsilon(1e-6));
    CHECK(p[2] == doctest::Approx(kc / z).epsilon(1e-9));
    // headline values
    CHECK(p[0] == doctest::Approx(0.8530).epsilon(2e-4));
    CHECK(p[1] == doctest::Approx(1.9e-5).epsilon(5e-2));
    CHECK(p[2] == doctest::Approx(0.1470).epsilon(2e-3));
}

TEST_CASE("induce_ss3 argmax at each basin center is its own class") {
    const RamaConfig cfg;
    for (std::size_t k = 0; k < 3; ++k) {
        const Ss3 p = induce_ss3(cfg.centers_deg[k][0] * d2r, cfg.centers_deg[k][1] * d2r, cfg);
        std::size_t arg = 0;
        for (std::size_t j = 1; j < 3; ++j)
            if (p[j] > p[arg]) arg = j;
        CHECK(arg == k);
    }
}

TEST_CASE("induce_ss3 normalization, positivity, and periodicity") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int t = 0; t < 500; ++t) {
        const double phi = u(rng), psi = u(rng);
        const Ss3 p = induce_ss3(phi, psi);
        CHECK(std::abs(p[0] + p[1] + p[2] - 1.0) < 1e-12);
        for (double v : p) CHECK(v > 0.0);
        const Ss3 q = induce_ss3(phi + 2.0 * kPi, psi - 2.0 * kPi);
        for (std::size_t k = 0; k < 3; ++k) CHECK(q[k] == doctest::Approx(p[k]).epsilon(1e-12));
    }
}

TEST_CASE("induce_ss3 wraps kernel distances across the angle seam") {
    // psi = 175 deg and psi = -175 deg are 45 deg and 55 deg from the strand
    // center's 130 deg, not 45 vs 305
    const Ss3 a = induce_ss3(-120.0 * d2r, 175.0 * d2r);
    const Ss3 b = induce_ss3(-120.0 * d2r, -175.0 * d2r);
    CHECK(a[1] > 0.5);
    CHECK(b[1] > 0.5);
    CHECK(a[1] > b[1]);  // 45 deg off-center beats 55 deg
}

TEST_CASE("induce_ss3 rejects bad input") {
    CHECK_THROWS_AS(induce_ss3(std::nan(""), 0.0), DomainError);
    RamaConfig cfg;
    cfg.sigma_deg = 0.0;
    CHECK_THROWS_AS(induce_ss3(0.0, 0.0, cfg), ValidationError);
}

TEST_CASE("expand_ss8 basis cases") {
    const Ss8 h = expand_ss8({1.0, 0.0, 0.0});
    const Ss8 e = expand_ss8({0.0, 1.0, 0.0});
    const Ss8 c = expand_ss8({0.0, 0.0, 1.0});
    const Ss8 h_exp = {0.8, 0.1, 0.1, 0, 0, 0, 0, 0};
    const Ss8 e_exp = {0, 0, 0, 0.9, 0.1, 0, 0, 0};
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(h[k] == doctest::Approx(h_exp[k]).epsilon(1e-15));
        CHECK(e[k] == doctest::Approx(e_exp[k]).epsilon(1e-15));
    }
    for (std::size_t k = 5; k < 8; ++k) CHECK(c[k] == doctest::Approx(1.0 / 3).epsilon(1e-15));
    for (std::size_t k = 0; k < 5; ++k) CHECK(c[k] == 0.0);
}

TEST_CASE("expand_ss8 preserves mass and inverts through marginalize_ss8") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 500; ++t) {
        Ss3 p = {u(rng), u(rng), u(rng)};
        const double s = p[0] + p[1] + p[2];
        for (double& v : p) v /= s;
        const Ss8 q = expand_ss8(p);
        double qs = 0.0;
        for (double v : q) qs += v;
        CHECK(std::abs(qs - (p[0] + p[1] + p[2])) < 1e-12);
        const Ss3 back = marginalize_ss8(q);
        for (std::size_t k = 0; k < 3; ++k) CHECK(back[k] == doctest::Approx(p[k]).epsilon(1e-12));
    }
}

TEST_CASE("expand_ss8 rejects non-normalized input") {
    CHECK_THROWS_AS(expand_ss8({0.5, 0.5, 0.5}), ValidationError);
}
