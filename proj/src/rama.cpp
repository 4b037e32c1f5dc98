#include "fusefold/rama.hpp"

#include <cmath>

#include "fusefold/geometry.hpp"

namespace fusefold {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kRadToDeg = 180.0 / kPi;
}  // namespace

Ss3 induce_ss3(double phi_rad, double psi_rad, const RamaConfig& cfg) {
    if (!std::isfinite(phi_rad) || !std::isfinite(psi_rad))
        throw DomainError("induce_ss3: non-finite angle");
    if (cfg.sigma_deg <= 0.0) throw ConfigError("induce_ss3: sigma must be positive");

    Ss3 scores{};
    const double two_sigma2 = 2.0 * cfg.sigma_deg * cfg.sigma_deg;
    for (std::size_t k = 0; k < 3; ++k) {
        const double cphi = cfg.centers_deg[k][0] / kRadToDeg;
        const double cpsi = cfg.centers_deg[k][1] / kRadToDeg;
        const double dphi = wrap(phi_rad - cphi) * kRadToDeg;
        const double dpsi = wrap(psi_rad - cpsi) * kRadToDeg;
        scores[k] = std::exp(-(dphi * dphi + dpsi * dpsi) / two_sigma2);
    }
    const double z = scores[0] + scores[1] + scores[2];
    for (double& s : scores) s /= z;
    return scores;
}

Ss8 expand_ss8(const Ss3& p3) {
    double sum = p3[0] + p3[1] + p3[2];
    if (std::abs(sum - 1.0) > 1e-9) throw ValidationError("expand_ss8: input not normalized");
    const double h = p3[0], e = p3[1], c = p3[2];
    return {h * 0.8, h * 0.1, h * 0.1, e * 0.9, e * 0.1, c / 3.0, c / 3.0, c / 3.0};
}

Ss3 marginalize_ss8(const Ss8& p8) {
    return {p8[0] + p8[1] + p8[2], p8[3] + p8[4], p8[5] + p8[6] + p8[7]};
}

}  // namespace fusefold
