// SPDX-License-Identifier: Apache-2.0
#include "darboux/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "darboux/errors.hpp"
#include "darboux/specfun.hpp"

namespace darboux::kernels {

namespace sf = darboux::specfun;

namespace {
constexpr double kPi = 3.14159265358979323846;
const cx kI{0.0, 1.0};

bool near_nonpositive_int(cx z, double tol = 1e-9) {
    if (std::abs(z.imag()) > tol) return false;
    const double r = std::round(z.real());
    return r <= 0.5 && std::abs(z.real() - r) < tol;
}

// principal sqrt(-2 m E)/hbar with Re >= 0
cx decay_rate(cx E, const PhysicalConstants& pc) {
    cx s = std::sqrt(-2.0 * pc.mass * E) / pc.hbar;
    if (s.real() < 0.0) s = -s;
    return s;
}
}  // namespace

int MptParams::n_max() const {
    const double lim = (k1() - k2()).real() - 0.5;
    if (lim <= 0.0) return -1;
    const int n = static_cast<int>(std::ceil(lim)) - 1;
    return n;
}

cx rho_kernel(double r1, double r2, double T, cx omega, cx lambda,
              const PhysicalConstants& pc, const EvalOptions& opts) {
    if (!(r1 > 0.0 && r2 > 0.0))
        throw DomainError("rho_kernel: requires r > 0");
    const cx s = std::sin(omega * T);
    if (std::abs(s) < 1e-12)
        throw CausticSingularity("rho_kernel: sin(omega T) = 0");
    const cx ihbar = kI * pc.hbar;
    const cx w = pc.mass * omega / (ihbar * s);
    return pc.mass * omega * std::sqrt(r1 * r2) / (ihbar * s) *
           std::exp(-pc.mass * omega / (2.0 * ihbar) * (r1 * r1 + r2 * r2) *
                    std::cos(omega * T) / s) *
           sf::bessel_i(lambda, w * r1 * r2, opts);
}

cx rho_kernel_euclidean(double r1, double r2, double tE, cx omega, cx lambda,
                        const PhysicalConstants& pc, const EvalOptions& opts) {
    if (!(r1 > 0.0 && r2 > 0.0 && tE > 0.0))
        throw DomainError("rho_kernel_euclidean: requires r, tE > 0");
    const cx s = std::sinh(omega * tE);
    if (std::abs(s) < 1e-12)
        throw CausticSingularity("rho_kernel_euclidean: sinh(omega tE) = 0");
    const cx w = pc.mass * omega / (pc.hbar * s);
    return pc.mass * omega * std::sqrt(r1 * r2) / (pc.hbar * s) *
           std::exp(-pc.mass * omega / (2.0 * pc.hbar) * (r1 * r1 + r2 * r2) *
                    std::cosh(omega * tE) / s) *
           sf::bessel_i(lambda, w * r1 * r2, opts);
}

cx rho_green(double r1, double r2, cx E, cx omega, cx lambda,
             const PhysicalConstants& pc, const EvalOptions& opts) {
    if (!(r1 > 0.0 && r2 > 0.0))
        throw DomainError("rho_green: requires r > 0");
    const double rl = std::min(r1, r2), rg = std::max(r1, r2);
    const cx gamma_arg = 0.5 * (1.0 + lambda - E / (pc.hbar * omega));
    if (near_nonpositive_int(gamma_arg))
        throw PoleAtBoundState("rho_green: E on the discrete spectrum");
    const cx kap = E / (2.0 * pc.hbar * omega);
    const cx mu = 0.5 * lambda;
    const cx zl = pc.mass * omega / pc.hbar * rl * rl;
    const cx zg = pc.mass * omega / pc.hbar * rg * rg;
    const cx pref = std::exp(sf::log_gamma(gamma_arg) -
                             sf::log_gamma(1.0 + lambda)) /
                    (pc.hbar * omega * std::sqrt(r1 * r2));
    return pref * sf::whittaker_w(kap, mu, zg, opts) *
           sf::whittaker_m(kap, mu, zl, opts);
}

cx linear_green(double x1, double x2, cx Ecal, cx k,
                const PhysicalConstants& pc, const EvalOptions& opts) {
    const cx w = Ecal / k;
    const cx s1 = x1 - w, s2 = x2 - w;
    const auto off_cut = [](cx s) {
        return !(s.real() <= 0.0 && std::abs(s.imag()) < 1e-14);
    };
    if (!off_cut(s1) || !off_cut(s2))
        throw BranchCutHit("linear_green: shifted coordinate on the cut");
    const cx sl = (s1.real() < s2.real()) ? s1 : s2;
    const cx sg = (s1.real() < s2.real()) ? s2 : s1;
    const cx c = std::sqrt(8.0 * pc.mass * k) / (3.0 * pc.hbar);
    const cx third{1.0 / 3.0, 0.0};
    return 4.0 * pc.mass / (3.0 * pc.hbar * pc.hbar) * std::sqrt(s1 * s2) *
           sf::bessel_i(third, c * std::pow(sl, 1.5), opts) *
           sf::bessel_k(third, c * std::pow(sg, 1.5), opts);
}

cx linear_green_halfspace(double x1, double x2, cx Ecal, cx k,
                          double boundary_a, const PhysicalConstants& pc,
                          const EvalOptions& opts) {
    if (!(x1 > boundary_a && x2 > boundary_a))
        throw DomainError("linear_green_halfspace: x <= boundary");
    const cx gaa = linear_green(boundary_a, boundary_a, Ecal, k, pc, opts);
    const cx g12 = linear_green(x1, x2, Ecal, k, pc, opts);
    const cx g1a = linear_green(x1, boundary_a, Ecal, k, pc, opts);
    const cx ga2 = linear_green(boundary_a, x2, Ecal, k, pc, opts);
    if (std::abs(gaa) < 1e-14 * std::abs(g1a * ga2))
        throw BoundaryNodeZero(
            "linear_green_halfspace: boundary value vanishes (Dirichlet "
            "eigenvalue)");
    return g12 - g1a * ga2 / gaa;
}

cx ho_green(double x1, double x2, cx E, cx omega, const PhysicalConstants& pc,
            const EvalOptions& opts) {
    const cx gamma_arg = 0.5 - E / (pc.hbar * omega);
    if (near_nonpositive_int(gamma_arg))
        throw PoleAtBoundState("ho_green: E on the oscillator spectrum");
    const double xl = std::min(x1, x2), xg = std::max(x1, x2);
    const cx nu = -0.5 + E / (pc.hbar * omega);
    const cx alpha = std::sqrt(2.0 * pc.mass * omega / pc.hbar);
    const cx pref =
        std::sqrt(pc.mass / (kPi * pc.hbar * pc.hbar * pc.hbar * omega)) *
        std::exp(sf::log_gamma(gamma_arg));
    return pref * sf::pcf_d(nu, alpha * xg, opts) *
           sf::pcf_d(nu, -alpha * xl, opts);
}

double mpt_bound_energy(int n, const MptParams& params,
                        const PhysicalConstants& pc) {
    const int nm = params.n_max();
    if (nm < 0) throw NoBoundStates("mpt_bound_energy: no bound states");
    if (n < 0 || n > nm) throw IndexBeyondNM("mpt_bound_energy: n > N_M");
    const double kappa = (params.k1() - params.k2()).real() - n;
    const double factor = (2.0 * kappa - 1.0) * (2.0 * kappa - 1.0);
    return -0.5 * pc.hbar * pc.hbar / pc.mass * factor;
}

MptBoundValue mpt_bound(int n, const MptParams& params, double r,
                        const PhysicalConstants& pc, const EvalOptions& opts) {
    if (!(r > 0.0)) throw DomainError("mpt_bound: requires r > 0");
    const int nm = params.n_max();
    if (nm < 0) throw NoBoundStates("mpt_bound: k1 - k2 - 1/2 <= 0");
    if (n < 0 || n > nm) throw IndexBeyondNM("mpt_bound: n beyond N_M");
    const double k1 = params.k1().real();
    const double k2 = params.k2().real();
    const double kappa = k1 - k2 - n;
    // B.26 in log space
    const double logn =
        0.5 * (std::log(2.0 * (2.0 * kappa - 1.0)) +
               std::lgamma(k1 + k2 - kappa) + std::lgamma(k1 + k2 + kappa - 1.0) -
               std::lgamma(k1 - k2 + kappa) - std::lgamma(k1 - k2 - kappa + 1.0)) -
        std::lgamma(2.0 * k2);
    const double norm = std::exp(logn);
    const double sh = std::sinh(r), ch = std::cosh(r);
    const cx f = sf::hyp2f1(cx{-static_cast<double>(n), 0.0},
                            cx{-k1 + k2 - kappa + 1.0, 0.0}, cx{2.0 * k2, 0.0},
                            cx{-sh * sh, 0.0}, opts);
    const double value = norm * std::pow(sh, 2.0 * k2 - 0.5) *
                         std::pow(ch, -2.0 * k1 + 1.5) * f.real();
    const double factor = (2.0 * kappa - 1.0) * (2.0 * kappa - 1.0);
    (void)pc;
    return MptBoundValue{value, factor, norm};
}

cx mpt_scatter_core(cx p, const MptParams& params, double r,
                    const EvalOptions& opts) {
    if (!(r > 0.0)) throw DomainError("mpt_scatter: requires r > 0");
    const cx k1 = params.k1(), k2 = params.k2();
    const cx kappa = 0.5 * (1.0 + kI * p);
    const double sh = std::sinh(r), ch = std::cosh(r);
    const cx f = sf::hyp2f1(k1 + k2 - kappa, k1 + k2 + kappa - 1.0, 2.0 * k2,
                            cx{-sh * sh, 0.0}, opts);
    return std::exp((2.0 * k1 - 0.5) * std::log(ch) +
                    (2.0 * k2 - 0.5) * std::log(sh)) *
           f;
}

cx mpt_scatter(double p, const MptParams& params, double r,
               const PhysicalConstants& pc, const EvalOptions& opts) {
    if (!(p > 0.0)) throw DomainError("mpt_scatter: requires p > 0");
    const cx k1 = params.k1(), k2 = params.k2();
    const cx kappa = 0.5 * (1.0 + kI * p);
    const cx lg = sf::log_gamma(k1 + k2 - kappa) +
                  sf::log_gamma(-k1 + k2 + kappa) +
                  sf::log_gamma(k1 + k2 + kappa - 1.0) +
                  sf::log_gamma(-k1 + k2 - kappa + 1.0);
    const cx norm = std::sqrt(p * std::sinh(kPi * p) / (2.0 * kPi * kPi)) *
                    std::exp(0.5 * lg - sf::log_gamma(2.0 * k2));
    (void)pc;
    return norm * mpt_scatter_core(cx{p, 0.0}, params, r, opts);
}

cx mpt_green(double r1, double r2, cx E, const MptParams& params,
             const PhysicalConstants& pc, const EvalOptions& opts) {
    if (!(r1 > 0.0 && r2 > 0.0))
        throw DomainError("mpt_green: requires r > 0");
    const cx kt = decay_rate(E, pc);
    const cx eta = params.k2() * 2.0 - 1.0;  // sign-resolved eta
    const cx nu = params.k1() * 2.0 - 1.0;
    const cx m1 = 0.5 * (eta + kt);
    const cx m2 = 0.5 * (eta - kt);
    const cx L = 0.5 * (nu - 1.0);
    if (near_nonpositive_int(m1 - L))
        throw PoleAtBoundState("mpt_green: E on the discrete spectrum");
    const double rl = std::min(r1, r2), rg = std::max(r1, r2);
    const cx pref =
        pc.mass / (pc.hbar * pc.hbar) *
        std::exp(sf::log_gamma(m1 - L) + sf::log_gamma(L + m1 + 1.0) -
                 sf::log_gamma(m1 + m2 + 1.0) - sf::log_gamma(m1 - m2 + 1.0));
    const cx shape =
        std::exp(-(m1 - m2) * std::log(cx{std::cosh(r1) * std::cosh(r2), 0}) +
                 (m1 + m2 + 0.5) *
                     std::log(cx{std::tanh(r1) * std::tanh(r2), 0}));
    const double cg = std::cosh(rg), tl = std::tanh(rl);
    const cx f_g = sf::hyp2f1(-L + m1, L + m1 + 1.0, m1 - m2 + 1.0,
                              cx{1.0 / (cg * cg), 0.0}, opts);
    const cx f_l = sf::hyp2f1(-L + m1, L + m1 + 1.0, m1 + m2 + 1.0,
                              cx{tl * tl, 0.0}, opts);
    return pref * shape * f_g * f_l;
}

}  // namespace darboux::kernels
