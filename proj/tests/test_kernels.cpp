// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "darboux/errors.hpp"
#include "darboux/kernels.hpp"
#include "darboux/quadrature.hpp"
#include "darboux/specfun.hpp"
#include "oracles.hpp"

using namespace darboux;
using namespace darboux::kernels;

namespace {
constexpr double kPi = 3.14159265358979323846;
const cx I{0.0, 1.0};
const PhysicalConstants pc{};

// (-hbar^2/2m d^2/dx^2 + V - E) f, fourth-order stencil in the first slot
cx ode_residual(const std::function<cx(double)>& f,
                const std::function<double(double)>& V, cx E, double x,
                double h) {
    const cx d2 = (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) +
                   16.0 * f(x - h) - f(x - 2 * h)) /
                  (12.0 * h * h);
    return -0.5 * pc.hbar * pc.hbar / pc.mass * d2 + (V(x) - E) * f(x);
}
}  // namespace

TEST_CASE("rho_kernel: free limit, half-integer image form, symmetry") {
    const cx lam{0.4, 0.0};
    // omega -> 0 reduces to the free radial kernel
    const double r1 = 1.0, r2 = 2.0, T = 1.0;
    const cx v = rho_kernel(r1, r2, T, cx{1e-6, 0.0}, lam, pc);
    const cx iht = I * pc.hbar * T;
    const cx free_val = pc.mass * std::sqrt(r1 * r2) / iht *
                        std::exp(I * pc.mass * (r1 * r1 + r2 * r2) /
                                 (2.0 * pc.hbar * T)) *
                        specfun::bessel_i(lam, pc.mass * r1 * r2 / iht);
    CHECK(std::abs(v - free_val) < 1e-8 * std::abs(free_val));

    // lambda = 1/2 Euclidean kernel equals the image-charge half-line kernel
    const double a1 = 1.0, a2 = 1.5, tE = 0.5;
    const cx ve =
        rho_kernel_euclidean(a1, a2, tE, cx{1e-7, 0.0}, cx{0.5, 0.0}, pc);
    const double pref = std::sqrt(pc.mass / (2.0 * kPi * pc.hbar * tE));
    const double img =
        pref * (std::exp(-pc.mass * (a1 - a2) * (a1 - a2) /
                         (2.0 * pc.hbar * tE)) -
                std::exp(-pc.mass * (a1 + a2) * (a1 + a2) /
                         (2.0 * pc.hbar * tE)));
    CHECK(std::abs(ve - img) < 1e-8 * std::abs(img));

    // symmetry
    const cx s1 = rho_kernel(0.7, 1.3, 0.9, cx{1.0, 0.0}, lam, pc);
    const cx s2 = rho_kernel(1.3, 0.7, 0.9, cx{1.0, 0.0}, lam, pc);
    CHECK(std::abs(s1 - s2) < 1e-13 * std::abs(s1));

    CHECK_THROWS_AS(rho_kernel(1.0, 1.0, kPi, cx{1.0, 0.0}, lam, pc),
                    CausticSingularity);
}

TEST_CASE("rho_green: symmetry, poles, ODE residual") {
    const cx om{1.0, 0.0}, lam{0.5, 0.0};
    const cx E{0.3, 0.01};
    const cx g12 = rho_green(1.0, 2.0, E, om, lam, pc);
    const cx g21 = rho_green(2.0, 1.0, E, om, lam, pc);
    CHECK(std::abs(g12 - g21) == 0.0);  // exact by r_<, r_> construction

    // poles of Gamma at E = hbar omega (2n + lambda + 1)
    for (int n = 0; n < 2; ++n) {
        const double En = (2.0 * n + lam.real() + 1.0);
        const cx gnear =
            rho_green(1.0, 2.0, cx{En + 1e-7, 0.0}, om, lam, pc);
        const cx gfar =
            rho_green(1.0, 2.0, cx{En + 0.2, 0.0}, om, lam, pc);
        CHECK(std::abs(gnear) > 1e4 * std::abs(gfar));
    }

    // ODE residual off-diagonal
    const double r2f = 2.0;
    auto f = [&](double r) { return rho_green(r, r2f, E, om, lam, pc); };
    auto V = [&](double r) {
        return 0.5 * pc.mass * om.real() * om.real() * r * r +
               pc.hbar * pc.hbar * (lam.real() * lam.real() - 0.25) /
                   (2.0 * pc.mass * r * r);
    };
    const cx res = ode_residual(f, V, E, 0.8, 2e-3);
    CHECK(std::abs(res) < 1e-5);
}

TEST_CASE("linear_green: translation covariance, ODE, spectral oracle") {
    const cx k{1.0, 0.0};
    // E + i eps keeps the shifted coordinates off the 3/2-power cut on the
    // classically allowed side
    const cx E{0.5, 0.01};
    const double c = 0.3;
    // G(x1+c, x2+c; E + k c) = G(x1, x2; E)
    const cx g0 = linear_green(0.2, 1.1, E, k, pc);
    const cx g1 = linear_green(0.2 + c, 1.1 + c, E + k * c, k, pc);
    CHECK(std::abs(g0 - g1) < 1e-10 * std::abs(g0));

    // ODE residual
    const cx Ec{0.4, 0.01};
    auto f = [&](double x) { return linear_green(x, 2.0, Ec, k, pc); };
    auto V = [&](double x) { return x; };
    const cx res = ode_residual(f, V, Ec, 0.5, 2e-3);
    CHECK(std::abs(res) < 1e-5);

    // Spectral (Airy-product) representation: equals the *retarded* kernel
    // Ai(z_>) [Bi + i Ai](z_<); the printed I_{1/3} K_{1/3} closed form is
    // the standing-wave combination Ai(z_>) [Bi - sqrt(3) Ai](z_<), so both
    // relations are verified at one point pair.
    const double alpha = std::cbrt(2.0 * pc.mass * k.real() /
                                   (pc.hbar * pc.hbar));
    const cx Es{-3.0, 0.01};
    const double x1 = 0.2, x2 = 1.1;
    auto integrand = [&](double e) -> cx {
        const cx a1v = specfun::airy_ai(cx{alpha * (x1 - e / k.real()), 0.0});
        const cx a2v = specfun::airy_ai(cx{alpha * (x2 - e / k.real()), 0.0});
        return alpha * alpha / k.real() * a1v * a2v / (e - Es);
    };
    // head: direct blocks up to e0
    const double e0 = 50.0;
    cx gs = quad::gauss_kronrod(integrand, -40.0, e0, 1e-9, 1e-8, 8000);
    // tail in t = sqrt(e): the Ai*Ai difference-frequency phase becomes
    // asymptotically linear with period 2 pi sqrt(k)/(alpha^{3/2} (x2-x1))
    auto tail = [&](double t) -> cx { return 2.0 * t * integrand(t * t); };
    const double Tt = 2.0 * kPi * std::sqrt(k.real()) /
                      (std::pow(alpha, 1.5) * (x2 - x1));
    std::vector<cx> partial;
    cx acc = gs;
    double t0 = std::sqrt(e0);
    partial.push_back(acc);
    for (int j = 1; j <= 6; ++j) {
        acc += quad::gauss_kronrod(tail, t0 + (j - 1) * Tt / 2,
                                   t0 + j * Tt / 2, 1e-9, 1e-8, 4000);
        partial.push_back(acc);
    }
    while (partial.size() > 1) {
        for (size_t i = 0; i + 1 < partial.size(); ++i)
            partial[i] = 0.5 * (partial[i] + partial[i + 1]);
        partial.pop_back();
    }
    gs = partial[0];
    const cx z1{alpha * (x1 - (Es / k).real()), alpha * (-(Es / k).imag())};
    const cx z2{alpha * (x2 - (Es / k).real()), alpha * (-(Es / k).imag())};
    const cx pref = 2.0 * pc.mass * kPi / (pc.hbar * pc.hbar * alpha);
    const cx g_ret = pref * specfun::airy_ai(z2) *
                     (specfun::airy_bi(z1) + I * specfun::airy_ai(z1));
    CHECK(std::abs(gs - g_ret) < 1e-4 * std::abs(g_ret));
    // exact standing-wave relation for the I*K closed form
    const cx gc = linear_green(x1, x2, Es, k, pc);
    const cx g_stand = pref * specfun::airy_ai(z2) *
                       (specfun::airy_bi(z1) -
                        std::sqrt(3.0) * specfun::airy_ai(z1));
    CHECK(std::abs(gc - g_stand) < 1e-9 * std::abs(gc));
}

TEST_CASE("linear_green_halfspace: Dirichlet boundary and far field") {
    const cx k{1.0, 0.0};
    const cx E{-0.3, 0.0};
    const double a = 0.1;
    const cx gb = linear_green_halfspace(a + 1e-13, 2.0, E, k, a, pc);
    const cx gfull = linear_green(a + 1e-13, 2.0, E, k, pc);
    CHECK(std::abs(gb) < 1e-10 * std::abs(gfull));
    const cx gb2 = linear_green_halfspace(2.0, a + 1e-13, E, k, a, pc);
    CHECK(std::abs(gb2) < 1e-10 * std::abs(gfull));

    // far from the wall the image correction is exponentially small
    const cx gfar = linear_green_halfspace(5.0, 6.0, cx{0.05, 0.0}, k, a, pc);
    const cx gfree = linear_green(5.0, 6.0, cx{0.05, 0.0}, k, pc);
    CHECK(std::abs(gfar - gfree) < 1e-3 * std::abs(gfree));
}

TEST_CASE("ho_green: parity, ground-state pole, ODE residual") {
    const cx om{1.0, 0.0};
    const cx E{0.2, 0.01};
    const cx ga = ho_green(0.5, 1.5, E, om, pc);
    const cx gb = ho_green(-0.5, -1.5, E, om, pc);
    CHECK(std::abs(ga - gb) < 1e-12 * std::abs(ga));

    const cx gnear = ho_green(0.5, 1.5, cx{0.5 + 1e-8, 0.0}, om, pc);
    CHECK(std::abs(gnear) > 1e6);

    const cx Ec{0.7, 0.01};
    auto f = [&](double x) { return ho_green(x, 1.2, Ec, om, pc); };
    auto V = [&](double x) { return 0.5 * x * x; };
    const cx res = ode_residual(f, V, Ec, 0.3, 2e-3);
    CHECK(std::abs(res) < 1e-5);
}

TEST_CASE("mpt_bound: parity cases, normalization, node count") {
    // eta^2 = 1/4 with k2 = 1/4 gives an even state: vanishing derivative
    // at r -> 0.
    MptParams even_p{cx{0.5, 0.0}, cx{4.5, 0.0}, +1, -1};
    CHECK(even_p.k2().real() == doctest::Approx(0.25));
    const double h = 1e-3;
    const double f1 = mpt_bound(0, even_p, h, pc).value;
    const double f2 = mpt_bound(0, even_p, 2.0 * h, pc).value;
    CHECK(std::abs(f2 - f1) < 1e-5 * std::abs(f1));
    // k2 = 3/4 gives an odd state: value ~ r at the origin
    MptParams odd_p{cx{0.5, 0.0}, cx{4.5, 0.0}, +1, +1};
    CHECK(odd_p.k2().real() == doctest::Approx(0.75));
    CHECK(std::abs(mpt_bound(0, odd_p, 1e-6, pc).value) < 1e-5);

    // normalization at (eta, nu) = (1.5, 4.5), n = 0
    MptParams mp{cx{1.5, 0.0}, cx{4.5, 0.0}};
    CHECK(mp.n_max() == 0);
    auto dens = [&](double r) -> cx {
        const double v = mpt_bound(0, mp, r, pc).value;
        return cx{v * v, 0.0};
    };
    const cx nrm = quad::gauss_kronrod(dens, 1e-9, 25.0, 1e-10, 1e-9, 4000);
    CHECK(std::abs(nrm.real() - 1.0) < 1e-6);

    // node counts at (1.5, 6.5): n = 0 has none, n = 1 has one
    MptParams mp2{cx{1.5, 0.0}, cx{6.5, 0.0}};
    CHECK(mp2.n_max() == 1);
    for (int n = 0; n <= 1; ++n) {
        int sign_changes = 0;
        double prev = mpt_bound(n, mp2, 0.05, pc).value;
        for (int i = 1; i <= 400; ++i) {
            const double r = 0.05 + 8.0 * i / 400.0;
            const double cur = mpt_bound(n, mp2, r, pc).value;
            if (prev != 0.0 && cur != 0.0 && (prev < 0) != (cur < 0))
                ++sign_changes;
            prev = cur;
        }
        CHECK(sign_changes == n);
    }
    CHECK_THROWS_AS(mpt_bound(3, mp, 1.0, pc), IndexBeyondNM);
    MptParams none{cx{1.5, 0.0}, cx{0.5, 0.0}};
    CHECK_THROWS_AS(mpt_bound(0, none, 1.0, pc), NoBoundStates);
}

TEST_CASE("mpt_scatter: small-r limit, ODE residual, continuity") {
    MptParams mp{cx{1.5, 0.0}, cx{0.5, 0.0}};
    const double p = 1.2;
    // Psi_p(r)/r^{2k2 - 1/2} -> N_p as r -> 0
    const double r0 = 1e-4;
    const cx lim = mpt_scatter(p, mp, r0, pc) /
                   std::pow(r0, 2.0 * mp.k2().real() - 0.5);
    const cx lim2 = mpt_scatter(p, mp, 2e-4, pc) /
                    std::pow(2e-4, 2.0 * mp.k2().real() - 0.5);
    CHECK(std::abs(lim - lim2) < 1e-6 * std::abs(lim));

    auto f = [&](double r) { return mpt_scatter(p, mp, r, pc); };
    auto V = [&](double r) {
        const double e2 = mp.eta.real() * mp.eta.real() - 0.25;
        const double n2 = mp.nu.real() * mp.nu.real() - 0.25;
        return 0.5 * (e2 / (std::sinh(r) * std::sinh(r)) -
                      n2 / (std::cosh(r) * std::cosh(r)));
    };
    const cx res = ode_residual(f, V, cx{0.5 * p * p, 0.0}, 0.8, 1e-3);
    CHECK(std::abs(res) < 1e-5);

    // no spurious jumps across a grid
    double prev = std::abs(f(0.1));
    for (int i = 1; i <= 60; ++i) {
        const double r = 0.1 + 2.9 * i / 60.0;
        const double cur = std::abs(f(r));
        CHECK(std::abs(cur - prev) < 10.0 * (0.05 + std::abs(prev)));
        prev = cur;
    }
}

TEST_CASE("mpt_green: symmetry, ODE residual, bound-state pole") {
    MptParams mp{cx{1.5, 0.0}, cx{4.5, 0.0}};
    const cx E{0.3, 0.01};
    const cx g12 = mpt_green(0.5, 1.5, E, mp, pc);
    const cx g21 = mpt_green(1.5, 0.5, E, mp, pc);
    CHECK(std::abs(g12 - g21) == 0.0);

    auto f = [&](double r) { return mpt_green(r, 1.8, E, mp, pc); };
    auto V = [&](double r) {
        const double e2 = mp.eta.real() * mp.eta.real() - 0.25;
        const double n2 = mp.nu.real() * mp.nu.real() - 0.25;
        return 0.5 * (e2 / (std::sinh(r) * std::sinh(r)) -
                      n2 / (std::cosh(r) * std::cosh(r)));
    };
    const cx res = ode_residual(f, V, E, 0.4, 1e-3);
    CHECK(std::abs(res) < 1e-5 * std::max(1.0, std::abs(f(0.4))));

    // pole location: bisect 1/G through the n = 0 bound energy
    const double e0 = mpt_bound_energy(0, mp, pc);
    auto invg = [&](double e) {
        return 1.0 / mpt_green(0.6, 1.2, cx{e, 0.0}, mp, pc).real();
    };
    // asymmetric bracket (a symmetric one puts the first midpoint exactly
    // on the pole); stop above the library's pole guard band
    const double pole = oracles::bisect(invg, e0 - 0.37, e0 + 0.4, 21);
    CHECK(std::abs(pole - e0) < 1e-6);
}
