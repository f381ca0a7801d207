// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include "darboux/options.hpp"

namespace darboux::specfun {

// Principal-branch log-gamma (Lanczos; reflection for Re z < 1/2).
cx log_gamma(cx z);
cx gamma(cx z);

// Confluent hypergeometric 1F1(a; b; z), ascending series with a Kummer
// transform for Re z < 0.
cx hyp1f1(cx a, cx b, cx z, const EvalOptions& opts = {});

// Gauss hypergeometric 2F1(a, b; c; z).  Series inside the disc; the
// z/(z-1) and 1-z transformations cover the real arguments this library
// needs (notably -sinh^2 r and tanh^2 r).
cx hyp2f1(cx a, cx b, cx c, cx z, const EvalOptions& opts = {});

// Modified Bessel functions of complex order and argument.
cx bessel_i(cx nu, cx z, const EvalOptions& opts = {});
cx bessel_k(cx nu, cx z, const EvalOptions& opts = {});
// K_{ip}(x) for real p and x > 0 through the cosh-kernel integral; real.
double bessel_k_imag_order(double p, double x, const EvalOptions& opts = {});

// Oscillatory Bessel / Hankel functions.
cx bessel_j(cx nu, cx z, const EvalOptions& opts = {});
cx hankel1(cx nu, cx z, const EvalOptions& opts = {});

// Airy functions, assembled from the Bessel connection on either side of
// the imaginary axis.
cx airy_ai(cx z, const EvalOptions& opts = {});
cx airy_bi(cx z, const EvalOptions& opts = {});

// Whittaker functions.  W uses the M-connection away from integer 2*mu and
// an independent integral representation at (or near) the integer case.
cx whittaker_m(cx kappa, cx mu, cx z, const EvalOptions& opts = {});
cx whittaker_w(cx kappa, cx mu, cx z, const EvalOptions& opts = {});
// The two W routes, exposed for cross-checks.
cx whittaker_w_connection(cx kappa, cx mu, cx z, const EvalOptions& opts = {});
cx whittaker_w_integral(cx kappa, cx mu, cx z, const EvalOptions& opts = {});

// Parabolic cylinder functions: even/odd pair and D assembled from them.
cx pcf_e0(cx nu, cx z, const EvalOptions& opts = {});
cx pcf_e1(cx nu, cx z, const EvalOptions& opts = {});
cx pcf_d(cx nu, cx z, const EvalOptions& opts = {});

// Legendre functions.  P on the cut (-1 < x < 1); Q for x > 1 via its
// hypergeometric representation; the conical Q_{-1/2-ip} additionally via
// the Laplace-type integral over I_{ip}.
cx legendre_p(cx degree, cx order, double x, const EvalOptions& opts = {});
cx legendre_q(cx degree, double x, const EvalOptions& opts = {});
cx legendre_q_conical_integral(double p, double x,
                               const EvalOptions& opts = {});

// Spec-facing enum dispatchers.
enum class ModifiedKind { I, K };
enum class OscKind { J, H1 };
enum class WhittakerKind { M, W };
enum class PcfKind { D, E0, E1 };
enum class HypKind { F11, F21 };
enum class LegendreKind { P, Q };

cx bessel_modified(ModifiedKind kind, cx order, cx arg,
                   const EvalOptions& opts = {});
cx bessel_oscillatory(OscKind kind, cx order, cx arg,
                      const EvalOptions& opts = {});
cx whittaker(WhittakerKind kind, cx kappa, cx mu, cx z,
             const EvalOptions& opts = {});
cx parabolic_cylinder(PcfKind kind, cx nu, cx z, const EvalOptions& opts = {});
cx hypergeometric(HypKind kind, cx a, cx b, cx c, cx z,
                  const EvalOptions& opts = {});
cx legendre(LegendreKind kind, cx degree, cx order, double x,
            const EvalOptions& opts = {});

}  // namespace darboux::specfun
