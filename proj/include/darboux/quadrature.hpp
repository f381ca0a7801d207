// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "darboux/options.hpp"

namespace darboux::quad {

using Integrand = std::function<cx(double)>;

// Adaptive Gauss-Kronrod (G7,K15) on [a,b]. Deterministic bisection order.
cx gauss_kronrod(const Integrand& f, double a, double b, double abs_tol,
                 double rel_tol, int max_panels = 2000);

// \int_0^\infty f(t) dt for integrands with (possibly algebraic) endpoint
// behaviour at 0 and exponential decay at infinity.  Exp-sinh substitution
// t = exp(pi/2 sinh(u)), trapezoid with step halving.
cx exp_sinh(const Integrand& f, double abs_tol, double rel_tol,
            int max_level = 12);

// \int_0^\infty by fixed-width blocks of adaptive GK; stops when a block
// contributes less than tol relative to the accumulated magnitude.  Suits
// oscillatory integrands under an exponentially decaying envelope.
cx semi_infinite_blocks(const Integrand& f, double block, double abs_tol,
                        double rel_tol, int max_blocks = 400);

// \int_{-\infty}^{\infty} by blocks growing outward from 0.
cx line_blocks(const Integrand& f, double block, double abs_tol,
               double rel_tol, int max_blocks = 400);

}  // namespace darboux::quad
