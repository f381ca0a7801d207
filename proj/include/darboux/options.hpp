// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

namespace darboux {

using cx = std::complex<double>;

// Accuracy budget shared by series and quadrature evaluators.
struct EvalOptions {
    double target_abs_tol = 1e-12;
    double target_rel_tol = 1e-10;
    int max_terms = 4000;         // series truncation budget
    int quadrature_limit = 4000;  // max panels / nodes per integral
    double resolvent_epsilon = 1e-6;  // default Im(E) shift for resolvents
};

struct PhysicalConstants {
    double hbar = 1.0;
    double mass = 1.0;
};

}  // namespace darboux
