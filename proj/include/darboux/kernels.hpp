// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "darboux/options.hpp"

namespace darboux::kernels {

// Modified Poeschl-Teller parameter block.
// V(r) = (hbar^2/2m) [ (eta^2-1/4)/sinh^2 r - (nu^2-1/4)/cosh^2 r ]
struct MptParams {
    cx eta{0.0, 0.0};
    cx nu{0.0, 0.0};
    int sign1 = +1;  // k1 = (1 + sign1*nu)/2
    int sign2 = +1;  // k2 = (1 + sign2*eta)/2

    cx k1() const { return 0.5 * (1.0 + static_cast<double>(sign1) * nu); }
    cx k2() const { return 0.5 * (1.0 + static_cast<double>(sign2) * eta); }
    // number of bound states: n = 0..n_max with n < k1 - k2 - 1/2
    int n_max() const;
};

// Radial harmonic oscillator short-time kernel (real time) and its
// Wick-rotated form.
cx rho_kernel(double r1, double r2, double T, cx omega, cx lambda,
              const PhysicalConstants& pc, const EvalOptions& opts = {});
cx rho_kernel_euclidean(double r1, double r2, double tE, cx omega, cx lambda,
                        const PhysicalConstants& pc,
                        const EvalOptions& opts = {});

// Radial harmonic oscillator resolvent.
cx rho_green(double r1, double r2, cx E, cx omega, cx lambda,
             const PhysicalConstants& pc, const EvalOptions& opts = {});

// Linear-potential resolvent V(x) = k x on the line, and the half-space
// Dirichlet construction at x = boundary_a.
cx linear_green(double x1, double x2, cx Ecal, cx k,
                const PhysicalConstants& pc, const EvalOptions& opts = {});
cx linear_green_halfspace(double x1, double x2, cx Ecal, cx k,
                          double boundary_a, const PhysicalConstants& pc,
                          const EvalOptions& opts = {});

// Harmonic oscillator resolvent.
cx ho_green(double x1, double x2, cx E, cx omega, const PhysicalConstants& pc,
            const EvalOptions& opts = {});

// Modified Poeschl-Teller bound states, scattering states, resolvent.
struct MptBoundValue {
    double value;          // Psi_n(r)
    double energy_factor;  // [2(k1-k2-n)-1]^2; E_n = -(hbar^2/2m) * factor
    double norm;           // N_n
};
MptBoundValue mpt_bound(int n, const MptParams& params, double r,
                        const PhysicalConstants& pc,
                        const EvalOptions& opts = {});
double mpt_bound_energy(int n, const MptParams& params,
                        const PhysicalConstants& pc);
cx mpt_scatter(double p, const MptParams& params, double r,
               const PhysicalConstants& pc, const EvalOptions& opts = {});
// Unnormalized scattering solution (used by the solution catalog where the
// delta-normalization constant is not wanted).
cx mpt_scatter_core(cx p, const MptParams& params, double r,
                    const EvalOptions& opts = {});
cx mpt_green(double r1, double r2, cx E, const MptParams& params,
             const PhysicalConstants& pc, const EvalOptions& opts = {});

}  // namespace darboux::kernels
