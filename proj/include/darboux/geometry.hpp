// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "darboux/options.hpp"

namespace darboux::geom {

enum class SpaceId { DI, DII, DIII, DIV };
enum class SystemId {
    UV,
    ROTATED,
    DISPLACED_PARABOLIC,
    POLAR,
    PARABOLIC,
    ELLIPTIC,
    HYPERBOLIC,
    HOROSPHERICAL,
    EQUIDISTANT
};
enum class Signature { RIEMANNIAN, LORENTZIAN };
enum class LimitingSpace { FLAT, HYPERBOLIC, NONE };

struct SpaceParams {
    SpaceId space_id;
    double a = 1.0;
    double b = 0.0;

    // D_IV derived parameters a_pm = (a +- 2b)/4.
    double a_plus() const { return 0.25 * (a + 2.0 * b); }
    double a_minus() const { return 0.25 * (a - 2.0 * b); }

    void validate() const;  // throws DomainError on invariant violation
};

SpaceParams make_space(SpaceId id, double a, double b);

struct Point {
    double q1 = 0.0;
    double q2 = 0.0;
};

struct Box {
    double lo1, hi1, lo2, hi2;
    bool contains(Point q, double margin = 0.0) const {
        return q.q1 > lo1 + margin && q.q1 < hi1 - margin &&
               q.q2 > lo2 + margin && q.q2 < hi2 - margin;
    }
};

struct Chart {
    SpaceParams space;
    SystemId system_id;
    Box domain;
    double d = 1.0;       // interfocal half-distance (elliptic charts)
    double theta = 0.0;   // rotation angle (D_I rotated chart)
};

// Chart with the library default domain box for the (space, system) pair.
Chart make_chart(const SpaceParams& space, SystemId system);
Chart make_chart(const SpaceParams& space, SystemId system, const Box& domain,
                 double d = 1.0, double theta = 0.0);

// All charts defined on a space, in declaration order.
std::vector<SystemId> systems_of(SpaceId id);

struct MetricSample {
    double g11;
    double g22;
    double sqrt_abs_g;
    bool conformal;
    Signature signature;
};

MetricSample metric_diag(const Chart& chart, Point q);

// Is the chart's metric of the conformal form f(q) (du^2 + dv^2)?
bool is_conformal(const Chart& chart);

// Gaussian curvature by central differences (Richardson extrapolated) of
// the conformal/diagonal-metric formula.  Throws NonConformalChart for the
// Lorentzian D_III hyperbolic chart.
double gaussian_curvature_numeric(const Chart& chart, Point q);

// Closed-form curvature of the space, evaluated at a point of the UV chart.
double gaussian_curvature_closed(const SpaceParams& space, Point q_uv);

// Map a chart point to the UV chart of the same space.
Point to_uv(const Chart& chart, Point q);

LimitingSpace limiting_space(const SpaceParams& space);

std::string to_string(SpaceId id);
std::string to_string(SystemId id);

}  // namespace darboux::geom
