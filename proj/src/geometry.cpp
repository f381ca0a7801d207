// SPDX-License-Identifier: Apache-2.0
#include "darboux/geometry.hpp"

#include <cmath>

#include "darboux/errors.hpp"

namespace darboux::geom {

namespace {

constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void outside(const char* what) {
    throw PointOutsideDomain(std::string("point outside domain: ") + what);
}

// Conformal factor f(q) where the metric is f (dq1^2 + dq2^2).
double conformal_factor(const Chart& c, Point q) {
    const SpaceParams& s = c.space;
    switch (s.space_id) {
        case SpaceId::DI:
            switch (c.system_id) {
                case SystemId::UV:
                    if (q.q1 <= 0.0) outside("D_I uv: u <= 0");
                    return 2.0 * q.q1;
                case SystemId::ROTATED: {
                    const double w = q.q1 * std::cos(c.theta) +
                                     q.q2 * std::sin(c.theta);
                    if (w <= 0.0) outside("D_I rotated: r cos + q sin <= 0");
                    return 2.0 * w;
                }
                case SystemId::DISPLACED_PARABOLIC: {
                    const double xi = q.q1, eta = q.q2;
                    const double lead = xi * xi - eta * eta + 2.0 * s.a;
                    if (lead <= 0.0 || eta <= 0.0)
                        outside("D_I displaced parabolic");
                    return lead * (xi * xi + eta * eta);
                }
                default: break;
            }
            break;
        case SpaceId::DII:
            switch (c.system_id) {
                case SystemId::UV: {
                    const double u = q.q1;
                    if (u <= 0.0) outside("D_II uv: u <= 0");
                    return s.b - s.a / (u * u);
                }
                case SystemId::PARABOLIC: {
                    const double xi = q.q1, eta = q.q2;
                    if (xi <= 0.0 || eta <= 0.0) outside("D_II parabolic");
                    return (s.b * xi * xi - s.a / (xi * xi)) +
                           (s.b * eta * eta - s.a / (eta * eta));
                }
                case SystemId::ELLIPTIC: {
                    const double w = q.q1, phi = q.q2;
                    if (w <= 0.0 || std::abs(phi) >= 0.5 * kPi)
                        outside("D_II elliptic");
                    const double ch = std::cosh(w), cp = std::cos(phi);
                    return (s.b * c.d * c.d * ch * ch * cp * cp - s.a) *
                           (ch * ch - cp * cp) / (ch * ch * cp * cp);
                }
                default: break;
            }
            break;
        case SpaceId::DIII:
            switch (c.system_id) {
                case SystemId::UV: {
                    const double eu = std::exp(-q.q1);
                    return s.a * eu + s.b * eu * eu;
                }
                case SystemId::PARABOLIC: {
                    const double xi = q.q1, eta = q.q2;
                    if (eta <= 0.0) outside("D_III parabolic: eta <= 0");
                    return s.a + 0.25 * s.b * (xi * xi + eta * eta);
                }
                case SystemId::ELLIPTIC: {
                    const double w = q.q1, phi = q.q2;
                    if (w <= 0.0) outside("D_III elliptic");
                    const double sh = std::sinh(w), cp = std::cos(phi),
                                 sp = std::sin(phi);
                    return (s.a +
                            0.25 * s.b * c.d * c.d * (sh * sh + cp * cp)) *
                           c.d * c.d * (sh * sh + sp * sp);
                }
                default: break;
            }
            break;
        case SpaceId::DIV:
            switch (c.system_id) {
                case SystemId::UV: {
                    const double u = q.q1;
                    if (u <= 0.0 || u >= 0.5 * kPi) outside("D_IV uv");
                    const double su = std::sin(u), cu = std::cos(u);
                    return s.a_plus() / (su * su) + s.a_minus() / (cu * cu);
                }
                case SystemId::HOROSPHERICAL: {
                    const double mu = q.q1, nu = q.q2;
                    if (mu <= 0.0 || nu <= 0.0) outside("D_IV horospherical");
                    return s.a_plus() / (nu * nu) + s.a_minus() / (mu * mu);
                }
                case SystemId::ELLIPTIC: {
                    const double w = q.q1, phi = q.q2;
                    if (w <= 0.0 || phi <= 0.0 || phi >= 0.5 * kPi)
                        outside("D_IV elliptic");
                    const double sh = std::sinh(w), ch = std::cosh(w);
                    const double sp = std::sin(phi), cp = std::cos(phi);
                    return s.a_plus() / (sp * sp) + s.a_minus() / (cp * cp) +
                           s.a_plus() / (sh * sh) - s.a_minus() / (ch * ch);
                }
                default: break;
            }
            break;
    }
    throw DomainError("conformal_factor: chart is not conformal");
}

// Richardson-extrapolated second derivative along axis `axis` of a scalar
// chart function.
template <typename F>
double second_deriv(const F& f, Point q, int axis, double h) {
    auto shift = [&](double t) {
        Point p = q;
        (axis == 0 ? p.q1 : p.q2) += t;
        return f(p);
    };
    auto stencil = [&](double step) {
        return (-shift(2 * step) + 16.0 * shift(step) - 30.0 * shift(0.0) +
                16.0 * shift(-step) - shift(-2 * step)) /
               (12.0 * step * step);
    };
    const double d1 = stencil(h), d2 = stencil(0.5 * h);
    return (16.0 * d2 - d1) / 15.0;
}

template <typename F>
double first_deriv(const F& f, Point q, int axis, double h) {
    auto shift = [&](double t) {
        Point p = q;
        (axis == 0 ? p.q1 : p.q2) += t;
        return f(p);
    };
    auto stencil = [&](double step) {
        return (-shift(2 * step) + 8.0 * shift(step) - 8.0 * shift(-step) +
                shift(-2 * step)) /
               (12.0 * step);
    };
    const double d1 = stencil(h), d2 = stencil(0.5 * h);
    return (16.0 * d2 - d1) / 15.0;
}

}  // namespace

void SpaceParams::validate() const {
    switch (space_id) {
        case SpaceId::DI:
            if (!(a > 0.0)) throw DomainError("D_I requires a > 0");
            break;
        case SpaceId::DII:
            if (!(a < 0.0)) throw DomainError("D_II requires a < 0");
            if (b < 0.0) throw DomainError("D_II requires b >= 0");
            break;
        case SpaceId::DIII:
            if (!(a > 0.0) || b < 0.0)
                throw DomainError("D_III requires a > 0, b >= 0");
            break;
        case SpaceId::DIV:
            // a = 2b (a_minus = 0) is the admissible hyperbolic limit
            if (!(a >= 2.0 * b) || !(b >= 0.0) || !(a > 0.0))
                throw DomainError("D_IV requires a >= 2b >= 0, a > 0");
            break;
    }
}

SpaceParams make_space(SpaceId id, double a, double b) {
    SpaceParams s{id, a, b};
    s.validate();
    return s;
}

std::vector<SystemId> systems_of(SpaceId id) {
    switch (id) {
        case SpaceId::DI:
            return {SystemId::UV, SystemId::ROTATED,
                    SystemId::DISPLACED_PARABOLIC};
        case SpaceId::DII:
            return {SystemId::UV, SystemId::POLAR, SystemId::PARABOLIC,
                    SystemId::ELLIPTIC};
        case SpaceId::DIII:
            return {SystemId::UV, SystemId::POLAR, SystemId::PARABOLIC,
                    SystemId::ELLIPTIC, SystemId::HYPERBOLIC};
        case SpaceId::DIV:
            return {SystemId::UV, SystemId::EQUIDISTANT,
                    SystemId::HOROSPHERICAL, SystemId::ELLIPTIC};
    }
    return {};
}

Chart make_chart(const SpaceParams& space, SystemId system) {
    space.validate();
    Box box{};
    switch (space.space_id) {
        case SpaceId::DI:
            switch (system) {
                case SystemId::UV:
                    box = {space.a + 0.1, space.a + 5.0, -3.0, 3.0};
                    break;
                case SystemId::ROTATED:
                    box = {0.5, 4.0, 0.5, 4.0};
                    break;
                case SystemId::DISPLACED_PARABOLIC:
                    box = {0.2, 1.6, 0.2, 1.2};
                    break;
                default:
                    throw DomainError("chart not defined on D_I");
            }
            return Chart{space, system, box, 1.0,
                         system == SystemId::ROTATED ? kPi / 3.0 : 0.0};
        case SpaceId::DII:
            switch (system) {
                case SystemId::UV: box = {0.3, 4.0, -3.0, 3.0}; break;
                case SystemId::POLAR: box = {0.3, 3.0, -1.2, 1.2}; break;
                case SystemId::PARABOLIC: box = {0.3, 2.5, 0.3, 2.5}; break;
                case SystemId::ELLIPTIC: box = {0.2, 2.0, -1.2, 1.2}; break;
                default: throw DomainError("chart not defined on D_II");
            }
            return Chart{space, system, box, 1.0, 0.0};
        case SpaceId::DIII:
            switch (system) {
                case SystemId::UV: box = {-1.5, 2.5, -3.0, 3.0}; break;
                case SystemId::POLAR: box = {0.2, 3.0, 0.0, 6.2}; break;
                case SystemId::PARABOLIC: box = {-2.0, 2.0, 0.2, 2.0}; break;
                case SystemId::ELLIPTIC: box = {0.2, 2.0, -3.0, 3.0}; break;
                case SystemId::HYPERBOLIC: box = {0.3, 3.0, 0.3, 3.0}; break;
                default: throw DomainError("chart not defined on D_III");
            }
            return Chart{space, system, box, 1.0, 0.0};
        case SpaceId::DIV:
            switch (system) {
                case SystemId::UV:
                    box = {0.15, 0.5 * kPi - 0.15, -3.0, 3.0};
                    break;
                case SystemId::EQUIDISTANT: box = {-2.0, 2.0, -3.0, 3.0}; break;
                case SystemId::HOROSPHERICAL: box = {0.3, 3.0, 0.3, 3.0}; break;
                case SystemId::ELLIPTIC:
                    box = {0.2, 2.5, 0.15, 0.5 * kPi - 0.15};
                    break;
                default: throw DomainError("chart not defined on D_IV");
            }
            return Chart{space, system, box, 1.0, 0.0};
    }
    throw DomainError("make_chart: unknown space");
}

Chart make_chart(const SpaceParams& space, SystemId system, const Box& domain,
                 double d, double theta) {
    Chart c = make_chart(space, system);
    c.domain = domain;
    c.d = d;
    c.theta = theta;
    return c;
}

bool is_conformal(const Chart& chart) {
    switch (chart.system_id) {
        case SystemId::POLAR:
        case SystemId::EQUIDISTANT:
        case SystemId::HYPERBOLIC:
            return false;
        default:
            return true;
    }
}

MetricSample metric_diag(const Chart& chart, Point q) {
    if (!chart.domain.contains(q))
        throw PointOutsideDomain("metric_diag: point not in chart domain");
    const SpaceParams& s = chart.space;
    if (chart.system_id == SystemId::HYPERBOLIC) {
        // D_III hyperbolic (Lorentzian): F/mu^2 dmu^2 - F/nu^2 dnu^2
        const double mu = q.q1, nu = q.q2;
        if (mu <= 0.0 || nu <= 0.0) outside("D_III hyperbolic");
        const double F = (s.a + 0.5 * s.b * (mu - nu)) * (mu + nu);
        if (F <= 0.0) outside("D_III hyperbolic: kernel factor <= 0");
        const double g11 = F / (mu * mu);
        const double g22 = -F / (nu * nu);
        return MetricSample{g11, g22, std::sqrt(std::abs(g11 * g22)), false,
                            Signature::LORENTZIAN};
    }
    if (chart.system_id == SystemId::POLAR) {
        double f = 0.0;
        const double r = q.q1;
        if (r <= 0.0) outside("polar: rho <= 0");
        if (s.space_id == SpaceId::DII) {
            const double c = std::cos(q.q2);
            if (std::abs(q.q2) >= 0.5 * kPi) outside("D_II polar theta");
            f = s.b - s.a / (r * r * c * c);
        } else if (s.space_id == SpaceId::DIII) {
            f = s.a + 0.25 * s.b * r * r;
        } else {
            throw DomainError("polar chart undefined on this space");
        }
        if (f <= 0.0) outside("polar: conformal factor <= 0");
        return MetricSample{f, r * r * f, r * f, false, Signature::RIEMANNIAN};
    }
    if (chart.system_id == SystemId::EQUIDISTANT) {
        const double al = q.q1;
        const double f = 0.25 * (s.a - 2.0 * s.b * std::tanh(al));
        if (f <= 0.0) outside("D_IV equidistant");
        const double ch = std::cosh(al);
        return MetricSample{f, f * ch * ch, f * ch, false,
                            Signature::RIEMANNIAN};
    }
    const double f = conformal_factor(chart, q);
    if (f <= 0.0) outside("conformal factor <= 0");
    return MetricSample{f, f, f, true, Signature::RIEMANNIAN};
}

double gaussian_curvature_numeric(const Chart& chart, Point q) {
    if (chart.system_id == SystemId::HYPERBOLIC)
        throw NonConformalChart(
            "gaussian_curvature_numeric: Lorentzian D_III hyperbolic chart");
    if (!chart.domain.contains(q))
        throw PointOutsideDomain("gaussian_curvature_numeric");
    const double scale =
        std::min({std::abs(q.q1) + 1.0, chart.domain.hi1 - chart.domain.lo1,
                  chart.domain.hi2 - chart.domain.lo2});
    const double h = 1e-3 * scale;
    if (!chart.domain.contains(q, 2.5 * h))
        throw PointOutsideDomain(
            "gaussian_curvature_numeric: no room for stencil");
    if (is_conformal(chart)) {
        auto lnf = [&](Point p) { return std::log(conformal_factor(chart, p)); };
        const double lap =
            second_deriv(lnf, q, 0, h) + second_deriv(lnf, q, 1, h);
        return -0.5 * lap / conformal_factor(chart, q);
    }
    // diagonal metric diag(E, G):
    //   K = -1/(2 sqrt(EG)) [ d1(G_{,1}/sqrt(EG)) + d2(E_{,2}/sqrt(EG)) ]
    auto E = [&](Point p) { return metric_diag(chart, p).g11; };
    auto G = [&](Point p) { return metric_diag(chart, p).g22; };
    auto t1 = [&](Point p) {
        return first_deriv(G, p, 0, h) / std::sqrt(E(p) * G(p));
    };
    auto t2 = [&](Point p) {
        return first_deriv(E, p, 1, h) / std::sqrt(E(p) * G(p));
    };
    const double val =
        first_deriv(t1, q, 0, h) + first_deriv(t2, q, 1, h);
    return -0.5 * val / std::sqrt(E(q) * G(q));
}

double gaussian_curvature_closed(const SpaceParams& space, Point q_uv) {
    space.validate();
    const double u = q_uv.q1;
    switch (space.space_id) {
        case SpaceId::DI:
            if (u <= 0.0) outside("D_I closed curvature: u <= 0");
            return 1.0 / (4.0 * u * u * u);
        case SpaceId::DII: {
            if (u <= 0.0) outside("D_II closed curvature: u <= 0");
            const double den = space.a - space.b * u * u;
            return space.a * (space.a - 3.0 * space.b * u * u) /
                   (den * den * den);
        }
        case SpaceId::DIII: {
            const double w = std::exp(-u);
            const double den = space.a + space.b * w;
            return -space.a * space.b / (2.0 * den * den * den);
        }
        case SpaceId::DIV: {
            if (u <= 0.0 || u >= 0.5 * kPi) outside("D_IV closed curvature");
            const double S = std::sin(u) * std::sin(u);
            const double C = std::cos(u) * std::cos(u);
            const double ap = space.a_plus(), am = space.a_minus();
            const double P = ap * C + am * S;
            return -(ap * ap * C * C * C + am * am * S * S * S +
                     3.0 * ap * am * S * C) /
                   (P * P * P);
        }
    }
    throw DomainError("gaussian_curvature_closed: unknown space");
}

Point to_uv(const Chart& chart, Point q) {
    const SpaceParams& s = chart.space;
    switch (s.space_id) {
        case SpaceId::DI:
            switch (chart.system_id) {
                case SystemId::UV: return q;
                case SystemId::ROTATED:
                    return {q.q1 * std::cos(chart.theta) +
                                q.q2 * std::sin(chart.theta),
                            -q.q1 * std::sin(chart.theta) +
                                q.q2 * std::cos(chart.theta)};
                case SystemId::DISPLACED_PARABOLIC:
                    return {0.5 * (q.q1 * q.q1 - q.q2 * q.q2) + s.a,
                            q.q1 * q.q2};
                default: break;
            }
            break;
        case SpaceId::DII:
            switch (chart.system_id) {
                case SystemId::UV: return q;
                case SystemId::POLAR:
                    return {q.q1 * std::cos(q.q2), q.q1 * std::sin(q.q2)};
                case SystemId::PARABOLIC:
                    return {q.q1 * q.q2, 0.5 * (q.q1 * q.q1 - q.q2 * q.q2)};
                case SystemId::ELLIPTIC:
                    return {chart.d * std::cosh(q.q1) * std::cos(q.q2),
                            chart.d * std::sinh(q.q1) * std::sin(q.q2)};
                default: break;
            }
            break;
        case SpaceId::DIII: {
            // all charts route through the (xi, eta) parabolic plane of 4.3
            double xi = 0.0, eta = 0.0;
            switch (chart.system_id) {
                case SystemId::UV: return q;
                case SystemId::POLAR:
                    xi = q.q1 * std::cos(q.q2);
                    eta = q.q1 * std::sin(q.q2);
                    break;
                case SystemId::PARABOLIC:
                    xi = q.q1;
                    eta = q.q2;
                    break;
                case SystemId::ELLIPTIC:
                    xi = chart.d * std::cosh(q.q1) * std::cos(q.q2);
                    eta = chart.d * std::sinh(q.q1) * std::sin(q.q2);
                    break;
                default:
                    throw DomainError("to_uv: unsupported D_III chart");
            }
            const double r2 = xi * xi + eta * eta;
            if (r2 <= 0.0) outside("to_uv: D_III origin");
            return {std::log(4.0 / r2), std::asin(2.0 * xi * eta / r2)};
        }
        case SpaceId::DIV:
            switch (chart.system_id) {
                case SystemId::UV: return q;
                case SystemId::EQUIDISTANT:
                    return {std::atan(std::exp(q.q1)), 0.5 * q.q2};
                case SystemId::HOROSPHERICAL:
                    return {std::atan2(q.q2, q.q1),
                            0.5 * std::log(q.q1 * q.q1 + q.q2 * q.q2)};
                case SystemId::ELLIPTIC: {
                    const double mu =
                        chart.d * std::cosh(q.q1) * std::cos(q.q2);
                    const double nu =
                        chart.d * std::sinh(q.q1) * std::sin(q.q2);
                    return {std::atan2(nu, mu),
                            0.5 * std::log(mu * mu + nu * nu)};
                }
                default: break;
            }
            break;
    }
    throw DomainError("to_uv: unsupported chart");
}

LimitingSpace limiting_space(const SpaceParams& space) {
    space.validate();
    constexpr double tol = 1e-12;
    switch (space.space_id) {
        case SpaceId::DI: return LimitingSpace::NONE;
        case SpaceId::DII:
            if (std::abs(space.b) < tol) return LimitingSpace::HYPERBOLIC;
            if (std::abs(space.a) < tol) return LimitingSpace::FLAT;
            return LimitingSpace::NONE;
        case SpaceId::DIII:
            if (std::abs(space.b) < tol) return LimitingSpace::FLAT;
            return LimitingSpace::NONE;
        case SpaceId::DIV:
            if (std::abs(space.a - 2.0 * space.b) < tol ||
                std::abs(space.b) < tol)
                return LimitingSpace::HYPERBOLIC;
            return LimitingSpace::NONE;
    }
    return LimitingSpace::NONE;
}

std::string to_string(SpaceId id) {
    switch (id) {
        case SpaceId::DI: return "dI";
        case SpaceId::DII: return "dII";
        case SpaceId::DIII: return "dIII";
        case SpaceId::DIV: return "dIV";
    }
    return "?";
}

std::string to_string(SystemId id) {
    switch (id) {
        case SystemId::UV: return "uv";
        case SystemId::ROTATED: return "rotated";
        case SystemId::DISPLACED_PARABOLIC: return "displaced_parabolic";
        case SystemId::POLAR: return "polar";
        case SystemId::PARABOLIC: return "parabolic";
        case SystemId::ELLIPTIC: return "elliptic";
        case SystemId::HYPERBOLIC: return "hyperbolic";
        case SystemId::HOROSPHERICAL: return "horospherical";
        case SystemId::EQUIDISTANT: return "equidistant";
    }
    return "?";
}

}  // namespace darboux::geom
