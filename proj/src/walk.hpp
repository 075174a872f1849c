#pragma once

// Internal: piecewise-linear variation of Zariski decomposition along the ray
// D - tG. Segments are discovered by probing: decompose at a rational interior
// sample, solve the parametric linear system on that support, and compute the
// exact event window; if the window does not reach back to the previous
// breakpoint the probe moves closer. Every segment is therefore verified by an
// actual decomposition at a rational interior point.

#include <optional>
#include <utility>
#include <vector>

#include "nok/model.hpp"
#include "nok/quadratic.hpp"

namespace nok::detail {

struct Affine {
    Rational c0, c1;  // c0 + c1 * t
    Rational at(const Rational& t) const { return c0 + c1 * t; }
    QuadraticNumber at(const QuadraticNumber& t) const {
        return QuadraticNumber(c0) + QuadraticNumber(c1) * t;
    }
};

struct WalkSegment {
    Rational t0;
    QuadraticNumber t1;                // rational except possibly on the final segment
    std::vector<std::size_t> support;  // indices into model.curves, sorted
    std::vector<Affine> coeff;         // negative-part coefficients, aligned with support
    DivisorClass P_const, P_slope;     // P(t) = P_const + t * P_slope

    DivisorClass P_at(const Rational& t) const { return P_const + t * P_slope; }
    Affine pairing(const SurfaceModel& model, const DivisorClass& C) const {
        return {intersect(model, P_const, C), intersect(model, P_slope, C)};
    }
    Affine coefficient_of(std::size_t curve_index) const;
};

struct Walk {
    std::vector<WalkSegment> segments;
    QuadraticNumber end;     // mu (bigness exit) or the probe bound
    bool truncated = false;  // stopped at t_max while still big
};

// Throws NotBig when D is not big, UnboundedRay when the ray never exits the
// big cone and no probe bound is given.
Walk walk_ray(const SurfaceModel& model, const DivisorClass& D, const DivisorClass& G,
              std::optional<Rational> t_max);

}  // namespace nok::detail
