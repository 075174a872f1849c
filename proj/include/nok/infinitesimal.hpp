#pragma once

#include <map>
#include <optional>
#include <string>

#include "nok/polygon.hpp"

namespace nok {

// Blow-up of the base model at a point profile: rank grows by one, the new
// basis vector is the exceptional class E, listed curves are replaced by
// their proper transforms (named with a trailing prime).
struct BlowUpModel {
    SurfaceModel base;
    std::string center;       // point-profile name in base
    SurfaceModel prime;       // extended model
    std::string exceptional;  // curve name of E in prime

    DivisorClass pullback(const DivisorClass& d) const;
    // class of the proper transform of a listed base curve
    DivisorClass proper_transform(const std::string& base_curve) const;
};

// Throws DomainError when the point profile does not exist.
BlowUpModel blow_up(const SurfaceModel& model, const std::string& point);

// Point on the exceptional curve. Generic avoids every proper transform;
// an explicit point carries vanishing orders of the transforms along E.
struct InfinitesimalPoint {
    bool generic = true;
    std::string name = "z";
    std::map<std::string, int> ord_on_E;  // base-curve name -> ord_z of its transform along E

    static InfinitesimalPoint generic_point() { return {}; }
};

// Polygon of the pullback of D with respect to the flag (E, z). Throws NotBig.
NOPolygon infinitesimal_polygon(const SurfaceModel& model, const DivisorClass& D, const std::string& point,
                                const InfinitesimalPoint& z = InfinitesimalPoint::generic_point());

// sup{xi >= 0 : {0 <= t <= xi, 0 <= y <= t} inside the polygon}.
QuadraticNumber largest_inverted_simplex(const NOPolygon& poly);

// min over listed curves through x of (D.C)/mult_x(C) and sqrt(D^2),
// cross-checked against the generic infinitesimal polygon.
// Throws NotAmple (D fails the nef test), PointInAugmentedBase.
QuadraticNumber seshadri(const SurfaceModel& model, const DivisorClass& D, const std::string& point);

struct LambdaRegionReport {
    bool region_ok;            // interior of polygon /\ {t >= 2, y >= 0, t >= 2y} nonempty
    QuadraticNumber slice2;    // vertical slice length at t = 2 (0 when 2 > mu)
    bool slice2_in_range;
    std::string verdict;       // "singular-divisor-exists (model-conditional)" when region_ok
};

// Throws NotAmple.
LambdaRegionReport lambda_region_check(const SurfaceModel& model, const DivisorClass& B, const std::string& point);

// Certified upper bound (5-sqrt(5))/2 when B^2 >= 5 and the region check fails
// at the declared z; empty when the region check passes.
// Throws DomainError when B^2 < 5.
std::optional<QuadraticNumber> seshadri_upper_from_region(const SurfaceModel& model, const DivisorClass& B,
                                                          const std::string& point, const InfinitesimalPoint& z);

}  // namespace nok
