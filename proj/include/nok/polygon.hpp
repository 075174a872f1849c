#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nok/model.hpp"
#include "nok/quadratic.hpp"

namespace nok {

// Admissible flag (curve, point): the point profile must put multiplicity 1
// on the flag curve. point == "generic" is the synthetic very-general point
// (multiplicity 0 on every other curve, so the lower boundary vanishes).
struct FlagSpec {
    std::string curve;  // listed-curve name; empty when cls is given directly
    DivisorClass cls;   // flag curve class, filled from the model when curve is named
    std::string point = "generic";
};

struct PathSegment {
    Rational t0;
    QuadraticNumber t1;  // rational except possibly on the final segment
    std::vector<std::string> support;
    std::vector<std::pair<Rational, Rational>> coeff;  // (constant, slope) per support curve
    DivisorClass P_const, P_slope;                     // P(t) = P_const + t * P_slope
};

// Negative part of D - tG on [nu, mu], piecewise affine in t.
struct ZariskiPath {
    Rational nu;         // coefficient of G in the negative part of D
    QuadraticNumber mu;  // bigness exit
    std::vector<PathSegment> segments;
};

// Throws NotBig, UnboundedRay (G never leaves the big cone),
// MonotonicityViolation (a coefficient decreases past nu).
ZariskiPath zariski_path(const SurfaceModel& model, const DivisorClass& D, const DivisorClass& G);

struct NOPolygon {
    struct Piece {
        Rational t0;
        QuadraticNumber t1;
        Rational alpha0, alpha1;  // alpha(t) = alpha0 + alpha1 * t
        Rational beta0, beta1;
    };

    Rational nu;
    QuadraticNumber mu;
    std::vector<Piece> pieces;  // partition [nu, mu]
    Integer radicand;           // radicand of mu (0 when mu is rational)

    QuadraticNumber alpha(const QuadraticNumber& t) const;
    QuadraticNumber beta(const QuadraticNumber& t) const;
};

using Point2 = std::pair<QuadraticNumber, QuadraticNumber>;

// Throws NotBig, InadmissibleFlag.
NOPolygon no_polygon(const SurfaceModel& model, const DivisorClass& D, const FlagSpec& flag);

QuadraticNumber polygon_area(const NOPolygon& poly);

// beta(t) - alpha(t); 0 with *in_range = false outside [nu, mu].
QuadraticNumber slice_length(const NOPolygon& poly, const QuadraticNumber& t, bool* in_range = nullptr);

// nu = 0 and alpha(0) = 0.
bool contains_origin(const NOPolygon& poly);

// sup{lambda >= 0 : triangle (0,0),(lambda,0),(0,lambda) inside the polygon}.
QuadraticNumber largest_simplex(const NOPolygon& poly);

// min of t + y over the polygon (attained on the lower boundary).
QuadraticNumber min_sum(const NOPolygon& poly);

// Polygon of D - t0*C translated by (t0, 0); checked equal to the t >= t0
// part of poly. Throws DomainError when t0 >= mu.
NOPolygon restrict_above(const NOPolygon& poly, const Rational& t0, const SurfaceModel& model,
                         const DivisorClass& D, const FlagSpec& flag);

// Boundary vertices, counterclockwise from (nu, alpha(nu)); collinear points merged.
std::vector<Point2> polygon_vertices(const NOPolygon& poly);

// "t,y" per vertex, exact fields.
std::string polygon_to_csv(const NOPolygon& poly);
std::vector<Point2> vertices_from_csv(const std::string& csv);

// Lossy decimal rendering with vertex labels.
std::string polygon_to_svg(const NOPolygon& poly);

}  // namespace nok
