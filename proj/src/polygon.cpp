#include "nok/polygon.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "nok/errors.hpp"
#include "nok/zariski.hpp"
#include "walk.hpp"

namespace nok {

namespace {

QuadraticNumber affine_at(const Rational& c0, const Rational& c1, const QuadraticNumber& t) {
    return QuadraticNumber(c0) + QuadraticNumber(c1) * t;
}

const NOPolygon::Piece& piece_at(const NOPolygon& poly, const QuadraticNumber& t) {
    for (const auto& p : poly.pieces)
        if (QuadraticNumber(p.t0) <= t && t <= p.t1) return p;
    throw DomainError("parameter outside the polygon range: " + t.str());
}

}  // namespace

QuadraticNumber NOPolygon::alpha(const QuadraticNumber& t) const {
    const Piece& p = piece_at(*this, t);
    return affine_at(p.alpha0, p.alpha1, t);
}

QuadraticNumber NOPolygon::beta(const QuadraticNumber& t) const {
    const Piece& p = piece_at(*this, t);
    return affine_at(p.beta0, p.beta1, t);
}

ZariskiPath zariski_path(const SurfaceModel& model, const DivisorClass& D, const DivisorClass& G) {
    detail::Walk walk = detail::walk_ray(model, D, G, std::nullopt);
    assert(!walk.truncated);

    ZariskiPath path;
    path.mu = walk.end;
    path.nu = 0;
    const CurveRecord* g_curve = model.find_curve_by_class(G);
    if (g_curve) {
        for (std::size_t k = 0; k < model.curves.size(); ++k)
            if (&model.curves[k] == g_curve) {
                path.nu = walk.segments.front().coefficient_of(k).at(Rational(0));
                break;
            }
    }

    for (const auto& seg : walk.segments) {
        if (seg.t1 <= QuadraticNumber(path.nu)) continue;
        PathSegment ps;
        ps.t0 = std::max(seg.t0, path.nu);
        ps.t1 = seg.t1;
        for (std::size_t k = 0; k < seg.support.size(); ++k) {
            ps.support.push_back(model.curves[seg.support[k]].name);
            ps.coeff.emplace_back(seg.coeff[k].c0, seg.coeff[k].c1);
            if (sgn(seg.coeff[k].c1) < 0)
                throw MonotonicityViolation("coefficient of " + ps.support.back() +
                                            " decreases along the ray past nu = " + to_string(path.nu));
        }
        ps.P_const = seg.P_const;
        ps.P_slope = seg.P_slope;
        path.segments.push_back(std::move(ps));
    }
    assert(!path.segments.empty() && path.segments.front().t0 == path.nu);
    return path;
}

namespace {

void check_polygon(const NOPolygon& poly, std::size_t rank) {
    assert(!poly.pieces.empty());
    assert(poly.pieces.front().t0 == poly.nu);
    assert(poly.pieces.back().t1 == poly.mu);
    for (std::size_t i = 0; i < poly.pieces.size(); ++i) {
        const auto& p = poly.pieces[i];
        // alpha <= beta on the closed piece (affine: endpoints suffice)
        assert(affine_at(p.alpha0, p.alpha1, QuadraticNumber(p.t0)) <=
               affine_at(p.beta0, p.beta1, QuadraticNumber(p.t0)));
        assert(affine_at(p.alpha0, p.alpha1, p.t1) <= affine_at(p.beta0, p.beta1, p.t1));
        if (i + 1 < poly.pieces.size()) {
            const auto& q = poly.pieces[i + 1];
            assert(p.t1.is_rational() && p.t1.as_rational() == q.t0);
            // continuity, alpha convex non-decreasing, beta concave
            assert(p.alpha0 + p.alpha1 * q.t0 == q.alpha0 + q.alpha1 * q.t0);
            assert(p.beta0 + p.beta1 * q.t0 == q.beta0 + q.beta1 * q.t0);
            assert(p.alpha1 <= q.alpha1);
            assert(p.beta1 >= q.beta1);
        }
        assert(sgn(p.alpha1) >= 0 || poly.pieces.front().alpha0 + poly.pieces.front().alpha1 * poly.nu > 0);
    }
    assert(polygon_vertices(poly).size() <= 2 * rank + 2);
    (void)rank;
}

}  // namespace

NOPolygon no_polygon(const SurfaceModel& model, const DivisorClass& D, const FlagSpec& flag) {
    FlagSpec f = flag;
    if (!f.curve.empty()) {
        const CurveRecord* c = model.find_curve(f.curve);
        if (!c) throw InadmissibleFlag("unknown flag curve: " + f.curve);
        f.cls = c->cls;
    } else if (const CurveRecord* c = model.find_curve_by_class(f.cls)) {
        f.curve = c->name;
    }
    if (f.cls.size() != model.rank() || f.cls.is_zero()) throw InadmissibleFlag("flag curve class is zero");

    const PointProfile* x = nullptr;
    if (f.point != "generic") {
        x = model.find_point(f.point);
        if (!x) throw InadmissibleFlag("unknown point profile: " + f.point);
        if (!f.curve.empty() && x->multiplicity(f.curve) != 1)
            throw InadmissibleFlag("point " + f.point + " does not lie on " + f.curve + " with multiplicity 1");
    }

    ZariskiPath path = zariski_path(model, D, f.cls);

    NOPolygon poly;
    poly.nu = path.nu;
    poly.mu = path.mu;
    poly.radicand = path.mu.radicand();
    for (const auto& seg : path.segments) {
        NOPolygon::Piece piece;
        piece.t0 = seg.t0;
        piece.t1 = seg.t1;
        piece.alpha0 = piece.alpha1 = 0;
        for (std::size_t k = 0; k < seg.support.size(); ++k) {
            if (seg.support[k] == f.curve) continue;
            int ord = x ? x->order_on(seg.support[k], f.curve) : 0;
            piece.alpha0 += Rational(ord) * seg.coeff[k].first;
            piece.alpha1 += Rational(ord) * seg.coeff[k].second;
        }
        piece.beta0 = piece.alpha0 + intersect(model, seg.P_const, f.cls);
        piece.beta1 = piece.alpha1 + intersect(model, seg.P_slope, f.cls);
        poly.pieces.push_back(piece);
    }
    check_polygon(poly, model.rank());
    return poly;
}

QuadraticNumber polygon_area(const NOPolygon& poly) {
    QuadraticNumber area(0);
    QuadraticNumber half(Rational(1, 2));
    for (const auto& p : poly.pieces) {
        // integral of (beta - alpha) = c0 + c1 t over [t0, t1]
        Rational c0 = p.beta0 - p.alpha0;
        Rational c1 = p.beta1 - p.alpha1;
        QuadraticNumber t0(p.t0);
        area += QuadraticNumber(c0) * (p.t1 - t0) + QuadraticNumber(c1) * half * (p.t1 * p.t1 - t0 * t0);
    }
    return area;
}

QuadraticNumber slice_length(const NOPolygon& poly, const QuadraticNumber& t, bool* in_range) {
    if (t < QuadraticNumber(poly.nu) || t > poly.mu) {
        if (in_range) *in_range = false;
        return QuadraticNumber(0);
    }
    if (in_range) *in_range = true;
    return poly.beta(t) - poly.alpha(t);
}

bool contains_origin(const NOPolygon& poly) {
    return poly.nu == 0 && poly.pieces.front().alpha0 + poly.pieces.front().alpha1 * poly.nu == 0;
}

QuadraticNumber largest_simplex(const NOPolygon& poly) {
    if (!contains_origin(poly)) return QuadraticNumber(0);
    // alpha is convex >= 0 with alpha(0) = 0: it vanishes on an initial interval
    QuadraticNumber t_alpha = poly.mu;
    for (const auto& p : poly.pieces)
        if (p.alpha1 != 0 || p.alpha0 != 0) {
            t_alpha = QuadraticNumber(p.t0);
            break;
        }
    // hypotenuse constraint: beta(t) + t is concave, binding at t = 0
    QuadraticNumber lambda = QuadraticNumber(poly.pieces.front().beta0);
    lambda = std::min(lambda, t_alpha);
    lambda = std::min(lambda, poly.mu);
    return lambda;
}

QuadraticNumber min_sum(const NOPolygon& poly) {
    // t + alpha(t) is piecewise affine: scan the breakpoints
    QuadraticNumber best = poly.mu + poly.alpha(poly.mu);
    for (const auto& p : poly.pieces) {
        QuadraticNumber v = QuadraticNumber(p.t0) + affine_at(p.alpha0, p.alpha1, QuadraticNumber(p.t0));
        best = std::min(best, v);
    }
    return best;
}

namespace {

// merge adjacent pieces whose boundary functions agree
std::vector<NOPolygon::Piece> merged_pieces(const std::vector<NOPolygon::Piece>& pieces) {
    std::vector<NOPolygon::Piece> out;
    for (const auto& p : pieces) {
        if (!out.empty()) {
            auto& q = out.back();
            if (q.alpha0 == p.alpha0 && q.alpha1 == p.alpha1 && q.beta0 == p.beta0 && q.beta1 == p.beta1) {
                q.t1 = p.t1;
                continue;
            }
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace

NOPolygon restrict_above(const NOPolygon& poly, const Rational& t0, const SurfaceModel& model,
                         const DivisorClass& D, const FlagSpec& flag) {
    if (QuadraticNumber(t0) >= poly.mu) throw DomainError("restriction point is not below mu");

    FlagSpec f = flag;
    if (!f.curve.empty()) {
        const CurveRecord* c = model.find_curve(f.curve);
        if (!c) throw InadmissibleFlag("unknown flag curve: " + f.curve);
        f.cls = c->cls;
    }
    NOPolygon shifted = no_polygon(model, D - t0 * f.cls, flag);
    shifted.nu += t0;
    shifted.mu += QuadraticNumber(t0);
    for (auto& p : shifted.pieces) {
        // reparametrize g(t - t0) as an affine function of t
        p.alpha0 -= p.alpha1 * t0;
        p.beta0 -= p.beta1 * t0;
        p.t0 += t0;
        p.t1 += QuadraticNumber(t0);
    }

#ifndef NDEBUG
    // the translated polygon is the t >= t0 part of the original
    std::vector<NOPolygon::Piece> tail;
    Rational cut = std::max(t0, poly.nu);
    for (const auto& p : poly.pieces) {
        if (p.t1 <= QuadraticNumber(cut)) continue;
        NOPolygon::Piece q = p;
        q.t0 = std::max(q.t0, cut);
        tail.push_back(q);
    }
    auto a = merged_pieces(tail);
    auto b = merged_pieces(shifted.pieces);
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        assert(a[i].t0 == b[i].t0 && a[i].t1 == b[i].t1);
        assert(a[i].alpha0 == b[i].alpha0 && a[i].alpha1 == b[i].alpha1);
        assert(a[i].beta0 == b[i].beta0 && a[i].beta1 == b[i].beta1);
    }
#endif
    return shifted;
}

std::vector<Point2> polygon_vertices(const NOPolygon& poly) {
    std::vector<Point2> pts;
    auto push = [&](const QuadraticNumber& t, const QuadraticNumber& y) {
        if (!pts.empty() && pts.back().first == t && pts.back().second == y) return;
        pts.emplace_back(t, y);
    };
    // counterclockwise: along alpha left to right, then along beta right to left
    for (const auto& p : poly.pieces) push(QuadraticNumber(p.t0), affine_at(p.alpha0, p.alpha1, QuadraticNumber(p.t0)));
    const auto& last = poly.pieces.back();
    push(poly.mu, affine_at(last.alpha0, last.alpha1, poly.mu));
    push(poly.mu, affine_at(last.beta0, last.beta1, poly.mu));
    for (auto it = poly.pieces.rbegin(); it != poly.pieces.rend(); ++it)
        push(QuadraticNumber(it->t0), affine_at(it->beta0, it->beta1, QuadraticNumber(it->t0)));
    if (pts.size() > 1 && pts.back() == pts.front()) pts.pop_back();

    // drop collinear points, cyclically
    auto collinear = [](const Point2& a, const Point2& b, const Point2& c) {
        QuadraticNumber cross =
            (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
        return cross.is_zero();
    };
    for (bool changed = true; changed && pts.size() > 2;) {
        changed = false;
        for (std::size_t i = 0; i < pts.size() && pts.size() > 2; ++i) {
            const Point2& prev = pts[(i + pts.size() - 1) % pts.size()];
            const Point2& next = pts[(i + 1) % pts.size()];
            if (pts[i] == prev || collinear(prev, pts[i], next)) {
                pts.erase(pts.begin() + std::ptrdiff_t(i));
                changed = true;
                --i;
            }
        }
    }
    if (pts.size() == 2 && pts[0] == pts[1]) pts.pop_back();
    // keep the documented start point (nu, alpha(nu))
    Point2 start{QuadraticNumber(poly.nu), poly.alpha(QuadraticNumber(poly.nu))};
    auto at = std::find(pts.begin(), pts.end(), start);
    if (at != pts.end()) std::rotate(pts.begin(), at, pts.end());
    return pts;
}

std::string polygon_to_csv(const NOPolygon& poly) {
    std::string out = "t,y\n";
    for (const auto& [t, y] : polygon_vertices(poly)) {
        out += t.str();
        out += ',';
        out += y.str();
        out += '\n';
    }
    return out;
}

std::vector<Point2> vertices_from_csv(const std::string& csv) {
    std::vector<Point2> pts;
    std::istringstream in(csv);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == "t,y") continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("expected 't,y' row", 0);
        pts.emplace_back(QuadraticNumber::from_string(line.substr(0, comma)),
                         QuadraticNumber::from_string(line.substr(comma + 1)));
    }
    return pts;
}

std::string polygon_to_svg(const NOPolygon& poly) {
    auto pts = polygon_vertices(poly);
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (const auto& [t, y] : pts) {
        min_x = std::min(min_x, t.approx());
        max_x = std::max(max_x, t.approx());
        min_y = std::min(min_y, y.approx());
        max_y = std::max(max_y, y.approx());
    }
    double span_x = std::max(max_x - min_x, 1e-9), span_y = std::max(max_y - min_y, 1e-9);
    const double w = 640, h = 480, pad = 40;
    auto sx = [&](double x) { return pad + (x - min_x) / span_x * (w - 2 * pad); };
    auto sy = [&](double y) { return h - pad - (y - min_y) / span_y * (h - 2 * pad); };

    std::ostringstream svg;
    svg.precision(12);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    svg << "<polygon fill=\"#cfe2f3\" stroke=\"#1f4e79\" stroke-width=\"1.5\" points=\"";
    for (const auto& [t, y] : pts) svg << sx(t.approx()) << ',' << sy(y.approx()) << ' ';
    svg << "\"/>\n";
    for (const auto& [t, y] : pts) {
        svg << "<circle cx=\"" << sx(t.approx()) << "\" cy=\"" << sy(y.approx()) << "\" r=\"3\" fill=\"#1f4e79\"/>\n";
        svg << "<text x=\"" << sx(t.approx()) + 5 << "\" y=\"" << sy(y.approx()) - 5 << "\" font-size=\"11\">("
            << t.str() << ", " << y.str() << ")</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace nok
