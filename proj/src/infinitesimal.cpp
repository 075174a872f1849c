#include "nok/infinitesimal.hpp"

#include <algorithm>
#include <cassert>

#include "nok/errors.hpp"
#include "nok/zariski.hpp"

namespace nok {

DivisorClass BlowUpModel::pullback(const DivisorClass& d) const {
    if (d.size() != base.rank()) throw DimensionMismatch();
    DivisorClass up(prime.rank());
    for (std::size_t i = 0; i < d.size(); ++i) up.coords[i] = d.coords[i];
    return up;
}

DivisorClass BlowUpModel::proper_transform(const std::string& base_curve) const {
    const CurveRecord* c = prime.find_curve(base_curve + "'");
    if (!c) throw DomainError("no proper transform recorded for " + base_curve);
    return c->cls;
}

BlowUpModel blow_up(const SurfaceModel& model, const std::string& point) {
    const PointProfile* x = model.find_point(point);
    if (!x) throw DomainError("unknown point profile: " + point);

    BlowUpModel bm;
    bm.base = model;
    bm.center = point;

    SurfaceModel& up = bm.prime;
    std::size_t n = model.rank();
    up.name = model.name + "_blowup_" + point;
    up.basis = model.basis;
    std::string e_name = "E";
    auto taken = [&](const std::string& s) {
        return std::find(up.basis.begin(), up.basis.end(), s) != up.basis.end() || model.find_curve(s) != nullptr;
    };
    if (taken(e_name)) e_name = "E_" + point;
    up.basis.push_back(e_name);
    bm.exceptional = e_name;

    up.gram.assign(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) up.gram[i][j] = model.gram[i][j];
    up.gram[n][n] = -1;

    up.canonical = bm.pullback(model.canonical);
    up.canonical.coords[n] += 1;
    up.complete = model.complete;
    up.abelian = false;

    DivisorClass e(n + 1);
    e.coords[n] = 1;
    CurveRecord exc{e_name, e, 0};
    up.curves.push_back(exc);
    for (const auto& c : model.curves) {
        CurveRecord t;
        t.name = c.name + "'";
        t.cls = bm.pullback(c.cls);
        t.cls.coords[n] = -Rational(x->multiplicity(c.name));
        if (c.genus) {
            int m = x->multiplicity(c.name);
            // blowing up an m-fold point drops the arithmetic genus by m(m-1)/2
            t.genus = *c.genus - m * (m - 1) / 2;
        }
        up.curves.push_back(std::move(t));
    }

#ifndef NDEBUG
    for (const auto& c : model.curves) {
        Rational m(x->multiplicity(c.name));
        DivisorClass t = bm.proper_transform(c.name);
        assert(intersect(up, t, t) == intersect(model, c.cls, c.cls) - m * m);
        assert(intersect(up, t, e) == m);
    }
#endif

    // reference class q*pullback(A) - E, with q grown until it passes the strict test
    for (Rational q(2);; q *= 2) {
        DivisorClass cand = bm.pullback(q * model.ample_ref);
        cand.coords[n] = -1;
        bool ok = sgn(intersect(up, cand, cand)) > 0;
        for (const auto& c : up.curves) ok = ok && sgn(intersect(up, cand, c.cls)) > 0;
        if (ok) {
            up.ample_ref = cand;
            break;
        }
    }
    return bm;
}

NOPolygon infinitesimal_polygon(const SurfaceModel& model, const DivisorClass& D, const std::string& point,
                                const InfinitesimalPoint& z) {
    BlowUpModel bm = blow_up(model, point);
    FlagSpec flag;
    flag.curve = bm.exceptional;
    if (z.generic) {
        flag.point = "generic";
    } else {
        PointProfile profile;
        profile.name = z.name;
        profile.mult[bm.exceptional] = 1;
        for (const auto& [curve, ord] : z.ord_on_E) {
            if (!model.find_curve(curve)) throw DomainError("unknown curve in infinitesimal point data: " + curve);
            profile.mult[curve + "'"] = ord > 0 ? 1 : 0;
            profile.ord_on[{curve + "'", bm.exceptional}] = ord;
        }
        bm.prime.points.push_back(std::move(profile));
        flag.point = z.name;
    }
    NOPolygon poly = no_polygon(bm.prime, bm.pullback(D), flag);
#ifndef NDEBUG
    // infinitesimal polygons sit inside {0 <= y <= t <= mu}
    for (const auto& p : poly.pieces) {
        for (const QuadraticNumber& t : {QuadraticNumber(p.t0), p.t1}) {
            QuadraticNumber b = QuadraticNumber(p.beta0) + QuadraticNumber(p.beta1) * t;
            assert(QuadraticNumber(0) <= b && b <= t);
        }
    }
#endif
    return poly;
}

QuadraticNumber largest_inverted_simplex(const NOPolygon& poly) {
    if (!contains_origin(poly)) return QuadraticNumber(0);
    QuadraticNumber t_alpha = poly.mu;
    for (const auto& p : poly.pieces)
        if (p.alpha1 != 0 || p.alpha0 != 0) {
            t_alpha = QuadraticNumber(p.t0);
            break;
        }
    // upper edge y = t: beta(t) - t is concave, find where it turns negative
    QuadraticNumber xi_beta = poly.mu;
    for (const auto& p : poly.pieces) {
        QuadraticNumber end_val = QuadraticNumber(p.beta0) + QuadraticNumber(p.beta1) * p.t1 - p.t1;
        if (end_val.sign() >= 0) continue;
        if (p.beta1 == 1) {
            xi_beta = QuadraticNumber(p.t0);  // constant negative gap: cut at the piece start
        } else {
            Rational root = p.beta0 / (Rational(1) - p.beta1);
            xi_beta = QuadraticNumber(std::max(root, p.t0));
        }
        break;
    }
    return std::min(std::min(t_alpha, xi_beta), poly.mu);
}

QuadraticNumber seshadri(const SurfaceModel& model, const DivisorClass& D, const std::string& point) {
    const PointProfile* x = model.find_point(point);
    if (!x) throw DomainError("unknown point profile: " + point);
    if (!model_nef(model, D)) throw NotAmple();

    if (!is_big(model, D)) throw PointInAugmentedBase(point);
    BaseLocus bplus = base_locus(model, D, BaseLocusKind::Augmented);
    for (const auto& name : bplus.curves)
        if (x->multiplicity(name) > 0) throw PointInAugmentedBase(point + " lies on " + name);

    QuadraticNumber eps = QuadraticNumber::sqrt_of(intersect(model, D, D));
    for (const auto& c : model.curves) {
        int m = x->multiplicity(c.name);
        if (m <= 0) continue;
        QuadraticNumber ratio{intersect(model, D, c.cls) / Rational(m)};
        eps = std::min(eps, ratio);
    }
#ifndef NDEBUG
    QuadraticNumber xi = largest_inverted_simplex(infinitesimal_polygon(model, D, point));
    assert(xi == eps);
#endif
    return eps;
}

namespace {

struct OpenInterval {
    QuadraticNumber lo, hi;
    bool empty() const { return !(lo < hi); }
};

// {t in (lo, hi) : c0 + c1 t > 0}
OpenInterval positive_part(const Rational& c0, const Rational& c1, OpenInterval window) {
    if (c1 == 0) {
        if (sgn(c0) > 0) return window;
        return {window.lo, window.lo};
    }
    QuadraticNumber root{-c0 / c1};
    if (sgn(c1) > 0)
        window.lo = std::max(window.lo, root);
    else
        window.hi = std::min(window.hi, root);
    return window;
}

bool polygon_meets_wedge_interior(const NOPolygon& poly) {
    // interior of {t >= 2, y >= 0, t >= 2y}: exists t > 2 with max(alpha,0) < min(beta, t/2)
    for (const auto& p : poly.pieces) {
        OpenInterval window{std::max(QuadraticNumber(p.t0), QuadraticNumber(2)), p.t1};
        if (window.empty()) continue;
        window = positive_part(p.beta0 - p.alpha0, p.beta1 - p.alpha1, window);  // alpha < beta
        window = positive_part(-p.alpha0, Rational(1, 2) - p.alpha1, window);    // alpha < t/2
        window = positive_part(p.beta0, p.beta1, window);                        // 0 < beta
        if (!window.empty()) return true;
    }
    return false;
}

}  // namespace

LambdaRegionReport lambda_region_check(const SurfaceModel& model, const DivisorClass& B, const std::string& point) {
    bool strict = sgn(intersect(model, B, B)) > 0 && sgn(intersect(model, B, model.ample_ref)) > 0;
    for (const auto& c : model.curves) strict = strict && sgn(intersect(model, B, c.cls)) > 0;
    if (!strict) throw NotAmple();

    NOPolygon poly = infinitesimal_polygon(model, B, point);
    LambdaRegionReport report;
    report.region_ok = polygon_meets_wedge_interior(poly);
    report.slice2 = slice_length(poly, QuadraticNumber(2), &report.slice2_in_range);
    report.verdict = report.region_ok ? "singular-divisor-exists (model-conditional)" : "no-conclusion";
    return report;
}

std::optional<QuadraticNumber> seshadri_upper_from_region(const SurfaceModel& model, const DivisorClass& B,
                                                          const std::string& point, const InfinitesimalPoint& z) {
    if (intersect(model, B, B) < 5) throw DomainError("self-intersection below 5");
    NOPolygon poly = infinitesimal_polygon(model, B, point, z);
    if (polygon_meets_wedge_interior(poly)) return std::nullopt;
    return QuadraticNumber(Rational(5, 2), Rational(-1, 2), Integer(5));  // (5 - sqrt 5)/2
}

}  // namespace nok
