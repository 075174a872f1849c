#include "walk.hpp"

#include <algorithm>
#include <cassert>

#include "nok/errors.hpp"
#include "nok/zariski.hpp"

namespace nok::detail {

Affine WalkSegment::coefficient_of(std::size_t curve_index) const {
    for (std::size_t k = 0; k < support.size(); ++k)
        if (support[k] == curve_index) return coeff[k];
    return {Rational(0), Rational(0)};
}

namespace {

struct ParametricSolution {
    std::vector<std::size_t> support;
    std::vector<Affine> coeff;
    DivisorClass P_const, P_slope;
};

ParametricSolution solve_on_support(const SurfaceModel& model, const DivisorClass& D, const DivisorClass& G,
                                    std::vector<std::size_t> support) {
    ParametricSolution out;
    out.support = std::move(support);
    out.P_const = D;
    out.P_slope = -G;
    if (!out.support.empty()) {
        Matrix gram = curve_gram(model, out.support);
        std::vector<Rational> rhs_const, rhs_slope;
        for (std::size_t i : out.support) {
            rhs_const.push_back(intersect(model, D, model.curves[i].cls));
            rhs_slope.push_back(-intersect(model, G, model.curves[i].cls));
        }
        auto xc = solve_linear(gram, std::move(rhs_const));
        auto xs = solve_linear(std::move(gram), std::move(rhs_slope));
        if (!xc || !xs) throw NotPseudoEffective("singular support Gram along the ray");
        for (std::size_t k = 0; k < out.support.size(); ++k) {
            out.coeff.push_back({(*xc)[k], (*xs)[k]});
            out.P_const -= (*xc)[k] * model.curves[out.support[k]].cls;
            out.P_slope -= (*xs)[k] * model.curves[out.support[k]].cls;
        }
    }
    return out;
}

// Smallest root of q(t) = c0 + c1 t + c2 t^2 that is strictly greater than t_from,
// given q(t_from) > 0.
std::optional<QuadraticNumber> next_quadratic_root(const Rational& c0, const Rational& c1, const Rational& c2,
                                                   const Rational& t_from) {
    if (c2 == 0) {
        if (c1 == 0) return std::nullopt;
        Rational r = -c0 / c1;
        if (r > t_from) return QuadraticNumber(r);
        return std::nullopt;
    }
    Rational disc = c1 * c1 - 4 * c2 * c0;
    if (sgn(disc) < 0) return std::nullopt;
    QuadraticNumber sq = QuadraticNumber::sqrt_of(disc);
    QuadraticNumber den(Rational(2) * c2);
    QuadraticNumber r1 = (QuadraticNumber(-c1) - sq) / den;
    QuadraticNumber r2 = (QuadraticNumber(-c1) + sq) / den;
    if (r2 < r1) std::swap(r1, r2);
    QuadraticNumber from{t_from};
    if (r1 > from) return r1;
    if (r2 > from) return r2;
    return std::nullopt;
}

}  // namespace

Walk walk_ray(const SurfaceModel& model, const DivisorClass& D, const DivisorClass& G,
              std::optional<Rational> t_max) {
    if (!is_big(model, D)) throw NotBig();

    // global probe ceiling: a big class pairs positively with the ample reference
    std::optional<Rational> ceiling = t_max;
    {
        Rational ga = intersect(model, G, model.ample_ref);
        if (sgn(ga) > 0) {
            Rational exit_bound = intersect(model, D, model.ample_ref) / ga;
            if (!ceiling || exit_bound < *ceiling) ceiling = exit_bound;
        }
    }

    Walk walk;
    Rational t_cur(0);
    for (;;) {
        // locate the segment whose interior starts at t_cur
        Rational hi = ceiling ? *ceiling : t_cur + 1;
        if (hi <= t_cur) hi = t_cur + 1;  // degenerate ceiling; probing below will shrink it
        std::optional<ParametricSolution> seg;
        std::optional<QuadraticNumber> seg_end;          // smallest event > t_cur
        bool seg_end_is_exit = false;                    // event is a bigness exit (mu)
        int widen = 0;
        for (;;) {
            Rational p = (t_cur + hi) / 2;
            ZariskiDecomposition zd;
            bool beyond = false;
            try {
                zd = zariski_decompose(model, D - p * G);
                if (sgn(intersect(model, zd.P, zd.P)) <= 0) beyond = true;
            } catch (const NotPseudoEffective&) {
                beyond = true;
            }
            if (beyond) {
                hi = p;
                continue;
            }
            std::vector<std::size_t> support;
            for (std::size_t i = 0; i < model.curves.size(); ++i)
                if (zd.N.count(model.curves[i].name)) support.push_back(i);
            ParametricSolution sol = solve_on_support(model, D, G, std::move(support));

            // exact event window around p
            std::optional<Rational> window_lo;          // largest rational event < p
            std::optional<QuadraticNumber> window_hi;   // smallest event > p
            bool hi_is_exit = false;
            bool on_wall = false;
            auto note_lo = [&](const Rational& r) {
                if (!window_lo || r > *window_lo) window_lo = r;
            };
            auto note_hi = [&](const QuadraticNumber& r, bool exit) {
                if (!window_hi || r < *window_hi) {
                    window_hi = r;
                    hi_is_exit = exit;
                } else if (r == *window_hi && exit) {
                    hi_is_exit = true;  // bigness exit dominates a coincident wall
                }
            };
            for (std::size_t k = 0; k < sol.support.size() && !on_wall; ++k) {
                const Affine& a = sol.coeff[k];
                Rational v = a.at(p);
                if (a.c1 == 0) {
                    if (v == 0) continue;  // identically zero: not a crossing
                    if (sgn(v) < 0) throw NotPseudoEffective("negative coefficient at verified sample");
                    continue;
                }
                if (v == 0) {
                    on_wall = true;
                    break;
                }
                if (sgn(v) < 0) throw NotPseudoEffective("negative coefficient at verified sample");
                Rational r = -a.c0 / a.c1;
                if (r < p)
                    note_lo(r);
                else
                    note_hi(QuadraticNumber(r), false);
            }
            if (!on_wall) {
                for (std::size_t i = 0; i < model.curves.size(); ++i) {
                    if (std::find(sol.support.begin(), sol.support.end(), i) != sol.support.end()) continue;
                    Affine pr{intersect(model, sol.P_const, model.curves[i].cls),
                              intersect(model, sol.P_slope, model.curves[i].cls)};
                    Rational v = pr.at(p);
                    if (pr.c1 == 0) {
                        if (v == 0) continue;  // pairs zero along the whole ray: not a crossing
                        assert(sgn(v) > 0);
                        continue;
                    }
                    if (v == 0) {
                        on_wall = true;
                        break;
                    }
                    assert(sgn(v) > 0);
                    Rational r = -pr.c0 / pr.c1;
                    if (r < p)
                        note_lo(r);
                    else
                        note_hi(QuadraticNumber(r), false);
                }
            }
            if (on_wall) {
                hi = p;  // probe landed exactly on a chamber wall
                continue;
            }
            // bigness exit: P(t)^2 = 0
            {
                Rational c0 = intersect(model, sol.P_const, sol.P_const);
                Rational c1 = Rational(2) * intersect(model, sol.P_const, sol.P_slope);
                Rational c2 = intersect(model, sol.P_slope, sol.P_slope);
                if (auto root = next_quadratic_root(c0, c1, c2, p)) note_hi(*root, true);
            }
            if (window_lo && *window_lo > t_cur) {
                hi = *window_lo;  // skipped at least one segment; move the probe closer
                continue;
            }
            seg = std::move(sol);
            seg_end = window_hi;
            seg_end_is_exit = hi_is_exit;
            (void)widen;
            break;
        }

        WalkSegment ws;
        ws.t0 = t_cur;
        ws.support = seg->support;
        ws.coeff = seg->coeff;
        ws.P_const = seg->P_const;
        ws.P_slope = seg->P_slope;

        QuadraticNumber tmax_q = t_max ? QuadraticNumber(*t_max) : QuadraticNumber(0);
        bool stop_at_tmax = t_max && (!seg_end || tmax_q <= *seg_end);
        if (stop_at_tmax) {
            ws.t1 = tmax_q;
            walk.segments.push_back(std::move(ws));
            walk.end = tmax_q;
            walk.truncated = !(seg_end && *seg_end == tmax_q && seg_end_is_exit);
            return walk;
        }
        if (!seg_end) throw UnboundedRay();
        ws.t1 = *seg_end;
        walk.segments.push_back(std::move(ws));
        if (seg_end_is_exit) {
            walk.end = *seg_end;
            walk.truncated = false;
            return walk;
        }
        // interior wall: rational by construction
        assert(seg_end->is_rational());
        t_cur = seg_end->as_rational();
    }
}

}  // namespace nok::detail
