#include "nok/zariski.hpp"

#include <algorithm>
#include <cassert>

#include "nok/errors.hpp"

namespace nok {

Rational ZariskiDecomposition::coefficient(const std::string& curve) const {
    auto it = N.find(curve);
    return it == N.end() ? Rational(0) : it->second;
}

DivisorClass ZariskiDecomposition::negative_class(const SurfaceModel& model) const {
    DivisorClass n(model.rank());
    for (const auto& [name, a] : N) {
        const CurveRecord* c = model.find_curve(name);
        assert(c != nullptr);
        n += a * c->cls;
    }
    return n;
}

Rational ZariskiDecomposition::negative_self_intersection(const SurfaceModel& model) const {
    DivisorClass n = negative_class(model);
    return intersect(model, n, n);
}

bool model_nef(const SurfaceModel& model, const DivisorClass& D) {
    for (const auto& c : model.curves)
        if (sgn(intersect(model, D, c.cls)) < 0) return false;
    if (sgn(intersect(model, D, D)) < 0) return false;
    if (sgn(intersect(model, D, model.ample_ref)) < 0) return false;
    return true;
}

ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const DivisorClass& D) {
    if (D.size() != model.rank()) throw DimensionMismatch();

    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < model.curves.size(); ++i)
        if (sgn(intersect(model, D, model.curves[i].cls)) < 0) support.push_back(i);

    std::vector<Rational> coeffs;
    DivisorClass P = D;
    for (;;) {
        if (!support.empty()) {
            Matrix gram = curve_gram(model, support);
            if (!negative_definite(gram)) throw NotPseudoEffective();
            std::vector<Rational> rhs;
            rhs.reserve(support.size());
            for (std::size_t i : support) rhs.push_back(intersect(model, D, model.curves[i].cls));
            auto sol = solve_linear(std::move(gram), std::move(rhs));
            if (!sol) throw NotPseudoEffective();
            coeffs = std::move(*sol);
            for (const auto& a : coeffs)
                if (sgn(a) < 0) throw NotPseudoEffective();
            P = D;
            for (std::size_t k = 0; k < support.size(); ++k) P -= coeffs[k] * model.curves[support[k]].cls;
        }
        // batch-add every listed curve the candidate positive part still hits negatively
        bool grew = false;
        for (std::size_t i = 0; i < model.curves.size(); ++i) {
            if (std::find(support.begin(), support.end(), i) != support.end()) continue;
            if (sgn(intersect(model, P, model.curves[i].cls)) < 0) {
                support.push_back(i);
                grew = true;
            }
        }
        if (!grew) break;
        std::sort(support.begin(), support.end());
    }

    if (sgn(intersect(model, P, P)) < 0) throw NotPseudoEffective();
    if (sgn(intersect(model, P, model.ample_ref)) < 0) throw NotPseudoEffective();

    ZariskiDecomposition zd;
    zd.P = std::move(P);
    for (std::size_t k = 0; k < support.size(); ++k)
        if (coeffs[k] != 0) zd.N.emplace(model.curves[support[k]].name, coeffs[k]);

#ifndef NDEBUG
    // orthogonality and negative definiteness of the output
    for (const auto& [name, a] : zd.N) {
        (void)a;
        assert(intersect(model, zd.P, model.find_curve(name)->cls) == 0);
    }
    assert(model_nef(model, zd.P));
#endif
    return zd;
}

Rational volume(const SurfaceModel& model, const DivisorClass& D) {
    try {
        ZariskiDecomposition zd = zariski_decompose(model, D);
        return intersect(model, zd.P, zd.P);
    } catch (const NotPseudoEffective&) {
        return Rational(0);
    }
}

bool is_big(const SurfaceModel& model, const DivisorClass& D) { return sgn(volume(model, D)) > 0; }

AsymptoticCohomology asymptotic_cohomology(const SurfaceModel& model, const DivisorClass& D) {
    try {
        ZariskiDecomposition zd = zariski_decompose(model, D);
        return {intersect(model, zd.P, zd.P), -zd.negative_self_intersection(model), Rational(0)};
    } catch (const NotPseudoEffective&) {
    }
    try {
        ZariskiDecomposition zd = zariski_decompose(model, -D);
        return {Rational(0), -zd.negative_self_intersection(model), intersect(model, zd.P, zd.P)};
    } catch (const NotPseudoEffective&) {
    }
    return {Rational(0), -intersect(model, D, D), Rational(0)};
}

bool BaseLocus::contains(const std::string& name) const {
    return std::find(curves.begin(), curves.end(), name) != curves.end();
}

BaseLocus base_locus(const SurfaceModel& model, const DivisorClass& D, BaseLocusKind kind) {
    ZariskiDecomposition zd;
    try {
        zd = zariski_decompose(model, D);
    } catch (const NotPseudoEffective&) {
        throw NotBig();
    }
    if (sgn(intersect(model, zd.P, zd.P)) <= 0) throw NotBig();

    BaseLocus locus;
    locus.kind = kind;
    for (const auto& [name, a] : zd.N) {
        (void)a;
        locus.curves.push_back(name);
    }
    if (kind == BaseLocusKind::Augmented) {
        for (const auto& c : model.curves)
            if (zd.N.find(c.name) == zd.N.end() && intersect(model, zd.P, c.cls) == 0)
                locus.curves.push_back(c.name);
    }
    std::sort(locus.curves.begin(), locus.curves.end());
    return locus;
}

Rational asymptotic_multiplicity(const SurfaceModel& model, const DivisorClass& D, const PointProfile& x) {
    ZariskiDecomposition zd;
    try {
        zd = zariski_decompose(model, D);
    } catch (const NotPseudoEffective&) {
        throw NotBig();
    }
    if (sgn(intersect(model, zd.P, zd.P)) <= 0) throw NotBig();
    Rational acc(0);
    for (const auto& [name, a] : zd.N) acc += a * Rational(x.multiplicity(name));
    return acc;
}

}  // namespace nok
