#include "nok/positivity.hpp"

#include <algorithm>
#include <cassert>

#include "nok/errors.hpp"
#include "nok/zariski.hpp"

namespace nok {

PositivityReport classify(const SurfaceModel& model, const DivisorClass& D) {
    PositivityReport r;
    r.conditional = !model.complete;
    r.pseff = true;
    try {
        zariski_decompose(model, D);
    } catch (const NotPseudoEffective&) {
        r.pseff = false;
    }
    r.big = r.pseff && is_big(model, D);
    r.nef = model_nef(model, D);
    r.ample = sgn(intersect(model, D, D)) > 0 && sgn(intersect(model, D, model.ample_ref)) > 0;
    for (const auto& c : model.curves) r.ample = r.ample && sgn(intersect(model, D, c.cls)) > 0;
    assert(!r.ample || (r.nef && r.big));
    assert(!r.nef || r.pseff);
    return r;
}

namespace {

// All nonzero integer vectors w with w^T M w <= bound, M positive definite.
// Fincke-Pohst on the exact LDL^T factorization.
std::vector<std::vector<Integer>> lattice_points(const Matrix& M, const Rational& bound) {
    std::size_t n = M.size();
    std::vector<Rational> diag(n);
    Matrix U(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        Rational d = M[i][i];
        for (std::size_t k = 0; k < i; ++k) d -= diag[k] * U[k][i] * U[k][i];
        assert(sgn(d) > 0);
        diag[i] = d;
        U[i][i] = 1;
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational v = M[i][j];
            for (std::size_t k = 0; k < i; ++k) v -= diag[k] * U[k][i] * U[k][j];
            U[i][j] = v / d;
        }
    }

    std::vector<std::vector<Integer>> out;
    std::vector<Integer> w(n, 0);
    auto rec = [&](auto&& self, std::size_t level, const Rational& budget) -> void {
        if (level == 0) {
            bool zero = std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
            if (!zero) out.push_back(w);
            return;
        }
        std::size_t i = level - 1;
        Rational center(0);
        for (std::size_t j = i + 1; j < n; ++j) center -= U[i][j] * Rational(w[j]);
        Rational radius_sq = budget / diag[i];
        Integer reach = isqrt_floor(radius_sq) + 1;
        Integer base(center.get_num() / center.get_den());  // truncated center
        for (Integer x = base - reach - 1; x <= base + reach + 1; ++x) {
            Rational off = Rational(x) - center;
            Rational used = diag[i] * off * off;
            if (used > budget) continue;
            w[i] = x;
            self(self, level - 1, budget - used);
        }
        w[i] = 0;
    };
    rec(rec, n, bound);
    return out;
}

// 2(L.w)^2 - (L^2)(w^2) as a matrix in the basis coordinates of w;
// positive definite by the Hodge index theorem when L^2 > 0.
Matrix light_cone_form(const SurfaceModel& model, const DivisorClass& L) {
    std::size_t n = model.rank();
    Rational L2 = intersect(model, L, L);
    std::vector<Rational> Ldual(n, Rational(0));  // (gram * L)_i
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) Ldual[i] += model.gram[i][j] * L.coords[j];
    Matrix M(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M[i][j] = 2 * Ldual[i] * Ldual[j] - L2 * model.gram[i][j];
    return M;
}

bool primitive(const std::vector<Integer>& w) {
    Integer g(0);
    for (const auto& x : w) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    return g == 1;
}

DivisorClass to_class(const std::vector<Integer>& w) {
    std::vector<Rational> coords;
    coords.reserve(w.size());
    for (const auto& x : w) coords.emplace_back(x);
    return DivisorClass(std::move(coords));
}

}  // namespace

NpVerdict np_check(const SurfaceModel& model, const DivisorClass& L, int p) {
    if (!model.abelian) throw NotAbelianModel();
    if (p < 0) throw DomainError("p must be non-negative");
    PositivityReport rep = classify(model, L);
    if (!rep.ample) throw NotAmple();

    NpVerdict verdict;
    verdict.p = p;
    Rational L2 = intersect(model, L, L);
    Rational cap(p + 2);
    verdict.precondition_ok = L2 >= 5 * cap * cap;

    // witnesses satisfy 2(L.v)^2 - L^2 v^2 = 2(L.v)^2 <= 2(p+2)^2
    std::vector<DivisorClass> witnesses;
    for (const auto& w : lattice_points(light_cone_form(model, L), 2 * cap * cap)) {
        if (!primitive(w)) continue;
        DivisorClass v = to_class(w);
        if (intersect(model, v, v) != 0) continue;
        if (sgn(intersect(model, v, model.ample_ref)) <= 0) continue;
        Rational deg = intersect(model, L, v);
        if (deg < 1 || deg > cap) continue;
        witnesses.push_back(std::move(v));
    }
    std::sort(witnesses.begin(), witnesses.end());
    if (!witnesses.empty()) verdict.witness = witnesses.front();
    verdict.holds = verdict.precondition_ok && witnesses.empty();
    return verdict;
}

std::vector<DivisorClass> reider_check(const SurfaceModel& model, const DivisorClass& L, ReiderMode mode) {
    if (!model_nef(model, L)) throw DomainError("class fails the nef test");
    Rational L2 = intersect(model, L, L);
    Rational threshold = (mode == ReiderMode::Basepoint) ? 5 : 10;
    if (L2 < threshold) throw DomainError("self-intersection below " + to_string(threshold));

    std::vector<std::pair<Rational, Rational>> cases;  // (L.D, D^2)
    if (mode == ReiderMode::Basepoint)
        cases = {{0, -1}, {1, 0}};
    else
        cases = {{0, -1}, {0, -2}, {1, 0}, {1, -1}, {2, 0}};

    Rational q_cap(0);
    for (const auto& [a, s] : cases) {
        Rational q = 2 * a * a - L2 * s;
        if (q > q_cap) q_cap = q;
    }

    std::vector<DivisorClass> found;
    auto matches = [&](const DivisorClass& v) {
        Rational a = intersect(model, L, v);
        Rational s = intersect(model, v, v);
        for (const auto& c : cases)
            if (c.first == a && c.second == s) return true;
        return false;
    };
    for (const auto& w : lattice_points(light_cone_form(model, L), q_cap)) {
        DivisorClass v = to_class(w);
        if (sgn(intersect(model, v, model.ample_ref)) <= 0) continue;
        if (matches(v)) found.push_back(std::move(v));
    }
    for (const auto& c : model.curves)
        if (matches(c.cls) && std::find(found.begin(), found.end(), c.cls) == found.end()) found.push_back(c.cls);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

QuadraticNumber green_bound(int g, int p) {
    if (g < 0 || p < 0) throw DomainError("genus and p must be non-negative");
    Rational m(g + p - 2);
    Rational disc = m * m + 4 * (Rational(g) * (p - 2) + 2);
    if (sgn(disc) < 0) throw NegativeDiscriminant();
    return QuadraticNumber(Rational(g)) + (QuadraticNumber(m) + QuadraticNumber::sqrt_of(disc)) / QuadraticNumber(2);
}

namespace {
Integer binom(const Integer& n, unsigned long k) {
    if (sgn(n) < 0 || n < Integer(k)) return 0;
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}
}  // namespace

bool green_inequality_holds(const Integer& deg_L, int g, int p) {
    if (g < 0 || p < 0) throw DomainError("genus and p must be non-negative");
    Integer r = deg_L + 1 - g;
    Integer slope = 2 * Integer(g) - 2 - deg_L;  // s = 1
    for (int i = 0; i <= p; ++i) {
        Integer lhs = binom(r, unsigned(i) + 1) * slope + binom(r - 1, unsigned(i)) * deg_L;
        if (sgn(lhs) >= 0) return false;
    }
    return true;
}

PellBound pell_seshadri_bound(const Integer& N) {
    if (sgn(N) <= 0) throw DomainError("N must be positive");
    Integer a0 = sqrt(N);
    if (a0 * a0 == N) throw DomainError("N must not be a perfect square");

    // continued fraction of sqrt(N); convergents h/k until h^2 - N k^2 = 1
    Integer m(0), d(1), a(a0);
    Integer h_prev(1), h(a0), k_prev(0), k(1);
    while (h * h - N * k * k != 1) {
        m = d * a - m;
        d = (N - m * m) / d;
        a = (a0 + m) / d;
        Integer h_next = a * h + h_prev;
        Integer k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    PellBound b;
    b.p0 = k;
    b.q0 = h;
    b.bound = Rational(k * N) / Rational(h);
    b.bound.canonicalize();
    return b;
}

}  // namespace nok
