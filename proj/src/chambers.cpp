#include "nok/chambers.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "nok/errors.hpp"
#include "walk.hpp"

namespace nok {

std::string ChamberSupport::str() const {
    if (curves.empty()) return "(nef)";
    std::string out;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (i) out += ';';
        out += curves[i];
    }
    return out;
}

ChamberSupport chamber_support(const SurfaceModel& model, const DivisorClass& D) {
    ZariskiDecomposition zd;
    try {
        zd = zariski_decompose(model, D);
    } catch (const NotPseudoEffective&) {
        throw NotBig();
    }
    if (sgn(intersect(model, zd.P, zd.P)) <= 0) throw NotBig();
    ChamberSupport s;
    for (const auto& [name, a] : zd.N) {
        (void)a;
        s.curves.push_back(name);  // map keys are already sorted
    }
    return s;
}

namespace {

// P = A + sum lambda_i C_i orthogonal to the curves indexed by S.
// Success means all lambda_i > 0 and Null(P) among the listed curves is S exactly.
bool null_locus_matches(const SurfaceModel& model, const DivisorClass& A, const std::vector<std::size_t>& S) {
    std::vector<Rational> rhs;
    rhs.reserve(S.size());
    for (std::size_t i : S) rhs.push_back(-intersect(model, A, model.curves[i].cls));
    auto lambda = solve_linear(curve_gram(model, S), std::move(rhs));
    if (!lambda) return false;
    DivisorClass P = A;
    for (std::size_t k = 0; k < S.size(); ++k) {
        if (sgn((*lambda)[k]) <= 0) return false;
        P += (*lambda)[k] * model.curves[S[k]].cls;
    }
    for (std::size_t i = 0; i < model.curves.size(); ++i) {
        int s = sgn(intersect(model, P, model.curves[i].cls));
        bool in_S = std::find(S.begin(), S.end(), i) != S.end();
        if (in_S ? s != 0 : s <= 0) return false;
    }
    return sgn(intersect(model, P, P)) > 0;
}

// Small positive combination of the dual basis: shifts A.C by sum r_j * C[j].
DivisorClass perturbed_reference(const SurfaceModel& model, const DivisorClass& A, std::mt19937& rng) {
    std::size_t n = model.rank();
    Matrix gram = model.gram;
    std::vector<DivisorClass> dual(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> e(n, Rational(0));
        e[j] = 1;
        auto col = solve_linear(gram, std::move(e));
        assert(col);  // validated models have nondegenerate gram
        dual[j] = DivisorClass(std::move(*col));
    }
    std::uniform_int_distribution<int> pick(1, 97);
    for (Rational scale(1, 1000);; scale /= 16) {
        DivisorClass cand = A;
        for (std::size_t j = 0; j < n; ++j) cand += (scale * Rational(pick(rng))) * dual[j];
        bool ample_like = sgn(intersect(model, cand, cand)) > 0;
        for (const auto& c : model.curves)
            ample_like = ample_like && sgn(intersect(model, cand, c.cls)) > 0;
        if (ample_like) return cand;
    }
}

void extend_supports(const SurfaceModel& model, const std::vector<std::size_t>& negatives, std::size_t from,
                     std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
    out.push_back(cur);
    for (std::size_t k = from; k < negatives.size(); ++k) {
        cur.push_back(negatives[k]);
        if (negative_definite(curve_gram(model, cur))) extend_supports(model, negatives, k + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<ChamberSupport> enumerate_chambers(const SurfaceModel& model) {
    if (model.ample_ref.size() != model.rank() || model.ample_ref.is_zero())
        throw DomainError("model has no ample reference class");

    std::vector<std::size_t> negatives;
    for (std::size_t i = 0; i < model.curves.size(); ++i)
        if (sgn(model.self_intersection(model.curves[i])) < 0) negatives.push_back(i);

    std::vector<std::vector<std::size_t>> candidates;
    std::vector<std::size_t> cur;
    extend_supports(model, negatives, 0, cur, candidates);

    std::mt19937 rng(20240811);
    std::vector<ChamberSupport> chambers;
    for (const auto& S : candidates) {
        ChamberSupport cs;
        for (std::size_t i : S) cs.curves.push_back(model.curves[i].name);
        std::sort(cs.curves.begin(), cs.curves.end());
        if (S.empty()) {
            chambers.push_back(std::move(cs));  // nef chamber: ample_ref itself is interior
            continue;
        }
        bool found = null_locus_matches(model, model.ample_ref, S);
        for (int attempt = 0; !found && attempt < 3; ++attempt)
            found = null_locus_matches(model, perturbed_reference(model, model.ample_ref, rng), S);
        cs.indeterminate = !found;
        chambers.push_back(std::move(cs));
    }
    std::sort(chambers.begin(), chambers.end());
    return chambers;
}

namespace {

struct MinusOneCurve {
    int d;
    std::vector<int> m;  // class dH - sum m_i E_i
};

void enumerate_m(int pos, int r, int sum_left, long long sq_left, int d, std::vector<int>& m,
                 std::vector<MinusOneCurve>& out) {
    if (pos == r) {
        if (sum_left == 0 && sq_left == 0) out.push_back({d, m});
        return;
    }
    int rest = r - pos - 1;
    for (int v = -1;; ++v) {
        if (v >= 1 && (long long)v * v > sq_left) break;
        int s = sum_left - v;
        long long q = sq_left - (long long)v * v;
        if (q < 0) continue;
        // remaining entries lie in [-1, ...]: bound the achievable sum and demand s^2 <= rest*q
        if (s < -rest) continue;
        if ((long long)s * s > (long long)rest * q) continue;
        m[pos] = v;
        enumerate_m(pos + 1, r, s, q, d, m, out);
    }
    m[pos] = 0;
}

std::string minus_one_curve_name(const MinusOneCurve& c) {
    std::ostringstream os;
    if (c.d != 1) os << c.d;
    os << 'H';
    for (std::size_t i = 0; i < c.m.size(); ++i) {
        if (c.m[i] == 0) continue;
        os << (c.m[i] > 0 ? '-' : '+');
        int a = std::abs(c.m[i]);
        if (a != 1) os << a;
        os << 'E' << (i + 1);
    }
    return os.str();
}

}  // namespace

SurfaceModel del_pezzo_model(int r, int enumeration_bound) {
    if (r < 1 || r > 8) throw DomainError("del Pezzo blow-up count must be between 1 and 8");
    SurfaceModel model;
    model.name = "delpezzo" + std::to_string(r);
    model.basis.push_back("H");
    for (int i = 1; i <= r; ++i) model.basis.push_back("E" + std::to_string(i));
    std::size_t n = model.rank();
    model.gram.assign(n, std::vector<Rational>(n, Rational(0)));
    model.gram[0][0] = 1;
    for (std::size_t i = 1; i < n; ++i) model.gram[i][i] = -1;
    model.canonical = DivisorClass(n);
    model.canonical.coords[0] = -3;
    for (std::size_t i = 1; i < n; ++i) model.canonical.coords[i] = 1;
    model.ample_ref = -model.canonical;  // anticanonical class, ample for r <= 8
    model.complete = true;

    // (-1)-curves dH - sum m_i E_i: d^2 - sum m_i^2 = -1, 3d - sum m_i = 1
    std::vector<MinusOneCurve> found;
    for (int d = 0; d <= enumeration_bound; ++d) {
        std::vector<int> m(r, 0);
        enumerate_m(0, r, 3 * d - 1, (long long)d * d + 1, d, m, found);
    }
    std::sort(found.begin(), found.end(),
              [](const MinusOneCurve& a, const MinusOneCurve& b) { return std::tie(a.d, a.m) < std::tie(b.d, b.m); });
    for (const auto& c : found) {
        CurveRecord rec;
        rec.cls = DivisorClass(n);
        rec.cls.coords[0] = c.d;
        for (int i = 0; i < r; ++i) rec.cls.coords[i + 1] = -c.m[i];
        if (c.d == 0) {
            int idx = int(std::find(c.m.begin(), c.m.end(), -1) - c.m.begin());
            rec.name = "E" + std::to_string(idx + 1);
        } else {
            rec.name = minus_one_curve_name(c);
        }
        rec.genus = 0;
        model.curves.push_back(std::move(rec));
    }
    return model;
}

namespace {

// up to 256 vertices
struct VertexSet {
    std::array<std::uint64_t, 4> w{};

    bool empty() const { return !(w[0] | w[1] | w[2] | w[3]); }
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    int pop_lowest() {
        for (int k = 0; k < 4; ++k)
            if (w[k]) {
                int b = __builtin_ctzll(w[k]);
                w[k] &= w[k] - 1;
                return 64 * k + b;
            }
        return -1;
    }
    VertexSet operator&(const VertexSet& o) const {
        VertexSet r;
        for (int k = 0; k < 4; ++k) r.w[k] = w[k] & o.w[k];
        return r;
    }
};

std::int64_t count_cliques(VertexSet cand, const std::vector<VertexSet>& adj) {
    std::int64_t total = 1;  // the clique fixed so far
    while (!cand.empty()) {
        int v = cand.pop_lowest();
        total += count_cliques(cand & adj[v], adj);
    }
    return total;
}

int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    int n = hw ? int(hw) : 1;
    if (const char* env = std::getenv("NOK_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

}  // namespace

std::int64_t count_chambers_delpezzo(int r) {
    SurfaceModel model = del_pezzo_model(r);
    int n = int(model.curves.size());
    assert(n <= 256);
    std::vector<VertexSet> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && intersect(model, model.curves[i].cls, model.curves[j].cls) == 0) adj[i].set(j);

    // first branch per top-level vertex, distributed over a worker pool
    std::vector<std::pair<int, VertexSet>> tasks;
    VertexSet cand;
    for (int i = 0; i < n; ++i) cand.set(i);
    while (!cand.empty()) {
        int v = cand.pop_lowest();
        tasks.emplace_back(v, cand & adj[v]);
    }
    int workers = std::min<int>(thread_budget(), int(tasks.size()) > 0 ? int(tasks.size()) : 1);
    std::vector<std::int64_t> partial(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();)
            partial[k] = count_cliques(tasks[k].second, adj);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();

    std::int64_t total = 1;  // empty clique = nef chamber
    for (std::int64_t p : partial) total += p;
    return total;
}

std::vector<RayInterval> ray_chamber_walk(const SurfaceModel& model, const DivisorClass& D, const DivisorClass& G,
                                          std::optional<Rational> t_max) {
    detail::Walk walk = detail::walk_ray(model, D, G, t_max);
    std::vector<RayInterval> intervals;
    for (const auto& seg : walk.segments) {
        ChamberSupport s;
        for (std::size_t i : seg.support) s.curves.push_back(model.curves[i].name);
        std::sort(s.curves.begin(), s.curves.end());
        if (!intervals.empty() && intervals.back().support == s) {
            intervals.back().t_end = seg.t1;
        } else {
            intervals.push_back({QuadraticNumber(seg.t0), seg.t1, std::move(s), false});
        }
    }
    if (!intervals.empty()) intervals.back().truncated = walk.truncated;
    return intervals;
}

std::string chambers_to_csv(const std::vector<ChamberSupport>& chambers) {
    std::string out;
    for (const auto& c : chambers) {
        out += c.str();
        out += '\n';
    }
    return out;
}

}  // namespace nok
