#include "nok/model.hpp"

#include <algorithm>
#include <set>

#include "nok/errors.hpp"

namespace nok {

bool DivisorClass::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; });
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    if (coords.size() != o.coords.size()) throw DimensionMismatch();
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    if (coords.size() != o.coords.size()) throw DimensionMismatch();
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s) {
    for (auto& c : coords) c *= s;
    return *this;
}

int PointProfile::multiplicity(const std::string& curve) const {
    auto it = mult.find(curve);
    return it == mult.end() ? 0 : it->second;
}

int PointProfile::order_on(const std::string& curve, const std::string& flag_curve) const {
    auto it = ord_on.find({curve, flag_curve});
    if (it != ord_on.end()) return it->second;
    return multiplicity(curve);  // transversal default
}

DivisorClass SurfaceModel::basis_class(std::size_t i) const {
    DivisorClass d(rank());
    d.coords[i] = 1;
    return d;
}

const CurveRecord* SurfaceModel::find_curve(const std::string& name) const {
    for (const auto& c : curves)
        if (c.name == name) return &c;
    return nullptr;
}

const CurveRecord* SurfaceModel::find_curve_by_class(const DivisorClass& cls) const {
    for (const auto& c : curves)
        if (c.cls == cls) return &c;
    return nullptr;
}

const PointProfile* SurfaceModel::find_point(const std::string& name) const {
    for (const auto& p : points)
        if (p.name == name) return &p;
    return nullptr;
}

Rational SurfaceModel::self_intersection(const CurveRecord& c) const { return intersect(*this, c.cls, c.cls); }

Rational intersect(const SurfaceModel& model, const DivisorClass& d1, const DivisorClass& d2) {
    const std::size_t n = model.rank();
    if (d1.size() != n || d2.size() != n) throw DimensionMismatch();
    Rational acc(0);
    for (std::size_t i = 0; i < n; ++i) {
        if (d1.coords[i] == 0) continue;
        Rational row(0);
        for (std::size_t j = 0; j < n; ++j) {
            if (d2.coords[j] == 0) continue;
            row += model.gram[i][j] * d2.coords[j];
        }
        acc += d1.coords[i] * row;
    }
    return acc;
}

Signature symmetric_signature(Matrix m) {
    const std::size_t n = m.size();
    Signature sig;
    // exact congruence diagonalization with full pivoting
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (m[i][i] != 0) {
                piv = i;
                break;
            }
        if (piv == n) {
            // all remaining diagonal entries are zero; look for an off-diagonal one
            std::size_t oi = n, oj = n;
            for (std::size_t i = k; i < n && oi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (m[i][j] != 0) {
                        oi = i;
                        oj = j;
                        break;
                    }
            if (oi == n) {
                sig.zero += static_cast<int>(n - k);
                return sig;
            }
            // congruence: row/col oi += row/col oj creates a nonzero diagonal
            for (std::size_t j = 0; j < n; ++j) m[oi][j] += m[oj][j];
            for (std::size_t i = 0; i < n; ++i) m[i][oi] += m[i][oj];
            piv = oi;
        }
        if (piv != k) {
            std::swap(m[piv], m[k]);
            for (std::size_t i = 0; i < n; ++i) std::swap(m[i][piv], m[i][k]);
        }
        const Rational pivot = m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] / pivot;
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[k][j];
            for (std::size_t r = 0; r < n; ++r) m[r][i] -= f * m[r][k];
        }
        int s = sgn(pivot);
        if (s > 0)
            ++sig.positive;
        else if (s < 0)
            ++sig.negative;
        else
            ++sig.zero;
    }
    return sig;
}

std::optional<std::vector<Rational>> solve_linear(Matrix m, std::vector<Rational> rhs) {
    const std::size_t n = m.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (m[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[k]);
        std::swap(rhs[piv], rhs[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
            rhs[i] -= f * rhs[k];
        }
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t k = n; k-- > 0;) {
        Rational acc = rhs[k];
        for (std::size_t j = k + 1; j < n; ++j) acc -= m[k][j] * x[j];
        x[k] = acc / m[k][k];
    }
    return x;
}

Rational determinant(Matrix m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (m[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv == n) return Rational(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

bool negative_definite(const Matrix& m) {
    const std::size_t n = m.size();
    // (-1)^k * det(leading k x k minor) > 0 for all k
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix sub(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
        Rational d = determinant(std::move(sub));
        if (k % 2 == 1 ? sgn(d) >= 0 : sgn(d) <= 0) return false;
    }
    return true;
}

Matrix curve_gram(const SurfaceModel& model, const std::vector<std::size_t>& idx) {
    Matrix g(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            g[i][j] = intersect(model, model.curves[idx[i]].cls, model.curves[idx[j]].cls);
    return g;
}

ValidationReport validate_model(const SurfaceModel& model) {
    ValidationReport report;
    const std::size_t n = model.rank();
    auto fail = [&](const std::string& msg) { report.failures.push_back(msg); };

    if (n == 0) {
        fail("empty basis");
        return report;
    }
    if (model.gram.size() != n) fail("gram size does not match rank");
    for (const auto& row : model.gram)
        if (row.size() != n) fail("gram is not square");
    if (!report.ok()) return report;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (model.gram[i][j] != model.gram[j][i]) {
                fail("gram not symmetric at (" + model.basis[i] + "," + model.basis[j] + ")");
            }
    {
        std::set<std::string> seen(model.basis.begin(), model.basis.end());
        if (seen.size() != n) fail("duplicate basis names");
    }

    Signature sig = symmetric_signature(model.gram);
    report.positive_eigen = sig.positive;
    report.negative_eigen = sig.negative;
    report.zero_eigen = sig.zero;
    if (sig.zero > 0) fail("gram is degenerate");
    if (sig.positive != 1 || sig.negative != static_cast<int>(n) - 1) {
        fail("signature (" + std::to_string(sig.positive) + "," + std::to_string(sig.negative) +
             ") violates the Hodge index constraint (1," + std::to_string(n - 1) + ")");
    }

    if (model.canonical.size() != n) fail("canonical class has wrong length");
    if (model.ample_ref.size() != n) fail("ample reference has wrong length");
    if (!report.ok()) return report;

    if (sgn(intersect(model, model.ample_ref, model.ample_ref)) <= 0) fail("ample reference has A^2 <= 0");
    for (const auto& c : model.curves) {
        if (c.cls.size() != n) {
            fail("curve " + c.name + " has wrong coordinate length");
            continue;
        }
        if (c.cls.is_zero()) fail("curve " + c.name + " has zero class");
        if (sgn(intersect(model, model.ample_ref, c.cls)) <= 0)
            fail("ample reference pairs non-positively with curve " + c.name);
        if (c.genus) {
            // adjunction: 2g - 2 = C^2 + C.K
            Rational lhs = Rational(2 * *c.genus - 2);
            Rational rhs = intersect(model, c.cls, c.cls) + intersect(model, c.cls, model.canonical);
            if (lhs != rhs)
                fail("adjunction fails for curve " + c.name + ": 2g-2 = " + to_string(lhs) + " but C^2+C.K = " +
                     to_string(rhs));
        }
    }
    for (std::size_t i = 0; i < model.curves.size(); ++i)
        for (std::size_t j = i + 1; j < model.curves.size(); ++j) {
            if (model.curves[i].cls == model.curves[j].cls)
                fail("duplicate curve classes: " + model.curves[i].name + " and " + model.curves[j].name);
            if (model.curves[i].name == model.curves[j].name) fail("duplicate curve name " + model.curves[i].name);
        }

    if (model.abelian) {
        if (!model.canonical.is_zero()) fail("abelian model must have K = 0");
        for (const auto& c : model.curves)
            if (sgn(intersect(model, c.cls, c.cls)) < 0) fail("abelian model lists a negative curve " + c.name);
    }

    for (const auto& p : model.points) {
        for (const auto& [cname, m] : p.mult) {
            if (!model.find_curve(cname)) fail("point " + p.name + " references unknown curve " + cname);
            if (m < 0) fail("point " + p.name + " has negative multiplicity on " + cname);
        }
        for (const auto& [key, o] : p.ord_on) {
            if (!model.find_curve(key.first) || !model.find_curve(key.second))
                fail("point " + p.name + " ord_on references unknown curve");
            if (o < 0) fail("point " + p.name + " has negative ord_on entry");
            if (o != 0 && p.multiplicity(key.first) == 0)
                fail("point " + p.name + ": ord_on(" + key.first + "|" + key.second +
                     ") nonzero but the curve does not pass through the point");
        }
    }
    return report;
}

}  // namespace nok
