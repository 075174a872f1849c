#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nok/rational.hpp"

namespace nok {

// Exact coordinate vector in the model basis of N^1(X).
struct DivisorClass {
    std::vector<Rational> coords;

    DivisorClass() = default;
    explicit DivisorClass(std::size_t rank) : coords(rank, Rational(0)) {}
    explicit DivisorClass(std::vector<Rational> c) : coords(std::move(c)) {}

    std::size_t size() const { return coords.size(); }
    bool is_zero() const;

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Rational& s);
    friend DivisorClass operator+(DivisorClass x, const DivisorClass& y) { return x += y; }
    friend DivisorClass operator-(DivisorClass x, const DivisorClass& y) { return x -= y; }
    friend DivisorClass operator*(const Rational& s, DivisorClass x) { return x *= s; }
    friend DivisorClass operator-(DivisorClass x) { return x *= Rational(-1); }
    friend bool operator==(const DivisorClass& x, const DivisorClass& y) { return x.coords == y.coords; }
    friend bool operator!=(const DivisorClass& x, const DivisorClass& y) { return !(x == y); }
    friend bool operator<(const DivisorClass& x, const DivisorClass& y) { return x.coords < y.coords; }
};

struct CurveRecord {
    std::string name;
    DivisorClass cls;
    std::optional<int> genus;
};

// Local data of a (closed) point: multiplicities of the listed curves at x
// and, for tangency, the vanishing order of C restricted to a flag curve F.
// An absent ord_on(C, F) entry defaults to mult(C) (transversal intersection).
struct PointProfile {
    std::string name;
    std::map<std::string, int> mult;
    std::map<std::pair<std::string, std::string>, int> ord_on;  // (curve, flag-curve) -> order
    bool very_general = false;
    bool abelian_origin = false;

    int multiplicity(const std::string& curve) const;
    int order_on(const std::string& curve, const std::string& flag_curve) const;
};

struct SurfaceModel {
    std::string name;
    std::vector<std::string> basis;
    std::vector<std::vector<Rational>> gram;  // rank x rank, symmetric
    DivisorClass canonical;
    DivisorClass ample_ref;
    std::vector<CurveRecord> curves;
    std::vector<PointProfile> points;
    bool complete = false;
    bool abelian = false;

    std::size_t rank() const { return basis.size(); }
    DivisorClass basis_class(std::size_t i) const;
    const CurveRecord* find_curve(const std::string& name) const;
    const CurveRecord* find_curve_by_class(const DivisorClass& cls) const;
    const PointProfile* find_point(const std::string& name) const;
    Rational self_intersection(const CurveRecord& c) const;
};

// D1^T * gram * D2, exact. Throws DimensionMismatch.
Rational intersect(const SurfaceModel& model, const DivisorClass& d1, const DivisorClass& d2);

struct ValidationReport {
    std::vector<std::string> failures;
    int positive_eigen = 0, negative_eigen = 0, zero_eigen = 0;
    bool ok() const { return failures.empty(); }
};

// Checks symmetry, nondegeneracy, signature (1, rank-1), ample_ref positivity,
// negative-curve bookkeeping, duplicate classes, adjunction where genus is given,
// and point-profile consistency. Failures are report entries, never exceptions.
ValidationReport validate_model(const SurfaceModel& model);

// --- exact linear algebra helpers (shared by zariski/chambers/positivity) ---

using Matrix = std::vector<std::vector<Rational>>;

// Signature of a symmetric rational matrix via exact congruence diagonalization.
// Returns (#positive, #negative, #zero) diagonal entries.
struct Signature {
    int positive = 0, negative = 0, zero = 0;
};
Signature symmetric_signature(Matrix m);

// Solves m * x = rhs; empty optional when the system is singular/inconsistent.
std::optional<std::vector<Rational>> solve_linear(Matrix m, std::vector<Rational> rhs);

// Leading-principal-minor test for negative definiteness of a symmetric matrix.
bool negative_definite(const Matrix& m);

Rational determinant(Matrix m);

// Gram matrix of a subset of the model's listed curves (by index).
Matrix curve_gram(const SurfaceModel& model, const std::vector<std::size_t>& idx);

}  // namespace nok
