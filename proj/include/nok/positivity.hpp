#pragma once

#include <optional>
#include <vector>

#include "nok/model.hpp"
#include "nok/quadratic.hpp"

namespace nok {

struct PositivityReport {
    bool pseff = false;
    bool big = false;
    bool nef = false;
    bool ample = false;
    bool conditional = false;  // model not declared complete
};

PositivityReport classify(const SurfaceModel& model, const DivisorClass& D);

struct NpVerdict {
    int p = 0;
    bool precondition_ok = false;            // L^2 >= 5(p+2)^2
    bool holds = false;                      // precondition_ok and no witness
    std::optional<DivisorClass> witness;     // elliptic class with 1 <= L.v <= p+2
};

// Throws NotAbelianModel, NotAmple.
NpVerdict np_check(const SurfaceModel& model, const DivisorClass& L, int p);

enum class ReiderMode { Basepoint, Separation };

// Candidate obstruction classes with (L.D, D^2) in the mode's case list.
// An empty list certifies the conclusion model-conditionally.
// Throws DomainError when L fails the nef test or the L^2 threshold.
std::vector<DivisorClass> reider_check(const SurfaceModel& model, const DivisorClass& L, ReiderMode mode);

// g + (g+p-2 + sqrt((g+p-2)^2 + 4(g(p-2)+2)))/2. Throws NegativeDiscriminant.
QuadraticNumber green_bound(int g, int p);

// binom(r,i+1)(2g-2-deg) + binom(r-1,i) deg < 0 for all 0 <= i <= p,
// with r = deg+1-g.
bool green_inequality_holds(const Integer& deg_L, int g, int p);

struct PellBound {
    Integer p0, q0;   // fundamental solution of q0^2 - N p0^2 = 1
    Rational bound;   // p0 N / q0
};

// Throws DomainError when N is a perfect square or not positive.
PellBound pell_seshadri_bound(const Integer& N);

}  // namespace nok
