#pragma once

#include <map>
#include <string>

#include "nok/model.hpp"

namespace nok {

// D = P + sum a_i C_i with P model-nef, P.C_i = 0 on the support,
// and the support Gram negative definite. Coefficients are all > 0.
struct ZariskiDecomposition {
    DivisorClass P;
    std::map<std::string, Rational> N;

    bool nontrivial() const { return !N.empty(); }
    Rational coefficient(const std::string& curve) const;
    DivisorClass negative_class(const SurfaceModel& model) const;
    Rational negative_self_intersection(const SurfaceModel& model) const;  // (N^2)
};

// Unique Zariski decomposition of a pseudo-effective class.
// Throws NotPseudoEffective when the iteration fails (operational definition
// of pseudo-effectivity). Soundness is conditional on model.complete.
ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const DivisorClass& D);

// (P_D^2); 0 for non-big and non-pseudo-effective classes. Total.
Rational volume(const SurfaceModel& model, const DivisorClass& D);

bool is_big(const SurfaceModel& model, const DivisorClass& D);

// Model nef test: D.C >= 0 for all listed curves, D^2 >= 0, D.A >= 0.
bool model_nef(const SurfaceModel& model, const DivisorClass& D);

struct AsymptoticCohomology {
    Rational h0, h1, h2;
};
AsymptoticCohomology asymptotic_cohomology(const SurfaceModel& model, const DivisorClass& D);

enum class BaseLocusKind { Restricted, Augmented };

struct BaseLocus {
    std::vector<std::string> curves;  // sorted
    BaseLocusKind kind;
    bool contains(const std::string& name) const;
};

// Restricted: Supp(N_D); augmented: Null(P_D) together with Supp(N_D).
// Throws NotBig.
BaseLocus base_locus(const SurfaceModel& model, const DivisorClass& D, BaseLocusKind kind);

// sum a_i * mult_x(C_i) over the negative part. Throws NotBig.
Rational asymptotic_multiplicity(const SurfaceModel& model, const DivisorClass& D, const PointProfile& x);

}  // namespace nok
