#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nok/quadratic.hpp"
#include "nok/zariski.hpp"

namespace nok {

// Sorted support set labelling a Zariski chamber; empty = nef chamber.
struct ChamberSupport {
    std::vector<std::string> curves;
    bool indeterminate = false;  // existence test failed after perturbation retries

    friend bool operator==(const ChamberSupport& a, const ChamberSupport& b) { return a.curves == b.curves; }
    friend bool operator<(const ChamberSupport& a, const ChamberSupport& b) { return a.curves < b.curves; }
    std::string str() const;  // semicolon-joined, "(nef)" for the empty support
};

// Supp(N_D) as the chamber label of a big class. Throws NotBig.
ChamberSupport chamber_support(const SurfaceModel& model, const DivisorClass& D);

// Every subset S of listed negative curves with negative-definite Gram whose
// solved positive part P = A' + sum lambda_i C_i has Null(P) = S exactly.
// Sorted canonically; includes the empty (nef) support.
std::vector<ChamberSupport> enumerate_chambers(const SurfaceModel& model);

// del Pezzo X_r: basis (H, E1..Er), all (-1)-curves enumerated exhaustively.
// enumeration_bound is the cap on the H-degree of curve classes (default 6,
// sufficient for r <= 8; raise it to check closure).
SurfaceModel del_pezzo_model(int r, int enumeration_bound = 6);

// Clique count (including the empty clique) of the orthogonality graph on the
// (-1)-curves of del_pezzo_model(r). Equals the Zariski chamber count.
std::int64_t count_chambers_delpezzo(int r);

struct RayInterval {
    QuadraticNumber t_begin;
    QuadraticNumber t_end;
    ChamberSupport support;
    bool truncated = false;  // closed at the probe bound, not at a bigness exit
};

// Partition of { t >= 0 : D - tG big } into maximal constant-support intervals.
// Throws NotBig at t = 0, and UnboundedRay when the ray never exits the big
// cone and no probe bound t_max is given.
std::vector<RayInterval> ray_chamber_walk(const SurfaceModel& model, const DivisorClass& D, const DivisorClass& G,
                                          std::optional<Rational> t_max = std::nullopt);

// One support per row, semicolon-joined curve names.
std::string chambers_to_csv(const std::vector<ChamberSupport>& chambers);

}  // namespace nok
