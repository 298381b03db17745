#pragma once

#include "mukai/mukai_vector.hpp"

#include <optional>
#include <vector>

namespace mukai {

// Wall type (r, Delta) with r >= 2 and Delta > 0.
struct WallSpec {
    Int r = 2;
    Int Delta = 1;
    WallSpec() = default;
    WallSpec(Int rr, Int dd) : r(rr), Delta(dd) {
        if (r < 2) throw precondition_error("wall type needs r >= 2");
        if (Delta <= 0) throw precondition_error("wall type needs Delta > 0");
    }
};

// A class xi with -(r^2/4) Delta <= xi^2 < 0 defining {H : (xi,H) = 0}.
struct Wall {
    ClassVector xi;
    WallSpec spec;
};

// A positive-norm class, with ampleness itself recorded as a trusted input
// assumption: the lattice can certify H^2 > 0 but not the effective cone.
struct AmpleClass {
    ClassVector H;
    bool trusted = true;
    explicit AmpleClass(ClassVector h, bool trust = true) : H(std::move(h)), trusted(trust) {
        if (norm(H) <= 0) throw precondition_error("ample class needs positive norm");
    }
};

// -(r^2 Delta)/4 <= xi^2 < 0, evaluated exactly (4 xi^2 >= -r^2 Delta)
bool is_of_type(const ClassVector& xi, const WallSpec& spec);

// Complete list of +-representatives xi with (xi,H) = 0 of the given type,
// one per pair, lexicographically sorted. The representative is the sign
// with positive first nonzero coordinate.
std::vector<Wall> walls_through(const AmpleClass& H, const WallSpec& spec);

// first wall witness through H, if any
std::optional<Wall> on_wall(const AmpleClass& H, const WallSpec& spec);

// xi := r c1(E') - r' c1(E) for a rank-r' subobject class; 0 < r' < r
ClassVector subsheaf_class(Int r, const ClassVector& c1E, Int rPrime, const ClassVector& c1Prime);

// discriminant convention fixed by this library: Delta = 2 r c2 - (r-1) c1^2
Int discriminant(const ChernData& d);

struct PolarizeBudget {
    Int n = 32; // direct attempts beyond inner(FA, L1)
    Int q = 8;  // largest perturbation denominator
};

struct Polarization {
    ClassVector L0;
    Int n = 0;
    ClassVector H;
    bool perturbed = false;     // true when the perturbation path was taken
    Int denominator = 1;        // m that cleared the perturbation
    Int direct_attempts = 0;    // walls hit on the direct path
};

// H = L0 + n FA with n > (FA, L0), H^2 > 0 and no wall of the given type
// through H. Tries n directly first; on total failure perturbs L1
// rationally, re-tests off-wall, and clears denominators exactly as the
// construction requires. Throws search_exhausted when the budget is spent.
Polarization construct_polarization(const AmpleClass& L1, const ClassVector& FA,
                                    const WallSpec& spec, const PolarizeBudget& budget = {});

} // namespace mukai
