#pragma once

#include "mukai/mukai_vector.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mukai {

// Search bounds for the reduction engine. Overridable from the CLI and via
// MUKAI_BUDGET_* environment variables.
struct Budget {
    Int ab = 64;    // |m|,|n| range for twist searches
    Int eta = 4;    // coordinate cap for e-block twist candidates
    Int pump = 12;  // number of pump variants in the last-resort tier
    Int kmul = 4;   // multiplier for transvection coefficient ranges
};

struct CertStep {
    Move move;
    MukaiVector result;
    std::vector<std::string> checks;
};

// A replayable chain of moves. Replaying apply_move over steps from initial
// must reproduce each recorded result; v_square and primitivity are constant
// along the chain and a completed even-rank reduction ends in rank 2 or 4.
struct ReductionCertificate {
    MukaiVector initial;
    std::vector<CertStep> steps;
    MukaiVector final_v;
};

struct VerifyResult {
    bool pass = false;
    std::string first_violation; // empty on pass
};

// Twist by k sigma + l f placing both hyperbolic coefficients of c1 into the
// half-open window (-r/2, r/2]. Requires r > 0.
std::pair<MukaiVector, Move> normalize_window(const MukaiVector& v);

// The aligned special case: windowed c1 = d*f + xi with d in {0, +-r/2} and
// xi in the e-block (or the mirrored form with sigma and f exchanged, which
// is handled by conjugating with the swap isometry). Returns a certificate
// ending in rank 2 or 4. Throws "not in special-case form" when the shape
// precondition fails.
ReductionCertificate reduce_aligned(const MukaiVector& v);

// Full even-rank reduction to rank 2 or 4 with a verified certificate.
// Requires a primitive vector of positive even rank.
ReductionCertificate reduce_even(const MukaiVector& v, const Budget& budget = Budget{});

// One general-position step: a move chain that either strictly lowers the
// rank (twist-then-switch when r*s' > v_square is attainable below rank r)
// or lands the vector in the aligned shape so reduce_aligned can finish,
// possibly through a rank-raising pump. Deterministic; throws
// search_exhausted with a structured report when the budget runs out.
std::pair<std::vector<Move>, MukaiVector> induction_step(const MukaiVector& v, const Budget& budget);

// Rank-2 normalization: a twist D with t' = t + (c1,D) + D^2 in {0,1}.
// Primitivity is not required. Closed form when c1 is divisible by 2,
// bounded deterministic search otherwise.
std::pair<Move, MukaiVector> rank2_normalize(const MukaiVector& v, const Budget& budget = Budget{});

// Re-executes every move with full precondition checks and re-asserts the
// conservation, primitivity, replay and final-rank claims. Failures are
// data, not errors.
VerifyResult verify_certificate(const ReductionCertificate& cert);

} // namespace mukai
