#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cheeger/surface.hpp"

namespace cheeger {

enum class EvalReason {
    equal_area_shortcut,   // the splitting halves the area at offset 0
    interior_minimum,      // critical offset reached before the area cap
    area_capped,           // equal-area offset reached before the critical one
    clearance_discarded,   // minimum not attained by an embedded region
};

enum class FamilySide { a, b };

const char* to_string(EvalReason reason);

// Outcome of minimizing one splitting's equidistant family over the offset.
struct CandidateEvaluation {
    Splitting splitting;
    FamilySide side = FamilySide::a;   // the expanding side the family was taken from
    EvalReason reason = EvalReason::clearance_discarded;
    std::optional<double> s_opt;       // present iff not discarded; < clearance/2
    std::optional<double> ratio;
};

// A boundary realizing the constant: the curve set plus its normal offset
// toward the larger side. Post-check winners reuse the shape: an annulus is
// ({geodesic}, collar offset), a disk is ({}, radius).
struct MinimizerPair {
    std::vector<std::string> curves;
    double s = 0.0;

    bool operator==(const MinimizerPair&) const = default;
};

struct CheegerResult {
    double H = 0.0;
    std::vector<MinimizerPair> minimizers;
    double budget_final = 0.0;
    bool horocusp_minimizer = false;
    std::vector<CandidateEvaluation> evaluations;  // populated on request
};

struct SolveOptions {
    bool disk_embeddable = false;   // apply the half-area disk post-check
    bool post_check = true;
    bool pruning = true;            // branch-and-bound budget tightening
    bool record_evaluations = false;
    double tie_rel_tol = 1e-9;      // two ratios within this are the same minimizer
};

// Starting bound pair (H0, U0): with a cusp (1, area/2), otherwise
// (+infinity, sqrt(area^2/4 + 2 pi area)).
std::pair<double, double> initialize(const SurfaceDescription& s);

// Minimize the splitting's one-parameter family. The expanding side is the
// one with the smaller area at offset 0; the optimum is min(critical offset,
// equal-area offset), discarded if that lies at or beyond clearance/2.
CandidateEvaluation evaluate_splitting(const SurfaceDescription& s, const Splitting& sp,
                                       double total_area);

// Full computation: enumerate admissible splittings under the live budget,
// min-reduce their family minima, then post-check half-area annuli around
// every geodesic (and the half-area disk when flagged embeddable).
CheegerResult solve(const SurfaceDescription& s, const SolveOptions& options = {});

// Grid-search oracle: every splitting, no pruning, s_steps samples per unit
// of offset plus the exact equal-area endpoint; same discard rule and
// post-check. s_steps must be >= 100.
CheegerResult brute_force(const SurfaceDescription& s, int s_steps,
                          const SolveOptions& options = {});

// JSON with keys H, minimizers, horocusp_minimizer, budget_final and, when
// recorded, evaluations.
std::string result_to_json(const CheegerResult& result);

}  // namespace cheeger
