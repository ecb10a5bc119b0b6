#include "cheeger/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include <json.hpp>

#include "cheeger/errors.hpp"
#include "cheeger/formulas.hpp"
#include "cheeger/tolerance.hpp"

namespace cheeger {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Accumulates the min-reduction over candidates; ties within tie_rel_tol
// append, a strict improvement resets the list.
struct BestTracker {
    double H;
    double tie_rel_tol;
    std::vector<MinimizerPair> minimizers;

    // Returns true when the candidate improved H.
    bool offer(double ratio, MinimizerPair pair) {
        if (H < kInf && nearly_equal(ratio, H, tie_rel_tol)) {
            minimizers.push_back(std::move(pair));
            return false;
        }
        if (ratio < H) {
            H = ratio;
            minimizers.assign(1, std::move(pair));
            return true;
        }
        return false;
    }
};

void post_check(const SurfaceDescription& s, const SolveOptions& options, BestTracker& best) {
    const double total_area = surface_area(s);
    const double half = 0.5 * total_area;

    // Half-area annulus around each geodesic; its offset satisfies
    // 2 L0 sinh(s) = area/2.
    std::vector<const Geodesic*> by_id;
    for (const auto& g : s.geodesics) by_id.push_back(&g);
    std::sort(by_id.begin(), by_id.end(),
              [](const Geodesic* a, const Geodesic* b) { return a->id < b->id; });
    for (const Geodesic* g : by_id) {
        best.offer(annulus_ratio(g->length, half),
                   MinimizerPair{{g->id}, std::asinh(half / (2.0 * g->length))});
    }

    // Half-area disk, only when the surface is compact and the caller vouches
    // that it embeds; the pair records the radius.
    if (s.cusps == 0 && options.disk_embeddable) {
        best.offer(disk_stats_for_area(half).ratio(),
                   MinimizerPair{{}, std::acosh(1.0 + half / (2.0 * kPi))});
    }
}

CheegerResult finish(const SurfaceDescription& s, BestTracker& best, double budget) {
    if (best.H == kInf) {
        throw NoCandidateError(
            "no candidate to minimize over: the description has no admissible splitting and "
            "the post-check contributed nothing");
    }
    CheegerResult result;
    result.H = best.H;
    result.minimizers = std::move(best.minimizers);
    result.budget_final = budget;
    result.horocusp_minimizer = (s.cusps > 0 && best.H == 1.0);
    return result;
}

struct FamilySetup {
    FamilySide side;
    int chi;            // Euler characteristic of the expanding side
    double ell;         // total boundary length
    double area0;       // area of the expanding side at offset 0
    double s_eq;        // offset where the sides' areas match
    double s_lim;       // clearance / 2
    bool shortcut;      // areas already match at offset 0
};

FamilySetup family_setup(const SurfaceDescription& s, const Splitting& sp, double total_area) {
    const double ell = splitting_length(s, sp);
    const double area_a = -2.0 * kPi * sp.chi_a;
    const double area_b = -2.0 * kPi * sp.chi_b;
    if (!(area_a > 0.0) || !(area_b > 0.0)) {
        throw ValidationError("negative side chi",
                              "equidistant family needs chi_A < 0 and chi_B < 0");
    }
    FamilySetup f;
    f.s_lim = 0.5 * sp.clearance;
    f.ell = ell;
    const double half = 0.5 * total_area;
    if (nearly_equal(area_a, half)) {
        f.side = FamilySide::a;
        f.chi = sp.chi_a;
        f.area0 = area_a;
        f.s_eq = 0.0;
        f.shortcut = true;
        return f;
    }
    f.shortcut = false;
    if (area_a < half) {
        f.side = FamilySide::a;
        f.chi = sp.chi_a;
        f.area0 = area_a;
    } else {
        f.side = FamilySide::b;
        f.chi = sp.chi_b;
        f.area0 = area_b;
    }
    f.s_eq = std::asinh((half - f.area0) / ell);
    return f;
}

}  // namespace

const char* to_string(EvalReason reason) {
    switch (reason) {
        case EvalReason::equal_area_shortcut: return "equal_area_shortcut";
        case EvalReason::interior_minimum: return "interior_minimum";
        case EvalReason::area_capped: return "area_capped";
        case EvalReason::clearance_discarded: return "clearance_discarded";
    }
    return "unknown";
}

std::pair<double, double> initialize(const SurfaceDescription& s) {
    const double bound = length_upper_bound(s);
    if (s.cusps > 0) return {1.0, bound};
    return {kInf, bound};
}

CandidateEvaluation evaluate_splitting(const SurfaceDescription& s, const Splitting& sp,
                                       double total_area) {
    const FamilySetup f = family_setup(s, sp, total_area);
    CandidateEvaluation eval;
    eval.splitting = sp;
    eval.side = f.side;

    if (f.shortcut) {
        eval.reason = EvalReason::equal_area_shortcut;
        eval.s_opt = 0.0;
        eval.ratio = f.ell / (0.5 * total_area);
        return eval;
    }

    const double s_star = critical_offset(f.ell, f.chi);
    const double s_opt = std::min(s_star, f.s_eq);
    if (s_opt >= f.s_lim) {
        eval.reason = EvalReason::clearance_discarded;
        return eval;
    }
    eval.reason = (s_star < f.s_eq) ? EvalReason::interior_minimum : EvalReason::area_capped;
    eval.s_opt = s_opt;
    eval.ratio = equidistant_ratio_A(f.ell, f.chi, s_opt);
    return eval;
}

CheegerResult solve(const SurfaceDescription& s, const SolveOptions& options) {
    validate(s);
    const double total_area = surface_area(s);
    auto [h0, u0] = initialize(s);

    BestTracker best{h0, options.tie_rel_tol, {}};
    double budget = u0;
    std::vector<CandidateEvaluation> evaluations;

    for (const auto& sp : admissible_collections(s, u0)) {
        if (options.pruning && splitting_length(s, sp) > budget) {
            break;  // collections are sorted ascending, the rest are dominated
        }
        CandidateEvaluation eval = evaluate_splitting(s, sp, total_area);
        if (eval.ratio) {
            if (best.offer(*eval.ratio, MinimizerPair{sp.curve_ids, *eval.s_opt})) {
                budget = std::min(budget, best.H * total_area / 2.0);
            }
        }
        if (options.record_evaluations) evaluations.push_back(std::move(eval));
    }

    if (options.post_check) post_check(s, options, best);

    CheegerResult result = finish(s, best, budget);
    result.evaluations = std::move(evaluations);
    return result;
}

CheegerResult brute_force(const SurfaceDescription& s, int s_steps,
                          const SolveOptions& options) {
    if (s_steps < 100) throw DomainError("s_steps must be at least 100");
    validate(s);
    const double total_area = surface_area(s);
    auto [h0, u0] = initialize(s);
    BestTracker best{h0, options.tie_rel_tol, {}};

    for (const auto& sp : admissible_collections(s, kInf)) {
        const FamilySetup f = family_setup(s, sp, total_area);
        if (f.shortcut) {
            best.offer(f.ell / (0.5 * total_area), MinimizerPair{sp.curve_ids, 0.0});
            continue;
        }
        // Sample the family ratio on the grid, adding the exact equal-area
        // endpoint; the discard rule is purely grid-based: a minimum sitting
        // on the last sample before the clearance bound was never attained
        // by an embedded region.
        const double step = 1.0 / static_cast<double>(s_steps);
        double best_ratio = kInf, best_s = 0.0;
        bool min_at_end = false;
        double sample = 0.0;
        for (int k = 0; sample < f.s_lim && sample <= f.s_eq; sample = ++k * step) {
            const double ratio = equidistant_ratio_A(f.ell, f.chi, sample);
            if (ratio < best_ratio) {
                best_ratio = ratio;
                best_s = sample;
                min_at_end = true;
            } else {
                min_at_end = false;
            }
        }
        bool capped = false;
        if (f.s_eq < f.s_lim) {
            const double ratio = equidistant_ratio_A(f.ell, f.chi, f.s_eq);
            if (ratio <= best_ratio) {
                best_ratio = ratio;
                best_s = f.s_eq;
                capped = true;
            }
            min_at_end = false;
        }
        if (best_ratio == kInf || (min_at_end && !capped)) {
            continue;  // discarded: the family only improves past the clearance
        }
        best.offer(best_ratio, MinimizerPair{sp.curve_ids, best_s});
    }

    if (options.post_check) post_check(s, options, best);
    return finish(s, best, u0);
}

std::string result_to_json(const CheegerResult& result) {
    nlohmann::ordered_json doc;
    doc["H"] = result.H;
    doc["minimizers"] = nlohmann::ordered_json::array();
    for (const auto& m : result.minimizers) {
        nlohmann::ordered_json jm;
        jm["curves"] = m.curves;
        jm["s"] = m.s;
        doc["minimizers"].push_back(std::move(jm));
    }
    doc["horocusp_minimizer"] = result.horocusp_minimizer;
    doc["budget_final"] = result.budget_final;
    if (!result.evaluations.empty()) {
        doc["evaluations"] = nlohmann::ordered_json::array();
        for (const auto& e : result.evaluations) {
            nlohmann::ordered_json je;
            je["curves"] = e.splitting.curve_ids;
            je["side"] = (e.side == FamilySide::a) ? "A" : "B";
            je["reason"] = to_string(e.reason);
            if (e.s_opt) je["s_opt"] = *e.s_opt;
            if (e.ratio) je["ratio"] = *e.ratio;
            doc["evaluations"].push_back(std::move(je));
        }
    }
    return doc.dump(2) + "\n";
}

}  // namespace cheeger
