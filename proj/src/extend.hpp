#pragma once

#include <array>
#include <vector>

#include "derivative.hpp"
#include "function_spec.hpp"

namespace stringspec {

enum class Parity { odd, even, mixed };

/// One derivative-matching check at a seam.
struct SeamOrderCheck {
    int order = 0;
    double from_left = 0.0;  // approaching the seam from below
    double from_right = 0.0; // approaching from above
    double est_error = 0.0;  // max of the two estimator uncertainties
    bool matched = false;
    bool indeterminate = false; // estimator unreliable at this order
};

/// Verified continuity class at one seam: the largest k such that one-sided
/// derivative estimates of every order <= k agree.
struct SeamReport {
    int seam = 0; // 0: x = 0; 1: x = +-L under endpoint identification
    int cls = -1; // -1 if even the values disagree
    std::vector<SeamOrderCheck> orders;
};

/// A function on [-L, L] built by extension from [0, L], with its parity tag
/// and per-seam smoothness classes.
struct ExtensionResult {
    FunctionSpec h; // on [-L, L]
    Parity parity = Parity::mixed;
    std::array<SeamReport, 2> seams;
    int min_seam_class() const { return std::min(seams[0].cls, seams[1].cls); }
};

/// h(x) = f(x) on [0,L], -f(-x) on [-L,0). Requires f(0) = f(L) = 0 within
/// `endpoint_tol` of the function scale.
ExtensionResult odd_extend(const FunctionSpec& f, int max_order = -1, double seam_tol = 1e-5,
                           double endpoint_tol = 1e-9);

/// h(x) = f(x) on [0,L], f(-x) on [-L,0). Same endpoint requirement (the
/// extension keeps the C_0 class even though evenness alone would not need it).
ExtensionResult even_extend(const FunctionSpec& f, int max_order = -1, double seam_tol = 1e-5,
                            double endpoint_tol = 1e-9);

/// Recomputes the per-seam classes of an extension at the given order cap and
/// tolerance. Matching rule: |left - right| <= tol * (1 + max(|left|,|right|)).
std::array<SeamReport, 2> seam_smoothness(const ExtensionResult& ext, int max_order, double tol);

struct ParityReport {
    Parity klass = Parity::mixed; // mixed = "neither"
    double deviation = 0.0;       // max deviation from the best-fitting parity
    double deviation_odd = 0.0;
    double deviation_even = 0.0;
};

/// Classifies a function on [-L, L] by probing h(-x) -+ h(x) on a 257-point
/// grid. `tol` is relative to the sampled magnitude.
ParityReport parity_check(const FunctionSpec& h, double tol = 1e-9);

} // namespace stringspec
