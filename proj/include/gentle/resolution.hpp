#pragma once

#include <optional>

#include "gentle/homotopy.hpp"

/* The homotopy string or band pi(w) of the minimal projective resolution of
 * M(w) / B(w).  For strings pi(w) is assembled as dir(b) . w' . inv(a) where
 * the maximal antipaths dir/inv are kept as prefix+cycle data and the stored
 * walk is truncated so that every slot has degree >= min_degree; w' is w with
 * a maximal direct suffix and/or maximal inverse prefix removed when the
 * corresponding antipath seed is missing.  Bands are their own resolution,
 * supported in degrees {-1, 0}.
 */

namespace gentle {

struct ResolutionParts {
    GradedHomotopyString pi;
    int case_tag = 0;  // clauses (1)-(5) of the projective-resolution corollary

    Walk removed_prefix;  // maximal inverse prefix taken off w (cases 3, 4)
    Walk removed_suffix;  // maximal direct suffix taken off w (cases 2, 4)

    // Antipath parts.  dir_seed = b with bw a string, appended to the left;
    // inv_seed = x with w x-bar a string, appended inverted to the right.
    std::optional<ArrowId> dir_seed, inv_seed;
    EventuallyPeriodicPath dir_antipath, inv_antipath;
    int dir_kept = 0, inv_kept = 0;  // antipath arrows present in pi's walk

    // Layout of pi's walk: [inv_kept letters][w' letters][dir_kept letters].
    int removed_prefix_len = 0;
    int band_rotation = 0;  // bands: pi.walk() = w.rotated(band_rotation)

    // Original word position (slot index of w) -> walk slot of pi, when that
    // position survives into w'.
    std::optional<int> walk_slot_of_word_pos(int pos, int word_len) const;
};

ResolutionParts project(const GentlePresentation& pres, const Walk& w, bool band,
                        int min_degree = -2);

// The unique arrow b with b.w a string (prepend), resp. x with w.x-bar a
// string (append inverted); for trivial w both sides draw on the arrows
// starting at the vertex and the resolution uses the two-arrow convention.
std::optional<ArrowId> prepend_seed(const GentlePresentation& pres, const Walk& w);
std::optional<ArrowId> append_seed(const GentlePresentation& pres, const Walk& w);

}  // namespace gentle
