#pragma once

#include <string>
#include <vector>

#include "gentle/walk.hpp"

/* Homotopy strings and bands.
 *
 * A homotopy string is a walk whose adjacent same-direction letters may
 * cross a relation; it partitions uniquely into homotopy letters (maximal
 * relation-free same-direction runs).  The unfolded diagram has one
 * projective slot per homotopy-letter boundary.  A direct homotopy letter p
 * is the differential component P(e(p)) -> P(s(p)), so along the walk a
 * direct letter lowers the degree from its s-slot to its e-slot by one and
 * an inverse letter raises it.
 *
 * Bands are stored rotated so that homotopy letters do not wrap: index 0
 * starts a homotopy letter and the seam between letters.back() and
 * letters.front() is a homotopy-letter boundary.
 */

namespace gentle {

struct HomotopyLetter {
    int first = 0;   // index into the walk's letters
    int count = 1;   // number of walk letters
    bool direct = true;
};

class GradedHomotopyString {
public:
    GradedHomotopyString() = default;

    const Walk& walk() const { return walk_; }
    bool is_band() const { return band_; }
    bool truncated_left() const { return trunc_left_; }
    bool truncated_right() const { return trunc_right_; }

    int num_letters() const { return static_cast<int>(letters_.size()); }
    const HomotopyLetter& hletter(int i) const { return letters_.at(i); }
    const std::vector<HomotopyLetter>& hletters() const { return letters_; }

    // Slots: a string with n letters has n+1 slots (slot 0 = right end);
    // a band with n letters has n slots, cyclically.
    int num_slots() const { return band_ ? num_letters() : num_letters() + 1; }
    VertexId slot_vertex(const GentlePresentation& pres, int i) const;
    int slot_degree(int i) const { return degrees_.at(i); }
    int min_degree() const;
    int max_degree() const;

    // The walk letters of homotopy letter i, as a Walk, and as a Path
    // (direct letters) or the underlying path of the inverse letter.
    Walk hletter_walk(const GentlePresentation& pres, int i) const;
    Path hletter_path(const GentlePresentation& pres, int i) const;

    // Walk-slot index of homotopy slot i (for bands, slot i sits at walk slot
    // hletter(i).first, with slot 0 at walk slot 0).
    int walk_slot_of(int i) const;

    std::string str(const GentlePresentation& pres) const;  // degree row + letter row

    static GradedHomotopyString make(const GentlePresentation& pres, const Walk& walk,
                                     int base_degree, bool band, bool trunc_left = false,
                                     bool trunc_right = false);

    GradedHomotopyString inverted(const GentlePresentation& pres) const;

private:
    Walk walk_;
    std::vector<HomotopyLetter> letters_;
    std::vector<int> degrees_;  // per slot
    bool band_ = false;
    bool trunc_left_ = false, trunc_right_ = false;
};

// Partition of a walk (or cyclic walk) into homotopy letters.  Boundaries sit
// at orientation changes and relation crossings; every backtrack-free walk is
// a homotopy string.  For bands the walk must already start on a boundary.
std::vector<HomotopyLetter> decompose_homotopy_letters(const GentlePresentation& pres,
                                                       const Walk& w, bool band);

// Rotation making walk index 0 a homotopy-letter boundary (bands).
int band_boundary_rotation(const GentlePresentation& pres, const Walk& w);

// Maximal antipaths, eventually periodic.  arrows[k] is the arrow of the
// k-th letter counted from the seed; for dir(b) the letters run leftward,
// for inv(a) rightward, in both cases each consecutive pair crosses a
// relation: arrows[k+1] * arrows[k] in I.
struct EventuallyPeriodicPath {
    std::vector<ArrowId> prefix;
    std::vector<ArrowId> cycle;  // empty = finite antipath

    bool infinite() const { return !cycle.empty(); }
    int finite_length() const { return static_cast<int>(prefix.size()); }
    ArrowId at(int k) const;  // k-th arrow, defined for all k when infinite
    int length_or(int cap) const { return infinite() ? cap : finite_length(); }
};

EventuallyPeriodicPath antipath(const GentlePresentation& pres, ArrowId seed);

}  // namespace gentle
