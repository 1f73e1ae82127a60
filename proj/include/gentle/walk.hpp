#pragma once

#include <string>
#include <vector>

#include "gentle/presentation.hpp"

/* Walks, strings and bands.
 *
 * A walk w = w_l ... w_1 is stored in traversal order: letters()[0] is w_1,
 * the rightmost letter, and s(w_{i+1}) = e(w_i).  The text syntax lists
 * letters leftmost first ("h- i" is the walk with w_2 = h-bar, w_1 = i),
 * so parsing and printing reverse the stored order.  Trivial walks carry
 * only their vertex.
 */

namespace gentle {

struct Letter {
    ArrowId arrow = -1;
    bool inv = false;

    friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.arrow, !l.inv}; }

class Walk {
public:
    Walk() = default;
    static Walk trivial(VertexId x) { Walk w; w.base_vertex_ = x; return w; }
    // letters[0] = w_1; base vertex inferred from the first letter.
    static Walk from_letters(const GentlePresentation& pres, std::vector<Letter> letters);

    bool is_trivial() const { return letters_.empty(); }
    int length() const { return static_cast<int>(letters_.size()); }
    const std::vector<Letter>& letters() const { return letters_; }
    const Letter& letter(int i) const { return letters_.at(i); }

    // Vertices along the walk: slot(0) = s(w_1), slot(i) = e(w_i); length()+1 slots.
    VertexId slot(const GentlePresentation& pres, int i) const;
    VertexId source(const GentlePresentation& pres) const { return slot(pres, 0); }
    VertexId end(const GentlePresentation& pres) const { return slot(pres, length()); }

    Walk inverted(const GentlePresentation& pres) const;
    Walk rotated(const GentlePresentation& pres, int r) const;  // starts at letter index r
    Walk subwalk(const GentlePresentation& pres, int first, int count) const;

    std::string str(const GentlePresentation& pres) const;

    friend bool operator==(const Walk&, const Walk&) = default;
    bool operator<(const Walk& o) const;

private:
    std::vector<Letter> letters_;
    VertexId base_vertex_ = -1;  // s(w_1); the vertex itself when trivial
};

VertexId letter_source(const GentlePresentation& pres, Letter l);
VertexId letter_end(const GentlePresentation& pres, Letter l);

// w_left . w_right as words: w_right is traversed first.
Walk concat(const GentlePresentation& pres, const Walk& left, const Walk& right);

// Walk/string/band predicates.  is_walk checks composability and the absence
// of a a-bar / a-bar a subsequence; is_string additionally forbids relation
// factors; is_band checks cyclic validity (including the seam pair), the
// w_1 != w_n-bar condition and primitivity.
bool is_walk(const GentlePresentation& pres, const Walk& w);
bool is_string(const GentlePresentation& pres, const Walk& w);
bool is_band(const GentlePresentation& pres, const Walk& w);

// Valid adjacency (left, right) inside a string: composable, no backtrack,
// no relation factor in the walk or its inverse.
bool string_pair_ok(const GentlePresentation& pres, Letter left, Letter right);

// Canonical representative under inversion (strings) or inversion and
// rotation (bands), minimal for the letter order (arrow name, then inverse).
Walk canonical_string(const GentlePresentation& pres, const Walk& w);
Walk canonical_band(const GentlePresentation& pres, const Walk& w);

std::vector<Walk> enumerate_strings(const GentlePresentation& pres, int max_len);
std::vector<Walk> enumerate_bands(const GentlePresentation& pres, int max_len);

// Vertex occurrence counts; a band of length l has l slots (seam not doubled).
std::vector<int> dimension_vector(const GentlePresentation& pres, const Walk& w, bool band);

// Text syntax: space-separated arrow names, leftmost = w_l, inverse marked by
// a trailing '-'; "1_<vertex>" for trivial walks.
Walk parse_walk(const GentlePresentation& pres, const std::string& text);

}  // namespace gentle
