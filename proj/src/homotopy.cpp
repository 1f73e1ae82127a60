#include "gentle/homotopy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gentle {

// True when the junction between adjacent walk letters (left, right) crosses a
// relation (same direction, composition in I).  Orientation changes are the
// other kind of homotopy-letter boundary.
static bool crosses_relation(const GentlePresentation& pres, Letter left, Letter right) {
    if (left.inv != right.inv) return false;
    if (!left.inv) return pres.in_ideal(left.arrow, right.arrow);
    return pres.in_ideal(right.arrow, left.arrow);
}

static bool is_boundary(const GentlePresentation& pres, Letter left, Letter right) {
    return left.inv != right.inv || crosses_relation(pres, left, right);
}

std::vector<HomotopyLetter> decompose_homotopy_letters(const GentlePresentation& pres,
                                                       const Walk& w, bool band) {
    std::vector<HomotopyLetter> out;
    const int n = w.length();
    if (n == 0) return out;
    int start = 0;
    for (int i = 0; i < n; ++i) {
        bool boundary;
        if (i + 1 < n)
            boundary = is_boundary(pres, w.letter(i + 1), w.letter(i));
        else
            boundary = true;  // for bands the caller guarantees a seam boundary
        if (boundary) {
            out.push_back({start, i - start + 1, !w.letter(start).inv});
            start = i + 1;
        }
    }
    if (band && !is_boundary(pres, w.letter(0), w.letter(n - 1)) && out.size() > 1)
        throw std::invalid_argument("band walk does not start on a homotopy-letter boundary");
    return out;
}

int band_boundary_rotation(const GentlePresentation& pres, const Walk& w) {
    const int n = w.length();
    for (int r = 0; r < n; ++r) {
        // rotation r puts letter r at index 0; boundary needed between letters r-1 and r
        if (is_boundary(pres, w.letter(r), w.letter((r - 1 + n) % n))) return r;
    }
    throw std::invalid_argument("cyclic walk has no homotopy-letter boundary");
}

GradedHomotopyString GradedHomotopyString::make(const GentlePresentation& pres, const Walk& walk,
                                                int base_degree, bool band, bool trunc_left,
                                                bool trunc_right) {
    GradedHomotopyString g;
    g.walk_ = walk;
    g.band_ = band;
    g.trunc_left_ = trunc_left;
    g.trunc_right_ = trunc_right;
    g.letters_ = decompose_homotopy_letters(pres, walk, band);
    const int slots = g.num_slots();
    g.degrees_.assign(std::max(slots, 1), base_degree);
    for (int i = 0; i + 1 < slots + (band ? 1 : 0); ++i) {
        int d = g.degrees_[i] + (g.letters_[i].direct ? -1 : +1);
        if (band && i + 1 == slots) {
            if (d != g.degrees_[0])
                throw std::invalid_argument("band degrees do not close up");
        } else {
            g.degrees_[i + 1] = d;
        }
    }
    if (band) {
        int direct = 0, inv = 0;
        for (const auto& l : g.letters_) (l.direct ? direct : inv)++;
        if (direct != inv) throw std::invalid_argument("homotopy band needs equal direct and inverse letters");
    }
    return g;
}

GradedHomotopyString GradedHomotopyString::inverted(const GentlePresentation& pres) const {
    // Same complex, opposite reading; slot degrees are preserved.
    int base = band_ ? slot_degree(0) : slot_degree(num_slots() - 1);
    Walk w = walk_.inverted(pres);
    if (band_) {
        // keep index 0 on a boundary
        int r = band_boundary_rotation(pres, w);
        w = w.rotated(pres, r);
        // degree of the new slot 0 = degree of the old slot at the inverted position
        GradedHomotopyString g = make(pres, w, 0, true, false, false);
        // anchor: match multiset of (vertex, degree) by recomputing from max degree
        int shift = max_degree() - g.max_degree();
        for (auto& d : g.degrees_) d += shift;
        return g;
    }
    return make(pres, w, base, false, trunc_right_, trunc_left_);
}

VertexId GradedHomotopyString::slot_vertex(const GentlePresentation& pres, int i) const {
    return walk_.slot(pres, walk_slot_of(i));
}

int GradedHomotopyString::walk_slot_of(int i) const {
    if (letters_.empty()) return 0;
    if (i == num_letters()) return walk_.length();  // strings only
    return letters_.at(i).first;
}

int GradedHomotopyString::min_degree() const {
    return *std::min_element(degrees_.begin(), degrees_.end());
}

int GradedHomotopyString::max_degree() const {
    return *std::max_element(degrees_.begin(), degrees_.end());
}

Walk GradedHomotopyString::hletter_walk(const GentlePresentation& pres, int i) const {
    const auto& hl = letters_.at(i);
    return walk_.subwalk(pres, hl.first, hl.count);
}

Path GradedHomotopyString::hletter_path(const GentlePresentation& pres, int i) const {
    const auto& hl = letters_.at(i);
    std::vector<ArrowId> arrows;
    arrows.reserve(hl.count);
    if (hl.direct) {
        for (int k = 0; k < hl.count; ++k) arrows.push_back(walk_.letter(hl.first + k).arrow);
    } else {
        for (int k = hl.count - 1; k >= 0; --k) arrows.push_back(walk_.letter(hl.first + k).arrow);
    }
    return Path::from_arrows(pres, arrows);
}

std::string GradedHomotopyString::str(const GentlePresentation& pres) const {
    std::ostringstream deg, row;
    if (num_letters() == 0) {
        deg << slot_degree(0);
        row << pres.vertex_name(slot_vertex(pres, 0));
    }
    for (int i = num_letters() - 1; i >= 0; --i) {
        if (i == num_letters() - 1 && !band_) {
            deg << slot_degree(i + 1) << ' ';
            row << pres.vertex_name(slot_vertex(pres, (i + 1) % num_slots())) << ' ';
        }
        Walk seg = hletter_walk(pres, i);
        std::string label;
        for (auto it = seg.letters().rbegin(); it != seg.letters().rend(); ++it)
            label += pres.arrow(it->arrow).name;
        row << (letters_[i].direct ? "-" : "<") << label << (letters_[i].direct ? ">" : "-") << ' ';
        deg << std::string(label.size() + 2, ' ');
        deg << slot_degree(i) << ' ';
        row << pres.vertex_name(slot_vertex(pres, i)) << ' ';
    }
    std::string out = deg.str();
    out += '\n';
    if (trunc_left_) out += "...";
    out += row.str();
    if (trunc_right_) out += "...";
    return out;
}

ArrowId EventuallyPeriodicPath::at(int k) const {
    if (k < static_cast<int>(prefix.size())) return prefix[k];
    if (cycle.empty()) throw std::out_of_range("finite antipath");
    return cycle[(k - prefix.size()) % cycle.size()];
}

EventuallyPeriodicPath antipath(const GentlePresentation& pres, ArrowId seed) {
    EventuallyPeriodicPath ep;
    std::map<ArrowId, int> pos;
    ArrowId cur = seed;
    while (true) {
        if (auto it = pos.find(cur); it != pos.end()) {
            ep.cycle.assign(ep.prefix.begin() + it->second, ep.prefix.end());
            ep.prefix.resize(it->second);
            return ep;
        }
        pos[cur] = static_cast<int>(ep.prefix.size());
        ep.prefix.push_back(cur);
        auto next = pres.next_relation(cur);  // unique by gentleness
        if (!next) return ep;
        cur = *next;
    }
}

}  // namespace gentle
