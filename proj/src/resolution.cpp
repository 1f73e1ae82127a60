#include "gentle/resolution.hpp"

#include <algorithm>

namespace gentle {

std::optional<ArrowId> prepend_seed(const GentlePresentation& pres, const Walk& w) {
    VertexId tip = w.end(pres);
    std::optional<ArrowId> found;
    for (ArrowId y : pres.arrows_from(tip)) {
        if (!w.is_trivial()) {
            Letter last = w.letter(w.length() - 1);
            if (!string_pair_ok(pres, Letter{y, false}, last)) continue;
        }
        if (found) return std::nullopt;  // ambiguity only for trivial walks; caller decides
        found = y;
    }
    return found;
}

std::optional<ArrowId> append_seed(const GentlePresentation& pres, const Walk& w) {
    VertexId tip = w.source(pres);
    std::optional<ArrowId> found;
    for (ArrowId x : pres.arrows_from(tip)) {
        if (!w.is_trivial()) {
            Letter first = w.letter(0);
            if (!string_pair_ok(pres, first, Letter{x, true})) continue;
        }
        if (found) return std::nullopt;
        found = x;
    }
    return found;
}

std::optional<int> ResolutionParts::walk_slot_of_word_pos(int pos, int word_len) const {
    if (pi.is_band()) {
        int n = pi.walk().length();
        return ((pos - band_rotation) % n + n) % n;
    }
    int suffix_len = removed_suffix.length();
    if (pos < removed_prefix_len || pos > word_len - suffix_len) return std::nullopt;
    return inv_kept + (pos - removed_prefix_len);
}

ResolutionParts project(const GentlePresentation& pres, const Walk& w, bool band, int min_degree) {
    if (min_degree > -1) throw std::invalid_argument("min_degree must be <= -1");
    ResolutionParts rp;

    if (band) {
        rp.case_tag = 5;
        rp.band_rotation = band_boundary_rotation(pres, w);
        Walk rotated = w.rotated(pres, rp.band_rotation);
        GradedHomotopyString g = GradedHomotopyString::make(pres, rotated, 0, true);
        int shift = -g.max_degree();
        g = GradedHomotopyString::make(pres, rotated, g.slot_degree(0) + shift, true);
        rp.pi = g;
        return rp;
    }

    std::optional<ArrowId> b, a;
    if (w.is_trivial()) {
        auto outs = pres.arrows_from(w.source(pres));
        std::vector<ArrowId> sorted(outs.begin(), outs.end());
        std::sort(sorted.begin(), sorted.end(), [&](ArrowId x, ArrowId y) {
            return pres.arrow(x).name < pres.arrow(y).name;
        });
        if (sorted.size() == 2) {
            b = sorted[0];
            a = sorted[1];
        } else if (sorted.size() == 1) {
            b = sorted[0];  // single arrow: prepend only (appending a-bar would backtrack)
        }
    } else {
        b = prepend_seed(pres, w);
        a = append_seed(pres, w);
    }

    Walk core = w;
    if (!a) {
        // remove the maximal direct suffix (left end of the word)
        int cut = core.length();
        while (cut > 0 && !core.letter(cut - 1).inv) --cut;
        rp.removed_suffix = core.subwalk(pres, cut, core.length() - cut);
        core = core.subwalk(pres, 0, cut);
    }
    if (!b) {
        int cut = 0;
        while (cut < core.length() && core.letter(cut).inv) ++cut;
        rp.removed_prefix = core.subwalk(pres, 0, cut);
        rp.removed_prefix_len = cut;
        core = core.subwalk(pres, cut, core.length() - cut);
    }
    rp.case_tag = b ? (a ? 1 : 3) : (a ? 2 : 4);
    rp.dir_seed = b;
    rp.inv_seed = a;

    const int budget = -min_degree;
    std::vector<Letter> letters;
    if (a) {
        rp.inv_antipath = antipath(pres, *a);
        rp.inv_kept = rp.inv_antipath.infinite() ? budget
                                                 : std::min(rp.inv_antipath.finite_length(), budget);
        for (int k = rp.inv_kept - 1; k >= 0; --k) letters.push_back({rp.inv_antipath.at(k), true});
    }
    for (const Letter& l : core.letters()) letters.push_back(l);
    if (b) {
        rp.dir_antipath = antipath(pres, *b);
        rp.dir_kept = rp.dir_antipath.infinite() ? budget
                                                 : std::min(rp.dir_antipath.finite_length(), budget);
        for (int k = 0; k < rp.dir_kept; ++k) letters.push_back({rp.dir_antipath.at(k), false});
    }

    bool trunc_right = a && (rp.inv_antipath.infinite() || rp.inv_kept < rp.inv_antipath.finite_length());
    bool trunc_left = b && (rp.dir_antipath.infinite() || rp.dir_kept < rp.dir_antipath.finite_length());

    Walk pw = letters.empty() ? Walk::trivial(core.source(pres))
                              : Walk::from_letters(pres, std::move(letters));
    GradedHomotopyString g = GradedHomotopyString::make(pres, pw, 0, false, trunc_left, trunc_right);
    int shift = -g.max_degree();
    g = GradedHomotopyString::make(pres, pw, g.slot_degree(0) + shift, false, trunc_left, trunc_right);
    rp.pi = g;
    return rp;
}

}  // namespace gentle
