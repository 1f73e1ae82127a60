#include "gentle/walk.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gentle {

VertexId letter_source(const GentlePresentation& pres, Letter l) {
    const Arrow& a = pres.arrow(l.arrow);
    return l.inv ? a.target : a.source;
}

VertexId letter_end(const GentlePresentation& pres, Letter l) {
    const Arrow& a = pres.arrow(l.arrow);
    return l.inv ? a.source : a.target;
}

Walk Walk::from_letters(const GentlePresentation& pres, std::vector<Letter> letters) {
    Walk w;
    w.letters_ = std::move(letters);
    if (!w.letters_.empty()) w.base_vertex_ = letter_source(pres, w.letters_.front());
    return w;
}

VertexId Walk::slot(const GentlePresentation& pres, int i) const {
    if (i == 0) return letters_.empty() ? base_vertex_ : letter_source(pres, letters_.front());
    return letter_end(pres, letters_.at(i - 1));
}

Walk Walk::inverted(const GentlePresentation& pres) const {
    if (is_trivial()) return *this;
    std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
    for (auto& l : rev) l.inv = !l.inv;
    return from_letters(pres, std::move(rev));
}

Walk Walk::rotated(const GentlePresentation& pres, int r) const {
    if (is_trivial()) return *this;
    const int n = length();
    r = ((r % n) + n) % n;
    std::vector<Letter> rot;
    rot.reserve(n);
    for (int i = 0; i < n; ++i) rot.push_back(letters_[(r + i) % n]);
    return from_letters(pres, std::move(rot));
}

Walk Walk::subwalk(const GentlePresentation& pres, int first, int count) const {
    if (count == 0) return Walk::trivial(slot(pres, first));
    std::vector<Letter> sub(letters_.begin() + first, letters_.begin() + first + count);
    return from_letters(pres, std::move(sub));
}

std::string Walk::str(const GentlePresentation& pres) const {
    if (is_trivial()) return "1_" + pres.vertex_name(base_vertex_);
    std::ostringstream oss;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        if (it != letters_.rbegin()) oss << ' ';
        oss << pres.arrow(it->arrow).name;
        if (it->inv) oss << '-';
    }
    return oss.str();
}

bool Walk::operator<(const Walk& o) const {
    if (letters_.empty() || o.letters_.empty()) {
        if (letters_.empty() != o.letters_.empty()) return letters_.size() < o.letters_.size();
        return base_vertex_ < o.base_vertex_;
    }
    return letters_ < o.letters_;  // compared via arrow ids; ids follow input order
}

Walk concat(const GentlePresentation& pres, const Walk& left, const Walk& right) {
    if (right.is_trivial()) return left.is_trivial() ? right : left;
    if (left.is_trivial()) return right;
    std::vector<Letter> letters = right.letters();
    letters.insert(letters.end(), left.letters().begin(), left.letters().end());
    return Walk::from_letters(pres, std::move(letters));
}

static bool walk_pair_ok(const GentlePresentation& pres, Letter left, Letter right) {
    if (letter_end(pres, right) != letter_source(pres, left)) return false;
    if (left.arrow == right.arrow && left.inv != right.inv) return false;  // a a-bar
    return true;
}

bool string_pair_ok(const GentlePresentation& pres, Letter left, Letter right) {
    if (!walk_pair_ok(pres, left, right)) return false;
    if (!left.inv && !right.inv && pres.in_ideal(left.arrow, right.arrow)) return false;
    if (left.inv && right.inv && pres.in_ideal(right.arrow, left.arrow)) return false;
    return true;
}

bool is_walk(const GentlePresentation& pres, const Walk& w) {
    for (int i = 0; i + 1 < w.length(); ++i)
        if (!walk_pair_ok(pres, w.letter(i + 1), w.letter(i))) return false;
    return true;
}

bool is_string(const GentlePresentation& pres, const Walk& w) {
    for (int i = 0; i + 1 < w.length(); ++i)
        if (!string_pair_ok(pres, w.letter(i + 1), w.letter(i))) return false;
    return true;
}

bool is_band(const GentlePresentation& pres, const Walk& w) {
    const int n = w.length();
    if (n == 0) return false;
    if (!is_string(pres, w)) return false;
    if (w.end(pres) != w.source(pres)) return false;
    // Seam: the cyclic adjacency (w_1, w_n) must also be a valid string pair;
    // this subsumes w_1 != w_n-bar and makes every rotation a string.
    if (!string_pair_ok(pres, w.letter(0), w.letter(n - 1))) return false;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool power = true;
        for (int i = 0; i < n && power; ++i) power = w.letter(i) == w.letter((i + d) % n);
        if (power) return false;  // proper power
    }
    return true;
}

// Letter order: by arrow name, inverse sorting immediately after direct.
static std::vector<std::pair<std::string, bool>> letter_key(const GentlePresentation& pres, const Walk& w) {
    std::vector<std::pair<std::string, bool>> key;
    key.reserve(w.length());
    for (const Letter& l : w.letters()) key.emplace_back(pres.arrow(l.arrow).name, l.inv);
    return key;
}

Walk canonical_string(const GentlePresentation& pres, const Walk& w) {
    if (w.is_trivial()) return w;
    Walk inv = w.inverted(pres);
    return letter_key(pres, inv) < letter_key(pres, w) ? inv : w;
}

Walk canonical_band(const GentlePresentation& pres, const Walk& w) {
    Walk best = w;
    auto best_key = letter_key(pres, w);
    for (const Walk& base : {w, w.inverted(pres)}) {
        for (int r = 0; r < w.length(); ++r) {
            Walk cand = base.rotated(pres, r);
            auto key = letter_key(pres, cand);
            if (key < best_key) {
                best = cand;
                best_key = key;
            }
        }
    }
    return best;
}

std::vector<Walk> enumerate_strings(const GentlePresentation& pres, int max_len) {
    std::set<std::pair<std::vector<std::pair<std::string, bool>>, std::string>> seen;
    std::vector<Walk> result;
    auto emit = [&](const Walk& w) {
        Walk c = canonical_string(pres, w);
        auto key = std::make_pair(letter_key(pres, c), c.is_trivial() ? pres.vertex_name(c.source(pres)) : "");
        if (seen.insert(key).second) result.push_back(c);
    };
    std::vector<Walk> frontier;
    for (VertexId v = 0; v < pres.num_vertices(); ++v) {
        emit(Walk::trivial(v));
        frontier.push_back(Walk::trivial(v));
    }
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Walk> next;
        for (const Walk& w : frontier) {
            VertexId tip = w.end(pres);
            for (ArrowId a = 0; a < pres.num_arrows(); ++a) {
                for (bool inv : {false, true}) {
                    Letter l{a, inv};
                    if (letter_source(pres, l) != tip) continue;
                    if (w.length() > 0 && !string_pair_ok(pres, l, w.letter(w.length() - 1))) continue;
                    std::vector<Letter> letters = w.letters();
                    letters.push_back(l);
                    Walk longer = Walk::from_letters(pres, std::move(letters));
                    if (w.is_trivial()) {
                        // base vertex must be preserved
                        if (longer.source(pres) != w.source(pres)) continue;
                    }
                    emit(longer);
                    next.push_back(std::move(longer));
                }
            }
        }
        frontier = std::move(next);
    }
    std::stable_sort(result.begin(), result.end(), [&](const Walk& a, const Walk& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.str(pres) < b.str(pres);
    });
    return result;
}

std::vector<Walk> enumerate_bands(const GentlePresentation& pres, int max_len) {
    std::set<std::vector<std::pair<std::string, bool>>> seen;
    std::vector<Walk> result;
    for (const Walk& w : enumerate_strings(pres, max_len)) {
        // enumerate_strings returns canonical strings; re-check every band form.
        if (w.is_trivial()) continue;
        if (!is_band(pres, w)) continue;
        Walk c = canonical_band(pres, w);
        if (seen.insert(letter_key(pres, c)).second) result.push_back(c);
    }
    std::stable_sort(result.begin(), result.end(), [&](const Walk& a, const Walk& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.str(pres) < b.str(pres);
    });
    return result;
}

std::vector<int> dimension_vector(const GentlePresentation& pres, const Walk& w, bool band) {
    std::vector<int> dims(pres.num_vertices(), 0);
    const int slots = band ? w.length() : w.length() + 1;
    for (int i = 0; i < slots; ++i) dims[w.slot(pres, i)]++;
    return dims;
}

Walk parse_walk(const GentlePresentation& pres, const std::string& text) {
    std::istringstream iss(text);
    std::vector<std::string> tokens;
    for (std::string tok; iss >> tok;) tokens.push_back(tok);
    if (tokens.empty()) throw ParseError("empty walk");
    if (tokens.size() == 1 && tokens[0].rfind("1_", 0) == 0) {
        auto v = pres.find_vertex(tokens[0].substr(2));
        if (!v) throw ParseError("unknown vertex in trivial walk '" + tokens[0] + "'");
        return Walk::trivial(*v);
    }
    std::vector<Letter> letters;
    for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {  // leftmost token is w_l
        std::string name = *it;
        bool inv = false;
        if (!name.empty() && name.back() == '-') {
            inv = true;
            name.pop_back();
        }
        auto a = pres.find_arrow(name);
        if (!a) throw ParseError("unknown arrow '" + name + "'");
        letters.push_back({*a, inv});
    }
    Walk w = Walk::from_letters(pres, std::move(letters));
    if (!is_walk(pres, w)) throw ParseError("'" + text + "' is not a walk");
    return w;
}

}  // namespace gentle
