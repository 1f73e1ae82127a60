#include "gentle/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gentle {

GentlePresentation::GentlePresentation(std::vector<std::string> vertex_names,
                                       std::vector<Arrow> arrows,
                                       std::vector<std::pair<ArrowId, ArrowId>> relations)
    : vertex_names_(std::move(vertex_names)),
      arrows_(std::move(arrows)),
      relations_(std::move(relations)) {
    const int nv = num_vertices();
    const int na = num_arrows();
    rel_.assign(na, std::vector<bool>(na, false));
    for (auto [b, a] : relations_) {
        if (b < 0 || b >= na || a < 0 || a >= na) throw ParseError("relation references unknown arrow");
        rel_[b][a] = true;
    }
    out_.assign(nv, {});
    in_.assign(nv, {});
    for (int a = 0; a < na; ++a) {
        out_[arrows_[a].source].push_back(a);
        in_[arrows_[a].target].push_back(a);
    }
    next_nonzero_.assign(na, kNone);
    next_relation_.assign(na, kNone);
    prev_nonzero_.assign(na, kNone);
    prev_relation_.assign(na, kNone);
    for (int a = 0; a < na; ++a) {
        for (ArrowId b : out_[arrows_[a].target]) {
            (rel_[b][a] ? next_relation_[a] : next_nonzero_[a]) = b;
        }
        for (ArrowId c : in_[arrows_[a].source]) {
            (rel_[a][c] ? prev_relation_[a] : prev_nonzero_[a]) = c;
        }
    }
}

GentlePresentation GentlePresentation::validated(std::vector<std::string> vertex_names,
                                                 std::vector<Arrow> arrows,
                                                 std::vector<std::pair<ArrowId, ArrowId>> relations) {
    GentlePresentation pres(std::move(vertex_names), std::move(arrows), std::move(relations));
    auto violations = pres.check_gentleness();
    if (!violations.empty()) {
        std::ostringstream oss;
        oss << "presentation is not gentle (" << violations.size() << " violation(s)); first: "
            << violations.front().message;
        throw ValidationError(oss.str(), std::move(violations));
    }
    return pres;
}

std::optional<VertexId> GentlePresentation::find_vertex(const std::string& name) const {
    for (int v = 0; v < num_vertices(); ++v)
        if (vertex_names_[v] == name) return v;
    return std::nullopt;
}

std::optional<ArrowId> GentlePresentation::find_arrow(const std::string& name) const {
    for (int a = 0; a < num_arrows(); ++a)
        if (arrows_[a].name == name) return a;
    return std::nullopt;
}

bool GentlePresentation::in_ideal(ArrowId b, ArrowId a) const { return rel_.at(b).at(a); }

std::vector<GentlenessViolation> GentlePresentation::check_gentleness() const {
    std::vector<GentlenessViolation> out;
    auto add = [&out](int clause, const std::string& msg) { out.push_back({clause, msg}); };

    std::set<std::string> seen_vertices, seen_arrows;
    for (const auto& n : vertex_names_)
        if (!seen_vertices.insert(n).second) add(0, "duplicate vertex name '" + n + "'");
    for (const auto& a : arrows_)
        if (!seen_arrows.insert(a.name).second) add(0, "duplicate arrow name '" + a.name + "'");

    for (auto [b, a] : relations_) {
        if (arrows_[a].target != arrows_[b].source)
            add(4, "relation (" + arrows_[b].name + "," + arrows_[a].name + ") is not composable: e(" +
                       arrows_[a].name + ") != s(" + arrows_[b].name + ")");
    }
    {
        std::set<std::pair<ArrowId, ArrowId>> seen;
        for (auto r : relations_)
            if (!seen.insert(r).second)
                add(4, "duplicate relation (" + arrows_[r.first].name + "," + arrows_[r.second].name + ")");
    }

    for (int v = 0; v < num_vertices(); ++v) {
        if (out_[v].size() > 2)
            add(1, "more than two arrows start at vertex '" + vertex_names_[v] + "'");
        if (in_[v].size() > 2)
            add(1, "more than two arrows end at vertex '" + vertex_names_[v] + "'");
    }

    for (int a = 0; a < num_arrows(); ++a) {
        int nz = 0, rl = 0;
        for (ArrowId b : out_[arrows_[a].target]) (rel_[b][a] ? rl : nz)++;
        if (nz > 1) add(2, "arrow '" + arrows_[a].name + "' has two continuations b with ba not in I");
        if (rl > 1) add(3, "arrow '" + arrows_[a].name + "' has two continuations b with ba in I");
        nz = rl = 0;
        for (ArrowId c : in_[arrows_[a].source]) (rel_[a][c] ? rl : nz)++;
        if (nz > 1) add(2, "arrow '" + arrows_[a].name + "' has two precursors c with ac not in I");
        if (rl > 1) add(3, "arrow '" + arrows_[a].name + "' has two precursors c with ac in I");
    }

    // Admissibility: with only length-two generators, I is admissible iff the
    // "composes to a nonzero path" graph on arrows is acyclic.
    {
        const int na = num_arrows();
        std::vector<int> state(na, 0);  // 0 unvisited, 1 on stack, 2 done
        std::vector<int> stack;
        for (int root = 0; root < na && out.empty(); ++root) {
            if (state[root]) continue;
            stack.push_back(root);
            while (!stack.empty()) {
                int a = stack.back();
                if (state[a] == 0) {
                    state[a] = 1;
                    if (auto b = next_nonzero(a)) {
                        if (state[*b] == 1) {
                            add(4, "ideal is not admissible: arrows cycle through '" + arrows_[a].name +
                                       "' -> '" + arrows_[*b].name + "' without relations");
                            break;
                        }
                        if (state[*b] == 0) { stack.push_back(*b); continue; }
                    }
                }
                state[a] = 2;
                stack.pop_back();
            }
        }
    }
    return out;
}

Path Path::of_arrow(const GentlePresentation&, ArrowId a) {
    Path p;
    p.arrows_ = {a};
    return p;
}

Path Path::from_arrows(const GentlePresentation& pres, const std::vector<ArrowId>& arrows) {
    Path p;
    for (size_t i = 0; i + 1 < arrows.size(); ++i) {
        if (pres.arrow(arrows[i]).target != pres.arrow(arrows[i + 1]).source)
            throw std::invalid_argument("path arrows are not composable");
        if (pres.in_ideal(arrows[i + 1], arrows[i])) return Path::zero();
    }
    p.arrows_ = arrows;
    if (!arrows.empty()) p.vertex_ = -1;
    return p;
}

VertexId Path::source(const GentlePresentation& pres) const {
    if (is_zero_) throw std::invalid_argument("zero path has no source");
    return arrows_.empty() ? vertex_ : pres.arrow(arrows_.front()).source;
}

VertexId Path::target(const GentlePresentation& pres) const {
    if (is_zero_) throw std::invalid_argument("zero path has no target");
    return arrows_.empty() ? vertex_ : pres.arrow(arrows_.back()).target;
}

std::string Path::str(const GentlePresentation& pres) const {
    if (is_zero_) return "0";
    if (arrows_.empty()) return "e_" + pres.vertex_name(vertex_);
    std::string s;
    for (auto it = arrows_.rbegin(); it != arrows_.rend(); ++it) s += pres.arrow(*it).name;
    return s;
}

Path compose_modulo_I(const GentlePresentation& pres, const Path& p, const Path& q) {
    if (p.is_zero() || q.is_zero()) return Path::zero();
    if (q.target(pres) != p.source(pres))
        throw std::invalid_argument("compose_modulo_I: e(q) != s(p)");
    if (q.is_trivial()) return p;
    if (p.is_trivial()) return q;
    if (pres.in_ideal(p.arrows().front(), q.arrows().back())) return Path::zero();
    Path r;
    r.arrows_ = q.arrows();
    r.arrows_.insert(r.arrows_.end(), p.arrows().begin(), p.arrows().end());
    return r;
}

std::vector<Path> all_nonzero_paths(const GentlePresentation& pres) {
    std::vector<Path> result;
    for (VertexId v = 0; v < pres.num_vertices(); ++v) result.push_back(Path::trivial(v));
    // Nonzero paths chain along next_nonzero, which is acyclic for a valid presentation.
    std::vector<std::vector<ArrowId>> frontier;
    for (ArrowId a = 0; a < pres.num_arrows(); ++a) frontier.push_back({a});
    while (!frontier.empty()) {
        std::vector<std::vector<ArrowId>> next;
        for (auto& arrows : frontier) {
            result.push_back(Path::from_arrows(pres, arrows));
            if (auto b = pres.next_nonzero(arrows.back())) {
                auto longer = arrows;
                longer.push_back(*b);
                next.push_back(std::move(longer));
            }
        }
        frontier = std::move(next);
    }
    return result;
}

Path maximal_path_from(const GentlePresentation& pres, ArrowId first) {
    std::vector<ArrowId> arrows = {first};
    while (auto b = pres.next_nonzero(arrows.back())) arrows.push_back(*b);
    return Path::from_arrows(pres, arrows);
}

}  // namespace gentle
