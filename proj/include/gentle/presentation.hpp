#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

/* Bound quiver presentations KQ/I of gentle algebras.
 *
 * Convention used throughout the library: paths compose right to left.
 * A path p = a_n ... a_1 applies a_1 first, so s(p) = s(a_1) and
 * e(p) = e(a_n).  A relation pair (b, a) means the length-two path
 * ba lies in I, i.e. "a first, then b" is zero.
 */

namespace gentle {

using VertexId = int;
using ArrowId = int;

struct Arrow {
    std::string name;
    VertexId source = -1;
    VertexId target = -1;
};

struct GentlenessViolation {
    int clause = 0;  // 1..4 per the gentle axioms, 0 for structural errors
    std::string message;
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string what, std::vector<GentlenessViolation> violations)
        : std::runtime_error(std::move(what)), violations(std::move(violations)) {}
    std::vector<GentlenessViolation> violations;
};

class GentlePresentation {
public:
    GentlePresentation(std::vector<std::string> vertex_names, std::vector<Arrow> arrows,
                       std::vector<std::pair<ArrowId, ArrowId>> relations);

    // Validates and throws ValidationError on any gentleness violation.
    static GentlePresentation validated(std::vector<std::string> vertex_names,
                                        std::vector<Arrow> arrows,
                                        std::vector<std::pair<ArrowId, ArrowId>> relations);

    int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }

    const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
    const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<std::pair<ArrowId, ArrowId>>& relations() const { return relations_; }

    std::optional<VertexId> find_vertex(const std::string& name) const;
    std::optional<ArrowId> find_arrow(const std::string& name) const;

    // ba in I?  (apply a, then b; requires e(a) == s(b) to be meaningful)
    bool in_ideal(ArrowId b, ArrowId a) const;

    // Composability without and with a relation, in each direction.
    // next_*: arrows b with s(b) == e(a); prev_*: arrows c with e(c) == s(a).
    std::optional<ArrowId> next_nonzero(ArrowId a) const { return opt(next_nonzero_[a]); }
    std::optional<ArrowId> next_relation(ArrowId a) const { return opt(next_relation_[a]); }
    std::optional<ArrowId> prev_nonzero(ArrowId a) const { return opt(prev_nonzero_[a]); }
    std::optional<ArrowId> prev_relation(ArrowId a) const { return opt(prev_relation_[a]); }

    const std::vector<ArrowId>& arrows_from(VertexId v) const { return out_[v]; }
    const std::vector<ArrowId>& arrows_to(VertexId v) const { return in_[v]; }

    // Checks all gentle axioms (1)-(4); empty result means valid.
    std::vector<GentlenessViolation> check_gentleness() const;

private:
    static constexpr int kNone = -1;
    static std::optional<ArrowId> opt(int x) { return x == kNone ? std::nullopt : std::optional<ArrowId>(x); }

    std::vector<std::string> vertex_names_;
    std::vector<Arrow> arrows_;
    std::vector<std::pair<ArrowId, ArrowId>> relations_;
    std::vector<std::vector<bool>> rel_;
    std::vector<std::vector<ArrowId>> out_, in_;
    std::vector<int> next_nonzero_, next_relation_, prev_nonzero_, prev_relation_;
};

/* A path in KQ/I: either zero, or a (possibly trivial) nonzero path.
 * Arrows are stored in application order: arrows[0] is applied first,
 * i.e. the rightmost factor of the word a_n ... a_1.
 */
class Path {
public:
    Path() = default;
    static Path zero() { Path p; p.is_zero_ = true; return p; }
    static Path trivial(VertexId x) { Path p; p.vertex_ = x; return p; }
    static Path of_arrow(const GentlePresentation& pres, ArrowId a);
    // Builds a_k...a_1 from application order [a_1, ..., a_k]; zero if a factor is in I.
    static Path from_arrows(const GentlePresentation& pres, const std::vector<ArrowId>& arrows_applied_first_to_last);

    bool is_zero() const { return is_zero_; }
    bool is_trivial() const { return !is_zero_ && arrows_.empty(); }
    int length() const { return static_cast<int>(arrows_.size()); }
    const std::vector<ArrowId>& arrows() const { return arrows_; }

    VertexId source(const GentlePresentation& pres) const;
    VertexId target(const GentlePresentation& pres) const;

    std::string str(const GentlePresentation& pres) const;

    bool operator==(const Path& o) const {
        return is_zero_ == o.is_zero_ && vertex_ == o.vertex_ && arrows_ == o.arrows_;
    }

private:
    bool is_zero_ = false;
    VertexId vertex_ = -1;  // for trivial paths
    std::vector<ArrowId> arrows_;
    friend Path compose_modulo_I(const GentlePresentation&, const Path&, const Path&);
};

// pq modulo I: q applied first.  Throws std::invalid_argument if endpoints mismatch.
Path compose_modulo_I(const GentlePresentation& pres, const Path& p, const Path& q);

// All nonzero paths of the algebra (finitely many; admissibility is validated).
std::vector<Path> all_nonzero_paths(const GentlePresentation& pres);

// Longest nonzero path p with s(p) = x whose first applied arrow is `first`,
// extended greedily (the extension is unique in a gentle algebra).
Path maximal_path_from(const GentlePresentation& pres, ArrowId first);

}  // namespace gentle
