#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "depdist/rational.hpp"

namespace depdist {

enum class FamilyTag {
    star,
    quasistar,
    path,
    bistar,
    balanced_bistar,
    caterpillar,
    other,
};

const char* family_tag_name(FamilyTag tag);
std::optional<FamilyTag> family_tag_from_name(const std::string& name);

/// All family tags that apply to a tree, plus the hub when one is defined
/// (star, quasistar and bistar members). Tags are kept in enum order.
struct TreeFamily {
    std::vector<FamilyTag> tags;
    std::optional<int> hub;

    bool has(FamilyTag tag) const;
};

/// Undirected labelled tree on vertices 0..n-1. Construction validates the
/// full invariant set: exactly n-1 edges, connected, acyclic, labels in
/// range, no self loops or duplicates. Immutable afterwards.
class FreeTree {
public:
    FreeTree(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    /// Edges normalized to (min,max) and sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int v) const;
    int max_degree() const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degrees_;
};

FreeTree make_star(int n);             // n >= 3, hub is vertex 0
FreeTree make_quasistar(int n);        // n >= 4, hub 0, degree-2 vertex 1, extra leaf n-1
FreeTree make_path(int n);             // n >= 2, path 0-1-...-(n-1)
FreeTree make_balanced_bistar(int n);  // n >= 4, hubs 0 and 1

/// The (tag, n) member for the four generator-backed families above;
/// other tags throw unsupported_family_error.
FreeTree make_family(FamilyTag tag, int n);

/// Caterpillar from prescribed spine degrees. Spine vertices 0..s-1 form a
/// path; spine vertex i receives leaves until its degree is spine_degrees[i].
/// Degree lists that cannot be met (interior degree < 2, endpoint degree < 1)
/// are rejected.
FreeTree make_caterpillar(const std::vector<int>& spine_degrees);

/// Second moment of degree about zero, (1/n) * sum k_i^2, exact.
Rational hubiness(const FreeTree& t);

TreeFamily classify(const FreeTree& t);

/// Edge-list text form, one "u v" line per edge.
std::string to_edge_list(const FreeTree& t);
FreeTree parse_edge_list(const std::string& text);

/// JSON object {n, edges, tags[, hub]}.
std::string to_json_string(const FreeTree& t);

}  // namespace depdist
