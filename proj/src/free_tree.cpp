#include "depdist/free_tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "depdist/errors.hpp"

namespace depdist {

namespace {

// Union-find over vertex labels; detects the cycle/connectivity violations.
class DisjointSet {
public:
    explicit DisjointSet(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace

const char* family_tag_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::star: return "star";
        case FamilyTag::quasistar: return "quasistar";
        case FamilyTag::path: return "path";
        case FamilyTag::bistar: return "bistar";
        case FamilyTag::balanced_bistar: return "balanced_bistar";
        case FamilyTag::caterpillar: return "caterpillar";
        case FamilyTag::other: return "other";
    }
    return "other";
}

std::optional<FamilyTag> family_tag_from_name(const std::string& name) {
    for (FamilyTag tag : {FamilyTag::star, FamilyTag::quasistar, FamilyTag::path,
                          FamilyTag::bistar, FamilyTag::balanced_bistar,
                          FamilyTag::caterpillar, FamilyTag::other}) {
        if (name == family_tag_name(tag)) return tag;
    }
    return std::nullopt;
}

bool TreeFamily::has(FamilyTag tag) const {
    return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

FreeTree::FreeTree(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::domain_error("FreeTree: n must be >= 1");
    if (static_cast<int>(edges_.size()) != n_ - 1)
        throw std::invalid_argument("FreeTree: a tree on " + std::to_string(n_) + " vertices needs " +
                                    std::to_string(n_ - 1) + " edges, got " + std::to_string(edges_.size()));

    DisjointSet ds(n_);
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("FreeTree: vertex label out of range 0.." + std::to_string(n_ - 1));
        if (u == v) throw std::invalid_argument("FreeTree: self loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("FreeTree: duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        if (!ds.unite(u, v))
            throw std::invalid_argument("FreeTree: edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        " closes a cycle");
    }
    // n-1 acyclic edges imply connectivity, but the contract names all three.
    for (int v = 1; v < n_; ++v)
        if (ds.find(v) != ds.find(0)) throw std::invalid_argument("FreeTree: not connected");

    std::sort(edges_.begin(), edges_.end());
    degrees_.assign(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++degrees_[u];
        ++degrees_[v];
    }
}

int FreeTree::degree(int v) const {
    if (v < 0 || v >= n_) throw std::domain_error("FreeTree::degree: vertex out of range");
    return degrees_[v];
}

int FreeTree::max_degree() const {
    return n_ == 1 ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

FreeTree make_star(int n) {
    if (n < 3) throw std::domain_error("make_star: n must be >= 3 (degenerate star)");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return FreeTree(n, std::move(edges));
}

FreeTree make_quasistar(int n) {
    if (n < 4) throw std::domain_error("make_quasistar: n must be >= 4");
    // Star of n-1 vertices (hub 0, leaves 1..n-2) plus vertex n-1 hung off leaf 1.
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= n - 2; ++v) edges.emplace_back(0, v);
    edges.emplace_back(1, n - 1);
    return FreeTree(n, std::move(edges));
}

FreeTree make_path(int n) {
    if (n < 2) throw std::domain_error("make_path: n must be >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return FreeTree(n, std::move(edges));
}

FreeTree make_balanced_bistar(int n) {
    if (n < 4) throw std::domain_error("make_balanced_bistar: n must be >= 4");
    std::vector<std::pair<int, int>> edges{{0, 1}};
    const int leaves = n - 2;
    const int first_share = (leaves + 1) / 2;  // hub 0 takes the extra leaf on odd splits
    for (int i = 0; i < leaves; ++i) edges.emplace_back(i < first_share ? 0 : 1, 2 + i);
    return FreeTree(n, std::move(edges));
}

FreeTree make_family(FamilyTag tag, int n) {
    switch (tag) {
        case FamilyTag::star: return make_star(n);
        case FamilyTag::quasistar: return make_quasistar(n);
        case FamilyTag::path: return make_path(n);
        case FamilyTag::balanced_bistar: return make_balanced_bistar(n);
        default: break;
    }
    throw unsupported_family_error(std::string("no generator for family ") +
                                   family_tag_name(tag));
}

FreeTree make_caterpillar(const std::vector<int>& spine_degrees) {
    const int s = static_cast<int>(spine_degrees.size());
    if (s < 1) throw std::domain_error("make_caterpillar: empty spine");

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < s; ++i) edges.emplace_back(i, i + 1);

    int next = s;
    for (int i = 0; i < s; ++i) {
        if (spine_degrees[i] < 1)
            throw std::domain_error("make_caterpillar: spine degree must be >= 1");
        const int spine_neighbors = (s == 1) ? 0 : (i == 0 || i == s - 1) ? 1 : 2;
        const int leaves = spine_degrees[i] - spine_neighbors;
        if (leaves < 0)
            throw std::domain_error("make_caterpillar: infeasible degree " +
                                    std::to_string(spine_degrees[i]) + " at spine position " +
                                    std::to_string(i));
        for (int j = 0; j < leaves; ++j) edges.emplace_back(i, next++);
    }
    if (next < 2) throw std::domain_error("make_caterpillar: degree list yields a single vertex");
    return FreeTree(next, std::move(edges));
}

Rational hubiness(const FreeTree& t) {
    long long sum_sq = 0;
    for (int k : t.degrees()) sum_sq += static_cast<long long>(k) * k;
    return Rational(sum_sq, t.n());
}

TreeFamily classify(const FreeTree& t) {
    const int n = t.n();
    const auto& deg = t.degrees();
    TreeFamily family;

    const bool is_path = t.max_degree() <= 2;
    const bool is_star = n >= 3 && t.max_degree() == n - 1;

    bool is_quasistar = false;
    if (n >= 4) {
        int ones = 0;
        std::vector<int> rest;
        for (int k : deg) {
            if (k == 1)
                ++ones;
            else
                rest.push_back(k);
        }
        std::sort(rest.begin(), rest.end());
        is_quasistar = ones == n - 2 && rest == std::vector<int>{2, n - 2};
    }

    // Non-leaf vertices: a bistar has exactly two and they are adjacent;
    // a caterpillar's non-leaves form a path (possibly empty or a point).
    std::vector<int> internal;
    for (int v = 0; v < n; ++v)
        if (deg[v] >= 2) internal.push_back(v);

    bool is_bistar = false;
    bool balanced = false;
    if (internal.size() == 2) {
        const auto& edges = t.edges();
        const std::pair<int, int> joint{internal[0], internal[1]};
        is_bistar = std::find(edges.begin(), edges.end(), joint) != edges.end();
        balanced = is_bistar && std::abs(deg[internal[0]] - deg[internal[1]]) <= 1;
    }

    bool is_caterpillar = true;
    if (internal.size() > 1) {
        std::vector<int> internal_degree(n, 0);
        for (const auto& [u, v] : t.edges())
            if (deg[u] >= 2 && deg[v] >= 2) {
                ++internal_degree[u];
                ++internal_degree[v];
            }
        for (int v : internal)
            if (internal_degree[v] > 2) is_caterpillar = false;
    }

    if (is_star) family.tags.push_back(FamilyTag::star);
    if (is_quasistar) family.tags.push_back(FamilyTag::quasistar);
    if (is_path) family.tags.push_back(FamilyTag::path);
    if (is_bistar) family.tags.push_back(FamilyTag::bistar);
    if (balanced) family.tags.push_back(FamilyTag::balanced_bistar);
    if (is_caterpillar) family.tags.push_back(FamilyTag::caterpillar);
    if (family.tags.empty()) family.tags.push_back(FamilyTag::other);

    if (is_star || is_quasistar) {
        // Star hub has degree n-1, quasistar hub n-2. For the n=4 quasistar the
        // two degree-2 vertices are interchangeable; take the smallest label.
        const int want = is_star ? n - 1 : n - 2;
        for (int v = 0; v < n; ++v)
            if (deg[v] == want) {
                family.hub = v;
                break;
            }
    } else if (is_bistar) {
        family.hub = deg[internal[0]] >= deg[internal[1]] ? internal[0] : internal[1];
    }
    return family;
}

std::string to_edge_list(const FreeTree& t) {
    std::ostringstream out;
    for (const auto& [u, v] : t.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

FreeTree parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> labels;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size())
            throw std::invalid_argument("parse_edge_list: not a vertex label: '" + token + "'");
        labels.push_back(value);
    }
    if (labels.size() % 2 != 0)
        throw std::invalid_argument("parse_edge_list: dangling vertex label at end of input");
    std::vector<std::pair<int, int>> edges;
    int max_label = 0;
    for (std::size_t i = 0; i + 1 < labels.size(); i += 2) {
        edges.emplace_back(labels[i], labels[i + 1]);
        max_label = std::max({max_label, labels[i], labels[i + 1]});
    }
    const int n = edges.empty() ? 1 : max_label + 1;
    return FreeTree(n, std::move(edges));
}

std::string to_json_string(const FreeTree& t) {
    nlohmann::json j;
    j["n"] = t.n();
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : t.edges()) edges.push_back({u, v});
    const TreeFamily family = classify(t);
    auto& tags = j["tags"] = nlohmann::json::array();
    for (FamilyTag tag : family.tags) tags.push_back(family_tag_name(tag));
    if (family.hub) j["hub"] = *family.hub;
    return j.dump(2);
}

}  // namespace depdist
