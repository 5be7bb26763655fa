#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "depdist/cost_function.hpp"
#include "depdist/free_tree.hpp"
#include "depdist/rational.hpp"

namespace depdist {

/// A linear arrangement of n vertices: a bijection from vertices
/// (0-based labels) onto positions 1..n. positions()[v] is the
/// position of vertex v.
class LinearArrangement {
public:
    explicit LinearArrangement(std::vector<int> positions);

    /// Vertex v at position v+1.
    static LinearArrangement trivial(int n);

    int n() const { return static_cast<int>(positions_.size()); }
    int position(int vertex) const;
    const std::vector<int>& positions() const { return positions_; }
    /// Inverse view: element i is the vertex placed at position i+1.
    std::vector<int> vertex_order() const;

private:
    std::vector<int> positions_;
};

/// Sum of g(|position(u) - position(v)|) over the edges of the tree.
double total_cost(const FreeTree& tree, const LinearArrangement& arr, const CostFunction& cost);
double total_cost(const FreeTree& tree, const std::vector<int>& positions,
                  const CostFunction& cost);

/// Identity-cost total as an exact integer: sum of |position gaps|.
long long total_length(const FreeTree& tree, const std::vector<int>& positions);

/// True when no two edges cross, i.e. no two edges' position intervals
/// strictly interleave (a1 < b1 < a2 < b2). Edges sharing an endpoint
/// never cross.
bool is_planar(const FreeTree& tree, const LinearArrangement& arr);
bool is_planar(const FreeTree& tree, const std::vector<int>& positions);

/// Uniform random arrangement by Fisher-Yates with rejection-sampled
/// bounded draws on mt19937_64, so the same seed gives the same
/// arrangement on every platform.
LinearArrangement random_arrangement(int n, std::mt19937_64& rng);

/// Calls fn with every positions vector of size n, in lexicographic
/// order of the vector.
void for_each_arrangement(int n, const std::function<void(const std::vector<int>&)>& fn);

struct OracleResult {
    double min = 0.0;
    double max = 0.0;
    long long argmin_count = 0;
    long long argmax_count = 0;
    /// Lexicographically first optimal positions vectors.
    std::vector<int> sample_argmin;
    std::vector<int> sample_argmax;
    long long arrangements = 0;

    std::string to_json_string() const;
};

/// Reads DEPDIST_ORACLE_CAP, falling back to 9.
int default_oracle_cap();

/// Exhaustive minimum/maximum of the arrangement cost over all n!
/// arrangements (or only crossing-free ones with planar_only). Ties
/// are grouped at the cost function's tolerance. Throws
/// oracle_cap_error when n exceeds the cap.
OracleResult brute_force(const FreeTree& tree, const CostFunction& cost, int cap,
                         bool planar_only = false);

/// Exact mean identity cost over all n! arrangements, as a fraction.
Rational average_length(const FreeTree& tree, int cap);

/// Monte Carlo estimate of that mean from `samples` random arrangements.
double sampled_average_length(const FreeTree& tree, long long samples, std::uint64_t seed);

}  // namespace depdist
