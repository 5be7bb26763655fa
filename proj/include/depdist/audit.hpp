#pragma once

#include <vector>

#include "depdist/convexity.hpp"
#include "depdist/cost_function.hpp"

namespace depdist {

/// Full seven-property ladder on the star landscape D(l) over 1..n.
ConvexityReport audit_star(int n, const CostFunction& g);

/// The three grid properties on the quasistar landscape, in ladder
/// order. Discrete convexity and aggregate monotonicity run on the
/// pairwise-distinct cells; local submodularity runs on the full
/// rewiring box (collision cells cost a zero-length edge 0) because
/// every l/q crossing perturbation steps through an l = q cell.
ConvexityReport audit_quasistar(int n, const CostFunction& g);

/// Full ladder on the crossing-free case via its effective star over
/// n - 1 positions.
ConvexityReport audit_planar_quasistar(int n, const CostFunction& g);

/// Full ladder on an arbitrary sequence indexed from 1.
ConvexityReport audit_sequence(const std::vector<double>& values, double tolerance);

}  // namespace depdist
