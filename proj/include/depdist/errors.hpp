#pragma once

#include <stdexcept>
#include <string>

namespace depdist {

/// Raised by quasistar_cost when (l, p, q) are not pairwise distinct.
/// Distinct from std::domain_error so grid builders can skip holes
/// without masking genuine argument errors.
class hole_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by bounds formulas for families they do not cover; callers
/// fall back to the exhaustive oracle.
class unsupported_family_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the brute-force oracle when n exceeds the configured cap.
class oracle_cap_error : public std::runtime_error {
public:
    oracle_cap_error(int n, int cap)
        : std::runtime_error("brute force refused: n=" + std::to_string(n) +
                             " exceeds oracle cap " + std::to_string(cap)),
          n_(n),
          cap_(cap) {}

    int n() const { return n_; }
    int cap() const { return cap_; }

private:
    int n_;
    int cap_;
};

}  // namespace depdist
