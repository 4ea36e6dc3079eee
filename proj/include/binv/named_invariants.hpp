#pragma once

#include <array>
#include <string>
#include <vector>

#include "binv/poly.hpp"

namespace binv {

// One member of the distinguished set of invariants: the twelve transvectant
// constructions k2..k7 and the eight parameter-system combinations j1..j8.
struct NamedInvariant {
    std::string name;
    int degree = 0;         // total degree in the coefficient variables
    std::string recipe;     // construction text; for j's, in terms of k names
    CoeffPoly value;
};

// All twenty, in the fixed order k2, k3, k41, k42, k43, k51, k52, k53,
// k61, k62, k63, k7, j1, ..., j8.  Built once and cached.
const std::vector<NamedInvariant>& named_invariants();

const NamedInvariant& named_invariant(const std::string& name);  // throws std::out_of_range

// The homogeneous system of parameters j1..j8 and its degrees 3,4,4,5,5,6,6,7.
std::array<const CoeffPoly*, 8> hsop();
std::array<int, 8> hsop_degrees();

}  // namespace binv
