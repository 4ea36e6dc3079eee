#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "binv/poly.hpp"

namespace binv {

// A rational point of the linear-cubic-quartic space, coefficients in the
// binomial convention:
//   l = l0 x + l1 y
//   c = c0 x^3 + 3 c1 x^2 y + 3 c2 x y^2 + c3 y^3
//   q = q0 x^4 + 4 q1 x^3 y + 6 q2 x^2 y^2 + 4 q3 x y^3 + q4 y^4
struct ConcretePoint {
    std::array<Rat, 2> l{};
    std::array<Rat, 4> c{};
    std::array<Rat, 5> q{};

    // The point as an assignment to the 11 coefficient variables.
    std::array<Rat, kNumVars> coords() const;
    bool operator==(const ConcretePoint&) const = default;
};

// Exact nullcone membership:
//   l != 0: l^2 divides c and l^3 divides q;
//   l == 0: c and q share a root (over the algebraic closure) of
//           multiplicity >= 2 in c and >= 3 in q.
// Vanishing components impose no condition.  Decided by exact division and
// univariate gcds of the dehomogenizations on both charts.
bool is_nullform(const ConcretePoint& p);

// Values of the twenty named invariants at p, in named_invariants() order.
std::vector<std::pair<std::string, Rat>> evaluate_invariants(const ConcretePoint& p);

// One checked step of a case analysis.  `relation` is one of:
//   "proportional": computed == scalar * claimed with a nonzero scalar;
//   "divides":      claimed divides computed exactly;
//   "coprime":      gcd(claimed, computed) is a nonzero constant.
struct CaseStep {
    std::string description;
    std::string relation = "proportional";
    CoeffPoly claimed;
    CoeffPoly computed;
    Rat scalar;  // proportional steps only; 0 otherwise
    bool pass = false;
};

struct CaseReport {
    int case_id = 0;
    std::vector<CaseStep> steps;
    bool pass = false;  // conjunction of the steps
};

// Replays the three-case specialization argument that the common vanishing
// locus of j1..j8 is exactly the nullcone: each asserted specialization is
// recomputed symbolically and compared with the claimed polynomial up to a
// nonzero rational scalar, and the final pair is checked coprime.
std::vector<CaseReport> verify_case_identities();

// Exact Jacobian ranks of (j1..j8) with respect to the 11 coefficient
// variables at seeded random rational points.  Rank 8 at any single point
// certifies that the eight invariants are algebraically independent; all
// ranks below 8 is merely inconclusive.
struct IndependenceReport {
    std::uint64_t seed = 0;
    std::vector<ConcretePoint> points;
    std::vector<int> ranks;  // parallel to points
    bool independent = false;
};

// Throws std::invalid_argument unless sample_count >= 1.
IndependenceReport independence_evidence(int sample_count, std::uint64_t seed);

}  // namespace binv
