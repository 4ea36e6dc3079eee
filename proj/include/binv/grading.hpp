#pragma once

#include <stdexcept>
#include <vector>

#include "binv/monomial.hpp"

namespace binv {

// Number of monomials of multidegree d (degrees in the linear, cubic and
// quartic coefficient blocks) whose total torus weight is w.
long long weight_count(const MultiDegree& d, int w);

// Cayley-Sylvester count of linearly independent invariants of multidegree d:
// weight_count(d,0) - weight_count(d,2).
long long invariant_dimension(const MultiDegree& d);

// All multidegrees (dl,dc,dq) with dl+dc+dq = total, in lexicographic order.
std::vector<MultiDegree> multidegrees_of_total(int total);

// Coefficients d_0..d_maxdeg of the Poincare series of the invariant ring.
std::vector<long long> poincare_coeffs(int maxdeg);

// The truncated series data emitted by the CLI.
struct PoincareSeries {
    std::vector<long long> coeffs;
    std::vector<long long> numerator;
    std::vector<int> denominator_degrees;
    bool functional_equation = false;
};

struct SeriesInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Multiply the truncated series by prod_i (1 - t^{b_i}) and return the
// resulting polynomial, trimmed at its last nonzero coefficient.  The input
// must determine the product past degree sum(b_i); if any term of degree
// >= sum(b_i) survives, the series cannot have that denominator and a
// SeriesInconsistency is raised.
std::vector<long long> series_numerator(const std::vector<long long>& coeffs,
                                        const std::vector<int>& denominator_degrees);

struct FunctionalEquationReport {
    bool ok = false;
    bool degree_matches = false;   // sum(b_i) - deg a == d
    bool palindromic = false;      // a_h == sign * a_{deg a - h} for all h
    int max_degree_verified = -1;  // degree of a when the check ran
    int failing_position = -1;     // first h violating the palindromy, else -1
};

// Check P(1/t) = (-1)^(d-3) t^d P(t) for P = a(t)/prod(1-t^{b_i}), given the
// numerator coefficients of a.  Equivalent to: sum(b_i) - deg a = d together
// with a_h = (-1)^(d-3+r) a_{deg a-h}, where r counts the denominator factors.
FunctionalEquationReport functional_equation_check(
    const std::vector<long long>& numerator,
    const std::vector<int>& denominator_degrees, int d);

// Highest degree that can carry a new generator: sum(hsop_degrees) - d.
int degree_bound(const std::vector<int>& hsop_degrees, int d);

// All monomials of multidegree d and weight w, in canonical (graded
// lexicographic, descending) order.  Size equals weight_count(d, w).
std::vector<Monomial> monomial_basis(const MultiDegree& d, int w);

}  // namespace binv
