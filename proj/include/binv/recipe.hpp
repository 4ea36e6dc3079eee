#pragma once

#include <memory>
#include <string>
#include <vector>

#include "binv/form.hpp"

namespace binv {

// Raised for malformed recipe text or for recipes that cannot be evaluated
// (mismatched orders in a sum, transvectant index out of range, ...).
struct RecipeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression language for building covariants from the ground forms:
//   atoms        l, c, q
//   scalars      rational literals like 3 or -5/2
//   product      juxtaposition: lc, 2q^3
//   power        E^n
//   transvectant (E1,E2)_p
//   grouping     (E) and [E]
//   sums         E1 + E2, E1 - E2, unary minus
struct Recipe {
    enum class Kind { Atom, Scalar, Product, Power, Transvectant, Sum };
    Kind kind = Kind::Scalar;
    char atom = 0;                                 // Atom: 'l', 'c' or 'q'
    Rat scalar = 0;                                // Scalar
    int index = 0;                                 // Power exponent / transvectant p
    std::vector<int> signs;                        // Sum: +1 / -1 per child
    std::vector<std::shared_ptr<const Recipe>> children;
};

Recipe parse_recipe(const std::string& text);
std::string recipe_to_string(const Recipe& r);

Form evaluate_recipe(const Recipe& r);
Form evaluate_recipe(const std::string& text);

}  // namespace binv
