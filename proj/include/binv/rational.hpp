#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace binv {

// Exact rational scalar used throughout the exact (non-modular) layer.
// Values are kept canonical (gmpxx arithmetic preserves this); code that
// builds one from a raw numerator/denominator pair must canonicalize() it
// before handing it to the library.
using Rat = mpq_class;

// Canonical text form: "num" for integers, "num/den" otherwise, den > 0.
inline std::string rat_to_string(const Rat& q) {
    Rat c(q);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

// q1/q2 if q2 != 0.
inline std::optional<Rat> rat_ratio(const Rat& q1, const Rat& q2) {
    if (q2 == 0) return std::nullopt;
    Rat r = q1 / q2;
    r.canonicalize();
    return r;
}

}  // namespace binv
