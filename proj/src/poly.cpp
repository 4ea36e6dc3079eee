#include "binv/poly.hpp"

namespace binv {

std::string to_string(const CoeffPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rat a = c;
        if (sgn(a) < 0) {
            s += first ? "-" : " - ";
            a = -a;
        } else if (!first) {
            s += " + ";
        }
        std::string cs = rat_to_string(a);
        if (m == kMonoOne) s += cs;
        else if (cs == "1") s += mono_to_string(m);
        else s += cs + "*" + mono_to_string(m);
        first = false;
    }
    return s;
}

}  // namespace binv
