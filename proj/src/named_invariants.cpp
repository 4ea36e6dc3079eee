#include "binv/named_invariants.hpp"

#include <stdexcept>

#include "binv/recipe.hpp"

namespace binv {

namespace {

std::vector<NamedInvariant> build() {
    struct Entry { const char* name; const char* recipe; };
    static const Entry kEntries[] = {
        {"k2", "(q,q)_4"},
        {"k3", "((q,q)_2,q)_4"},
        {"k41", "((c,c)_2,(c,c)_2)_2"},
        {"k42", "(lc,lc)_4"},
        {"k43", "(c,l^3)_3"},
        {"k51", "((q,(q,q)_2)_1,c^2)_6"},
        {"k52", "((q,c^2)_2,c^2)_6"},
        {"k53", "(q,l^4)_4"},
        {"k61", "([(c,c)_2]^2,(q,q)_2)_4"},
        {"k62", "((lc,lc)_2,lc)_4"},
        {"k63", "((q,q)_2,l^4)_4"},
        {"k7", "(c^4,q^3)_12"},
    };

    std::vector<NamedInvariant> all;
    for (const Entry& s : kEntries) {
        Form f = evaluate_recipe(s.recipe);
        if (f.order != 0)
            throw std::logic_error(std::string("construction of ") + s.name +
                                   " is not an invariant");
        all.push_back({s.name, f.coeffs[0].degree(), s.recipe, f.coeffs[0]});
    }

    auto k = [&](const char* name) -> const CoeffPoly& {
        for (const auto& ni : all)
            if (ni.name == name) return ni.value;
        throw std::logic_error("missing dependency");
    };
    const CoeffPoly k2sq = k("k2") * k("k2");
    struct Combo { const char* name; const char* recipe; CoeffPoly value; };
    Combo combos[] = {
        {"j1", "k3", k("k3")},
        {"j2", "k41 + k2^2", k("k41") + k2sq},
        {"j3", "k42 + k43 - k2^2", k("k42") + k("k43") - k2sq},
        {"j4", "k51 + k52", k("k51") + k("k52")},
        {"j5", "k53", k("k53")},
        {"j6", "k61 + k62", k("k61") + k("k62")},
        {"j7", "k63", k("k63")},
        {"j8", "k7", k("k7")},
    };
    for (auto& cb : combos)
        all.push_back({cb.name, cb.value.degree(), cb.recipe, std::move(cb.value)});
    return all;
}

}  // namespace

const std::vector<NamedInvariant>& named_invariants() {
    static const std::vector<NamedInvariant> cache = build();
    return cache;
}

const NamedInvariant& named_invariant(const std::string& name) {
    for (const auto& ni : named_invariants())
        if (ni.name == name) return ni;
    throw std::out_of_range("unknown invariant name: " + name);
}

std::array<const CoeffPoly*, 8> hsop() {
    std::array<const CoeffPoly*, 8> out{};
    for (int i = 0; i < 8; ++i)
        out[i] = &named_invariant("j" + std::to_string(i + 1)).value;
    return out;
}

std::array<int, 8> hsop_degrees() {
    std::array<int, 8> d{};
    for (int i = 0; i < 8; ++i) d[i] = named_invariant("j" + std::to_string(i + 1)).degree;
    return d;
}

}  // namespace binv
