#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binv/form.hpp"
#include "binv/named_invariants.hpp"

using namespace binv;

namespace {

// Fixed evaluation point: (c0,c1, a0..a3, b0..b4).
std::array<Rat, kNumVars> probe() {
    return {Rat(1), Rat(2), Rat(1), Rat(-1), Rat(0), Rat(2),
            Rat(3), Rat(0), Rat(1), Rat(-1), Rat(1)};
}

}  // namespace

TEST_CASE("the catalogue holds all twenty invariants with the right degrees") {
    const auto& all = named_invariants();
    REQUIRE(all.size() == 20);
    const char* names[] = {"k2", "k3", "k41", "k42", "k43", "k51", "k52", "k53",
                           "k61", "k62", "k63", "k7",  "j1",  "j2",  "j3",  "j4",
                           "j5",  "j6",  "j7",  "j8"};
    int degrees[] = {2, 3, 4, 4, 4, 5, 5, 5, 6, 6, 6, 7, 3, 4, 4, 5, 5, 6, 6, 7};
    for (int i = 0; i < 20; ++i) {
        CHECK(all[i].name == names[i]);
        CHECK(all[i].degree == degrees[i]);
        CHECK_FALSE(all[i].value.is_zero());
        CHECK(all[i].value.is_isobaric(0));
    }
    CHECK(hsop_degrees() == std::array<int, 8>{3, 4, 4, 5, 5, 6, 6, 7});
    CHECK_THROWS_AS(named_invariant("k99"), std::out_of_range);
}

TEST_CASE("multidegrees of the transvectant constructions") {
    struct Row { const char* name; MultiDegree d; };
    for (const Row& r : std::initializer_list<Row>{
             {"k2", {0, 0, 2}}, {"k3", {0, 0, 3}}, {"k41", {0, 4, 0}},
             {"k42", {2, 2, 0}}, {"k43", {3, 1, 0}}, {"k51", {0, 2, 3}},
             {"k52", {0, 4, 1}}, {"k53", {4, 0, 1}}, {"k61", {0, 4, 2}},
             {"k62", {3, 3, 0}}, {"k63", {4, 0, 2}}, {"k7", {0, 4, 3}}}) {
        auto d = named_invariant(r.name).value.multidegree();
        REQUIRE_MESSAGE(d.has_value(), r.name);
        CHECK_MESSAGE(*d == r.d, r.name);
    }
}

TEST_CASE("values at a fixed probe point") {
    auto x = probe();
    struct Row { const char* name; Rat v; };
    for (const Row& r : std::initializer_list<Row>{
             {"k2", Rat(12)},      {"k3", Rat(-6)},        {"k41", Rat(8)},
             {"k42", Rat(15)},     {"k43", Rat(18)},       {"k51", Rat(-58)},
             {"k52", Rat(918, 25)},{"k53", Rat(81)},       {"k61", Rat(16)},
             {"k62", Rat(-39, 2)}, {"k63", Rat(184)},      {"k7", Rat(108846, 385)},
             {"j1", Rat(-6)},      {"j2", Rat(152)},       {"j3", Rat(-111)},
             {"j4", Rat(-532, 25)},{"j5", Rat(81)},        {"j6", Rat(-7, 2)},
             {"j7", Rat(184)},     {"j8", Rat(108846, 385)}}) {
        CHECK_MESSAGE(named_invariant(r.name).value.evaluate(x) == r.v, r.name);
    }
}

TEST_CASE("every catalogue entry is fixed by both unipotent one-parameter subgroups") {
    for (const auto& ni : named_invariants()) {
        CAPTURE(ni.name);
        CHECK(apply_group_element(ni.value, unipotent_lower_t()) == lift_to_t(ni.value));
        CHECK(apply_group_element(ni.value, unipotent_upper_t()) == lift_to_t(ni.value));
    }
}

TEST_CASE("parameter system wiring") {
    auto js = hsop();
    CHECK(*js[0] == named_invariant("k3").value);
    CoeffPoly k2sq = named_invariant("k2").value * named_invariant("k2").value;
    CHECK(*js[1] == named_invariant("k41").value + k2sq);
    CHECK(*js[2] == named_invariant("k42").value + named_invariant("k43").value - k2sq);
    CHECK(*js[4] == named_invariant("k53").value);
    CHECK(*js[7] == named_invariant("k7").value);
}
