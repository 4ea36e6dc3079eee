#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>

#include "binv/generators.hpp"
#include "binv/grading.hpp"
#include "binv/json_io.hpp"
#include "binv/named_invariants.hpp"
#include "doctest.h"

using namespace binv;

namespace {

const PipelineResult& pipeline11() {
    static PipelineResult r = [] {
        PipelineOptions o;
        o.max_total_degree = 11;
        return run_pipeline(o);
    }();
    return r;
}

std::vector<GeneratorRecord> found_below(int total) {
    std::vector<GeneratorRecord> out;
    for (const auto& g : pipeline11().generators)
        if (g.total_degree < total) out.push_back(g);
    return out;
}

}  // namespace

TEST_CASE("product enumeration: base cases and multiset dedup") {
    CHECK(reducible_products({0, 0, 2}, {}).empty());

    // Degree 4 in the quartic alone: the only factorization is the square of
    // the degree-2 generator.
    auto p004 = reducible_products({0, 0, 4}, found_below(4));
    REQUIRE(p004.size() == 1);
    const CoeffPoly& k2 = named_invariant("k2").value;
    CHECK(p004.front().proportionality(k2 * k2).has_value());

    auto p243 = reducible_products({2, 4, 3}, found_below(9));
    CHECK(p243.size() == 8);
    // Thirteen products are enumerable here; their span still has rank 11.
    auto p154 = reducible_products({1, 5, 4}, found_below(10));
    CHECK(p154.size() == 13);
    for (const auto& p : p154) {
        CHECK(p.multidegree() == MultiDegree{1, 5, 4});
        CHECK(p.is_isobaric(0));
    }
}

TEST_CASE("new-generator counts at the landmark blocks") {
    auto r243 = new_generator_count({2, 4, 3}, found_below(9));
    CHECK(r243.dim == 8);
    CHECK(r243.rank == 7);
    CHECK(r243.new_count == 1);
    REQUIRE(r243.representatives.size() == 1);
    CHECK(raise_poly(r243.representatives.front()).is_zero());
    CHECK(lower_poly(r243.representatives.front()).is_zero());

    auto r154 = new_generator_count({1, 5, 4}, found_below(10));
    CHECK(r154.dim == 12);
    CHECK(r154.rank == 11);
    CHECK(r154.new_count == 1);

    auto r002 = new_generator_count({0, 0, 2}, {});
    CHECK(r002.dim == 1);
    CHECK(r002.rank == 0);
    CHECK(r002.new_count == 1);
    REQUIRE(r002.representatives.size() == 1);
    CHECK(r002.representatives.front()
              .proportionality(named_invariant("k2").value)
              .has_value());
}

TEST_CASE("a reducible span larger than the counted dimension aborts loudly") {
    // A fake record whose value is weight-0 but not an invariant: its square
    // lands in a block whose invariant dimension is zero.
    GeneratorRecord fake;
    fake.d = {2, 0, 0};
    fake.total_degree = 2;
    fake.representative = CoeffPoly::from_terms({{mono_mul(mono_var(0), mono_var(1)), Rat(1)}});
    CHECK_THROWS_AS(new_generator_count({4, 0, 0}, {fake}), std::logic_error);
}

TEST_CASE("the full search through degree 11 reproduces the published counts") {
    const auto& res = pipeline11();
    const std::vector<long long> expected = {1, 2, 4, 8, 10, 13, 11, 10, 3, 1};
    REQUIRE(res.certificate.degrees.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const auto& deg = res.certificate.degrees[i];
        CHECK(deg.total == static_cast<int>(i) + 2);
        CHECK(deg.d_i == expected[i]);
        long long sum = 0;
        for (const auto& b : deg.blocks) {
            CHECK(b.d.total() == deg.total);
            CHECK(b.d.admissible());
            CHECK(b.dim == invariant_dimension(b.d));
            CHECK(b.new_count == b.dim - static_cast<long long>(b.rank));
            CHECK(b.new_count >= 0);
            sum += b.new_count;
        }
        CHECK(sum == deg.d_i);
    }
    CHECK(res.certificate.total == 63);
    CHECK(res.generators.size() == 63);

    // Every representative is a genuine invariant of its block.
    for (const auto& g : res.generators) {
        CHECK(g.d.total() == g.total_degree);
        CHECK(g.representative.multidegree() == g.d);
        CHECK(g.representative.is_isobaric(0));
        CHECK(raise_poly(g.representative).is_zero());
        CHECK(g.provenance == "new at this multidegree");
    }
}

TEST_CASE("per-block certificates carry their prime evidence") {
    for (const auto& deg : pipeline11().certificate.degrees)
        for (const auto& b : deg.blocks) {
            if (b.dim == 0) {
                CHECK(b.cert.primes.empty());
                continue;
            }
            CHECK(!b.cert.primes.empty());
            CHECK(b.cert.agreed == b.rank);
            for (auto r : b.cert.ranks) CHECK(r <= b.rank);
            if (b.new_count > 0) CHECK(b.cert.exact_confirmed);
        }
}

TEST_CASE("modular ranks equal exact ranks on every block through degree 7") {
    for (int total = 4; total <= 7; ++total) {
        auto found = found_below(total);
        for (const auto& d : multidegrees_of_total(total)) {
            if (!d.admissible()) continue;
            auto products = reducible_products(d, found);
            if (products.empty()) continue;
            SpanRankOptions ex;
            ex.exact_confirm = true;
            auto cert = span_rank(products, d, ex);
            CHECK(cert.exact_confirmed);
        }
    }
}

TEST_CASE("results are independent of job count and pivot rule") {
    PipelineOptions a;
    a.max_total_degree = 7;
    auto ra = run_pipeline(a);

    PipelineOptions b = a;
    b.jobs = 4;
    auto rb = run_pipeline(b);
    CHECK(certificate_to_json(ra.certificate) == certificate_to_json(rb.certificate));
    REQUIRE(ra.generators.size() == rb.generators.size());
    for (std::size_t i = 0; i < ra.generators.size(); ++i)
        CHECK(ra.generators[i].representative == rb.generators[i].representative);

    PipelineOptions c = a;
    c.rule = PivotRule::LeftmostFirstRow;
    auto rc = run_pipeline(c);
    REQUIRE(rc.certificate.degrees.size() == ra.certificate.degrees.size());
    for (std::size_t i = 0; i < ra.certificate.degrees.size(); ++i) {
        const auto& da = ra.certificate.degrees[i];
        const auto& dc = rc.certificate.degrees[i];
        CHECK(da.d_i == dc.d_i);
        REQUIRE(da.blocks.size() == dc.blocks.size());
        for (std::size_t j = 0; j < da.blocks.size(); ++j) {
            CHECK(da.blocks[j].dim == dc.blocks[j].dim);
            CHECK(da.blocks[j].rank == dc.blocks[j].rank);
            CHECK(da.blocks[j].new_count == dc.blocks[j].new_count);
        }
    }
}

TEST_CASE("checkpointing writes one file per degree and resuming reproduces the run") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "binv_ckpt_test";
    fs::remove_all(dir);

    PipelineOptions w;
    w.max_total_degree = 6;
    w.checkpoint_dir = dir;
    auto partial = run_pipeline(w);
    for (int i = 2; i <= 6; ++i) CHECK(fs::exists(dir / ("degree_" + std::to_string(i) + ".json")));

    PipelineOptions r;
    r.max_total_degree = 8;
    r.resume_dir = dir;
    auto resumed = run_pipeline(r);
    PipelineOptions f;
    f.max_total_degree = 8;
    auto fresh = run_pipeline(f);
    CHECK(certificate_to_json(resumed.certificate) == certificate_to_json(fresh.certificate));
    REQUIRE(resumed.generators.size() == fresh.generators.size());
    for (std::size_t i = 0; i < fresh.generators.size(); ++i)
        CHECK(resumed.generators[i].representative == fresh.generators[i].representative);

    // A corrupted checkpoint is rejected, not silently trusted.
    auto j = read_json_file(dir / "degree_4.json");
    j["i"] = 5;
    write_json_file(dir / "degree_4.json", j);
    CHECK_THROWS_AS(run_pipeline(r), std::runtime_error);
    fs::remove_all(dir);
}

TEST_CASE("generator counts in the covariant table layout") {
    auto t = sylvester_table(pipeline11().certificate);
    CHECK(t.total() == 63);
    CHECK(t.order_slice_total(0) == 20);
    CHECK(t.order_slice_total(1) == 16);
    CHECK(t.order_slice_total(2) == 11);
    CHECK(t.order_slice_total(3) == 8);
    CHECK(t.order_slice_total(4) == 5);
    CHECK(t.order_slice_total(5) == 2);
    CHECK(t.order_slice_total(6) == 1);
    // The two cells the classical 1879 table got wrong, at their corrected values.
    CHECK(t.cell(1, 5, 4) == 1);
    CHECK(t.cell(2, 4, 3) == 1);
    CHECK(t.cell(6, 0, 3) == 1);
    CHECK(t.cell(0, 0, 1) == 0);
    CHECK(t.cell(0, 4, 3) == 3);
    CHECK(t.cell(1, 3, 2) == 3);

    auto flat = sylvester_table_csv(t);
    CHECK(flat.find("order,d_c,d_q,count\n") == 0);
    CHECK(flat.find("1,5,4,1\n") != std::string::npos);
    CHECK(flat.find("2,4,3,1\n") != std::string::npos);
    auto grid = sylvester_table_grid_csv(t);
    CHECK(grid.find("order 0\n") != std::string::npos);
    CHECK(grid.find("order 6\n") != std::string::npos);
}

TEST_CASE("pipeline option validation") {
    PipelineOptions bad;
    bad.max_total_degree = 1;
    CHECK_THROWS_AS(run_pipeline(bad), std::invalid_argument);
    bad.max_total_degree = 4;
    bad.jobs = 0;
    CHECK_THROWS_AS(run_pipeline(bad), std::invalid_argument);
    bad.jobs = 1;
    bad.primes = {12};  // not prime
    CHECK_THROWS(run_pipeline(bad));
}
