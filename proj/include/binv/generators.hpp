#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "binv/sparse_linalg.hpp"

namespace binv {

// A minimal generator discovered by the degree-by-degree search.
struct GeneratorRecord {
    MultiDegree d;
    int total_degree = 0;
    CoeffPoly representative;  // echelon kernel vector outside the reducible span
    std::string provenance = "new at this multidegree";
};

// Per-multidegree outcome of the span comparison.
struct BlockReport {
    MultiDegree d;
    long long dim = 0;        // invariant_dimension(d)
    std::size_t rank = 0;     // rank of the reducible-product span
    long long new_count = 0;  // dim - rank
    RankCertificate cert;
};

struct DegreeReport {
    int total = 0;
    std::vector<BlockReport> blocks;  // admissible multidegrees, enumeration order
    long long d_i = 0;                // sum of new_count over blocks
};

struct GeneratorCertificate {
    std::vector<DegreeReport> degrees;  // totals 2..max, in order
    long long total = 0;                // grand total of new generators
};

// All products of at least two found generators whose multidegrees sum to d,
// expanded exactly; one product per multiset of factors.  `found` must hold
// every generator of total degree < total(d).
std::vector<CoeffPoly> reducible_products(const MultiDegree& d,
                                          const std::vector<GeneratorRecord>& found);

struct NewGeneratorResult {
    long long dim = 0;
    std::size_t rank = 0;
    long long new_count = 0;
    std::vector<CoeffPoly> representatives;
    RankCertificate cert;
};

// Compare the invariant space at d against the span of reducible products.
// Throws std::logic_error if the rank exceeds the dimension count (a
// convention bug upstream, never a data condition).
NewGeneratorResult new_generator_count(const MultiDegree& d,
                                       const std::vector<GeneratorRecord>& found);

struct PipelineOptions {
    int max_total_degree = 14;          // desk mode default; 29 = full mode
    std::vector<std::uint64_t> primes;  // empty = default_primes()
    int jobs = 1;
    PivotRule rule = PivotRule::LeftmostMinFill;
    std::filesystem::path checkpoint_dir;  // empty = no checkpoints written
    std::filesystem::path resume_dir;      // empty = fresh run
};

struct PipelineResult {
    GeneratorCertificate certificate;
    std::vector<GeneratorRecord> generators;  // discovery order
};

// The degree-by-degree search over all admissible multidegrees of total
// degree 2..max.  Blocks within one total degree run concurrently; the
// result is independent of the job count.
PipelineResult run_pipeline(const PipelineOptions& opt = {});

// Generator counts in the covariant layout: a generator of multidegree
// (d_l, d_c, d_q) is a covariant of order d_l and degree (d_c, d_q).
struct SylvesterTable {
    std::map<std::array<int, 3>, long long> cells;  // (order, d_c, d_q) -> count
    long long cell(int order, int dc, int dq) const;
    long long order_slice_total(int order) const;
    long long total() const;
};

SylvesterTable sylvester_table(const GeneratorCertificate& cert);

// Flat CSV (order,d_c,d_q,count) and the classical grid layout, one block
// of rows per order with cubic degree down and quartic degree across.
std::string sylvester_table_csv(const SylvesterTable& t);
std::string sylvester_table_grid_csv(const SylvesterTable& t);

}  // namespace binv
