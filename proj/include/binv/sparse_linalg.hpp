#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "binv/grading.hpp"
#include "binv/modp.hpp"
#include "binv/poly.hpp"

namespace binv {

// Sparse integer matrix as row-major triplets; no zeros, no duplicates.
struct SparseMatrix {
    std::size_t rows = 0, cols = 0;
    struct Entry {
        std::uint32_t row, col;
        long long value;
    };
    std::vector<Entry> entries;  // sorted by (row, col)
};

SparseMatrix transpose(const SparseMatrix& a);

// The infinitesimal raising operator restricted to one multidegree block:
// row i holds the image of the weight-0 monomial domain[i], written in the
// basis of monomials of weight -2 (the weight reached by one raising step).
// The operator is defined by the substitution (x,y) -> (x, y+tx): the image
// of a monomial is the t-linear term after transforming the form coefficients.
struct RaisingMatrix {
    MultiDegree d;
    std::vector<Monomial> domain;  // weight 0, canonical order
    std::vector<Monomial> image;   // weight -2, canonical order
    SparseMatrix m;                // rows = domain.size(), cols = image.size()
};

RaisingMatrix raising_matrix(const MultiDegree& d);

// The same derivation applied symbolically to a polynomial (and the opposite,
// lowering direction from (x,y) -> (x+ty, y), used for cross-checks).
CoeffPoly raise_poly(const CoeffPoly& f);
CoeffPoly lower_poly(const CoeffPoly& f);

// Reduced-echelon basis of the kernel of the raising operator on block d:
// the invariants of multidegree d, exactly over the rationals.  Basis vectors
// are normalized to 1 at their free column and verified by exact
// multiplication against the raising matrix.  Size = invariant_dimension(d).
std::vector<CoeffPoly> invariant_basis(const MultiDegree& d);

// Outcome of a modular (optionally exactly confirmed) rank computation.
struct RankCertificate {
    std::vector<std::uint64_t> primes;
    std::vector<std::size_t> ranks;  // parallel to primes
    std::size_t agreed = 0;          // max over ranks (modular rank never exceeds true rank)
    bool primes_disagreed = false;
    bool exact_confirmed = false;
    std::string note;
};

enum class PivotRule {
    LeftmostMinFill,   // leftmost column; on collision keep the sparser row
    LeftmostFirstRow,  // leftmost column; first row to claim a column keeps it
};

struct SpanRankOptions {
    std::vector<std::uint64_t> primes;  // empty = default_primes()
    std::size_t early_stop = static_cast<std::size_t>(-1);
    bool exact_confirm = false;
    PivotRule rule = PivotRule::LeftmostMinFill;
};

// Rank of the span of weight-0 vectors of multidegree d, in the weight-0
// monomial coordinates.  Modular with the configured primes; a disagreement
// is flagged and one extension prime is drawn (never silently resolved).
RankCertificate span_rank(const std::vector<CoeffPoly>& vectors, const MultiDegree& d,
                          const SpanRankOptions& opt = {});

// Exact rational rank over the same coordinates.
std::size_t rank_exact(const std::vector<CoeffPoly>& vectors, const MultiDegree& d);

// ---- Shared low-level pieces (also used by the generator pipeline) --------

struct BasisIndex {
    std::vector<Monomial> monomials;  // canonical descending order
    std::unordered_map<Monomial, std::uint32_t> pos;
    explicit BasisIndex(std::vector<Monomial> ms);
    std::size_t size() const { return monomials.size(); }
};

// Sparse vectors over the basis coordinates: (column, value) pairs with
// nonzero values.  Insertion routines do not require a sorted order.
using SparseVecP = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
using SparseVecQ = std::vector<std::pair<std::uint32_t, Rat>>;

SparseVecP to_modp_vector(const CoeffPoly& f, const BasisIndex& basis,
                          const PrimeField& F);
SparseVecQ to_rat_vector(const CoeffPoly& f, const BasisIndex& basis);

// Incremental row-echelon accumulator mod p.
class EchelonP {
  public:
    EchelonP(const PrimeField& F, std::size_t cols,
             PivotRule rule = PivotRule::LeftmostMinFill);
    bool insert(const SparseVecP& row);  // true if the rank grew
    std::size_t rank() const { return rows_.size(); }
    // Pivot column -> reduced row (leading entry normalized to 1).
    const std::map<std::uint32_t, SparseVecP>& rows() const { return rows_; }

  private:
    PrimeField F_;
    PivotRule rule_;
    std::map<std::uint32_t, SparseVecP> rows_;
    std::vector<std::uint64_t> scratch_;
};

// Exact rational counterpart of EchelonP (no pivot-rule knob: used where the
// ground truth matters, not for performance).
class EchelonQ {
  public:
    explicit EchelonQ(std::size_t cols);
    bool insert(const SparseVecQ& row);  // true if the rank grew
    std::size_t rank() const { return rows_.size(); }

  private:
    std::map<std::uint32_t, SparseVecQ> rows_;
    std::vector<Rat> scratch_;
};

// Full reduced row echelon form of A x = 0 (rows are equations) mod p,
// exposing the canonical kernel basis: one vector per free column, value 1
// there, zero at other free columns.
struct KernelModP {
    std::vector<std::uint32_t> pivot_cols;  // ascending
    std::vector<std::uint32_t> free_cols;   // ascending
    std::vector<SparseVecP> kernel;         // parallel to free_cols
};
KernelModP kernel_mod_p(const SparseMatrix& equations, const PrimeField& F);

}  // namespace binv
