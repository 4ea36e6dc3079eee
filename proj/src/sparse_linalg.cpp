#include "binv/sparse_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace binv {

namespace {

// Rates of the raising derivation on the form coefficients: var j of a form
// of order n maps to var j+1 with factor n-j (zero where there is no target).
constexpr int kRaiseRate[kNumVars] = {1, 0, 3, 2, 1, 0, 4, 3, 2, 1, 0};
// Lowering direction, from (x,y) -> (x+ty, y): var j maps to j-1 with factor j.
constexpr int kLowerRate[kNumVars] = {0, 1, 0, 1, 2, 3, 0, 1, 2, 3, 4};

CoeffPoly derivation(const CoeffPoly& f, const int* rate, int step) {
    std::vector<CoeffPoly::Term> acc;
    for (const auto& [m, c] : f.terms()) {
        for (int v = 0; v < kNumVars; ++v) {
            int e = mono_exponent(m, v);
            if (e == 0 || rate[v] == 0) continue;
            Monomial t = mono_mul(mono_div(m, mono_var(v)), mono_var(v + step));
            acc.emplace_back(t, c * (e * rate[v]));
        }
    }
    return CoeffPoly::from_terms(std::move(acc));
}

void validate_block_vector(const CoeffPoly& f, const MultiDegree& d) {
    if (f.is_zero()) return;
    auto md = f.multidegree();
    if (!md || *md != d)
        throw std::invalid_argument("vector is not multihomogeneous of the block degree");
    if (!f.is_isobaric(0))
        throw std::invalid_argument("vector is not of weight 0");
}

}  // namespace

CoeffPoly raise_poly(const CoeffPoly& f) { return derivation(f, kRaiseRate, +1); }
CoeffPoly lower_poly(const CoeffPoly& f) { return derivation(f, kLowerRate, -1); }

SparseMatrix transpose(const SparseMatrix& a) {
    SparseMatrix t;
    t.rows = a.cols;
    t.cols = a.rows;
    t.entries.reserve(a.entries.size());
    for (const auto& e : a.entries) t.entries.push_back({e.col, e.row, e.value});
    std::sort(t.entries.begin(), t.entries.end(), [](const auto& x, const auto& y) {
        return x.row != y.row ? x.row < y.row : x.col < y.col;
    });
    return t;
}

RaisingMatrix raising_matrix(const MultiDegree& d) {
    RaisingMatrix r;
    r.d = d;
    r.domain = monomial_basis(d, 0);
    r.image = monomial_basis(d, -2);
    r.m.rows = r.domain.size();
    r.m.cols = r.image.size();
    std::unordered_map<Monomial, std::uint32_t> pos;
    pos.reserve(r.image.size());
    for (std::uint32_t j = 0; j < r.image.size(); ++j) pos.emplace(r.image[j], j);
    for (std::uint32_t i = 0; i < r.domain.size(); ++i) {
        Monomial m = r.domain[i];
        for (int v = 0; v < kNumVars; ++v) {
            int e = mono_exponent(m, v);
            if (e == 0 || kRaiseRate[v] == 0) continue;
            Monomial t = mono_mul(mono_div(m, mono_var(v)), mono_var(v + 1));
            auto it = pos.find(t);
            if (it == pos.end())
                throw std::logic_error("raising image outside the weight -2 basis");
            r.m.entries.push_back({i, it->second, static_cast<long long>(e) * kRaiseRate[v]});
        }
    }
    std::sort(r.m.entries.begin(), r.m.entries.end(), [](const auto& x, const auto& y) {
        return x.row != y.row ? x.row < y.row : x.col < y.col;
    });
    return r;
}

BasisIndex::BasisIndex(std::vector<Monomial> ms) : monomials(std::move(ms)) {
    pos.reserve(monomials.size());
    for (std::uint32_t i = 0; i < monomials.size(); ++i) pos.emplace(monomials[i], i);
}

SparseVecP to_modp_vector(const CoeffPoly& f, const BasisIndex& basis,
                          const PrimeField& F) {
    SparseVecP out;
    out.reserve(f.term_count());
    // Terms run through descending monomials, which is ascending basis index.
    for (const auto& [m, c] : f.terms()) {
        auto it = basis.pos.find(m);
        if (it == basis.pos.end())
            throw std::logic_error("monomial outside the block basis");
        std::uint64_t r = F.from_rat(c);
        if (r) out.emplace_back(it->second, r);
    }
    return out;
}

SparseVecQ to_rat_vector(const CoeffPoly& f, const BasisIndex& basis) {
    SparseVecQ out;
    out.reserve(f.term_count());
    for (const auto& [m, c] : f.terms()) {
        auto it = basis.pos.find(m);
        if (it == basis.pos.end())
            throw std::logic_error("monomial outside the block basis");
        out.emplace_back(it->second, c);
    }
    return out;
}

EchelonP::EchelonP(const PrimeField& F, std::size_t cols, PivotRule rule)
    : F_(F), rule_(rule), scratch_(cols, 0) {}

bool EchelonP::insert(const SparseVecP& row) {
    const std::uint32_t cols = static_cast<std::uint32_t>(scratch_.size());
    std::uint32_t lo = cols;
    std::size_t nnz = 0;
    for (const auto& [c, v] : row) {
        scratch_[c] = v;
        ++nnz;
        lo = std::min(lo, c);
    }
    // Write with bookkeeping of the live-entry count (used by the min-fill rule).
    auto put = [&](std::uint32_t j, std::uint64_t v) {
        nnz += (v != 0) - (scratch_[j] != 0);
        scratch_[j] = v;
    };
    for (std::uint32_t c = lo; c < cols; ++c) {
        std::uint64_t v = scratch_[c];
        if (!v) continue;
        auto it = rows_.find(c);
        if (it == rows_.end()) {
            SparseVecP out;
            out.reserve(nnz);
            out.emplace_back(c, 1);
            std::uint64_t s = F_.inv(v);
            scratch_[c] = 0;
            for (std::uint32_t j = c + 1; j < cols; ++j)
                if (scratch_[j]) {
                    out.emplace_back(j, F_.mul(scratch_[j], s));
                    scratch_[j] = 0;
                }
            rows_.emplace(c, std::move(out));
            return true;
        }
        SparseVecP& piv = it->second;
        if (rule_ == PivotRule::LeftmostMinFill && nnz < piv.size()) {
            // The incoming row is sparser: it becomes the pivot row and the
            // displaced one continues through elimination.  Rank is unchanged.
            SparseVecP out;
            out.reserve(nnz);
            out.emplace_back(c, 1);
            std::uint64_t s = F_.inv(v);
            scratch_[c] = 0;
            for (std::uint32_t j = c + 1; j < cols; ++j)
                if (scratch_[j]) {
                    out.emplace_back(j, F_.mul(scratch_[j], s));
                    scratch_[j] = 0;
                }
            std::swap(piv, out);
            // out now holds the old pivot row; both lead with 1 at c, so the
            // difference starts strictly to the right of c.
            nnz = 0;
            for (std::size_t k = 1; k < out.size(); ++k) put(out[k].first, out[k].second);
            for (std::size_t k = 1; k < piv.size(); ++k) {
                std::uint32_t j = piv[k].first;
                put(j, F_.sub(scratch_[j], piv[k].second));
            }
            continue;
        }
        scratch_[c] = 0;
        --nnz;
        for (std::size_t k = 1; k < piv.size(); ++k) {
            std::uint32_t j = piv[k].first;
            put(j, F_.sub(scratch_[j], F_.mul(v, piv[k].second)));
        }
    }
    return false;
}

KernelModP kernel_mod_p(const SparseMatrix& equations, const PrimeField& F) {
    EchelonP ech(F, equations.cols, PivotRule::LeftmostFirstRow);
    SparseVecP row;
    for (std::size_t i = 0; i < equations.entries.size();) {
        std::uint32_t r = equations.entries[i].row;
        row.clear();
        for (; i < equations.entries.size() && equations.entries[i].row == r; ++i) {
            std::uint64_t v = F.from_int(equations.entries[i].value);
            if (v) row.emplace_back(equations.entries[i].col, v);
        }
        ech.insert(row);
    }
    // Back-substitute to the reduced form.  Pivot rows touched later in the
    // descending sweep are already reduced (pivot column + free columns only),
    // so each original pivot entry is eliminated with its original factor.
    std::map<std::uint32_t, SparseVecP> R = ech.rows();
    std::vector<std::uint64_t> dense(equations.cols, 0);
    for (auto it = R.rbegin(); it != R.rend(); ++it) {
        SparseVecP& r = it->second;
        bool touched = false;
        for (std::size_t k = 1; k < r.size(); ++k)
            if (R.count(r[k].first)) {
                touched = true;
                break;
            }
        if (!touched) continue;
        for (const auto& [j, w] : r) dense[j] = w;
        for (std::size_t k = 1; k < r.size(); ++k) {
            auto jt = R.find(r[k].first);
            if (jt == R.end()) continue;
            std::uint64_t f = r[k].second;
            for (const auto& [j, w] : jt->second) dense[j] = F.sub(dense[j], F.mul(f, w));
        }
        SparseVecP out;
        out.reserve(r.size());
        for (std::uint32_t j = it->first; j < equations.cols; ++j)
            if (dense[j]) {
                out.emplace_back(j, dense[j]);
                dense[j] = 0;
            }
        r = std::move(out);
    }
    KernelModP k;
    std::vector<char> is_pivot(equations.cols, 0);
    for (const auto& [c, r] : R) {
        k.pivot_cols.push_back(c);
        is_pivot[c] = 1;
    }
    for (std::uint32_t j = 0; j < equations.cols; ++j)
        if (!is_pivot[j]) k.free_cols.push_back(j);
    std::unordered_map<std::uint32_t, std::uint32_t> free_index;
    free_index.reserve(k.free_cols.size());
    for (std::uint32_t i = 0; i < k.free_cols.size(); ++i) free_index.emplace(k.free_cols[i], i);
    k.kernel.assign(k.free_cols.size(), {});
    for (const auto& [c, r] : R)
        for (std::size_t t = 1; t < r.size(); ++t)
            k.kernel[free_index.at(r[t].first)].emplace_back(c, F.neg(r[t].second));
    for (std::uint32_t i = 0; i < k.free_cols.size(); ++i) {
        k.kernel[i].emplace_back(k.free_cols[i], 1);
        std::sort(k.kernel[i].begin(), k.kernel[i].end());
    }
    return k;
}

namespace {

// One reconstruction attempt from aligned modular kernels; nullopt when any
// entry fails to reconstruct or the exact verification rejects the lift.
std::optional<std::vector<CoeffPoly>> lift_kernel(
    const std::vector<KernelModP>& kernels, const std::vector<std::uint64_t>& primes,
    const RaisingMatrix& rm) {
    const std::size_t nfree = kernels.front().free_cols.size();
    std::vector<CoeffPoly> out;
    out.reserve(nfree);
    for (std::size_t k = 0; k < nfree; ++k) {
        std::map<std::uint32_t, std::vector<std::uint64_t>> residues;
        for (std::size_t pi = 0; pi < primes.size(); ++pi)
            for (const auto& [col, val] : kernels[pi].kernel[k]) {
                auto& v = residues[col];
                v.resize(primes.size(), 0);
                v[pi] = val;
            }
        std::vector<CoeffPoly::Term> terms;
        terms.reserve(residues.size());
        for (auto& [col, rv] : residues) {
            rv.resize(primes.size(), 0);
            CrtAccumulator acc;
            for (std::size_t pi = 0; pi < primes.size(); ++pi) acc.add(rv[pi], primes[pi]);
            auto q = rational_reconstruct(acc.value, acc.modulus);
            if (!q) return std::nullopt;
            if (*q != 0) terms.emplace_back(rm.domain[col], *q);
        }
        CoeffPoly f = CoeffPoly::from_terms(std::move(terms));
        // Exact check: the lifted vector is annihilated by the raising operator.
        if (!raise_poly(f).is_zero()) return std::nullopt;
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

std::vector<CoeffPoly> invariant_basis(const MultiDegree& d) {
    const RaisingMatrix rm = raising_matrix(d);
    const auto expected = static_cast<std::size_t>(invariant_dimension(d));
    if (rm.domain.empty() || expected == 0) {
        if (expected != 0)
            throw std::logic_error("dimension count positive on an empty block");
        return {};
    }
    const SparseMatrix eqs = transpose(rm.m);

    std::vector<std::uint64_t> pool = default_primes();
    const auto& ext = extension_primes();
    pool.insert(pool.end(), ext.begin(), ext.end());

    std::vector<std::uint64_t> primes;
    std::vector<KernelModP> kernels;
    std::size_t next = 0;
    auto draw = [&]() {
        while (next < pool.size()) {
            std::uint64_t p = pool[next++];
            KernelModP k = kernel_mod_p(eqs, PrimeField(p));
            if (k.kernel.size() < expected)
                throw std::logic_error("modular kernel smaller than the dimension count");
            if (k.kernel.size() > expected) continue;  // unlucky prime
            if (!kernels.empty() && k.pivot_cols != kernels.front().pivot_cols)
                continue;  // pivot pattern degenerated mod p
            primes.push_back(p);
            kernels.push_back(std::move(k));
            return;
        }
        throw std::runtime_error("prime pool exhausted while lifting an invariant basis");
    };

    draw();
    draw();
    for (;;) {
        auto lifted = lift_kernel(kernels, primes, rm);
        if (lifted) return *lifted;
        draw();
    }
}

RankCertificate span_rank(const std::vector<CoeffPoly>& vectors, const MultiDegree& d,
                          const SpanRankOptions& opt) {
    for (const auto& f : vectors) validate_block_vector(f, d);
    BasisIndex basis(monomial_basis(d, 0));
    RankCertificate cert;
    std::vector<std::uint64_t> primes = opt.primes.empty() ? default_primes() : opt.primes;

    auto run = [&](std::uint64_t p) {
        PrimeField F(p);
        EchelonP ech(F, basis.size(), opt.rule);
        for (const auto& f : vectors) {
            if (f.is_zero()) continue;
            ech.insert(to_modp_vector(f, basis, F));
            if (ech.rank() >= opt.early_stop) break;
        }
        cert.primes.push_back(p);
        cert.ranks.push_back(ech.rank());
        return ech.rank();
    };

    for (std::uint64_t p : primes) {
        if (run(p) >= opt.early_stop) {
            cert.note = "early stop: span reached the requested rank";
            break;
        }
    }
    cert.agreed = *std::max_element(cert.ranks.begin(), cert.ranks.end());
    bool all_equal = std::all_of(cert.ranks.begin(), cert.ranks.end(),
                                 [&](std::size_t r) { return r == cert.ranks.front(); });
    if (!all_equal) {
        cert.primes_disagreed = true;
        for (std::uint64_t p : extension_primes()) {
            if (std::find(cert.primes.begin(), cert.primes.end(), p) != cert.primes.end())
                continue;
            run(p);
            break;
        }
        cert.agreed = *std::max_element(cert.ranks.begin(), cert.ranks.end());
        cert.note = "modular ranks disagreed; extension prime drawn";
    }
    if (opt.exact_confirm) {
        std::size_t er = rank_exact(vectors, d);
        cert.exact_confirmed = (er == cert.agreed);
        if (!cert.exact_confirmed) {
            cert.note += (cert.note.empty() ? "" : "; ");
            cert.note += "exact rank overrides modular result";
            cert.agreed = er;
        }
    }
    return cert;
}

EchelonQ::EchelonQ(std::size_t cols) : scratch_(cols, Rat(0)) {}

bool EchelonQ::insert(const SparseVecQ& row) {
    const std::uint32_t cols = static_cast<std::uint32_t>(scratch_.size());
    std::uint32_t lo = cols;
    for (const auto& [c, v] : row) {
        scratch_[c] = v;
        lo = std::min(lo, c);
    }
    for (std::uint32_t c = lo; c < cols; ++c) {
        if (scratch_[c] == 0) continue;
        auto it = rows_.find(c);
        if (it == rows_.end()) {
            SparseVecQ out;
            Rat s = 1 / scratch_[c];
            out.emplace_back(c, Rat(1));
            scratch_[c] = 0;
            for (std::uint32_t j = c + 1; j < cols; ++j)
                if (!(scratch_[j] == 0)) {
                    out.emplace_back(j, scratch_[j] * s);
                    scratch_[j] = 0;
                }
            rows_.emplace(c, std::move(out));
            return true;
        }
        Rat v = scratch_[c];
        scratch_[c] = 0;
        for (std::size_t k = 1; k < it->second.size(); ++k) {
            const auto& [j, w] = it->second[k];
            scratch_[j] -= v * w;
        }
    }
    return false;
}

std::size_t rank_exact(const std::vector<CoeffPoly>& vectors, const MultiDegree& d) {
    for (const auto& f : vectors) validate_block_vector(f, d);
    BasisIndex basis(monomial_basis(d, 0));
    EchelonQ ech(basis.size());
    for (const auto& f : vectors)
        if (!f.is_zero()) ech.insert(to_rat_vector(f, basis));
    return ech.rank();
}

}  // namespace binv
