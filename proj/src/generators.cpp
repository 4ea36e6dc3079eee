#include "binv/generators.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "binv/grading.hpp"
#include "binv/json_io.hpp"

namespace binv {

namespace {

bool fits(const MultiDegree& g, const MultiDegree& r) {
    return g.dl <= r.dl && g.dc <= r.dc && g.dq <= r.dq;
}

MultiDegree md_sub(const MultiDegree& a, const MultiDegree& b) {
    return {a.dl - b.dl, a.dc - b.dc, a.dq - b.dq};
}

// Depth-first enumeration of products over non-decreasing generator index
// sequences (one visit per multiset).  `mul(prefix, i)` extends a partial
// product by factor i; `sink` consumes a completed product and returns false
// to abort the whole enumeration.  Degree-1 remainders are pruned: no
// generator has total degree below 2.
template <class P, class Mul, class Sink>
bool product_dfs(const std::vector<MultiDegree>& mds, std::size_t start,
                 const MultiDegree& rem, const P& prefix, int depth, const Mul& mul,
                 const Sink& sink) {
    for (std::size_t i = start; i < mds.size(); ++i) {
        if (!fits(mds[i], rem)) continue;
        MultiDegree r2 = md_sub(rem, mds[i]);
        int t2 = r2.total();
        if (t2 == 1) continue;
        if (t2 == 0 && depth + 1 < 2) continue;  // a lone factor is not a product
        P next = mul(prefix, i);
        if (t2 == 0) {
            if (!sink(next)) return false;
        } else if (!product_dfs(mds, i, r2, next, depth + 1, mul, sink)) {
            return false;
        }
    }
    return true;
}

// Sparse polynomial with prime-field coefficients, used for the modular
// product expansion.  No ordering is maintained; the echelon accumulator
// does not need one.
using ModPoly = std::vector<std::pair<Monomial, std::uint64_t>>;

ModPoly to_modpoly(const CoeffPoly& f, const PrimeField& F) {
    ModPoly out;
    out.reserve(f.term_count());
    for (const auto& [m, c] : f.terms()) {
        std::uint64_t r = F.from_rat(c);
        if (r) out.emplace_back(m, r);
    }
    return out;
}

ModPoly mul_modp(const ModPoly& a, const ModPoly& b, const PrimeField& F) {
    std::unordered_map<Monomial, std::uint64_t> acc;
    acc.reserve(a.size() * b.size() / 4 + 8);
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            auto& slot = acc[mono_mul(ma, mb)];
            slot = F.add(slot, F.mul(ca, cb));
        }
    ModPoly out;
    out.reserve(acc.size());
    for (const auto& [m, c] : acc)
        if (c) out.emplace_back(m, c);
    return out;
}

std::vector<MultiDegree> generator_multidegrees(const std::vector<GeneratorRecord>& found) {
    std::vector<MultiDegree> mds;
    mds.reserve(found.size());
    for (const auto& g : found) mds.push_back(g.d);
    return mds;
}

[[noreturn]] void rank_inconsistency(const MultiDegree& d, long long dim, std::size_t rank) {
    std::ostringstream os;
    os << "reducible span rank " << rank << " exceeds the dimension count " << dim
       << " at multidegree " << d.to_string()
       << "; products of invariants escaped the invariant space, which signals a "
          "weight or convention bug";
    throw std::logic_error(os.str());
}

struct BlockOutcome {
    BlockReport report;
    std::vector<CoeffPoly> reps;
};

BlockOutcome process_block(const MultiDegree& d, const std::vector<GeneratorRecord>& found,
                           const std::vector<MultiDegree>& mds,
                           const std::vector<std::uint64_t>& primes,
                           const std::vector<std::vector<ModPoly>>& gen_mods,
                           PivotRule rule) {
    BlockOutcome out;
    out.report.d = d;
    const long long dim = invariant_dimension(d);
    out.report.dim = dim;
    if (dim == 0) {
        // Products of nonzero invariants are nonzero invariants, so a block
        // without invariants admits no products either.
        return out;
    }
    BasisIndex basis(monomial_basis(d, 0));
    RankCertificate& cert = out.report.cert;

    auto modular_pass = [&](const PrimeField& F, const std::vector<ModPoly>& gmod) {
        EchelonP ech(F, basis.size(), rule);
        ModPoly one{{kMonoOne, 1}};
        SparseVecP row;
        product_dfs(
            mds, 0, d, one, 0,
            [&](const ModPoly& p, std::size_t i) { return mul_modp(p, gmod[i], F); },
            [&](const ModPoly& p) {
                row.clear();
                row.reserve(p.size());
                for (const auto& [m, c] : p) row.emplace_back(basis.pos.at(m), c);
                ech.insert(row);
                return static_cast<long long>(ech.rank()) < dim;  // stop at proof of fullness
            });
        return ech.rank();
    };

    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        PrimeField F(primes[pi]);
        std::size_t r = modular_pass(F, gen_mods[pi]);
        cert.primes.push_back(primes[pi]);
        cert.ranks.push_back(r);
        if (static_cast<long long>(r) > dim) rank_inconsistency(d, dim, r);
        if (static_cast<long long>(r) == dim) {
            // One prime reaching the dimension is an unconditional proof: the
            // modular rank never exceeds the exact one.
            cert.agreed = r;
            if (pi > 0) {
                cert.primes_disagreed = true;
                cert.note = "earlier prime undercounted; fullness proved at a later prime";
            } else {
                cert.note = "early stop: reducible span fills the block";
            }
            out.report.rank = r;
            out.report.new_count = 0;
            return out;
        }
    }
    cert.agreed = *std::max_element(cert.ranks.begin(), cert.ranks.end());
    if (!std::all_of(cert.ranks.begin(), cert.ranks.end(),
                     [&](std::size_t r) { return r == cert.ranks.front(); })) {
        cert.primes_disagreed = true;
        cert.note = "modular ranks disagreed; extension prime drawn";
        for (std::uint64_t p : extension_primes()) {
            if (std::find(cert.primes.begin(), cert.primes.end(), p) != cert.primes.end())
                continue;
            PrimeField F(p);
            std::vector<ModPoly> gmod;
            gmod.reserve(found.size());
            for (const auto& g : found) gmod.push_back(to_modpoly(g.representative, F));
            std::size_t r = modular_pass(F, gmod);
            cert.primes.push_back(p);
            cert.ranks.push_back(r);
            cert.agreed = std::max(cert.agreed, r);
            break;
        }
        if (static_cast<long long>(cert.agreed) > dim)
            rank_inconsistency(d, dim, cert.agreed);
    }

    if (static_cast<long long>(cert.agreed) == dim) {
        out.report.rank = cert.agreed;
        out.report.new_count = 0;
        return out;
    }

    // The block claims new generators: confirm the deficiency exactly before
    // believing it, then pick representatives against the exact echelon.
    EchelonQ exact(basis.size());
    CoeffPoly one(Rat(1));
    product_dfs(
        mds, 0, d, one, 0,
        [&](const CoeffPoly& p, std::size_t i) { return p * found[i].representative; },
        [&](const CoeffPoly& p) {
            if (!p.is_zero()) exact.insert(to_rat_vector(p, basis));
            return true;
        });
    std::size_t er = exact.rank();
    cert.exact_confirmed = (er == cert.agreed);
    if (!cert.exact_confirmed) {
        cert.note += (cert.note.empty() ? "" : "; ");
        cert.note += "exact rank overrides modular result";
        cert.agreed = er;
    }
    if (static_cast<long long>(cert.agreed) > dim) rank_inconsistency(d, dim, cert.agreed);
    out.report.rank = cert.agreed;
    out.report.new_count = dim - static_cast<long long>(cert.agreed);

    for (const auto& v : invariant_basis(d)) {
        if (exact.insert(to_rat_vector(v, basis))) {
            out.reps.push_back(v);
            if (static_cast<long long>(out.reps.size()) == out.report.new_count) break;
        }
    }
    if (static_cast<long long>(out.reps.size()) != out.report.new_count)
        throw std::logic_error("kernel basis failed to complete the reducible span at " +
                               d.to_string());
    return out;
}

}  // namespace

std::vector<CoeffPoly> reducible_products(const MultiDegree& d,
                                          const std::vector<GeneratorRecord>& found) {
    std::vector<MultiDegree> mds = generator_multidegrees(found);
    std::vector<CoeffPoly> out;
    CoeffPoly one(Rat(1));
    product_dfs(
        mds, 0, d, one, 0,
        [&](const CoeffPoly& p, std::size_t i) { return p * found[i].representative; },
        [&](const CoeffPoly& p) {
            out.push_back(p);
            return true;
        });
    return out;
}

NewGeneratorResult new_generator_count(const MultiDegree& d,
                                       const std::vector<GeneratorRecord>& found) {
    NewGeneratorResult res;
    res.dim = invariant_dimension(d);
    auto products = reducible_products(d, found);
    res.cert = span_rank(products, d);
    if (static_cast<long long>(res.cert.agreed) > res.dim)
        rank_inconsistency(d, res.dim, res.cert.agreed);
    res.rank = res.cert.agreed;
    res.new_count = res.dim - static_cast<long long>(res.rank);
    if (res.new_count > 0) {
        BasisIndex basis(monomial_basis(d, 0));
        EchelonQ exact(basis.size());
        for (const auto& p : products)
            if (!p.is_zero()) exact.insert(to_rat_vector(p, basis));
        if (exact.rank() != res.rank) {
            res.cert.note += (res.cert.note.empty() ? "" : "; ");
            res.cert.note += "exact rank overrides modular result";
            res.cert.agreed = exact.rank();
            if (static_cast<long long>(res.cert.agreed) > res.dim)
                rank_inconsistency(d, res.dim, res.cert.agreed);
            res.rank = res.cert.agreed;
            res.new_count = res.dim - static_cast<long long>(res.rank);
        }
        for (const auto& v : invariant_basis(d)) {
            if (exact.insert(to_rat_vector(v, basis))) {
                res.representatives.push_back(v);
                if (static_cast<long long>(res.representatives.size()) == res.new_count)
                    break;
            }
        }
    }
    return res;
}

PipelineResult run_pipeline(const PipelineOptions& opt) {
    if (opt.max_total_degree < 2)
        throw std::invalid_argument("max_total_degree must be at least 2");
    if (opt.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    std::vector<std::uint64_t> primes = opt.primes.empty() ? default_primes() : opt.primes;
    for (std::uint64_t p : primes) PrimeField{p};  // validate up front

    PipelineResult res;
    std::vector<GeneratorRecord>& found = res.generators;

    for (int total = 2; total <= opt.max_total_degree; ++total) {
        if (!opt.resume_dir.empty()) {
            auto path = opt.resume_dir / ("degree_" + std::to_string(total) + ".json");
            std::error_code ec;
            if (std::filesystem::exists(path, ec)) {
                auto [deg, gens] = degree_checkpoint_from_json(read_json_file(path));
                if (deg.total != total)
                    throw std::runtime_error("checkpoint degree mismatch in " + path.string());
                for (auto& g : gens) {
                    if (g.total_degree != total || g.d.total() != total)
                        throw std::runtime_error("checkpoint generator degree mismatch in " +
                                                 path.string());
                    found.push_back(std::move(g));
                }
                res.certificate.degrees.push_back(std::move(deg));
                res.certificate.total += res.certificate.degrees.back().d_i;
                continue;
            }
        }

        std::vector<MultiDegree> blocks;
        for (const auto& d : multidegrees_of_total(total))
            if (d.admissible()) blocks.push_back(d);

        const std::vector<MultiDegree> mds = generator_multidegrees(found);
        std::vector<std::vector<ModPoly>> gen_mods(primes.size());
        for (std::size_t pi = 0; pi < primes.size(); ++pi) {
            PrimeField F(primes[pi]);
            gen_mods[pi].reserve(found.size());
            for (const auto& g : found) gen_mods[pi].push_back(to_modpoly(g.representative, F));
        }

        std::vector<BlockOutcome> slots(blocks.size());
        std::vector<std::exception_ptr> errors(blocks.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= blocks.size()) return;
                try {
                    slots[i] = process_block(blocks[i], found, mds, primes, gen_mods, opt.rule);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        std::size_t nthreads = std::min<std::size_t>(opt.jobs, blocks.size());
        if (nthreads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(nthreads);
            for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);

        DegreeReport deg;
        deg.total = total;
        std::vector<GeneratorRecord> degree_gens;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            deg.blocks.push_back(std::move(slots[i].report));
            deg.d_i += deg.blocks.back().new_count;
            for (auto& v : slots[i].reps)
                degree_gens.push_back(GeneratorRecord{blocks[i], total, std::move(v),
                                                      "new at this multidegree"});
        }
        if (!opt.checkpoint_dir.empty()) {
            std::filesystem::create_directories(opt.checkpoint_dir);
            write_json_file(opt.checkpoint_dir / ("degree_" + std::to_string(total) + ".json"),
                            degree_checkpoint_to_json(deg, degree_gens));
        }
        for (auto& g : degree_gens) found.push_back(std::move(g));
        res.certificate.total += deg.d_i;
        res.certificate.degrees.push_back(std::move(deg));
    }
    return res;
}

long long SylvesterTable::cell(int order, int dc, int dq) const {
    auto it = cells.find({order, dc, dq});
    return it == cells.end() ? 0 : it->second;
}

long long SylvesterTable::order_slice_total(int order) const {
    long long n = 0;
    for (const auto& [k, v] : cells)
        if (k[0] == order) n += v;
    return n;
}

long long SylvesterTable::total() const {
    long long n = 0;
    for (const auto& [k, v] : cells) n += v;
    return n;
}

SylvesterTable sylvester_table(const GeneratorCertificate& cert) {
    SylvesterTable t;
    for (const auto& deg : cert.degrees)
        for (const auto& b : deg.blocks)
            if (b.new_count > 0) t.cells[{b.d.dl, b.d.dc, b.d.dq}] += b.new_count;
    return t;
}

std::string sylvester_table_csv(const SylvesterTable& t) {
    std::ostringstream os;
    os << "order,d_c,d_q,count\n";
    for (const auto& [k, v] : t.cells) os << k[0] << "," << k[1] << "," << k[2] << "," << v << "\n";
    return os.str();
}

std::string sylvester_table_grid_csv(const SylvesterTable& t) {
    int max_order = 0, max_c = 0, max_q = 0;
    for (const auto& [k, v] : t.cells) {
        max_order = std::max(max_order, k[0]);
        max_c = std::max(max_c, k[1]);
        max_q = std::max(max_q, k[2]);
    }
    std::ostringstream os;
    for (int o = 0; o <= max_order; ++o) {
        if (t.order_slice_total(o) == 0) continue;
        os << "order " << o << "\nd_c\\d_q";
        for (int q = 0; q <= max_q; ++q) os << "," << q;
        os << "\n";
        for (int c = 0; c <= max_c; ++c) {
            bool row_any = false;
            for (int q = 0; q <= max_q; ++q) row_any = row_any || t.cell(o, c, q) != 0;
            if (!row_any) continue;
            os << c;
            for (int q = 0; q <= max_q; ++q) os << "," << t.cell(o, c, q);
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace binv
