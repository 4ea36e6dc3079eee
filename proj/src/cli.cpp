#include "binv/cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "binv/generators.hpp"
#include "binv/grading.hpp"
#include "binv/json_io.hpp"
#include "binv/named_invariants.hpp"
#include "binv/nullcone.hpp"
#include "binv/recipe.hpp"

namespace binv {

namespace {

// Published reference values used by --expect-paper.
const std::vector<long long> kSeriesRef = {
    1,    0,     1,     2,     5,     10,    18,    31,    55,    92,   144,
    223,  341,   499,   725,   1031,  1436,  1978,  2685,  3592,  4761, 6235,
    8078, 10379, 13226, 16698, 20937, 26069, 32230, 39614, 48401};

const std::vector<long long> kNumeratorRef = {
    1,  0,  1,  1,  3,  7,  12, 21, 32, 47, 58, 72, 83, 89, 94,
    94, 89, 83, 72, 58, 47, 32, 21, 12, 7,  3,  1,  1,  0,  1};

const std::vector<int> kHsopDegreesRef = {3, 4, 4, 5, 5, 6, 6, 7};

// New generators per total degree i = 2..11, grand total 63.
const std::vector<long long> kNewPerDegreeRef = {1, 2, 4, 8, 10, 13, 11, 10, 3, 1};
constexpr long long kTotalGeneratorsRef = 63;
constexpr long long kOrderZeroSliceRef = 20;
constexpr int kNamedInvariantCountRef = 20;

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open for writing: " + path);
    f << text;
    if (!f) throw std::invalid_argument("write failed: " + path);
}

void emit_json(const Json& j, const std::string& path, std::ostream& out) {
    emit(j.dump(2) + "\n", path, out);
}

MultiDegree parse_multidegree(const std::vector<int>& v) {
    if (v.size() != 3)
        throw std::invalid_argument("--multidegree wants three integers d_l,d_c,d_q");
    if (v[0] < 0 || v[1] < 0 || v[2] < 0)
        throw std::invalid_argument("--multidegree entries must be nonnegative");
    return {v[0], v[1], v[2]};
}

struct ExpectFailure {
    std::string what;
};

// ---- poincare ----

int run_poincare(int max_degree, bool expect, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
    if (max_degree < 0) throw std::invalid_argument("--max-degree must be nonnegative");
    int hsop_sum = 0;
    for (int b : kHsopDegreesRef) hsop_sum += b;
    auto full = poincare_coeffs(std::max(max_degree, hsop_sum + 5));
    auto numerator = series_numerator(full, kHsopDegreesRef);
    auto fe = functional_equation_check(numerator, kHsopDegreesRef, 11);
    int bound = degree_bound(kHsopDegreesRef, 11);

    Json j;
    j["coeffs"] = std::vector<long long>(full.begin(), full.begin() + max_degree + 1);
    j["numerator"] = numerator;
    j["denominator_degrees"] = kHsopDegreesRef;
    Json fj;
    fj["ok"] = fe.ok;
    fj["d"] = 11;
    fj["degree_matches"] = fe.degree_matches;
    fj["palindromic"] = fe.palindromic;
    j["functional_equation"] = std::move(fj);
    j["degree_bound"] = bound;
    emit_json(j, out_path, out);

    if (expect) {
        for (std::size_t i = 0; i < kSeriesRef.size(); ++i)
            if (i >= full.size() || full[i] != kSeriesRef[i]) {
                err << "series coefficient " << i << " differs from the reference\n";
                return 1;
            }
        if (numerator != kNumeratorRef) {
            err << "numerator differs from the reference\n";
            return 1;
        }
        if (!fe.ok || bound != 29) {
            err << "functional equation or degree bound failed\n";
            return 1;
        }
    }
    return 0;
}

// ---- generators / sylvester-table ----

PipelineOptions pipeline_options(const Config& c) {
    validate_config(c);
    PipelineOptions opt;
    opt.max_total_degree = c.max_degree;
    opt.primes = c.primes;
    opt.jobs = c.jobs;
    opt.checkpoint_dir = c.checkpoint;
    opt.resume_dir = c.resume;
    return opt;
}

void check_certificate(const GeneratorCertificate& cert) {
    for (const auto& deg : cert.degrees) {
        int i = deg.total;
        if (i >= 2 && i <= 11) {
            if (deg.d_i != kNewPerDegreeRef[static_cast<std::size_t>(i - 2)])
                throw ExpectFailure{"degree " + std::to_string(i) +
                                    " generator count differs from the reference"};
        } else if (deg.d_i != 0) {
            throw ExpectFailure{"unexpected new generator above degree 11"};
        }
    }
    if (cert.degrees.size() >= kNewPerDegreeRef.size() && cert.total != kTotalGeneratorsRef)
        throw ExpectFailure{"generator total differs from the reference"};
}

int run_generators(const Config& c, bool expect, std::ostream& out, std::ostream& err) {
    auto res = run_pipeline(pipeline_options(c));
    Json j;
    j["certificate"] = certificate_to_json(res.certificate);
    j["generator_count"] = res.generators.size();
    emit_json(j, c.out, out);
    if (expect) {
        try {
            check_certificate(res.certificate);
        } catch (const ExpectFailure& f) {
            err << f.what << "\n";
            return 1;
        }
    }
    return 0;
}

int run_sylvester(const Config& c, const std::string& format, bool expect, std::ostream& out,
                  std::ostream& err) {
    if (format != "grid" && format != "flat")
        throw std::invalid_argument("--format must be 'grid' or 'flat'");
    auto res = run_pipeline(pipeline_options(c));
    auto table = sylvester_table(res.certificate);
    emit(format == "grid" ? sylvester_table_grid_csv(table) : sylvester_table_csv(table),
         c.out, out);
    if (expect) {
        if (c.max_degree < 11) {
            err << "--expect-paper needs --max-degree at least 11\n";
            return 1;
        }
        bool ok = table.total() == kTotalGeneratorsRef &&
                  table.order_slice_total(0) == kOrderZeroSliceRef &&
                  table.cell(1, 5, 4) == 1 && table.cell(2, 4, 3) == 1;
        if (!ok) {
            err << "table cells differ from the reference\n";
            return 1;
        }
    }
    return 0;
}

// ---- dims / basis ----

int run_dims(const std::vector<int>& md, const std::string& out_path, std::ostream& out) {
    emit(std::to_string(invariant_dimension(parse_multidegree(md))) + "\n", out_path, out);
    return 0;
}

int run_basis(const std::vector<int>& md, const std::string& out_path, std::ostream& out) {
    MultiDegree d = parse_multidegree(md);
    auto basis = invariant_basis(d);
    Json j;
    j["d_l"] = d.dl;
    j["d_c"] = d.dc;
    j["d_q"] = d.dq;
    j["dim"] = basis.size();
    Json arr = Json::array();
    for (const auto& b : basis) arr.push_back(poly_to_json(b));
    j["basis"] = std::move(arr);
    emit_json(j, out_path, out);
    return 0;
}

// ---- nullcone / hsop-verify / transvect ----

int run_nullcone(const std::string& point_path, const std::string& out_path, std::ostream& out) {
    Json pj;
    try {
        pj = read_json_file(point_path);
    } catch (const std::exception& e) {
        throw std::invalid_argument("point file '" + point_path + "': " + e.what());
    }
    ConcretePoint p;
    try {
        p = point_from_json(pj);
    } catch (const std::exception& e) {
        throw std::invalid_argument("point file '" + point_path + "': " + e.what());
    }
    Json j;
    j["point"] = point_to_json(p);
    j["nullform"] = is_nullform(p);
    Json vals = Json::array();
    for (const auto& [name, v] : evaluate_invariants(p)) {
        Json e;
        e["name"] = name;
        e["value"] = rat_to_string(v);
        vals.push_back(std::move(e));
    }
    j["values"] = std::move(vals);
    emit_json(j, out_path, out);
    return 0;
}

int run_hsop_verify(int samples, std::uint64_t seed, const std::string& out_path,
                    std::ostream& out, std::ostream& err) {
    if (samples < 1) throw std::invalid_argument("--samples must be at least 1");
    auto cases = verify_case_identities();
    auto indep = independence_evidence(samples, seed);
    bool pass = indep.independent;
    Json arr = Json::array();
    for (const auto& r : cases) {
        pass = pass && r.pass;
        arr.push_back(case_report_to_json(r));
    }
    Json j;
    j["cases"] = std::move(arr);
    j["independence"] = independence_report_to_json(indep);
    j["pass"] = pass;
    emit_json(j, out_path, out);
    if (!pass) {
        err << "case identities or independence sampling failed\n";
        return 1;
    }
    return 0;
}

int run_transvect(const std::string& text, const std::string& out_path, std::ostream& out) {
    Form f;
    try {
        f = evaluate_recipe(text);
    } catch (const RecipeError& e) {
        throw std::invalid_argument(std::string("recipe: ") + e.what());
    }
    emit_json(form_to_json(f), out_path, out);
    return 0;
}

}  // namespace

void validate_config(const Config& c) {
    if (c.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    if (c.max_degree < 2) throw std::invalid_argument("max_degree must be at least 2");
    if (c.mode != "desk" && c.mode != "full")
        throw std::invalid_argument("mode must be 'desk' or 'full'");
    std::set<std::uint64_t> seen;
    for (auto p : c.primes) {
        if (p <= (1ULL << 31))
            throw std::invalid_argument("prime " + std::to_string(p) + " is not above 2^31");
        if (!seen.insert(p).second)
            throw std::invalid_argument("duplicate prime " + std::to_string(p));
    }
}

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"invariants of the linear-cubic-quartic system of binary forms"};
    app.require_subcommand(1);

    Config cfg;
    bool expect = false;

    auto* poincare = app.add_subcommand("poincare", "series expansion, numerator, degree bound");
    int series_max = 30;
    poincare->add_option("--max-degree", series_max, "highest coefficient to print");
    poincare->add_flag("--expect-paper", expect, "compare with the reference values");
    poincare->add_option("--out", cfg.out, "output file");

    std::vector<int> md;
    auto* dims = app.add_subcommand("dims", "invariant dimension of one multidegree");
    dims->add_option("--multidegree", md, "d_l,d_c,d_q")->required()->delimiter(',');
    dims->add_option("--out", cfg.out, "output file");

    auto* basis = app.add_subcommand("basis", "exact invariant basis of one multidegree");
    basis->add_option("--multidegree", md, "d_l,d_c,d_q")->required()->delimiter(',');
    basis->add_option("--out", cfg.out, "output file");

    auto* generators = app.add_subcommand("generators", "degree-by-degree generator search");
    auto* gen_max = generators->add_option("--max-degree", cfg.max_degree, "highest total degree");
    generators->add_option("--mode", cfg.mode, "desk (degree 14) or full (degree 29)");
    generators->add_option("--primes", cfg.primes, "modular primes")->delimiter(',');
    generators->add_option("--jobs", cfg.jobs, "worker threads");
    generators->add_option("--out", cfg.out, "certificate file");
    generators->add_option("--resume", cfg.resume, "checkpoint directory to resume from");
    generators->add_option("--checkpoint", cfg.checkpoint, "checkpoint directory to write");
    generators->add_flag("--expect-paper", expect, "compare with the reference values");

    auto* sylvester = app.add_subcommand("sylvester-table", "generator counts in table layout");
    std::string format = "grid";
    auto* syl_max = sylvester->add_option("--max-degree", cfg.max_degree, "highest total degree");
    sylvester->add_option("--format", format, "grid or flat CSV");
    sylvester->add_option("--jobs", cfg.jobs, "worker threads");
    sylvester->add_option("--out", cfg.out, "output file");
    sylvester->add_flag("--expect-paper", expect, "compare with the reference values");

    auto* nullcone = app.add_subcommand("nullcone", "nullcone membership of a concrete point");
    std::string point_path;
    nullcone->add_option("--point", point_path, "point JSON file")->required();
    nullcone->add_option("--out", cfg.out, "output file");

    auto* hsop = app.add_subcommand("hsop-verify", "case identities and independence sampling");
    int samples = 5;
    hsop->add_option("--samples", samples, "Jacobian sample count");
    hsop->add_option("--seed", cfg.seed, "sampling seed");
    hsop->add_option("--out", cfg.out, "output file");

    auto* transvect = app.add_subcommand("transvect", "evaluate a covariant recipe");
    std::string recipe_text;
    transvect->add_option("recipe", recipe_text, "expression like (q,q)_4")->required();
    transvect->add_option("--out", cfg.out, "output file");

    try {
        std::vector<const char*> argv;
        argv.push_back("binv");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (poincare->parsed()) return run_poincare(series_max, expect, cfg.out, out, err);
        if (dims->parsed()) return run_dims(md, cfg.out, out);
        if (basis->parsed()) return run_basis(md, cfg.out, out);
        if (generators->parsed()) {
            if (!*gen_max) cfg.max_degree = cfg.mode == "full" ? 29 : 14;
            return run_generators(cfg, expect, out, err);
        }
        if (sylvester->parsed()) {
            if (!*syl_max) cfg.max_degree = 11;
            return run_sylvester(cfg, format, expect, out, err);
        }
        if (nullcone->parsed()) return run_nullcone(point_path, cfg.out, out);
        if (hsop->parsed()) return run_hsop_verify(samples, cfg.seed, cfg.out, out, err);
        if (transvect->parsed()) return run_transvect(recipe_text, cfg.out, out);
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace binv
