#include "binv/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace binv {

Json poly_to_json(const CoeffPoly& f) {
    Json out = Json::array();
    for (const auto& [m, c] : f.terms()) {
        Json term = Json::array();
        term.push_back(mono_exponents(m));
        term.push_back(rat_to_string(c));
        out.push_back(std::move(term));
    }
    return out;
}

CoeffPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<CoeffPoly::Term> terms;
    terms.reserve(j.size());
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2)
            throw std::invalid_argument("polynomial term must be [exponents, coefficient]");
        const auto& ex = t.at(0);
        if (!ex.is_array() || ex.size() != static_cast<std::size_t>(kNumVars))
            throw std::invalid_argument("term exponent list must have 11 entries");
        std::array<int, kNumVars> e{};
        for (int v = 0; v < kNumVars; ++v) {
            int x = ex.at(v).get<int>();
            if (x < 0 || x > kMaxExponent)
                throw std::invalid_argument("term exponent out of range");
            e[v] = x;
        }
        terms.emplace_back(mono_from_exponents(e), rat_from_string(t.at(1).get<std::string>()));
    }
    return CoeffPoly::from_terms(std::move(terms));
}

Json form_to_json(const Form& f) {
    Json out;
    out["order"] = f.order;
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(poly_to_json(c));
    out["coeffs"] = std::move(coeffs);
    return out;
}

Form form_from_json(const Json& j) {
    Form f;
    f.order = j.at("order").get<int>();
    if (f.order < 0) throw std::invalid_argument("form order must be nonnegative");
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(f.order) + 1)
        throw std::invalid_argument("form must carry order+1 coefficients");
    for (const auto& c : coeffs) f.coeffs.push_back(poly_from_json(c));
    return f;
}

namespace {

Json block_to_json(const BlockReport& b) {
    Json out;
    out["d_l"] = b.d.dl;
    out["d_c"] = b.d.dc;
    out["d_q"] = b.d.dq;
    out["dim"] = b.dim;
    out["rank"] = b.rank;
    out["new"] = b.new_count;
    return out;
}

Json block_checkpoint_to_json(const BlockReport& b) {
    Json out = block_to_json(b);
    out["primes"] = b.cert.primes;
    out["ranks"] = b.cert.ranks;
    out["primes_disagreed"] = b.cert.primes_disagreed;
    out["exact_confirmed"] = b.cert.exact_confirmed;
    out["note"] = b.cert.note;
    return out;
}

BlockReport block_checkpoint_from_json(const Json& j) {
    BlockReport b;
    b.d = {j.at("d_l").get<int>(), j.at("d_c").get<int>(), j.at("d_q").get<int>()};
    b.dim = j.at("dim").get<long long>();
    b.rank = j.at("rank").get<std::size_t>();
    b.new_count = j.at("new").get<long long>();
    b.cert.primes = j.at("primes").get<std::vector<std::uint64_t>>();
    b.cert.ranks = j.at("ranks").get<std::vector<std::size_t>>();
    b.cert.primes_disagreed = j.at("primes_disagreed").get<bool>();
    b.cert.exact_confirmed = j.at("exact_confirmed").get<bool>();
    b.cert.note = j.at("note").get<std::string>();
    if (!b.cert.ranks.empty())
        b.cert.agreed = *std::max_element(b.cert.ranks.begin(), b.cert.ranks.end());
    return b;
}

}  // namespace

Json certificate_to_json(const GeneratorCertificate& cert) {
    Json out;
    Json degrees = Json::array();
    for (const auto& deg : cert.degrees) {
        Json d;
        d["i"] = deg.total;
        Json blocks = Json::array();
        for (const auto& b : deg.blocks) blocks.push_back(block_to_json(b));
        d["blocks"] = std::move(blocks);
        d["d_i"] = deg.d_i;
        degrees.push_back(std::move(d));
    }
    out["degrees"] = std::move(degrees);
    out["total"] = cert.total;
    return out;
}

Json degree_checkpoint_to_json(const DegreeReport& deg,
                               const std::vector<GeneratorRecord>& gens) {
    Json out;
    out["i"] = deg.total;
    Json blocks = Json::array();
    for (const auto& b : deg.blocks) blocks.push_back(block_checkpoint_to_json(b));
    out["blocks"] = std::move(blocks);
    out["d_i"] = deg.d_i;
    Json gj = Json::array();
    for (const auto& g : gens) {
        Json e;
        e["d_l"] = g.d.dl;
        e["d_c"] = g.d.dc;
        e["d_q"] = g.d.dq;
        e["total"] = g.total_degree;
        e["provenance"] = g.provenance;
        e["poly"] = poly_to_json(g.representative);
        gj.push_back(std::move(e));
    }
    out["generators"] = std::move(gj);
    return out;
}

std::pair<DegreeReport, std::vector<GeneratorRecord>> degree_checkpoint_from_json(
    const Json& j) {
    DegreeReport deg;
    deg.total = j.at("i").get<int>();
    for (const auto& b : j.at("blocks")) deg.blocks.push_back(block_checkpoint_from_json(b));
    deg.d_i = j.at("d_i").get<long long>();
    std::vector<GeneratorRecord> gens;
    for (const auto& e : j.at("generators")) {
        GeneratorRecord g;
        g.d = {e.at("d_l").get<int>(), e.at("d_c").get<int>(), e.at("d_q").get<int>()};
        g.total_degree = e.at("total").get<int>();
        g.provenance = e.at("provenance").get<std::string>();
        g.representative = poly_from_json(e.at("poly"));
        gens.push_back(std::move(g));
    }
    return {std::move(deg), std::move(gens)};
}

namespace {

template <std::size_t N>
Json rat_array_to_json(const std::array<Rat, N>& a) {
    Json out = Json::array();
    for (const auto& v : a) out.push_back(rat_to_string(v));
    return out;
}

template <std::size_t N>
void rat_array_from_json(const Json& j, const char* key, std::array<Rat, N>& out) {
    const Json& a = j.at(key);
    if (!a.is_array() || a.size() != N)
        throw std::invalid_argument(std::string("field '") + key + "' must hold " +
                                    std::to_string(N) + " rationals");
    for (std::size_t i = 0; i < N; ++i) out[i] = rat_from_string(a[i].get<std::string>());
}

}  // namespace

Json point_to_json(const ConcretePoint& p) {
    Json out;
    out["l"] = rat_array_to_json(p.l);
    out["c"] = rat_array_to_json(p.c);
    out["q"] = rat_array_to_json(p.q);
    return out;
}

ConcretePoint point_from_json(const Json& j) {
    ConcretePoint p;
    rat_array_from_json(j, "l", p.l);
    rat_array_from_json(j, "c", p.c);
    rat_array_from_json(j, "q", p.q);
    return p;
}

Json case_report_to_json(const CaseReport& r) {
    Json out;
    out["case"] = r.case_id;
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        Json e;
        e["description"] = s.description;
        e["relation"] = s.relation;
        e["claimed"] = poly_to_json(s.claimed);
        e["computed"] = poly_to_json(s.computed);
        if (s.relation == "proportional") e["scalar"] = rat_to_string(s.scalar);
        e["pass"] = s.pass;
        steps.push_back(std::move(e));
    }
    out["steps"] = std::move(steps);
    out["pass"] = r.pass;
    return out;
}

Json independence_report_to_json(const IndependenceReport& r) {
    Json out;
    out["seed"] = r.seed;
    Json pts = Json::array();
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        Json e;
        e["point"] = point_to_json(r.points[i]);
        e["rank"] = r.ranks[i];
        pts.push_back(std::move(e));
    }
    out["samples"] = std::move(pts);
    out["independent"] = r.independent;
    return out;
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    return Json::parse(in);
}

}  // namespace binv
