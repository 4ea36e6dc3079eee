#pragma once

#include <filesystem>
#include <utility>
#include <vector>

#include "binv/form.hpp"
#include "binv/generators.hpp"
#include "binv/nullcone.hpp"
#include "json.hpp"

namespace binv {

using Json = nlohmann::ordered_json;

// Coefficient polynomial as [[ [e0..e10], "num/den" ], ...], terms in the
// canonical descending order; rationals in lowest terms with positive
// denominator.  Round-trips byte-identically.
Json poly_to_json(const CoeffPoly& f);
CoeffPoly poly_from_json(const Json& j);

Json form_to_json(const Form& f);
Form form_from_json(const Json& j);

// The certificate schema: {degrees:[{i, blocks:[{d_l,d_c,d_q,dim,rank,new}],
// d_i}], total}.
Json certificate_to_json(const GeneratorCertificate& cert);

// Checkpoint for one completed total degree: the degree report with its rank
// certificates plus the generators discovered there (with their values, so a
// resumed run can keep multiplying them).
Json degree_checkpoint_to_json(const DegreeReport& deg,
                               const std::vector<GeneratorRecord>& gens);
std::pair<DegreeReport, std::vector<GeneratorRecord>> degree_checkpoint_from_json(
    const Json& j);

// Point schema: {l:[...], c:[...], q:[...]} with rationals as "num/den"
// strings; array lengths 2, 4, 5 enforced on read.
Json point_to_json(const ConcretePoint& p);
ConcretePoint point_from_json(const Json& j);

Json case_report_to_json(const CaseReport& r);
Json independence_report_to_json(const IndependenceReport& r);

void write_json_file(const std::filesystem::path& path, const Json& j);
Json read_json_file(const std::filesystem::path& path);

}  // namespace binv
