#pragma once

#include <cstdint>
#include <iosfwd>

#include <json.hpp>

#include "clan/evaluation.hpp"
#include "clan/sbm.hpp"
#include "clan/skew.hpp"

namespace clan {

using Json = nlohmann::ordered_json;

/// Keys in fixed order: avg_f1, avg_jaccard, unlabeled_pct, q_final,
/// discarded_tokens, per_community, evaluated_nodes, averaging.
Json to_json(const MetricReport& report);
/// {count, pct, examples, vocabulary_size, hashtags_only}
Json to_json(const TokenAudit& audit);
Json to_json(const RatioCurve& curve);
Json to_json(const SubsampleReport& report);
Json to_json(const SbmSpec& spec);

/// Missing optional fields take SbmSpec defaults; a missing seed takes
/// `default_seed`. Validates the result.
SbmSpec sbm_spec_from_json(const Json& json, std::uint64_t default_seed);

/// Header `midpoint<TAB>ratio`, fitted points only.
void write_curve_tsv(std::ostream& out, const RatioCurve& curve);

/// Canonical serialization used for every JSON output file.
std::string dump(const Json& json);

}  // namespace clan
