#pragma once

#include <string>

#include <json.hpp>

#include "nsq/explore.hpp"
#include "nsq/families.hpp"
#include "nsq/quotient.hpp"
#include "nsq/rank.hpp"
#include "nsq/semigroup.hpp"

namespace nsq {

using json = nlohmann::json;

json to_json(const NumericalSemigroup& s);
json to_json(const QuotientRep& r);
json to_json(const RankCertificate& cert, std::span<const i64> gens);
json to_json(const RankBounds& b, const NumericalSemigroup& s);
json to_json(const FamilyInstance& inst);
json to_json(const FamilyProof& proof);
json to_json(const ExperimentRecord& rec);
json to_json(const CensusRow& row);
json to_json(const CensusTable& table);

/// "3,5" → {3, 5}.  Throws errc::empty_input / non_positive_generator on
/// malformed text.
std::vector<i64> parse_gen_list(const std::string& text);

/// "33,34,39,40:6" → rep with scale 1.
QuotientRep parse_rep(const std::string& text);

/// CSV line for an experiment record, matching the documented header.
std::string csv_header();
std::string csv_line(const ExperimentRecord& rec, const std::string& model = "box");

/// Human one-liner: ⟨3,4,5⟩  m=3  F=2  g=2
std::string render_semigroup(const NumericalSemigroup& s);
std::string render_gens(std::span<const i64> gens);
std::string render_rep(const QuotientRep& r);

}  // namespace nsq
