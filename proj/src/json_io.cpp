#include "nsq/json_io.hpp"

#include <charconv>
#include <sstream>

namespace nsq {

const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_input: return "EmptyInput";
    case errc::non_positive_generator: return "NonPositiveGenerator";
    case errc::overflow: return "Overflow";
    case errc::not_an_element: return "NotAnElement";
    case errc::infinite_complement: return "InfiniteComplement";
    case errc::not_coprime: return "NotCoprime";
    case errc::input_too_large: return "InputTooLarge";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::parameter_too_small: return "ParameterTooSmall";
    case errc::verification_failed: return "VerificationFailed";
    case errc::not_med: return "NotMED";
    case errc::search_exhausted: return "SearchExhausted";
  }
  return "Error";
}

json to_json(const NumericalSemigroup& s) {
  return json{{"gens", s.min_gens()},
              {"content", s.content()},
              {"multiplicity", s.multiplicity()},
              {"frobenius", s.frobenius()},
              {"genus", s.genus()}};
}

json to_json(const QuotientRep& r) {
  return json{{"scale", r.scale}, {"num", r.num_gens}, {"den", r.den}};
}

namespace {

json subset_row(const SubsetCheck& row, std::span<const i64> gens) {
  json complement = json::array();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!(row.mask >> i & 1)) complement.push_back(static_cast<int>(i) + 1);
  return json{{"I", mask_indices(row.mask)},
              {"sum", row.sum},
              {"complement", complement},
              {"member", row.member}};
}

}  // namespace

json to_json(const RankCertificate& cert, std::span<const i64> gens) {
  if (const auto* c = std::get_if<FullRankCert>(&cert)) {
    json table = json::array();
    for (const auto& row : c->table) table.push_back(subset_row(row, c->gens));
    return json{{"kind", "FullRank"}, {"gens", c->gens}, {"table", table}};
  }
  if (const auto* c = std::get_if<NotKQuotientCert>(&cert)) {
    json table = json::array();
    for (const auto& row : c->table)
      table.push_back(json{{"I", mask_indices(row.mask)},
                           {"sum", row.sum},
                           {"even", row.even},
                           {"half_member", row.half_member}});
    return json{{"kind", "NotKQuotient"}, {"k", c->k}, {"tuple", c->tuple}, {"table", table}};
  }
  if (const auto* c = std::get_if<PMOrderingCert>(&cert))
    return json{{"kind", "PMOrdering"}, {"ordering", c->ordering}};
  if (const auto* c = std::get_if<RepresentationCert>(&cert))
    return json{{"kind", "Representation"}, {"rep", to_json(c->rep)}};
  const auto& c = std::get<InconclusiveCert>(cert);
  json out{{"kind", "Inconclusive"}, {"reason", c.reason}};
  if (c.has_witness) {
    out["witness"] = json{{"I", mask_indices(c.witness_mask)}, {"sum", c.witness_sum}};
    json table = json::array();
    for (const auto& row : c.table) table.push_back(subset_row(row, gens));
    out["table"] = table;
  }
  return out;
}

json to_json(const RankBounds& b, const NumericalSemigroup& s) {
  json out{{"gens", s.min_gens()},
           {"lower", b.lower},
           {"upper", b.upper},
           {"exact", b.exact},
           {"lower_reason", b.lower_reason},
           {"upper_reason", b.upper_reason}};
  if (b.lower_cert) out["lower_certificate"] = to_json(*b.lower_cert, s.min_gens());
  if (b.upper_cert) out["upper_certificate"] = to_json(*b.upper_cert, s.min_gens());
  return out;
}

json to_json(const FamilyInstance& inst) {
  return json{{"family", inst.kind == FamilyKind::NoQuotient ? "noquotient" : "nointersection"},
              {"k", inst.k},
              {"a", inst.a},
              {"base_gens", inst.base_gens},
              {"witnesses", inst.witnesses},
              {"threshold", inst.threshold},
              {"gens", inst.gens},
              {"semigroup", to_json(inst.semigroup)}};
}

json to_json(const FamilyProof& proof) {
  json rows = json::array();
  for (const auto& r : proof.rows)
    rows.push_back(json{{"check", r.label}, {"value", r.value}, {"member", r.member}});
  return json{{"rows", rows}, {"ok", true}};
}

json to_json(const ExperimentRecord& rec) {
  return json{{"model", "box"},
              {"n", rec.params.n},
              {"M", rec.params.m_bound},
              {"trials", rec.params.trials},
              {"seed", rec.params.seed},
              {"coprime_filter", rec.params.coprime_filter},
              {"countA", rec.count_a},
              {"countFullRank", rec.count_full_rank},
              {"pA", rec.p_a},
              {"wilson_lo", rec.wilson.lo},
              {"wilson_hi", rec.wilson.hi},
              {"rng", rec.rng}};
}

json to_json(const CensusRow& row) {
  json out{{"gens", row.gens},
           {"multiplicity", row.multiplicity},
           {"genus", row.genus},
           {"embedding_dim", row.embedding_dim},
           {"med", row.med},
           {"lower", row.lower},
           {"upper", row.upper},
           {"exact", row.exact},
           {"full_rank_certified", row.full_rank_certified},
           {"rank_le_2", row.rank_le_2}};
  if (!row.med_status.empty()) {
    out["med_status"] = row.med_status;
    out["med_rep_size"] = row.med_rep_size;
  }
  if (!row.error.empty()) out["error"] = row.error;
  return out;
}

json to_json(const CensusTable& table) {
  json rows = json::array();
  for (const auto& r : table.rows) rows.push_back(to_json(r));
  return json{{"rows", rows},
              {"total", table.rows.size()},
              {"frac_med", table.frac_med},
              {"frac_full_rank_certified", table.frac_full_rank},
              {"frac_rank_le_2", table.frac_rank_le_2}};
}

std::vector<i64> parse_gen_list(const std::string& text) {
  std::vector<i64> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view tok(text.data() + pos, comma - pos);
    i64 value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      fail(errc::non_positive_generator, "cannot parse '" + std::string(tok) + "' as an integer");
    out.push_back(value);
    pos = comma + 1;
  }
  if (out.empty()) fail(errc::empty_input, "empty generator list");
  return out;
}

QuotientRep parse_rep(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    fail(errc::non_positive_generator, "rep must look like num1,num2,...:den");
  QuotientRep rep;
  rep.num_gens = parse_gen_list(text.substr(0, colon));
  const std::string den = text.substr(colon + 1);
  const auto [ptr, ec] = std::from_chars(den.data(), den.data() + den.size(), rep.den);
  if (ec != std::errc{} || ptr != den.data() + den.size() || rep.den < 1)
    fail(errc::non_positive_generator, "cannot parse denominator '" + den + "'");
  return rep;
}

std::string csv_header() { return "model,n,M,trials,seed,countA,pA,wilson_lo,wilson_hi"; }

std::string csv_line(const ExperimentRecord& rec, const std::string& model) {
  std::ostringstream os;
  os << model << ',' << rec.params.n << ',' << rec.params.m_bound << ',' << rec.params.trials
     << ',' << rec.params.seed << ',' << rec.count_a << ',' << rec.p_a << ',' << rec.wilson.lo
     << ',' << rec.wilson.hi;
  return os.str();
}

std::string render_gens(std::span<const i64> gens) {
  std::string out = "⟨";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(gens[i]);
  }
  out += "⟩";
  return out;
}

std::string render_semigroup(const NumericalSemigroup& s) {
  std::ostringstream os;
  os << render_gens(s.min_gens()) << "  m=" << s.multiplicity() << "  F=" << s.frobenius()
     << "  g=" << s.genus();
  if (s.content() > 1) os << "  D=" << s.content();
  return os.str();
}

std::string render_rep(const QuotientRep& r) {
  std::string out;
  if (r.scale != 1) out += std::to_string(r.scale) + "*";
  for (std::size_t i = 0; i < r.num_gens.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(r.num_gens[i]);
  }
  out += ':' + std::to_string(r.den);
  return out;
}

}  // namespace nsq
