#include "cadef_cli/report.hpp"

namespace cadef::cli {

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const GeometricType& t) {
  Json j = Json::object();
  for (const auto& [size, count] : t.counts) j[std::to_string(size)] = count;
  return j;
}

Json to_json(const MapCheck& m) {
  Json j;
  j["verdict"] = std::string(to_string(m.verdict));
  j["failing_relation"] = m.failing_relation ? Json(*m.failing_relation) : Json(nullptr);
  j["source_dim"] = m.source_dim;
  j["target_dim"] = m.target_dim;
  j["rank"] = m.rank;
  return j;
}

namespace {

Json factors_json(const std::vector<Factor>& fs) {
  Json j = Json::array();
  for (const auto& f : fs) j.push_back(f.label());
  return j;
}

}  // namespace

Json to_json(const FiberCheck& c) {
  Json j;
  j["at"] = to_json(c.at);
  j["dim"] = c.dim;
  j["centre_dim"] = c.centre_dim;
  j["radical_dim"] = c.radical_dim;
  j["block_dims"] = c.block_dims;
  j["ok"] = c.ok;
  if (!c.failure.empty()) j["failure"] = c.failure;
  Json blocks = Json::array();
  for (const auto& b : c.blocks) {
    Json bj;
    bj["selector"] = b.selector;
    bj["factor"] = b.factor.label();
    bj["dim"] = b.dim;
    bj["radical_dim"] = b.radical_dim;
    if (b.type) bj["geometric_type"] = b.type->to_string();
    if (b.map) bj["map"] = to_json(*b.map);
    if (!b.map_text.empty()) bj["map_text"] = b.map_text;
    bj["ok"] = b.ok;
    if (!b.failure.empty()) bj["failure"] = b.failure;
    blocks.push_back(std::move(bj));
  }
  j["blocks"] = std::move(blocks);
  if (!c.aux.empty()) {
    Json aux = Json::array();
    for (const auto& a : c.aux) {
      Json aj = to_json(a.map);
      aj["description"] = a.description;
      aj["presentation"] = a.presentation;
      aux.push_back(std::move(aj));
    }
    j["aux"] = std::move(aux);
  }
  return j;
}

Json to_json(const CertEdge& e) {
  Json j;
  j["family"] = e.spec.family.name;
  j["special_at"] = to_json(e.spec.special_at);
  j["sources"] = factors_json(e.spec.sources);
  j["target"] = factors_json(e.target);
  j["verified"] = e.verified;
  if (!e.failure.empty()) j["failure"] = e.failure;
  j["special"] = to_json(e.special);
  Json samples = Json::array();
  for (const auto& s : e.samples) samples.push_back(to_json(s));
  j["samples"] = std::move(samples);
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["source"] = factors_json(c.source());
  j["target"] = factors_json(c.target());
  j["target_type"] = c.target_type().to_string();
  j["complete"] = c.complete();
  j["verified"] = c.verified();
  j["length"] = c.chain.size();
  Json chain = Json::array();
  for (const auto& e : c.chain) chain.push_back(to_json(e));
  j["chain"] = std::move(chain);
  return j;
}

Json to_json(const InvariantRecord& r) {
  Json j;
  j["dim"] = r.dim;
  j["centre_dim"] = r.centre_dim;
  j["gb_added"] = r.gb_added;
  j["nilpotency_witness"] = r.witness;
  j["nilpotency_index"] = r.nilpotency_index;
  return j;
}

Json to_json(const HochschildReport& r) {
  Json j;
  j["dims"] = r.dims;
  j["cochain_dims"] = r.cochain_dims;
  j["ranks"] = r.ranks;
  j["k_max"] = r.k_max;
  j["complex"] = r.reduced ? "normalized" : "standard";
  return j;
}

Json to_json(const Reproduction& r) {
  Json j;
  j["algebra"] = r.spec.name();
  Json stages;
  if (r.built) {
    stages["construction"] = {{"confluent", r.built->confluent},
                              {"dim", r.built->algebra.dim()},
                              {"rules", rules_json(r.built->system)}};
  }
  if (r.computed) {
    Json inv;
    inv["computed"] = to_json(*r.computed);
    inv["expected"] = r.expected ? to_json(*r.expected) : Json(nullptr);
    inv["match"] = r.invariants_match;
    stages["invariants"] = std::move(inv);
    Json ob;
    Json sols = Json::array();
    for (const auto& [k, l] : r.solutions) sols.push_back({{"k", k}, {"l", l}});
    ob["inputs"] = {{"d", r.computed->dim}, {"z", r.computed->centre_dim}, {"p", r.computed->nilpotency_index}};
    ob["solutions"] = std::move(sols);
    ob["unique"] = r.unique;
    ob["target"] = r.obstruction_target ? Json(r.obstruction_target->to_string()) : Json(nullptr);
    stages["obstruction"] = std::move(ob);
  }
  if (r.certificate) stages["certificate"] = to_json(*r.certificate);
  stages["comparison"] = {
      {"expected_target", r.expected_target.to_string()},
      {"certified_target", r.certified_target ? Json(r.certified_target->to_string()) : Json(nullptr)},
      {"obstruction_target", r.obstruction_target ? Json(r.obstruction_target->to_string()) : Json(nullptr)},
      {"match", r.match}};
  j["stages"] = std::move(stages);
  j["target"] = r.certified_target ? Json(r.certified_target->to_string()) : Json(nullptr);
  j["unique"] = r.unique;
  j["match"] = r.match;
  j["ok"] = r.ok();
  if (!r.ok()) j["failed_stage"] = {{"stage", r.failed_stage}, {"message", r.failure}};
  j["notes"] = r.notes;
  return j;
}

Json rules_json(const ncgb::RewritingSystem& sys) {
  Json j = Json::array();
  const auto& al = sys.alphabet();
  for (const auto& r : sys.rules()) {
    ncgb::NCPoly tail = -r.tail;
    j.push_back(al.render(r.lead) + " -> " + (tail.is_zero() ? std::string("0") : tail.to_string(al)));
  }
  return j;
}

}  // namespace cadef::cli
