#include "grm/search_io.hpp"

#include <json.hpp>
#include <stdexcept>

#include "grm/polynomial_text.hpp"

namespace grm {

using nlohmann::json;

std::string report_to_json(const SearchReport& report, bool include_elapsed, bool include_state) {
  const SearchSpec& s = report.spec;
  json j;
  j["q"] = s.field->q();
  j["m"] = s.m;
  j["space"] = s.space;
  j["threshold"] = s.threshold;
  j["shards"] = s.shards;
  j["shard_index"] = s.shard_index;
  j["cosets_examined"] = report.cosets_examined;
  j["checksum"] = report.checksum;
  j["complete"] = report.complete;
  j["elapsed_ms"] = include_elapsed ? json(report.elapsed_ms) : json(nullptr);
  json survivors = json::array();
  for (const auto& sv : report.survivors) {
    json e{{"poly", sv.poly}, {"distance", sv.distance}};
    if (include_state) {
      e["index"] = sv.index;
      e["digits"] = sv.digits;
    }
    survivors.push_back(std::move(e));
  }
  j["survivors"] = std::move(survivors);
  if (include_state) {
    json monos = json::array();
    for (const auto& e : s.monomials) {
      monos.push_back(format_polynomial(ReducedPolynomial::monomial(s.field, s.m, e)));
    }
    j["state"] = {{"field", s.field->name()},
                  {"monomials", monos},
                  {"fixed", s.fixed.field() ? format_polynomial(s.fixed) : "0"},
                  {"scalar_symmetry", s.scalar_symmetry},
                  {"next_block", report.next_block}};
  }
  return j.dump();
}

SearchReport report_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (!j.contains("state")) throw std::invalid_argument("report carries no resume state");
  const json& st = j.at("state");
  SearchReport r;
  SearchSpec& s = r.spec;
  s.field = parse_field(st.at("field").get<std::string>());
  s.m = j.at("m").get<int>();
  s.space = j.at("space").get<std::string>();
  s.threshold = j.at("threshold").get<std::uint64_t>();
  s.shards = j.at("shards").get<int>();
  s.shard_index = j.at("shard_index").get<int>();
  s.scalar_symmetry = st.at("scalar_symmetry").get<bool>();
  s.fixed = parse_polynomial(st.at("fixed").get<std::string>(), s.field, s.m);
  for (const auto& mono : st.at("monomials")) {
    const auto p = parse_polynomial(mono.get<std::string>(), s.field, s.m);
    if (p.terms().size() != 1) throw std::invalid_argument("checkpoint monomial is not a monomial");
    s.monomials.push_back(p.terms().begin()->first);
  }
  r.cosets_examined = j.at("cosets_examined").get<std::uint64_t>();
  r.checksum = j.at("checksum").get<std::string>();
  r.complete = j.at("complete").get<bool>();
  if (j.at("elapsed_ms").is_number()) r.elapsed_ms = j.at("elapsed_ms").get<double>();
  r.next_block = st.at("next_block").get<std::uint64_t>();
  for (const auto& e : j.at("survivors")) {
    Survivor sv;
    sv.poly = e.at("poly").get<std::string>();
    sv.distance = e.at("distance").get<std::uint64_t>();
    sv.index = e.at("index").get<std::uint64_t>();
    sv.digits = e.at("digits").get<std::vector<Elem>>();
    r.survivors.push_back(std::move(sv));
  }
  return r;
}

}  // namespace grm
