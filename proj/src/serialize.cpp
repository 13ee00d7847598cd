#include "kcross/serialize.hpp"

#include <algorithm>

namespace kcross {

using nlohmann::json;

json family_to_json_array(const Family& f) {
  json arr = json::array();
  f.for_each_member([&](std::uint64_t mask, std::uint64_t) {
    arr.push_back(mask_to_elements(mask));
  });
  return arr;
}

json pair_to_json(const FamilyPair& p) {
  json doc;
  doc["n"] = p.a.n();
  doc["k"] = p.a.k();
  doc["A"] = family_to_json_array(p.a);
  doc["B"] = family_to_json_array(p.b);
  return doc;
}

namespace {

Family family_from_json_array(const json& arr, const GroundSet& g) {
  if (!arr.is_array()) fail(Errc::parse, "family must be an array of member sets");
  Family f(g);
  for (const auto& member : arr) {
    if (!member.is_array()) fail(Errc::parse, "family member must be an integer array");
    std::vector<int> elems;
    for (const auto& e : member) {
      if (!e.is_number_integer()) fail(Errc::parse, "family member elements must be integers");
      elems.push_back(e.get<int>());
    }
    if (!std::is_sorted(elems.begin(), elems.end()) ||
        std::adjacent_find(elems.begin(), elems.end()) != elems.end())
      fail(Errc::parse, "member sets must be strictly increasing");
    if (static_cast<int>(elems.size()) != g.k)
      fail(Errc::parse, "member set size differs from k");
    f.insert(elements_to_mask(elems, g.n));
  }
  return f;
}

}  // namespace

FamilyPair pair_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("k"))
    fail(Errc::parse, "pair document requires fields n and k");
  int n = 0, k = 0;
  try {
    n = doc.at("n").get<int>();
    k = doc.at("k").get<int>();
  } catch (const json::exception&) {
    fail(Errc::parse, "fields n and k must be integers");
  }
  GroundSet g(n, k);
  Family a = doc.contains("A") ? family_from_json_array(doc.at("A"), g) : Family(g);
  Family b = doc.contains("B") ? family_from_json_array(doc.at("B"), g) : Family(g);
  return FamilyPair(std::move(a), std::move(b));
}

std::string pair_to_string(const FamilyPair& p) { return pair_to_json(p).dump(2) + "\n"; }

FamilyPair pair_from_string(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(Errc::parse, "invalid JSON");
  return pair_from_json(doc);
}

json regime_report_to_json(const RegimeReport& r) {
  json doc;
  doc["n"] = r.n;
  doc["k"] = r.k;
  doc["regime"] = regime_name(r.regime);
  doc["witnesses"] = {{"C(n-k-1,k-1)", to_decimal(r.c_nk1_k1)},
                      {"C(n-k,k-1)", to_decimal(r.c_nk_k1)},
                      {"C(n-1,k-1)", to_decimal(r.c_n1_k1)}};
  doc["eq32"] = r.eq32;
  doc["eq34"] = r.eq34;
  doc["eq42_strict"] = r.eq42_strict;
  doc["boundary"] = r.boundary;
  doc["approx_thresholds"] = {{"conjecture", r.approx_threshold_conjecture},
                              {"failure", r.approx_threshold_failure}};
  return doc;
}

json bound_set_to_json(const BoundSet& b) {
  json doc;
  doc["n"] = b.n;
  doc["k"] = b.k;
  doc["ekr"] = to_decimal(b.ekr);
  doc["hm"] = to_decimal(b.hm);
  doc["conjecture_value"] = to_decimal(b.conjecture_value);
  doc["prop41_upper"] = to_decimal(b.prop41_upper);
  doc["fstar_value"] = to_decimal(b.fstar_value);
  doc["prop55_value"] = to_decimal(b.prop55_value);
  return doc;
}

json theorem14_report_to_json(const Theorem14Report& r) {
  json doc;
  doc["k"] = r.k;
  doc["n_max"] = r.n_max;
  doc["thresholds"] = {{"conjecture", r.thr_conjecture},
                       {"failure", r.thr_failure},
                       {"failure_alt", r.thr_failure_alt}};
  doc["max_construction_beats_n"] = r.max_construction_beats_n;
  doc["min_conjecture_holds_n"] = r.min_conjecture_holds_n;
  if (r.grey_lo)
    doc["grey_zone"] = {r.grey_lo, r.grey_hi};
  else
    doc["grey_zone"] = nullptr;
  doc["contiguous"] = r.contiguous;
  doc["boundary_points"] = r.boundary_points;
  doc["violations"] = {{"conjecture", r.violations_conjecture},
                       {"failure", r.violations_failure},
                       {"failure_alt", r.violations_failure_alt}};
  return doc;
}

json crossover_to_json(const CrossoverResult& r) {
  json doc;
  doc["which"] = ineq_name(r.which);
  doc["k"] = r.k;
  doc["cap"] = r.cap;
  doc["sense"] = r.fails_sense ? "first_n_where_it_fails" : "first_n_where_it_holds";
  doc["found"] = r.found;
  if (r.found)
    doc["n"] = r.n;
  else
    doc["cap_exhausted"] = true;
  return doc;
}

namespace {

const char* check_name(PairCheck c) {
  switch (c) {
    case PairCheck::disjoint: return "disjoint";
    case PairCheck::cross: return "cross";
    case PairCheck::star_free: return "star_free";
    case PairCheck::pyber: return "pyber";
    case PairCheck::sizes: return "sizes";
  }
  return "?";
}

}  // namespace

json verify_report_to_json(const VerifyReport& r) {
  json doc;
  doc["all_pass"] = r.all_pass;
  json checks = json::array();
  for (const auto& o : r.outcomes) {
    json c;
    c["name"] = check_name(o.check);
    c["pass"] = o.pass;
    if (!o.witness.empty()) c["witness"] = o.witness;
    checks.push_back(std::move(c));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

json outcome_to_json(const SearchOutcome& o) {
  json doc;
  doc["n"] = o.ground.n;
  doc["k"] = o.ground.k;
  doc["mode"] = {{"star_free", o.star_free}, {"allow_overlap", o.allow_overlap}};
  doc["exact"] = o.exact();
  if (o.exact())
    doc["value"] = o.lo;
  else
    doc["interval"] = {o.lo, o.hi};
  doc["lo"] = o.lo;
  doc["hi"] = o.hi;
  json levels = json::array();
  for (const auto& l : o.levels)
    levels.push_back({{"t", l.t}, {"feasible", l.feasible}, {"nodes", l.nodes}});
  doc["stats"] = {{"nodes", o.nodes},
                  {"states", o.states},
                  {"elapsed_ms", o.elapsed_ms},
                  {"symmetry_fixed", o.symmetry_fixed},
                  {"levels", std::move(levels)}};
  if (o.certificate)
    doc["certificate"] = pair_to_json(*o.certificate);
  else
    doc["certificate"] = nullptr;
  return doc;
}

}  // namespace kcross
