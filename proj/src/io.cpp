#include "rackhom/io.hpp"

#include <numeric>
#include <sstream>

namespace rackhom {

using nlohmann::json;

std::vector<int> permutation_from_cycles(int degree,
                                         const std::vector<std::vector<int>>& cycles) {
  std::vector<int> p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& cyc : cycles) {
    for (int v : cyc)
      if (v < 0 || v >= degree) throw Error("cycle entry out of range");
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      p[from] = to;
    }
  }
  return p;
}

FiniteGroup group_from_json(const json& j) {
  if (!j.is_object()) throw Error("group input must be a JSON object");
  if (j.contains("table")) {
    int n = j.at("order").get<int>();
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != n)
      throw Error("table size does not match declared order");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteGroup::from_cayley(table, std::move(labels));
  }
  if (j.contains("generators")) {
    int degree = j.at("degree").get<int>();
    std::vector<std::vector<int>> perms;
    for (const auto& gen : j.at("generators"))
      perms.push_back(permutation_from_cycles(
          degree, gen.get<std::vector<std::vector<int>>>()));
    return FiniteGroup::from_permutations(degree, perms);
  }
  throw Error("group input needs either \"table\" or \"generators\"");
}

namespace {

json verdict_to_json(const Verdict& v) {
  return {{"status", to_string(v.status)}, {"detail", v.detail}};
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  std::string s = j.at("status").get<std::string>();
  v.status = s == "holds" ? VerdictStatus::Holds
             : s == "fails" ? VerdictStatus::Fails
                            : VerdictStatus::NotApplicable;
  v.detail = j.at("detail").get<std::string>();
  return v;
}

}  // namespace

json homology_to_json(const HomologyProfile& H) {
  json torsion = json::array();
  for (const auto& degree : H.torsion) {
    json t = json::array();
    for (const auto& v : degree) t.push_back(v.str());
    torsion.push_back(std::move(t));
  }
  return {{"top_degree", H.top_degree}, {"betti", H.betti}, {"torsion", torsion}};
}

HomologyProfile homology_from_json(const json& j) {
  HomologyProfile H;
  H.top_degree = j.at("top_degree").get<int>();
  H.betti = j.at("betti").get<std::vector<long long>>();
  for (const auto& degree : j.at("torsion")) {
    std::vector<BigInt> t;
    for (const auto& v : degree) t.emplace_back(v.get<std::string>());
    H.torsion.push_back(std::move(t));
  }
  return H;
}

json report_to_json(const GroupReport& rep, bool include_timings) {
  json classes = json::array();
  for (const auto& c : rep.classes) {
    json jc = {{"class_index", c.class_index},
               {"rep_id", c.rep_id},
               {"rep_label", c.rep_label},
               {"class_size", c.class_size},
               {"central", c.central},
               {"connected", c.connected},
               {"h_order", c.h_order},
               {"m", c.m},
               {"sphere_degree", c.sphere_degree},
               {"cap_exceeded", c.cap_exceeded},
               {"proper", verdict_to_json(c.proper)},
               {"corollary", verdict_to_json(c.corollary)},
               {"maximal_agreement", verdict_to_json(c.maximal_agreement)},
               {"phi_laws", verdict_to_json(c.phi_laws)},
               {"boolean_image", verdict_to_json(c.boolean_image)},
               {"sphere", verdict_to_json(c.sphere)},
               {"homology", homology_to_json(c.homology)}};
    if (include_timings) jc["millis"] = c.millis;
    classes.push_back(std::move(jc));
  }
  json jp;
  switch (rep.p.kind) {
    case PGroupKind::Yes: jp = rep.p.prime; break;
    case PGroupKind::Trivial: jp = "trivial"; break;
    case PGroupKind::No: jp = nullptr; break;
  }
  return {{"format", 1},
          {"descriptor", rep.descriptor},
          {"order", rep.order},
          {"p", jp},
          {"nilpotent", rep.nilpotent},
          {"cyclic", rep.cyclic},
          {"scope_note", GroupReport::scope_note()},
          {"classes", classes},
          {"overall", to_string(rep.overall)},
          {"any_cap_exceeded", rep.any_cap_exceeded}};
}

GroupReport report_from_json(const json& j) {
  GroupReport rep;
  rep.descriptor = j.at("descriptor").get<std::string>();
  rep.order = j.at("order").get<int>();
  const auto& jp = j.at("p");
  if (jp.is_null()) rep.p = {PGroupKind::No, 0};
  else if (jp.is_string()) rep.p = {PGroupKind::Trivial, 0};
  else rep.p = {PGroupKind::Yes, jp.get<int>()};
  rep.nilpotent = j.at("nilpotent").get<bool>();
  rep.cyclic = j.at("cyclic").get<bool>();
  for (const auto& jc : j.at("classes")) {
    ClassReport c;
    c.class_index = jc.at("class_index").get<int>();
    c.rep_id = jc.at("rep_id").get<int>();
    c.rep_label = jc.at("rep_label").get<std::string>();
    c.class_size = jc.at("class_size").get<int>();
    c.central = jc.at("central").get<bool>();
    c.connected = jc.at("connected").get<bool>();
    c.h_order = jc.at("h_order").get<int>();
    c.m = jc.at("m").get<int>();
    c.sphere_degree = jc.at("sphere_degree").get<int>();
    c.cap_exceeded = jc.at("cap_exceeded").get<bool>();
    c.proper = verdict_from_json(jc.at("proper"));
    c.corollary = verdict_from_json(jc.at("corollary"));
    c.maximal_agreement = verdict_from_json(jc.at("maximal_agreement"));
    c.phi_laws = verdict_from_json(jc.at("phi_laws"));
    c.boolean_image = verdict_from_json(jc.at("boolean_image"));
    c.sphere = verdict_from_json(jc.at("sphere"));
    c.homology = homology_from_json(jc.at("homology"));
    rep.classes.push_back(std::move(c));
  }
  std::string ov = j.at("overall").get<std::string>();
  rep.overall = ov == "holds" ? VerdictStatus::Holds
                : ov == "fails" ? VerdictStatus::Fails
                                : VerdictStatus::NotApplicable;
  rep.any_cap_exceeded = j.at("any_cap_exceeded").get<bool>();
  return rep;
}

std::string report_to_text(const GroupReport& rep, bool include_timings) {
  std::ostringstream os;
  os << "group: " << rep.descriptor << "  order " << rep.order;
  switch (rep.p.kind) {
    case PGroupKind::Yes: os << "  p = " << rep.p.prime; break;
    case PGroupKind::Trivial: os << "  p-group (trivial: any p)"; break;
    case PGroupKind::No: os << "  not a p-group"; break;
  }
  os << (rep.nilpotent ? "  nilpotent" : "") << (rep.cyclic ? "  cyclic" : "") << "\n";
  os << "note: " << GroupReport::scope_note() << "\n";
  for (const auto& c : rep.classes) {
    os << "  class " << c.class_index << " rep=" << c.rep_label
       << " |C|=" << c.class_size << " central=" << (c.central ? "y" : "n")
       << " connected=" << (c.connected ? "y" : "n") << " |H|=" << c.h_order
       << " m=" << c.m;
    if (c.cap_exceeded) {
      os << "  CAP EXCEEDED\n";
      continue;
    }
    os << "\n    proper: " << to_string(c.proper.status)
       << "  corollary: " << to_string(c.corollary.status)
       << "  maximal: " << to_string(c.maximal_agreement.status)
       << "  phi: " << to_string(c.phi_laws.status)
       << "  2^[m]: " << to_string(c.boolean_image.status)
       << "  sphere(S^" << c.sphere_degree
       << "): " << to_string(c.sphere.status);
    if (include_timings) os << "  [" << c.millis << " ms]";
    os << "\n";
    for (const Verdict* v : {&c.proper, &c.corollary, &c.maximal_agreement,
                             &c.phi_laws, &c.boolean_image, &c.sphere})
      if (v->status == VerdictStatus::Fails)
        os << "    FALSIFIED: " << v->detail << "\n";
  }
  os << "overall: " << to_string(rep.overall) << "\n";
  return os.str();
}

json poset_to_json(const SubrackPoset& P, const Rack& R) {
  json elements = json::array();
  for (RackSet s : P.elements) {
    json e = json::array();
    for (int i = 0; i < P.carrier_size; ++i)
      if (s >> i & 1) e.push_back(i);
    elements.push_back(std::move(e));
  }
  json hasse = json::array();
  for (int i = 0; i < static_cast<int>(P.elements.size()); ++i)
    for (int j : P.upper_covers[i]) hasse.push_back(json::array({i, j}));
  json out = {{"format", 1},
              {"carrier_size", P.carrier_size},
              {"elements", elements},
              {"hasse", hasse},
              {"bottom", P.bottom},
              {"top", P.top}};
  if (R.has_element_map()) out["element_map"] = R.element_map();
  return out;
}

json complex_to_json(const OrderComplex& K) {
  return {{"format", 1},
          {"vertex_count", K.vertex_count},
          {"vertex_poset_index", K.vertex_poset_index},
          {"facets", K.facets},
          {"dimension", K.dimension()},
          {"f_vector", K.f_vector()}};
}

json orbits_to_json(const OrbitDecomposition& dec, const Rack& R) {
  json orbits = json::array();
  for (RackSet o : dec.orbits) {
    json e = json::array();
    for (int i = 0; i < R.size(); ++i)
      if (o >> i & 1) e.push_back(i);
    orbits.push_back(std::move(e));
  }
  return {{"format", 1}, {"m", dec.m()}, {"orbits", orbits}};
}

}  // namespace rackhom
