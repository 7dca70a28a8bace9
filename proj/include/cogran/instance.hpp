#pragma once

// The shared JSON instance schema, serialization helpers, the worked-example
// deviation registry, and deterministic verification-report rendering.

#include <map>
#include <optional>

#include "cogran/approx.hpp"
#include "cogran/core.hpp"
#include "cogran/harness.hpp"
#include "json.hpp"

namespace cogran {

using Json = nlohmann::ordered_json;

struct InstanceDocument {
  Universe universe;
  BinaryRelation relation;
  std::optional<Granulation> granulation;
  std::map<std::string, Mask> sets;
  std::map<std::string, std::vector<Mask>> families;  // named ideals/antichains
  std::optional<Mask> actual_points;
  // Pairs of subsets of the universe; the relation lives on its power set.
  std::optional<std::vector<std::pair<Mask, Mask>>> powerset_relation;
};

class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : std::runtime_error("schema violation at " + path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

namespace detail {

inline std::vector<std::string> string_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string())
      throw SchemaError(path + "[" + std::to_string(i) + "]", "expected a string label");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

inline Mask label_mask(const Universe& u, const Json& j, const std::string& path) {
  Mask m = 0;
  for (const std::string& l : string_array(j, path)) {
    if (!u.knows(l)) throw SchemaError(path, "unknown element label: " + l);
    m |= bit(u.rank(l));
  }
  return m;
}

}  // namespace detail

inline InstanceDocument parse_instance(const Json& j) {
  if (!j.is_object()) throw SchemaError("$", "document must be a JSON object");
  static const std::vector<std::string> known = {
      "schema", "universe", "relation", "granulation", "sets",
      "families", "actual_points", "powerset_relation"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw SchemaError("$." + it.key(), "unknown key");
  if (!j.contains("schema") || !j["schema"].is_string() || j["schema"] != "1")
    throw SchemaError("$.schema", "schema version field must be present and equal to \"1\"");
  if (!j.contains("universe")) throw SchemaError("$.universe", "missing");
  Universe universe(detail::string_array(j["universe"], "$.universe"));

  if (!j.contains("relation")) throw SchemaError("$.relation", "missing");
  const Json& rel = j["relation"];
  if (!rel.is_array()) throw SchemaError("$.relation", "expected an array of label pairs");
  BinaryRelation relation(universe.size());
  for (std::size_t i = 0; i < rel.size(); ++i) {
    const std::string path = "$.relation[" + std::to_string(i) + "]";
    std::vector<std::string> pair = detail::string_array(rel[i], path);
    if (pair.size() != 2) throw SchemaError(path, "expected exactly two labels");
    if (!universe.knows(pair[0])) throw SchemaError(path, "unknown element label: " + pair[0]);
    if (!universe.knows(pair[1])) throw SchemaError(path, "unknown element label: " + pair[1]);
    relation.add(universe.rank(pair[0]), universe.rank(pair[1]));
  }

  InstanceDocument doc{std::move(universe), std::move(relation), std::nullopt,
                       {},                  {},                  std::nullopt,
                       std::nullopt};

  if (j.contains("granulation")) {
    const Json& g = j["granulation"];
    if (!g.is_object()) throw SchemaError("$.granulation", "expected an object");
    std::vector<Mask> gamma(doc.universe.size(), 0);
    std::vector<bool> given(doc.universe.size(), false);
    for (auto it = g.begin(); it != g.end(); ++it) {
      const std::string path = "$.granulation." + it.key();
      if (!doc.universe.knows(it.key())) throw SchemaError(path, "unknown element label");
      int r = doc.universe.rank(it.key());
      gamma[static_cast<std::size_t>(r)] = detail::label_mask(doc.universe, it.value(), path);
      given[static_cast<std::size_t>(r)] = true;
    }
    for (std::size_t i = 0; i < given.size(); ++i)
      if (!given[i])
        throw SchemaError("$.granulation",
                          "granulation must be total; missing " + doc.universe.label(
                              static_cast<int>(i)));
    doc.granulation = make_granulation(std::move(gamma), doc.universe.size());
  }

  if (j.contains("sets")) {
    const Json& s = j["sets"];
    if (!s.is_object()) throw SchemaError("$.sets", "expected an object");
    for (auto it = s.begin(); it != s.end(); ++it)
      doc.sets[it.key()] =
          detail::label_mask(doc.universe, it.value(), "$.sets." + it.key());
  }

  if (j.contains("families")) {
    const Json& f = j["families"];
    if (!f.is_object()) throw SchemaError("$.families", "expected an object");
    for (auto it = f.begin(); it != f.end(); ++it) {
      const std::string path = "$.families." + it.key();
      if (!it.value().is_array()) throw SchemaError(path, "expected an array of subsets");
      std::vector<Mask> members;
      for (std::size_t i = 0; i < it.value().size(); ++i)
        members.push_back(detail::label_mask(doc.universe, it.value()[i],
                                             path + "[" + std::to_string(i) + "]"));
      doc.families[it.key()] = std::move(members);
    }
  }

  if (j.contains("actual_points"))
    doc.actual_points = detail::label_mask(doc.universe, j["actual_points"], "$.actual_points");

  if (j.contains("powerset_relation")) {
    const Json& p = j["powerset_relation"];
    if (!p.is_array()) throw SchemaError("$.powerset_relation", "expected an array of pairs");
    std::vector<std::pair<Mask, Mask>> pairs;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const std::string path = "$.powerset_relation[" + std::to_string(i) + "]";
      if (!p[i].is_array() || p[i].size() != 2)
        throw SchemaError(path, "expected a pair of subsets");
      pairs.emplace_back(detail::label_mask(doc.universe, p[i][0], path + "[0]"),
                         detail::label_mask(doc.universe, p[i][1], path + "[1]"));
    }
    doc.powerset_relation = std::move(pairs);
  }
  return doc;
}

inline InstanceDocument parse_instance_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, true, false);
  return parse_instance(j);
}

// The power-set-level structure a GOSIH document induces: carrier ranks are
// the subset masks themselves.
inline BinaryRelation powerset_structure(const InstanceDocument& doc) {
  if (!doc.powerset_relation)
    throw std::invalid_argument("document has no powerset_relation");
  const std::size_t carrier = std::size_t{1} << doc.universe.size();
  BinaryRelation r(carrier);
  for (auto [a, b] : *doc.powerset_relation)
    r.add(static_cast<int>(a), static_cast<int>(b));
  return r;
}

// --- JSON rendering ------------------------------------------------------

inline Json mask_json(const Universe& u, Mask m) {
  Json a = Json::array();
  for_each_bit(m, [&](int i) { a.push_back(u.label(i)); });
  return a;
}

inline Json family_json(const Universe& u, const std::vector<Mask>& family) {
  Json a = Json::array();
  for (Mask m : family) a.push_back(mask_json(u, m));
  return a;
}

inline Json approx_result_json(const Universe& u, const ApproxResult& r) {
  Json out;
  out["tag"] = r.tag;
  out["lower"] = mask_json(u, r.lower);
  out["upper"] = mask_json(u, r.upper);
  Json prov = Json::array();
  for (const ProvenanceEntry& e : r.provenance) {
    Json p;
    p["element"] = u.label(e.element);
    p["side"] = e.lower_side ? "lower" : "upper";
    p["tested"] = mask_json(u, e.tested);
    p["verdict"] = e.verdict;
    if (!e.note.empty()) p["note"] = e.note;
    prov.push_back(p);
  }
  out["provenance"] = prov;
  Json devs = Json::array();
  for (const DeviationRecord& d : r.deviations) {
    Json dv;
    dv["op"] = d.op;
    dv["aspect"] = d.aspect;
    dv["computed"] = d.computed;
    dv["published"] = d.published;
    dv["note"] = d.note;
    devs.push_back(dv);
  }
  out["deviations"] = devs;
  return out;
}

inline Json suite_report_json(const SuiteReport& rep) {
  Json out;
  out["suite"] = rep.suite;
  out["params"] = rep.params;
  out["result"] = rep.passed() ? "pass" : "fail";
  auto laws = [](const std::vector<LawResult>& ls) {
    Json a = Json::array();
    for (const LawResult& l : ls) {
      Json e;
      e["law"] = l.law;
      e["checked"] = l.checked;
      e["violations"] = l.violations;
      if (!l.witness.empty()) e["witness"] = l.witness;
      a.push_back(e);
    }
    return a;
  };
  out["asserted"] = laws(rep.asserted);
  out["searched"] = laws(rep.searched);
  return out;
}

// --- worked-example deviation registry -----------------------------------

// The six-element instance of the source's worked example, recognized by
// fingerprint so deviation records fire only on the published data.
inline InstanceDocument worked_example_document() {
  Json j = Json::object();
  j["schema"] = "1";
  j["universe"] = Json::array({"a", "b", "c", "e", "f", "g"});
  j["relation"] = Json::array({Json::array({"a", "c"}), Json::array({"a", "e"}),
                               Json::array({"b", "c"}), Json::array({"b", "e"}),
                               Json::array({"c", "c"}), Json::array({"c", "b"}),
                               Json::array({"e", "a"}), Json::array({"f", "f"})});
  j["granulation"] = Json::object({{"a", Json::array({"b"})},
                                   {"b", Json::array({"g"})},
                                   {"c", Json::array({"c", "a"})},
                                   {"e", Json::array({"e"})},
                                   {"f", Json::array({"f"})},
                                   {"g", Json::array({"g", "b", "c"})}});
  j["sets"] = Json::object({{"A", Json::array({"a", "b"})}});
  return parse_instance(j);
}

inline bool is_worked_example_relation(const InstanceDocument& doc) {
  static const InstanceDocument ref = worked_example_document();
  return doc.universe.labels() == ref.universe.labels() && doc.relation == ref.relation;
}

inline bool is_worked_example_granulation(const InstanceDocument& doc) {
  static const InstanceDocument ref = worked_example_document();
  return is_worked_example_relation(doc) && doc.granulation &&
         doc.granulation->gamma == ref.granulation->gamma;
}

// Published value for the lower approximation of {a,b} differs from the one
// the definitions force; the upper value matches exactly.
inline std::optional<DeviationRecord> worked_example_gosi_deviation(
    const InstanceDocument& doc, Mask a_set, Mask computed_lower) {
  if (!is_worked_example_granulation(doc)) return std::nullopt;
  if (a_set != doc.universe.mask_of({"a", "b"})) return std::nullopt;
  if (computed_lower == doc.universe.mask_of({"b"})) return std::nullopt;
  DeviationRecord d;
  d.op = "gosi";
  d.aspect = "lower approximation of {a, b}";
  for (const std::string& l : doc.universe.labels_of(computed_lower)) d.computed.push_back(l);
  d.published = {"b"};
  d.note =
      "the point test for a succeeds: gamma(a) n A^c = {} is admitted to the "
      "weak-mode ideal family, so a enters the lower approximation; the "
      "published value {b} is irreconcilable with any single empty-set "
      "convention that also reproduces the published upper value {a, b, c, g}";
  return d;
}

// The published ideal list names only two nontrivial weak-mode ideals; the
// exhaustive scan finds three more.
inline std::optional<DeviationRecord> worked_example_ideal_deviation(
    const InstanceDocument& doc, DirectednessMode mode, const std::vector<Mask>& family) {
  if (!is_worked_example_relation(doc) || mode != DirectednessMode::Weak) return std::nullopt;
  const Universe& u = doc.universe;
  std::vector<Mask> extra = {u.mask_of({"g"}), u.mask_of({"f", "g"}),
                             u.mask_of({"a", "b", "c", "e", "g"})};
  DeviationRecord d;
  d.op = "ideals";
  d.aspect = "weak-mode sigma-ideal family";
  bool any = false;
  for (Mask m : extra)
    if (std::find(family.begin(), family.end(), m) != family.end()) {
      d.computed.push_back(u.format(m));
      any = true;
    }
  if (!any) return std::nullopt;
  d.published = {u.format(u.mask_of({"a", "b", "c", "e"})),
                 u.format(u.mask_of({"a", "b", "c", "e", "f"}))};
  d.note =
      "the published account lists only these two nontrivial ideals; the "
      "exhaustive weak-mode scan also finds the computed sets, each of which "
      "passes down-closure and weak directedness";
  return d;
}

// Published U(e,e) = {c} conflicts with the relation's own pair list, which
// forces U(e,e) = {a}.
inline std::optional<DeviationRecord> worked_example_bounds_deviation(
    const InstanceDocument& doc) {
  if (!is_worked_example_relation(doc)) return std::nullopt;
  const Universe& u = doc.universe;
  int e = u.rank("e");
  Mask uee = upper_bounds(doc.relation, e, e);
  if (uee != u.mask_of({"a"})) return std::nullopt;
  DeviationRecord d;
  d.op = "inspect";
  d.aspect = "U(e,e)";
  d.computed = {"a"};
  d.published = {"c"};
  d.note =
      "the relation pair list gives sigma(e,a) as the only successor of e, so "
      "U(e,e) = {a}; the published table prints {c}, inconsistent with its own "
      "row for U(b,e)";
  return d;
}

}  // namespace cogran
