// Command-line front end: inspection, ideal enumeration, approximation,
// mereotopological schemes, and the verification suites, over the shared
// JSON instance schema.
//
// Exit codes: 0 success, 1 input error, 2 law failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cogran/instance.hpp"

namespace {

using namespace cogran;

struct GlobalFlags {
  std::string mode = "weak";
  bool no_empty = false;
  std::string empty_meet = "empty";
  std::uint64_t seed = 1;
  std::string report;
};

DirectednessMode parse_mode(const std::string& m) {
  if (m == "weak") return DirectednessMode::Weak;
  if (m == "strict") return DirectednessMode::Strict;
  throw std::invalid_argument("unknown mode (expected strict|weak): " + m);
}

EmptyMeet parse_empty_meet(const std::string& m) {
  if (m == "empty") return EmptyMeet::Empty;
  if (m == "universe") return EmptyMeet::Whole;
  throw std::invalid_argument("unknown empty-meet convention (expected empty|universe): " + m);
}

InstanceDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Json j = Json::parse(buf.str(), nullptr, true, false);
  if (j.is_discarded()) throw std::invalid_argument("instance file is not valid JSON: " + path);
  return parse_instance(j);
}

const std::vector<Mask>& named_family(const InstanceDocument& doc, const std::string& name,
                                      const std::string& what) {
  auto it = doc.families.find(name);
  if (it == doc.families.end())
    throw std::invalid_argument("missing required family for " + what + ": " + name);
  return it->second;
}

Mask named_set(const InstanceDocument& doc, const std::string& name) {
  auto it = doc.sets.find(name);
  if (it == doc.sets.end()) throw std::invalid_argument("unknown set name: " + name);
  return it->second;
}

void emit(const Json& j, const GlobalFlags& g) {
  std::string text = j.dump(2);
  text += "\n";
  if (!g.report.empty()) {
    std::ofstream out(g.report, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open report file: " + g.report);
    out << text;
  }
  std::cout << text;
}

int cmd_inspect(const std::string& instance_path, const GlobalFlags& g) {
  InstanceDocument doc = load_document(instance_path);
  const Universe& u = doc.universe;
  const BinaryRelation& r = doc.relation;
  EmptyMeet em = parse_empty_meet(g.empty_meet);
  std::ostringstream os;
  os << "universe:";
  for (const std::string& l : u.labels()) os << " " << l;
  os << "\n";
  RelationProperties p = relation_properties(r);
  os << "properties: reflexive=" << (p.reflexive ? "true" : "false")
     << " symmetric=" << (p.symmetric ? "true" : "false")
     << " transitive=" << (p.transitive ? "true" : "false")
     << " antisymmetric=" << (p.antisymmetric ? "true" : "false")
     << " quasi-reflexive=" << (p.quasi_reflexive ? "true" : "false")
     << " quasi-order=" << (p.quasi_order ? "true" : "false")
     << " weakly-antisymmetric=" << (p.weakly_antisymmetric ? "true" : "false") << "\n";
  os << "pair bounds:\n";
  const int n = static_cast<int>(u.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      os << "  U(" << u.label(i) << "," << u.label(j)
         << ")=" << u.format(upper_bounds(r, i, j)) << " L(" << u.label(i) << ","
         << u.label(j) << ")=" << u.format(lower_bounds(r, i, j)) << "\n";
  os << "neighborhoods:\n";
  for (int i = 0; i < n; ++i)
    os << "  " << u.label(i) << " U(x,x)=" << u.format(upper_bounds(r, i, i))
       << " L(x,x)=" << u.format(lower_bounds(r, i, i))
       << " <x>=" << u.format(min_neighborhood(r, i, em)) << "\n";
  if (auto dev = worked_example_bounds_deviation(doc))
    os << "deviation: " << dev->aspect << " computed={" << dev->computed.front()
       << "} published={" << dev->published.front() << "} -- " << dev->note << "\n";
  std::string text = os.str();
  if (!g.report.empty()) {
    std::ofstream out(g.report, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open report file: " + g.report);
    out << text;
  }
  std::cout << text;
  return 0;
}

int cmd_ideals(const std::string& instance_path, const GlobalFlags& g) {
  InstanceDocument doc = load_document(instance_path);
  SigmaStructure st(doc.relation, parse_mode(g.mode), !g.no_empty);
  std::vector<Mask> family = enumerate_sigma_ideals(st);
  Json out;
  out["mode"] = mode_name(st.mode);
  out["allow_empty"] = st.allow_empty_ideal;
  Json ideals = Json::array();
  for (Mask k : family) {
    Json e;
    e["members"] = mask_json(doc.universe, k);
    SigmaIdealCheck c = is_sigma_ideal(st, k);
    e["proper"] = true;
    e["down_closed"] = true;
    e["directed"] = true;
    e["verdict"] = c.ok;
    e["convex"] = is_sigma_convex(st, k);
    e["prime"] = is_prime_sigma_ideal(st, k).prime;
    ideals.push_back(e);
  }
  out["ideals"] = ideals;
  Json devs = Json::array();
  if (auto dev = worked_example_ideal_deviation(doc, st.mode, family)) {
    Json d;
    d["op"] = dev->op;
    d["aspect"] = dev->aspect;
    d["computed"] = dev->computed;
    d["published"] = dev->published;
    d["note"] = dev->note;
    devs.push_back(d);
  }
  out["deviations"] = devs;
  emit(out, g);
  return 0;
}

int cmd_approx(const std::string& instance_path, const GlobalFlags& g, const std::string& op,
               const std::string& set_name, const std::string& ideal_name,
               const std::string& antichain_name) {
  InstanceDocument doc = load_document(instance_path);
  Mask a = named_set(doc, set_name);
  EmptyMeet em = parse_empty_meet(g.empty_meet);
  ApproxResult res;
  if (op == "kappa" || op == "iad" || op == "iad_prime" || op == "iasd") {
    SubsetFamily ambient = power_set(doc.universe.size());
    SubsetFamily ideal(doc.universe.size(), named_family(doc, ideal_name, op));
    if (op == "kappa")
      res = approx_kappa(doc.relation, ideal, a, em);
    else if (op == "iasd")
      res = approx_iasd(doc.relation, ambient, ideal, a, em);
    else
      res = approx_iad(doc.relation, ambient, ideal, a, op == "iad_prime", em);
  } else if (op == "gosi" || op == "strong" || op == "antichain") {
    if (!doc.granulation) throw std::invalid_argument("operator requires a granulation");
    SigmaStructure st(doc.relation, parse_mode(g.mode), !g.no_empty);
    if (op == "gosi") {
      res = approx_gosi(st, *doc.granulation, a);
      if (auto dev = worked_example_gosi_deviation(doc, a, res.lower))
        res.deviations.push_back(*dev);
    } else if (op == "strong") {
      res = approx_strong(st, *doc.granulation, a);
    } else {
      res = approx_antichain(st, *doc.granulation,
                             named_family(doc, antichain_name, "antichain"), a);
    }
  } else if (op == "gosih") {
    if (!doc.granulation) throw std::invalid_argument("operator requires a granulation");
    SigmaStructure st(powerset_structure(doc), parse_mode(g.mode), !g.no_empty);
    Mask fixed = 0;
    for (Mask m : named_family(doc, ideal_name, "gosih"))
      fixed |= bit(static_cast<int>(m));
    res = approx_gosih(st, doc.universe.size(), *doc.granulation, fixed, a);
  } else {
    throw std::invalid_argument("unknown operator tag: " + op);
  }
  emit(approx_result_json(doc.universe, res), g);
  return 0;
}

int cmd_mereo(const std::string& instance_path, const GlobalFlags& g,
              const std::string& set_name, const std::string& scheme_name,
              const std::string& gamma_name, const std::string& actual_override,
              std::size_t clan_index, bool ca1_literal) {
  InstanceDocument doc = load_document(instance_path);
  Mask actual = 0;
  if (!actual_override.empty()) {
    std::vector<std::string> labels;
    std::stringstream ss(actual_override);
    std::string item;
    while (std::getline(ss, item, ',')) labels.push_back(item);
    actual = doc.universe.mask_of(labels);
  } else if (doc.actual_points) {
    actual = *doc.actual_points;
  } else {
    throw std::invalid_argument("mereo requires actual_points (document key or flag)");
  }
  DiscreteSpace space(doc.universe, actual);
  ContactStructure c = build_discrete_contact(space, ca1_literal);
  Json out;
  out["actual_points"] = mask_json(doc.universe, actual);
  out["axioms"] = Json::object();
  out["axioms"]["contact"] = axioms_pass(check_axioms(c, AxiomBlock::Contact));
  out["axioms"]["actual_contact"] = axioms_pass(check_axioms(c, AxiomBlock::ActualContact));
  out["axioms"]["actual_existence"] =
      axioms_pass(check_axioms(c, AxiomBlock::ActualExistence));
  std::vector<Clan> cls = clans(c, ClanKind::Clan);
  std::vector<Clan> acls = clans(c, ClanKind::ActualClan);
  out["clans"] = cls.size();
  out["actual_clans"] = acls.size();
  if (acls.empty()) throw std::invalid_argument("structure has no actual clans");
  if (clan_index >= acls.size())
    throw std::invalid_argument("actual clan index out of range");
  const Clan& k = acls[clan_index];
  MereoScheme scheme;
  if (scheme_name == "CG") scheme = MereoScheme::CG;
  else if (scheme_name == "G") scheme = MereoScheme::G;
  else if (scheme_name == "Clan") scheme = MereoScheme::Clan;
  else throw std::invalid_argument("unknown scheme (expected CG|G|Clan): " + scheme_name);
  std::vector<Mask> gamma;
  if (gamma_name == "min") {
    gamma = resolve_gamma(c, GammaChoice::MinNeighborhood);
  } else if (gamma_name == "ca") {
    gamma = resolve_gamma(c, GammaChoice::CaNeighborhood);
  } else if (gamma_name == "file") {
    if (!doc.granulation)
      throw std::invalid_argument("--gamma file requires a granulation in the document");
    gamma = resolve_gamma(c, GammaChoice::Explicit, doc.granulation->gamma);
  } else {
    throw std::invalid_argument("unknown gamma choice (expected min|ca|file): " + gamma_name);
  }
  Mask a = named_set(doc, set_name);
  out["approx"] = approx_result_json(doc.universe, mereo_approx(c, gamma, k, a, scheme));
  emit(out, g);
  return 0;
}

int cmd_verify(const GlobalFlags& g, const std::string& suite_id, bool exhaustive,
               std::size_t count) {
  SuiteOptions opt;
  opt.exhaustive = exhaustive;
  opt.seed = g.seed;
  opt.count = count;
  SuiteReport rep = run_suite(suite_id, opt);
  emit(suite_report_json(rep), g);
  return rep.passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite rough approximation engine over relational ideals"};
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_option("--mode", g.mode, "Directedness mode: strict|weak")->capture_default_str();
  app.add_flag("--no-empty", g.no_empty, "Exclude the empty set from the ideal family");
  app.add_option("--empty-meet", g.empty_meet,
                 "Convention for the empty neighborhood meet: empty|universe")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Random stream seed")->capture_default_str();
  app.add_option("--report", g.report, "Also write the output to this file");

  std::string instance_path, op, set_name = "A", ideal_name = "I", antichain_name = "O";
  std::string scheme_name = "CG", gamma_name = "min", actual_override, suite_id;
  std::size_t clan_index = 0, count = 100;
  bool exhaustive = false, ca1_literal = false;

  CLI::App* inspect = app.add_subcommand("inspect", "Print bounds and neighborhood tables");
  inspect->add_option("instance", instance_path, "Instance JSON file")->required();

  CLI::App* ideals = app.add_subcommand("ideals", "Enumerate the sigma-ideal family");
  ideals->add_option("instance", instance_path, "Instance JSON file")->required();

  CLI::App* approx = app.add_subcommand("approx", "Compute an approximation pair");
  approx->add_option("instance", instance_path, "Instance JSON file")->required();
  approx->add_option("--op", op, "Operator tag")->required();
  approx->add_option("--set", set_name, "Named set to approximate")->capture_default_str();
  approx->add_option("--ideal", ideal_name, "Named family used as the ideal")
      ->capture_default_str();
  approx->add_option("--antichain", antichain_name, "Named family used as the antichain")
      ->capture_default_str();

  CLI::App* mereo = app.add_subcommand("mereo", "Contact-structure approximations");
  mereo->add_option("instance", instance_path, "Instance JSON file")->required();
  mereo->add_option("--set", set_name, "Named set to approximate")->capture_default_str();
  mereo->add_option("--scheme", scheme_name, "Approximation scheme: CG|G|Clan")
      ->capture_default_str();
  mereo->add_option("--gamma", gamma_name, "Granule choice: min|ca|file")
      ->capture_default_str();
  mereo->add_option("--actual-points", actual_override,
                    "Comma-separated actual points (overrides the document)");
  mereo->add_option("--clan", clan_index, "Actual clan index")->capture_default_str();
  mereo->add_flag("--ca1-literal", ca1_literal,
                  "Audit flag: read the first actual-contact axiom literally");

  CLI::App* verify = app.add_subcommand("verify", "Run a law suite");
  verify->add_option("--suite", suite_id, "Suite id")->required();
  verify->add_flag("--exhaustive", exhaustive, "Use the exhaustive instance stream");
  verify->add_option("--count", count, "Random instance count")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (inspect->parsed()) return cmd_inspect(instance_path, g);
    if (ideals->parsed()) return cmd_ideals(instance_path, g);
    if (approx->parsed())
      return cmd_approx(instance_path, g, op, set_name, ideal_name, antichain_name);
    if (mereo->parsed())
      return cmd_mereo(instance_path, g, set_name, scheme_name, gamma_name, actual_override,
                       clan_index, ca1_literal);
    if (verify->parsed()) return cmd_verify(g, suite_id, exhaustive, count);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    // internal law assertions surface as plain logic errors
    std::cerr << "law failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
