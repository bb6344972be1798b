#include "primaltop/space_io.hpp"

#include <fstream>
#include <sstream>

namespace primaltop {

using nlohmann::json;

PrimalSpace SpaceDocument::to_space() const {
  Topology t = Topology::validate(topology_family);
  Primal p = Primal::validate(primal_family);
  return PrimalSpace::create(std::move(t), std::move(p));
}

namespace {

std::vector<std::string> parse_name_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::string> names;
  names.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string())
      throw ParseError(std::string(what) + " must contain strings only");
    names.push_back(item.get<std::string>());
  }
  return names;
}

SetFamily parse_family(const json& j, const UniversePtr& universe, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of subsets");
  std::vector<Bits> members;
  members.reserve(j.size());
  for (const auto& subset : j) {
    const auto names = parse_name_array(subset, what);
    try {
      members.push_back(Subset::of(universe, names).bits());
    } catch (const UnknownPointError& e) {
      throw ParseError(std::string(what) + ": " + e.what());
    }
  }
  return SetFamily(universe, std::move(members));
}

}  // namespace

SpaceDocument parse_space_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("a space document must be a JSON object");
  for (const char* key : {"universe", "topology", "primal"})
    if (!doc.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");

  UniversePtr universe;
  try {
    universe = Universe::make(parse_name_array(doc["universe"], "universe"));
  } catch (const Error& e) {
    throw ParseError(std::string("universe: ") + e.what());
  }

  SpaceDocument out{
      doc.value("name", std::string()),
      universe,
      parse_family(doc["topology"], universe, "topology"),
      parse_family(doc["primal"], universe, "primal"),
  };
  return out;
}

SpaceDocument load_space_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read \"" + path.string() + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_space_document(buffer.str());
}

std::string serialize_space_document(const SpaceDocument& doc) {
  json out;
  if (!doc.name.empty()) out["name"] = doc.name;
  out["universe"] = doc.universe->points();
  out["topology"] = family_to_json(doc.topology_family);
  out["primal"] = family_to_json(doc.primal_family);
  return out.dump(2) + "\n";
}

Report::Report(json body) : body_(std::move(body)) {
  if (!body_.is_object() || !body_.contains("schema_version"))
    throw InternalError("report bodies carry a schema_version field");
}

Report Report::parse(const std::string& text) {
  json body;
  try {
    body = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what());
  }
  if (!body.is_object() || !body.contains("schema_version"))
    throw ParseError("a report must be an object with a schema_version field");
  return Report(std::move(body));
}

std::string Report::machine() const { return body_.dump(2) + "\n"; }

namespace {

std::string names_to_set_text(const json& names) {
  std::string out = "{";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i].get<std::string>();
  }
  return out + "}";
}

std::string family_text(const json& family) {
  std::string out = "{";
  for (size_t i = 0; i < family.size(); ++i) {
    out += (i ? ", " : " ") + names_to_set_text(family[i]);
  }
  return out + (family.empty() ? "}" : " }");
}

void render_witness(std::ostringstream& out, const json& w, const std::string& indent) {
  out << indent << "witness:";
  for (const auto& s : w["subsets"]) out << " " << names_to_set_text(s);
  out << "\n";
  if (w.contains("note")) out << indent << "  " << w["note"].get<std::string>() << "\n";
  if (w.contains("topology"))
    out << indent << "  topology: " << family_text(w["topology"]) << "\n";
  if (w.contains("primal")) out << indent << "  primal:   " << family_text(w["primal"]) << "\n";
}

void render_results(std::ostringstream& out, const json& results) {
  for (const auto& r : results) {
    const bool direct = r["kind"].get<std::string>() == "direct";
    const bool passed = r["status"].get<std::string>() == "pass";
    std::string tag;
    if (direct)
      tag = passed ? "pass" : "FAIL";
    else
      tag = passed ? "no-witness" : "witness";
    out << "[" << tag << "] " << r["id"].get<std::string>()
        << "  spaces=" << r["spaces_checked"].get<long long>();
    if (r.contains("info")) out << "  (" << r["info"].get<std::string>() << ")";
    out << "\n";
    if (r.contains("witnesses"))
      for (const auto& w : r["witnesses"]) render_witness(out, w, "    ");
  }
}

}  // namespace

std::string Report::table() const {
  std::ostringstream out;
  const std::string command = body_.value("command", std::string());

  if (body_.contains("input")) out << "input    : " << body_["input"].get<std::string>() << "\n";
  if (body_.contains("name") && !body_["name"].get<std::string>().empty())
    out << "space    : " << body_["name"].get<std::string>() << "\n";

  if (command == "validate") {
    out << "status   : " << body_["status"].get<std::string>() << "\n";
    if (body_.contains("axioms"))
      for (const auto& axiom : body_["axioms"])
        out << "  [" << (axiom["ok"].get<bool>() ? "ok" : "violated") << "] "
            << axiom["axiom"].get<std::string>() << "\n";
    if (body_.contains("violation")) {
      const auto& v = body_["violation"];
      out << "violation: " << v["code"].get<std::string>() << "\n";
      out << "  " << v["message"].get<std::string>() << "\n";
    }
  } else if (command == "compute") {
    out << "operator : " << body_["operator"].get<std::string>() << "\n";
    if (body_.contains("set")) out << "set      : " << names_to_set_text(body_["set"]) << "\n";
    if (body_.contains("result")) out << "result   : " << names_to_set_text(body_["result"]) << "\n";
    if (body_.contains("family")) out << "family   : " << family_text(body_["family"]) << "\n";
    if (body_.contains("table")) {
      out << "table    :\n";
      for (const auto& row : body_["table"])
        out << "  " << names_to_set_text(row["set"]) << " -> " << names_to_set_text(row["value"])
            << "\n";
    }
  } else if (command == "check" || command == "sweep") {
    if (body_.contains("n")) out << "n        : " << body_["n"].get<int>() << "\n";
    if (body_.contains("strategy"))
      out << "strategy : " << body_["strategy"].get<std::string>() << "\n";
    if (body_.contains("seed") && !body_["seed"].is_null())
      out << "seed     : " << body_["seed"].get<std::uint64_t>() << "\n";
    render_results(out, body_["results"]);
    out << "overall  : " << body_["status"].get<std::string>() << "\n";
  } else if (command == "enumerate") {
    out << "n          : " << body_["n"].get<int>() << "\n";
    out << "topologies : " << body_["topologies"].get<long long>() << "\n";
    out << "primals    : " << body_["primals"].get<long long>() << "\n";
  } else {
    out << body_.dump(2) << "\n";
  }
  return out.str();
}

json subset_to_json(const Subset& s) { return json(s.names()); }

json family_to_json(const SetFamily& f) {
  json out = json::array();
  for (const auto& s : f.members()) out.push_back(subset_to_json(s));
  return out;
}

json witness_to_json(const SpaceWitness& w) {
  json subsets = json::array();
  for (const auto& s : w.subsets) subsets.push_back(subset_to_json(s));
  return json{
      {"topology", family_to_json(w.topology_opens)},
      {"primal", family_to_json(w.primal_members)},
      {"subsets", std::move(subsets)},
      {"note", w.note},
  };
}

json check_report_to_json(const CheckReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(witness_to_json(w));
  json out{
      {"id", r.theorem_id},
      {"kind", r.kind == TheoremKind::Direct ? "direct" : "converse"},
      {"status", r.passed ? "pass" : "fail"},
      {"spaces_checked", r.spaces_checked},
      {"witnesses", std::move(witnesses)},
  };
  if (!r.info.empty()) out["info"] = r.info;
  return out;
}

}  // namespace primaltop
