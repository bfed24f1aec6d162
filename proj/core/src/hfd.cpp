#include "hf/hfd.hpp"

#include "hf/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace hf {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw InvalidDiagram("malformed HFD document: " + where + ": " + what, {where + ": " + what});
}

void only_fields(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key)) schema_error(where, "unknown field '" + key + "'");
  }
  for (const auto& key : allowed)
    if (!obj.contains(key)) schema_error(where, "missing field '" + key + "'");
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) schema_error(where, "expected an integer");
  return v.get<int>();
}

std::vector<std::vector<std::string>> curves(const json& v, const std::string& where) {
  if (!v.is_array()) schema_error(where, "expected a list of curves");
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& c = v[i];
    const std::string cw = where + "[" + std::to_string(i) + "]";
    if (!c.is_array()) schema_error(cw, "expected a list of point identifiers");
    std::vector<std::string> pts;
    for (const auto& p : c) {
      if (!p.is_string()) schema_error(cw, "point identifiers must be strings");
      pts.push_back(p.get<std::string>());
    }
    out.push_back(std::move(pts));
  }
  return out;
}

ArcRef arc_ref(const json& v, const std::string& where) {
  only_fields(v, {"curve", "index", "arc", "dir"}, where);
  ArcRef r;
  if (!v["curve"].is_string()) schema_error(where, "curve must be \"a\" or \"b\"");
  const auto c = v["curve"].get<std::string>();
  if (c == "a") r.family = CurveFamily::Alpha;
  else if (c == "b") r.family = CurveFamily::Beta;
  else schema_error(where, "curve must be \"a\" or \"b\"");
  r.curve = as_int(v["index"], where + ".index");
  r.arc = as_int(v["arc"], where + ".arc");
  r.dir = as_int(v["dir"], where + ".dir");
  if (r.dir != 1 && r.dir != -1) schema_error(where, "dir must be +1 or -1");
  return r;
}

}  // namespace

HeegaardDiagram parse_hfd(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidDiagram(std::string("malformed HFD document: ") + e.what(), {e.what()});
  }
  only_fields(doc, {"genus", "alpha", "beta", "regions", "basepoint_region"}, "document");
  HeegaardDiagram d;
  d.genus = as_int(doc["genus"], "genus");
  d.alpha = curves(doc["alpha"], "alpha");
  d.beta = curves(doc["beta"], "beta");
  d.basepoint_region = as_int(doc["basepoint_region"], "basepoint_region");
  const auto& regions = doc["regions"];
  if (!regions.is_array()) schema_error("regions", "expected a list");
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const std::string rw = "regions[" + std::to_string(i) + "]";
    only_fields(regions[i], {"genus", "boundary"}, rw);
    Region reg;
    reg.genus = as_int(regions[i]["genus"], rw + ".genus");
    const auto& boundary = regions[i]["boundary"];
    if (!boundary.is_array()) schema_error(rw + ".boundary", "expected a list of cycles");
    for (std::size_t c = 0; c < boundary.size(); ++c) {
      const std::string cw = rw + ".boundary[" + std::to_string(c) + "]";
      if (!boundary[c].is_array()) schema_error(cw, "expected a list of arc references");
      BoundaryCycle cycle;
      for (std::size_t k = 0; k < boundary[c].size(); ++k)
        cycle.push_back(arc_ref(boundary[c][k], cw + "[" + std::to_string(k) + "]"));
      reg.boundary.push_back(std::move(cycle));
    }
    d.regions.push_back(std::move(reg));
  }
  return d;
}

HeegaardDiagram read_hfd(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidDiagram("cannot open diagram file " + path.string(), {"cannot open " + path.string()});
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_hfd(ss.str());
}

std::string to_hfd(const HeegaardDiagram& d) {
  nlohmann::ordered_json doc;
  doc["genus"] = d.genus;
  doc["alpha"] = d.alpha;
  doc["beta"] = d.beta;
  auto regions = nlohmann::ordered_json::array();
  for (const auto& reg : d.regions) {
    nlohmann::ordered_json r;
    r["genus"] = reg.genus;
    auto boundary = nlohmann::ordered_json::array();
    for (const auto& cycle : reg.boundary) {
      auto c = nlohmann::ordered_json::array();
      for (const auto& a : cycle) {
        nlohmann::ordered_json ref;
        ref["curve"] = a.family == CurveFamily::Alpha ? "a" : "b";
        ref["index"] = a.curve;
        ref["arc"] = a.arc;
        ref["dir"] = a.dir;
        c.push_back(std::move(ref));
      }
      boundary.push_back(std::move(c));
    }
    r["boundary"] = std::move(boundary);
    regions.push_back(std::move(r));
  }
  doc["regions"] = std::move(regions);
  doc["basepoint_region"] = d.basepoint_region;
  return doc.dump(2) + "\n";
}

void write_hfd(const HeegaardDiagram& d, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << to_hfd(d);
}

}  // namespace hf
