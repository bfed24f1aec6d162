#include "cli.hpp"

#include "hf/admissibility.hpp"
#include "hf/corpus.hpp"
#include "hf/floer.hpp"
#include "hf/hfd.hpp"
#include "hf/measures.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

namespace hf::cli {

namespace {

using Json = nlohmann::ordered_json;

Json number(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Json numbers(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(number(x));
  return a;
}

Json rationals(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json ids(const QuadrantStructure& q, const Generator& x) { return generator_ids(q, x); }

std::string joined(const IntVector& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x.str();
  return s;
}

std::string joined(const RatVector& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + to_string(x);
  return s;
}

std::string label(const QuadrantStructure& q, const Generator& x) {
  std::string s;
  for (const auto& id : generator_ids(q, x)) s += (s.empty() ? "" : ",") + id;
  return s;
}

// Left-aligned columns separated by two spaces.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os, const std::string& indent = "") const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (width.size() <= i) width.push_back(0);
        width[i] = std::max(width[i], r[i].size());
      }
    for (const auto& r : rows_) {
      std::string line = indent;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
      }
      os << line << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct Settings {
  bool json = false;
  unsigned threads = 1;
};

// Error carrying the exit code and a structured JSON payload.
struct Failure {
  int code;
  Json detail;
  std::string text;
};

AnalyzedDiagram load(const std::string& path) { return AnalyzedDiagram(read_hfd(path)); }

const SpincClass& pick_class(const std::vector<SpincClass>& classes, int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= classes.size())
    throw UsageError("class index " + std::to_string(index) + " out of range (" + std::to_string(classes.size()) +
                     " classes)");
  return classes[static_cast<std::size_t>(index)];
}

Json domain_json(const AnalyzedDiagram& a, const Domain& d) {
  Json j;
  j["from"] = ids(a.quadrants(), d.from);
  j["to"] = ids(a.quadrants(), d.to);
  j["coefficients"] = numbers(d.coefficients);
  return j;
}

// ---- subcommands ---------------------------------------------------------

int cmd_validate(const std::string& path, const Settings& s, std::ostream& out) {
  const HeegaardDiagram d = read_hfd(path);
  const ValidationReport report = validate(d);
  Json j;
  j["command"] = "validate";
  j["ok"] = report.ok;
  j["genus"] = d.genus;
  j["points"] = report.ok ? Json(quadrants(d).points.size()) : Json(nullptr);
  j["regions"] = d.regions.size();
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"invariant", v.invariant}, {"ids", v.ids}, {"detail", v.detail}});
  j["violations"] = violations;

  if (s.json) {
    out << j.dump(2) << "\n";
  } else if (report.ok) {
    out << "valid: genus " << d.genus << ", " << quadrants(d).points.size() << " points, " << d.regions.size()
        << " regions, basepoint region " << d.basepoint_region << "\n";
  } else {
    out << "invalid diagram: " << report.violations.size() << " violation(s)\n";
    Table t({"invariant", "ids", "detail"});
    for (const auto& v : report.violations) {
      std::string idlist;
      for (const auto& id : v.ids) idlist += (idlist.empty() ? "" : ",") + id;
      t.add({v.invariant, idlist.empty() ? "-" : idlist, v.detail});
    }
    t.print(out, "  ");
  }
  return report.ok ? Ok : InvalidInput;
}

int cmd_generators(const std::string& path, const Settings& s, std::ostream& out) {
  const AnalyzedDiagram a = load(path);
  if (s.json) {
    Json list = Json::array();
    for (const auto& x : a.generators()) list.push_back(ids(a.quadrants(), x));
    out << Json{{"command", "generators"}, {"count", a.generators().size()}, {"generators", list}}.dump(2) << "\n";
    return Ok;
  }
  out << a.generators().size() << " generator(s)\n";
  Table t({"#", "points"});
  for (std::size_t i = 0; i < a.generators().size(); ++i) t.add({std::to_string(i), label(a.quadrants(), a.generators()[i])});
  t.print(out, "  ");
  return Ok;
}

int cmd_spinc(const std::string& path, const Settings& s, std::ostream& out) {
  const AnalyzedDiagram a = load(path);
  const auto classes = spinc_partition(a);
  if (s.json) {
    Json list = Json::array();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      Json members = Json::array();
      for (std::size_t i = 0; i < classes[c].members.size(); ++i)
        members.push_back({{"points", ids(a.quadrants(), classes[c].members[i])}, {"grading", number(classes[c].gradings[i])}});
      list.push_back({{"index", c},
                      {"divisor", number(classes[c].divisor)},
                      {"chern_pairings", numbers(classes[c].chern_row)},
                      {"generators", members}});
    }
    out << Json{{"command", "spinc"}, {"count", classes.size()}, {"classes", list}}.dump(2) << "\n";
    return Ok;
  }
  out << classes.size() << " Spin^c class(es)\n";
  Table t({"class", "divisor", "generator", "grading"});
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t i = 0; i < classes[c].members.size(); ++i)
      t.add({i == 0 ? std::to_string(c) : "", i == 0 ? classes[c].divisor.str() : "",
             label(a.quadrants(), classes[c].members[i]), classes[c].gradings[i].str()});
  t.print(out, "  ");
  return Ok;
}

int cmd_domains(const std::string& path, const std::string& from, const std::string& to, long long index, long long nz,
                const Settings& s, std::ostream& out) {
  const AnalyzedDiagram a = load(path);
  const Generator& x = a.generator(split_ids(from));
  const Generator& y = a.generator(split_ids(to));
  const auto found = positive_domains(a, x, y, BigInt(index), BigInt(nz));
  const bool rigid = index == 1 && nz == 0;

  if (s.json) {
    Json list = Json::array();
    for (const auto& d : found) {
      Json j = domain_json(a, d);
      j["shape"] = rigid ? Json(shape_name(classify_rigid(a, d).tag)) : Json(nullptr);
      list.push_back(j);
    }
    out << Json{{"command", "domains"}, {"from", ids(a.quadrants(), x)}, {"to", ids(a.quadrants(), y)},
                {"index", index},      {"nz", nz},                       {"count", found.size()},
                {"domains", list}}
               .dump(2)
        << "\n";
    return Ok;
  }
  out << found.size() << " positive domain(s) from {" << label(a.quadrants(), x) << "} to {" << label(a.quadrants(), y)
      << "} with index " << index << ", n_z " << nz << "\n";
  if (found.empty()) return Ok;
  std::vector<std::string> header{"#", "coefficients"};
  if (rigid) header.push_back("shape");
  Table t(header);
  for (std::size_t i = 0; i < found.size(); ++i) {
    std::vector<std::string> row{std::to_string(i), joined(found[i].coefficients)};
    if (rigid) row.push_back(shape_name(classify_rigid(a, found[i]).tag));
    t.add(row);
  }
  t.print(out, "  ");
  return Ok;
}

Json report_json(const AdmissibilityReport& r, std::optional<std::size_t> class_index) {
  Json j;
  j["kind"] = r.kind == AdmissibilityKind::Weak ? "weak" : "strong";
  j["class"] = class_index ? Json(*class_index) : Json(nullptr);
  j["verdict"] = r.verdict;
  if (r.kind == AdmissibilityKind::Strong) {
    j["positive_part"] = r.positive_part;
    j["zero_part"] = r.zero_part;
  }
  j["witness"] = r.witness ? numbers(*r.witness) : Json(nullptr);
  j["witness_pairing"] = r.witness_pairing ? number(*r.witness_pairing) : Json(nullptr);
  j["certificate"] = r.certificate ? rationals(*r.certificate) : Json(nullptr);
  return j;
}

void report_text(const AdmissibilityReport& r, std::optional<std::size_t> class_index, std::ostream& out) {
  out << (r.kind == AdmissibilityKind::Weak ? "weak" : "strong") << " admissibility";
  if (class_index) out << " (class " << *class_index << ")";
  out << ": " << (r.verdict ? "yes" : "no") << "\n";
  if (r.kind == AdmissibilityKind::Strong)
    out << "  positive pairings: " << (r.positive_part ? "ok" : "violated")
        << ", zero pairings: " << (r.zero_part ? "ok" : "violated") << "\n";
  if (r.witness) {
    out << "  witness: " << joined(*r.witness);
    if (r.witness_pairing) out << "  (c1 pairing " << *r.witness_pairing << ")";
    out << "\n";
  }
  if (r.certificate) out << "  certificate: " << joined(*r.certificate) << "\n";
}

int cmd_admissible(const std::string& path, int class_index, bool strong, const Settings& s, std::ostream& out) {
  const AnalyzedDiagram a = load(path);
  std::vector<std::pair<AdmissibilityReport, std::optional<std::size_t>>> reports;
  if (!strong && class_index < 0) {
    reports.emplace_back(weak_admissible(a), std::nullopt);
  } else {
    const auto classes = spinc_partition(a);
    std::vector<std::size_t> chosen;
    if (class_index >= 0) {
      pick_class(classes, class_index);
      chosen.push_back(static_cast<std::size_t>(class_index));
    } else {
      for (std::size_t c = 0; c < classes.size(); ++c) chosen.push_back(c);
    }
    for (std::size_t c : chosen)
      reports.emplace_back(strong ? strong_admissible(a, classes[c]) : weak_admissible(a, &classes[c]), c);
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.first.verdict; });
  if (s.json) {
    Json list = Json::array();
    for (const auto& [r, c] : reports) list.push_back(report_json(r, c));
    out << Json{{"command", "admissible"}, {"verdict", ok}, {"reports", list}}.dump(2) << "\n";
  } else {
    for (const auto& [r, c] : reports) report_text(r, c, out);
  }
  return ok ? Ok : NotAdmissibleOrUnbounded;
}

int cmd_homology(const std::string& path, bool strict, const Settings& s, std::ostream& out) {
  const AnalyzedDiagram a = load(path);
  FloerOptions options;
  options.strict_rectangles = strict;
  options.threads = s.threads;
  const HomologyReport report = homology(a, options);
  if (s.json) {
    Json list = Json::array();
    for (std::size_t c = 0; c < report.classes.size(); ++c) {
      Json ranks = Json::array();
      for (const auto& [k, r] : report.homology[c].ranks) ranks.push_back({{"grading", number(k)}, {"rank", r}});
      list.push_back({{"index", c},
                      {"generators", report.classes[c].members.size()},
                      {"divisor", number(report.homology[c].divisor)},
                      {"ranks", ranks},
                      {"total", report.homology[c].total}});
    }
    out << Json{{"command", "homology"}, {"strict_rectangles", strict}, {"total_rank", report.total_rank}, {"classes", list}}
               .dump(2)
        << "\n";
    return Ok;
  }
  Table t({"class", "divisor", "grading", "rank"});
  for (std::size_t c = 0; c < report.classes.size(); ++c) {
    bool first = true;
    for (const auto& [k, r] : report.homology[c].ranks) {
      t.add({first ? std::to_string(c) : "", first ? report.homology[c].divisor.str() : "", k.str(), std::to_string(r)});
      first = false;
    }
  }
  t.print(out);
  out << "total rank " << report.total_rank << "\n";
  return Ok;
}

int write_diagram(const HeegaardDiagram& d, const std::string& output, const std::string& command, const Settings& s,
                  std::ostream& out) {
  if (output.empty()) {
    out << to_hfd(d);
    return Ok;
  }
  write_hfd(d, output);
  if (s.json)
    out << Json{{"command", command}, {"output", output}, {"genus", d.genus}, {"regions", d.regions.size()}}.dump(2)
        << "\n";
  else
    out << "wrote " << output << ": genus " << d.genus << ", " << d.regions.size() << " regions\n";
  return Ok;
}

CorpusName corpus_name(const std::string& name, int p, int q, int g) {
  CorpusName n = CorpusName::parse(name);
  if (n.family == "lens" && name == "lens") {
    n.p = p;
    n.q = q;
  } else if (n.family == "gsph" && name == "gsph") {
    n.g = g;
  }
  return n;
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"kind", kind}, {"message", message}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial Heegaard Floer calculator", "hf"};
  app.fallthrough();
  app.require_subcommand(1);
  Settings settings;
  app.add_flag("--json", settings.json, "Print a JSON report");
  app.add_option("--threads", settings.threads, "Worker threads for the differential")->check(CLI::Range(1u, 256u));

  std::string file, output, from, to, name;
  long long index = 0, nz = 0;
  int class_index = -1, p = 0, q = 0, g = 0;
  bool strong = false, strict = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check every structural invariant");
  validate_cmd->add_option("file", file, "HFD file")->required();
  auto* generators_cmd = app.add_subcommand("generators", "List generators");
  generators_cmd->add_option("file", file, "HFD file")->required();
  auto* spinc_cmd = app.add_subcommand("spinc", "Spin^c classes, grading divisors and relative gradings");
  spinc_cmd->add_option("file", file, "HFD file")->required();
  auto* domains_cmd = app.add_subcommand("domains", "Enumerate positive domains");
  domains_cmd->add_option("file", file, "HFD file")->required();
  domains_cmd->add_option("--from", from, "Source generator, comma separated point ids")->required();
  domains_cmd->add_option("--to", to, "Target generator, comma separated point ids")->required();
  domains_cmd->add_option("--index", index, "Maslov index")->required();
  domains_cmd->add_option("--nz", nz, "Multiplicity at the basepoint")->required();
  auto* admissible_cmd = app.add_subcommand("admissible", "Weak or strong admissibility with certificates");
  admissible_cmd->add_option("file", file, "HFD file")->required();
  admissible_cmd->add_option("--class", class_index, "Restrict to one Spin^c class")->check(CLI::NonNegativeNumber);
  admissible_cmd->add_flag("--strong", strong, "Strong admissibility (every class unless --class is given)");
  auto* homology_cmd = app.add_subcommand("homology", "Hat homology over F2");
  homology_cmd->add_option("file", file, "HFD file")->required();
  homology_cmd->add_flag("--strict-rectangles", strict, "Refuse to count rectangles");
  auto* stabilize_cmd = app.add_subcommand("stabilize", "Connected sum with the genus-one sphere diagram");
  stabilize_cmd->add_option("file", file, "HFD file")->required();
  stabilize_cmd->add_option("-o,--output", output, "Output file (stdout when omitted)");
  auto* corpus_cmd = app.add_subcommand("corpus", "Write a built-in diagram");
  corpus_cmd->add_option("name", name, "s3_g1, s1s2_g1, s1s2_bad, s1s2_wind, lens, gsph, lens(p,q) or gsph(g)")
      ->required();
  corpus_cmd->add_option("-p", p, "lens parameter p");
  corpus_cmd->add_option("-q", q, "lens parameter q");
  corpus_cmd->add_option("-g", g, "gsph genus");
  corpus_cmd->add_option("-o,--output", output, "Output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    if (settings.json) {
      out << Json{{"command", nullptr}, {"error", error_json("usage", e.what())}}.dump(2) << "\n";
      return Usage;
    }
    app.exit(e, out, err);
    return Usage;
  }

  const CLI::App* used = app.get_subcommands().front();
  const std::string command = used->get_name();
  auto fail = [&](int code, Json detail, const std::string& text) {
    if (settings.json)
      out << Json{{"command", command}, {"error", detail}}.dump(2) << "\n";
    else
      err << "hf " << command << ": " << text;
    return code;
  };

  try {
    if (used == validate_cmd) return cmd_validate(file, settings, out);
    if (used == generators_cmd) return cmd_generators(file, settings, out);
    if (used == spinc_cmd) return cmd_spinc(file, settings, out);
    if (used == domains_cmd) return cmd_domains(file, from, to, index, nz, settings, out);
    if (used == admissible_cmd) return cmd_admissible(file, class_index, strong, settings, out);
    if (used == homology_cmd) return cmd_homology(file, strict, settings, out);
    if (used == stabilize_cmd) return write_diagram(stabilize(AnalyzedDiagram(read_hfd(file)).diagram()), output, command, settings, out);
    if (used == corpus_cmd) return write_diagram(build(corpus_name(name, p, q, g)), output, command, settings, out);
  } catch (const InvalidDiagram& e) {
    Json detail = error_json("invalid_diagram", e.what());
    detail["details"] = e.details();
    std::string text = std::string(e.what()) + "\n";
    for (const auto& line : e.details()) text += "  " + line + "\n";
    return fail(InvalidInput, detail, text);
  } catch (const Unbounded& e) {
    Json detail = error_json("unbounded", e.what());
    detail["witness"] = numbers(e.witness());
    return fail(NotAdmissibleOrUnbounded, detail, std::string(e.what()) + "\n  witness: " + joined(e.witness()) + "\n");
  } catch (const NotAdmissible& e) {
    return fail(NotAdmissibleOrUnbounded, error_json("not_admissible", e.what()), std::string(e.what()) + "\n");
  } catch (const hf::NotCombinatorial& e) {
    const AnalyzedDiagram a(read_hfd(file));
    Json detail = error_json("not_combinatorial", e.what());
    Json list = Json::array();
    std::string text = std::string(e.what()) + "\n";
    for (const auto& d : e.offending()) {
      RigidShape shape = classify_rigid(a, d);
      if (shape.tag == ShapeTag::Rectangle) shape.reason = "rectangle, not counted in strict mode";
      Json j = domain_json(a, d);
      j["reason"] = shape.reason;
      list.push_back(j);
      text += "  {" + label(a.quadrants(), d.from) + "} -> {" + label(a.quadrants(), d.to) + "}: " +
              joined(d.coefficients) + "  (" + shape.reason + ")\n";
    }
    detail["offending"] = list;
    return fail(NotCombinatorial, detail, text);
  } catch (const UsageError& e) {
    return fail(Usage, error_json("usage", e.what()), std::string(e.what()) + "\n");
  } catch (const NonIntegral& e) {
    Json detail = error_json("non_integral", e.what());
    detail["value"] = e.value().str();
    return fail(InvalidInput, detail, std::string(e.what()) + " (" + e.value().str() + ")\n");
  } catch (const std::exception& e) {
    return fail(Internal, error_json("internal", e.what()), std::string("internal error: ") + e.what() + "\n");
  }
  return Usage;
}

}  // namespace hf::cli
