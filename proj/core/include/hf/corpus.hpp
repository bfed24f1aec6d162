#pragma once

#include "hf/diagram.hpp"

#include <map>
#include <string>
#include <vector>

namespace hf {

/// s3_g1 | s1s2_g1 | s1s2_bad | s1s2_wind | lens(p,q) | gsph(g)
struct CorpusName {
  std::string family;
  int p = 0;
  int q = 0;
  int g = 0;

  /// Accepts "lens(5,1)", "gsph(2)" and the parameterless names.
  static CorpusName parse(const std::string& text);
  std::string str() const;
};

/// Throws UsageError for unknown names and out-of-range parameters.
HeegaardDiagram build(const CorpusName& name);
HeegaardDiagram build(const std::string& name);

HeegaardDiagram s3_g1();
HeegaardDiagram s1s2_g1();
HeegaardDiagram s1s2_bad();
HeegaardDiagram s1s2_wind();
HeegaardDiagram lens(int p, int q);
HeegaardDiagram gsph(int g);

/// Genus-one diagram whose beta curve is a finger pushed once around the
/// torus, giving four points and a periodic domain with a nonnegative multiple.
HeegaardDiagram finger_torus();

/// Builds a diagram whose regions are all disks by tracing the faces of the
/// curve embedding determined by the curve orders and intersection signs.
/// The basepoint region is the face on whose boundary `basepoint_side` lies.
HeegaardDiagram trace_diagram(int genus, std::vector<std::vector<std::string>> alpha,
                              std::vector<std::vector<std::string>> beta, const std::map<std::string, int>& signs,
                              const ArcRef& basepoint_side);

/// The named instances used by the test suites: s3_g1, s1s2_g1, s1s2_bad,
/// s1s2_wind, lens(p,q) for 2 <= p <= 7 and gsph(1..3).
std::vector<CorpusName> standard_corpus();

}  // namespace hf
