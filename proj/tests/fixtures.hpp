#pragma once

#include "planeval/flagval.hpp"
#include "planeval/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace fixtures {

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name + ".json"; }

inline std::string fixture_text(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline planeval::ProblemDocument load(const std::string& name) {
  return planeval::parse_problem_text(fixture_text(name));
}

inline planeval::ExceptionalValuation flag_of(const planeval::ProblemDocument& doc) {
  return planeval::build_flag(doc.cluster, *doc.flag);
}

inline planeval::Rational q(long p, long d = 1) { return planeval::make_rational(p, d); }

inline planeval::Point2 pt(const planeval::Rational& x, const planeval::Rational& y) {
  return {planeval::ExactScalar(x), planeval::ExactScalar(y)};
}

}  // namespace fixtures
