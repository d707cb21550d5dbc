#include "planeval/cli.hpp"

#include "planeval/error.hpp"
#include "planeval/io.hpp"
#include "planeval/oracle.hpp"
#include "planeval/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace planeval {

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
  f << text;
}

Json error_json(ErrorCode code, const std::string& message) {
  return Json{{"code", code_name(code)},
              {"kind", kind_of(code) == ErrorKind::Schema ? "schema" : "math"},
              {"message", message}};
}

const FlagSpec& need_flag(const ProblemDocument& doc) {
  if (!doc.flag) throw Error(ErrorCode::SchemaError, "document has no flag");
  return *doc.flag;
}

const MuSource& need_mu(const ProblemDocument& doc) {
  if (!doc.mu_source) throw Error(ErrorCode::SchemaError, "document has no mu_source");
  return *doc.mu_source;
}

bool is_cluster_error(ErrorCode c) {
  return c == ErrorCode::NonConsecutiveIds || c == ErrorCode::SatelliteTargetInvalid ||
         c == ErrorCode::SatelliteOfSelfOrLater;
}

Json validate_report(const std::string& text, int& status) {
  ProblemDocument doc;
  try {
    doc = parse_problem_text(text);
  } catch (const Error& e) {
    if (!is_cluster_error(e.code())) throw;
    status = 1;
    return Json{{"valid", false}, {"error", error_json(e.code(), e.what())}};
  }
  Json report = cluster_report(doc.cluster);
  if (doc.flag) {
    try {
      auto val = build_flag(doc.cluster, *doc.flag);
      if (doc.mu_source && doc.mu_source->kind == MuKind::Curve) {
        for (const auto& b : doc.mu_source->curve.branches) validate_branch(val, b);
      }
      if (doc.mu_source && doc.mu_source->kind == MuKind::Npi) {
        check_npi(doc.cluster, doc.flag->r, doc.mu_source->line_support);
      }
    } catch (const Error& e) {
      status = 1;
      report["valid"] = false;
      report["error"] = error_json(e.code(), e.what());
    }
  }
  return report;
}

Body compute_body(const ExceptionalValuation& val, const MuSource& mu) {
  switch (mu.kind) {
    case MuKind::Minimal:
      return body_minimal(val);
    case MuKind::Npi:
      return body_npi(val, mu.line_support);
    case MuKind::Curve:
      return body_nonminimal(val, make_certificate(val, mu.curve));
  }
  throw Error(ErrorCode::SchemaError, "unknown mu_source");
}

Json body_report(const ExceptionalValuation& val, const MuSource& mu, Body& body) {
  body = compute_body(val, mu);
  Json j = to_json(body);
  j["area"] = to_json(polygon_area(body.vertices));
  Matrix2 a = normalization_matrix(val);
  Body nb = normalize(val, body);
  Json n = to_json(nb);
  n["matrix"] = to_json(a);
  n["area"] = to_json(polygon_area(nb.vertices));
  j["normalized"] = n;
  if (mu.kind == MuKind::Curve) {
    auto cls = classify_shape(val, mu.curve);
    Json branches = Json::array();
    for (const auto& b : cls.branches) {
      branches.push_back(Json{{"by_slope", side_name(b.by_slope)}, {"by_graph", side_name(b.by_graph)}});
    }
    j["classification"] =
        Json{{"shape", shape_name(cls.shape)}, {"branches", branches}, {"consistent", cls.consistent()}};
  }
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants and Newton-Okounkov bodies of plane valuations", "planeval"};
  app.require_subcommand(1);
  std::string doc_path, out_path, svg_path, t_text;
  bool dot = false;

  auto* validate = app.add_subcommand("validate", "Check a document and report the cluster");
  auto* invariants = app.add_subcommand("invariants", "Maximal contact data of the divisorial valuation");
  auto* dualgraph = app.add_subcommand("dualgraph", "Dual graph as JSON or DOT");
  auto* body = app.add_subcommand("body", "Newton-Okounkov body of the flag valuation");
  auto* zariski = app.add_subcommand("zariski", "Zariski decomposition of H - tE_r");
  for (auto* sub : {validate, invariants, dualgraph, body, zariski}) {
    sub->add_option("document", doc_path, "Problem document (JSON), - for stdin")->required();
    sub->add_option("--out", out_path, "Write the result to this file");
  }
  dualgraph->add_flag("--dot", dot, "Emit DOT instead of JSON");
  body->add_option("--svg", svg_path, "Also write an SVG drawing");
  zariski->add_option("--t", t_text, "Parameter t as P/Q")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_json(ErrorCode::ParseError, e.what()).dump() << '\n';
    return 2;
  }

  int status = 0;
  try {
    std::string text = read_file(doc_path);
    std::string result;
    if (validate->parsed()) {
      result = validate_report(text, status).dump(2);
    } else {
      ProblemDocument doc = parse_problem_text(text);
      if (invariants->parsed()) {
        result = invariants_report(doc.cluster).dump(2);
      } else if (dualgraph->parsed()) {
        if (doc.flag && doc.mu_source && doc.mu_source->kind == MuKind::Curve) {
          auto val = build_flag(doc.cluster, *doc.flag);
          auto cg = curve_dual_graph(val, doc.mu_source->curve);
          if (dot) {
            result = render_dot(cg.graph, cg.attachments);
          } else {
            Json j = graph_to_json(cg.graph);
            j["curve_attachments"] = cg.attachments;
            j["connected_with_curve"] = curve_graph_connected(cg);
            result = j.dump(2);
          }
        } else {
          PointId n = doc.flag ? doc.flag->r : doc.cluster.size();
          auto g = dual_graph(doc.cluster, n);
          result = dot ? render_dot(g) : graph_to_json(g).dump(2);
        }
      } else if (body->parsed()) {
        auto val = build_flag(doc.cluster, need_flag(doc));
        Body b;
        result = body_report(val, need_mu(doc), b).dump(2);
        if (!svg_path.empty()) write_file(svg_path, render_svg(b));
      } else if (zariski->parsed()) {
        auto val = build_flag(doc.cluster, need_flag(doc));
        const MuSource& mu = need_mu(doc);
        if (mu.kind != MuKind::Npi) throw Error(ErrorCode::SchemaError, "zariski needs an npi mu_source");
        Rational t = parse_rational(t_text);
        auto z = decompose_npi(val, mu.line_support, t);
        auto chk = check_zariski(val, mu.line_support, z);
        Json j = to_json(z);
        j["checks"] = Json{{"sum", chk.sum},
                           {"orthogonal", chk.orthogonal},
                           {"negative_definite", chk.negative_definite},
                           {"nef_on_test_set", chk.nef_on_test_set}};
        result = j.dump(2);
      }
    }
    if (result.empty() || result.back() != '\n') result += '\n';
    if (out_path.empty()) {
      out << result;
    } else {
      write_file(out_path, result);
    }
  } catch (const Error& e) {
    err << error_json(e.code(), e.what()).dump() << '\n';
    return e.kind() == ErrorKind::Schema ? 2 : 3;
  }
  return status;
}

}  // namespace planeval
