#include "ovf/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "ovf/duality.hpp"
#include "ovf/io.hpp"

namespace ovf::cli {

namespace {

namespace fs = std::filesystem;
using io::Json;

enum class LogLevel { Quiet, Info, Debug };

LogLevel log_level() {
  const char* v = std::getenv("OVF_LOG");
  if (!v) return LogLevel::Info;
  const std::string s(v);
  if (s == "quiet") return LogLevel::Quiet;
  if (s == "debug") return LogLevel::Debug;
  return LogLevel::Info;
}

struct Options {
  std::string command;
  std::vector<std::string> inputs;
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  std::size_t samples = 256;
  std::string out;
  std::string emit;
  std::string group;
  std::string rep;
  std::size_t mult = 1;
  std::string t_file;
  std::string left;
};

// Outcome of a command: the result block, whether it was a rejection, and an
// optional standalone artifact for --emit.
struct Outcome {
  Json result = Json::object();
  bool rejected = false;
  std::optional<Json> artifact;
  std::optional<Json> document;  // replaces the standard report (path files)
};

std::string snake(std::string_view name) {
  std::string s;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const char c = name[i];
    if (std::isupper(static_cast<unsigned char>(c))) {
      if (i > 0) s += '_';
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      s += c;
    }
  }
  return s;
}

Json num(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json diagnostics_json(const Diagnostics& d) {
  Json j = Json::object();
  for (const auto& [k, v] : d) j[k] = num(v);
  return j;
}

void require_inputs(const Options& o, std::size_t lo, std::size_t hi) {
  if (o.inputs.size() < lo || o.inputs.size() > hi) {
    const std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
    throw Error(ErrorKind::FormatError, o.command + " takes " + want + " input file(s), got " +
                                            std::to_string(o.inputs.size()));
  }
}

OVFrame load_frame(const std::string& path) { return io::frame_from_json(io::read_json_file(path)); }
ComplexMatrix load_matrix(const std::string& path) { return io::matrix_from_json(io::read_json_file(path)); }

FiniteGroup load_group(const std::string& spec) {
  if (fs::exists(spec)) return io::group_from_json(io::read_json_file(spec));
  return FiniteGroup::builtin(spec);
}

GroupRep load_rep(const Options& o) {
  if (!o.rep.empty()) return io::rep_from_json(io::read_json_file(o.rep), fs::path(o.rep).parent_path());
  if (!o.group.empty()) return tensor_rep(load_group(o.group), o.mult);
  throw Error(ErrorKind::FormatError, o.command + " needs --rep FILE or --group NAME");
}

Json bundle_json(const AnalysisBundle& b) {
  return Json{{"kind", snake(to_string(b.kind))},
              {"bounds", Json::array({num(b.a), num(b.b)})},
              {"multiplicity", b.multiplicity},
              {"projection_rank", numerical_rank(b.P)},
              {"frame_operator", io::matrix_to_json(b.S)}};
}

Outcome cmd_analyze(const Options& o) {
  require_inputs(o, 1, 1);
  const OVFrame f = load_frame(o.inputs[0]);
  const AnalysisBundle b = analyze(f, o.tol);
  Outcome r;
  r.result = Json{{"dim_H", f.dim_H}, {"dim_Ho", f.dim_Ho}, {"count", f.count()}};
  r.result.update(bundle_json(b));
  r.rejected = !b.is_frame();
  return r;
}

Outcome cmd_dilate(const Options& o) {
  require_inputs(o, 1, 1);
  const Dilation d = dilate(load_frame(o.inputs[0]), o.tol);
  Outcome r;
  Json isometries = Json::array();
  for (const auto& v : d.isometries) isometries.push_back(io::matrix_to_json(v));
  r.result = Json{{"residual", num(d.residual)}, {"T", io::matrix_to_json(d.T)}, {"isometries", isometries}};
  r.artifact = io::matrix_to_json(d.T);
  return r;
}

Outcome cmd_parsevalize(const Options& o) {
  require_inputs(o, 1, 1);
  const OVFrame p = parsevalize(load_frame(o.inputs[0]), o.tol);
  const AnalysisBundle b = analyze(p, o.tol);
  Outcome r;
  r.result = Json{{"frame_operator_residual", num(fro_norm(b.S - ComplexMatrix::identity(p.dim_H)))},
                  {"kind", snake(to_string(b.kind))},
                  {"frame", io::frame_to_json(p)}};
  r.artifact = io::frame_to_json(p);
  return r;
}

Outcome cmd_phi(const Options& o) {
  require_inputs(o, 2, 2);
  const OVFrame a = load_frame(o.inputs[0]);
  const FrameParameter p = phi(a, load_frame(o.inputs[1]), o.tol);
  const ParameterCheck c = check_parameter(p.base, p.M, o.tol);
  Outcome r;
  r.result = Json{{"parameter", io::matrix_to_json(p.M)},
                  {"right_residual", num(c.right_residual)},
                  {"min_eigenvalue", num(c.min_eigenvalue)},
                  {"max_eigenvalue", num(c.max_eigenvalue)},
                  {"valid", c.valid},
                  {"partial_isometry",
                   fro_norm(adjoint_times(p.M, p.M) - p.base.P) <= o.tol * std::max(1.0, fro_norm(p.M))}};
  r.rejected = !c.valid;
  r.artifact = io::matrix_to_json(p.M);
  return r;
}

Outcome cmd_similar(const Options& o) {
  Outcome r;
  SimilarityReport s;
  if (!o.left.empty()) {
    require_inputs(o, 1, 1);
    s = left_right_compatible(load_frame(o.inputs[0]), load_matrix(o.left), o.tol);
    r.result["mode"] = "left_right";
    r.result["left_right_ok"] = s.left_right_ok;
  } else {
    require_inputs(o, 2, 2);
    s = right_similarity(load_frame(o.inputs[0]), load_frame(o.inputs[1]), o.tol);
    r.result["mode"] = "right";
  }
  r.result["similar"] = s.right.has_value();
  if (s.right) {
    r.result["T"] = io::matrix_to_json(*s.right);
    r.artifact = io::matrix_to_json(*s.right);
  }
  r.result["diagnostics"] = diagnostics_json(s.diagnostics);
  r.rejected = !s.right.has_value();
  return r;
}

Outcome cmd_compose(const Options& o) {
  require_inputs(o, 2, 2);
  const OVFrame a = load_frame(o.inputs[0]);
  const OVFrame b = load_frame(o.inputs[1]);
  const OVFrame c = compose(a, b);
  const AnalysisBundle cb = analyze(c, o.tol);
  Outcome r;
  r.result = Json{{"count", c.count()}, {"identities", diagnostics_json(compose_identities(a, b, c))}};
  r.result.update(bundle_json(cb));
  r.result["frame"] = io::frame_to_json(c);
  r.artifact = io::frame_to_json(c);
  r.rejected = !cb.is_frame();
  return r;
}

Outcome cmd_dual(const Options& o) {
  require_inputs(o, 1, 2);
  const OVFrame a = load_frame(o.inputs[0]);
  Outcome r;
  if (o.inputs.size() == 2) {
    const DualCheck d = is_dual(a, load_frame(o.inputs[1]), o.tol);
    r.result = Json{{"dual", d.dual}, {"residual", num(d.residual)}};
    r.rejected = !d.dual;
    return r;
  }
  const OVFrame c = canonical_dual(a, o.tol);
  const DualCheck d = is_dual(a, c, o.tol);
  r.result = Json{{"dual", d.dual}, {"residual", num(d.residual)}, {"frame", io::frame_to_json(c)}};
  r.artifact = io::frame_to_json(c);
  return r;
}

Outcome cmd_disjoint(const Options& o) {
  require_inputs(o, 2, 2);
  const DirectSum s = direct_sum(load_frame(o.inputs[0]), load_frame(o.inputs[1]), o.tol);
  Outcome r;
  r.result = Json{{"kind", snake(to_string(s.verdict.kind))}, {"residuals", diagnostics_json(s.verdict.residuals)}};
  if (s.frame) {
    r.result["frame"] = io::frame_to_json(*s.frame);
    r.artifact = io::frame_to_json(*s.frame);
  }
  return r;
}

Outcome cmd_complement(const Options& o) {
  require_inputs(o, 1, 1);
  const OVFrame a = load_frame(o.inputs[0]);
  std::optional<ComplexMatrix> t;
  if (!o.t_file.empty()) t = load_matrix(o.t_file);
  const OVFrame c = strong_complement(a, t, o.tol);
  const AnalysisBundle cb = analyze(c, o.tol);
  Outcome r;
  r.result = Json{{"dim_H", c.dim_H}};
  r.result.update(bundle_json(cb));
  r.result["frame"] = io::frame_to_json(c);
  r.artifact = io::frame_to_json(c);
  return r;
}

Outcome cmd_group_check(const Options& o) {
  require_inputs(o, 1, 1);
  if (o.group.empty()) throw Error(ErrorKind::FormatError, "group-check needs --group NAME|FILE");
  const GroupFrameRep g = group_frame_to_rep(load_frame(o.inputs[0]), load_group(o.group), o.tol);
  Outcome r;
  r.result = Json{{"group_frame", g.rep.has_value()},
                  {"residual", num(g.residual)},
                  {"diagnostics", diagnostics_json(g.diagnostics)}};
  if (g.rep) {
    r.result["rep"] = io::rep_to_json(*g.rep);
    r.artifact = io::rep_to_json(*g.rep);
  }
  r.rejected = !g.rep.has_value();
  return r;
}

Outcome cmd_generator(const Options& o) {
  require_inputs(o, 1, 1);
  const GroupRep rep = load_rep(o);
  const GeneratorOrbit orbit = generator_orbit(load_matrix(o.inputs[0]), rep, o.tol);
  Outcome r;
  r.result = bundle_json(orbit.bundle);
  r.result["diagnostics"] = diagnostics_json(orbit.diagnostics);
  r.result["frame"] = io::frame_to_json(orbit.frame);
  r.artifact = io::frame_to_json(orbit.frame);
  return r;
}

Outcome cmd_parametrize(const Options& o) {
  require_inputs(o, 2, 2);
  const GroupRep rep = load_rep(o);
  const GeneratorParameterResult p =
      generator_parametrize(load_matrix(o.inputs[0]), rep, load_matrix(o.inputs[1]), o.tol);
  Outcome r;
  r.result = Json{{"in_algebra", p.B.has_value()}, {"diagnostics", diagnostics_json(p.diagnostics)}};
  if (p.B) {
    r.result["generator"] = io::matrix_to_json(*p.B);
    r.artifact = io::matrix_to_json(*p.B);
  }
  r.rejected = !p.B.has_value();
  return r;
}

Json run_fields(const Options& o) {
  return Json{{"command", o.command}, {"version", io::kVersion}, {"tol", o.tol}};
}

Outcome cmd_homotopy(const Options& o) {
  require_inputs(o, 1, 1);
  const io::GeneratorPairFile pair =
      io::pair_from_json(io::read_json_file(o.inputs[0]), fs::path(o.inputs[0]).parent_path());
  const bool parseval = generator_orbit(pair.start, pair.rep, o.tol).bundle.is_parseval() &&
                        generator_orbit(pair.end, pair.rep, o.tol).bundle.is_parseval();
  const FramePath path = parseval ? connect_parseval(pair.start, pair.end, pair.rep, o.samples, o.seed, o.tol)
                                  : connect_general(pair.start, pair.end, pair.rep, o.samples, o.seed, o.tol);
  Outcome r;
  r.document = io::path_to_json(path, pair.rep, run_fields(o));
  return r;
}

Outcome cmd_verify_path(const Options& o) {
  require_inputs(o, 1, 1);
  const auto [path, rep] = io::path_from_json(io::read_json_file(o.inputs[0]));
  const PathReport v = verify_path(path, rep, o.tol);
  Outcome r;
  r.result = Json{{"ok", v.ok},
                  {"samples", path.samples.size()},
                  {"start_residual", num(v.start_residual)},
                  {"end_residual", num(v.end_residual)},
                  {"max_sample_residual", num(v.max_sample_residual)},
                  {"max_step", num(v.max_step)},
                  {"step_budget", num(v.step_budget)},
                  {"first_bad_sample", v.first_bad_sample ? Json(*v.first_bad_sample) : Json(nullptr)},
                  {"failures", v.failures}};
  r.rejected = !v.ok;
  return r;
}

const std::map<std::string, std::function<Outcome(const Options&)>>& commands() {
  static const std::map<std::string, std::function<Outcome(const Options&)>> table = {
      {"analyze", cmd_analyze},         {"dilate", cmd_dilate},       {"parsevalize", cmd_parsevalize},
      {"phi", cmd_phi},                 {"similar", cmd_similar},     {"compose", cmd_compose},
      {"dual", cmd_dual},               {"disjoint", cmd_disjoint},   {"complement", cmd_complement},
      {"group-check", cmd_group_check}, {"generator", cmd_generator}, {"parametrize", cmd_parametrize},
      {"homotopy", cmd_homotopy},       {"verify-path", cmd_verify_path}};
  return table;
}

Json report_header(const Options& o) {
  return Json{{"command", o.command}, {"version", io::kVersion}, {"tol", o.tol}, {"seed", o.seed}};
}

void deliver(const Options& o, const Json& doc, std::ostream& out) {
  const std::string text = io::dump(doc);
  if (o.out.empty())
    out << text;
  else
    io::write_text_file(o.out, text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Operator-valued frame toolkit", "ovf"};
  std::vector<std::string> names;
  for (const auto& [name, fn] : commands()) names.push_back(name);
  app.add_option("command", o.command, "Operation to run")->required()->check(CLI::IsMember(names));
  app.add_option("inputs", o.inputs, "Input files");
  app.add_option("--tol", o.tol, "Numerical tolerance")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for randomized steps")->capture_default_str();
  app.add_option("--samples", o.samples, "Path samples (homotopy)")->capture_default_str();
  app.add_option("--out", o.out, "Report file (stdout when absent)");
  app.add_option("--emit", o.emit, "Write the produced frame/matrix/rep to FILE");
  app.add_option("--group", o.group, "Built-in group name or group file");
  app.add_option("--rep", o.rep, "Representation file");
  app.add_option("--mult", o.mult, "Multiplicity for --group without --rep")->capture_default_str();
  app.add_option("--T", o.t_file, "Positive operator for complement");
  app.add_option("--left", o.left, "Operator R for left-right compatibility (similar)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ovf: " << e.what() << "\n";
    return 1;
  }

  const LogLevel level = log_level();
  if (level == LogLevel::Debug) {
    err << "ovf " << o.command << ": " << o.inputs.size() << " input(s), tol " << o.tol << ", seed " << o.seed << "\n";
  }
  try {
    Outcome r = commands().at(o.command)(o);
    if (r.document) {
      deliver(o, *r.document, out);
    } else {
      Json report = report_header(o);
      report["status"] = r.rejected ? "rejected" : "ok";
      report["result"] = std::move(r.result);
      deliver(o, report, out);
    }
    if (!o.emit.empty()) {
      if (!r.artifact) throw Error(ErrorKind::FormatError, o.command + " produced nothing to emit");
      io::write_text_file(o.emit, io::dump(*r.artifact));
    }
    if (level != LogLevel::Quiet) err << "ovf " << o.command << ": " << (r.rejected ? "rejected" : "ok") << "\n";
    return r.rejected ? 2 : 0;
  } catch (const Error& e) {
    if (level != LogLevel::Quiet) err << "ovf " << o.command << ": " << e.what() << "\n";
    if (!is_mathematical(e.kind())) return 1;
    Json report = report_header(o);
    report["status"] = "rejected";
    report["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
    try {
      deliver(o, report, out);
    } catch (const Error& io_error) {
      err << "ovf: " << io_error.what() << "\n";
      return 1;
    }
    return 2;
  }
}

}  // namespace ovf::cli
