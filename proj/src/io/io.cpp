#include "ovf/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace ovf::io {

namespace {

[[noreturn]] void format_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::FormatError, where + ": " + what);
}

void require_object(const Json& j, const std::string& where, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) format_error(where, "expected an object");
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!j.contains(k)) format_error(where, std::string("missing field \"") + k + "\"");
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) format_error(where, "unknown field \"" + key + "\"");
  }
}

std::size_t get_size(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    format_error(where, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

double get_double(const Json& j, const std::string& where) {
  if (!j.is_number()) format_error(where, "expected a number");
  return j.get<double>();
}

const Json& get_array(const Json& j, const std::string& where) {
  if (!j.is_array()) format_error(where, "expected an array");
  return j;
}

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

void dump_into(const Json& j, std::string& out, int depth) {
  auto indent = [&](int d) { out.append(static_cast<std::size_t>(2 * d), ' '); };
  switch (j.type()) {
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
      } else if (x == 0.0 && std::signbit(x)) {
        out += "-0.0";
      } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        out += buf;
      }
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool flat = true;
      for (const auto& v : j) flat = flat && !v.is_structured();
      if (flat) {
        out += '[';
        for (std::size_t k = 0; k < j.size(); ++k) {
          if (k) out += ", ";
          dump_into(j[k], out, depth + 1);
        }
        out += ']';
        return;
      }
      out += "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        indent(depth + 1);
        dump_into(j[k], out, depth + 1);
        out += k + 1 < j.size() ? ",\n" : "\n";
      }
      indent(depth);
      out += ']';
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t k = 0;
      for (const auto& [key, value] : j.items()) {
        indent(depth + 1);
        out += Json(key).dump();
        out += ": ";
        dump_into(value, out, depth + 1);
        out += ++k < j.size() ? ",\n" : "\n";
      }
      indent(depth);
      out += '}';
      return;
    }
    default:
      out += j.dump();
  }
}

bool is_builtin(const FiniteGroup& g) {
  if (g.name().empty()) return false;
  try {
    return FiniteGroup::builtin(g.name()).cayley() == g.cayley();
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::FormatError, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, out, 0);
  out += '\n';
  return out;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) data.push_back(Json::array({number(m(i, k).real()), number(m(i, k).imag())}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& where) {
  require_object(j, where, {"rows", "cols", "data"});
  const std::size_t rows = get_size(j["rows"], where + ".rows");
  const std::size_t cols = get_size(j["cols"], where + ".cols");
  if (rows == 0 || cols == 0) format_error(where, "dimensions must be positive");
  const Json& data = get_array(j["data"], where + ".data");
  if (data.size() != rows * cols) {
    format_error(where + ".data", "expected " + std::to_string(rows * cols) + " entries, got " +
                                      std::to_string(data.size()));
  }
  ComplexMatrix m(rows, cols);
  for (std::size_t k = 0; k < data.size(); ++k) {
    const std::string at = where + ".data[" + std::to_string(k) + "]";
    const Json& z = data[k];
    if (!z.is_array() || z.size() != 2) format_error(at, "expected [re, im]");
    m(k / cols, k % cols) = cplx(get_double(z[0], at), get_double(z[1], at));
  }
  return m;
}

Json frame_to_json(const OVFrame& f) {
  Json ops = Json::array();
  for (const auto& a : f.ops) ops.push_back(matrix_to_json(a));
  Json j{{"dim_H", f.dim_H}, {"dim_Ho", f.dim_Ho}, {"ops", std::move(ops)}};
  if (!f.labels.empty()) j["labels"] = f.labels;
  return j;
}

OVFrame frame_from_json(const Json& j) {
  require_object(j, "frame", {"dim_H", "dim_Ho", "ops"}, {"labels"});
  OVFrame f;
  f.dim_H = get_size(j["dim_H"], "frame.dim_H");
  f.dim_Ho = get_size(j["dim_Ho"], "frame.dim_Ho");
  const Json& ops = get_array(j["ops"], "frame.ops");
  if (ops.empty()) format_error("frame.ops", "a frame needs at least one operator");
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const std::string at = "ops[" + std::to_string(k) + "]";
    ComplexMatrix a = matrix_from_json(ops[k], at);
    if (a.rows() != f.dim_Ho || a.cols() != f.dim_H) {
      format_error(at, "block is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ", expected " +
                           std::to_string(f.dim_Ho) + "x" + std::to_string(f.dim_H));
    }
    f.ops.push_back(std::move(a));
  }
  if (j.contains("labels")) {
    const Json& labels = get_array(j["labels"], "frame.labels");
    if (labels.size() != ops.size()) format_error("frame.labels", "need one label per operator");
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (!labels[k].is_string()) format_error("labels[" + std::to_string(k) + "]", "expected a string");
      f.labels.push_back(labels[k].get<std::string>());
    }
  }
  return f;
}

Json group_to_json(const FiniteGroup& g) {
  if (is_builtin(g)) return g.name();
  Json j{{"order", g.order()}, {"cayley", g.cayley()}};
  if (!g.name().empty()) j["name"] = g.name();
  return j;
}

FiniteGroup group_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) return FiniteGroup::builtin(j.get<std::string>());
  require_object(j, where, {"order", "cayley"}, {"name"});
  const std::size_t order = get_size(j["order"], where + ".order");
  const Json& rows = get_array(j["cayley"], where + ".cayley");
  if (rows.size() != order) format_error(where + ".cayley", "expected " + std::to_string(order) + " rows");
  std::vector<std::vector<std::size_t>> table;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string at = where + ".cayley[" + std::to_string(r) + "]";
    const Json& row = get_array(rows[r], at);
    std::vector<std::size_t> entries;
    for (std::size_t c = 0; c < row.size(); ++c) entries.push_back(get_size(row[c], at));
    table.push_back(std::move(entries));
  }
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) format_error(where + ".name", "expected a string");
    name = j["name"].get<std::string>();
  }
  return FiniteGroup(std::move(table), std::move(name));
}

Json rep_to_json(const GroupRep& rep) {
  Json matrices = Json::array();
  for (const auto& m : rep.matrices) matrices.push_back(matrix_to_json(m));
  return Json{{"group", group_to_json(rep.group)}, {"matrices", std::move(matrices)}};
}

GroupRep rep_from_json(const Json& j, const std::filesystem::path& base_dir) {
  require_object(j, "rep", {"group", "matrices"});
  const Json& gj = j["group"];
  std::optional<FiniteGroup> group;
  if (gj.is_string()) {
    try {
      group = FiniteGroup::builtin(gj.get<std::string>());
    } catch (const Error&) {
      group = group_from_json(read_json_file(base_dir / gj.get<std::string>()));
    }
  } else {
    group = group_from_json(gj, "rep.group");
  }
  const Json& ms = get_array(j["matrices"], "rep.matrices");
  if (ms.size() != group->order()) {
    format_error("rep.matrices", "expected " + std::to_string(group->order()) + " matrices, got " +
                                     std::to_string(ms.size()));
  }
  GroupRep rep{*group, 0, {}};
  for (std::size_t k = 0; k < ms.size(); ++k) {
    const std::string at = "matrices[" + std::to_string(k) + "]";
    ComplexMatrix m = matrix_from_json(ms[k], at);
    if (k == 0) rep.dim = m.rows();
    if (m.rows() != rep.dim || m.cols() != rep.dim) format_error(at, "expected " + std::to_string(rep.dim) + "x" +
                                                                         std::to_string(rep.dim));
    rep.matrices.push_back(std::move(m));
  }
  rep.validate();
  return rep;
}

GeneratorPairFile pair_from_json(const Json& j, const std::filesystem::path& base_dir) {
  require_object(j, "pair", {"rep", "start", "end"});
  GeneratorPairFile out{rep_from_json(j["rep"], base_dir), matrix_from_json(j["start"], "start"),
                        matrix_from_json(j["end"], "end")};
  if (out.start.cols() != out.rep.dim || out.end.cols() != out.rep.dim) {
    format_error("pair", "generators must have " + std::to_string(out.rep.dim) + " columns");
  }
  return out;
}

Json path_to_json(const FramePath& path, const GroupRep& rep, const Json& run_fields) {
  Json samples = Json::array();
  for (const auto& s : path.samples) samples.push_back(Json{{"t", number(s.t)}, {"generator", matrix_to_json(s.generator)}});
  Json meta = run_fields.is_object() ? run_fields : Json::object();
  meta["parseval"] = path.parseval;
  meta["seed"] = path.seed;
  meta["sample_count"] = path.sample_count;
  meta["max_step"] = number(path.max_step);
  meta["h_norm"] = number(path.h_norm);
  meta["lipschitz"] = number(path.lipschitz);
  meta["start"] = matrix_to_json(path.start);
  meta["end"] = matrix_to_json(path.end);
  meta["rep"] = rep_to_json(rep);
  return Json{{"samples", std::move(samples)}, {"meta", std::move(meta)}};
}

std::pair<FramePath, GroupRep> path_from_json(const Json& j) {
  require_object(j, "path", {"samples", "meta"});
  const Json& meta = j["meta"];
  require_object(meta, "meta",
                 {"parseval", "seed", "sample_count", "max_step", "h_norm", "lipschitz", "start", "end", "rep"},
                 {"command", "version", "tol"});
  GroupRep rep = rep_from_json(meta["rep"]);
  FramePath path;
  if (!meta["parseval"].is_boolean()) format_error("meta.parseval", "expected a boolean");
  path.parseval = meta["parseval"].get<bool>();
  path.seed = get_size(meta["seed"], "meta.seed");
  path.sample_count = get_size(meta["sample_count"], "meta.sample_count");
  path.max_step = get_double(meta["max_step"], "meta.max_step");
  path.h_norm = get_double(meta["h_norm"], "meta.h_norm");
  path.lipschitz = get_double(meta["lipschitz"], "meta.lipschitz");
  path.start = matrix_from_json(meta["start"], "meta.start");
  path.end = matrix_from_json(meta["end"], "meta.end");
  const Json& samples = get_array(j["samples"], "path.samples");
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const std::string at = "samples[" + std::to_string(k) + "]";
    require_object(samples[k], at, {"t", "generator"});
    path.samples.push_back({get_double(samples[k]["t"], at + ".t"), matrix_from_json(samples[k]["generator"], at + ".generator")});
  }
  return {std::move(path), std::move(rep)};
}

}  // namespace ovf::io
