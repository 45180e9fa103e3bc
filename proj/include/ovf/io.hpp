#pragma once

#include <filesystem>
#include <string>
#include <utility>

#include "json.hpp"
#include "ovf/homotopy.hpp"

namespace ovf::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

/// Parses a file; IoError when unreadable, FormatError on malformed JSON.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Two-space indented JSON with every double printed as %.17g and
/// non-finite values as null. Output ends with a newline.
std::string dump(const Json& j);

// All readers are strict: missing or unknown fields raise FormatError naming
// the location ("ops[2]", "matrices[0].data").

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, const std::string& where = "matrix");

Json frame_to_json(const OVFrame& f);
OVFrame frame_from_json(const Json& j);

/// Built-in groups are written as their name, others as {"order","cayley","name"}.
Json group_to_json(const FiniteGroup& g);
/// Accepts a built-in name or an object; InvalidCayleyTable for bad tables.
FiniteGroup group_from_json(const Json& j, const std::string& where = "group");

Json rep_to_json(const GroupRep& rep);
/// "group" may be inline, a built-in name, or a path relative to base_dir.
GroupRep rep_from_json(const Json& j, const std::filesystem::path& base_dir = {});

struct GeneratorPairFile {
  GroupRep rep;
  ComplexMatrix start;
  ComplexMatrix end;
};
GeneratorPairFile pair_from_json(const Json& j, const std::filesystem::path& base_dir = {});

/// {"samples":[{"t","generator"}],"meta":{…}}; meta carries the endpoints,
/// the representation and any extra run fields passed in.
Json path_to_json(const FramePath& path, const GroupRep& rep, const Json& run_fields);
std::pair<FramePath, GroupRep> path_from_json(const Json& j);

}  // namespace ovf::io
