#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "sparse_evolve/census.hpp"
#include "sparse_evolve/errors.hpp"
#include "sparse_evolve/extension.hpp"
#include "sparse_evolve/graph.hpp"

namespace sparse_evolve {

using Json = nlohmann::ordered_json;

// Malformed or schema-violating input. The message carries the source name,
// line:column where known, and the offending key.
class ParseError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

Json parse_json(std::string_view text, const std::string& source = "<input>");
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

Json extension_to_json(const RootedExtension& ext);
RootedExtension extension_from_json(const Json& j);

Json graph_to_json(const EvolvingGraph& g);
EvolvingGraph graph_from_json(const Json& j);

Json census_to_json(const EmbeddingCount& c);

// Compact one-line dump followed by a newline.
std::string dump(const Json& j);

}  // namespace sparse_evolve
