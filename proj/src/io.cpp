#include "sparse_evolve/io.hpp"

#include <fstream>
#include <sstream>

namespace sparse_evolve {

namespace {

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object holding key \"" + std::string(key) + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing key \"" + std::string(key) + "\"");
  return *it;
}

std::int64_t integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError("key \"" + std::string(key) + "\" must be an integer");
  return v.get<std::int64_t>();
}

std::uint64_t unsigned_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<std::uint64_t>();
  throw ParseError("key \"" + std::string(key) + "\" must be a non-negative integer");
}

template <class Int>
std::vector<std::pair<Int, Int>> pairs_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError("key \"" + std::string(key) + "\" must be an array of pairs");
  std::vector<std::pair<Int, Int>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Json& e = v[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError("key \"" + std::string(key) + "\" entry " + std::to_string(i) +
                       " must be a pair of integers");
    }
    const std::int64_t a = e[0].get<std::int64_t>(), b = e[1].get<std::int64_t>();
    if (a < 0 || b < 0) {
      throw ParseError("key \"" + std::string(key) + "\" entry " + std::to_string(i) +
                       " has a negative index");
    }
    out.emplace_back(static_cast<Int>(a), static_cast<Int>(b));
  }
  return out;
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  std::string last_key;
  Json::parser_callback_t track = [&](int, Json::parse_event_t event, Json& value) {
    if (event == Json::parse_event_t::key) last_key = value.get<std::string>();
    return true;
  };
  try {
    return Json::parse(text.begin(), text.end(), track);
  } catch (const Json::parse_error& e) {
    std::string msg = source + ":" + line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what();
    if (!last_key.empty()) msg += " (after key \"" + last_key + "\")";
    throw ParseError(msg);
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Json extension_to_json(const RootedExtension& ext) {
  Json j;
  j["root_size"] = ext.root_size();
  j["ext_size"] = ext.ext_size();
  j["root_edges"] = Json::array();
  for (auto [r, e] : ext.root_edges()) j["root_edges"].push_back({r, e});
  j["ext_edges"] = Json::array();
  for (auto [a, b] : ext.ext_edges()) j["ext_edges"].push_back({a, b});
  return j;
}

RootedExtension extension_from_json(const Json& j) {
  const std::int64_t r = integer_field(j, "root_size");
  const std::int64_t n = integer_field(j, "ext_size");
  if (r < 0 || r > RootedExtension::kMaxRoot) throw ParseError("key \"root_size\" out of range");
  if (n < 0 || n > RootedExtension::kMaxExt) throw ParseError("key \"ext_size\" out of range");
  auto root_edges = pairs_field<int>(j, "root_edges");
  auto ext_edges = pairs_field<int>(j, "ext_edges");
  try {
    return RootedExtension(static_cast<int>(r), static_cast<int>(n), std::move(root_edges),
                           std::move(ext_edges));
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("invalid extension: ") + e.what());
  }
}

Json graph_to_json(const EvolvingGraph& g) {
  Json j;
  j["alpha"] = g.alpha().to_string();
  j["seed"] = g.seed();
  j["T"] = g.num_vertices();
  j["edges"] = Json::array();
  for (auto [a, b] : g.edges()) j["edges"].push_back({a, b});
  return j;
}

EvolvingGraph graph_from_json(const Json& j) {
  const Json& a = field(j, "alpha");
  if (!a.is_string()) throw ParseError("key \"alpha\" must be a \"p/q\" string");
  Alpha alpha = [&] {
    try {
      return Alpha::parse(a.get<std::string>());
    } catch (const ArgumentError& e) {
      throw ParseError(std::string("key \"alpha\": ") + e.what());
    }
  }();
  const std::uint64_t seed = unsigned_field(j, "seed");
  const std::uint64_t t = unsigned_field(j, "T");
  if (t < 1 || t > 0xffffffffull) throw ParseError("key \"T\" must be in [1, 2^32)");
  auto edges = pairs_field<Vertex>(j, "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 1 || v > t || u >= v) {
      throw ParseError("key \"edges\" entry " + std::to_string(i) +
                       " must satisfy 1 <= i < j <= T");
    }
  }
  try {
    return EvolvingGraph::from_edges(static_cast<Vertex>(t), edges, alpha, seed);
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("key \"edges\": ") + e.what());
  }
}

Json census_to_json(const EmbeddingCount& c) {
  Json j;
  j["embeddings"] = c.embeddings;
  j["copies_num"] = c.copies_num;
  j["copies_den"] = c.copies_den;
  return j;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace sparse_evolve
