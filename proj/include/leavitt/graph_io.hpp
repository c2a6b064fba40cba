#pragma once

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "leavitt/errors.hpp"
#include "leavitt/graph.hpp"

namespace leavitt {

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

namespace detail {

/// Maps JSON pointers of an already valid document to the 1-based line where
/// each value starts.
class JsonLines {
 public:
  explicit JsonLines(std::string_view text) : text_(text) {
    skip_ws();
    value("");
  }

  std::size_t line(const std::string& pointer) const {
    auto it = lines_.find(pointer);
    return it == lines_.end() ? 0 : it->second;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }

  std::string string() {
    std::string out;
    ++pos_;  // opening quote
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') out += text_[pos_++];
      out += text_[pos_++];
    }
    ++pos_;
    return out;
  }

  void value(const std::string& pointer) {
    lines_[pointer] = line_;
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] != '}') {
        std::string key = string();
        skip_ws();
        ++pos_;  // ':'
        skip_ws();
        value(pointer + "/" + key);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
        skip_ws();
      }
      ++pos_;
    } else if (c == '[') {
      ++pos_;
      skip_ws();
      for (std::size_t i = 0; pos_ < text_.size() && text_[pos_] != ']'; ++i) {
        value(pointer + "/" + std::to_string(i));
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
        skip_ws();
      }
      ++pos_;
    } else if (c == '"') {
      string();
    } else {
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != ',' &&
             text_[pos_] != '}' && text_[pos_] != ']')
        ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::map<std::string, std::size_t> lines_;
};

inline std::size_t line_at_offset(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace detail

/// Parses a graph document:
///   {"vertices": ["u", ...], "edges": [{"name": "e", "source": "u", "range": "v", "multiplicity": 1}, ...]}
/// `multiplicity` is a positive integer or "omega" and defaults to 1; `edges` may be omitted.
inline Graph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError("parse error: " + std::string(e.what()), detail::line_at_offset(text, e.byte));
  }
  const detail::JsonLines lines(text);
  auto fail = [&](const std::string& pointer, const std::string& what) -> DocumentError {
    return DocumentError("schema error: " + what, lines.line(pointer));
  };

  if (!doc.is_object()) throw fail("", "document must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "vertices" && key != "edges") throw fail("/" + key, "unknown key '" + key + "'");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw fail("", "'vertices' must be an array");
  if (doc["vertices"].empty()) throw fail("/vertices", "at least one vertex is required");

  std::vector<std::string> vertices;
  std::set<std::string> names;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const auto& v = doc["vertices"][i];
    const std::string at = "/vertices/" + std::to_string(i);
    if (!v.is_string()) throw fail(at, "vertex names must be strings");
    if (!is_identifier(v.get<std::string>())) throw fail(at, "'" + v.get<std::string>() + "' is not an identifier");
    if (!names.insert(v.get<std::string>()).second) throw fail(at, "duplicate name '" + v.get<std::string>() + "'");
    vertices.push_back(v.get<std::string>());
  }

  std::vector<BundleSpec> bundles;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw fail("/edges", "'edges' must be an array");
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
      const auto& e = doc["edges"][i];
      const std::string at = "/edges/" + std::to_string(i);
      if (!e.is_object()) throw fail(at, "each edge must be an object");
      for (const auto& [key, _] : e.items())
        if (key != "name" && key != "source" && key != "range" && key != "multiplicity")
          throw fail(at + "/" + key, "unknown key '" + key + "'");
      BundleSpec spec;
      for (const char* field : {"name", "source", "range"}) {
        if (!e.contains(field) || !e[field].is_string())
          throw fail(at, std::string("edge field '") + field + "' must be a string");
        const std::string value = e[field].get<std::string>();
        if (!is_identifier(value)) throw fail(at + "/" + field, "'" + value + "' is not an identifier");
      }
      spec.name = e["name"].get<std::string>();
      spec.source = e["source"].get<std::string>();
      spec.range = e["range"].get<std::string>();
      const std::set<std::string> vertex_set(vertices.begin(), vertices.end());
      if (!vertex_set.count(spec.source)) throw fail(at + "/source", "unknown vertex '" + spec.source + "'");
      if (!vertex_set.count(spec.range)) throw fail(at + "/range", "unknown vertex '" + spec.range + "'");
      if (!names.insert(spec.name).second) throw fail(at + "/name", "duplicate name '" + spec.name + "'");
      if (e.contains("multiplicity")) {
        const auto& m = e["multiplicity"];
        if (m.is_string() && m.get<std::string>() == "omega") {
          spec.multiplicity = Multiplicity::omega();
        } else if (m.is_number_unsigned() && m.get<std::uint64_t>() > 0) {
          spec.multiplicity = Multiplicity(m.get<std::uint64_t>());
        } else {
          throw fail(at + "/multiplicity", "multiplicity must be a positive integer or \"omega\"");
        }
      }
      bundles.push_back(std::move(spec));
    }
  }

  try {
    return Graph(std::move(vertices), bundles);
  } catch (const Error& e) {
    throw DocumentError(std::string("schema error: ") + e.what(), 0);
  }
}

inline nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.vertex_names();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& b : g.bundles()) {
    nlohmann::ordered_json e;
    e["name"] = b.name;
    e["source"] = g.vertex_name(b.source);
    e["range"] = g.vertex_name(b.range);
    if (b.multiplicity.is_omega()) {
      e["multiplicity"] = "omega";
    } else {
      e["multiplicity"] = b.multiplicity.value();
    }
    doc["edges"].push_back(std::move(e));
  }
  return doc;
}

inline std::string render_graph(const Graph& g) { return graph_to_json(g).dump(2) + "\n"; }

/// One DOT edge per bundle, labelled `name×m` or `name×ω`.
inline std::string to_dot(const Graph& g) {
  std::string out = "digraph E {\n";
  for (const auto& v : g.vertex_names()) out += "  " + v + ";\n";
  for (const auto& b : g.bundles()) {
    const std::string m = b.multiplicity.is_omega() ? "ω" : b.multiplicity.to_string();
    out += "  " + g.vertex_name(b.source) + " -> " + g.vertex_name(b.range) + " [label=\"" + b.name + "×" + m + "\"];\n";
  }
  return out + "}\n";
}

/// Built-in example graphs.
inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"PT", "LINE3", "ENTRY4", "FORK", "LOOP1", "ROSE2", "OMEGA", "OMEGA2"};
  return names;
}

inline Graph fixture(std::string_view name) {
  if (name == "PT") return Graph({"v"}, {});
  if (name == "LINE3") return Graph({"u", "v", "w"}, {{"e", "u", "v"}, {"f", "v", "w"}});
  if (name == "ENTRY4") return Graph({"x", "u", "v", "w"}, {{"g", "x", "u"}, {"e", "u", "v"}, {"f", "v", "w"}});
  if (name == "FORK") return Graph({"u", "v", "w"}, {{"e", "u", "v"}, {"f", "u", "w"}});
  if (name == "LOOP1") return Graph({"v"}, {{"e", "v", "v"}});
  if (name == "ROSE2") return Graph({"v"}, {{"e", "v", "v"}, {"f", "v", "v"}});
  if (name == "OMEGA") return Graph({"v", "w"}, {{"e", "v", "w", Multiplicity::omega()}});
  if (name == "OMEGA2") return Graph({"v", "w", "u"}, {{"e", "v", "w", Multiplicity::omega()}, {"g", "v", "u"}});
  throw NameError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace leavitt
