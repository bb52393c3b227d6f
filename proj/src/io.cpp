#include "latcon/io.hpp"

#include <sstream>

#include "json.hpp"

namespace latcon {

using nlohmann::json;

FiniteLattice parse_lattice_json(std::string_view text, const BuildOptions& opts) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::FormatError, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::FormatError, "top level must be an object");
  if (opts.strict)
    for (const auto& [key, _] : doc.items())
      if (key != "elements" && key != "covers") throw Error(Errc::FormatError, "unknown key '" + key + "'");
  if (!doc.contains("elements") || !doc["elements"].is_array())
    throw Error(Errc::FormatError, "\"elements\" must be an array of strings");
  std::vector<std::string> labels;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw Error(Errc::FormatError, "element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) throw Error(Errc::FormatError, "\"covers\" must be an array");
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
        throw Error(Errc::FormatError, "each cover must be a [lower, upper] pair of labels");
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  return build_from_covers(labels, covers, opts);
}

std::string lattice_to_json(const FiniteLattice& l, int indent) {
  json doc;
  doc["elements"] = l.labels();
  json covers = json::array();
  for (auto [a, b] : l.cover_pairs()) covers.push_back({l.label(a), l.label(b)});
  doc["covers"] = std::move(covers);
  return doc.dump(indent);
}

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string lattice_to_dot(const FiniteLattice& l, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << dot_quote(name) << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Elem x = 0; x < l.size(); ++x) os << "  n" << x << " [label=" << dot_quote(l.label(x)) << "];\n";
  for (auto [a, b] : l.cover_pairs()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace latcon
