#pragma once

// Text formats: sequence specs, edge lists, JSON graphs, DOT, and the JSON
// shapes of realizers and orderability verdicts.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cobweb/cobweb_poset.hpp"
#include "cobweb/digraph.hpp"
#include "cobweb/realizer.hpp"

namespace cobweb::io {

using json = nlohmann::ordered_json;

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

template <class Int>
Int parse_int(std::string_view text, std::string_view what) {
  text = trim(text);
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  return value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace detail

/// `fib`, `const:K` or `list:a,b,c`.
inline LevelSequence parse_sequence_spec(std::string_view spec) {
  spec = detail::trim(spec);
  if (spec == "fib") return LevelSequence::fibonacci();
  if (spec.starts_with("const:"))
    return LevelSequence::constant(detail::parse_int<std::int64_t>(spec.substr(6), "constant level size"));
  if (spec.starts_with("list:")) {
    std::vector<std::int64_t> sizes;
    for (auto part : detail::split(spec.substr(5), ','))
      sizes.push_back(detail::parse_int<std::int64_t>(part, "level size"));
    return LevelSequence::explicit_list(std::move(sizes));
  }
  throw ParseError("unknown sequence spec '" + std::string(spec) + "' (expected fib, const:K or list:a,b,...)");
}

/// "i,j" -> <i, j>
inline Vertex parse_vertex(std::string_view text) {
  auto parts = detail::split(detail::trim(text), ',');
  if (parts.size() != 2) throw ParseError("expected vertex 'i,j', got '" + std::string(text) + "'");
  auto pos = detail::parse_int<std::uint64_t>(parts[0], "vertex position");
  auto lvl = detail::parse_int<std::uint64_t>(parts[1], "vertex level");
  if (pos < 1) throw ParseError("vertex position must be >= 1 in '" + std::string(text) + "'");
  return Vertex(pos, lvl);
}

/// One arc per line as `i,j -> k,l`. A line holding a lone `i,j` declares an
/// isolated vertex. `#` starts a comment; blank lines are ignored.
inline Digraph parse_edgelist(std::string_view text) {
  Digraph g;
  std::size_t lineno = 0;
  for (auto line : detail::split(text, '\n')) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    try {
      auto arrow = line.find("->");
      if (arrow == std::string_view::npos) {
        g.add_vertex(parse_vertex(line));
        continue;
      }
      Vertex tail = parse_vertex(line.substr(0, arrow));
      Vertex head = parse_vertex(line.substr(arrow + 2));
      g.add_vertex(tail);
      g.add_vertex(head);
      g.add_arc(tail, head);
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return g;
}

inline std::string to_edgelist(const Digraph& g) {
  std::vector<bool> touched(g.vertex_count(), false);
  std::ostringstream out;
  for (const auto& [t, h] : g.arcs()) {
    touched[g.index().at(t)] = touched[g.index().at(h)] = true;
    out << t.str() << " -> " << h.str() << '\n';
  }
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (!touched[i]) out << g.vertex(i).str() << '\n';
  return out.str();
}

inline json vertex_json(const Vertex& v) { return json::array({v.position, v.level}); }

inline json chain_json(const Chain& c) {
  json arr = json::array();
  for (const auto& v : c) arr.push_back(vertex_json(v));
  return arr;
}

inline json graph_json(const Digraph& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices()) vertices.push_back(vertex_json(v));
  json arcs = json::array();
  for (const auto& [t, h] : g.arcs()) arcs.push_back(json::array({vertex_json(t), vertex_json(h)}));
  json doc;
  doc["vertices"] = std::move(vertices);
  doc["arcs"] = std::move(arcs);
  return doc;
}

inline std::string to_json(const Digraph& g) { return graph_json(g).dump() + "\n"; }

namespace detail {

inline Vertex vertex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned())
    throw ParseError("vertex must be [i, j] with non-negative integers, got " + j.dump());
  auto pos = j[0].get<std::uint64_t>();
  if (pos < 1) throw ParseError("vertex position must be >= 1, got " + j.dump());
  return Vertex(pos, j[1].get<std::uint64_t>());
}

}  // namespace detail

/// {"vertices": [[i,j],...], "arcs": [[[i,j],[k,l]],...]}. Arc endpoints
/// missing from "vertices" are rejected.
inline Digraph parse_json_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("JSON graph needs a \"vertices\" array");
  Digraph g;
  for (const auto& v : doc["vertices"]) {
    Vertex vx = detail::vertex_from_json(v);
    if (g.index().contains(vx)) throw ParseError("duplicate vertex " + vx.str());
    g.add_vertex(vx);
  }
  if (doc.contains("arcs")) {
    if (!doc["arcs"].is_array()) throw ParseError("\"arcs\" must be an array");
    for (const auto& a : doc["arcs"]) {
      if (!a.is_array() || a.size() != 2) throw ParseError("arc must be [[i,j],[k,l]], got " + a.dump());
      try {
        g.add_arc(detail::vertex_from_json(a[0]), detail::vertex_from_json(a[1]));
      } catch (const InvalidInput& e) {
        throw ParseError(e.what());
      }
    }
  }
  return g;
}

/// JSON when the first non-blank character is '{', edge list otherwise.
inline Digraph read_graph(std::string_view text) {
  auto body = detail::trim(text);
  if (!body.empty() && body.front() == '{') return parse_json_graph(text);
  return parse_edgelist(text);
}

/// DOT with one same-rank group per level (bottom to top) and arcs in
/// lexicographic order.
inline std::string to_dot(const Digraph& g) {
  std::map<std::uint64_t, std::vector<Vertex>> levels;
  for (const auto& v : g.vertices()) levels[v.level].push_back(v);
  auto arcs = g.arcs();
  std::sort(arcs.begin(), arcs.end());

  std::ostringstream out;
  out << "digraph cobweb {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (auto& [level, vs] : levels) {
    std::sort(vs.begin(), vs.end());
    out << "  { rank=same;";
    for (const auto& v : vs) out << " \"" << v.str() << "\";";
    out << " }\n";
  }
  for (const auto& [t, h] : arcs) out << "  \"" << t.str() << "\" -> \"" << h.str() << "\";\n";
  out << "}\n";
  return out.str();
}

inline json realizer_json(const Realizer& r) {
  json doc;
  doc["chain_x"] = chain_json(r.first());
  doc["chain_y"] = chain_json(r.second());
  return doc;
}

inline json verdict_json(const OrderabilityVerdict& v) {
  json doc;
  doc["kind"] = v.kind();
  doc["exhaustive"] = v.exhaustive;
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Orderable>) {
          doc["realizer"] = realizer_json(o.realizer);
        } else if constexpr (std::is_same_v<T, NotRegular>) {
          doc["witness"] = json::array({vertex_json(o.witness.first), vertex_json(o.witness.second)});
        } else if constexpr (std::is_same_v<T, NonTransitiveConjugate>) {
          json cycle = json::array();
          for (const auto& x : o.cycle) cycle.push_back(vertex_json(x));
          doc["cycle"] = std::move(cycle);
        }
      },
      v.outcome);
  if (!v.exhaustive && !v.orderable()) doc["inconclusive"] = true;
  return doc;
}

}  // namespace cobweb::io
