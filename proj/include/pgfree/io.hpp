// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats.
//
//   PointSet, JSON:    {"rank": r, "points": [1, 2, "0x3", ...]}
//   PointSet, compact: "r:HEX" where HEX is the bitset as a big-endian hex
//                      integer (index 0 is the lowest bit and must be 0),
//                      written with max(1, 2^r / 4) digits.
//   Flat:              {"ambient_rank": r, "basis": [...]}
//   Rational:          {"num": n, "den": d}
//   Edge list:         one "u v" pair per line; '#' starts a comment; an
//                      optional "vertices N" line fixes the vertex count.

#pragma once

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pgfree/constructions.hpp"
#include "pgfree/error.hpp"
#include "pgfree/gf2.hpp"
#include "pgfree/point_set.hpp"
#include "pgfree/rational.hpp"
#include "pgfree/spectral.hpp"
#include "pgfree/structure.hpp"

namespace pgfree {

using Json = nlohmann::ordered_json;

/// Decimal or 0x-prefixed hexadecimal.
inline Word parse_word(std::string_view text, const std::string& where = "word") {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw ParseError(where, "empty integer");
  int base = 10;
  std::size_t start = 0;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    base = 16;
    start = 2;
  }
  std::uint64_t value = 0;
  for (std::size_t i = start; i < s.size(); ++i) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(s[i])));
    int digit;
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (base == 16 && c >= 'a' && c <= 'f') digit = c - 'a' + 10;
    else throw ParseError(where, "bad digit '" + std::string(1, s[i]) + "' at offset " + std::to_string(i));
    value = value * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(digit);
    if (value > std::numeric_limits<Word>::max()) throw ParseError(where, "integer too large");
  }
  return static_cast<Word>(value);
}

/// "a" or "a/b" with integer a, b (b > 0).
inline Rational parse_rational(std::string_view text, const std::string& where = "rational") {
  const std::size_t slash = text.find('/');
  auto integer = [&](std::string_view part, std::size_t offset) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw ParseError(where, "bad integer at offset " + std::to_string(offset));
    }
    return static_cast<Int128>(v);
  };
  if (slash == std::string_view::npos) return Rational(integer(text, 0));
  const Int128 den = integer(text.substr(slash + 1), slash + 1);
  if (den <= 0) throw ParseError(where, "denominator must be positive");
  return Rational(integer(text.substr(0, slash), 0), den);
}

inline std::string format_word_hex(Word w) {
  std::ostringstream os;
  os << "0x" << std::hex << w;
  return os.str();
}

// ---------------------------------------------------------------- PointSet

inline std::string to_compact(const PointSet& e) {
  const std::size_t bits = e.vector_count();
  const std::size_t digits = std::max<std::size_t>(1, bits / 4);
  std::string out = std::to_string(e.rank()) + ":";
  static constexpr char kHex[] = "0123456789abcdef";
  for (std::size_t d = digits; d-- > 0;) {
    unsigned nibble = 0;
    for (int b = 3; b >= 0; --b) {
      const std::size_t index = d * 4 + static_cast<std::size_t>(b);
      nibble = (nibble << 1) | (index < bits && e.contains(static_cast<Word>(index)) ? 1u : 0u);
    }
    out.push_back(kHex[nibble]);
  }
  return out;
}

inline PointSet parse_compact(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::size_t colon = text.find(':', begin);
  if (colon == std::string_view::npos || colon >= end) {
    throw ParseError("offset " + std::to_string(begin), "compact point set needs 'rank:HEX'");
  }
  int rank = 0;
  for (std::size_t i = begin; i < colon; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("offset " + std::to_string(i), "rank must be a decimal integer");
    }
    rank = rank * 10 + (text[i] - '0');
    if (rank > kMaxRank) throw ParseError("offset " + std::to_string(i), "rank exceeds cap");
  }
  if (rank < 1) throw ParseError("offset " + std::to_string(begin), "rank must be >= 1");
  PointSet out(rank);
  const std::size_t bits = out.vector_count();
  const std::size_t digits = end - colon - 1;
  if (digits == 0) throw ParseError("offset " + std::to_string(colon + 1), "missing hex digits");
  for (std::size_t i = colon + 1; i < end; ++i) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
    unsigned nibble;
    if (c >= '0' && c <= '9') nibble = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f') nibble = static_cast<unsigned>(c - 'a' + 10);
    else throw ParseError("offset " + std::to_string(i), "bad hex digit '" + std::string(1, text[i]) + "'");
    const std::size_t digit_index = end - 1 - i;  // 0 = least significant
    for (int b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1u)) continue;
      const std::size_t index = digit_index * 4 + static_cast<std::size_t>(b);
      if (index >= bits) throw ParseError("offset " + std::to_string(i), "bit beyond 2^r");
      if (index == 0) throw ParseError("offset " + std::to_string(i), "bit 0 (the zero vector) is set");
      out.insert(static_cast<Word>(index));
    }
  }
  return out;
}

inline Json to_json(const PointSet& e) {
  Json pts = Json::array();
  e.for_each([&](Word p) { pts.push_back(p); });
  return Json{{"rank", e.rank()}, {"points", pts}};
}

inline Word word_from_json(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > std::numeric_limits<Word>::max()) throw ParseError(where, "integer too large");
    return static_cast<Word>(v);
  }
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) throw ParseError(where, "negative integer");
    if (v > static_cast<std::int64_t>(std::numeric_limits<Word>::max())) throw ParseError(where, "integer too large");
    return static_cast<Word>(v);
  }
  if (j.is_string()) return parse_word(j.get<std::string>(), where);
  throw ParseError(where, "expected an integer");
}

inline PointSet point_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("points")) {
    throw ParseError("point set", "expected {\"rank\": r, \"points\": [...]}");
  }
  if (!j["rank"].is_number_integer()) throw ParseError("rank", "expected an integer");
  const int rank = j["rank"].get<int>();
  if (rank < 1 || rank > kMaxRank) throw ParseError("rank", "outside [1, 24]");
  if (!j["points"].is_array()) throw ParseError("points", "expected an array");
  PointSet out(rank);
  std::size_t i = 0;
  for (const auto& item : j["points"]) {
    const std::string where = "points[" + std::to_string(i++) + "]";
    const Word w = word_from_json(item, where);
    if (w == 0) throw ParseError(where, "0 is not a point");
    if (w >= out.vector_count()) throw ParseError(where, "point outside PG(" + std::to_string(rank - 1) + ",2)");
    out.insert(w);
  }
  return out;
}

/// Accepts either the JSON or the compact form.
inline PointSet parse_point_set(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("offset 0", "empty input");
  if (text[first] != '{') return parse_compact(text);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError("byte " + std::to_string(err.byte), err.what());
  }
  return point_set_from_json(j);
}

// -------------------------------------------------------------------- Flat

inline Json to_json(const Flat& f) {
  return Json{{"ambient_rank", f.ambient_rank()}, {"basis", f.basis()}};
}

/// Reads a basis and stores it in canonical form; dependent bases are
/// rejected.
inline Flat flat_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ambient_rank") || !j.contains("basis") || !j["basis"].is_array()) {
    throw ParseError("flat", "expected {\"ambient_rank\": r, \"basis\": [...]}");
  }
  std::vector<Word> basis;
  std::size_t i = 0;
  for (const auto& item : j["basis"]) basis.push_back(word_from_json(item, "basis[" + std::to_string(i++) + "]"));
  try {
    return Flat::from_basis(j["ambient_rank"].get<int>(), basis);
  } catch (const InvalidArgument& err) {
    throw ParseError("basis", err.what());
  }
}

// ---------------------------------------------------------------- Rational

inline Json int128_json(Int128 v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(to_string(v));
}

inline Json to_json(const Rational& q) { return Json{{"num", int128_json(q.num())}, {"den", int128_json(q.den())}}; }

// ----------------------------------------------------------------- Reports

inline Json to_json(const FreenessWitness& w) {
  Json j{{"found", w.found}};
  j["subspace"] = w.subspace ? to_json(*w.subspace) : Json(nullptr);
  return j;
}

inline Json to_json(const UniformityReport& u) {
  return Json{{"alpha", to_json(u.alpha)}, {"epsilon_min", to_json(u.epsilon_min)}, {"worst_gamma", u.worst_gamma}};
}

inline Json to_json(const StructureResult& s) {
  Json j{{"found", s.found}};
  j["flat"] = s.flat ? to_json(*s.flat) : Json(nullptr);
  j["intersection_size"] = s.intersection_size;
  j["density_claim_holds"] = s.density_claim_holds;
  return j;
}

inline Json to_json(const DescentTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back(Json{{"level", s.level},
                         {"ambient_rank", s.ambient_rank},
                         {"gamma", s.gamma},
                         {"size_before", s.size_before},
                         {"size_after", s.size_after},
                         {"intersection_free", s.intersection_free}});
  }
  Json j{{"steps", steps}};
  j["fallback_level"] = t.fallback_level ? Json(*t.fallback_level) : Json(nullptr);
  j["final_flat"] = t.final_flat ? to_json(*t.final_flat) : Json(nullptr);
  j["final_restriction_size"] = t.final_restriction_size;
  return j;
}

inline Json to_json(const FlatSearch& s) {
  Json j = to_json(s.result);
  j["trace"] = s.trace ? to_json(*s.trace) : Json(nullptr);
  return j;
}

inline Json to_json(const ConeLemmaReport& c) {
  return Json{{"cone_size", c.cone_size},
              {"size_bound", int128_json(c.size_bound)},
              {"slack", int128_json(c.slack)},
              {"cone_pg_free", c.cone_pg_free}};
}

// --------------------------------------------------------------- GraphSpec

inline GraphSpec parse_edge_list(std::string_view text) {
  GraphSpec g;
  int fixed_vertices = -1;
  int max_vertex = -1;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (!(fields >> b) || (fields >> extra)) throw ParseError(where, "expected two fields");
    try {
      if (a == "vertices") {
        fixed_vertices = std::stoi(b);
        continue;
      }
      const int u = std::stoi(a);
      const int v = std::stoi(b);
      if (u < 0 || v < 0) throw ParseError(where, "negative vertex");
      g.edges.emplace_back(u, v);
      max_vertex = std::max({max_vertex, u, v});
    } catch (const std::logic_error&) {
      throw ParseError(where, "expected integers");
    }
  }
  g.vertex_count = fixed_vertices >= 0 ? fixed_vertices : max_vertex + 1;
  try {
    g.validate();
  } catch (const InvalidArgument& err) {
    throw ParseError("edge list", err.what());
  }
  return g;
}

}  // namespace pgfree
