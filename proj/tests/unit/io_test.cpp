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

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgfree/constructions.hpp"
#include "pgfree/io.hpp"

namespace pgfree {
namespace {

std::string error_of(const std::string& text) {
  try {
    parse_point_set(text);
  } catch (const ParseError& err) {
    return err.what();
  }
  return "";
}

TEST(Compact, RoundTrip) {
  std::mt19937_64 rng(103);
  for (int r = 1; r <= 12; ++r) {
    const PointSet e = oracle::random_set(r, rng);
    EXPECT_EQ(parse_compact(to_compact(e)), e);
    EXPECT_EQ(parse_point_set("  " + to_compact(e) + "\n"), e);
  }
  EXPECT_EQ(to_compact(PointSet::from_points(2, {1, 3})), "2:a");
  EXPECT_EQ(to_compact(k5()), "4:177e");
}

TEST(Json, RoundTrip) {
  std::mt19937_64 rng(107);
  for (int r = 1; r <= 10; ++r) {
    const PointSet e = oracle::random_set(r, rng);
    EXPECT_EQ(parse_point_set(to_json(e).dump()), e);
  }
  EXPECT_EQ(parse_point_set(R"({"rank": 3, "points": ["0x7", 1]})"), PointSet::from_points(3, {1, 7}));
}

TEST(Parse, ErrorsCarryPositions) {
  EXPECT_NE(error_of(R"({"rank": 3, "points": [1, 0]})").find("points[1]"), std::string::npos);
  EXPECT_NE(error_of(R"({"rank": 3, "points": [9]})").find("points[0]"), std::string::npos);
  EXPECT_NE(error_of(R"({"rank": 3, "points": [-2]})").find("points[0]"), std::string::npos);
  EXPECT_NE(error_of(R"({"rank": 3, "points": [1,)").find("byte"), std::string::npos);
  EXPECT_NE(error_of("3:g1").find("offset 2"), std::string::npos);
  EXPECT_NE(error_of("3:01").find("zero vector"), std::string::npos);
  EXPECT_NE(error_of("2:1f").find("beyond"), std::string::npos);
  EXPECT_NE(error_of("x:1").find("offset 0"), std::string::npos);
  EXPECT_NE(error_of("").find("empty"), std::string::npos);
  EXPECT_NE(error_of(R"({"rank": 30, "points": []})").find("rank"), std::string::npos);
}

TEST(Words, Parsing) {
  EXPECT_EQ(parse_word("17"), 17u);
  EXPECT_EQ(parse_word("0x1F"), 31u);
  EXPECT_THROW(parse_word("0x1g"), ParseError);
  EXPECT_THROW(parse_word("99999999999"), ParseError);
  EXPECT_EQ(format_word_hex(255), "0xff");
}

TEST(Rationals, Parsing) {
  EXPECT_EQ(parse_rational("5/8"), Rational(5, 8));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/x"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  const Json j = to_json(Rational(-5, 8));
  EXPECT_EQ(j.dump(), R"({"num":-5,"den":8})");
}

TEST(Flats, JsonCanonicalizes) {
  const Flat f = Flat::span(4, {3, 5});
  const Json j = to_json(f);
  EXPECT_EQ(flat_from_json(j), f);
  Json other = Json{{"ambient_rank", 4}, {"basis", {6, 3}}};
  EXPECT_EQ(flat_from_json(other), f);
  EXPECT_THROW(flat_from_json(Json{{"ambient_rank", 4}, {"basis", {1, 2, 3}}}), ParseError);
}

TEST(EdgeList, Parsing) {
  const GraphSpec g = parse_edge_list("# K3 plus an isolated vertex\nvertices 4\n0 1\n1 2 # edge\n\n0 2\n");
  EXPECT_EQ(g.vertex_count, 4);
  EXPECT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(graphic_representation(g).size(), 3u);
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 a\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1\n1 0\n"), ParseError);
  try {
    parse_edge_list("0 1\n\n3 x\n");
    FAIL();
  } catch (const ParseError& err) {
    EXPECT_NE(std::string(err.what()).find("line 3"), std::string::npos);
  }
}

}  // namespace
}  // namespace pgfree
