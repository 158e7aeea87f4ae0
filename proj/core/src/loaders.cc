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

#include "streamsub/loaders.h"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cmath>
#include <fstream>
#include <string_view>
#include <vector>

#include "streamsub/errors.h"

namespace streamsub {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return in;
}

double ParseReal(std::string_view token, const std::string& source,
                 std::size_t line) {
  token = Trim(token);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() ||
      ptr != token.data() + token.size()) {
    throw ParseError(source, line,
                     "expected a number, got '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    throw DataError(source + ":" + std::to_string(line) +
                    ": non-finite value '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::shared_ptr<CoverageObjective> ReadEdgeList(
    std::istream& in, const std::string& source,
    CoverageObjective::Neighborhood neighborhood) {
  std::vector<Edge> edges;
  std::uint32_t max_id = 0;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const std::string_view s = Trim(text);
    if (s.empty() || s.front() == '#') continue;
    std::uint32_t ids[2];
    const char* p = s.data();
    const char* end = s.data() + s.size();
    for (std::uint32_t& id : ids) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      const auto [next, ec] = std::from_chars(p, end, id);
      if (ec != std::errc() || next == p) {
        throw ParseError(source, line, "expected two vertex ids");
      }
      p = next;
    }
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p != end) throw ParseError(source, line, "trailing text after edge");
    if (ids[0] == UINT32_MAX || ids[1] == UINT32_MAX) {
      throw DataError(source + ":" + std::to_string(line) +
                      ": vertex id too large");
    }
    max_id = std::max({max_id, ids[0], ids[1]});
    edges.emplace_back(ids[0], ids[1]);
  }
  if (edges.empty()) throw DataError(source + ": no edges");
  return std::make_shared<CoverageObjective>(std::size_t{max_id} + 1, edges,
                                             neighborhood);
}

PointMatrix ReadMatrixCsv(std::istream& in, const std::string& source) {
  std::vector<double> data;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::string_view s = Trim(text);
    if (s.empty()) continue;
    std::size_t width = 0;
    while (true) {
      const std::size_t comma = s.find(',');
      data.push_back(ParseReal(s.substr(0, comma), source, line));
      ++width;
      if (comma == std::string_view::npos) break;
      s.remove_prefix(comma + 1);
    }
    if (rows > 0 && width != cols) {
      throw ParseError(source, line,
                       "row has " + std::to_string(width) + " values, expected " +
                           std::to_string(cols));
    }
    cols = width;
    ++rows;
  }
  if (rows == 0) throw DataError(source + ": no rows");
  return PointMatrix(rows, cols, std::move(data));
}

std::shared_ptr<CoverageObjective> LoadEdgeList(
    const std::string& path, CoverageObjective::Neighborhood neighborhood) {
  std::ifstream in = OpenOrThrow(path);
  return ReadEdgeList(in, path, neighborhood);
}

PointMatrix LoadMatrixCsv(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return ReadMatrixCsv(in, path);
}

std::shared_ptr<ExemplarObjective> LoadPointsCsv(const std::string& path,
                                                 bool center) {
  return std::make_shared<ExemplarObjective>(LoadMatrixCsv(path), center);
}

std::shared_ptr<RecommendationObjective> LoadRecsys(
    const std::string& movies_path, const std::string& users_path,
    std::size_t user_row, double alpha) {
  PointMatrix movies = LoadMatrixCsv(movies_path);
  const PointMatrix users = LoadMatrixCsv(users_path);
  if (user_row >= users.rows()) {
    throw DataError(users_path + ": user row " + std::to_string(user_row) +
                    " out of range (" + std::to_string(users.rows()) +
                    " rows)");
  }
  const auto row = users.row(user_row);
  return std::make_shared<RecommendationObjective>(
      std::move(movies), std::vector<double>(row.begin(), row.end()), alpha);
}

}  // namespace streamsub
