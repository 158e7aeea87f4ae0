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

#ifndef STREAMSUB_LOADERS_H_
#define STREAMSUB_LOADERS_H_

#include <cstddef>
#include <istream>
#include <memory>
#include <string>

#include "streamsub/objectives.h"

namespace streamsub {

// Plain-text readers. Malformed lines raise ParseError with the 1-based line
// number; non-finite numbers and empty inputs raise DataError. `source`
// names the input in messages.

// "u v" per line, '#' comments and blank lines skipped, undirected.
// Vertex count is the largest id plus one.
std::shared_ptr<CoverageObjective> ReadEdgeList(
    std::istream& in, const std::string& source,
    CoverageObjective::Neighborhood neighborhood =
        CoverageObjective::Neighborhood::kClosed);

// Comma-separated decimals, one row per line, no header; rows must agree in
// width. Blank lines are skipped.
PointMatrix ReadMatrixCsv(std::istream& in, const std::string& source);

std::shared_ptr<CoverageObjective> LoadEdgeList(
    const std::string& path, CoverageObjective::Neighborhood neighborhood =
                                 CoverageObjective::Neighborhood::kClosed);
PointMatrix LoadMatrixCsv(const std::string& path);
std::shared_ptr<ExemplarObjective> LoadPointsCsv(const std::string& path,
                                                 bool center = true);
// Movie vectors from movies_path; the user vector is row `user_row` of
// users_path.
std::shared_ptr<RecommendationObjective> LoadRecsys(
    const std::string& movies_path, const std::string& users_path,
    std::size_t user_row, double alpha);

}  // namespace streamsub

#endif  // STREAMSUB_LOADERS_H_
