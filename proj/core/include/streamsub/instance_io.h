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

#ifndef STREAMSUB_INSTANCE_IO_H_
#define STREAMSUB_INSTANCE_IO_H_

#include <string>

#include "streamsub/instances.h"

namespace streamsub {

// JSON document with the objective type and payload, canonical order
// (as [id, copy] pairs), k, known optimum and source. Round-trips every
// objective in objectives.h; exemplar points are stored after centering.
std::string InstanceToJson(const InstanceBundle& bundle);
InstanceBundle InstanceFromJson(const std::string& text,
                                const std::string& source = "<json>");

void SaveInstance(const InstanceBundle& bundle, const std::string& path);
// Throws ParseError on malformed JSON and DataError on a bad payload.
InstanceBundle LoadInstance(const std::string& path);

// Resolves an --instance argument:
//   edges:PATH                     edge list, coverage objective
//   points:PATH                    points CSV, exemplar objective (centered)
//   recsys:MOVIES,USERS,ROW,ALPHA  recommendation objective
//   anything else                  instance JSON written by SaveInstance
// Loaded data is marked non-synthetic, so it is not shuffled by default.
InstanceBundle OpenInstance(const std::string& spec,
                            bool open_neighborhood = false);

}  // namespace streamsub

#endif  // STREAMSUB_INSTANCE_IO_H_
