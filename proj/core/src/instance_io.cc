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

#include "streamsub/instance_io.h"

#include <fstream>
#include <optional>
#include <string_view>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "streamsub/errors.h"
#include "streamsub/loaders.h"
#include "streamsub/objectives.h"

namespace streamsub {
namespace {

using nlohmann::json;

constexpr char kFormat[] = "streamsub-instance";
constexpr int kVersion = 1;

json MatrixJson(const PointMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  return rows;
}

PointMatrix MatrixFromJson(const json& rows) {
  return PointMatrix::FromRows(rows.get<std::vector<std::vector<double>>>());
}

json ObjectiveJson(const SubmodularOracle& oracle) {
  json o;
  if (const auto* c = dynamic_cast<const CoverageObjective*>(&oracle)) {
    o["type"] = "coverage";
    o["vertex_count"] = c->vertex_count();
    o["neighborhood"] =
        c->neighborhood() == CoverageObjective::Neighborhood::kClosed
            ? "closed"
            : "open";
    json edges = json::array();
    for (const auto& [u, v] : c->Edges()) edges.push_back({u, v});
    o["edges"] = std::move(edges);
  } else if (const auto* e = dynamic_cast<const ExemplarObjective*>(&oracle)) {
    o["type"] = "exemplar";
    o["points"] = MatrixJson(e->points());
  } else if (const auto* r =
                 dynamic_cast<const RecommendationObjective*>(&oracle)) {
    o["type"] = "recommendation";
    o["movies"] = MatrixJson(r->movies());
    o["user"] = std::vector<double>(r->user().begin(), r->user().end());
    o["alpha"] = r->alpha();
  } else if (const auto* cc = dynamic_cast<const CellCoverObjective*>(&oracle)) {
    o["type"] = "cellcover";
    o["weights"] = std::vector<double>(cc->cell_weights().begin(),
                                       cc->cell_weights().end());
    json cells = json::array();
    for (std::uint32_t i = 0; i < cc->ground_size(); ++i) {
      const auto s = cc->cells(ElementId{i});
      cells.push_back(std::vector<std::uint32_t>(s.begin(), s.end()));
    }
    o["cells"] = std::move(cells);
  } else if (const auto* ix = dynamic_cast<const IndexObjective*>(&oracle)) {
    o["type"] = "index";
    o["k"] = ix->k();
    std::string roles;
    for (auto role : ix->roles()) {
      roles.push_back(role == IndexObjective::Role::kUnique   ? 'u'
                      : role == IndexObjective::Role::kShared ? 's'
                                                              : 'w');
    }
    o["roles"] = roles;
  } else if (const auto* m = dynamic_cast<const ModularObjective*>(&oracle)) {
    o["type"] = "modular";
    o["weights"] =
        std::vector<double>(m->weights().begin(), m->weights().end());
  } else {
    throw DataError("cannot serialize objective '" +
                    std::string(oracle.Name()) + "'");
  }
  return o;
}

std::shared_ptr<const SubmodularOracle> ObjectiveFromJson(const json& o) {
  const std::string type = o.at("type").get<std::string>();
  if (type == "coverage") {
    const auto edges = o.at("edges").get<std::vector<Edge>>();
    const std::string hood = o.value("neighborhood", "closed");
    if (hood != "closed" && hood != "open") {
      throw DataError("unknown neighborhood '" + hood + "'");
    }
    return std::make_shared<CoverageObjective>(
        o.at("vertex_count").get<std::size_t>(), edges,
        hood == "closed" ? CoverageObjective::Neighborhood::kClosed
                         : CoverageObjective::Neighborhood::kOpen);
  }
  if (type == "exemplar") {
    return std::make_shared<ExemplarObjective>(MatrixFromJson(o.at("points")),
                                               /*center=*/false);
  }
  if (type == "recommendation") {
    return std::make_shared<RecommendationObjective>(
        MatrixFromJson(o.at("movies")), o.at("user").get<std::vector<double>>(),
        o.at("alpha").get<double>());
  }
  if (type == "cellcover") {
    return std::make_shared<CellCoverObjective>(
        o.at("weights").get<std::vector<double>>(),
        o.at("cells").get<std::vector<std::vector<std::uint32_t>>>());
  }
  if (type == "index") {
    std::vector<IndexObjective::Role> roles;
    for (char c : o.at("roles").get<std::string>()) {
      switch (c) {
        case 'u':
          roles.push_back(IndexObjective::Role::kUnique);
          break;
        case 's':
          roles.push_back(IndexObjective::Role::kShared);
          break;
        case 'w':
          roles.push_back(IndexObjective::Role::kBob);
          break;
        default:
          throw DataError(std::string("unknown index role '") + c + "'");
      }
    }
    return std::make_shared<IndexObjective>(std::move(roles),
                                            o.at("k").get<std::uint32_t>());
  }
  if (type == "modular") {
    return std::make_shared<ModularObjective>(
        o.at("weights").get<std::vector<double>>());
  }
  throw DataError("unknown objective type '" + type + "'");
}

}  // namespace

std::string InstanceToJson(const InstanceBundle& bundle) {
  json doc;
  doc["format"] = kFormat;
  doc["version"] = kVersion;
  doc["source"] = bundle.source;
  doc["synthetic"] = bundle.synthetic;
  doc["k"] = bundle.k;
  if (bundle.known_opt) {
    doc["known_opt"] = {
        {"value", bundle.known_opt->value},
        {"provenance", ProvenanceName(bundle.known_opt->provenance)}};
  } else {
    doc["known_opt"] = nullptr;
  }
  doc["objective"] = ObjectiveJson(*bundle.oracle);
  json order = json::array();
  for (const StreamItem& item : bundle.canonical_order) {
    order.push_back({item.id.index, item.copy});
  }
  doc["canonical_order"] = std::move(order);
  return doc.dump(1);
}

InstanceBundle InstanceFromJson(const std::string& text,
                                const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source, 0, e.what());
  }
  try {
    if (doc.at("format") != kFormat) {
      throw DataError(source + ": not an instance document");
    }
    if (doc.at("version") != kVersion) {
      throw DataError(source + ": unsupported version");
    }
    InstanceBundle b;
    b.source = doc.value("source", source);
    b.synthetic = doc.value("synthetic", false);
    b.k = doc.value("k", std::size_t{0});
    const json& opt = doc.at("known_opt");
    if (!opt.is_null()) {
      const std::string prov = opt.at("provenance").get<std::string>();
      b.known_opt = KnownOpt{opt.at("value").get<double>(),
                             prov == ProvenanceName(OptProvenance::kBruteForced)
                                 ? OptProvenance::kBruteForced
                                 : OptProvenance::kConstructed};
    }
    b.oracle = ObjectiveFromJson(doc.at("objective"));
    for (const json& item : doc.at("canonical_order")) {
      const StreamItem s{ElementId{item.at(0).get<std::uint32_t>()},
                         item.at(1).get<std::uint32_t>()};
      b.oracle->CheckElement(s.id);
      b.canonical_order.push_back(s);
    }
    return b;
  } catch (const json::exception& e) {
    throw DataError(source + ": " + e.what());
  } catch (const std::domain_error& e) {
    throw DataError(source + ": " + e.what());
  }
}

void SaveInstance(const InstanceBundle& bundle, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << InstanceToJson(bundle) << '\n';
  if (!out) throw DataError("failed writing '" + path + "'");
}

InstanceBundle LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return InstanceFromJson(text.str(), path);
}

InstanceBundle OpenInstance(const std::string& spec, bool open_neighborhood) {
  auto strip = [&](std::string_view prefix) -> std::optional<std::string> {
    if (spec.starts_with(prefix)) return spec.substr(prefix.size());
    return std::nullopt;
  };
  InstanceBundle b;
  if (auto path = strip("edges:")) {
    b.oracle = LoadEdgeList(*path, open_neighborhood
                                       ? CoverageObjective::Neighborhood::kOpen
                                       : CoverageObjective::Neighborhood::kClosed);
  } else if (auto path = strip("points:")) {
    b.oracle = LoadPointsCsv(*path);
  } else if (auto args = strip("recsys:")) {
    std::vector<std::string> parts;
    std::stringstream ss(*args);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    if (parts.size() != 4) {
      throw ParameterError("recsys source needs MOVIES,USERS,ROW,ALPHA");
    }
    std::size_t row = 0;
    double alpha = 0.0;
    try {
      row = std::stoul(parts[2]);
      alpha = std::stod(parts[3]);
    } catch (const std::exception&) {
      throw ParameterError("recsys source: bad ROW or ALPHA");
    }
    b.oracle = LoadRecsys(parts[0], parts[1], row, alpha);
  } else {
    return LoadInstance(spec);
  }
  b.canonical_order = SingleCopies(b.oracle->ground_size());
  b.source = spec;
  b.synthetic = false;
  return b;
}

}  // namespace streamsub
