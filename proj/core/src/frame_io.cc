// Copyright 2026 The inlc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "inlc/frame_io.h"

#include <fstream>
#include <map>

namespace inlc {

using json = nlohmann::json;

World NamedModel::world(const std::string& name) const {
  for (std::size_t i = 0; i < world_names.size(); ++i) {
    if (world_names[i] == name) return static_cast<World>(i);
  }
  throw UnknownWorld("unknown world '" + name + "'");
}

namespace {

WorldSet read_set(const json& j, const std::map<std::string, World>& index,
                  const std::string& where) {
  if (!j.is_array()) throw FrameFormatError(where + ": expected an array of worlds");
  WorldSet s;
  for (const auto& w : j) {
    if (!w.is_string()) throw FrameFormatError(where + ": world names are strings");
    auto it = index.find(w.get<std::string>());
    if (it == index.end()) {
      throw FrameFormatError(where + ": unknown world '" + w.get<std::string>() + "'");
    }
    s = s.with(it->second);
  }
  return s;
}

std::string name_of(World w, const std::vector<std::string>& names) {
  return w < names.size() ? names[w] : "w" + std::to_string(w);
}

}  // namespace

NamedModel model_from_json(const json& j) {
  if (!j.is_object()) throw FrameFormatError("frame file must hold an object");
  if (!j.contains("worlds") || !j["worlds"].is_array()) {
    throw FrameFormatError("missing \"worlds\" array");
  }
  NamedModel out{{}, Model{NeighbourhoodFrame(1), {}}};
  std::map<std::string, World> index;
  for (const auto& w : j["worlds"]) {
    if (!w.is_string()) throw FrameFormatError("world names are strings");
    auto name = w.get<std::string>();
    if (!index.emplace(name, static_cast<World>(out.world_names.size())).second) {
      throw FrameFormatError("duplicate world '" + name + "'");
    }
    out.world_names.push_back(name);
  }
  if (out.world_names.empty()) throw FrameFormatError("a frame needs at least one world");
  if (out.world_names.size() > kMaxWorlds) {
    throw FrameFormatError("at most " + std::to_string(kMaxWorlds) + " worlds are supported");
  }
  NeighbourhoodFrame frame(out.world_names.size());
  if (j.contains("N")) {
    if (!j["N"].is_object()) throw FrameFormatError("\"N\" must be an object");
    for (const auto& [name, family] : j["N"].items()) {
      auto it = index.find(name);
      if (it == index.end()) throw FrameFormatError("\"N\": unknown world '" + name + "'");
      if (!family.is_array()) throw FrameFormatError("\"N\"." + name + ": expected an array");
      for (const auto& s : family) {
        frame.add_neighbourhood(it->second, read_set(s, index, "\"N\"." + name));
      }
    }
  }
  out.model.frame = std::move(frame);
  if (j.contains("V")) {
    if (!j["V"].is_object()) throw FrameFormatError("\"V\" must be an object");
    for (const auto& [p, ext] : j["V"].items()) {
      out.model.valuation[p] = read_set(ext, index, "\"V\"." + p);
    }
  }
  return out;
}

NamedModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FrameFormatError("cannot open frame file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FrameFormatError("invalid JSON in '" + path + "': " + e.what());
  }
  return model_from_json(j);
}

json world_set_to_json(WorldSet s, const std::vector<std::string>& names) {
  json out = json::array();
  for (World w = 0; w < 32; ++w) {
    if (s.contains(w)) out.push_back(name_of(w, names));
  }
  return out;
}

json frame_to_json(const NeighbourhoodFrame& frame,
                   const std::vector<std::string>& names) {
  json worlds = json::array();
  json n = json::object();
  for (World w = 0; w < frame.size(); ++w) {
    worlds.push_back(name_of(w, names));
    json family = json::array();
    for (WorldSet s : frame.neighbourhoods(w)) family.push_back(world_set_to_json(s, names));
    n[name_of(w, names)] = family;
  }
  return {{"worlds", worlds}, {"N", n}};
}

json model_to_json(const Model& model, const std::vector<std::string>& names) {
  json j = frame_to_json(model.frame, names);
  json v = json::object();
  for (const auto& [p, ext] : model.valuation) v[p] = world_set_to_json(ext, names);
  j["V"] = v;
  return j;
}

}  // namespace inlc
