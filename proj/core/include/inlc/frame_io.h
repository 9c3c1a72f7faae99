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

#ifndef INLC_FRAME_IO_H_
#define INLC_FRAME_IO_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "inlc/errors.h"
#include "inlc/semantics.h"

namespace inlc {

// A model read from
//   {"worlds": ["a", "b"], "N": {"a": [["a", "b"], []], "b": []},
//    "V": {"p": ["b"]}}
// World i of the frame is worlds[i]. "V" is optional and worlds missing
// from "N" get no neighbourhoods.
struct NamedModel {
  std::vector<std::string> world_names;
  Model model;

  // Throws UnknownWorld.
  World world(const std::string& name) const;
};

// Throws FrameFormatError.
NamedModel model_from_json(const nlohmann::json& j);
NamedModel load_model(const std::string& path);

// Worlds are named "w0", "w1", ... unless names are given.
nlohmann::json frame_to_json(const NeighbourhoodFrame& frame,
                             const std::vector<std::string>& names = {});
nlohmann::json model_to_json(const Model& model,
                             const std::vector<std::string>& names = {});
nlohmann::json world_set_to_json(WorldSet s,
                                 const std::vector<std::string>& names = {});

}  // namespace inlc

#endif  // INLC_FRAME_IO_H_
