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

#include <gtest/gtest.h>

#include "inlc/errors.h"

namespace inlc {
namespace {

using json = nlohmann::json;

TEST(FrameIoTest, ReadsNamedModel) {
  auto m = model_from_json(json::parse(R"({
    "worlds": ["a", "b"],
    "N": {"a": [["a", "b"], []]},
    "V": {"p": ["b"]}
  })"));
  EXPECT_EQ(m.world_names, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(m.world("b"), 1u);
  EXPECT_THROW(m.world("c"), UnknownWorld);
  EXPECT_EQ(m.model.frame.neighbourhoods(0),
            (std::vector<WorldSet>{WorldSet(), WorldSet(0b11)}));  // kept sorted
  EXPECT_TRUE(m.model.frame.neighbourhoods(1).empty());
  EXPECT_EQ(m.model.valuation.at("p"), WorldSet(0b10));
}

TEST(FrameIoTest, RoundTrip) {
  Model m{NeighbourhoodFrame(3, {{WorldSet(5)}, {WorldSet(), WorldSet(2)}, {}}),
          {{"q", WorldSet(6)}}};
  std::vector<std::string> names{"u", "v", "w"};
  auto back = model_from_json(model_to_json(m, names));
  EXPECT_EQ(back.world_names, names);
  EXPECT_EQ(back.model.frame, m.frame);
  EXPECT_EQ(back.model.valuation, m.valuation);
  EXPECT_EQ(frame_to_json(m.frame)["worlds"], json::parse(R"(["w0","w1","w2"])"));
}

TEST(FrameIoTest, Rejects) {
  for (const char* bad : {
           R"([])",
           R"({})",
           R"({"worlds": []})",
           R"({"worlds": ["a", "a"]})",
           R"({"worlds": [1]})",
           R"({"worlds": ["a"], "N": {"b": []}})",
           R"({"worlds": ["a"], "N": {"a": [["z"]]}})",
           R"({"worlds": ["a"], "N": {"a": "a"}})",
           R"({"worlds": ["a"], "V": {"p": "a"}})",
           R"({"worlds": ["a","b","c","d","e","f","g","h","i","j","k","l","m"]})",
       }) {
    EXPECT_THROW(model_from_json(json::parse(bad)), FrameFormatError) << bad;
  }
  EXPECT_THROW(load_model("/nonexistent/frame.json"), FrameFormatError);
}

}  // namespace
}  // namespace inlc
