// Copyright 2026 The Hintforge Authors
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

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "hintforge/dataset.hpp"
#include "hintforge/error.hpp"
#include "hintforge/serialize.hpp"

namespace hintforge {
namespace {

namespace fs = std::filesystem;

class DatasetTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hintforge-ds-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    FamilySpec spec{ProblemClass::kMds, "star-kernel", SizeProfile::kDesk, {}, 4};
    ds_ = generateTarget(spec, {3, 2, 2}, {});
    writeDataset(dir_, ds_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
  TargetDataset ds_;
};

TEST_F(DatasetTest, RoundTrip) {
  auto m = readManifest(dir_);
  EXPECT_EQ(m.targetName(), "mds/star-kernel");
  EXPECT_EQ(m.specHash, ds_.specHash);
  EXPECT_EQ(m.ids.at("train").size(), 3U);
  EXPECT_EQ(loadSplit(dir_, "train"), ds_.train);
  EXPECT_EQ(loadSplit(dir_, "val"), ds_.val);
  EXPECT_EQ(loadSplit(dir_, "test"), ds_.test);
  EXPECT_EQ(m.effectiveParams, ds_.effectiveParams);
}

TEST_F(DatasetTest, TrainAndValLoadWithoutTest) {
  fs::remove_all(dir_ / "test");
  EXPECT_EQ(loadSplit(dir_, "train").size(), 3U);
  EXPECT_EQ(loadSplit(dir_, "val").size(), 2U);
  try {
    loadSplit(dir_, "test");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
  }
}

TEST_F(DatasetTest, MissingAndCorruptManifest) {
  EXPECT_THROW(loadSplit(dir_, "holdout"), Error);
  {
    std::ofstream(dir_ / "manifest.json") << "{not json";
  }
  try {
    readManifest(dir_);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
  fs::remove(dir_ / "manifest.json");
  try {
    readManifest(dir_);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
  }
}

TEST_F(DatasetTest, SplitIdsAreDisjoint) {
  auto m = readManifest(dir_);
  for (const auto& a : m.ids.at("train"))
    for (const auto& split : {"val", "test"})
      for (const auto& b : m.ids.at(split)) EXPECT_NE(a, b);
}

}  // namespace
}  // namespace hintforge
