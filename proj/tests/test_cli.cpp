// Copyright 2026 The nilcone Authors.
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "nilcone_tools/cache.hpp"
#include "nilcone_tools/cli.hpp"

namespace nilcone::tools {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "nilcone");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("nilcone-cli-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
    cache_ = dir_ / "cache.jsonl";
    ::setenv("NILCONE_CACHE", cache_.c_str(), 1);
  }
  void TearDown() override {
    ::unsetenv("NILCONE_CACHE");
    std::filesystem::remove_all(dir_);
  }
  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
  std::filesystem::path cache_;
};

TEST_F(CliTest, CensusJson) {
  const auto r = invoke({"census", "--g", "2", "--r", "2", "--d", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, R"({"g":2,"r":2,"d":1,"partitions":[{"r":[0,1],"count":1},{"r":[2],"count":1}],"total":2})" "\n");
  EXPECT_NE(invoke({"census", "--g", "3", "--r", "2", "--d", "1"}).out.find(R"("total":3)"), std::string::npos);
  EXPECT_NE(invoke({"census", "--g", "2", "--r", "1", "--d", "7"}).out.find(R"("total":1)"), std::string::npos);
}

TEST_F(CliTest, CensusCsvAndPoints) {
  const auto csv = invoke({"census", "--g", "2", "--r", "2", "--d", "1", "--format", "csv"});
  EXPECT_EQ(csv.out, "partition,count\n\"0,1\",1\n\"2\",1\ntotal,2\n");
  const auto pts = invoke({"census", "--g", "2", "--r", "2", "--d", "1", "--points", "--no-cache"});
  EXPECT_NE(pts.out.find(R"({"g":2,"r":[0,1],"d":[1,1]})"), std::string::npos);
  EXPECT_EQ(invoke({"census", "--g", "2", "--r", "2", "--d", "1", "--points", "--format", "csv"}).code, 1);
}

TEST_F(CliTest, CensusIsDeterministicAndCached) {
  const auto first = invoke({"census", "--g", "2", "--r", "3", "--d", "2"});
  ASSERT_TRUE(std::filesystem::exists(cache_));
  const auto second = invoke({"census", "--g", "2", "--r", "3", "--d", "2"});
  const auto fresh = invoke({"census", "--g", "2", "--r", "3", "--d", "2", "--no-cache"});
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.out, fresh.out);
  std::ifstream in(cache_);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 1);
}

TEST_F(CliTest, CacheIgnoresOtherSchemaVersions) {
  ResultCache cache(cache_);
  CacheKey key{2, 2, 1, "census", kCacheSchemaVersion + 1};
  Json bogus;
  bogus["total"] = 99;
  ASSERT_TRUE(cache.append(key, bogus));
  {
    std::ofstream(cache_, std::ios::app) << "not json\n";
  }
  const auto r = invoke({"census", "--g", "2", "--r", "2", "--d", "1"});
  EXPECT_NE(r.out.find(R"("total":2)"), std::string::npos);
  key.version = kCacheSchemaVersion;
  EXPECT_TRUE(cache.lookup(key).has_value());
}

TEST_F(CliTest, CensusErrors) {
  EXPECT_EQ(invoke({"census", "--g", "1", "--r", "2", "--d", "1"}).code, 1);
  EXPECT_EQ(invoke({"census", "--g", "2", "--r", "0", "--d", "1"}).code, 1);
  EXPECT_EQ(invoke({"census", "--g", "2", "--r", "2"}).code, 1);
  EXPECT_EQ(invoke({"census", "--g", "2", "--r", "2", "--d", "1", "--format", "xml"}).code, 1);
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(CliTest, CheckType) {
  const auto ok = invoke({"check-type", "--input", write("a.json", R"({"g":2,"r":[0,1],"d":[1,1]})")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "{\"semistable\":true}\n");
  const auto bad = invoke({"check-type", "--input", write("b.json", R"({"g":2,"r":[0,1],"d":[3,0]})")});
  EXPECT_EQ(bad.code, 0);
  EXPECT_EQ(bad.out,
            R"({"semistable":false,"witness":{"region":[1,1],"side":"upper","region_slope":"1","total_slope":"1/2"}})" "\n");
  EXPECT_EQ(invoke({"check-type", "--input", write("c.json", "{")}).code, 1);
  EXPECT_EQ(invoke({"check-type", "--input", (dir_ / "missing.json").string()}).code, 1);
}

TEST_F(CliTest, Kappa) {
  const auto r = invoke({"kappa", "--input", write("a.json", R"({"g":2,"r":[0,1],"d":[1,1]})")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind(R"({"n":[1,1],"p":[0,-1],"flag":[2,1],"conditions":{"all_hold":true)", 0), 0U);
  const auto b = invoke({"kappa", "--input", write("b.json", R"({"g":2,"r":[1,1],"d":[-1,2]})")});
  EXPECT_EQ(b.out.rfind(R"({"n":[1,2],"p":[0,-3])", 0), 0U);
  EXPECT_EQ(invoke({"kappa", "--input", write("c.json", R"({"g":2,"r":[0,1],"d":[3,0]})")}).code, 1);
}

TEST_F(CliTest, Polytope) {
  const auto count = invoke({"polytope", "--g", "2", "--rvec", "0,1", "--d", "1", "count"});
  EXPECT_EQ(count.out, R"({"g":2,"r":[0,1],"d":1,"count":1})" "\n");
  const auto pts = invoke({"polytope", "--g", "2", "--rvec", "1,1", "--d", "1", "points"});
  EXPECT_EQ(pts.out, R"({"g":2,"r":[1,1],"d":1,"points":[[1,1],[-1,2]]})" "\n");
  const auto bounds = invoke({"polytope", "--g", "2", "--rvec", "0,1", "--d", "1", "bounds"});
  EXPECT_NE(bounds.out.find(R"({"variable":"d2","lower":"1/2","upper":"3/2"})"), std::string::npos);
  const auto csv = invoke({"polytope", "--g", "2", "--rvec", "0,1", "--d", "1", "--format", "csv"});
  EXPECT_EQ(csv.out, "partition,count\n\"0,1\",1\n");
  EXPECT_EQ(invoke({"polytope", "--g", "2", "--rvec", "1,0", "--d", "1"}).code, 1);
  EXPECT_EQ(invoke({"polytope", "--g", "2", "--rvec", "a,1", "--d", "1"}).code, 1);
  EXPECT_EQ(invoke({"polytope", "--g", "2", "--rvec", "0,1", "--d", "1", "volume"}).code, 1);
}

TEST_F(CliTest, Kac) {
  const auto full = invoke({"kac", "--g", "2", "--r", "2"});
  EXPECT_EQ(full.out,
            R"({"g":2,"r":2,"degree":5,"coefficients":[0,0,0,1,0,1],"polynomial":"q^5 + q^3","at_one":2})" "\n");
  EXPECT_EQ(invoke({"kac", "--g", "3", "--r", "2", "--at-one"}).out, R"({"g":3,"r":2,"at_one":3})" "\n");
  const auto oracle = invoke({"kac", "--g", "2", "--r", "2", "--oracle", "2"});
  EXPECT_EQ(oracle.code, 0);
  EXPECT_EQ(oracle.out, R"({"g":2,"r":2,"q":2,"oracle":40,"hua":40,"match":true})" "\n");
  EXPECT_EQ(invoke({"kac", "--g", "3", "--r", "2", "--oracle", "4"}).code, 1);
  EXPECT_EQ(invoke({"kac", "--g", "2", "--r", "12"}).code, 1);
}

TEST_F(CliTest, VerifySuites) {
  const auto regions = invoke({"verify", "--suite", "regions"});
  EXPECT_EQ(regions.code, 0);
  EXPECT_NE(regions.out.find(R"("counts":{"1":2,"2":4,"3":8,"4":16,"5":32,"6":64})"), std::string::npos);
  const auto dim = invoke({"verify", "--suite", "dimension"});
  EXPECT_EQ(dim.code, 0);
  EXPECT_NE(dim.out.find(R"("types":1000)"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "--suite", "cache"}).code, 0);
  EXPECT_EQ(invoke({"verify", "--suite", "nonsense"}).code, 1);
}

TEST_F(CliTest, VerifyNegativeControl) {
  for (const char* suite : {"regions", "dimension", "dual", "kappa", "oracle", "translation", "kac", "crosscheck", "cache"}) {
    const auto r = invoke({"verify", "--suite", suite, "--inject-fault"});
    EXPECT_EQ(r.code, 2) << suite;
    EXPECT_NE(r.out.find(R"("first_failure":")" + std::string(suite) + ":"), std::string::npos) << r.out;
  }
  const auto all = invoke({"verify", "--suite", "all", "--inject-fault"});
  EXPECT_EQ(all.code, 2);
  EXPECT_NE(all.out.find(R"("pass":false,"suites":)"), std::string::npos);
}

}  // namespace
}  // namespace nilcone::tools
