#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gtest/gtest.h>

#include "colnet/corpus.hpp"
#include "colnet/network.hpp"

namespace fixtures {

inline constexpr std::string_view kFox = "The quick brown fox jumped over the lazy dog";
inline constexpr std::string_view kAirplane = "The airplane took off. Off we go to Alaska.";

inline colnet::CollocationNetwork net(std::string_view text, colnet::NetType type) {
  const auto tokens = colnet::tokenize(text);
  return colnet::build_network(tokens, type);
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    std::string name = "colnet";
    if (info) name += std::string("_") + info->test_suite_name() + "_" + info->name();
    path_ = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  void write(const std::filesystem::path& relative, std::string_view content) const {
    const auto full = path_ / relative;
    std::filesystem::create_directories(full.parent_path());
    std::ofstream(full, std::ios::binary) << content;
  }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Random simple graph on n vertices where each possible pair (or ordered
/// pair) is present with probability p; loops added with probability p too.
inline colnet::Graph random_graph(std::size_t n, double p, bool directed, std::uint64_t seed, bool loops = false) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<colnet::Edge> edges;
  for (colnet::VertexId i = 0; i < n; ++i) {
    for (colnet::VertexId j = 0; j < n; ++j) {
      if (i == j && !loops) continue;
      if (!directed && j < i) continue;
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return colnet::Graph(n, directed, std::move(edges));
}

}  // namespace fixtures
