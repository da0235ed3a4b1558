#pragma once

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

namespace sunic::detail {

// Word -> is-trivial. Readers share, writers take the lock exclusively.
struct TrivialityCache {
  std::shared_mutex mu;
  std::unordered_map<std::vector<std::uint32_t>, bool, boost::hash<std::vector<std::uint32_t>>> map;

  bool lookup(const std::vector<std::uint32_t>& w, bool& out) {
    std::shared_lock lk(mu);
    auto it = map.find(w);
    if (it == map.end()) return false;
    out = it->second;
    return true;
  }
  void store(const std::vector<std::uint32_t>& w, bool v) {
    std::unique_lock lk(mu);
    map.emplace(w, v);
  }
};

}  // namespace sunic::detail
