#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace jhall {

/// Thread-safe memo table for pure functions. The computation runs without
/// the lock held, so it may recurse into the same cache; if two threads race
/// on one key the first inserted value wins (both are equal by purity).
/// References returned stay valid until clear().
template <class Key, class Value, class Compare = std::less<Key>>
class MemoCache {
 public:
  template <class F>
  const Value& get_or_compute(const Key& key, F&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

  [[nodiscard]] std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

  /// Not safe while other threads hold references into the cache.
  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value, Compare> map_;
};

}  // namespace jhall
