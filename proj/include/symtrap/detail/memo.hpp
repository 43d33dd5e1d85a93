#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>

namespace symtrap::detail {

// Insert-only cache shared between threads. Values are never mutated after
// insertion, so lookups hand out copies under a shared lock.
template <class Key, class Value>
class Memo {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  const Value& insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.emplace(key, std::move(value));
    return it->second;
  }

  template <class Compute>
  Value get_or_compute(const Key& key, Compute&& compute) {
    if (auto hit = find(key)) return *hit;
    // Computed outside the lock: recursive computations re-enter the cache.
    Value value = compute();
    return insert(key, std::move(value));
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> entries_;
};

}  // namespace symtrap::detail
