#pragma once

#include <map>
#include <mutex>
#include <utility>

namespace qseries::detail {

// Insert-only memo table shared between threads.  Values are computed
// outside the lock so that computations may recurse into the same table;
// references stay valid because std::map never relocates its nodes.
template <class Key, class Value>
class Memo {
 public:
  template <class Compute>
  const Value& get(const Key& key, Compute&& compute) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value value = compute();
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace qseries::detail
