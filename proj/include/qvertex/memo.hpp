#pragma once

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace qvertex {

/// Grow-only cache shared between threads. Values are computed outside the
/// lock; when two threads race on a key the first insert wins and both see
/// the same (identical) value.
template <class Key, class Value, class Hash = std::hash<Key>>
class MemoCache {
public:
    template <class Fn>
    Value get_or_compute(const Key& key, Fn&& compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = map_.find(key); it != map_.end()) return it->second;
        }
        Value v = compute();
        std::unique_lock lock(mutex_);
        return map_.try_emplace(key, std::move(v)).first->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, Value, Hash> map_;
};

}  // namespace qvertex
