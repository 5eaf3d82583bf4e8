// Copyright 2026 The BASS Authors
// SPDX-License-Identifier: Apache-2.0
//
// Open-addressing hash map from basis index to complex amplitude.
//
// Layout:
//   - power-of-two capacity, linear probing, exact key comparison on probe
//   - maximum load factor 0.5, grow-by-doubling
//   - no per-key deletion; states are rebuilt wholesale on truncation
//
// Keys are basis indices in [0, 2^30), so ~0 is free to mark empty slots.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bass/common.hpp"

namespace bass {

class AmplitudeMap {
  public:
    static constexpr uint64_t kEmptyKey = ~0ull;

    explicit AmplitudeMap(size_t capacity_hint = 0);

    /// amp is added to the existing value, inserting the key if absent.
    void accumulate(uint64_t key, cplx amp);

    /// Overwrites (or inserts) the value at key.
    void set(uint64_t key, cplx amp);

    cplx* find(uint64_t key);
    const cplx* find(uint64_t key) const;

    size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    size_t capacity() const { return keys_.size(); }

    void clear();

    /// Pre-sizes the table for n entries without exceeding the load bound.
    void reserve(size_t n);

    /// Visits occupied slots in table order. The visit order is a
    /// deterministic function of the insertion history.
    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < keys_.size(); ++i)
            if (keys_[i] != kEmptyKey) f(keys_[i], vals_[i]);
    }

    /// Same as for_each but allows in-place amplitude updates.
    template <typename F>
    void for_each_mut(F&& f) {
        for (size_t i = 0; i < keys_.size(); ++i)
            if (keys_[i] != kEmptyKey) f(keys_[i], vals_[i]);
    }

  private:
    size_t slot(uint64_t key) const { return splitmix64(key) & (keys_.size() - 1); }
    void grow(size_t min_capacity);

    std::vector<uint64_t> keys_;
    std::vector<cplx> vals_;
    size_t size_ = 0;
};

}  // namespace bass
