// Copyright 2026 The privlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVLEARN_DATA_HPP_
#define PRIVLEARN_DATA_HPP_

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "privlearn/random.hpp"

namespace privlearn {

// Points live on the finite integer domain [0, N). Labels are 0/1.
struct LabeledExample {
  int x = 0;
  int y = 0;

  friend bool operator==(const LabeledExample&, const LabeledExample&) =
      default;
};

// Ordered multiset of examples; order matters for index-based neighboring.
using Dataset = std::vector<LabeledExample>;
using UnlabeledDataset = std::vector<int>;

// Sorted, distinct indices into a dataset.
using IndexSet = std::vector<std::size_t>;

inline UnlabeledDataset points_of(const Dataset& s) {
  UnlabeledDataset xs;
  xs.reserve(s.size());
  for (const auto& e : s) xs.push_back(e.x);
  return xs;
}

inline Dataset concat(const Dataset& a, const Dataset& b) {
  Dataset out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline void validate_dataset(const Dataset& s, int domain_size) {
  for (const auto& e : s) {
    if (e.x < 0 || e.x >= domain_size) {
      throw std::invalid_argument("example point outside [0, N)");
    }
    if (e.y != 0 && e.y != 1) {
      throw std::invalid_argument("label must be 0 or 1");
    }
  }
}

// Uniformly random k-subset of [0, n); every k-subset equally likely.
inline IndexSet subsample_uniform_indices(std::size_t n, std::size_t k,
                                          RandomStream& rng) {
  if (k == 0 || k > n) {
    throw std::invalid_argument("subsample size must satisfy 1 <= k <= n");
  }
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.uniform_index(n - i);
    std::swap(pool[i], pool[j]);
  }
  IndexSet chosen(pool.begin(), pool.begin() + static_cast<long>(k));
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

// T = examples at the given indices, W = the rest, both in ascending original
// index order.
inline std::pair<Dataset, Dataset> split_by_index(const Dataset& s,
                                                  const IndexSet& indices) {
  std::vector<bool> selected(s.size(), false);
  for (std::size_t i : indices) {
    if (i >= s.size()) throw std::invalid_argument("index out of range");
    selected[i] = true;
  }
  Dataset t, w;
  t.reserve(indices.size());
  w.reserve(s.size() - indices.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    (selected[i] ? t : w).push_back(s[i]);
  }
  return {std::move(t), std::move(w)};
}

// m i.i.d. uniform draws from the entries of s.
inline Dataset resample_with_replacement(const Dataset& s, std::size_t m,
                                         RandomStream& rng) {
  if (s.empty()) throw std::invalid_argument("cannot resample an empty dataset");
  if (m == 0) throw std::invalid_argument("resample count must be >= 1");
  Dataset out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) out.push_back(s[rng.uniform_index(s.size())]);
  return out;
}

// Copy of s with entry i replaced; the replacement-model neighboring dataset.
inline Dataset neighboring(const Dataset& s, std::size_t i, LabeledExample e) {
  if (i >= s.size()) throw std::invalid_argument("index out of range");
  Dataset out = s;
  out[i] = e;
  return out;
}

}  // namespace privlearn

#endif  // PRIVLEARN_DATA_HPP_
