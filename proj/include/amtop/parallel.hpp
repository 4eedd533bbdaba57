// Copyright 2026 The amtop Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AMTOP_PARALLEL_HPP_
#define AMTOP_PARALLEL_HPP_

#include <cstddef>
#include <vector>

#include <omp.h>

namespace amtop {

// Evaluates fn(0..count-1) into a vector indexed by chunk. jobs == 1 runs the
// plain serial loop; otherwise chunks are spread over an OpenMP team. Results
// land at their own index, so output order never depends on scheduling.
// fn must not throw.
template <class Result, class Fn>
std::vector<Result> map_chunks(std::size_t count, int jobs, Fn&& fn) {
  std::vector<Result> out(count);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  const int threads = jobs <= 0 ? omp_get_max_threads() : jobs;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace amtop

#endif  // AMTOP_PARALLEL_HPP_
