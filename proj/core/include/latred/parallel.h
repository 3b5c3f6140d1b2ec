// Copyright 2026 The Authors.
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

//
// Fixed-size worker pool for embarrassingly parallel sweeps. Tasks are
// indexed 0..count-1 and write their results into caller-owned slots, so
// output order never depends on completion order.
//

#ifndef LATRED_PARALLEL_H_
#define LATRED_PARALLEL_H_

#include <functional>

namespace latred {

// Worker count from LATRED_THREADS (0 or 1 = serial); defaults to the
// hardware concurrency. Throws std::invalid_argument on a malformed value.
int WorkerCount();

// Runs body(i) for i in [0, count) on up to `workers` threads. The first
// exception thrown by any task is rethrown after all workers stop.
void ParallelFor(int count, int workers, const std::function<void(int)>& body);
inline void ParallelFor(int count, const std::function<void(int)>& body) {
  ParallelFor(count, WorkerCount(), body);
}

}  // namespace latred

#endif  // LATRED_PARALLEL_H_
