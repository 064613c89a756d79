// Copyright 2026 The fpeval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FPEVAL_PARALLEL_H_
#define FPEVAL_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace fpeval {

// Worker count used by library operations. Initialized from the
// FPEVAL_THREADS environment variable, else the hardware concurrency.
int DefaultThreads();
void SetDefaultThreads(int threads);

// Runs fn(0..n-1) on up to `threads` workers (DefaultThreads() when <= 0).
// Each index is handled exactly once; callers write results by index so the
// outcome does not depend on scheduling. The first exception thrown by any
// call is rethrown after all workers stop.
void ParallelFor(size_t n, const std::function<void(size_t)>& fn,
                 int threads = 0);

}  // namespace fpeval

#endif  // FPEVAL_PARALLEL_H_
