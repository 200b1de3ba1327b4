// Copyright 2026 The pcsim Authors
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

#pragma once

#include <functional>

namespace pcsim {

// Worker count: SIM_THREADS when set (clamped to at least 1), otherwise the
// hardware concurrency.
int thread_count();

// Runs body(0..n-1) across threads. The caller owns determinism: bodies must
// not depend on execution order.
void parallel_for(long n, const std::function<void(long)>& body);

}  // namespace pcsim
