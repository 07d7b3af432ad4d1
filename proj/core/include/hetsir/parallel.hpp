// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <functional>

namespace hetsir {

/// Worker count: explicit argument > HETSIR_THREADS env var > hardware.
int default_thread_count();

/// Number of fixed-size chunks covering [0, n) with the given chunk size.
std::int64_t chunk_count(std::int64_t n, std::int64_t chunk_size);

/// Runs fn(chunk_index, begin, end) over fixed chunk boundaries of [0, n).
///
/// Chunk boundaries depend only on (n, chunk_size), never on the worker
/// count, so callers that write results into per-chunk slots and reduce them
/// in chunk order get bit-identical output for any number of threads.
void parallel_chunks(std::int64_t n, std::int64_t chunk_size,
                     const std::function<void(std::int64_t, std::int64_t, std::int64_t)>& fn,
                     int threads = 0);

/// Parallel map over [0, n) when per-item outputs go to distinct slots.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn,
                  int threads = 0);

}  // namespace hetsir
