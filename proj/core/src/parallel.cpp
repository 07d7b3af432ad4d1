// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "hetsir/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hetsir {

int default_thread_count() {
  if (const char* env = std::getenv("HETSIR_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::int64_t chunk_count(std::int64_t n, std::int64_t chunk_size) {
  if (n <= 0) return 0;
  return (n + chunk_size - 1) / chunk_size;
}

void parallel_chunks(std::int64_t n, std::int64_t chunk_size,
                     const std::function<void(std::int64_t, std::int64_t, std::int64_t)>& fn,
                     int threads) {
  if (n <= 0) return;
  if (chunk_size <= 0) chunk_size = 1;
  const std::int64_t chunks = chunk_count(n, chunk_size);
  if (threads <= 0) threads = default_thread_count();
  if (threads > chunks) threads = static_cast<int>(chunks);

  if (threads <= 1) {
    for (std::int64_t c = 0; c < chunks; ++c) {
      std::int64_t begin = c * chunk_size;
      std::int64_t end = begin + chunk_size < n ? begin + chunk_size : n;
      fn(c, begin, end);
    }
    return;
  }

  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      std::int64_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= chunks) return;
      std::int64_t begin = c * chunk_size;
      std::int64_t end = begin + chunk_size < n ? begin + chunk_size : n;
      try {
        fn(c, begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn,
                  int threads) {
  parallel_chunks(
      n, 1,
      [&fn](std::int64_t, std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) fn(i);
      },
      threads);
}

}  // namespace hetsir
