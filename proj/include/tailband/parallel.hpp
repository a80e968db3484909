// Copyright 2026 the tailband authors
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//       http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tailband {

// Execution policy for the Monte-Carlo kernels.  `parallel = false` selects
// the serial reference loop, kept as the comparison baseline for tests and
// benchmarks; results must be bit-identical either way because every index
// owns its own random stream and output slot.
struct ExecPolicy {
  bool parallel = true;
  int threads = 0;  // 0 = runtime default
};

// Runs fn(0..n-1); the body must only write state owned by its index.
template <typename Fn>
void for_each_index(int n, const ExecPolicy& ex, Fn&& fn) {
#ifdef _OPENMP
  if (ex.parallel) {
    const int nt = ex.threads > 0 ? ex.threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
#endif
  for (int i = 0; i < n; ++i) fn(i);
}

}  // namespace tailband
