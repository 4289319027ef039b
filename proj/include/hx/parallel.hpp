#pragma once

namespace hx {

// Global cap on worker threads used by the parallel kernels.
// 0 means "auto": the HX_THREADS environment variable if set, otherwise
// whatever OpenMP reports. Callers that need serial execution pass 1.
void set_thread_limit(int threads);
int thread_limit();

// Resolved thread count for a parallel region, always >= 1.
int effective_threads();

} // namespace hx
