#pragma once

namespace dtembed {

// Serial runs are bit-reproducible; Parallel runs use OpenMP. Kernels whose
// parallel form is exact (graph build, walks, eval scoring) produce identical
// results under both policies; SGD training in Parallel mode accepts benign
// update races and is not bitwise reproducible.
enum class ExecPolicy { Serial, Parallel };

// Worker count for Parallel kernels: OpenMP's max, capped by the
// DTEMBED_THREADS environment variable when set.
int effective_threads();

}  // namespace dtembed
