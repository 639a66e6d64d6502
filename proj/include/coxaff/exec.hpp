#pragma once

namespace coxaff {

// Execution policy for the closure / search / dedup kernels.  Parallel
// kernels use OpenMP internally and produce output identical to serial.
enum class Exec { serial, parallel };

}  // namespace coxaff
