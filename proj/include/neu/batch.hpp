#pragma once

#include "neu/connectors.hpp"

#include <span>

namespace neu {

enum class Execution { Serial, Parallel };

/// Number of worker threads the parallel path would use (1 without OpenMP).
int available_threads() noexcept;

namespace batch {

// Element-wise connector application over equally sized spans. The serial
// versions are the reference; the parallel versions must produce identical
// output. Unary `kind` ignores `rhs`, which may then be empty.

void apply_serial(ConnectorKind kind, std::span<const Triple> lhs,
                  std::span<const Triple> rhs, std::span<Triple> out);

void apply_parallel(ConnectorKind kind, std::span<const Triple> lhs,
                    std::span<const Triple> rhs, std::span<Triple> out);

inline void apply(ConnectorKind kind, std::span<const Triple> lhs,
                  std::span<const Triple> rhs, std::span<Triple> out, Execution exec)
{
  if (exec == Execution::Parallel) {
    apply_parallel(kind, lhs, rhs, out);
  } else {
    apply_serial(kind, lhs, rhs, out);
  }
}

}  // namespace batch
}  // namespace neu
