#include "neu/batch.hpp"

#include <cstddef>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace neu {

int available_threads() noexcept
{
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace batch {

namespace {

void check_sizes(ConnectorKind kind, std::span<const Triple> lhs,
                 std::span<const Triple> rhs, std::span<Triple> out)
{
  if (out.size() != lhs.size() || (!is_unary(kind) && rhs.size() != lhs.size())) {
    throw std::invalid_argument("batch::apply: operand sizes differ");
  }
}

inline Triple apply_one(ConnectorKind kind, const Triple& a, const Triple* b)
{
  return is_unary(kind) ? negate(a) : renormalize(apply_raw(kind, a, *b));
}

}  // namespace

void apply_serial(ConnectorKind kind, std::span<const Triple> lhs,
                  std::span<const Triple> rhs, std::span<Triple> out)
{
  check_sizes(kind, lhs, rhs, out);
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    out[k] = apply_one(kind, lhs[k], is_unary(kind) ? nullptr : &rhs[k]);
  }
}

void apply_parallel(ConnectorKind kind, std::span<const Triple> lhs,
                    std::span<const Triple> rhs, std::span<Triple> out)
{
  check_sizes(kind, lhs, rhs, out);
  const auto n = static_cast<std::ptrdiff_t>(lhs.size());
  const bool unary = is_unary(kind);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    out[k] = apply_one(kind, lhs[k], unary ? nullptr : &rhs[k]);
  }
}

}  // namespace batch
}  // namespace neu
