#include "neu/triple.hpp"

#include "neu/error.hpp"

#include <cmath>
#include <ostream>
#include <string>

namespace neu {

namespace {

void check_unit(double x, const char* name)
{
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorKind::OutOfRange,
                std::string(name) + " = " + std::to_string(x) + " is outside [0,1]");
  }
}

}  // namespace

Triple make_triple(double t, double i, double f)
{
  check_unit(t, "t");
  check_unit(i, "i");
  check_unit(f, "f");
  const double sum = t + i + f;
  if (std::abs(sum - 1.0) > kEpsNorm) {
    throw Error(ErrorKind::NotNormalized,
                "t + i + f = " + std::to_string(sum) + ", expected 1");
  }
  return Triple(t, i, f);
}

Triple from_percent(double t, double i, double f)
{
  for (double x : {t, i, f}) {
    if (!(x >= 0.0 && x <= 100.0)) {
      throw Error(ErrorKind::OutOfRange,
                  "percent component " + std::to_string(x) + " is outside [0,100]");
    }
  }
  const double sum = t + i + f;
  if (std::abs(sum - 100.0) > 100.0 * kEpsNorm) {
    throw Error(ErrorKind::NotNormalized,
                "t + i + f = " + std::to_string(sum) + "%, expected 100%");
  }
  return make_triple(t / 100.0, i / 100.0, f / 100.0);
}

RawTriple degenerate_residual(const RawTriple& raw) noexcept
{
  if (1.0 - raw.t < kEpsDegen) return {1.0, 0.0, 0.0};
  return {raw.t, 1.0 - raw.t, 0.0};
}

Triple renormalize(const RawTriple& raw) noexcept
{
  const double denom = raw.i + raw.f;
  if (denom < kEpsDegen) {
    const RawTriple r = degenerate_residual(raw);
    return Triple(r.t, r.i, r.f);
  }
  const double w = (1.0 - raw.t) / denom;
  return Triple(raw.t, raw.i * w, raw.f * w);
}

Interval true_bound(const Triple& v) noexcept
{
  return {v.t(), v.t() + v.i()};
}

double normalization_error(const Triple& v) noexcept
{
  return std::abs(v.t() + v.i() + v.f() - 1.0);
}

std::ostream& operator<<(std::ostream& os, const Triple& v)
{
  return os << '(' << v.t() << ',' << v.i() << ',' << v.f() << ')';
}

}  // namespace neu
