#pragma once

#include "neu/triple.hpp"

#include <array>
#include <span>
#include <string_view>

namespace neu {

enum class ConnectorKind {
  Negation,
  Conjunction,
  WeakDisjunction,
  StrongDisjunction,
  Implication,
  Equivalence,
  Sheffer,
  Peirce,
};

inline constexpr std::array<ConnectorKind, 8> kAllConnectors = {
    ConnectorKind::Negation,          ConnectorKind::Conjunction,
    ConnectorKind::WeakDisjunction,   ConnectorKind::StrongDisjunction,
    ConnectorKind::Implication,       ConnectorKind::Equivalence,
    ConnectorKind::Sheffer,           ConnectorKind::Peirce,
};

inline constexpr std::array<ConnectorKind, 7> kBinaryConnectors = {
    ConnectorKind::Conjunction,       ConnectorKind::WeakDisjunction,
    ConnectorKind::StrongDisjunction, ConnectorKind::Implication,
    ConnectorKind::Equivalence,       ConnectorKind::Sheffer,
    ConnectorKind::Peirce,
};

constexpr bool is_unary(ConnectorKind kind) noexcept
{
  return kind == ConnectorKind::Negation;
}

std::string_view connector_name(ConnectorKind kind) noexcept;

namespace kernel {

// Scalar kernels on [0,1]. Each result is clamped to [0,1].
double negation(double x) noexcept;
double conjunction(double x, double y) noexcept;
double weak_disjunction(double x, double y) noexcept;
double strong_disjunction(double x, double y) noexcept;
double implication(double x, double y) noexcept;
double equivalence(double x, double y) noexcept;
double sheffer(double x, double y) noexcept;
double peirce(double x, double y) noexcept;

}  // namespace kernel

/// Scalar kernel of `kind`; `y` is ignored for Negation.
double eval_kernel(ConnectorKind kind, double x, double y = 0.0) noexcept;

/// Applies the kernel to (t,t), (i,i), (f,f) without renormalizing.
RawTriple apply_raw(ConnectorKind kind, const Triple& a, const Triple& b) noexcept;

Triple negate(const Triple& a) noexcept;

/// Componentwise kernel then W-renormalization. `kind` must be binary;
/// Negation throws std::invalid_argument.
Triple apply_binary(ConnectorKind kind, const Triple& a, const Triple& b);

/// Folds the kernel componentwise over `props` and renormalizes once.
/// Only Conjunction, WeakDisjunction and StrongDisjunction are accepted.
/// Throws Error(EmptyInput) for an empty span.
Triple apply_nary(ConnectorKind kind, std::span<const Triple> props);

/// The equivalence truth value E(p, q) for a fixed q is the parabola
/// e_q(p) = a p^2 + b p + c; its vertex locates the p maximizing t(P <-> Q).
struct ParabolaAnalysis {
  double q = 0.0;
  double coeff_a = 0.0;
  double coeff_b = 0.0;
  double coeff_c = 0.0;
  double p_max_raw = 0.0;
  double p_max_clamped = 0.0;

  double value(double p) const noexcept { return (coeff_a * p + coeff_b) * p + coeff_c; }
  double max_value() const noexcept { return value(p_max_clamped); }
};

/// Throws Error(DegenerateQ) unless 0 < q < 1.
ParabolaAnalysis parabola_analysis(double q);

}  // namespace neu
