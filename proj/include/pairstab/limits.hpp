#pragma once

// Toric degenerations: which faces of a support can be reached as the
// support of a renormalized limit t^{-c} lambda^u(t) . f as t -> 0, and
// when an equivariant rational map extends over a toric variety.

#include <pairstab/polytope.hpp>

namespace pairstab {

/// B is not reachable as a limit support.
class NotALimitSupport : public Error {
 public:
  using Error::Error;
};

/// conv(A \ B) within conv({0} u B) modulo ctx. Requires B a nonempty proper
/// subset of A.
bool extension_criterion(const PointSet& a, const PointSet& b, const ContainmentContext& ctx = {});

/// Admissible u, constant (= c) on B and strictly larger than c on A \ B, so
/// that the limit along u has support exactly B. Among all such u with
/// <u, a> - c >= 1 on A \ B, returns one of least l1 norm, made primitive.
OnePS find_degeneration(const PointSet& a, const PointSet& b, const ContainmentContext& ctx = {});

/// Points of A where <u, .> attains its minimum.
PointSet limit_support(const PointSet& a, const OnePS& u);

}  // namespace pairstab
