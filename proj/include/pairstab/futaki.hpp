#pragma once

// Futaki characters of a pair at torus level. The torus part of
// Aut(v,w) = G_[v] n G_[w] consists of the u whose pairing is constant on
// supp(v) and on supp(w); on those u the classical character is
// F(u) = <chi_w, u> - <chi_v, u>.

#include <pairstab/pairs.hpp>

namespace pairstab {

struct StabilizerSubtorus {
  std::vector<OnePS> basis;  // primitive integer generators

  std::size_t rank() const { return basis.size(); }
};

StabilizerSubtorus stabilizer_subtorus(const Pair& p);

/// True iff u is admissible and constant on both supports.
bool in_stabilizer(const Pair& p, const OnePS& u);

Integer futaki_classical(const Pair& p, const OnePS& u);

enum class AffineSpans { Equal, Disjoint };

/// Compares the parallel affine spans of supp(v) and supp(w) modulo the
/// constraint directions. Equal means the Futaki character vanishes.
AffineSpans affine_span_test(const Pair& p);

}  // namespace pairstab
