#pragma once

#include <cstdint>

#include "germ/ideal.hpp"

namespace germ {

/// Ideal-theoretic operations in the local ring O_{C^n,0}. Inputs may be in
/// any order; results are returned in LocalAntiDegRevLex.

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

/// Keeps the standard-basis elements free of the variables in `mask` and
/// drops those variables. The ideal's order must be a Block order whose
/// global block contains `mask`; throws UsageError otherwise.
Ideal eliminate(const Ideal& ideal, std::uint32_t mask);

/// I ∩ J via t*I + (1-t)*J in an extra variable t, with t in a global block
/// and the ambient variables local, then elimination of t.
Ideal intersection(const Ideal& a, const Ideal& b);

/// (I : h) = { p : p*h ∈ I }, computed as (I ∩ (h)) / h with the division
/// carried out in the local ring.
Ideal quotient_by_element(const Ideal& ideal, const Polynomial& h);

/// (I : J) = ∩ (I : j) over the generators j of J.
Ideal quotient(const Ideal& ideal, const Ideal& by);

/// (I : h^∞) = (I + (1 - t*h)) ∩ O, with t in a global block.
Ideal saturate_by_element(const Ideal& ideal, const Polynomial& h);

}  // namespace germ
