#pragma once

// Minimal-orbit machinery: the (ad x)^2 membership oracle, orbit and
// suborbit dimensions as adjoint ranks, stabilizer subalgebras, and
// conjugation by exponentials of nilpotent elements. Everything is a rank or
// kernel computation over exact rationals.

#include "minorb/embed.hpp"

#include <vector>

namespace minorb {

// x lies in the closure of the minimal nilpotent orbit iff x = 0 or the
// column space of (ad x)^2 is contained in the line through x.
bool min_orbit_member(const ChevalleyAlgebra& alg, const LieElement& x);

// dim Ad(G) x = rank ad x
std::size_t orbit_dim(const ChevalleyAlgebra& alg, const LieElement& x);

// rank of y -> [phi(y), x] over the source algebra
std::size_t suborbit_dim(const LieEmbedding& e, const LieElement& x);

// kernel of y -> [phi(y), x], as a subspace of the source coordinate space
Subspace stabilizer_subalgebra(const LieEmbedding& e, const LieElement& x);

// exp(ad y_1) exp(ad y_2) ... applied to x, left to right
LieElement conjugate_by_exp(const ChevalleyAlgebra& alg, const std::vector<LieElement>& ys,
                            const LieElement& x);

} // namespace minorb
