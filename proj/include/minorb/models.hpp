#pragma once

// Concrete coordinate models: the wedge-square bivector picture of so_2n with
// the decomposable-and-isotropic membership test, the graded-subspace models
// with calibrated intertwiners, and seeded sampling of special linear group
// elements with exact inverses.

#include "minorb/levi.hpp"

#include <cstdint>
#include <vector>

namespace minorb {

struct Bivector {
    RatMatrix skew;
};

// rank <= 2
bool decomposable(const Bivector& b);

// Gram of the form on the two spanning columns vanishes; precondition
// decomposable(b), rank > 2 throws.
bool isotropic(const Bivector& b, const RatMatrix& form);

// Image of x in wedge^2 C^{2n} through the matrix model: S = M J with
// M = model(x); the inverse of x ^ y -> x (Jy)^T - y (Jx)^T.
Bivector bivector_transport(const DnMatrixModel& dm, const LieElement& x);

struct SpecialLinearSample {
    RatMatrix g;
    RatMatrix inverse;
};

// product of `steps` elementary matrices with entries in {-2..2}; the inverse
// is accumulated alongside, det g = 1 by construction
SpecialLinearSample random_special_linear(std::size_t k, std::uint64_t seed, std::size_t steps);

enum class PartKind { Vector, Covector, Wedge2 };

struct ModelPoint {
    std::vector<RatVec> parts;
};

std::size_t part_dim(PartKind kind, std::size_t k);
RatVec flatten(const ModelPoint& p);
ModelPoint unflatten(const RatVec& flat, const std::vector<PartKind>& parts, std::size_t k);

// (g e1 ^ g e2, g e1) in wedge^2 C^{n-1} + C^{n-1}
ModelPoint iota_d(std::size_t n, const SpecialLinearSample& g);

// (g e1, e4* g^{-1}, e3* g^{-1}, g e2) in C^4 + (C^4)* + (C^4)* + C^4
ModelPoint iota_e6(const SpecialLinearSample& g);

// group action on a model point: vectors by g, covectors by (g^{-1})^T,
// wedges by g S g^T
ModelPoint model_group_action(const SpecialLinearSample& g, const ModelPoint& p,
                              const std::vector<PartKind>& parts);

// algebra action of the source on the flattened model coordinates: vectors by
// Y, covectors by -Y^T, wedges by S -> Y S + S Y^T
ModuleAction model_action(const ChevalleyAlgebra& source, const MatrixModel& defining,
                          const std::vector<PartKind>& parts);

// Equivariant isomorphism from model coordinates onto the graded subspace,
// pinned by map(base_model) = base_lie. Construction is summand-wise: the
// lowering words of each model summand are replayed from the matching
// algebra highest-weight vector, and the multiplicity-space coefficients are
// solved from the calibration equation. Exact equivariance is re-verified on
// every (generator, model basis vector) pair.
struct Intertwiner {
    const Decomposition* decomp = nullptr;
    std::vector<PartKind> parts;
    std::size_t defining_size = 0;
    RatMatrix map; // member coords x model coords

    LieElement apply(const ModelPoint& p) const;
};

Intertwiner calibrated_intertwiner(const Decomposition& d, const ModuleAction& model_act,
                                   const std::vector<PartKind>& parts,
                                   std::size_t defining_size, const ModelPoint& base_model,
                                   const LieElement& base_lie);

} // namespace minorb
