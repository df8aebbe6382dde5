#pragma once

// Abelian nilradicals of maximal parabolics and decomposition into
// irreducibles under an embedded subalgebra. The decomposition routine works
// on any module given by explicit generator matrices (the coordinate models
// reuse it); highest-weight vectors are joint kernels of the raising
// operators, summands grow by repeated lowering, and every summand dimension
// is certified against the Weyl dimension formula.

#include "minorb/embed.hpp"

#include <optional>
#include <vector>

namespace minorb {

struct GradedSubspace {
    const ChevalleyAlgebra* alg = nullptr;
    int node = 0;
    std::vector<std::size_t> members; // positive-root indices, canonical order
    Subspace span;                    // in full algebra coordinates

    std::size_t dim() const { return members.size(); }
    const Root& member_root(std::size_t k) const;

    LieElement lift(const RatVec& member_coords) const;
    // member coordinates of x; throws when x lies outside the subspace
    RatVec coords_of(const LieElement& x) const;
    bool contains(const LieElement& x) const;
};

// Nilradical of the maximal parabolic at `node`; requires the node
// coefficient of the highest root to be 1, which makes it abelian.
GradedSubspace abelian_nilradical(const ChevalleyAlgebra& alg, int node);

bool is_abelian(const GradedSubspace& s);

// A source-module structure on Q^dim given by generator matrices. The
// Cartan actions must be diagonal with integer entries (true for all the
// gradings used here); this pins the weight of every coordinate.
struct ModuleAction {
    std::size_t dim = 0;
    std::vector<RatMatrix> act_e, act_f, act_h; // one per source node
};

struct ModuleSummand {
    RatVec hw;     // module coordinates
    Weight weight; // source pairings
    Int dim;
    std::vector<RatVec> basis;           // first entry is hw
    std::vector<std::vector<int>> words; // lowering word per basis vector
    bool pure_coordinate_hw = false;     // hw is a single module coordinate
};

std::vector<ModuleSummand> decompose_module(const ModuleAction& act, const RootSystem& src_rs);

struct Summand {
    LieElement hw_vector;
    std::optional<Root> hw_root; // set when the hw vector is a pure root vector
    Weight hw_weight;            // source coordinates
    Int dim;
    std::vector<LieElement> basis;
    std::vector<std::vector<int>> words;
};

struct Decomposition {
    GradedSubspace space;
    const LieEmbedding* emb = nullptr;
    std::vector<Summand> summands;
    ModuleAction action; // generator action in member coordinates
};

// Irreducible decomposition of s under the image of e; checks invariance,
// independence, and that the summand dimensions sum to dim s.
Decomposition decompose(const GradedSubspace& s, const LieEmbedding& e);

// unique components of x, one per summand; throws when x is outside
std::vector<LieElement> summand_projection(const Decomposition& d, const LieElement& x);

// roots of the hw vectors; throws when some hw vector is not a root vector
std::vector<Root> hw_roots(const Decomposition& d);

} // namespace minorb
