#pragma once

// Lie-algebra embeddings built intrinsically: generators of the source map to
// root vectors / coroots of a closed subsystem of the target, the full linear
// map is generated by bracketing along the source positive roots, and the
// homomorphism property is checked exhaustively on basis pairs. Weight
// statements downstream are always computed as pairings against the embedded
// coroots, never read off a pullback table.

#include "minorb/chevalley.hpp"

#include <string>
#include <vector>

namespace minorb {

class LieEmbedding {
public:
    // node_images[i] = target root that the i-th source simple root maps to;
    // their mutual pairings must reproduce the source Cartan matrix.
    static LieEmbedding subsystem(const ChevalleyAlgebra& source,
                                  const ChevalleyAlgebra& target,
                                  const std::vector<Root>& node_images,
                                  bool verify = true);
    static LieEmbedding compose(const LieEmbedding& outer, const LieEmbedding& inner);

    const ChevalleyAlgebra& source() const { return *src_; }
    const ChevalleyAlgebra& target() const { return *tgt_; }
    const RatMatrix& full_map() const { return map_; } // tgt dim x src dim

    LieElement apply(const LieElement& x) const;

    LieElement gen_e(int node) const {
        return apply(src_->basis(src_->positive_index(src_->roots().simple_index(node))));
    }
    LieElement gen_f(int node) const {
        return apply(src_->basis(src_->negative_index(src_->roots().simple_index(node))));
    }
    LieElement gen_h(int node) const { return apply(src_->cartan(node)); }

    // pairing of a target weight against the embedded source coroots
    Weight restrict_weight(const Weight& target_weight) const;
    Weight restrict_root(const Root& target_root) const;

    // true when [phi a, phi b] = phi [a, b] for every source basis pair
    bool verify_homomorphism(std::size_t* bad_a = nullptr, std::size_t* bad_b = nullptr) const;
    bool injective() const;

    // test hook: flip the sign of one generator image and regenerate
    LieEmbedding corrupted(int node) const;

private:
    LieEmbedding() = default;
    void generate_from_generators(bool verify);

    const ChevalleyAlgebra* src_ = nullptr;
    const ChevalleyAlgebra* tgt_ = nullptr;
    std::vector<LieElement> img_e_, img_f_, img_h_; // per source node
    RatMatrix map_;
    std::vector<RatVec> coroot_coords_; // Cartan coordinates of phi(h_i)
};

// sl_k into sl_n as the upper-left block, i.e. the subsystem on nodes 1..k-1
LieEmbedding block_embedding_sl(const ChevalleyAlgebra& source_sl_k,
                                const ChevalleyAlgebra& target_sl_n);

// Per target simple root, the restricted functional as a source weight.
struct WeightRestriction {
    std::vector<Weight> per_target_simple;

    std::string str() const;
};

WeightRestriction induced_restriction(const LieEmbedding& e);

// Feasibility audit for pullback prescriptions given in source root
// coordinates (rational entries allowed). The prescription determines a
// candidate map on Cartans; we test (a) injectivity and (b) the weight-lattice
// integrality obstruction: every target weight must restrict to an integral
// source weight, equivalently the candidate map must send source coroots into
// the target coroot lattice. A violation is witnessed by a fundamental weight
// (or a target root, for non-integral prescriptions) with fractional pairing.
enum class FeasibilityVerdict { FeasibleCartanMap, InfeasibleIntegrality, InfeasibleInjectivity };

struct FeasibilityReport {
    FeasibilityVerdict verdict;
    std::string witness; // empty when feasible

    std::string verdict_str() const;
};

FeasibilityReport restriction_feasibility(DynkinType source, const RootSystem& target,
                                          const std::vector<std::vector<Rat>>& prescription);

} // namespace minorb
