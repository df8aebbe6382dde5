#pragma once

// Chevalley basis of the simple Lie algebra attached to a root system:
// integer structure constants N_{a,b} = +-1 (simply laced), signs fixed by
// the extraspecial-pair rule over the canonical root order. Also the exact
// exponential of nilpotent adjoints and bracket-generated matrix models,
// including the antidiagonal orthogonal realization of D_n.

#include "minorb/ratmat.hpp"
#include "minorb/roots.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace minorb {

class ChevalleyAlgebra;

// Coefficient vector over the algebra basis h_1..h_l, x_beta (positives in
// canonical order, then negatives).
struct LieElement {
    const ChevalleyAlgebra* alg = nullptr;
    RatVec c;

    bool is_zero() const { return is_zero_vec(c); }
    LieElement operator+(const LieElement& o) const;
    LieElement operator-(const LieElement& o) const;
    LieElement scaled(const Rat& f) const;
    bool operator==(const LieElement& o) const { return alg == o.alg && c == o.c; }

    // basis indices with nonzero coefficient
    std::vector<std::size_t> support() const;
};

struct JacobiReport {
    bool passed = true;
    std::uint64_t checked = 0;
    std::array<std::size_t, 3> failure{0, 0, 0};
};

class ChevalleyAlgebra {
public:
    static ChevalleyAlgebra build(RootSystem rs);

    const RootSystem& roots() const { return rs_; }
    int rank() const { return rs_.rank(); }
    std::size_t num_positive() const { return m_; }
    std::size_t dim() const { return dim_; }

    // basis layout
    std::size_t cartan_index(int node) const { return static_cast<std::size_t>(node - 1); }
    std::size_t positive_index(std::size_t p) const { return rank() + p; }
    std::size_t negative_index(std::size_t p) const { return rank() + m_ + p; }
    bool is_cartan_index(std::size_t i) const { return i < static_cast<std::size_t>(rank()); }
    // root of a basis element (nullopt for Cartan indices)
    std::optional<Root> basis_root(std::size_t i) const;

    LieElement zero() const;
    LieElement basis(std::size_t i) const;
    LieElement cartan(int node) const;            // h_node
    LieElement root_vector(const Root& r) const;  // x_r, either sign
    LieElement coroot(const Root& r) const;       // h_r as combination of h_i
    LieElement from_coeffs(RatVec c) const;

    LieElement bracket(const LieElement& a, const LieElement& b) const;

    RatMatrix ad_matrix(const LieElement& x) const;

    // exp(ad y) as an exact matrix; y must be ad-nilpotent
    RatMatrix exp_ad(const LieElement& y) const;
    // exp(ad y) applied to a single element (series on the vector)
    LieElement exp_ad_apply(const LieElement& y, const LieElement& x) const;

    // N_{a,b} for signed roots; zero when a+b is not a root
    int structure_constant(const Root& a, const Root& b) const;

    JacobiReport verify_jacobi_exhaustive() const;
    JacobiReport verify_jacobi_sampled(std::uint64_t triples, std::uint64_t seed) const;

    // JSON list of (positive index a, positive index b, N) triples
    std::string dump_structure_constants() const;

    std::string describe_basis(std::size_t i) const;

private:
    RootSystem rs_;
    std::size_t m_ = 0;   // |Phi^+|
    std::size_t dim_ = 0; // rank + 2m
    std::vector<std::vector<int>> npp_; // N on positive pairs, 0 if sum not a root

    struct Term {
        std::size_t idx;
        int coeff;
    };
    // bracket of basis pairs, precomputed sparse
    std::vector<std::vector<std::vector<Term>>> table_;

    int signed_n(bool apos, std::size_t a, bool bpos, std::size_t b) const;
    void build_table();
    void jacobi_triple(std::size_t i, std::size_t j, std::size_t k,
                       std::vector<long>& acc, std::vector<std::size_t>& touched) const;
};

// A representation of the algebra by concrete matrices, generated from
// images of the Chevalley generators by bracketing along the positive roots.
struct MatrixModel {
    const ChevalleyAlgebra* alg = nullptr;
    std::size_t size = 0;
    std::vector<RatMatrix> images; // one per basis index

    RatMatrix map(const LieElement& x) const;

    // checks [img a, img b] = img [a, b] on all basis pairs
    bool verify_homomorphism(std::size_t* bad_a = nullptr, std::size_t* bad_b = nullptr) const;
};

MatrixModel build_matrix_model(const ChevalleyAlgebra& alg, std::size_t size,
                               const std::vector<RatMatrix>& gen_e,
                               const std::vector<RatMatrix>& gen_f);

struct DnMatrixModel {
    MatrixModel model;
    RatMatrix form; // antidiagonal J with J_{i, 2n+1-i} = 1
};

// Explicit isomorphism onto {M : M^T J + J M = 0}; homomorphism property is
// verified on all basis pairs and a failure names the offending pair.
DnMatrixModel dn_matrix_model(const ChevalleyAlgebra& alg);

// Defining representation of type A_{k-1} (size k), used for model actions.
MatrixModel an_matrix_model(const ChevalleyAlgebra& alg);

} // namespace minorb
