#pragma once

// Simply-laced root systems (A, D, E) in Bourbaki labeling. Roots are stored
// exclusively as integer coefficient vectors over the simple roots; the
// canonical order (height, then lexicographic) fixes every downstream sign
// and basis choice.

#include "minorb/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace minorb {

enum class Family { A, D, E };

struct DynkinType {
    Family family;
    int rank;

    std::string name() const;
};

struct Root {
    std::vector<int> coeffs; // over simple roots 1..rank

    int height() const;
    Root operator-() const;
    bool operator==(const Root& o) const = default;
    auto operator<=>(const Root& o) const = default;
    std::string str() const;
};

Root operator+(const Root& a, const Root& b);
Root operator-(const Root& a, const Root& b);

// Integral weight as the vector of pairings with the simple coroots.
struct Weight {
    std::vector<long> pairings;

    bool dominant() const;
    bool operator==(const Weight& o) const = default;
    std::string str() const;
};

Weight fundamental_weight(int rank, int node); // node 1-based

class RootSystem {
public:
    static RootSystem build(DynkinType t);

    const DynkinType& type() const { return type_; }
    int rank() const { return type_.rank; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    // positive roots in canonical order (height, then lexicographic)
    const std::vector<Root>& positive_roots() const { return positives_; }
    const Root& highest_root() const;
    const Root& simple_root(int node) const; // node 1-based

    bool is_positive_root(const Root& r) const;
    std::optional<std::size_t> positive_index(const Root& r) const;
    std::size_t simple_index(int node) const; // positive index of alpha_node

    std::vector<Root> roots_with_coefficient(int node, int c) const;

    // <r, alpha_node^vee> via the Cartan matrix
    long coroot_pairing(const Root& r, int node) const;
    // pairing vector of a root seen as a weight
    Weight root_weight(const Root& r) const;

    std::size_t algebra_dim() const { return positives_.size() * 2 + type_.rank; }

    std::string dump_json() const; // debug dump: array of coefficient vectors

private:
    DynkinType type_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Root> positives_;
    std::map<std::vector<int>, std::size_t> index_;
};

std::vector<std::vector<int>> cartan_matrix(DynkinType t);

// Dimension of the irreducible module of highest weight lam, by the product
// formula over positive roots; exact rationals, integrality asserted.
Int weyl_dim(const RootSystem& rs, const Weight& lam);

} // namespace minorb
