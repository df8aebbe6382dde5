#include "minorb/embed.hpp"

#include <sstream>
#include <stdexcept>

namespace minorb {

namespace {

// symmetric bilinear form of two target roots, normalized so (a, a) = 2
long root_form(const RootSystem& rs, const Root& a, const Root& b) {
    long v = 0;
    const auto& cm = rs.cartan();
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            v += a.coeffs[i] * cm[i][j] * b.coeffs[j];
    return v;
}

} // namespace

LieEmbedding LieEmbedding::subsystem(const ChevalleyAlgebra& source,
                                     const ChevalleyAlgebra& target,
                                     const std::vector<Root>& node_images, bool verify) {
    const int l = source.rank();
    if (static_cast<int>(node_images.size()) != l)
        throw std::invalid_argument("need one target root per source node");
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            const long got = root_form(target.roots(), node_images[i], node_images[j]);
            const long want = source.roots().cartan()[i][j];
            if (got != want) {
                std::ostringstream os;
                os << "node images do not reproduce the source Cartan matrix: "
                   << "(" << i + 1 << "," << j + 1 << ") pairs to " << got << ", expected "
                   << want;
                throw std::invalid_argument(os.str());
            }
        }

    LieEmbedding e;
    e.src_ = &source;
    e.tgt_ = &target;
    for (int i = 0; i < l; ++i) {
        e.img_e_.push_back(target.root_vector(node_images[i]));
        e.img_f_.push_back(target.root_vector(-node_images[i]));
        e.img_h_.push_back(target.coroot(node_images[i]));
    }
    e.generate_from_generators(verify);
    return e;
}

void LieEmbedding::generate_from_generators(bool verify) {
    const ChevalleyAlgebra& s = *src_;
    const ChevalleyAlgebra& t = *tgt_;
    const int l = s.rank();
    const auto& pos = s.roots().positive_roots();

    std::vector<LieElement> img(s.dim(), t.zero());
    for (int i = 0; i < l; ++i) {
        const std::size_t si = s.roots().simple_index(i + 1);
        img[s.cartan_index(i + 1)] = img_h_[static_cast<std::size_t>(i)];
        img[s.positive_index(si)] = img_e_[static_cast<std::size_t>(i)];
        img[s.negative_index(si)] = img_f_[static_cast<std::size_t>(i)];
    }
    // breadth-first along the source positive-root order
    for (std::size_t p = 0; p < s.num_positive(); ++p) {
        const Root& b = pos[p];
        if (b.height() == 1) continue;
        bool done = false;
        for (int i = 0; i < l && !done; ++i) {
            Root rest = b;
            rest.coeffs[i] -= 1;
            auto q = s.roots().positive_index(rest);
            if (!q) continue;
            const int n = s.structure_constant(s.roots().simple_root(i + 1), rest);
            Rat inv(n); // n = +-1
            inv = 1 / inv;
            const std::size_t si = s.roots().simple_index(i + 1);
            img[s.positive_index(p)] =
                t.bracket(img[s.positive_index(si)], img[s.positive_index(*q)]).scaled(inv);
            img[s.negative_index(p)] =
                t.bracket(img[s.negative_index(si)], img[s.negative_index(*q)]).scaled(-inv);
            done = true;
        }
        if (!done || img[s.positive_index(p)].is_zero() || img[s.negative_index(p)].is_zero())
            throw std::invalid_argument("generator images are inconsistent: no image for x" +
                                        b.str());
    }

    map_ = RatMatrix(t.dim(), s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j)
        for (std::size_t i = 0; i < t.dim(); ++i) map_.at(i, j) = img[j].c[i];

    // Cartan coordinates of phi(h_i); a non-Cartan component would mean the
    // generator images were not a subsystem at all.
    coroot_coords_.clear();
    for (int i = 0; i < l; ++i) {
        const LieElement& h = img[s.cartan_index(i + 1)];
        for (std::size_t k = static_cast<std::size_t>(t.rank()); k < t.dim(); ++k)
            if (h.c[k] != 0)
                throw std::invalid_argument("image of h" + std::to_string(i + 1) +
                                            " is not in the target Cartan");
        coroot_coords_.push_back(RatVec(h.c.begin(), h.c.begin() + t.rank()));
    }

    if (verify) {
        std::size_t a = 0, b = 0;
        if (!verify_homomorphism(&a, &b))
            throw std::invalid_argument("embedding fails the homomorphism check on (" +
                                        s.describe_basis(a) + ", " + s.describe_basis(b) + ")");
        if (!injective()) throw std::invalid_argument("embedding full map is not injective");
    }
}

LieEmbedding LieEmbedding::compose(const LieEmbedding& outer, const LieEmbedding& inner) {
    if (&inner.target() != &outer.source())
        throw std::invalid_argument("compose: inner target must be outer source");
    LieEmbedding e;
    e.src_ = inner.src_;
    e.tgt_ = outer.tgt_;
    for (std::size_t i = 0; i < inner.img_e_.size(); ++i) {
        e.img_e_.push_back(outer.apply(inner.img_e_[i]));
        e.img_f_.push_back(outer.apply(inner.img_f_[i]));
        e.img_h_.push_back(outer.apply(inner.img_h_[i]));
    }
    e.generate_from_generators(true);
    return e;
}

LieElement LieEmbedding::apply(const LieElement& x) const {
    if (x.alg != src_) throw std::invalid_argument("apply: element not in source algebra");
    return tgt_->from_coeffs(map_.apply(x.c));
}

Weight LieEmbedding::restrict_weight(const Weight& target_weight) const {
    if (static_cast<int>(target_weight.pairings.size()) != tgt_->rank())
        throw std::invalid_argument("weight rank mismatch");
    Weight w;
    for (const RatVec& d : coroot_coords_) {
        Rat acc(0);
        for (std::size_t k = 0; k < d.size(); ++k) acc += d[k] * target_weight.pairings[k];
        if (acc.get_den() != 1 || !acc.get_num().fits_slong_p())
            throw std::logic_error("non-integral weight restriction");
        w.pairings.push_back(acc.get_num().get_si());
    }
    return w;
}

Weight LieEmbedding::restrict_root(const Root& target_root) const {
    return restrict_weight(tgt_->roots().root_weight(target_root));
}

bool LieEmbedding::verify_homomorphism(std::size_t* bad_a, std::size_t* bad_b) const {
    for (std::size_t a = 0; a < src_->dim(); ++a) {
        const LieElement ia = tgt_->from_coeffs(map_.col(a));
        for (std::size_t b = a + 1; b < src_->dim(); ++b) {
            const LieElement ib = tgt_->from_coeffs(map_.col(b));
            const LieElement lhs = tgt_->bracket(ia, ib);
            const LieElement rhs = apply(src_->bracket(src_->basis(a), src_->basis(b)));
            if (!(lhs == rhs)) {
                if (bad_a) *bad_a = a;
                if (bad_b) *bad_b = b;
                return false;
            }
        }
    }
    return true;
}

bool LieEmbedding::injective() const { return rank(map_) == src_->dim(); }

LieEmbedding LieEmbedding::corrupted(int node) const {
    LieEmbedding e;
    e.src_ = src_;
    e.tgt_ = tgt_;
    e.img_e_ = img_e_;
    e.img_f_ = img_f_;
    e.img_h_ = img_h_;
    e.img_e_[static_cast<std::size_t>(node - 1)] =
        e.img_e_[static_cast<std::size_t>(node - 1)].scaled(Rat(-1));
    e.generate_from_generators(false);
    return e;
}

LieEmbedding block_embedding_sl(const ChevalleyAlgebra& source_sl_k,
                                const ChevalleyAlgebra& target_sl_n) {
    if (source_sl_k.roots().type().family != Family::A ||
        target_sl_n.roots().type().family != Family::A)
        throw std::invalid_argument("block_embedding_sl needs type A on both sides");
    if (source_sl_k.rank() >= target_sl_n.rank())
        throw std::invalid_argument("block_embedding_sl needs a smaller source");
    std::vector<Root> nodes;
    for (int i = 1; i <= source_sl_k.rank(); ++i)
        nodes.push_back(target_sl_n.roots().simple_root(i));
    return LieEmbedding::subsystem(source_sl_k, target_sl_n, nodes);
}

std::string WeightRestriction::str() const {
    std::ostringstream os;
    for (std::size_t j = 0; j < per_target_simple.size(); ++j) {
        if (j) os << " ";
        os << "a" << j + 1 << "->" << per_target_simple[j].str();
    }
    return os.str();
}

WeightRestriction induced_restriction(const LieEmbedding& e) {
    WeightRestriction r;
    for (int j = 1; j <= e.target().rank(); ++j)
        r.per_target_simple.push_back(e.restrict_root(e.target().roots().simple_root(j)));
    return r;
}

std::string FeasibilityReport::verdict_str() const {
    switch (verdict) {
    case FeasibilityVerdict::FeasibleCartanMap: return "feasible-cartan-map";
    case FeasibilityVerdict::InfeasibleIntegrality: return "infeasible-integrality";
    case FeasibilityVerdict::InfeasibleInjectivity: return "infeasible-injectivity";
    }
    return "?";
}

FeasibilityReport restriction_feasibility(DynkinType source, const RootSystem& target,
                                          const std::vector<std::vector<Rat>>& prescription) {
    const int ls = source.rank;
    const int lt = target.rank();
    if (static_cast<int>(prescription.size()) != lt)
        throw std::invalid_argument("prescription must cover every target simple root");
    const auto a_src = cartan_matrix(source);

    // pairings of the prescribed weights with the source coroots
    RatMatrix lam(lt, ls);
    for (int j = 0; j < lt; ++j) {
        if (static_cast<int>(prescription[j].size()) != ls)
            throw std::invalid_argument("prescription entry rank mismatch");
        for (int i = 0; i < ls; ++i) {
            Rat acc(0);
            for (int k = 0; k < ls; ++k) acc += Rat(a_src[i][k]) * prescription[j][k];
            lam.at(j, i) = acc;
        }
    }

    if (rank(lam) != static_cast<std::size_t>(ls))
        return {FeasibilityVerdict::InfeasibleInjectivity,
                "prescribed functionals do not separate the source Cartan (rank " +
                    std::to_string(rank(lam)) + " < " + std::to_string(ls) + ")"};

    // every target root must restrict to an integral source weight
    for (const Root& nu : target.positive_roots()) {
        for (int i = 0; i < ls; ++i) {
            Rat acc(0);
            for (int j = 0; j < lt; ++j) acc += Rat(nu.coeffs[j]) * lam.at(j, i);
            if (acc.get_den() != 1)
                return {FeasibilityVerdict::InfeasibleIntegrality,
                        "target root " + nu.str() + " restricts with pairing " + to_string(acc) +
                            " on source coroot " + std::to_string(i + 1)};
        }
    }

    // every target weight must restrict integrally, i.e. the candidate Cartan
    // map must send source coroots into the target coroot lattice
    RatMatrix a_tgt(lt, lt);
    for (int i = 0; i < lt; ++i)
        for (int j = 0; j < lt; ++j) a_tgt.at(i, j) = target.cartan()[i][j];
    for (int i = 0; i < ls; ++i) {
        auto d = solve_linear(a_tgt, lam.col(i));
        if (!d) throw std::logic_error("target Cartan matrix is singular");
        for (int j = 0; j < lt; ++j) {
            if ((*d)[j].get_den() != 1) {
                Rat p(0); // pairing of the restricted fundamental weight w_j
                // <phi*(w_j), alpha_i^vee> = w_j(phi(h_i)) = d_j
                p = (*d)[j];
                return {FeasibilityVerdict::InfeasibleIntegrality,
                        "fundamental weight w" + std::to_string(j + 1) +
                            " restricts with pairing " + to_string(p) + " on source coroot " +
                            std::to_string(i + 1)};
            }
        }
    }
    return {FeasibilityVerdict::FeasibleCartanMap, ""};
}

} // namespace minorb
