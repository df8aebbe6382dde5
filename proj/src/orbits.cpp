#include "minorb/orbits.hpp"

#include <stdexcept>

namespace minorb {

bool min_orbit_member(const ChevalleyAlgebra& alg, const LieElement& x) {
    if (x.alg != &alg) throw std::invalid_argument("algebra mismatch");
    if (x.is_zero()) return true;
    const RatMatrix ad = alg.ad_matrix(x);
    const RatMatrix sq = ad * ad;
    // every column must be proportional to x
    std::size_t anchor = 0;
    while (x.c[anchor] == 0) ++anchor;
    for (std::size_t j = 0; j < sq.cols(); ++j) {
        const Rat f = sq.at(anchor, j) / x.c[anchor];
        for (std::size_t i = 0; i < sq.rows(); ++i)
            if (sq.at(i, j) != f * x.c[i]) return false;
    }
    return true;
}

std::size_t orbit_dim(const ChevalleyAlgebra& alg, const LieElement& x) {
    if (x.alg != &alg) throw std::invalid_argument("algebra mismatch");
    return rank(alg.ad_matrix(x));
}

namespace {

// target dim x source dim matrix of y -> [phi(y), x]
RatMatrix action_map(const LieEmbedding& e, const LieElement& x) {
    if (x.alg != &e.target()) throw std::invalid_argument("element not in embedding target");
    const ChevalleyAlgebra& t = e.target();
    const ChevalleyAlgebra& s = e.source();
    RatMatrix m(t.dim(), s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) {
        const LieElement img = t.from_coeffs(e.full_map().col(j));
        const LieElement br = t.bracket(img, x);
        for (std::size_t i = 0; i < t.dim(); ++i) m.at(i, j) = br.c[i];
    }
    return m;
}

} // namespace

std::size_t suborbit_dim(const LieEmbedding& e, const LieElement& x) {
    return rank(action_map(e, x));
}

Subspace stabilizer_subalgebra(const LieEmbedding& e, const LieElement& x) {
    return kernel_basis(action_map(e, x));
}

LieElement conjugate_by_exp(const ChevalleyAlgebra& alg, const std::vector<LieElement>& ys,
                            const LieElement& x) {
    if (x.alg != &alg) throw std::invalid_argument("algebra mismatch");
    // right-to-left application gives exp(ad y_1) ... exp(ad y_k) x
    LieElement v = x;
    for (auto it = ys.rbegin(); it != ys.rend(); ++it) v = alg.exp_ad_apply(*it, v);
    return v;
}

} // namespace minorb
