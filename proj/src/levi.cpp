#include "minorb/levi.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace minorb {

namespace {

// incremental row-echelon accumulator for independence tests
struct SpanBuilder {
    std::vector<RatVec> rows;        // echelon rows, pivot normalized to 1
    std::vector<std::size_t> pivots; // pivot column of each row

    // returns true when v was independent (and is now part of the span)
    bool add(RatVec v) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (v[pivots[r]] != 0) {
                const Rat f = v[pivots[r]];
                for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
            }
        }
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        if (p == v.size()) return false;
        const Rat inv = Rat(1) / v[p];
        for (std::size_t j = p; j < v.size(); ++j) v[j] *= inv;
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }

    std::size_t dim() const { return rows.size(); }
};

} // namespace

const Root& GradedSubspace::member_root(std::size_t k) const {
    return alg->roots().positive_roots()[members[k]];
}

LieElement GradedSubspace::lift(const RatVec& member_coords) const {
    if (member_coords.size() != members.size())
        throw std::invalid_argument("member coordinate length mismatch");
    LieElement x = alg->zero();
    for (std::size_t k = 0; k < members.size(); ++k)
        x.c[alg->positive_index(members[k])] = member_coords[k];
    return x;
}

RatVec GradedSubspace::coords_of(const LieElement& x) const {
    if (x.alg != alg) throw std::invalid_argument("algebra mismatch");
    RatVec v(members.size(), Rat(0));
    std::vector<bool> is_member(x.c.size(), false);
    for (std::size_t k = 0; k < members.size(); ++k) {
        const std::size_t idx = alg->positive_index(members[k]);
        v[k] = x.c[idx];
        is_member[idx] = true;
    }
    for (std::size_t i = 0; i < x.c.size(); ++i)
        if (!is_member[i] && x.c[i] != 0)
            throw std::invalid_argument("element lies outside the graded subspace");
    return v;
}

bool GradedSubspace::contains(const LieElement& x) const {
    if (x.alg != alg) return false;
    std::vector<bool> is_member(x.c.size(), false);
    for (std::size_t k = 0; k < members.size(); ++k)
        is_member[alg->positive_index(members[k])] = true;
    for (std::size_t i = 0; i < x.c.size(); ++i)
        if (!is_member[i] && x.c[i] != 0) return false;
    return true;
}

GradedSubspace abelian_nilradical(const ChevalleyAlgebra& alg, int node) {
    const Root& theta = alg.roots().highest_root();
    if (theta.coeffs[node - 1] != 1) {
        std::ostringstream os;
        os << "node " << node << " has highest-root coefficient " << theta.coeffs[node - 1]
           << "; the parabolic nilradical is not abelian (unsupported)";
        throw std::invalid_argument(os.str());
    }
    GradedSubspace s;
    s.alg = &alg;
    s.node = node;
    const auto& pos = alg.roots().positive_roots();
    for (std::size_t p = 0; p < pos.size(); ++p)
        if (pos[p].coeffs[node - 1] >= 1) s.members.push_back(p);
    std::vector<RatVec> rows;
    for (std::size_t m : s.members) {
        RatVec r(alg.dim(), Rat(0));
        r[alg.positive_index(m)] = 1;
        rows.push_back(std::move(r));
    }
    s.span = Subspace::span_of_rows(RatMatrix::from_rows(rows));
    return s;
}

bool is_abelian(const GradedSubspace& s) {
    for (std::size_t a = 0; a < s.members.size(); ++a)
        for (std::size_t b = a + 1; b < s.members.size(); ++b) {
            const LieElement br =
                s.alg->bracket(s.alg->basis(s.alg->positive_index(s.members[a])),
                               s.alg->basis(s.alg->positive_index(s.members[b])));
            if (!br.is_zero()) return false;
        }
    return true;
}

std::vector<ModuleSummand> decompose_module(const ModuleAction& act, const RootSystem& src_rs) {
    const std::size_t d = act.dim;
    const int l = src_rs.rank();

    // Cartan actions must be diagonal: every coordinate then carries a weight.
    std::vector<std::vector<long>> coord_weight(d, std::vector<long>(l, 0));
    for (int i = 0; i < l; ++i) {
        const RatMatrix& h = act.act_h[static_cast<std::size_t>(i)];
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                if (r != c && h.at(r, c) != 0)
                    throw std::logic_error("decompose_module: Cartan action is not diagonal");
                if (r == c) {
                    const Rat& v = h.at(r, c);
                    if (v.get_den() != 1 || !v.get_num().fits_slong_p())
                        throw std::logic_error("decompose_module: non-integer weight");
                    coord_weight[r][static_cast<std::size_t>(i)] = v.get_num().get_si();
                }
            }
    }

    // group coordinates by weight
    std::map<std::vector<long>, std::vector<std::size_t>> blocks;
    for (std::size_t j = 0; j < d; ++j) blocks[coord_weight[j]].push_back(j);

    // highest-weight space per weight block: kernel of all raising operators
    // restricted to the block's coordinate subspace
    std::vector<ModuleSummand> out;
    for (const auto& [w, coords] : blocks) {
        RatMatrix stacked(static_cast<std::size_t>(l) * d, coords.size());
        for (int i = 0; i < l; ++i)
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t cj = 0; cj < coords.size(); ++cj)
                    stacked.at(static_cast<std::size_t>(i) * d + r, cj) =
                        act.act_e[static_cast<std::size_t>(i)].at(r, coords[cj]);
        Subspace ker = kernel_basis(stacked);
        if (ker.dim() == 0) continue;

        // prefer coordinate lines inside the hw space when they exist
        std::vector<RatVec> hw_vectors;
        std::vector<bool> pure;
        std::vector<std::size_t> pure_coords;
        for (std::size_t cj = 0; cj < coords.size(); ++cj) {
            RatVec unit(coords.size(), Rat(0));
            unit[cj] = 1;
            if (ker.contains(unit)) pure_coords.push_back(cj);
        }
        if (pure_coords.size() == ker.dim()) {
            for (std::size_t cj : pure_coords) {
                RatVec v(d, Rat(0));
                v[coords[cj]] = 1;
                hw_vectors.push_back(std::move(v));
                pure.push_back(true);
            }
        } else {
            for (std::size_t r = 0; r < ker.dim(); ++r) {
                RatVec v(d, Rat(0));
                for (std::size_t cj = 0; cj < coords.size(); ++cj)
                    v[coords[cj]] = ker.basis().at(r, cj);
                std::size_t nnz = 0;
                for (const Rat& q : v)
                    if (q != 0) ++nnz;
                hw_vectors.push_back(std::move(v));
                pure.push_back(nnz == 1);
            }
        }

        Weight weight{w};
        if (!weight.dominant())
            throw std::logic_error("decompose_module: non-dominant highest weight " +
                                   weight.str());
        const Int want = weyl_dim(src_rs, weight);

        for (std::size_t hv = 0; hv < hw_vectors.size(); ++hv) {
            ModuleSummand s;
            s.hw = hw_vectors[hv];
            s.weight = weight;
            s.dim = want;
            s.pure_coordinate_hw = pure[hv];
            SpanBuilder span;
            span.add(s.hw);
            s.basis.push_back(s.hw);
            s.words.push_back({});
            std::size_t head = 0;
            while (head < s.basis.size()) {
                for (int i = 0; i < l; ++i) {
                    RatVec img = act.act_f[static_cast<std::size_t>(i)].apply(s.basis[head]);
                    if (is_zero_vec(img)) continue;
                    if (span.add(img)) {
                        s.basis.push_back(img);
                        auto word = s.words[head];
                        word.push_back(i + 1);
                        s.words.push_back(std::move(word));
                        if (Int(static_cast<long>(s.basis.size())) > want)
                            throw std::logic_error(
                                "decompose_module: summand exceeds its Weyl dimension " +
                                want.get_str());
                    }
                }
                ++head;
            }
            if (Int(static_cast<long>(s.basis.size())) != want)
                throw std::logic_error("decompose_module: summand of weight " + weight.str() +
                                       " has dimension " + std::to_string(s.basis.size()) +
                                       ", Weyl dimension formula gives " + want.get_str());
            out.push_back(std::move(s));
        }
    }

    // cross-summand independence and completeness
    SpanBuilder all;
    std::size_t total = 0;
    for (const auto& s : out)
        for (const auto& v : s.basis) {
            if (!all.add(v))
                throw std::logic_error("decompose_module: summand bases are not independent");
            ++total;
        }
    if (total != d)
        throw std::logic_error("decompose_module: summands span dimension " +
                               std::to_string(total) + " of " + std::to_string(d));
    return out;
}

namespace {

ModuleAction restricted_action(const GradedSubspace& s, const LieEmbedding& e) {
    const ChevalleyAlgebra& g = *s.alg;
    const std::size_t d = s.dim();
    const int l = e.source().rank();
    ModuleAction act;
    act.dim = d;
    auto build = [&](const LieElement& gen) {
        RatMatrix m(d, d);
        for (std::size_t k = 0; k < d; ++k) {
            const LieElement img =
                g.bracket(gen, g.basis(g.positive_index(s.members[k])));
            RatVec coords = s.coords_of(img); // throws when s is not invariant
            for (std::size_t r = 0; r < d; ++r) m.at(r, k) = coords[r];
        }
        return m;
    };
    for (int i = 1; i <= l; ++i) {
        act.act_e.push_back(build(e.gen_e(i)));
        act.act_f.push_back(build(e.gen_f(i)));
        act.act_h.push_back(build(e.gen_h(i)));
    }
    return act;
}

} // namespace

Decomposition decompose(const GradedSubspace& s, const LieEmbedding& e) {
    if (s.alg != &e.target())
        throw std::invalid_argument("decompose: embedding target must be the ambient algebra");
    Decomposition d;
    d.space = s;
    d.emb = &e;
    ModuleAction act;
    try {
        act = restricted_action(s, e);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(
            "decompose: subspace is not invariant under the embedded algebra");
    }
    auto summands = decompose_module(act, e.source().roots());
    for (auto& ms : summands) {
        Summand sum;
        sum.hw_vector = s.lift(ms.hw);
        if (ms.pure_coordinate_hw) {
            for (std::size_t k = 0; k < s.dim(); ++k)
                if (ms.hw[k] != 0) sum.hw_root = s.member_root(k);
        }
        sum.hw_weight = ms.weight;
        sum.dim = ms.dim;
        for (const auto& v : ms.basis) sum.basis.push_back(s.lift(v));
        sum.words = ms.words;
        d.summands.push_back(std::move(sum));
    }
    d.action = std::move(act);
    return d;
}

std::vector<LieElement> summand_projection(const Decomposition& d, const LieElement& x) {
    const RatVec xc = d.space.coords_of(x); // throws when outside
    // columns: all summand basis vectors in member coordinates
    const std::size_t dm = d.space.dim();
    RatMatrix cols(dm, dm);
    std::size_t c = 0;
    for (const auto& s : d.summands)
        for (const auto& v : s.basis) {
            const RatVec mc = d.space.coords_of(v);
            for (std::size_t r = 0; r < dm; ++r) cols.at(r, c) = mc[r];
            ++c;
        }
    auto sol = solve_linear(cols, xc);
    if (!sol) throw std::logic_error("summand_projection: inconsistent system");
    std::vector<LieElement> parts;
    c = 0;
    for (const auto& s : d.summands) {
        LieElement part = d.space.alg->zero();
        for (const auto& v : s.basis) {
            part = part + v.scaled((*sol)[c]);
            ++c;
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

std::vector<Root> hw_roots(const Decomposition& d) {
    std::vector<Root> roots;
    for (const auto& s : d.summands) {
        if (!s.hw_root)
            throw std::logic_error("hw_roots: a highest-weight vector is not a pure root vector");
        roots.push_back(*s.hw_root);
    }
    return roots;
}

} // namespace minorb
