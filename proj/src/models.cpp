#include "minorb/models.hpp"

#include "minorb/rng.hpp"

#include <sstream>
#include <stdexcept>

namespace minorb {

bool decomposable(const Bivector& b) { return rank(b.skew) <= 2; }

bool isotropic(const Bivector& b, const RatMatrix& form) {
    const std::size_t n = b.skew.rows();
    if (!(b.skew.transpose() + b.skew).is_zero())
        throw std::invalid_argument("isotropic: matrix is not skew");
    // find two independent columns spanning the column space
    std::size_t u = n;
    for (std::size_t j = 0; j < n && u == n; ++j)
        if (!is_zero_vec(b.skew.col(j))) u = j;
    if (u == n) return true; // zero bivector
    RatVec cu = b.skew.col(u);
    std::size_t v = n;
    {
        RatMatrix two(2, n);
        for (std::size_t j = u + 1; j < n && v == n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                two.at(0, k) = cu[k];
                two.at(1, k) = b.skew.col(j)[k];
            }
            if (rank(two) == 2) v = j;
        }
    }
    if (v == n) throw std::invalid_argument("isotropic: skew matrix of rank < 2 is impossible");
    // verify rank really is 2 (precondition)
    if (rank(b.skew) > 2) throw std::invalid_argument("isotropic: bivector is not decomposable");
    RatVec cv = b.skew.col(v);
    const RatVec ju = form.apply(cu), jv = form.apply(cv);
    auto dot = [](const RatVec& a, const RatVec& c) {
        Rat s(0);
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * c[i];
        return s;
    };
    return dot(cu, ju) == 0 && dot(cu, jv) == 0 && dot(cv, jv) == 0;
}

Bivector bivector_transport(const DnMatrixModel& dm, const LieElement& x) {
    const RatMatrix m = dm.model.map(x);
    Bivector b{m * dm.form};
    if (!(b.skew.transpose() + b.skew).is_zero())
        throw std::logic_error("bivector transport produced a non-skew matrix");
    return b;
}

SpecialLinearSample random_special_linear(std::size_t k, std::uint64_t seed, std::size_t steps) {
    if (steps < 1) throw std::invalid_argument("random_special_linear needs steps >= 1");
    SplitMix64 rng(seed);
    RatMatrix g = RatMatrix::identity(k);
    RatMatrix inv = RatMatrix::identity(k);
    for (std::size_t s = 0; s < steps; ++s) {
        const std::size_t i = static_cast<std::size_t>(rng.below(k));
        std::size_t j = static_cast<std::size_t>(rng.below(k - 1));
        if (j >= i) ++j;
        const long c = rng.range(-2, 2);
        RatMatrix el = RatMatrix::identity(k);
        el.at(i, j) = c;
        RatMatrix eli = RatMatrix::identity(k);
        eli.at(i, j) = -c;
        g = el * g;
        inv = inv * eli;
    }
    return {std::move(g), std::move(inv)};
}

std::size_t part_dim(PartKind kind, std::size_t k) {
    switch (kind) {
    case PartKind::Vector:
    case PartKind::Covector: return k;
    case PartKind::Wedge2: return k * (k - 1) / 2;
    }
    return 0;
}

RatVec flatten(const ModelPoint& p) {
    RatVec out;
    for (const auto& part : p.parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

ModelPoint unflatten(const RatVec& flat, const std::vector<PartKind>& parts, std::size_t k) {
    ModelPoint p;
    std::size_t off = 0;
    for (PartKind kind : parts) {
        const std::size_t d = part_dim(kind, k);
        p.parts.emplace_back(flat.begin() + off, flat.begin() + off + d);
        off += d;
    }
    if (off != flat.size()) throw std::invalid_argument("unflatten: length mismatch");
    return p;
}

namespace {

// lex index of the pair (i, j), i < j < k, in wedge coordinates
std::size_t wedge_index(std::size_t i, std::size_t j, std::size_t k) {
    return i * k - i * (i + 1) / 2 + (j - i - 1);
}

RatVec wedge_of(const RatVec& a, const RatVec& b) {
    const std::size_t k = a.size();
    RatVec w(k * (k - 1) / 2, Rat(0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            w[wedge_index(i, j, k)] = a[i] * b[j] - a[j] * b[i];
    return w;
}

} // namespace

ModelPoint iota_d(std::size_t n, const SpecialLinearSample& g) {
    const std::size_t k = n - 1;
    if (g.g.rows() != k) throw std::invalid_argument("iota_d: sample size must be n-1");
    const RatVec ge1 = g.g.col(0);
    const RatVec ge2 = g.g.col(1);
    ModelPoint p;
    p.parts.push_back(wedge_of(ge1, ge2));
    p.parts.push_back(ge1);
    return p;
}

ModelPoint iota_e6(const SpecialLinearSample& g) {
    if (g.g.rows() != 4) throw std::invalid_argument("iota_e6: sample size must be 4");
    ModelPoint p;
    p.parts.push_back(g.g.col(0));      // g e1
    p.parts.push_back(g.inverse.row(3)); // e4* g^{-1}
    p.parts.push_back(g.inverse.row(2)); // e3* g^{-1}
    p.parts.push_back(g.g.col(1));      // g e2
    return p;
}

ModelPoint model_group_action(const SpecialLinearSample& g, const ModelPoint& p,
                              const std::vector<PartKind>& parts) {
    if (p.parts.size() != parts.size()) throw std::invalid_argument("part count mismatch");
    const std::size_t k = g.g.rows();
    ModelPoint out;
    for (std::size_t s = 0; s < parts.size(); ++s) {
        switch (parts[s]) {
        case PartKind::Vector: out.parts.push_back(g.g.apply(p.parts[s])); break;
        case PartKind::Covector:
            out.parts.push_back(g.inverse.transpose().apply(p.parts[s]));
            break;
        case PartKind::Wedge2: {
            // S -> g S g^T on the skew matrix behind the coordinates
            RatMatrix skew(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j) {
                    skew.at(i, j) = p.parts[s][wedge_index(i, j, k)];
                    skew.at(j, i) = -skew.at(i, j);
                }
            const RatMatrix moved = g.g * skew * g.g.transpose();
            RatVec w(part_dim(PartKind::Wedge2, k), Rat(0));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j)
                    w[wedge_index(i, j, k)] = moved.at(i, j);
            out.parts.push_back(std::move(w));
            break;
        }
        }
    }
    return out;
}

ModuleAction model_action(const ChevalleyAlgebra& source, const MatrixModel& defining,
                          const std::vector<PartKind>& parts) {
    const std::size_t k = defining.size;
    std::size_t total = 0;
    for (PartKind kind : parts) total += part_dim(kind, k);

    auto lift = [&](const RatMatrix& y) {
        RatMatrix big(total, total);
        std::size_t off = 0;
        for (PartKind kind : parts) {
            const std::size_t d = part_dim(kind, k);
            if (kind == PartKind::Vector) {
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) big.at(off + i, off + j) = y.at(i, j);
            } else if (kind == PartKind::Covector) {
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) big.at(off + i, off + j) = -y.at(j, i);
            } else {
                // action on e_a ^ e_b, expanded over the wedge basis
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = a + 1; b < k; ++b) {
                        const std::size_t colidx = wedge_index(a, b, k);
                        for (std::size_t r = 0; r < k; ++r) {
                            if (y.at(r, a) != 0 && r != b) {
                                const std::size_t i2 = std::min(r, b), j2 = std::max(r, b);
                                const Rat sgn = r < b ? 1 : -1;
                                big.at(off + wedge_index(i2, j2, k), off + colidx) +=
                                    sgn * y.at(r, a);
                            }
                            if (y.at(r, b) != 0 && r != a) {
                                const std::size_t i2 = std::min(a, r), j2 = std::max(a, r);
                                const Rat sgn = a < r ? 1 : -1;
                                big.at(off + wedge_index(i2, j2, k), off + colidx) +=
                                    sgn * y.at(r, b);
                            }
                        }
                    }
            }
            off += d;
        }
        return big;
    };

    ModuleAction act;
    act.dim = total;
    for (int i = 1; i <= source.rank(); ++i) {
        const std::size_t si = source.roots().simple_index(i);
        act.act_e.push_back(lift(defining.images[source.positive_index(si)]));
        act.act_f.push_back(lift(defining.images[source.negative_index(si)]));
        act.act_h.push_back(lift(defining.images[source.cartan_index(i)]));
    }
    return act;
}

LieElement Intertwiner::apply(const ModelPoint& p) const {
    return decomp->space.lift(map.apply(flatten(p)));
}

Intertwiner calibrated_intertwiner(const Decomposition& d, const ModuleAction& model_act,
                                   const std::vector<PartKind>& parts,
                                   std::size_t defining_size, const ModelPoint& base_model,
                                   const LieElement& base_lie) {
    const RootSystem& src_rs = d.emb->source().roots();
    const std::size_t n = model_act.dim;
    if (n != d.space.dim())
        throw std::invalid_argument("intertwiner: model and subspace dimensions differ");

    const std::vector<ModuleSummand> msum = decompose_module(model_act, src_rs);

    // coordinates of an arbitrary model vector in the union of summand bases
    RatMatrix basis_cols(n, n);
    {
        std::size_t c = 0;
        for (const auto& s : msum)
            for (const auto& v : s.basis) {
                for (std::size_t r = 0; r < n; ++r) basis_cols.at(r, c) = v[r];
                ++c;
            }
    }
    const RatVec m0 = flatten(base_model);
    auto m0_coords = solve_linear(basis_cols, m0);
    if (!m0_coords) throw std::logic_error("base model point outside the model space");

    const RatVec z_coords = d.space.coords_of(base_lie);

    // candidate blocks: model summand i feeding algebra summand j of the
    // same highest weight, with the model's lowering words replayed from the
    // algebra's highest-weight vector
    struct Block {
        std::size_t i, j;
        RatMatrix replayed; // member coords x dim(summand)
    };
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < msum.size(); ++i) {
        bool matched = false;
        for (std::size_t j = 0; j < d.summands.size(); ++j) {
            if (msum[i].weight != d.summands[j].hw_weight) continue;
            matched = true;
            Block blk{i, j, RatMatrix(n, msum[i].basis.size())};
            for (std::size_t v = 0; v < msum[i].basis.size(); ++v) {
                RatVec cur = d.space.coords_of(d.summands[j].hw_vector);
                for (int node : msum[i].words[v])
                    cur = d.action.act_f[static_cast<std::size_t>(node - 1)].apply(cur);
                for (std::size_t r = 0; r < n; ++r) blk.replayed.at(r, v) = cur[r];
            }
            blocks.push_back(std::move(blk));
        }
        if (!matched)
            throw std::logic_error("intertwiner: no algebra summand of weight " +
                                   msum[i].weight.str());
    }

    // base point must touch every summand on both sides
    {
        std::size_t off = 0;
        for (const auto& s : msum) {
            bool nonzero = false;
            for (std::size_t v = 0; v < s.basis.size(); ++v)
                if ((*m0_coords)[off + v] != 0) nonzero = true;
            if (!nonzero)
                throw std::invalid_argument(
                    "intertwiner: base model point misses a model summand");
            off += s.basis.size();
        }
        for (const auto& part : summand_projection(d, base_lie))
            if (part.is_zero())
                throw std::invalid_argument(
                    "intertwiner: base element misses an algebra summand");
    }

    // solve the calibration equation for the block coefficients
    RatMatrix cal(n, blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::size_t off = 0;
        for (std::size_t i = 0; i < blocks[b].i; ++i) off += msum[i].basis.size();
        RatVec coeffs(msum[blocks[b].i].basis.size());
        for (std::size_t v = 0; v < coeffs.size(); ++v) coeffs[v] = (*m0_coords)[off + v];
        const RatVec img = blocks[b].replayed.apply(coeffs);
        for (std::size_t r = 0; r < n; ++r) cal.at(r, b) = img[r];
    }
    auto c_sol = solve_linear(cal, z_coords);
    if (!c_sol) throw std::logic_error("intertwiner: calibration system is inconsistent");

    // assemble T: on summand i's basis coordinates it acts by the weighted
    // replayed vectors; precompose with the change of basis to model coords
    RatMatrix t_on_basis(n, n);
    {
        std::size_t off = 0;
        for (std::size_t i = 0; i < msum.size(); ++i) {
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                if (blocks[b].i != i) continue;
                for (std::size_t v = 0; v < msum[i].basis.size(); ++v)
                    for (std::size_t r = 0; r < n; ++r)
                        t_on_basis.at(r, off + v) +=
                            (*c_sol)[b] * blocks[b].replayed.at(r, v);
            }
            off += msum[i].basis.size();
        }
    }
    // T = t_on_basis * basis_cols^{-1}, via solving basis_cols^T X^T = t_on_basis^T
    RatMatrix t(n, n);
    {
        const RatMatrix bt = basis_cols.transpose();
        for (std::size_t r = 0; r < n; ++r) {
            auto rowsol = solve_linear(bt, t_on_basis.row(r));
            if (!rowsol) throw std::logic_error("intertwiner: basis change failed");
            for (std::size_t cidx = 0; cidx < n; ++cidx) t.at(r, cidx) = (*rowsol)[cidx];
        }
    }

    Intertwiner iw;
    iw.decomp = &d;
    iw.parts = parts;
    iw.defining_size = defining_size;
    iw.map = std::move(t);

    // exact equivariance on every generator, and calibration, and invertibility
    for (std::size_t i = 0; i < model_act.act_e.size(); ++i) {
        if (!(iw.map * model_act.act_e[i] == d.action.act_e[i] * iw.map) ||
            !(iw.map * model_act.act_f[i] == d.action.act_f[i] * iw.map) ||
            !(iw.map * model_act.act_h[i] == d.action.act_h[i] * iw.map))
            throw std::logic_error("intertwiner: equivariance residual is nonzero");
    }
    if (!(iw.map.apply(m0) == z_coords))
        throw std::logic_error("intertwiner: calibration equation violated");
    if (rank(iw.map) != n) throw std::logic_error("intertwiner: map is singular");
    return iw;
}

} // namespace minorb
