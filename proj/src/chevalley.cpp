#include "minorb/chevalley.hpp"

#include "minorb/rng.hpp"

#include <sstream>
#include <stdexcept>

namespace minorb {

LieElement LieElement::operator+(const LieElement& o) const {
    if (alg != o.alg) throw std::invalid_argument("algebra mismatch");
    return {alg, add(c, o.c)};
}

LieElement LieElement::operator-(const LieElement& o) const {
    if (alg != o.alg) throw std::invalid_argument("algebra mismatch");
    return {alg, sub(c, o.c)};
}

LieElement LieElement::scaled(const Rat& f) const { return {alg, scale(c, f)}; }

std::vector<std::size_t> LieElement::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) s.push_back(i);
    return s;
}

ChevalleyAlgebra ChevalleyAlgebra::build(RootSystem rs) {
    ChevalleyAlgebra a;
    a.rs_ = std::move(rs);
    a.m_ = a.rs_.positive_roots().size();
    a.dim_ = a.rs_.algebra_dim();

    const auto& pos = a.rs_.positive_roots();
    const std::size_t m = a.m_;
    a.npp_.assign(m, std::vector<int>(m, 0));

    // Extraspecial pairs get N = +1; every other special pair (al, be) with
    // al + be = ga is forced by the Jacobi identity on (x_{-al1}, x_al, x_be),
    // where (al1, be1) is the extraspecial pair of ga:
    //   N_{al,be} = N_{al1,al-al1} N_{al-al1,be} - N_{al1,be-al1} N_{be-al1,al}
    // (terms dropped when the difference is not a root). Both factors in each
    // product sum to a root lower than ga, so filling in canonical order works.
    for (std::size_t g = 0; g < m; ++g) {
        const Root& gamma = pos[g];
        if (gamma.height() == 1) continue;
        std::size_t a1 = m, b1 = m;
        for (std::size_t cand = 0; cand < g; ++cand) {
            auto rest = a.rs_.positive_index(gamma - pos[cand]);
            if (rest && cand < *rest) {
                a1 = cand;
                b1 = *rest;
                break;
            }
        }
        if (a1 == m) throw std::logic_error("no extraspecial pair for " + gamma.str());
        a.npp_[a1][b1] = 1;
        a.npp_[b1][a1] = -1;
        for (std::size_t al = a1 + 1; al < g; ++al) {
            auto rest = a.rs_.positive_index(gamma - pos[al]);
            if (!rest || al >= *rest) continue;
            const std::size_t be = *rest;
            int t1 = 0, t2 = 0;
            if (auto d = a.rs_.positive_index(pos[al] - pos[a1]))
                t1 = a.npp_[a1][*d] * a.npp_[*d][be];
            if (auto d = a.rs_.positive_index(pos[be] - pos[a1]))
                t2 = a.npp_[a1][*d] * a.npp_[*d][al];
            const int n = t1 - t2;
            if (n != 1 && n != -1)
                throw std::logic_error("structure constant derivation failed at " + gamma.str());
            a.npp_[al][be] = n;
            a.npp_[be][al] = -n;
        }
    }

    a.build_table();

    // Jacobi identity as a build-time consistency gate: exhaustive while the
    // triple count stays reasonable, seeded sampling beyond that.
    JacobiReport jr = a.dim_ <= 78 ? a.verify_jacobi_exhaustive()
                                   : a.verify_jacobi_sampled(10000, 0);
    if (!jr.passed) {
        std::ostringstream os;
        os << "Jacobi identity fails on basis triple (" << a.describe_basis(jr.failure[0])
           << ", " << a.describe_basis(jr.failure[1]) << ", " << a.describe_basis(jr.failure[2])
           << ")";
        throw std::logic_error(os.str());
    }
    return a;
}

int ChevalleyAlgebra::signed_n(bool apos, std::size_t a, bool bpos, std::size_t b) const {
    if (apos && bpos) return npp_[a][b];
    if (!apos && !bpos) return -npp_[a][b];
    if (!apos) return -signed_n(true, b, false, a);
    // a positive, b negative, a != b; bracket lands on the root pos[a] - pos[b]
    const auto& pos = rs_.positive_roots();
    if (auto d = rs_.positive_index(pos[a] - pos[b])) return -npp_[b][*d];
    if (auto d = rs_.positive_index(pos[b] - pos[a])) return npp_[*d][a];
    return 0;
}

void ChevalleyAlgebra::build_table() {
    const auto& pos = rs_.positive_roots();
    const std::size_t l = rank();
    table_.assign(dim_, std::vector<std::vector<Term>>(dim_));

    auto root_of = [&](std::size_t i) -> std::pair<bool, std::size_t> {
        // signed root of basis index i >= l: (is_positive, positive index)
        const std::size_t s = i - l;
        return s < m_ ? std::make_pair(true, s) : std::make_pair(false, s - m_);
    };

    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            std::vector<Term>& out = table_[i][j];
            if (i < l && j < l) continue;
            if (i < l) {
                auto [jp, jq] = root_of(j);
                long w = rs_.coroot_pairing(pos[jq], static_cast<int>(i) + 1);
                if (!jp) w = -w;
                if (w != 0) out.push_back({j, static_cast<int>(w)});
                continue;
            }
            if (j < l) {
                auto [ip, iq] = root_of(i);
                long w = rs_.coroot_pairing(pos[iq], static_cast<int>(j) + 1);
                if (!ip) w = -w;
                if (w != 0) out.push_back({i, static_cast<int>(-w)});
                continue;
            }
            auto [ip, iq] = root_of(i);
            auto [jp, jq] = root_of(j);
            if (iq == jq && ip != jp) {
                // [x_b, x_{-b}] = h_b, the coroot combination of b
                const int sign = ip ? 1 : -1;
                for (std::size_t k = 0; k < l; ++k) {
                    const int ck = pos[iq].coeffs[k];
                    if (ck != 0) out.push_back({k, sign * ck});
                }
                continue;
            }
            if (iq == jq) continue; // same root vector
            Root sum = (ip ? pos[iq] : -pos[iq]) + (jp ? pos[jq] : -pos[jq]);
            bool sum_pos = true;
            {
                bool nonneg = true, nonpos = true;
                for (int cv : sum.coeffs) {
                    if (cv < 0) nonneg = false;
                    if (cv > 0) nonpos = false;
                }
                if (!nonneg && !nonpos) continue;
                sum_pos = nonneg;
            }
            auto target = rs_.positive_index(sum_pos ? sum : -sum);
            if (!target) continue;
            const int n = signed_n(ip, iq, jp, jq);
            if (n == 0) throw std::logic_error("missing structure constant");
            out.push_back({sum_pos ? positive_index(*target) : negative_index(*target), n});
        }
    }
}

std::optional<Root> ChevalleyAlgebra::basis_root(std::size_t i) const {
    if (is_cartan_index(i)) return std::nullopt;
    const std::size_t s = i - rank();
    if (s < m_) return rs_.positive_roots()[s];
    return -rs_.positive_roots()[s - m_];
}

LieElement ChevalleyAlgebra::zero() const { return {this, RatVec(dim_, Rat(0))}; }

LieElement ChevalleyAlgebra::basis(std::size_t i) const {
    LieElement e = zero();
    e.c[i] = 1;
    return e;
}

LieElement ChevalleyAlgebra::cartan(int node) const { return basis(cartan_index(node)); }

LieElement ChevalleyAlgebra::root_vector(const Root& r) const {
    if (auto p = rs_.positive_index(r)) return basis(positive_index(*p));
    if (auto p = rs_.positive_index(-r)) return basis(negative_index(*p));
    throw std::invalid_argument("not a root: " + r.str());
}

LieElement ChevalleyAlgebra::coroot(const Root& r) const {
    Root abs = rs_.is_positive_root(r) ? r : -r;
    const int sign = rs_.is_positive_root(r) ? 1 : -1;
    LieElement e = zero();
    for (int k = 0; k < rank(); ++k) e.c[k] = sign * abs.coeffs[k];
    return e;
}

LieElement ChevalleyAlgebra::from_coeffs(RatVec c) const {
    if (c.size() != dim_) throw std::invalid_argument("coefficient length mismatch");
    return {this, std::move(c)};
}

LieElement ChevalleyAlgebra::bracket(const LieElement& a, const LieElement& b) const {
    if (a.alg != this || b.alg != this) throw std::invalid_argument("algebra mismatch");
    LieElement r = zero();
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b.c[j] == 0) continue;
            for (const Term& t : table_[i][j]) r.c[t.idx] += a.c[i] * b.c[j] * t.coeff;
        }
    }
    return r;
}

RatMatrix ChevalleyAlgebra::ad_matrix(const LieElement& x) const {
    if (x.alg != this) throw std::invalid_argument("algebra mismatch");
    RatMatrix ad(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x.c[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            for (const Term& t : table_[i][j]) ad.at(t.idx, j) += x.c[i] * t.coeff;
    }
    return ad;
}

RatMatrix ChevalleyAlgebra::exp_ad(const LieElement& y) const {
    const RatMatrix ad = ad_matrix(y);
    RatMatrix sum = RatMatrix::identity(dim_);
    RatMatrix pow = RatMatrix::identity(dim_);
    for (std::size_t k = 1; k <= dim_ + 1; ++k) {
        pow = ad * pow;
        if (pow.is_zero()) return sum;
        Rat inv_k(1, static_cast<unsigned long>(k));
        inv_k.canonicalize();
        pow = pow.scaled(inv_k);
        sum = sum + pow;
    }
    throw std::invalid_argument("exp_ad: element is not ad-nilpotent");
}

LieElement ChevalleyAlgebra::exp_ad_apply(const LieElement& y, const LieElement& x) const {
    if (y.alg != this || x.alg != this) throw std::invalid_argument("algebra mismatch");
    LieElement sum = x;
    LieElement term = x;
    for (std::size_t k = 1; k <= dim_ + 1; ++k) {
        term = bracket(y, term);
        if (term.is_zero()) return sum;
        Rat inv_k(1, static_cast<unsigned long>(k));
        inv_k.canonicalize();
        term = term.scaled(inv_k);
        sum = sum + term;
    }
    throw std::invalid_argument("exp_ad: element is not ad-nilpotent");
}

int ChevalleyAlgebra::structure_constant(const Root& a, const Root& b) const {
    auto classify = [&](const Root& r) -> std::pair<bool, std::size_t> {
        if (auto p = rs_.positive_index(r)) return {true, *p};
        if (auto p = rs_.positive_index(-r)) return {false, *p};
        throw std::invalid_argument("not a root: " + r.str());
    };
    auto [ap, ai] = classify(a);
    auto [bp, bi] = classify(b);
    if (ai == bi) return 0; // proportional roots: bracket is a coroot or zero
    Root sum = a + b;
    if (!rs_.is_positive_root(sum) && !rs_.is_positive_root(-sum)) return 0;
    return signed_n(ap, ai, bp, bi);
}

void ChevalleyAlgebra::jacobi_triple(std::size_t i, std::size_t j, std::size_t k,
                                     std::vector<long>& acc,
                                     std::vector<std::size_t>& touched) const {
    auto accumulate = [&](std::size_t a, std::size_t b, std::size_t c) {
        for (const Term& t1 : table_[a][b])
            for (const Term& t2 : table_[t1.idx][c]) {
                if (acc[t2.idx] == 0) touched.push_back(t2.idx);
                acc[t2.idx] += static_cast<long>(t1.coeff) * t2.coeff;
            }
    };
    accumulate(i, j, k);
    accumulate(j, k, i);
    accumulate(k, i, j);
}

JacobiReport ChevalleyAlgebra::verify_jacobi_exhaustive() const {
    JacobiReport rep;
    const std::size_t n = dim_;
    bool failed = false;
    std::array<std::size_t, 3> first{n, n, n};
    std::uint64_t checked = 0;
#pragma omp parallel
    {
        std::vector<long> acc(n, 0);
        std::vector<std::size_t> touched;
        std::array<std::size_t, 3> local_first{n, n, n};
        std::uint64_t local_checked = 0;
#pragma omp for schedule(dynamic, 8)
        for (long ii = 0; ii < static_cast<long>(n); ++ii) {
            const std::size_t i = static_cast<std::size_t>(ii);
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    touched.clear();
                    jacobi_triple(i, j, k, acc, touched);
                    ++local_checked;
                    bool ok = true;
                    for (std::size_t t : touched) {
                        if (acc[t] != 0) ok = false;
                        acc[t] = 0;
                    }
                    if (!ok && std::array<std::size_t, 3>{i, j, k} < local_first)
                        local_first = {i, j, k};
                }
        }
#pragma omp critical
        {
            checked += local_checked;
            if (local_first[0] < n && local_first < first) {
                first = local_first;
                failed = true;
            }
        }
    }
    rep.checked = checked;
    if (failed) {
        rep.passed = false;
        rep.failure = first;
    }
    return rep;
}

JacobiReport ChevalleyAlgebra::verify_jacobi_sampled(std::uint64_t triples,
                                                     std::uint64_t seed) const {
    JacobiReport rep;
    SplitMix64 rng(seed);
    std::vector<std::array<std::size_t, 3>> cases(triples);
    for (auto& t : cases)
        t = {static_cast<std::size_t>(rng.below(dim_)), static_cast<std::size_t>(rng.below(dim_)),
             static_cast<std::size_t>(rng.below(dim_))};
    const long n_cases = static_cast<long>(cases.size());
    long first_bad = n_cases;
#pragma omp parallel
    {
        std::vector<long> acc(dim_, 0);
        std::vector<std::size_t> touched;
        long local_bad = n_cases;
#pragma omp for schedule(static)
        for (long idx = 0; idx < n_cases; ++idx) {
            const auto& t = cases[static_cast<std::size_t>(idx)];
            touched.clear();
            jacobi_triple(t[0], t[1], t[2], acc, touched);
            bool ok = true;
            for (std::size_t u : touched) {
                if (acc[u] != 0) ok = false;
                acc[u] = 0;
            }
            if (!ok && idx < local_bad) local_bad = idx;
        }
#pragma omp critical
        if (local_bad < first_bad) first_bad = local_bad;
    }
    rep.checked = triples;
    if (first_bad < n_cases) {
        rep.passed = false;
        rep.failure = cases[static_cast<std::size_t>(first_bad)];
    }
    return rep;
}

std::string ChevalleyAlgebra::dump_structure_constants() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (std::size_t a = 0; a < m_; ++a)
        for (std::size_t b = 0; b < m_; ++b) {
            if (npp_[a][b] == 0) continue;
            if (!first) os << ",";
            first = false;
            os << "[" << a << "," << b << "," << npp_[a][b] << "]";
        }
    os << "]";
    return os.str();
}

std::string ChevalleyAlgebra::describe_basis(std::size_t i) const {
    if (is_cartan_index(i)) return "h" + std::to_string(i + 1);
    auto r = basis_root(i);
    return "x" + r->str();
}

RatMatrix MatrixModel::map(const LieElement& x) const {
    if (x.alg != alg) throw std::invalid_argument("algebra mismatch");
    RatMatrix out(size, size);
    for (std::size_t i = 0; i < x.c.size(); ++i) {
        if (x.c[i] == 0) continue;
        out = out + images[i].scaled(x.c[i]);
    }
    return out;
}

bool MatrixModel::verify_homomorphism(std::size_t* bad_a, std::size_t* bad_b) const {
    const std::size_t n = alg->dim();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            RatMatrix lhs = images[a] * images[b] - images[b] * images[a];
            RatMatrix rhs = map(alg->bracket(alg->basis(a), alg->basis(b)));
            if (!(lhs == rhs)) {
                if (bad_a) *bad_a = a;
                if (bad_b) *bad_b = b;
                return false;
            }
        }
    }
    return true;
}

MatrixModel build_matrix_model(const ChevalleyAlgebra& alg, std::size_t size,
                               const std::vector<RatMatrix>& gen_e,
                               const std::vector<RatMatrix>& gen_f) {
    const int l = alg.rank();
    const auto& pos = alg.roots().positive_roots();
    MatrixModel mm;
    mm.alg = &alg;
    mm.size = size;
    mm.images.assign(alg.dim(), RatMatrix(size, size));

    for (int i = 0; i < l; ++i) {
        const std::size_t si = alg.roots().simple_index(i + 1);
        mm.images[alg.positive_index(si)] = gen_e[i];
        mm.images[alg.negative_index(si)] = gen_f[i];
        mm.images[alg.cartan_index(i + 1)] = gen_e[i] * gen_f[i] - gen_f[i] * gen_e[i];
    }
    // x_b = [e_i, x_{b - a_i}] / N_{a_i, b - a_i}, walked in height order
    for (std::size_t p = 0; p < alg.num_positive(); ++p) {
        const Root& b = pos[p];
        if (b.height() == 1) continue;
        for (int i = 0; i < l; ++i) {
            Root rest = b;
            rest.coeffs[i] -= 1;
            auto q = alg.roots().positive_index(rest);
            if (!q) continue;
            const int n = alg.structure_constant(alg.roots().simple_root(i + 1), rest);
            Rat inv(1, 1);
            inv /= n;
            const std::size_t si = alg.roots().simple_index(i + 1);
            const RatMatrix& ei = mm.images[alg.positive_index(si)];
            const RatMatrix& fi = mm.images[alg.negative_index(si)];
            const RatMatrix& xp = mm.images[alg.positive_index(*q)];
            const RatMatrix& xn = mm.images[alg.negative_index(*q)];
            mm.images[alg.positive_index(p)] = (ei * xp - xp * ei).scaled(inv);
            // N_{-a,-b} = -N_{a,b}
            mm.images[alg.negative_index(p)] = (fi * xn - xn * fi).scaled(-inv);
            break;
        }
    }
    std::size_t ba = 0, bb = 0;
    if (!mm.verify_homomorphism(&ba, &bb))
        throw std::logic_error("matrix model is not a homomorphism on pair (" +
                               alg.describe_basis(ba) + ", " + alg.describe_basis(bb) + ")");
    return mm;
}

DnMatrixModel dn_matrix_model(const ChevalleyAlgebra& alg) {
    if (alg.roots().type().family != Family::D)
        throw std::invalid_argument("dn_matrix_model needs type D");
    const int n = alg.rank();
    if (n < 4) throw std::invalid_argument("dn_matrix_model needs n >= 4");
    const std::size_t size = 2 * static_cast<std::size_t>(n);

    auto unit = [&](int i, int j) { // 1-based E_{ij}
        RatMatrix e(size, size);
        e.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1;
        return e;
    };
    const int N = 2 * n;
    // eps_i - eps_j -> E_{ij} - E_{N+1-j, N+1-i}; eps_i + eps_j -> E_{i, N+1-j} - E_{j, N+1-i}
    std::vector<RatMatrix> gen_e, gen_f;
    for (int i = 1; i < n; ++i) {
        gen_e.push_back(unit(i, i + 1) - unit(N - i, N + 1 - i));
        gen_f.push_back(unit(i + 1, i) - unit(N + 1 - i, N - i));
    }
    gen_e.push_back(unit(n - 1, n + 1) - unit(n, n + 2));
    gen_f.push_back(unit(n + 1, n - 1) - unit(n + 2, n));

    DnMatrixModel dm;
    dm.model = build_matrix_model(alg, size, gen_e, gen_f);
    dm.form = RatMatrix(size, size);
    for (std::size_t i = 0; i < size; ++i) dm.form.at(i, size - 1 - i) = 1;

    for (std::size_t i = 0; i < alg.dim(); ++i) {
        const RatMatrix& mat = dm.model.images[i];
        if (!(mat.transpose() * dm.form + dm.form * mat).is_zero())
            throw std::logic_error("image violates M^T J + J M = 0 at " + alg.describe_basis(i));
    }
    return dm;
}

MatrixModel an_matrix_model(const ChevalleyAlgebra& alg) {
    if (alg.roots().type().family != Family::A)
        throw std::invalid_argument("an_matrix_model needs type A");
    const int l = alg.rank();
    const std::size_t size = static_cast<std::size_t>(l) + 1;
    auto unit = [&](int i, int j) {
        RatMatrix e(size, size);
        e.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1;
        return e;
    };
    std::vector<RatMatrix> gen_e, gen_f;
    for (int i = 1; i <= l; ++i) {
        gen_e.push_back(unit(i, i + 1));
        gen_f.push_back(unit(i + 1, i));
    }
    return build_matrix_model(alg, size, gen_e, gen_f);
}

} // namespace minorb
