#include "minorb/scenarios.hpp"

#include "minorb/models.hpp"
#include "minorb/orbits.hpp"
#include "minorb/rng.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

namespace minorb {

namespace {

std::string dims_str(const Decomposition& d) {
    std::vector<std::string> out;
    for (const auto& s : d.summands) out.push_back(s.dim.get_str());
    std::sort(out.begin(), out.end());
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < out.size(); ++i) os << (i ? "," : "") << out[i];
    os << "}";
    return os.str();
}

std::string support_str(const ChevalleyAlgebra& alg, const LieElement& x) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i : x.support()) {
        if (!first) os << " + ";
        first = false;
        os << to_string(x.c[i]) << "*" << alg.describe_basis(i);
    }
    return first ? "0" : os.str();
}

std::string roots_str(const std::vector<Root>& rs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < rs.size(); ++i) os << (i ? " " : "") << rs[i].str();
    return os.str();
}

bool is_ad_nilpotent(const ChevalleyAlgebra& alg, const LieElement& x) {
    RatMatrix m = alg.ad_matrix(x);
    RatMatrix p = m;
    for (std::size_t k = 1; k <= alg.dim(); ++k) {
        if (p.is_zero()) return true;
        p = m * p;
    }
    return p.is_zero();
}

// y drawn as c * x_r for a random root r and c in {-3..3}\{0}
LieElement random_root_conjugator(const ChevalleyAlgebra& alg, SplitMix64& rng) {
    const std::size_t r = static_cast<std::size_t>(rng.below(2 * alg.num_positive()));
    long c = rng.range(-3, 3);
    if (c == 0) c = 1;
    return alg.basis(alg.rank() + r).scaled(Rat(c));
}

LieElement random_conjugate(const ChevalleyAlgebra& alg, SplitMix64& rng, const LieElement& x) {
    LieElement v = x;
    const std::size_t steps = 1 + rng.below(3);
    for (std::size_t s = 0; s < steps; ++s)
        v = alg.exp_ad_apply(random_root_conjugator(alg, rng), v);
    return v;
}

LieElement random_element(const ChevalleyAlgebra& alg, SplitMix64& rng) {
    LieElement v = alg.zero();
    for (std::size_t i = 0; i < alg.dim(); ++i) v.c[i] = rng.range(-3, 3);
    return v;
}

ClaimRecord reported_claim(std::string id, std::string family, std::optional<int> n,
                           std::string expected, std::string actual, std::string provenance,
                           std::string notes) {
    ClaimRecord c = make_claim(std::move(id), std::move(family), n, true, std::move(expected),
                               std::move(actual), std::move(provenance), std::move(notes));
    c.status = ClaimStatus::Reported;
    return c;
}

} // namespace

std::vector<ClaimRecord> scenario_dn(int n, const ScenarioOptions& opt) {
    std::vector<ClaimRecord> claims;
    const std::string fam = "Dn";
    SplitMix64 rng(opt.seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(n));

    const ChevalleyAlgebra d = ChevalleyAlgebra::build(RootSystem::build({Family::D, n}));
    const ChevalleyAlgebra sl_n = ChevalleyAlgebra::build(RootSystem::build({Family::A, n - 1}));
    const ChevalleyAlgebra sl_n1 = ChevalleyAlgebra::build(RootSystem::build({Family::A, n - 2}));

    std::vector<Root> nodes;
    for (int i = 1; i <= n - 1; ++i) nodes.push_back(d.roots().simple_root(i));
    const LieEmbedding phi2 = LieEmbedding::subsystem(sl_n, d, nodes);
    const LieEmbedding phi1 = block_embedding_sl(sl_n1, sl_n);
    const LieEmbedding chain = LieEmbedding::compose(phi2, phi1);

    claims.push_back(make_claim("dn.build.dim", fam, n, d.dim() == std::size_t(n * (2 * n - 1)),
                                std::to_string(n * (2 * n - 1)), std::to_string(d.dim()),
                                "TRIVIAL"));

    const GradedSubspace r = abelian_nilradical(d, n);
    claims.push_back(make_claim("dn.nilrad.dim", fam, n,
                                r.dim() == std::size_t(n * (n - 1) / 2),
                                std::to_string(n * (n - 1) / 2), std::to_string(r.dim()),
                                "DERIVED"));
    claims.push_back(make_claim("dn.nilrad.abelian", fam, n, is_abelian(r), "true",
                                is_abelian(r) ? "true" : "false", "DERIVED"));

    const Decomposition dec = decompose(r, chain);
    {
        std::ostringstream want;
        want << "{" << std::min(n - 1, (n - 1) * (n - 2) / 2) << ","
             << std::max(n - 1, (n - 1) * (n - 2) / 2) << "}";
        // sorted-string comparison is enough at these sizes
        std::vector<long> got;
        for (const auto& s : dec.summands) got.push_back(s.dim.get_si());
        std::sort(got.begin(), got.end());
        const bool ok = dec.summands.size() == 2 && got[0] == std::min<long>(n - 1, (n - 1) * (n - 2) / 2) &&
                        got[1] == std::max<long>(n - 1, (n - 1) * (n - 2) / 2);
        claims.push_back(make_claim("dn.decomp.dims", fam, n, ok, want.str(), dims_str(dec),
                                    "PAPER",
                                    "two irreducible summands: vector and wedge-square"));
    }

    // exponential identity
    const Root theta = d.roots().highest_root();
    Root gamma = d.roots().simple_root(2);
    for (int i = 3; i <= n - 1; ++i) gamma = gamma + d.roots().simple_root(i);
    const Root second = theta - gamma;
    const LieElement x_theta = d.root_vector(theta);
    const LieElement z = conjugate_by_exp(d, {d.root_vector(-gamma)}, x_theta);
    {
        std::set<std::size_t> want = {d.positive_index(*d.roots().positive_index(theta)),
                                      d.positive_index(*d.roots().positive_index(second))};
        std::set<std::size_t> got(z.support().begin(), z.support().end());
        const Rat c2 = z.c[d.positive_index(*d.roots().positive_index(second))];
        const bool ok = want == got &&
                        z.c[d.positive_index(*d.roots().positive_index(theta))] == 1 &&
                        (c2 == 1 || c2 == -1);
        claims.push_back(make_claim(
            "dn.expident", fam, n, ok,
            "x(" + theta.str() + ") + c*x(" + second.str() + "), |c|=1",
            support_str(d, z), "PAPER",
            "realized sign c = " + to_string(c2) + " (convention-dependent)"));
    }
    claims.push_back(make_claim("dn.expident.member", fam, n, min_orbit_member(d, z), "true",
                                min_orbit_member(d, z) ? "true" : "false", "DERIVED"));
    {
        const auto parts = summand_projection(dec, z);
        bool all_nonzero = true;
        for (const auto& p : parts) all_nonzero = all_nonzero && !p.is_zero();
        claims.push_back(make_claim("dn.proj.nonzero", fam, n,
                                    all_nonzero && parts.size() == 2, "2 nonzero components",
                                    all_nonzero ? "2 nonzero components" : "zero component",
                                    "DERIVED"));
    }

    claims.push_back(make_claim("dn.orbvar.dim", fam, n,
                                suborbit_dim(phi2, x_theta) == std::size_t(2 * n - 3),
                                std::to_string(2 * n - 3),
                                std::to_string(suborbit_dim(phi2, x_theta)), "PAPER",
                                "orbital variety dimension at x_theta"));
    claims.push_back(make_claim("dn.orbvar.dim.z", fam, n,
                                suborbit_dim(chain, z) == std::size_t(2 * n - 3),
                                std::to_string(2 * n - 3), std::to_string(suborbit_dim(chain, z)),
                                "PAPER", "orbital variety dimension at the conjugated point"));
    {
        const Subspace stab = stabilizer_subalgebra(chain, z);
        claims.push_back(make_claim("dn.stab.dim", fam, n,
                                    stab.dim() == std::size_t((n - 1) * (n - 3)),
                                    std::to_string((n - 1) * (n - 3)), std::to_string(stab.dim()),
                                    "DERIVED"));
    }

    // oracle cross-validation against the bivector test
    const DnMatrixModel dm = dn_matrix_model(d);
    {
        const std::size_t per_kind = (std::max<std::size_t>(opt.samples, 102) + 2) / 3;
        struct Sample {
            LieElement x;
            int kind; // 0 conjugate of x_theta, 1 random element, 2 sum of two orbit points
        };
        std::vector<Sample> samples;
        for (std::size_t s = 0; s < per_kind; ++s)
            samples.push_back({random_conjugate(d, rng, x_theta), 0});
        for (std::size_t s = 0; s < per_kind; ++s) samples.push_back({random_element(d, rng), 1});
        for (std::size_t s = 0; s < per_kind; ++s) {
            // two independent orbit points: keep drawing until the bivectors
            // span a 4-dimensional space, so the sum has rank 4
            LieElement a = random_conjugate(d, rng, x_theta);
            for (int tries = 0; tries < 64; ++tries) {
                LieElement b = random_conjugate(d, rng, x_theta);
                LieElement sum = a + b;
                if (rank(bivector_transport(dm, sum).skew) == 4) {
                    samples.push_back({sum, 2});
                    break;
                }
                if (tries == 63)
                    throw std::logic_error("could not sample independent orbit points");
            }
        }

        std::vector<int> oracle(samples.size()), bivec(samples.size());
        const long ns = static_cast<long>(samples.size());
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < ns; ++i) {
            const LieElement& x = samples[static_cast<std::size_t>(i)].x;
            oracle[static_cast<std::size_t>(i)] = min_orbit_member(d, x) ? 1 : 0;
            const Bivector b = bivector_transport(dm, x);
            bivec[static_cast<std::size_t>(i)] =
                (decomposable(b) && isotropic(b, dm.form)) ? 1 : 0;
        }

        std::size_t agree = 0, conj_ok = 0, conj_n = 0, sum_ok = 0, sum_n = 0;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (oracle[i] == bivec[i]) ++agree;
            if (samples[i].kind == 0) {
                ++conj_n;
                if (oracle[i] == 1) ++conj_ok;
            }
            if (samples[i].kind == 2) {
                ++sum_n;
                if (oracle[i] == 0) ++sum_ok;
            }
        }
        auto frac = [](std::size_t a, std::size_t b) {
            return std::to_string(a) + "/" + std::to_string(b);
        };
        claims.push_back(make_claim("dn.oracle.crossval.agree", fam, n, agree == samples.size(),
                                    "100% agreement", frac(agree, samples.size()) + " agree",
                                    "DERIVED",
                                    "(ad x)^2 oracle vs decomposable-and-isotropic bivector test"));
        claims.push_back(make_claim("dn.oracle.crossval.conjugates", fam, n, conj_ok == conj_n,
                                    "all accepted", frac(conj_ok, conj_n) + " accepted",
                                    "DERIVED"));
        claims.push_back(make_claim("dn.oracle.crossval.sums", fam, n, sum_ok == sum_n,
                                    "all rejected", frac(sum_ok, sum_n) + " rejected",
                                    "DERIVED"));
    }

    // iota membership through the calibrated intertwiner
    {
        const std::vector<PartKind> parts = {PartKind::Wedge2, PartKind::Vector};
        const MatrixModel defining = an_matrix_model(sl_n1);
        const ModuleAction act = model_action(sl_n1, defining, parts);
        const std::size_t k = static_cast<std::size_t>(n - 1);
        const SpecialLinearSample id{RatMatrix::identity(k), RatMatrix::identity(k)};
        const Intertwiner tw =
            calibrated_intertwiner(dec, act, parts, k, iota_d(static_cast<std::size_t>(n), id), z);

        const std::size_t ns = std::max<std::size_t>(50, opt.samples / 2);
        std::vector<SpecialLinearSample> gs;
        for (std::size_t s = 0; s < ns; ++s)
            gs.push_back(random_special_linear(k, rng.next(), 8));
        std::vector<int> ok(ns, 0);
        const long nsl = static_cast<long>(ns);
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < nsl; ++i) {
            const LieElement pt =
                tw.apply(iota_d(static_cast<std::size_t>(n), gs[static_cast<std::size_t>(i)]));
            ok[static_cast<std::size_t>(i)] = min_orbit_member(d, pt) ? 1 : 0;
        }
        std::size_t good = 0;
        for (int v : ok) good += static_cast<std::size_t>(v);
        claims.push_back(make_claim("dn.iota.member", fam, n, good == ns,
                                    "all iota images in the orbit closure",
                                    std::to_string(good) + "/" + std::to_string(ns) + " members",
                                    "DERIVED",
                                    "intertwined images of seeded special linear samples"));
    }

    if (opt.check_prescriptions) {
        // pullback prescription for phi1: a_i -> a_i for i <= n-2, a_{n-1} -> 0
        std::vector<std::vector<Rat>> presc;
        for (int j = 1; j <= n - 1; ++j) {
            std::vector<Rat> row(static_cast<std::size_t>(n - 2), Rat(0));
            if (j <= n - 2) row[static_cast<std::size_t>(j - 1)] = 1;
            presc.push_back(std::move(row));
        }
        const FeasibilityReport fr =
            restriction_feasibility({Family::A, n - 2}, sl_n.roots(), presc);
        claims.push_back(reported_claim(
            "dn.presc.phi1.feas", fam, n, "verdict recorded",
            fr.verdict_str() + (fr.witness.empty() ? "" : "; " + fr.witness), "PAPER",
            "literal pullback prescription audited via the integrality obstruction"));
    }

    return claims;
}

std::vector<ClaimRecord> scenario_e6(const ScenarioOptions& opt) {
    std::vector<ClaimRecord> claims;
    const std::string fam = "E6";
    SplitMix64 rng(opt.seed + 0xe6e6e6e6ull);

    const ChevalleyAlgebra e6 = ChevalleyAlgebra::build(RootSystem::build({Family::E, 6}));
    const ChevalleyAlgebra so10 = ChevalleyAlgebra::build(RootSystem::build({Family::D, 5}));
    const ChevalleyAlgebra sl4 = ChevalleyAlgebra::build(RootSystem::build({Family::A, 3}));

    claims.push_back(make_claim("e6.build.dim", fam, std::nullopt, e6.dim() == 78, "78",
                                std::to_string(e6.dim()), "DERIVED"));

    // phi2: D5 subsystem via j -> node 7-j
    std::vector<Root> d5_nodes;
    for (int j = 1; j <= 5; ++j) d5_nodes.push_back(e6.roots().simple_root(7 - j));
    const LieEmbedding phi2 = LieEmbedding::subsystem(so10, e6, d5_nodes);

    // phi1: A3 = D3 subsystem of D5 with center node a3; both chirality choices
    const LieEmbedding phi1_a = LieEmbedding::subsystem(
        sl4, so10,
        {so10.roots().simple_root(4), so10.roots().simple_root(3), so10.roots().simple_root(5)});
    const LieEmbedding phi1_b = LieEmbedding::subsystem(
        sl4, so10,
        {so10.roots().simple_root(5), so10.roots().simple_root(3), so10.roots().simple_root(4)});
    const LieEmbedding chain_a = LieEmbedding::compose(phi2, phi1_a);
    const LieEmbedding chain_b = LieEmbedding::compose(phi2, phi1_b);

    const GradedSubspace nilrad = abelian_nilradical(e6, 1);
    claims.push_back(make_claim("e6.nilrad.dim", fam, std::nullopt, nilrad.dim() == 16, "16",
                                std::to_string(nilrad.dim()), "DERIVED",
                                "roots with coefficient 1 at node 1"));
    claims.push_back(make_claim("e6.nilrad.abelian", fam, std::nullopt, is_abelian(nilrad),
                                "true", is_abelian(nilrad) ? "true" : "false", "DERIVED"));

    const Root theta = e6.roots().highest_root();
    {
        const Weight w = phi2.restrict_root(theta);
        const Int dim = weyl_dim(so10.roots(), w);
        claims.push_back(make_claim("e6.levi.weight.spin", fam, std::nullopt, dim == 16, "16",
                                    dim.get_str(), "PAPER",
                                    "theta restricts to the half-spin weight " + w.str()));
    }

    // decompose under both chiralities; gate on the structure, report which
    // chirality realizes the paper's component types
    const Decomposition dec_a = decompose(nilrad, chain_a);
    const Decomposition dec_b = decompose(nilrad, chain_b);
    auto theta_weight = [&](const Decomposition& dec) -> Weight {
        for (const auto& s : dec.summands)
            if (s.hw_root && *s.hw_root == theta) return s.hw_weight;
        throw std::logic_error("theta is not a highest-weight vector");
    };
    const Weight w_first{{1, 0, 0}};
    const bool b_matches = theta_weight(dec_b) == w_first;
    const Decomposition& dec = b_matches ? dec_b : dec_a;
    const LieEmbedding& chain = b_matches ? chain_b : chain_a;
    claims.push_back(reported_claim(
        "e6.chirality", fam, std::nullopt, "theta summand of type C^4",
        std::string("chirality ") + (b_matches ? "B" : "A") +
            " puts theta in a summand of weight " + theta_weight(dec).str(),
        "DERIVED", "which outer D3 node is the first simple root of sl4"));

    {
        bool ok = dec.summands.size() == 4;
        for (const auto& s : dec.summands) ok = ok && s.dim == 4;
        claims.push_back(make_claim("e6.decomp.dims", fam, std::nullopt, ok, "{4,4,4,4}",
                                    dims_str(dec), "PAPER"));
        // dual pairs: the weight multiset is involution-invariant and splits
        // into two reversed pairs
        std::vector<std::vector<long>> ws;
        for (const auto& s : dec.summands) ws.push_back(s.hw_weight.pairings);
        std::sort(ws.begin(), ws.end());
        std::vector<std::vector<long>> rev = ws;
        for (auto& w : rev) std::reverse(w.begin(), w.end());
        std::sort(rev.begin(), rev.end());
        const bool dual = ws == rev && ws.size() == 4 && ws[0] == ws[1] && ws[2] == ws[3] &&
                          ws[0] != ws[2];
        std::ostringstream actual;
        for (const auto& w : ws) actual << Weight{w}.str();
        claims.push_back(make_claim("e6.decomp.dualpairs", fam, std::nullopt, dual,
                                    "two dual pairs", actual.str(), "PAPER",
                                    "weight multiset invariant under the diagram involution"));
    }

    {
        const std::vector<Root> paper = {Root{{1, 2, 2, 3, 2, 1}}, Root{{1, 1, 2, 2, 1, 1}},
                                         Root{{1, 1, 1, 2, 1, 0}}, Root{{1, 0, 1, 1, 0, 0}}};
        std::vector<Root> got;
        bool pure = true;
        for (const auto& s : dec.summands) {
            if (s.hw_root) got.push_back(*s.hw_root);
            else pure = false;
        }
        std::sort(got.begin(), got.end());
        std::vector<Root> paper_sorted = paper;
        std::sort(paper_sorted.begin(), paper_sorted.end());
        const bool match = pure && got == paper_sorted;
        claims.push_back(reported_claim(
            "e6.hwroots", fam, std::nullopt, roots_str(paper), roots_str(got), "PAPER",
            match ? "computed highest-weight roots match the paper's list"
                  : "computed list differs from the paper's list (conjugate embedding / "
                    "convention difference); structural decomposition is the gate"));
    }

    // double-exponential identity
    const Root g1 = Root{{0, 1, 1, 1, 1, 1}}; // a2+a3+a4+a5+a6
    const Root g2 = Root{{0, 1, 0, 1, 1, 0}}; // a2+a4+a5
    const LieElement x_theta = e6.root_vector(theta);
    const LieElement z =
        conjugate_by_exp(e6, {e6.root_vector(-g1), e6.root_vector(-g2)}, x_theta);
    {
        const std::vector<Root> want_roots = {theta, theta - g2, theta - g1, theta - g1 - g2};
        std::set<std::size_t> want;
        bool coeff_ok = true;
        for (const Root& r : want_roots) {
            const std::size_t idx = e6.positive_index(*e6.roots().positive_index(r));
            want.insert(idx);
            const Rat& c = z.c[idx];
            coeff_ok = coeff_ok && (c == 1 || c == -1);
        }
        std::set<std::size_t> got(z.support().begin(), z.support().end());
        claims.push_back(make_claim(
            "e6.expident", fam, std::nullopt, want == got && coeff_ok,
            "support {theta, theta-(a2+a4+a5), theta-(a2+a3+a4+a5+a6), "
            "theta-(a2+a3+2a4+2a5+a6)}, coefficients of absolute value 1",
            support_str(e6, z), "PAPER", "signs are convention-dependent"));
    }
    {
        const auto parts = summand_projection(dec, z);
        bool all_nonzero = parts.size() == 4;
        for (const auto& p : parts) all_nonzero = all_nonzero && !p.is_zero();
        claims.push_back(make_claim("e6.proj.nonzero", fam, std::nullopt, all_nonzero,
                                    "4 nonzero components",
                                    all_nonzero ? "4 nonzero components" : "zero component",
                                    "DERIVED"));
    }
    claims.push_back(make_claim("e6.expident.member", fam, std::nullopt,
                                min_orbit_member(e6, z), "true",
                                min_orbit_member(e6, z) ? "true" : "false", "DERIVED"));

    claims.push_back(make_claim("e6.orbvar.dim", fam, std::nullopt,
                                suborbit_dim(phi2, x_theta) == 11, "11",
                                std::to_string(suborbit_dim(phi2, x_theta)), "PAPER"));
    claims.push_back(make_claim("e6.orbvar.dim.z", fam, std::nullopt,
                                suborbit_dim(chain, z) == 11, "11",
                                std::to_string(suborbit_dim(chain, z)), "PAPER"));

    {
        const Subspace stab = stabilizer_subalgebra(chain, z);
        bool abelian = true, nilpotent = true;
        std::vector<LieElement> basis;
        for (std::size_t i = 0; i < stab.dim(); ++i)
            basis.push_back(sl4.from_coeffs(stab.basis().row(i)));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            nilpotent = nilpotent && is_ad_nilpotent(sl4, basis[i]);
            for (std::size_t j = i + 1; j < basis.size(); ++j)
                abelian = abelian && sl4.bracket(basis[i], basis[j]).is_zero();
        }
        const bool ok = stab.dim() == 4 && abelian && nilpotent;
        std::ostringstream actual;
        actual << "dim " << stab.dim() << ", " << (abelian ? "abelian" : "non-abelian") << ", "
               << (nilpotent ? "nilpotent" : "non-nilpotent");
        claims.push_back(make_claim("e6.stab.profile", fam, std::nullopt, ok,
                                    "dim 4, abelian, nilpotent", actual.str(), "DERIVED",
                                    "profile of Lie(P^u) inside sl4"));
    }

    // iota membership through the calibrated intertwiner
    {
        const std::vector<PartKind> parts = {PartKind::Vector, PartKind::Covector,
                                             PartKind::Covector, PartKind::Vector};
        const MatrixModel defining = an_matrix_model(sl4);
        const ModuleAction act = model_action(sl4, defining, parts);
        const SpecialLinearSample id{RatMatrix::identity(4), RatMatrix::identity(4)};
        const Intertwiner tw = calibrated_intertwiner(dec, act, parts, 4, iota_e6(id), z);

        const std::size_t ns = std::max<std::size_t>(50, opt.samples / 2);
        std::vector<SpecialLinearSample> gs;
        for (std::size_t s = 0; s < ns; ++s) gs.push_back(random_special_linear(4, rng.next(), 8));
        std::vector<int> ok(ns, 0);
        const long nsl = static_cast<long>(ns);
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < nsl; ++i) {
            const LieElement pt = tw.apply(iota_e6(gs[static_cast<std::size_t>(i)]));
            ok[static_cast<std::size_t>(i)] = min_orbit_member(e6, pt) ? 1 : 0;
        }
        std::size_t good = 0;
        for (int v : ok) good += static_cast<std::size_t>(v);
        claims.push_back(make_claim("e6.iota.member", fam, std::nullopt, good == ns,
                                    "all iota images in the orbit closure",
                                    std::to_string(good) + "/" + std::to_string(ns) + " members",
                                    "DERIVED"));
    }

    if (opt.check_prescriptions) {
        // phi1 prescription: a2 -> a1, a4 -> a2, a3 -> a3, others -> 0
        std::vector<std::vector<Rat>> presc(5, std::vector<Rat>(3, Rat(0)));
        presc[1][0] = 1; // a2 -> a1
        presc[3][1] = 1; // a4 -> a2
        presc[2][2] = 1; // a3 -> a3
        const FeasibilityReport fr1 =
            restriction_feasibility({Family::A, 3}, so10.roots(), presc);
        claims.push_back(reported_claim(
            "e6.presc.phi1.feas", fam, std::nullopt, "verdict recorded",
            fr1.verdict_str() + (fr1.witness.empty() ? "" : "; " + fr1.witness), "PAPER",
            "literal pullback prescription audited via the integrality obstruction"));

        // phi2 prescription: a_j -> a_{7-j} for j >= 2, a_1 -> its computed
        // restriction expressed in source root coordinates
        std::vector<std::vector<Rat>> presc2(6, std::vector<Rat>(5, Rat(0)));
        for (int j = 2; j <= 6; ++j) presc2[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(7 - j - 1)] = 1;
        {
            const Weight w1 = phi2.restrict_root(e6.roots().simple_root(1));
            RatMatrix a5(5, 5);
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) a5.at(i, j) = so10.roots().cartan()[i][j];
            RatVec rhs(5);
            for (int i = 0; i < 5; ++i) rhs[static_cast<std::size_t>(i)] = w1.pairings[static_cast<std::size_t>(i)];
            auto sol = solve_linear(a5, rhs);
            presc2[0] = *sol;
        }
        const FeasibilityReport fr2 =
            restriction_feasibility({Family::D, 5}, e6.roots(), presc2);
        claims.push_back(reported_claim(
            "e6.presc.phi2.feas", fam, std::nullopt, "verdict recorded",
            fr2.verdict_str() + (fr2.witness.empty() ? "" : "; " + fr2.witness), "PAPER",
            "subsystem prescription extended by the computed value on a1"));
    }

    return claims;
}

std::vector<ClaimRecord> scenario_e7(const ScenarioOptions& opt) {
    (void)opt;
    std::vector<ClaimRecord> claims;
    const std::string fam = "E7";

    const ChevalleyAlgebra e7 = ChevalleyAlgebra::build(RootSystem::build({Family::E, 7}));
    const ChevalleyAlgebra e6 = ChevalleyAlgebra::build(RootSystem::build({Family::E, 6}));

    claims.push_back(make_claim("e7.build.dim", fam, std::nullopt, e7.dim() == 133, "133",
                                std::to_string(e7.dim()), "DERIVED"));

    std::vector<Root> nodes;
    for (int i = 1; i <= 6; ++i) nodes.push_back(e7.roots().simple_root(i));
    const LieEmbedding phi = LieEmbedding::subsystem(e6, e7, nodes);

    const GradedSubspace nilrad = abelian_nilradical(e7, 7);
    claims.push_back(make_claim("e7.nilrad.dim", fam, std::nullopt, nilrad.dim() == 27, "27",
                                std::to_string(nilrad.dim()), "PAPER",
                                "the 27-dimensional representation"));
    claims.push_back(make_claim("e7.nilrad.abelian", fam, std::nullopt, is_abelian(nilrad),
                                "true", is_abelian(nilrad) ? "true" : "false", "DERIVED"));

    const Decomposition dec = decompose(nilrad, phi);
    {
        const bool ok = dec.summands.size() == 1 && dec.summands[0].dim == 27;
        claims.push_back(make_claim("e7.decomp.irr27", fam, std::nullopt, ok,
                                    "one irreducible summand of dim 27", dims_str(dec), "PAPER",
                                    "highest weight " + (dec.summands.empty()
                                                             ? std::string("?")
                                                             : dec.summands[0].hw_weight.str())));
    }

    const LieElement x_theta = e7.root_vector(e7.roots().highest_root());
    const std::size_t odim = orbit_dim(e7, x_theta);
    claims.push_back(make_claim("e7.minorb.dim", fam, std::nullopt, odim == 34, "34",
                                std::to_string(odim), "DERIVED"));
    const std::size_t sdim = suborbit_dim(phi, x_theta);
    claims.push_back(make_claim("e7.orbvar.dim", fam, std::nullopt, sdim == 17, "17",
                                std::to_string(sdim), "DERIVED"));
    claims.push_back(make_claim("e7.consistency", fam, std::nullopt, 2 * sdim == odim,
                                "2 * orbital variety dim = minimal orbit dim",
                                "2*" + std::to_string(sdim) + " = " + std::to_string(odim),
                                "DERIVED"));

    return claims;
}

VerificationReport run_scenarios(const std::vector<int>& dn_range, bool with_e6, bool with_e7,
                                 const ScenarioOptions& opt) {
    VerificationReport rep;
    rep.seed = opt.seed;
    auto timed = [&](const std::string& name, auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        auto claims = fn();
        const auto t1 = std::chrono::steady_clock::now();
        rep.claims.insert(rep.claims.end(), claims.begin(), claims.end());
        rep.timings_ms.emplace_back(
            name, std::chrono::duration<double, std::milli>(t1 - t0).count());
    };
    for (int n : dn_range)
        timed("dn" + std::to_string(n), [&] { return scenario_dn(n, opt); });
    if (with_e6) timed("e6", [&] { return scenario_e6(opt); });
    if (with_e7) timed("e7", [&] { return scenario_e7(opt); });
    return rep;
}

} // namespace minorb
