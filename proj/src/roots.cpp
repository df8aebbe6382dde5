#include "minorb/roots.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace minorb {

std::string DynkinType::name() const {
    const char* f = family == Family::A ? "A" : family == Family::D ? "D" : "E";
    return f + std::to_string(rank);
}

int Root::height() const {
    int h = 0;
    for (int c : coeffs) h += c;
    return h;
}

Root Root::operator-() const {
    Root r = *this;
    for (int& c : r.coeffs) c = -c;
    return r;
}

Root operator+(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

Root operator-(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

std::string Root::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ",";
        os << coeffs[i];
    }
    os << ")";
    return os.str();
}

bool Weight::dominant() const {
    for (long p : pairings)
        if (p < 0) return false;
    return true;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < pairings.size(); ++i) {
        if (i) os << ",";
        os << pairings[i];
    }
    os << "]";
    return os.str();
}

Weight fundamental_weight(int rank, int node) {
    Weight w;
    w.pairings.assign(rank, 0);
    w.pairings[node - 1] = 1;
    return w;
}

std::vector<std::vector<int>> cartan_matrix(DynkinType t) {
    const int n = t.rank;
    std::vector<std::pair<int, int>> edges;
    switch (t.family) {
    case Family::A:
        if (n < 1) throw std::invalid_argument("A_n needs rank >= 1");
        for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
        break;
    case Family::D:
        if (n < 3) throw std::invalid_argument("D_n needs rank >= 3");
        for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(n - 2, n);
        break;
    case Family::E:
        if (n != 6 && n != 7) throw std::invalid_argument("E_n supported for rank 6, 7");
        edges = {{1, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}};
        if (n == 7) edges.emplace_back(6, 7);
        break;
    }
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (auto [i, j] : edges) {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    }
    return a;
}

RootSystem RootSystem::build(DynkinType t) {
    RootSystem rs;
    rs.type_ = t;
    rs.cartan_ = cartan_matrix(t);
    const int n = t.rank;

    // Closure under root strings, level by level: beta + alpha_i is a root
    // iff q = p - <beta, alpha_i^vee> >= 1, where p is the length of the
    // descending string beta, beta - alpha_i, ...
    std::map<std::vector<int>, bool> known;
    std::vector<Root> level;
    for (int i = 0; i < n; ++i) {
        Root a;
        a.coeffs.assign(n, 0);
        a.coeffs[i] = 1;
        known[a.coeffs] = true;
        level.push_back(a);
    }
    std::vector<Root> all = level;
    while (!level.empty()) {
        std::vector<Root> next;
        for (const Root& b : level) {
            for (int i = 0; i < n; ++i) {
                Root cand = b;
                cand.coeffs[i] += 1;
                if (known.count(cand.coeffs)) continue;
                long pairing = 0;
                for (int j = 0; j < n; ++j) pairing += rs.cartan_[i][j] * b.coeffs[j];
                int p = 0;
                Root down = b;
                for (;;) {
                    down.coeffs[i] -= 1;
                    bool pos = true, nonzero = false;
                    for (int c : down.coeffs) {
                        if (c < 0) pos = false;
                        if (c != 0) nonzero = true;
                    }
                    if (pos && nonzero && known.count(down.coeffs)) ++p;
                    else break;
                }
                if (p - pairing >= 1) {
                    known[cand.coeffs] = true;
                    next.push_back(cand);
                }
            }
        }
        for (const Root& r : next) all.push_back(r);
        level = std::move(next);
    }

    std::sort(all.begin(), all.end(), [](const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a.coeffs < b.coeffs;
    });
    rs.positives_ = std::move(all);
    for (std::size_t i = 0; i < rs.positives_.size(); ++i)
        rs.index_[rs.positives_[i].coeffs] = i;
    return rs;
}

const Root& RootSystem::highest_root() const { return positives_.back(); }

const Root& RootSystem::simple_root(int node) const { return positives_[simple_index(node)]; }

std::size_t RootSystem::simple_index(int node) const {
    if (node < 1 || node > type_.rank) throw std::invalid_argument("node out of range");
    std::vector<int> unit(static_cast<std::size_t>(type_.rank), 0);
    unit[static_cast<std::size_t>(node - 1)] = 1;
    return index_.at(unit);
}

bool RootSystem::is_positive_root(const Root& r) const { return index_.count(r.coeffs) > 0; }

std::optional<std::size_t> RootSystem::positive_index(const Root& r) const {
    auto it = index_.find(r.coeffs);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Root> RootSystem::roots_with_coefficient(int node, int c) const {
    if (node < 1 || node > type_.rank) throw std::invalid_argument("node out of range");
    std::vector<Root> out;
    for (const Root& r : positives_)
        if (r.coeffs[node - 1] == c) out.push_back(r);
    return out;
}

long RootSystem::coroot_pairing(const Root& r, int node) const {
    long v = 0;
    for (int j = 0; j < type_.rank; ++j) v += cartan_[node - 1][j] * r.coeffs[j];
    return v;
}

Weight RootSystem::root_weight(const Root& r) const {
    Weight w;
    w.pairings.resize(type_.rank);
    for (int i = 1; i <= type_.rank; ++i) w.pairings[i - 1] = coroot_pairing(r, i);
    return w;
}

std::string RootSystem::dump_json() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < positives_.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < positives_[i].coeffs.size(); ++j) {
            if (j) os << ",";
            os << positives_[i].coeffs[j];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

Int weyl_dim(const RootSystem& rs, const Weight& lam) {
    if (static_cast<int>(lam.pairings.size()) != rs.rank())
        throw std::invalid_argument("weight rank mismatch");
    if (!lam.dominant()) throw std::invalid_argument("weyl_dim needs a dominant weight");
    // <lam + rho, beta^vee> = sum_i c_i (lam_i + 1), <rho, beta^vee> = height
    Rat prod(1);
    for (const Root& b : rs.positive_roots()) {
        long num = 0;
        for (int i = 0; i < rs.rank(); ++i) num += b.coeffs[i] * (lam.pairings[i] + 1);
        Rat term(num, b.height());
        term.canonicalize(); // two-argument mpq_class does not canonicalize
        prod *= term;
    }
    if (prod.get_den() != 1) throw std::logic_error("weyl_dim: non-integer product");
    return prod.get_num();
}

} // namespace minorb
