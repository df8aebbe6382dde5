#include "minorb/ratmat.hpp"

#include <stdexcept>

namespace minorb {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) return RatMatrix();
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<RatVec> rs;
    for (const auto& r : rows) {
        RatVec v;
        for (long x : r) v.emplace_back(x);
        rs.push_back(std::move(v));
    }
    return from_rows(rs);
}

RatMatrix RatMatrix::column(const RatVec& v) {
    RatMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

RatVec RatMatrix::row(std::size_t i) const {
    RatVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

RatVec RatMatrix::col(std::size_t j) const {
    RatVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    RatMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    RatMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    RatMatrix r(rows_, o.cols_);
    const long n = static_cast<long>(rows_);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        Rat acc;
        for (std::size_t j = 0; j < o.cols_; ++j) {
            acc = 0;
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k) != 0 && o.at(k, j) != 0) acc += at(i, k) * o.at(k, j);
            }
            r.at(i, j) = acc;
        }
    }
    return r;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
}

RatVec RatMatrix::apply(const RatVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("shape mismatch");
    RatVec r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat acc = 0;
        for (std::size_t k = 0; k < cols_; ++k)
            if (at(i, k) != 0 && v[k] != 0) acc += at(i, k) * v[k];
        r[i] = acc;
    }
    return r;
}

namespace {

// Gauss-Jordan with the fixed pivot rule. Row updates at each pivot step are
// independent, which is where the parallel loop sits.
RrefResult rref_impl(const RatMatrix& m, bool parallel) {
    RatMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < a.cols() && prow < a.rows(); ++col) {
        std::size_t sel = a.rows();
        for (std::size_t i = prow; i < a.rows(); ++i) {
            if (a.at(i, col) != 0) { sel = i; break; }
        }
        if (sel == a.rows()) continue;
        if (sel != prow)
            for (std::size_t j = 0; j < a.cols(); ++j) swap(a.at(prow, j), a.at(sel, j));
        const Rat inv = Rat(1) / a.at(prow, col);
        for (std::size_t j = col; j < a.cols(); ++j) a.at(prow, j) *= inv;
        const long nrows = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (long i = 0; i < nrows; ++i) {
            if (static_cast<std::size_t>(i) == prow) continue;
            const Rat f = a.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) -= f * a.at(prow, j);
        }
        pivots.push_back(col);
        ++prow;
    }
    return {std::move(a), std::move(pivots)};
}

} // namespace

RrefResult rref(const RatMatrix& m) { return rref_impl(m, true); }

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

Subspace Subspace::zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = RatMatrix(0, ambient);
    return s;
}

Subspace Subspace::span_of_rows(const RatMatrix& rows) {
    Subspace s;
    s.ambient_ = rows.cols();
    RrefResult r = rref(rows);
    RatMatrix b(r.pivots.size(), rows.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) b.at(i, j) = r.mat.at(i, j);
    s.basis_ = std::move(b);
    return s;
}

bool Subspace::contains(const RatVec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("ambient mismatch");
    // reduce v against the RREF basis rows
    RatVec w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t p = 0;
        while (p < ambient_ && basis_.at(i, p) == 0) ++p;
        if (p == ambient_) continue;
        if (w[p] != 0) {
            const Rat f = w[p]; // pivot entry is 1
            for (std::size_t j = p; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
        }
    }
    return is_zero_vec(w);
}

Subspace kernel_basis(const RatMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVec v(m.cols(), Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat.at(i, free);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Subspace::zero(m.cols());
    return Subspace::span_of_rows(RatMatrix::from_rows(basis));
}

std::optional<RatVec> solve_linear(const RatMatrix& m, const RatVec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    for (std::size_t p : r.pivots)
        if (p == m.cols()) return std::nullopt; // inconsistent
    RatVec x(m.cols(), Rat(0));
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.mat.at(i, m.cols());
    return x;
}

bool is_zero_vec(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

RatVec add(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec scale(const RatVec& a, const Rat& c) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

namespace ref {

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
    RatMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Rat acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

RrefResult rref(const RatMatrix& m) { return rref_impl(m, false); }

} // namespace ref

} // namespace minorb
