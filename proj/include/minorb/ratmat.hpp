#pragma once

// Dense exact linear algebra over the rationals. Everything downstream
// (structure constants, adjoint ranks, intertwiners) reduces to these few
// kernels. Multiplication and row elimination are OpenMP-parallel with a
// deterministic pivot rule; serial reference kernels live in minorb::ref and
// the test suite checks the two agree entry for entry.

#include "minorb/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace minorb {

using RatVec = std::vector<Rat>;

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVec>& rows);
    static RatMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows);
    static RatMatrix column(const RatVec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    RatVec row(std::size_t i) const;
    RatVec col(std::size_t j) const;

    bool is_zero() const;
    RatMatrix transpose() const;

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const; // parallel kernel
    RatMatrix scaled(const Rat& c) const;
    bool operator==(const RatMatrix& o) const = default;

    // matrix * column vector
    RatVec apply(const RatVec& v) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

struct RrefResult {
    RatMatrix mat;
    std::vector<std::size_t> pivots; // strictly increasing pivot columns
};

// Unique reduced row-echelon form; pivot = first row with nonzero entry in
// column order, so the output is reproducible across runs and thread counts.
RrefResult rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

// Row-reduced span; the canonical representation of a linear subspace.
class Subspace {
public:
    static Subspace zero(std::size_t ambient);
    static Subspace span_of_rows(const RatMatrix& rows);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; } // RREF rows, no zero rows

    bool contains(const RatVec& v) const;

private:
    std::size_t ambient_ = 0;
    RatMatrix basis_;
};

Subspace kernel_basis(const RatMatrix& m);

// One solution of m x = b when consistent.
std::optional<RatVec> solve_linear(const RatMatrix& m, const RatVec& b);

// vector helpers shared across modules
bool is_zero_vec(const RatVec& v);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rat& c);

namespace ref {
// serial reference kernels kept for differential tests and the benchmark
RatMatrix mul(const RatMatrix& a, const RatMatrix& b);
RrefResult rref(const RatMatrix& m);
} // namespace ref

} // namespace minorb
