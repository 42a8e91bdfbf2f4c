#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "llab/rat.hpp"

namespace llab {

// Dense rational matrix, row-major. Rectangular; dimensions may be zero.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<long long>> rows);

    static Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rat> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Rat>& values);

    // Matrix applied to a column vector of length cols().
    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    friend Mat operator*(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b) = default;

    bool is_zero() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

struct RrefResult {
    Mat reduced;
    std::size_t rank = 0;
};

// Reduced row-echelon form (Gauss-Jordan with exact pivots); idempotent on
// its own output. Zero rows sink to the bottom.
RrefResult rref(const Mat& m);

// Subspace of Q^n in canonical form: basis rows are the RREF of any spanning
// set with zero rows dropped, so subspace equality is plain data equality.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
    // Canonicalizes: rows need not be independent.
    static Subspace span(std::size_t ambient_dim, const Mat& rows);
    static Subspace span(std::size_t ambient_dim, const std::vector<std::vector<Rat>>& rows);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }

    bool contains(const std::vector<Rat>& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_;
    Mat basis_; // RREF, no zero rows
};

// Inverse of a square invertible matrix (input error otherwise).
Mat inverse(const Mat& m);

// Kernel of m as a map Q^cols -> Q^rows; dim = cols - rank.
Subspace kernel_basis(const Mat& m);

// Image of the subspace under the linear map (columns of m are images of
// coordinate vectors; m.cols() must equal s.ambient_dim()).
Subspace image(const Mat& m, const Subspace& s);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

struct SubspaceOps {
    Subspace sum;
    Subspace intersection;
    bool contains = false;   // a contains b
    bool direct_sum = false; // intersection is zero
};

// Bundle of the four binary queries; ambient dimensions must match.
SubspaceOps subspace_ops(const Subspace& a, const Subspace& b);

} // namespace llab
