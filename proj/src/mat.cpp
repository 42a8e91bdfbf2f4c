#include "llab/mat.hpp"

namespace llab {

Mat::Mat(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw input_error("ragged matrix initializer");
        for (long long v : r) data_.emplace_back(v);
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

std::vector<Rat> Mat::row(std::size_t i) const {
    return std::vector<Rat>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void Mat::set_row(std::size_t i, const std::vector<Rat>& values) {
    if (values.size() != cols_) throw input_error("row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = values[j];
}

std::vector<Rat> Mat::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw input_error("matrix-vector dimension mismatch");
    std::vector<Rat> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat acc;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw input_error("matrix product dimension mismatch");
    Mat out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b.at(k, j).is_zero()) out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

bool Mat::is_zero() const {
    for (const Rat& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

RrefResult rref(const Mat& m) {
    Mat a = m;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a.at(pivot, j), a.at(rank, j));
        Rat inv = Rat(1) / a.at(rank, col);
        for (std::size_t j = col; j < a.cols(); ++j) a.at(rank, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == rank || a.at(i, col).is_zero()) continue;
            Rat f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) -= f * a.at(rank, j);
        }
        ++rank;
    }
    return {std::move(a), rank};
}

Subspace Subspace::span(std::size_t ambient_dim, const Mat& rows) {
    if (rows.cols() != ambient_dim && rows.rows() != 0)
        throw input_error("spanning rows do not match ambient dimension");
    auto [reduced, rank] = rref(rows);
    Subspace s(ambient_dim);
    Mat basis(rank, ambient_dim);
    for (std::size_t i = 0; i < rank; ++i) basis.set_row(i, reduced.row(i));
    s.basis_ = std::move(basis);
    return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<std::vector<Rat>>& rows) {
    Mat m(rows.size(), ambient_dim);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return span(ambient_dim, m);
}

Subspace Subspace::full(std::size_t ambient_dim) {
    return span(ambient_dim, Mat::identity(ambient_dim));
}

bool Subspace::contains(const std::vector<Rat>& v) const {
    if (v.size() != ambient_) throw input_error("vector does not match ambient dimension");
    // Reduce v against the RREF basis; contained iff the residue is zero.
    std::vector<Rat> res = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t lead = 0;
        while (lead < ambient_ && basis_.at(i, lead).is_zero()) ++lead;
        if (lead == ambient_ || res[lead].is_zero()) continue;
        Rat f = res[lead]; // pivot entry is 1
        for (std::size_t j = lead; j < ambient_; ++j)
            res[j] -= f * basis_.at(i, j);
    }
    for (const Rat& x : res)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw input_error("ambient dimension mismatch");
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw input_error("inverse requires a square matrix");
    const std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rat(1);
    }
    const Mat red = rref(aug).reduced;
    // Invertible iff the left block reduced to the identity (the augmented
    // half can contribute pivots of its own when m is singular).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (red.at(i, j) != (i == j ? Rat(1) : Rat(0)))
                throw input_error("inverse of a singular matrix");
    Mat out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = red.at(i, n + j);
    return out;
}

Subspace kernel_basis(const Mat& m) {
    auto [red, rank] = rref(m);
    std::size_t n = m.cols();
    // Pivot column of each of the rank rows.
    std::vector<std::size_t> pivot_col(rank);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t j = 0;
        while (j < n && red.at(i, j).is_zero()) ++j;
        pivot_col[i] = j;
        is_pivot[j] = true;
    }
    std::vector<std::vector<Rat>> basis;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rat> v(n);
        v[j] = Rat(1);
        for (std::size_t i = 0; i < rank; ++i)
            v[pivot_col[i]] = -red.at(i, j);
        basis.push_back(std::move(v));
    }
    return Subspace::span(n, basis);
}

Subspace image(const Mat& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw input_error("map domain mismatch");
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < s.dim(); ++i)
        rows.push_back(m.apply(s.basis().row(i)));
    return Subspace::span(m.rows(), rows);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw input_error("ambient dimension mismatch");
    Mat stacked(a.dim() + b.dim(), a.ambient_dim());
    for (std::size_t i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis().row(i));
    for (std::size_t i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis().row(i));
    return Subspace::span(a.ambient_dim(), stacked);
}

namespace {

// Rows span the annihilator of s under the standard pairing, so
// s = { x : A x = 0 }.
Mat annihilator(const Subspace& s) {
    Subspace k = kernel_basis(s.basis());
    Mat out(k.dim(), s.ambient_dim());
    for (std::size_t i = 0; i < k.dim(); ++i) out.set_row(i, k.basis().row(i));
    return out;
}

} // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw input_error("ambient dimension mismatch");
    Mat na = annihilator(a);
    Mat nb = annihilator(b);
    Mat stacked(na.rows() + nb.rows(), a.ambient_dim());
    for (std::size_t i = 0; i < na.rows(); ++i) stacked.set_row(i, na.row(i));
    for (std::size_t i = 0; i < nb.rows(); ++i) stacked.set_row(na.rows() + i, nb.row(i));
    return kernel_basis(stacked);
}

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw input_error("ambient dimension mismatch");
    SubspaceOps out{sum(a, b), intersect(a, b), a.contains(b), false};
    out.direct_sum = out.intersection.dim() == 0;
    return out;
}

} // namespace llab
