#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "rvf/mpoly.hpp"

namespace rvf {

/// Dense matrix over an exact field (Q or F_p).
template <class Ring>
class Matrix {
public:
    using Elem = typename Ring::Elem;

    Matrix(Ring ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, ring_.zero()) {}

    static Matrix identity(const Ring& ring, std::size_t n) {
        Matrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
        return m;
    }

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: size mismatch");
        Matrix r(a.ring_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
                }
            }
        }
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix r(a.ring_, a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    Matrix pow(std::uint64_t e) const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix::pow: not square");
        Matrix base = *this;
        Matrix r = identity(ring_, rows_);
        while (e > 0) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    /// Row-reduce in place; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t sel = row;
            while (sel < rows_ && ring_.is_zero(at(sel, col))) ++sel;
            if (sel == rows_) continue;
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
            const Elem inv = ring_.inv(at(row, col));
            for (std::size_t j = col; j < cols_; ++j) at(row, j) = at(row, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || ring_.is_zero(at(i, col))) continue;
                const Elem f = at(i, col);
                for (std::size_t j = col; j < cols_; ++j) at(i, j) = at(i, j) - f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    /// Basis of the right kernel, one vector per free column.
    std::vector<std::vector<Elem>> kernel_basis() const {
        Matrix m = *this;
        const auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Elem>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Elem> v(cols_, ring_.zero());
            v[free] = ring_.one();
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                v[pivots[r]] = -m.at(r, free);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix::inverse: not square");
        Matrix aug(ring_, rows_, 2 * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = ring_.one();
        }
        const auto pivots = aug.rref();
        if (pivots.size() < rows_) return std::nullopt;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (pivots[i] != i) return std::nullopt;
        }
        Matrix inv(ring_, rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
        }
        return inv;
    }

private:
    Ring ring_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

template <class Ring>
struct JacobianAtPoint {
    std::size_t rank = 0;
    std::vector<std::vector<typename Ring::Elem>> kernel;  // basis when rank < nvars
};

/// Rank of the Jacobian matrix of the generators at a point, with a kernel
/// basis (the tangent space of the scheme cut out by the generators).
template <class Ring>
JacobianAtPoint<Ring> jacobian_rank_at_point(const std::vector<MPoly<Ring>>& gens,
                                             const std::vector<typename Ring::Elem>& point) {
    if (gens.empty()) throw std::invalid_argument("jacobian_rank_at_point: no generators");
    const std::size_t n = gens.front().nvars();
    Matrix<Ring> jac(gens.front().ring(), gens.size(), n);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            jac.at(i, j) = gens[i].partial_derivative(j).evaluate(point);
        }
    }
    JacobianAtPoint<Ring> out;
    out.rank = jac.rank();
    out.kernel = jac.kernel_basis();
    return out;
}

}  // namespace rvf
