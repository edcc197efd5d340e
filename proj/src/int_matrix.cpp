#include "oddleech/int_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace oddleech {

Integer dot(std::span<const Integer> x, std::span<const Integer> y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
    Integer acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != 0 && y[i] != 0) acc += x[i] * y[i];
    }
    return acc;
}

IntVector make_vector(std::initializer_list<long> values) {
    IntVector v;
    v.reserve(values.size());
    for (long x : values) v.emplace_back(x);
    return v;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
        m.set_row(i, rows[i]);
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = from_int64(rows[i][j]);
    }
    return m;
}

IntVector IntMatrix::row_vector(std::size_t i) const {
    auto r = row(i);
    return IntVector(r.begin(), r.end());
}

void IntMatrix::set_row(std::size_t i, std::span<const Integer> values) {
    if (values.size() != cols_) throw std::invalid_argument("set_row: dimension mismatch");
    std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c).swap((*this)(j, c));
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Integer& b = rhs(k, j);
                if (b != 0) out(i, j) += a * b;
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    IntMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    IntMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-() const { return scaled(Integer(-1)); }

IntMatrix IntMatrix::scaled(const Integer& factor) const {
    IntMatrix out = *this;
    for (auto& x : out.data_) x *= factor;
    return out;
}

IntMatrix IntMatrix::reduced_mod(const Integer& modulus) const {
    IntMatrix out = *this;
    for (auto& x : out.data_) x = mod_floor(x, modulus);
    return out;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw std::out_of_range("row_block out of range");
    IntMatrix out(count, cols_);
    for (std::size_t i = 0; i < count; ++i) out.set_row(i, row(first + i));
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_identity_multiple(const Integer& factor) const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? factor : Integer(0))) return false;
    return true;
}

bool IntMatrix::is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_int64_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = to_int64((*this)(i, j));
    return out;
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column mismatch");
    IntMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i) out.set_row(i, top.row(i));
    for (std::size_t i = 0; i < bottom.rows(); ++i) out.set_row(top.rows() + i, bottom.row(i));
    return out;
}

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right) {
    if (left.rows() != right.rows()) throw std::invalid_argument("hstack: row mismatch");
    IntMatrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < left.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
    }
    return out;
}

IntVector row_times(std::span<const Integer> x, const IntMatrix& m) {
    if (x.size() != m.rows()) throw std::invalid_argument("row_times: dimension mismatch");
    IntVector out(m.cols(), Integer(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
    }
    return out;
}

IntVector times_column(const IntMatrix& m, std::span<const Integer> x) {
    if (x.size() != m.cols()) throw std::invalid_argument("times_column: dimension mismatch");
    IntVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(m.row(i), x);
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

}  // namespace oddleech
