#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "oddleech/integer.hpp"

namespace oddleech {

using IntVector = std::vector<Integer>;

Integer dot(std::span<const Integer> x, std::span<const Integer> y);

IntVector make_vector(std::initializer_list<long> values);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    IntVector row_vector(std::size_t i) const;
    void set_row(std::size_t i, std::span<const Integer> values);
    void swap_rows(std::size_t i, std::size_t j);

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    IntMatrix scaled(const Integer& factor) const;
    /// Entrywise least non-negative residues.
    IntMatrix reduced_mod(const Integer& modulus) const;
    /// Rows [first, first + count).
    IntMatrix row_block(std::size_t first, std::size_t count) const;

    bool operator==(const IntMatrix& rhs) const = default;

    bool is_zero() const;
    bool is_identity_multiple(const Integer& factor) const;
    bool is_symmetric() const;

    std::vector<std::vector<std::int64_t>> to_int64_rows() const;

 private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Rows of top followed by rows of bottom (equal column counts).
IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
/// Columns of left followed by columns of right (equal row counts).
IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);

/// x·M for a row vector x.
IntVector row_times(std::span<const Integer> x, const IntMatrix& m);
/// M·xᵀ as a vector.
IntVector times_column(const IntMatrix& m, std::span<const Integer> x);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace oddleech
