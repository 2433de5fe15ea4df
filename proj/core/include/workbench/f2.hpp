#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace workbench {

/// Dense GF(2) vector, bit-packed into 64-bit words.
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t length) : len_(length), words_((length + 63) / 64, 0) {}

    static F2Vector from_bits(const std::vector<int>& bits);

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void xor_with(const F2Vector& other);
    bool is_zero() const;
    /// Index of the lowest set bit, or -1 if the vector is zero.
    long lowest_set() const;
    std::size_t popcount() const;

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

    bool operator==(const F2Vector& other) const { return len_ == other.len_ && words_ == other.words_; }
    bool operator!=(const F2Vector& other) const { return !(*this == other); }
    /// Lexicographic on bit positions 0,1,2,... (0 < 1 per position).
    bool operator<(const F2Vector& other) const;

    std::string to_string() const;

private:
    std::size_t len_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense GF(2) matrix stored as bit-packed rows.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_data_(rows, F2Vector(cols)) {}

    static F2Matrix identity(std::size_t n);
    static F2Matrix from_rows(const std::vector<std::vector<int>>& rows);
    /// Deserialize from bitstring rows, e.g. {"10", "01"}.
    static F2Matrix from_row_strings(std::size_t cols, const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return row_data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { row_data_[r].set(c, v); }

    const F2Vector& row(std::size_t r) const { return row_data_[r]; }
    F2Vector& row(std::size_t r) { return row_data_[r]; }

    void xor_row_into_row(std::size_t src, std::size_t dst) { row_data_[dst].xor_with(row_data_[src]); }

    F2Vector column(std::size_t c) const;
    void set_column(std::size_t c, const F2Vector& v);

    bool is_zero() const;
    F2Matrix transposed() const;

    /// Matrix applied to a column vector: length rows() result.
    F2Vector apply(const F2Vector& x) const;
    /// Composite this * rhs (this.cols == rhs.rows).
    F2Matrix multiply(const F2Matrix& rhs) const;
    F2Matrix plus(const F2Matrix& rhs) const;

    /// Stack vertically: [this; below]. Column counts must agree.
    F2Matrix stacked_above(const F2Matrix& below) const;
    /// Concatenate horizontally: [this | right]. Row counts must agree.
    F2Matrix beside(const F2Matrix& right) const;

    bool operator==(const F2Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && row_data_ == other.row_data_;
    }
    bool operator!=(const F2Matrix& other) const { return !(*this == other); }
    bool operator<(const F2Matrix& other) const;

    std::vector<std::string> row_strings() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F2Vector> row_data_;
};

std::size_t rank(const F2Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column, ordered by free-column index.
std::vector<F2Vector> kernel_basis(const F2Matrix& m);
/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b);

/// Row-echelon factorization of a fixed matrix, reused across many solves.
class GaussSolver {
public:
    explicit GaussSolver(const F2Matrix& m);

    std::size_t rank() const { return pivot_cols_.size(); }
    const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }

    std::optional<F2Vector> solve(const F2Vector& b) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    F2Matrix reduced_;       // RREF of m
    F2Matrix transform_;     // transform_ * m == reduced_
    std::vector<std::size_t> pivot_cols_;
};

/// Columns of `vectors` assembled into a matrix (all lengths must agree).
F2Matrix matrix_from_columns(std::size_t length, const std::vector<F2Vector>& vectors);

}  // namespace workbench
