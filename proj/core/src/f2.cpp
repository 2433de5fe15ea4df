#include "workbench/f2.hpp"

#include <bit>
#include <stdexcept>

namespace workbench {

F2Vector F2Vector::from_bits(const std::vector<int>& bits) {
    F2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] & 1) v.set(i, true);
    return v;
}

void F2Vector::xor_with(const F2Vector& other) {
    if (len_ != other.len_) throw std::invalid_argument("F2Vector::xor_with: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

bool F2Vector::is_zero() const {
    for (uint64_t w : words_)
        if (w) return false;
    return true;
}

long F2Vector::lowest_set() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return long(i * 64 + std::countr_zero(words_[i]));
    return -1;
}

std::size_t F2Vector::popcount() const {
    std::size_t n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
}

bool F2Vector::operator<(const F2Vector& other) const {
    if (len_ != other.len_) return len_ < other.len_;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] == other.words_[i]) continue;
        uint64_t diff = words_[i] ^ other.words_[i];
        uint64_t low = diff & (~diff + 1);
        return (words_[i] & low) == 0;
    }
    return false;
}

std::string F2Vector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    F2Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("F2Matrix::from_rows: ragged rows");
        m.row_data_[i] = F2Vector::from_bits(rows[i]);
    }
    return m;
}

F2Matrix F2Matrix::from_row_strings(std::size_t cols, const std::vector<std::string>& rows) {
    F2Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("F2Matrix::from_row_strings: bad row length");
        for (std::size_t j = 0; j < cols; ++j)
            if (rows[i][j] == '1') m.set(i, j, true);
    }
    return m;
}

F2Vector F2Matrix::column(std::size_t c) const {
    F2Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r, true);
    return v;
}

void F2Matrix::set_column(std::size_t c, const F2Vector& v) {
    if (v.size() != rows_) throw std::invalid_argument("F2Matrix::set_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) set(r, c, v.get(r));
}

bool F2Matrix::is_zero() const {
    for (const auto& r : row_data_)
        if (!r.is_zero()) return false;
    return true;
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

F2Vector F2Matrix::apply(const F2Vector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("F2Matrix::apply: dimension mismatch");
    F2Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        const auto& rw = row_data_[r].words();
        const auto& xw = x.words();
        for (std::size_t i = 0; i < rw.size(); ++i) acc ^= rw[i] & xw[i];
        if (std::popcount(acc) & 1) y.set(r, true);
    }
    return y;
}

F2Matrix F2Matrix::multiply(const F2Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("F2Matrix::multiply: dimension mismatch");
    F2Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        F2Vector& dst = out.row_data_[r];
        const F2Vector& src = row_data_[r];
        for (std::size_t k = 0; k < cols_; ++k)
            if (src.get(k)) dst.xor_with(rhs.row_data_[k]);
    }
    return out;
}

F2Matrix F2Matrix::plus(const F2Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("F2Matrix::plus: shape mismatch");
    F2Matrix out = *this;
    for (std::size_t r = 0; r < rows_; ++r) out.row_data_[r].xor_with(rhs.row_data_[r]);
    return out;
}

F2Matrix F2Matrix::stacked_above(const F2Matrix& below) const {
    if (cols_ != below.cols_) throw std::invalid_argument("F2Matrix::stacked_above: column mismatch");
    F2Matrix out(rows_ + below.rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) out.row_data_[r] = row_data_[r];
    for (std::size_t r = 0; r < below.rows_; ++r) out.row_data_[rows_ + r] = below.row_data_[r];
    return out;
}

F2Matrix F2Matrix::beside(const F2Matrix& right) const {
    if (rows_ != right.rows_) throw std::invalid_argument("F2Matrix::beside: row mismatch");
    F2Matrix out(rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) out.set(r, c, true);
        for (std::size_t c = 0; c < right.cols_; ++c)
            if (right.get(r, c)) out.set(r, cols_ + c, true);
    }
    return out;
}

bool F2Matrix::operator<(const F2Matrix& other) const {
    if (rows_ != other.rows_) return rows_ < other.rows_;
    if (cols_ != other.cols_) return cols_ < other.cols_;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (row_data_[r] == other.row_data_[r]) continue;
        return row_data_[r] < other.row_data_[r];
    }
    return false;
}

std::vector<std::string> F2Matrix::row_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (const auto& r : row_data_) out.push_back(r.to_string());
    return out;
}

namespace {

// In-place elimination to reduced row echelon form.  Pivot choice is the
// lowest untouched column, then the first row carrying a 1 in it, so the
// result does not depend on anything but the input matrix.
std::vector<std::size_t> rref_in_place(F2Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
        std::size_t pr = next_row;
        while (pr < m.rows() && !m.get(pr, col)) ++pr;
        if (pr == m.rows()) continue;
        if (pr != next_row) std::swap(m.row(pr), m.row(next_row));
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != next_row && m.get(r, col)) m.xor_row_into_row(next_row, r);
        pivots.push_back(col);
        ++next_row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const F2Matrix& m) {
    F2Matrix work = m;
    return rref_in_place(work).size();
}

std::vector<F2Vector> kernel_basis(const F2Matrix& m) {
    F2Matrix work = m;
    std::vector<std::size_t> pivots = rref_in_place(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<F2Vector> basis;
    basis.reserve(m.cols() - pivots.size());
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        F2Vector v(m.cols());
        v.set(free_col, true);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (work.get(r, free_col)) v.set(pivots[r], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b) {
    GaussSolver solver(m);
    return solver.solve(b);
}

GaussSolver::GaussSolver(const F2Matrix& m) : rows_(m.rows()), cols_(m.cols()) {
    F2Matrix work = m.beside(F2Matrix::identity(rows_));
    // Eliminate only on the first cols_ columns; the identity block records
    // the row operations.
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < cols_ && next_row < rows_; ++col) {
        std::size_t pr = next_row;
        while (pr < rows_ && !work.get(pr, col)) ++pr;
        if (pr == rows_) continue;
        if (pr != next_row) std::swap(work.row(pr), work.row(next_row));
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != next_row && work.get(r, col)) work.xor_row_into_row(next_row, r);
        pivot_cols_.push_back(col);
        ++next_row;
    }
    reduced_ = F2Matrix(rows_, cols_);
    transform_ = F2Matrix(rows_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_ + rows_; ++c)
            if (work.get(r, c)) {
                if (c < cols_)
                    reduced_.set(r, c, true);
                else
                    transform_.set(r, c - cols_, true);
            }
}

std::optional<F2Vector> GaussSolver::solve(const F2Vector& b) const {
    if (b.size() != rows_) throw std::invalid_argument("GaussSolver::solve: dimension mismatch");
    F2Vector c = transform_.apply(b);
    F2Vector x(cols_);
    for (std::size_t r = 0; r < pivot_cols_.size(); ++r)
        if (c.get(r)) x.set(pivot_cols_[r], true);
    for (std::size_t r = pivot_cols_.size(); r < rows_; ++r)
        if (c.get(r)) return std::nullopt;
    return x;
}

F2Matrix matrix_from_columns(std::size_t length, const std::vector<F2Vector>& vectors) {
    F2Matrix m(length, vectors.size());
    for (std::size_t c = 0; c < vectors.size(); ++c) {
        if (vectors[c].size() != length)
            throw std::invalid_argument("matrix_from_columns: length mismatch");
        m.set_column(c, vectors[c]);
    }
    return m;
}

}  // namespace workbench
