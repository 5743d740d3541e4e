#include <colorhom/matrix.hpp>

#include <stdexcept>

namespace colorhom {

ExactMatrix::ExactMatrix(std::int64_t rows, std::int64_t cols, std::int64_t root_order)
    : rows_(rows), cols_(cols), root_order_(root_order),
      data_(static_cast<std::size_t>(rows * cols), Scalar::zero(root_order)) {
    if (rows < 0 || cols < 0) throw std::runtime_error("matrix shape must be non-negative");
}

ExactMatrix ExactMatrix::identity(std::int64_t n, std::int64_t root_order) {
    ExactMatrix m(n, n, root_order);
    for (std::int64_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(root_order);
    return m;
}

Scalar& ExactMatrix::at(std::int64_t r, std::int64_t c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    return data_[static_cast<std::size_t>(r * cols_ + c)];
}

const Scalar& ExactMatrix::at(std::int64_t r, std::int64_t c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    return data_[static_cast<std::size_t>(r * cols_ + c)];
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && root_order_ == rhs.root_order_ &&
           data_ == rhs.data_;
}

bool ExactMatrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::runtime_error("matrix shape mismatch in +");
    ExactMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += rhs.data_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::runtime_error("matrix shape mismatch in -");
    ExactMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= rhs.data_[i];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::runtime_error("matrix shape mismatch in *");
    ExactMatrix r(rows_, rhs.cols_, root_order_);
    for (std::int64_t i = 0; i < rows_; ++i)
        for (std::int64_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::int64_t j = 0; j < rhs.cols_; ++j) {
                const Scalar& b = rhs.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
    ExactMatrix r = *this;
    for (auto& s : r.data_) s *= c;
    return r;
}

RankInfo rank_kernel(const ExactMatrix& m, PivotOrder order) {
    ExactMatrix a = m;
    const std::int64_t rows = a.rows(), cols = a.cols();
    std::int64_t pivot_row = 0;
    std::int64_t rank = 0;
    for (std::int64_t step = 0; step < cols && pivot_row < rows; ++step) {
        std::int64_t col = order == PivotOrder::Forward ? step : cols - 1 - step;
        // Forward scans from the top of the remaining rows, Backward from the
        // bottom; rank must come out the same either way.
        std::int64_t found = -1;
        if (order == PivotOrder::Forward) {
            for (std::int64_t r = pivot_row; r < rows; ++r)
                if (!a.at(r, col).is_zero()) { found = r; break; }
        } else {
            for (std::int64_t r = rows - 1; r >= pivot_row; --r)
                if (!a.at(r, col).is_zero()) { found = r; break; }
        }
        if (found < 0) continue;
        if (found != pivot_row)
            for (std::int64_t c = 0; c < cols; ++c) std::swap(a.at(found, c), a.at(pivot_row, c));
        const Scalar pivot = a.at(pivot_row, col);
        for (std::int64_t r = pivot_row + 1; r < rows; ++r) {
            if (a.at(r, col).is_zero()) continue;
            Scalar factor = a.at(r, col) / pivot;
            for (std::int64_t c = 0; c < cols; ++c) a.at(r, c) -= factor * a.at(pivot_row, c);
        }
        ++pivot_row;
        ++rank;
    }
    return RankInfo{rank, cols - rank};
}

}  // namespace colorhom
