#pragma once

#include <colorhom/scalar.hpp>

#include <cstdint>
#include <vector>

namespace colorhom {

// Dense matrix over Q(zeta_N). Every entry shares the matrix root order;
// entries start as exact zeros. 0x0 and 0xn shapes are legal.
class ExactMatrix {
public:
    ExactMatrix(std::int64_t rows, std::int64_t cols, std::int64_t root_order);
    static ExactMatrix identity(std::int64_t n, std::int64_t root_order);

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }
    std::int64_t root_order() const { return root_order_; }

    Scalar& at(std::int64_t r, std::int64_t c);
    const Scalar& at(std::int64_t r, std::int64_t c) const;

    bool operator==(const ExactMatrix& rhs) const;
    bool operator!=(const ExactMatrix& rhs) const { return !(*this == rhs); }
    bool is_zero() const;

    ExactMatrix operator+(const ExactMatrix& rhs) const;
    ExactMatrix operator-(const ExactMatrix& rhs) const;
    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix scaled(const Scalar& c) const;

private:
    std::int64_t rows_, cols_, root_order_;
    std::vector<Scalar> data_;
};

// Two genuinely different elimination paths; used to cross-check that rank is
// independent of pivoting order.
enum class PivotOrder { Forward, Backward };

struct RankInfo {
    std::int64_t rank = 0;
    std::int64_t kernel_dim = 0;  // always cols - rank
};

// Exact Gaussian elimination over the field Q(zeta_N); no rounding anywhere.
RankInfo rank_kernel(const ExactMatrix& m, PivotOrder order = PivotOrder::Forward);

}  // namespace colorhom
