#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace crnt {

using Q = mpq_class;
using Z = mpz_class;
using QVec = std::vector<Q>;

// Dense integer matrix, row-major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::int64_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    std::vector<std::int64_t> column(std::size_t j) const;
    std::vector<std::int64_t> row(std::size_t i) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& o) const = default;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Dense rational matrix in canonical form (mpq_class keeps gcd(num,den)=1, den>0).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c) {}
    explicit RationalMatrix(const IntMatrix& m);
    static RationalMatrix from_rows(const std::vector<QVec>& rows, std::size_t cols);
    static RationalMatrix from_columns(const std::vector<QVec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Q& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Q& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix transpose() const;
    QVec apply(const QVec& v) const;
    bool operator==(const RationalMatrix& o) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Q> data_;
};

QVec to_qvec(const std::vector<std::int64_t>& v);
std::string to_string(const Q& q);

}  // namespace crnt
