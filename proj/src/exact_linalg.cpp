#include "crnt/exact_linalg.hpp"

#include <stdexcept>

namespace crnt {

std::vector<std::int64_t> IntMatrix::column(std::size_t j) const {
    std::vector<std::int64_t> v(rows);
    for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<std::int64_t> IntMatrix::row(std::size_t i) const {
    return {data.begin() + static_cast<long>(i * cols), data.begin() + static_cast<long>((i + 1) * cols)};
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("dimension mismatch in multiply");
    IntMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            auto x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += x * b(k, j);
        }
    return out;
}

RationalMatrix::RationalMatrix(const IntMatrix& m) : rows_(m.rows), cols_(m.cols), data_(m.rows * m.cols) {
    for (std::size_t i = 0; i < m.data.size(); ++i) data_[i] = Q(static_cast<long>(m.data[i]));
}

RationalMatrix RationalMatrix::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<QVec>& cols, std::size_t rows) {
    RationalMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("ragged columns");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QVec RationalMatrix::apply(const QVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
    QVec out(rows_, Q(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn((*this)(i, j)) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

QVec to_qvec(const std::vector<std::int64_t>& v) {
    QVec out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

std::string to_string(const Q& q) { return q.get_str(); }

std::size_t rank(const RationalMatrix& m) {
    std::size_t R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) return 0;
    // Clear denominators row by row, then Bareiss elimination over the integers.
    std::vector<std::vector<Z>> a(R, std::vector<Z>(C));
    for (std::size_t i = 0; i < R; ++i) {
        Z l = 1;
        for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    Z prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < C && r < R; ++col) {
        std::size_t piv = R;
        for (std::size_t i = r; i < R; ++i)
            if (sgn(a[i][col]) != 0) {
                piv = i;
                break;
            }
        if (piv == R) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = col + 1; j < C; ++j) {
                a[i][j] = a[r][col] * a[i][j] - a[i][col] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        ++r;
    }
    return r;
}

std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t R = m.rows(), C = m.cols(), r = 0;
    for (std::size_t col = 0; col < C && r < R; ++col) {
        std::size_t piv = R;
        for (std::size_t i = r; i < R; ++i)
            if (sgn(m(i, col)) != 0) {
                piv = i;
                break;
            }
        if (piv == R) continue;
        if (piv != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(m(piv, j), m(r, j));
        Q inv = 1 / m(r, col);
        for (std::size_t j = col; j < C; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || sgn(m(i, col)) == 0) continue;
            Q f = m(i, col);
            for (std::size_t j = col; j < C; ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

std::vector<QVec> kernel_basis(const RationalMatrix& m) {
    RationalMatrix a = m;
    auto pivots = rref(a);
    std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        QVec v(C, Q(0));
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<QVec> left_kernel_basis(const RationalMatrix& m) { return kernel_basis(m.transpose()); }

SpanResult in_span(const QVec& v, const std::vector<QVec>& basis) {
    std::size_t n = v.size(), k = basis.size();
    RationalMatrix a(n, k + 1);
    for (std::size_t j = 0; j < k; ++j) {
        if (basis[j].size() != n) throw std::invalid_argument("in_span: length mismatch");
        for (std::size_t i = 0; i < n; ++i) a(i, j) = basis[j][i];
    }
    for (std::size_t i = 0; i < n; ++i) a(i, k) = v[i];
    auto pivots = rref(a);
    SpanResult res;
    if (!pivots.empty() && pivots.back() == k) return res;
    res.in_span = true;
    res.coeffs.assign(k, Q(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) res.coeffs[pivots[r]] = a(r, k);
    return res;
}

std::vector<std::size_t> independent_subset(const std::vector<QVec>& vectors) {
    std::vector<std::size_t> chosen;
    std::vector<QVec> echelon;  // reduced rows with recorded pivot positions
    std::vector<std::size_t> piv;
    for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
        QVec w = vectors[idx];
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            if (sgn(w[piv[r]]) == 0) continue;
            Q f = w[piv[r]];
            for (std::size_t j = 0; j < w.size(); ++j)
                if (sgn(echelon[r][j]) != 0) w[j] -= f * echelon[r][j];
        }
        std::size_t p = w.size();
        for (std::size_t j = 0; j < w.size(); ++j)
            if (sgn(w[j]) != 0) {
                p = j;
                break;
            }
        if (p == w.size()) continue;
        Q inv = 1 / w[p];
        for (auto& x : w) x *= inv;
        echelon.push_back(std::move(w));
        piv.push_back(p);
        chosen.push_back(idx);
    }
    return chosen;
}

}  // namespace crnt
