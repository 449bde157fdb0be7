#pragma once

#include "crnt/rational.hpp"

#include <optional>
#include <vector>

namespace crnt {

std::size_t rank(const RationalMatrix& m);

// Basis of the right null space, one vector per free column of the reduced row echelon form.
std::vector<QVec> kernel_basis(const RationalMatrix& m);

// Basis of {w : w^T M = 0}.
std::vector<QVec> left_kernel_basis(const RationalMatrix& m);

struct SpanResult {
    bool in_span = false;
    QVec coeffs;  // one per basis vector; free directions set to zero
};

SpanResult in_span(const QVec& v, const std::vector<QVec>& basis);

// Greedy left-to-right choice of a linearly independent subset; returns indices.
std::vector<std::size_t> independent_subset(const std::vector<QVec>& vectors);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m);

}  // namespace crnt
