#pragma once

#include "crnt/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace crnt::detail {

// Exact bounded simplex on a dense tableau. Structural variables come first; every row adds a
// logical variable equal to the row activity. Basic variables are expressed in nonbasic ones:
// x_B[r] = sum_j T[r][j] x_j.
class BoundedSimplex {
public:
    enum class Result { Optimal, Infeasible, Unbounded, IterationLimit };

    BoundedSimplex(std::vector<Q> lower, std::vector<Q> upper);

    std::size_t add_row(const std::vector<std::pair<std::size_t, Q>>& coeffs, std::optional<Q> lo, std::optional<Q> hi);
    void set_objective(const std::vector<Q>& c);  // over structural variables
    void set_bounds(std::size_t var, const Q& lo, const Q& hi);

    Result dual();
    Result primal();

    std::size_t structurals() const { return nstruct_; }
    std::size_t rows() const { return basis_.size(); }
    const Q& value(std::size_t var) const { return x_[var]; }
    const Q& lower(std::size_t var) const { return *lo_[var]; }
    const Q& upper(std::size_t var) const { return *hi_[var]; }
    Q objective() const;
    std::size_t iterations() const { return iterations_; }

private:
    void pivot(std::size_t row, std::size_t q);
    void move_nonbasic(std::size_t j, const Q& target);
    bool at_lower(std::size_t j) const { return lo_[j] && x_[j] == *lo_[j]; }
    bool at_upper(std::size_t j) const { return hi_[j] && x_[j] == *hi_[j]; }
    bool fixed(std::size_t j) const { return lo_[j] && hi_[j] && *lo_[j] == *hi_[j]; }

    std::size_t nstruct_;
    std::vector<std::optional<Q>> lo_, hi_;
    std::vector<Q> x_;
    std::vector<Q> c_;      // objective over all variables (logicals zero)
    std::vector<Q> d_;      // reduced costs, zero on basic variables
    std::vector<long> row_of_;  // -1 when nonbasic
    std::vector<std::size_t> basis_;
    std::vector<std::vector<Q>> T_;
    std::size_t iterations_ = 0;
};

}  // namespace crnt::detail
