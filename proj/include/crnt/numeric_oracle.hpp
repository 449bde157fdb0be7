#pragma once

#include "crnt/network.hpp"
#include "crnt/robustness.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace crnt {

struct SteadyStateResult {
    std::vector<double> state;
    double residual = 0.0;          // max-norm of the mass-action right-hand side
    double initial_residual = 0.0;  // same, at the starting point
    std::vector<double> conservation_targets;
    bool converged = false;
    bool boundary = false;  // a coordinate collapsed toward zero
    std::string method;     // "newton", "continuation", or empty
};

// Rows w with w^T Gamma = 0, as doubles (rational left-kernel basis).
std::vector<std::vector<double>> conservation_laws(const Network& net);

// Mass-action right-hand side Gamma * v(x).
std::vector<double> mass_action_rhs(const Network& net, const std::vector<double>& rates, const std::vector<double>& x);

SteadyStateResult steady_state(const Network& net, const std::vector<double>& rates, const std::vector<double>& totals,
                               std::uint64_t seed);

// Steady state in the compatibility class of x0.
SteadyStateResult steady_state_from(const Network& net, const std::vector<double>& rates, const std::vector<double>& x0,
                                    std::uint64_t seed = 0);

struct ClaimCheck {
    std::string claim;
    unsigned trials = 0;
    unsigned converged = 0;
    double max_rel_err = 0.0;
    std::string verdict;  // pass | fail | inconclusive
};

struct VerificationTable {
    std::vector<ClaimCheck> rows;
    std::string sampling;
};

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);
double log_uniform(std::mt19937_64& rng, double lo, double hi);
double relative_error(double value, double reference);

// Draws rates log-uniformly in [1e-2, 1e2] and initial states in [1e-1, 1e1]; compares each valued claim
// against the converged state and checks ACR coordinates for invariance across three compatibility classes.
VerificationTable verify_claims(const Network& net, const RobustnessReport& report, unsigned trials, std::uint64_t seed,
                                double tol = 1e-8);

}  // namespace crnt
