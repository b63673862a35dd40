#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilcomm/field.hpp"

namespace nilcomm {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultBudget = 100'000'000;  // raw enumeration space cap

/// |{(y,z) in M_{s x t} x M_{t x s} : yz = 0, zy = 0}| over F_q.
/// Raw space q^{2st} must fit the budget.
std::uint64_t count_mutually_annihilating(int s, int t, std::uint64_t q,
                                          std::uint64_t budget = kDefaultBudget);

/// |{(y_1..y_r, z_1..z_r) : y_i z_j = y_j z_i for all i,j}| over F_q with
/// y_i in M_{s x t}, z_i in M_{t x s}. Raw space q^{2str} must fit the budget
/// (the enumeration itself prunes far below that).
std::uint64_t count_cross_symmetric(int r, int s, int t, std::uint64_t q,
                                    std::uint64_t budget = kDefaultBudget);

/// |{u in gl_c : rank(u) = c-m-l, rank(u^2) = c-2m-l}| over F_q.
/// Requires 2m + l <= c and q^{c^2} within budget.
std::uint64_t count_rank_stratum(int c, int m, int l, std::uint64_t q,
                                 std::uint64_t budget = kDefaultBudget);

/// |C_r(N(gl_n))(F_q)|: ordered r-tuples of pairwise commuting nilpotent
/// matrices, for n <= 3. Tuples are extended left to right; each extension
/// enumerates only the common centralizer of the prefix, maintained as a
/// kernel basis.
std::uint64_t count_commuting_nilpotent(int n, int r, std::uint64_t q,
                                        std::uint64_t budget = kDefaultBudget);

/// Heuristic dimension estimate: slope of log(count) against log(q),
/// averaged over consecutive sample pairs and rounded to a rational with
/// denominator 1000. The only place floating point is used in the library.
/// Requires >= 2 samples with positive counts.
Rat fit_dimension(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& samples);

struct CountReport {
    std::string variety;                                          // "U", "W", "V", "Cnil"
    std::vector<long> params;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;  // (q, exact count)
    std::vector<std::uint64_t> skipped_q;                          // budget-excluded moduli
    std::optional<Rat> fitted_dim;                                 // absent with < 2 samples
    std::optional<long> claimed_dim;
    Rat tolerance;
    std::string verdict;  // "PASS" | "FAIL" | "INFO"
    std::string note;
};

/// Runs the named count over the given moduli, skipping those whose raw
/// space exceeds the budget, and fits the dimension. claimed_dim defaults to
/// the known value for the variety when one exists.
CountReport run_count(const std::string& variety, const std::vector<long>& params,
                      const std::vector<std::uint64_t>& qs, std::optional<long> claimed_dim,
                      const Rat& tolerance, std::uint64_t budget = kDefaultBudget);

/// Known dimension for the variety/parameters, where the closed value is
/// available (U: st; W with t=1; V: c^2 - (2m^2+2ml+l^2); Cnil: (n-1)(r+n-1)).
std::optional<long> known_dimension(const std::string& variety, const std::vector<long>& params);

}  // namespace nilcomm
