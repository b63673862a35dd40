#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilcomm/field.hpp"

namespace nilcomm {

/// Query range in which the Frobenius-kernel complexity formula is
/// established: n >= 4, r >= 7, p a prime greater than 3.
struct ComplexityQuery {
    int n;
    int r;
    std::uint64_t p;

    void validate() const;
};

/// Complexity of the trivial module over the r-th Frobenius kernel of GL_n
/// (and of any module of dimension prime to p): (r+1) * floor(n^2/4).
long frobenius_kernel_complexity(const ComplexityQuery& q);

/// p-rank of SL_n(F_{p^r}) = complexity of its trivial module:
/// r * floor(n^2/4).
long chevalley_p_rank_sln(int n, int r);

struct RatioCheck {
    long finite_group;  // r * floor(n^2/4)
    Rat scaled_kernel;  // (r/(r+1)) * (r+1) * floor(n^2/4)
    bool equal;
};

/// Exact comparison of the finite-group p-rank with r/(r+1) times the
/// Frobenius-kernel complexity; equality for the trivial module everywhere
/// in range.
RatioCheck complexity_ratio_check(int n, int r, std::uint64_t p);

/// Base-p digit expansion of a dominant weight given in fundamental-weight
/// coordinates: lambda = digits[0] + p*digits[1] + ... + p^{r-1}*digits[r-1]
/// with every digit p-restricted. Requires all coordinates in [0, p^r).
struct WeightDigits {
    std::vector<long> lambda;
    std::uint64_t p;
    int r;
    std::vector<std::vector<long>> digits;

    std::vector<long> reassemble() const;
};

WeightDigits p_adic_decompose(const std::vector<long>& lambda, std::uint64_t p, int r);

/// Cross-module consistency with the nilpotent commuting dimension: only
/// meaningful when p > n (restricted matrices = all nilpotent matrices);
/// below that the restricted case is not computed here and nullopt is
/// returned.
std::optional<bool> frobenius_matches_nilpotent_dim(int n, int r, std::uint64_t p);

/// The highest-weight maximal-complexity criterion needs simple-module
/// constructions that are out of scope; the digits above are the only
/// supported plumbing.
inline std::string simple_module_criterion_status() {
    return "requires module construction - not computed";
}

}  // namespace nilcomm
