#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nilcomm/matrix.hpp"

namespace nilcomm {

/// Thrown when a closed dimension formula is queried outside the range where
/// it is established (n >= 4, r >= 7); such inputs are rejected rather than
/// extrapolated, since the formulas are known to fail for small r.
struct OutOfEstablishedRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Nilradical u_{s,n-s} of the maximal parabolic stabilizing k^s: matrices
/// supported on the upper-right s x (n-s) block. Every element squares to
/// zero and pairwise products vanish.
template <class F>
struct BlockNilradical {
    int n, s;
    std::vector<Matrix<F>> basis;  // the s*(n-s) matrix units
};

template <class F>
BlockNilradical<F> block_nilradical(F field, int n, int s);

/// dim of the closure of GL_n * u_{s,n-s}^r: (r+1) * s * (n-s).
long block_component_dim(int n, int s, int r);

struct NilpotentCommutingDim {
    long dim;             // (r+1) * floor(n^2/4)
    int component_count;  // 1 for n even, 2 for n odd
};

/// Dimension of the r-th commuting variety of the nilpotent cone of gl_n,
/// valid for n >= 4 and r >= 7 only.
NilpotentCommutingDim nilpotent_commuting_dim(int n, int r);

/// Dimension of the r-th commuting variety of gl_n (same range); the single
/// exceptional pair (4,7) evaluates to 40.
long gl_commuting_dim(int n, int r);

/// Dimension of the r-th commuting variety of sl_n for a prime p not in
/// {2,3}: equals the gl_n value when p | n, otherwise (r+1)*floor(n^2/4)
/// except the pair (4,7) which evaluates to 33.
long sl_commuting_dim(int n, int r, std::uint64_t p);

/// (n-1)(r+n-1), the regular-orbit component of the nilpotent case.
long regular_component_dim(int n, int r);

/// n^2 + (r-1)n, the component through generic semisimple tuples.
long generic_component_dim(int n, int r);

struct CrossoverLists {
    // Pairs (n, r) with 4 <= n <= n_max, 4 <= r <= r_max where the stated
    // component strictly exceeds the block-component value.
    std::vector<std::pair<int, int>> nilpotent_regular;  // regular > (r+1)floor(n^2/4)
    std::vector<std::pair<int, int>> ordinary_generic;   // generic > (r+1)floor(n^2/4)+r
};

CrossoverLists crossover_lists(int n_max, int r_max);

/// Closed-condition membership test for the family G * u_{s,n-s}^r: all
/// pairwise products vanish, the stacked rows of the tuple span at most an
/// (n-s)-dimensional space and the stacked columns at most an s-dimensional
/// one.
template <class F>
bool tuple_in_block_closure(const std::vector<Matrix<F>>& tuple, int s);

struct JacobianResult {
    long rank;      // maximal rank observed; a certified lower bound for the dimension
    int attempts;   // samples drawn (resampled when below the closed formula)
    std::uint64_t seed;
};

/// Independent rank oracle for dim G * u_{s,n-s}^r: samples integer tuples
/// y_1..y_r in u with entries in {-9..9} and computes the exact rank of the
/// differential (A, v_1..v_r) -> (v_i + [A, y_i])_i of the saturation map at
/// the identity. A rank below the closed formula triggers resampling, up to
/// 5 draws.
JacobianResult jacobian_component_dim(int n, int s, int r, std::uint64_t seed);

}  // namespace nilcomm
