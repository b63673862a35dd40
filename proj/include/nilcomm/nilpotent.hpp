#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "nilcomm/matrix.hpp"
#include "nilcomm/partition.hpp"

namespace nilcomm {

/// One group of equal-size Jordan blocks in the grouped layout: all blocks of
/// size `part` are merged into a single block with identity superdiagonal
/// blocks of size `mult`.
struct BlockGroup {
    int part;    // Jordan block size i
    int mult;    // multiplicity a_i
    int offset;  // first row/column of the group
};

/// Nilpotent matrix of a given Jordan type in the grouped block layout:
/// groups of equal block size are adjacent, largest first, and each group is
/// a single block with I_{a_i} on its superdiagonal.
template <class F>
struct StandardNilpotent {
    Partition partition;
    Matrix<F> matrix;
    std::vector<BlockGroup> layout;
};

template <class F>
StandardNilpotent<F> standard_nilpotent(const Partition& lambda, F field);

/// Diagonal one-parameter subgroup adapted to a standard nilpotent: weights
/// per coordinate, listed in the grouped block layout. Conjugation by
/// diag(t^{w_1}, ..., t^{w_n}) scales the standard nilpotent by t^2.
struct Cocharacter {
    std::vector<int> weights;
};

Cocharacter associated_cocharacter(const Partition& lambda);

/// Centralizer of a standard nilpotent split by cocharacter weight:
/// components[i] is a basis of the weight-i part. Only nonzero components are
/// stored; for a nilpotent in gl_n all weights are >= 0 and the weight-0 part
/// has dimension sum a_i^2.
template <class F>
struct GradedCentralizer {
    StandardNilpotent<F> base;
    Cocharacter cocharacter;
    std::map<int, std::vector<Matrix<F>>> components;

    long total_dim() const {
        long d = 0;
        for (const auto& [w, basis] : components) d += static_cast<long>(basis.size());
        return d;
    }
};

template <class F>
GradedCentralizer<F> graded_centralizer(const StandardNilpotent<F>& x);

/// Decides whether the whole pencil k*e + k*y stays in the closure of the
/// orbit of e, i.e. whether rank((xi*e + eta*y)^s) <= rank(e^s) for every
/// s >= 1 and all scalars. The scalar condition is settled exactly by
/// evaluating at s*n+2 deterministic points per power: the minors involved
/// have degree at most s*n in (xi : eta).
///
/// Preconditions (e, y nilpotent and [e, y] = 0) are enforced. The ranks
/// are basis independent, so e may be any nilpotent matrix.
bool pencil_in_orbit_closure(const RatMatrix& e, const RatMatrix& y);
bool pencil_in_orbit_closure(const StandardNilpotent<RationalField>& e, const RatMatrix& y);

/// Over F_p in gl_{2p}, with e of Jordan type [p,p] and e0 the nonzero
/// nilpotent Delta_p(E_12) in the weight-0 part of its centralizer: returns
/// true iff (a*e0 + b*e)^p = 0 for every a, b in F_p (checked exhaustively).
/// This exhibits the failure of the pencil-closure containment barrier at
/// characteristic p = largest block size. p = 2 is rejected.
bool pencil_charp_degeneration(std::uint64_t p);

/// Elements of the weight-0 centralizer component of the form
/// Delta_i(E_{jk}) placed in one block group: the building block for
/// weight-0 nilpotent perturbations in tests and CLI checks.
template <class F>
Matrix<F> weight_zero_unit(const StandardNilpotent<F>& x, std::size_t group, std::size_t row,
                           std::size_t col);

}  // namespace nilcomm
