#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcomm/field.hpp"
#include "nilcomm/partition.hpp"
#include "nilcomm/poly.hpp"

namespace nilcomm {
namespace bounds {

/// Shape parameters (a, b, c, d): multiplicities of the Jordan blocks of
/// sizes 4, 3, 2, 1, so n = 4a + 3b + 2c + d. The standing hypothesis of the
/// bound apparatus is (a, b) != (0, 0).
using Tuple = std::array<long, 4>;

inline long n_of(const Tuple& t) { return 4 * t[0] + 3 * t[1] + 2 * t[2] + t[3]; }

/// Upper bound for dim C_{r-1}(gl_b) + floor(b^2/4): quadratic in b for
/// b >= 3, exact small-case values for b <= 2.
Rat commuting_gl_bound(long b, long r);

/// Upper bound for the dimension of the variety of coupled (r-1)-tuples with
/// the six bilinear relations between the five block families; five branches
/// depending on (a, b, c). Requires (a, b) != (0, 0).
Rat linked_tuple_bound(long a, long b, long c, long r);

/// Orbit dimension n^2 - dim z(x) for x of type [4^a 3^b 2^c 1^d].
long orbit_dim_term(long a, long b, long c, long d);

/// Margins by which the assembled component bound stays below
/// (r+1)(n^2-1)/4. `sharp` >= `weak` always: `sharp` replaces the rectangle
/// estimate for one factor by the minimum of two available estimates.
struct Margins {
    Rat weak;   // single rectangle estimate
    Rat sharp;  // with the pointwise min of both estimates
};

Margins margins(long a, long b, long c, long d, long r);

/// Coefficient of r in the weak margin, obtained by finite differencing at
/// consecutive r (all branch selections are independent of r, which is
/// asserted by a second difference).
Rat margin_r_slope(long a, long b, long c, long d);

struct Box {
    long a = 5, b = 8, c = 6, d = 12;
};

/// The sixteen shapes with non-positive sharp margin at r = 7.
extern const std::vector<Tuple> kNonpositiveList;
/// The six shapes (all with n even) that only satisfy the weaker
/// -(r+1)/4 bound.
extern const std::vector<Tuple> kWeakBoundList;

struct ExceptionReport {
    long r;
    Box box;
    std::vector<Tuple> nonpositive_sharp;      // sharp margin <= 0 within the box
    bool matches_nonpositive_list;             // equals kNonpositiveList within the box
    std::vector<std::pair<Tuple, Rat>> weak_bound_values;  // sharp margin per list entry
    bool weak_bound_holds;                     // all entries > -(r+1)/4
    bool weak_bound_parity;                    // every list entry has n even
    std::vector<Tuple> slope_negative;         // r-slope < 0 within the box
    std::vector<Tuple> slope_below_square;     // r-slope < (d-b)^2/4 within the box
    bool slope_branch_stable;                  // second difference vanishes everywhere
    std::string box_note;
};

/// Scans the box (with the standing hypothesis (a,b) != (0,0)) and compares
/// the exact exceptional sets against the recorded lists. The box must
/// contain the default one.
ExceptionReport verify_exception_lists(const Box& box, long r = 7);

struct IdentityCheck {
    std::string name;
    bool holds;
    bool negative_control;  // this entry is expected NOT to hold
};

/// Exact polynomial identities behind the positivity argument: the margin at
/// r = 7 and its r-slope rewritten as combinations of squares with positive
/// coefficients, on the two branches where the bound formulas are
/// floor-free. Includes one deliberately corrupted variant as a negative
/// control.
std::vector<IdentityCheck> verify_square_identities();

struct SliceCheck {
    long b, c;
    Rat expected;        // the constant the residual must equal
    bool constant_ok;    // residual is symbolically constant and equals it
    bool closed_form_ok; // max-form expression matches direct evaluation on a grid
    bool exceptions_ok;  // non-positivity exceptions on the grid match the recorded set
};

struct SliceReport {
    std::vector<SliceCheck> slices;
    bool special_slice_ok;  // (a,b,c) = (1,0,1): margin at r=7 equals 2d^2 - 2d + 6
};

/// The five (b, c)-slices with b <= 2, c <= 1: after subtracting the
/// displayed squares, the residual of the r = 7 margin is a constant in
/// (a, d); checked symbolically, together with the per-slice closed forms of
/// the sharp margin against direct evaluation over 0 <= a, d <= 15.
SliceReport verify_slice_constants();

struct SpecialCaseResult {
    long n;
    Rat bound;           // the case-specific upper bound for dim C'(x)
    long threshold;      // (r+1) * floor(n^2/4)
    bool strict;         // bound < threshold
    Rat quarter;         // (r+1) * n^2/4
    bool within_quarter; // bound <= quarter (the only guarantee when strict fails)
};

/// Case-specific component bounds for the shapes [3,2,2,1^d], [3,3,2,2,1^d],
/// [3,1^d] (d <= 2) and [4,3]; r >= 7.
SpecialCaseResult special_case_bound(const Partition& lambda, long r);

/// The two floor identities comparing threshold and bound:
/// floor((d+7)^2/4) - (4d+10) = floor((d-1)^2/4) + 2 and
/// floor((d+10)^2/4) - (6d+20) = floor((d-2)^2/4) + 4, for 0 <= d <= d_max.
bool special_case_difference_identity(long d_max);

}  // namespace bounds
}  // namespace nilcomm
