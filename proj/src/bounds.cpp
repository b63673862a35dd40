#include "nilcomm/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilcomm {
namespace bounds {

namespace {

void check_hypothesis(long a, long b) {
    if (a == 0 && b == 0)
        throw std::invalid_argument("bound apparatus requires (a, b) != (0, 0)");
    if (a < 0 || b < 0) throw std::invalid_argument("negative multiplicity");
}

}  // namespace

Rat commuting_gl_bound(long b, long r) {
    if (b < 0 || r < 2) throw std::invalid_argument("commuting_gl_bound: need b >= 0, r >= 2");
    if (b >= 3) return (rat_of(r, 3) + rat_of(1, 4)) * Rat(b * b) + rat_of(2 * r, 3) - 1;
    return Rat(b * (r + b - 2) + (b * b) / 4);
}

Rat linked_tuple_bound(long a, long b, long c, long r) {
    check_hypothesis(a, b);
    if (c < 0) throw std::invalid_argument("linked_tuple_bound: need c >= 0");
    if (c == 0) return Rat(0);
    if (c == 1) {
        if (a == 1 && b == 0) return Rat(r + 1);
        return Rat((r - 1) * (a + b) + 1);
    }
    const Rat base = rat_of(a * a, 11) + Rat(c * c + 2 * a * c + 2 * b * c);
    if (c >= a + b) return base + Rat(r - 2) * (Rat(c * c) + rat_of((a + b) * (a + b), 2));
    return base + Rat(r - 2) * (rat_of(c * c, 2) + Rat((a + b) * c));
}

long orbit_dim_term(long a, long b, long c, long d) {
    const long n = 4 * a + 3 * b + 2 * c + d;
    const long s1 = a + b + c + d, s2 = a + b + c, s3 = a + b;
    return n * n - s1 * s1 - s2 * s2 - s3 * s3 - a * a;
}

Margins margins(long a, long b, long c, long d, long r) {
    check_hypothesis(a, b);
    if (d < 0 || c < 0) throw std::invalid_argument("negative multiplicity");
    if (r < 7) throw std::invalid_argument("margins: established for r >= 7 only");
    const long n = n_of({a, b, c, d});
    const Rat head = Rat(r + 1) * rat_of(n * n - 1, 4);
    const Rat common = head - Rat(orbit_dim_term(a, b, c, d)) - commuting_gl_bound(b, r) -
                       linked_tuple_bound(a, b, c, r);
    const long quad =
        3 * a * a + 5 * a * b + 2 * a * c + b * b + 2 * b * c + 2 * b * d + c * d;
    const long min_term = std::min(r * a * d + (d * d) / 2, 2 * (r - 1) * a * d);
    Margins m;
    m.weak = common - Rat(r - 1) * Rat(quad + 2 * a * d);
    m.sharp = common - Rat(r - 1) * Rat(quad) - Rat(min_term);
    return m;
}

Rat margin_r_slope(long a, long b, long c, long d) {
    const Rat m7 = margins(a, b, c, d, 7).weak;
    const Rat m8 = margins(a, b, c, d, 8).weak;
    const Rat m9 = margins(a, b, c, d, 9).weak;
    if (m9 - m8 != m8 - m7)
        throw std::logic_error("margin_r_slope: weak margin is not linear in r");
    return m8 - m7;
}

const std::vector<Tuple> kNonpositiveList = {
    {0, 1, 0, 0}, {0, 1, 0, 1}, {0, 1, 0, 2}, {0, 1, 1, 1}, {0, 1, 2, 0}, {0, 1, 2, 1},
    {0, 1, 2, 2}, {0, 1, 3, 1}, {0, 2, 0, 2}, {0, 2, 1, 2}, {0, 2, 2, 1}, {0, 2, 2, 2},
    {0, 2, 2, 3}, {0, 3, 2, 3}, {1, 0, 0, 0}, {1, 1, 0, 0}};

const std::vector<Tuple> kWeakBoundList = {{0, 1, 1, 1}, {0, 1, 3, 1}, {0, 2, 0, 2},
                                           {0, 2, 1, 2}, {0, 3, 2, 3}, {1, 0, 0, 0}};

ExceptionReport verify_exception_lists(const Box& box, long r) {
    if (box.a < 5 || box.b < 8 || box.c < 6 || box.d < 12)
        throw std::invalid_argument(
            "verification box must contain {a <= 5, b <= 8, c <= 6, d <= 12}");
    ExceptionReport rep;
    rep.r = r;
    rep.box = box;
    rep.slope_branch_stable = true;

    for (long a = 0; a <= box.a; ++a)
        for (long b = 0; b <= box.b; ++b) {
            if (a == 0 && b == 0) continue;
            for (long c = 0; c <= box.c; ++c)
                for (long d = 0; d <= box.d; ++d) {
                    const Margins m = margins(a, b, c, d, r);
                    if (sgn(m.sharp) <= 0) rep.nonpositive_sharp.push_back({a, b, c, d});

                    Rat slope;
                    try {
                        slope = margin_r_slope(a, b, c, d);
                    } catch (const std::logic_error&) {
                        rep.slope_branch_stable = false;
                        continue;
                    }
                    if (sgn(slope) < 0) rep.slope_negative.push_back({a, b, c, d});
                    if (slope < rat_of((d - b) * (d - b), 4))
                        rep.slope_below_square.push_back({a, b, c, d});
                }
        }

    std::vector<Tuple> expected;
    for (const Tuple& t : kNonpositiveList)
        if (t[0] <= box.a && t[1] <= box.b && t[2] <= box.c && t[3] <= box.d)
            expected.push_back(t);
    rep.matches_nonpositive_list = rep.nonpositive_sharp == expected;

    rep.weak_bound_holds = true;
    rep.weak_bound_parity = true;
    const Rat floor_gap = -rat_of(r + 1, 4);
    for (const Tuple& t : kWeakBoundList) {
        const Rat sharp = margins(t[0], t[1], t[2], t[3], r).sharp;
        rep.weak_bound_values.push_back({t, sharp});
        if (!(sharp > floor_gap)) rep.weak_bound_holds = false;
        if (n_of(t) % 2 != 0) rep.weak_bound_parity = false;
    }

    rep.box_note =
        "the scan box is an implementation choice strictly containing every bounded "
        "region the case analysis reduces to; no single explicit box is prescribed";
    return rep;
}

namespace {

using P = MultivarPoly;

P pa() { return P::a(); }
P pb() { return P::b(); }
P pc() { return P::c(); }
P pd() { return P::d(); }

P n_poly() { return Rat(4) * pa() + Rat(3) * pb() + Rat(2) * pc() + pd(); }

P orbit_poly() {
    const P n = n_poly();
    const P s1 = pa() + pb() + pc() + pd();
    const P s2 = pa() + pb() + pc();
    const P s3 = pa() + pb();
    return n * n - s1 * s1 - s2 * s2 - s3 * s3 - pa() * pa();
}

P quad_poly_weak() {
    return Rat(3) * sq(pa()) + Rat(5) * pa() * pb() + Rat(2) * pa() * pc() +
           Rat(2) * pa() * pd() + sq(pb()) + Rat(2) * pb() * pc() + Rat(2) * pb() * pd() +
           pc() * pd();
}

P gl_bound_poly_b3(long r) {
    // branch b >= 3: no floors remain
    return (rat_of(r, 3) + rat_of(1, 4)) * sq(pb()) + P(rat_of(2 * r, 3) - 1);
}

P linked_poly_large_c(long r) {
    // branch c >= max(a+b, 2)
    return Rat(1, 11) * sq(pa()) + sq(pc()) + Rat(2) * pa() * pc() + Rat(2) * pb() * pc() +
           Rat(r - 2) * (sq(pc()) + Rat(1, 2) * sq(pa() + pb()));
}

P linked_poly_small_c(long r) {
    // branch 2 <= c <= a+b
    return Rat(1, 11) * sq(pa()) + sq(pc()) + Rat(2) * pa() * pc() + Rat(2) * pb() * pc() +
           Rat(r - 2) * (Rat(1, 2) * sq(pc()) + (pa() + pb()) * pc());
}

P weak_margin_poly(long r, const P& gl_bound, const P& linked) {
    const P n = n_poly();
    return rat_of(r + 1, 4) * (n * n - P(Rat(1))) - orbit_poly() - gl_bound - linked -
           Rat(r - 1) * quad_poly_weak();
}

P weak_margin_case_i(long r) { return weak_margin_poly(r, gl_bound_poly_b3(r), linked_poly_large_c(r)); }
P weak_margin_case_ii(long r) { return weak_margin_poly(r, gl_bound_poly_b3(r), linked_poly_small_c(r)); }

}  // namespace

std::vector<IdentityCheck> verify_square_identities() {
    std::vector<IdentityCheck> checks;
    const P A = pa(), B = pb(), C = pc(), D = pd();

    const P half_a = Rat(1, 2) * A;
    const P dcorr = D - B - half_a;  // d - b - a/2

    {
        const P lhs = weak_margin_case_i(7);
        const P rhs = (Rat(6) * A + Rat(2) * B) * (C - A - B) + Rat(2) * sq(dcorr) +
                      Rat(54, 11) * sq(A) + A * B + Rat(11, 12) * sq(B) - P(Rat(17, 3));
        checks.push_back({"margin(7), branch (i): square decomposition", lhs == rhs, false});
    }
    {
        const P lhs = weak_margin_case_i(8) - weak_margin_case_i(7);
        const P rhs = Rat(1, 2) * sq(A) + (Rat(2) * A + B) * C + Rat(1, 6) * sq(B) +
                      Rat(1, 4) * sq(D - B) - P(Rat(11, 12));
        checks.push_back({"r-slope, branch (i): square decomposition", lhs == rhs, false});
    }
    {
        const P lhs = weak_margin_case_ii(8) - weak_margin_case_ii(7);
        const P rhs = Rat(1, 4) * sq(D - B) + sq(A) + A * B + A * C + Rat(2, 3) * sq(B) +
                      Rat(1, 2) * sq(C) - P(Rat(11, 12));
        checks.push_back({"r-slope, branch (ii): square decomposition", lhs == rhs, false});
    }
    const P lhs_ii = weak_margin_case_ii(7);
    {
        const P rhs = Rat(2) * sq(dcorr) +
                      Rat(17, 12) * sq(B - Rat(18, 17) * C - Rat(12, 17) * A) +
                      Rat(263, 374) * sq(A - Rat(209, 263) * C) + Rat(123, 263) * sq(C) -
                      P(Rat(17, 3));
        checks.push_back(
            {"margin(7), branch (ii): square decomposition, c-dominant", lhs_ii == rhs, false});
    }
    {
        const P rhs = Rat(2) * sq(dcorr) +
                      Rat(17, 12) * sq(B - Rat(18, 17) * C - Rat(12, 17) * A) +
                      Rat(31, 34) * sq(C - Rat(19, 31) * A) + Rat(123, 341) * sq(A) -
                      P(Rat(17, 3));
        checks.push_back(
            {"margin(7), branch (ii): square decomposition, a-dominant", lhs_ii == rhs, false});
    }
    {
        const P rhs = Rat(2) * sq(dcorr) +
                      Rat(5, 2) * sq(C - Rat(3, 5) * B + Rat(1, 5) * A) +
                      Rat(72, 55) * sq(A - Rat(77, 144) * B) + Rat(41, 288) * sq(B) -
                      P(Rat(17, 3));
        checks.push_back(
            {"margin(7), branch (ii): square decomposition, b-dominant", lhs_ii == rhs, false});
    }
    {
        // Negative control: the 54/11 coefficient replaced by 5 must break
        // the first identity.
        const P lhs = weak_margin_case_i(7);
        const P rhs = (Rat(6) * A + Rat(2) * B) * (C - A - B) + Rat(2) * sq(dcorr) +
                      Rat(5) * sq(A) + A * B + Rat(11, 12) * sq(B) - P(Rat(17, 3));
        checks.push_back({"margin(7), branch (i): corrupted coefficient", lhs == rhs, true});
    }
    return checks;
}

namespace {

/// Margin at r = 7 on the slice b, c fixed (b <= 2 so the gl-bound is an
/// exact constant; c <= 1 so the linked bound is linear in a). Returns a
/// polynomial in the remaining variables a, d.
P slice_margin7(long b, long c) {
    const P A = pa(), D = pd();
    const P n = Rat(4) * A + P(Rat(3 * b + 2 * c)) + D;
    const P s1 = A + P(Rat(b + c)) + D;
    const P s2 = A + P(Rat(b + c));
    const P s3 = A + P(Rat(b));
    const P orbit = n * n - s1 * s1 - s2 * s2 - s3 * s3 - A * A;
    const P gl_bound{commuting_gl_bound(b, 7)};
    P linked{Rat(0)};
    if (c == 1) linked = Rat(6) * (A + P(Rat(b))) + P(Rat(1));  // (a,b) != (1,0) branch
    const P quad = Rat(3) * sq(A) + Rat(5 * b) * A + Rat(2 * c) * A + Rat(2) * A * D +
                   P(Rat(b * b + 2 * b * c)) + Rat(2 * b) * D + Rat(c) * D;
    return Rat(2) * (n * n - P(Rat(1))) - orbit - gl_bound - linked - Rat(6) * quad;
}

P slice_residual(long b, long c) {
    const P A = pa(), D = pd();
    const P sq1 = sq(D - P(Rat(b)) - Rat(1, 2) * A);
    const P sq2 = sq(A - rat_of(2 * b, 3) + rat_of(2 * c, 3));
    return slice_margin7(b, c) - Rat(2) * sq1 - Rat(3, 2) * sq2;
}

/// The slice (a, b, c) = (1, 0, 1), where the linked bound takes its
/// exceptional value r + 1. Polynomial in d alone.
P slice_margin7_special() {
    const P D = pd();
    const P n = P(Rat(6)) + D;
    const P s1 = P(Rat(2)) + D;
    const P orbit = n * n - s1 * s1 - P(Rat(4 + 1 + 1));
    const P quad = P(Rat(5)) + Rat(3) * D;
    return Rat(2) * (n * n - P(Rat(1))) - orbit - P(commuting_gl_bound(0, 7)) - P(Rat(8)) -
           Rat(6) * quad;
}

struct SliceSpec {
    long b, c;
    Rat expected;
    long lin_a, lin_d, constant;                       // m1 = 2a^2 - 2ad + 2d^2 + lin_a*a + lin_d*d + constant
    std::vector<std::pair<long, long>> exceptions;     // grid points with sharp margin <= 0
};

}  // namespace

SliceReport verify_slice_constants() {
    const std::vector<SliceSpec> specs = {
        {2, 1, Rat(-2, 3), 2, -8, 8, {{0, 2}}},
        {1, 1, Rat(-1), 2, -4, 1, {{0, 1}}},
        {1, 0, Rat(-14, 3), 0, -4, -2, {{0, 0}, {0, 1}, {0, 2}, {1, 0}}},
        {2, 0, Rat(-11, 3), 0, -8, 7, {{0, 2}}},
        {0, 0, Rat(-2), 0, 0, -2, {{1, 0}}},
    };

    SliceReport rep;
    for (const SliceSpec& s : specs) {
        SliceCheck check{s.b, s.c, s.expected, false, true, true};
        const P residual = slice_residual(s.b, s.c);
        check.constant_ok = residual.is_constant() && residual.constant_term() == s.expected;

        std::vector<std::pair<long, long>> grid_exceptions;
        for (long a = 0; a <= 15; ++a) {
            if (a == 0 && s.b == 0) continue;  // standing hypothesis
            for (long d = 0; d <= 15; ++d) {
                const long m1 = 2 * a * a - 2 * a * d + 2 * d * d + s.lin_a * a + s.lin_d * d +
                                s.constant;
                const long m2 = m1 + 5 * a * d - (d * d) / 2;
                const Rat closed{std::max(m1, m2)};
                if (margins(a, s.b, s.c, d, 7).sharp != closed) check.closed_form_ok = false;
                if (sgn(closed) <= 0) grid_exceptions.push_back({a, d});
            }
        }
        check.exceptions_ok = grid_exceptions == s.exceptions;
        rep.slices.push_back(check);
    }

    // (a,b,c) = (1,0,1): here the linked bound takes its exceptional value
    // r+1 and the margin at r = 7 is 2d^2 - 2d + 6, positive for all d.
    {
        const P D = pd();
        P m = slice_margin7_special();
        rep.special_slice_ok = m == Rat(2) * sq(D) - Rat(2) * D + P(Rat(6));
    }
    return rep;
}

SpecialCaseResult special_case_bound(const Partition& lambda, long r) {
    if (r < 7) throw std::invalid_argument("special_case_bound: need r >= 7");
    const int m4 = lambda.multiplicity(4), m3 = lambda.multiplicity(3),
              m2 = lambda.multiplicity(2), m1 = lambda.multiplicity(1);
    const long d = m1;
    const long n = lambda.n();
    if (lambda.max_part() > 4 || 4 * m4 + 3 * m3 + 2 * m2 + m1 != n)
        throw std::invalid_argument("special_case_bound: unsupported shape " + lambda.str());

    Rat bound;
    if (m4 == 0 && m3 == 1 && m2 == 2)
        bound = Rat((r + 1) * (4 * d + 10) + 14);
    else if (m4 == 0 && m3 == 2 && m2 == 2)
        bound = Rat((r + 1) * (6 * d + 20) + 30);
    else if (m4 == 0 && m3 == 1 && m2 == 0 && d <= 2)
        bound = Rat((r + 1) * (d + 2) + (d * d) / 2 + 3 * d + 2);
    else if (m4 == 1 && m3 == 1 && m2 == 0 && m1 == 0)
        bound = Rat(8 * r + 30);
    else
        throw std::invalid_argument("special_case_bound: unsupported shape " + lambda.str());

    SpecialCaseResult res;
    res.n = n;
    res.bound = bound;
    res.threshold = (r + 1) * (n * n / 4);
    res.strict = bound < Rat(res.threshold);
    res.quarter = Rat(r + 1) * rat_of(n * n, 4);
    res.within_quarter = bound <= res.quarter;
    return res;
}

bool special_case_difference_identity(long d_max) {
    for (long d = 0; d <= d_max; ++d) {
        const long lhs1 = (d + 7) * (d + 7) / 4 - (4 * d + 10);
        const long rhs1 = (d - 1) * (d - 1) / 4 + 2;
        if (lhs1 != rhs1) return false;
        const long lhs2 = (d + 10) * (d + 10) / 4 - (6 * d + 20);
        const long rhs2 = (d - 2) * (d - 2) / 4 + 4;
        if (lhs2 != rhs2) return false;
    }
    return true;
}

}  // namespace bounds
}  // namespace nilcomm
