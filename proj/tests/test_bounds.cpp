#include <doctest.h>

#include <algorithm>

#include "nilcomm/bounds.hpp"

using namespace nilcomm;
using namespace nilcomm::bounds;

TEST_CASE("gl commuting bound") {
    CHECK(commuting_gl_bound(0, 9) == Rat(0));
    CHECK(commuting_gl_bound(1, 7) == Rat(6));
    CHECK(commuting_gl_bound(2, 7) == Rat(15));
    CHECK(commuting_gl_bound(3, 7) == Rat(323, 12));
    CHECK_THROWS_AS(commuting_gl_bound(-1, 7), std::invalid_argument);
}

TEST_CASE("linked tuple bound") {
    CHECK(linked_tuple_bound(1, 1, 0, 7) == Rat(0));
    CHECK(linked_tuple_bound(1, 0, 1, 7) == Rat(8));
    CHECK(linked_tuple_bound(0, 1, 2, 7) == Rat(61, 2));
    CHECK(linked_tuple_bound(2, 1, 1, 7) == Rat(6 * 3 + 1));
    CHECK_THROWS_AS(linked_tuple_bound(0, 0, 2, 7), std::invalid_argument);

    // The two c >= 2 branches agree on their common boundary c = a + b.
    for (long a = 0; a <= 15; ++a)
        for (long b = (a == 0 ? 1 : 0); b <= 15; ++b) {
            const long c = a + b;
            if (c < 2 || c > 30) continue;
            const Rat base = rat_of(a * a, 11) + Rat(c * c + 2 * a * c + 2 * b * c);
            const Rat big = base + Rat(5) * (Rat(c * c) + rat_of((a + b) * (a + b), 2));
            const Rat small = base + Rat(5) * (rat_of(c * c, 2) + Rat((a + b) * c));
            CHECK(big == small);
            CHECK(linked_tuple_bound(a, b, c, 7) == big);
        }
}

TEST_CASE("orbit dimension term") {
    CHECK(orbit_dim_term(0, 0, 0, 0) == 0);
    CHECK(orbit_dim_term(1, 1, 0, 0) == 36);
    CHECK(orbit_dim_term(0, 1, 0, 0) == 6);

    // Cross-module: it is the orbit dimension of [4^a 3^b 2^c 1^d].
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b)
            for (long c = 0; c <= 3; ++c)
                for (long d = 0; d <= 3; ++d) {
                    if (a + b + c + d == 0) continue;
                    std::vector<int> parts;
                    parts.insert(parts.end(), a, 4);
                    parts.insert(parts.end(), b, 3);
                    parts.insert(parts.end(), c, 2);
                    parts.insert(parts.end(), d, 1);
                    CHECK(orbit_dim_term(a, b, c, d) == orbit_dim(Partition(parts)));
                }
}

TEST_CASE("margins: recorded values") {
    const Margins m1100 = margins(1, 1, 0, 0, 7);
    CHECK(m1100.sharp == Rat(0));
    const Margins m0100 = margins(0, 1, 0, 0, 7);
    CHECK(m0100.weak == Rat(-2));
    CHECK(m0100.sharp == Rat(-2));
    const Margins big = margins(2, 3, 2, 1, 7);
    CHECK(big.sharp > 0);
    CHECK_THROWS_AS(margins(0, 0, 1, 1, 7), std::invalid_argument);
}

TEST_CASE("sharp margin dominates the weak margin") {
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 5; ++b) {
            if (a == 0 && b == 0) continue;
            for (long c = 0; c <= 4; ++c)
                for (long d = 0; d <= 6; ++d)
                    for (long r : {7L, 9L, 12L}) {
                        const Margins m = margins(a, b, c, d, r);
                        CHECK(m.sharp >= m.weak);
                    }
        }
}

TEST_CASE("margin positivity is monotone for r in 7..20 outside the recorded list") {
    const Box box;
    for (long a = 0; a <= box.a; ++a)
        for (long b = 0; b <= box.b; ++b) {
            if (a == 0 && b == 0) continue;
            for (long c = 0; c <= box.c; ++c)
                for (long d = 0; d <= box.d; ++d) {
                    const Tuple t{a, b, c, d};
                    if (std::find(kNonpositiveList.begin(), kNonpositiveList.end(), t) !=
                        kNonpositiveList.end())
                        continue;
                    for (long r = 7; r <= 20; ++r) CHECK(margins(a, b, c, d, r).sharp > 0);
                }
        }
}

TEST_CASE("exception list report on the default box") {
    const auto rep = verify_exception_lists(Box{}, 7);
    CHECK(rep.matches_nonpositive_list);
    CHECK(rep.nonpositive_sharp.size() == 16);
    CHECK(rep.weak_bound_holds);
    CHECK(rep.weak_bound_parity);
    CHECK(rep.slope_branch_stable);

    // The r-coefficient is negative at exactly one shape.
    CHECK(rep.slope_negative == std::vector<Tuple>{{0, 1, 0, 1}});

    // The square lower bound on the slope fails precisely along (0,1,0,d):
    // there the slope equals (d-1)^2/4 - 1/4.
    for (const Tuple& t : rep.slope_below_square) {
        CHECK(t[0] == 0);
        CHECK(t[1] == 1);
        CHECK(t[2] == 0);
    }
    CHECK(rep.slope_below_square.size() == 13);  // d = 0..12
    for (long d = 0; d <= 12; ++d)
        CHECK(margin_r_slope(0, 1, 0, d) == rat_of((d - 1) * (d - 1), 4) - rat_of(1, 4));

    CHECK_THROWS_AS(verify_exception_lists(Box{4, 8, 6, 12}, 7), std::invalid_argument);
}

TEST_CASE("weak-bound list values at r = 7") {
    // All six entries exceed -(r+1)/4 = -2; the three shapes (0,1,0,d) with
    // d <= 2 sit at or below -2, which is why they are not on the list.
    for (const Tuple& t : kWeakBoundList) {
        const Rat sharp = margins(t[0], t[1], t[2], t[3], 7).sharp;
        CHECK(sharp > Rat(-2));
        CHECK(sharp <= Rat(0));
        CHECK(n_of(t) % 2 == 0);
    }
    CHECK(margins(0, 1, 0, 0, 7).sharp == Rat(-2));
    CHECK(margins(0, 1, 0, 1, 7).sharp == Rat(-4));
    CHECK(margins(0, 1, 0, 2, 7).sharp == Rat(-2));
}

TEST_CASE("square identities") {
    const auto checks = verify_square_identities();
    REQUIRE(checks.size() == 7);
    int controls = 0;
    for (const auto& c : checks) {
        if (c.negative_control) {
            CHECK_FALSE(c.holds);
            ++controls;
        } else {
            CHECK(c.holds);
        }
    }
    CHECK(controls == 1);
}

TEST_CASE("square decomposition evaluates to the margin on its branch") {
    // Independent pointwise route: build the displayed decomposition of the
    // r = 7 margin on the branch b >= 3, c >= max(2, a+b) and compare it
    // with direct evaluation (no floors are active on that branch).
    using P = MultivarPoly;
    const P A = P::a(), B = P::b(), C = P::c(), D = P::d();
    const P sos = (Rat(6) * A + Rat(2) * B) * (C - A - B) +
                  Rat(2) * sq(D - B - Rat(1, 2) * A) + Rat(54, 11) * sq(A) + A * B +
                  Rat(11, 12) * sq(B) - Rat(17, 3);
    for (long a = 0; a <= 3; ++a)
        for (long b = 3; b <= 6; ++b)
            for (long c = std::max(a + b, 2L); c <= a + b + 3; ++c)
                for (long d = 0; d <= 5; ++d)
                    CHECK(sos.evaluate(Rat(a), Rat(b), Rat(c), Rat(d)) ==
                          margins(a, b, c, d, 7).weak);

    // Fixing b slices the same identity.
    const P sliced = sos.substitute(1, Rat(4));
    for (long a = 0; a <= 3; ++a)
        for (long c = a + 4; c <= a + 6; ++c)
            for (long d = 0; d <= 4; ++d)
                CHECK(sliced.evaluate(Rat(a), Rat(0), Rat(c), Rat(d)) ==
                      margins(a, 4, c, d, 7).weak);
}

TEST_CASE("slice constants") {
    const auto rep = verify_slice_constants();
    REQUIRE(rep.slices.size() == 5);
    for (const auto& s : rep.slices) {
        CAPTURE(s.b);
        CAPTURE(s.c);
        CHECK(s.constant_ok);
        CHECK(s.closed_form_ok);
        CHECK(s.exceptions_ok);
    }
    CHECK(rep.slices[0].expected == Rat(-2, 3));
    CHECK(rep.slices[1].expected == Rat(-1));
    CHECK(rep.slices[2].expected == Rat(-14, 3));
    CHECK(rep.slices[3].expected == Rat(-11, 3));
    CHECK(rep.slices[4].expected == Rat(-2));
    CHECK(rep.special_slice_ok);
}

TEST_CASE("special case bounds") {
    const auto r43 = special_case_bound(Partition{4, 3}, 7);
    CHECK(r43.bound == Rat(86));
    CHECK(r43.threshold == 96);
    CHECK(r43.strict);

    const auto r3 = special_case_bound(Partition{3}, 7);
    CHECK(r3.bound == Rat(18));
    CHECK(r3.threshold == 16);
    CHECK_FALSE(r3.strict);
    CHECK(r3.within_quarter);  // 18 <= 8 * 9/4

    const auto r3221 = special_case_bound(Partition({3, 2, 2, 1}), 7);
    CHECK(r3221.bound == Rat(126));
    CHECK(r3221.threshold == 128);
    CHECK(r3221.strict);

    CHECK_THROWS_AS(special_case_bound(Partition({3, 1, 1, 1}), 7), std::invalid_argument);
    CHECK_THROWS_AS(special_case_bound(Partition{5}, 7), std::invalid_argument);
    CHECK_THROWS_AS(special_case_bound(Partition{4, 3}, 6), std::invalid_argument);

    CHECK(special_case_difference_identity(20));
}
