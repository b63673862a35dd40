#include "nilcomm/counting.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "nilcomm/matrix.hpp"

namespace nilcomm {

namespace {

using U64 = std::uint64_t;
using Cells = std::vector<std::uint32_t>;  // row-major entries, reduced mod q

bool fits_budget(U64 q, long cells, U64 budget) {
    U64 total = 1;
    for (long i = 0; i < cells; ++i) {
        if (total > budget / q) return false;
        total *= q;
    }
    return total <= budget;
}

void require_budget(U64 q, long cells, U64 budget, const char* what) {
    if (!fits_budget(q, cells, budget))
        throw BudgetExceeded(std::string(what) + ": enumeration space q^" +
                             std::to_string(cells) + " exceeds budget");
}

/// All matrices of a given shape over F_q, in odometer order.
std::vector<Cells> all_matrices(int rows, int cols, U64 q) {
    const long cells = static_cast<long>(rows) * cols;
    std::vector<Cells> out;
    Cells cur(cells, 0);
    while (true) {
        out.push_back(cur);
        long i = 0;
        while (i < cells && cur[i] + 1 == q) cur[i++] = 0;
        if (i == cells) break;
        ++cur[i];
    }
    return out;
}

Cells mul(const Cells& a, int ra, int ca, const Cells& b, int cb, U64 q) {
    Cells r(static_cast<std::size_t>(ra) * cb, 0);
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < cb; ++j) {
            U64 acc = 0;
            for (int k = 0; k < ca; ++k) acc += static_cast<U64>(a[i * ca + k]) * b[k * cb + j];
            r[i * cb + j] = static_cast<std::uint32_t>(acc % q);
        }
    return r;
}

bool all_zero(const Cells& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t x) { return x == 0; });
}

int rank_mod(Cells a, int rows, int cols, U64 q) {
    int rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
        int piv = rk;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        for (int j = 0; j < cols; ++j) std::swap(a[rk * cols + j], a[piv * cols + j]);
        U64 inv = 1, base = a[rk * cols + c], e = q - 2;
        while (e) {
            if (e & 1) inv = inv * base % q;
            base = base * base % q;
            e >>= 1;
        }
        for (int j = c; j < cols; ++j)
            a[rk * cols + j] = static_cast<std::uint32_t>(a[rk * cols + j] * inv % q);
        for (int i = 0; i < rows; ++i) {
            if (i == rk || a[i * cols + c] == 0) continue;
            const U64 f = a[i * cols + c];
            for (int j = c; j < cols; ++j)
                a[i * cols + j] = static_cast<std::uint32_t>(
                    (a[i * cols + j] + (q - a[rk * cols + j] * f % q)) % q);
        }
        ++rk;
    }
    return rk;
}

void check_prime(U64 q) {
    if (!is_prime_u64(q)) throw std::invalid_argument("q must be prime");
}

}  // namespace

std::uint64_t count_mutually_annihilating(int s, int t, U64 q, U64 budget) {
    if (s < 0 || t < 0) throw std::invalid_argument("count_mutually_annihilating: bad shape");
    check_prime(q);
    if (s == 0 || t == 0) return 1;  // only the pair of empty matrices
    require_budget(q, 2L * s * t, budget, "U");
    const auto ys = all_matrices(s, t, q);
    const auto zs = all_matrices(t, s, q);
    U64 cnt = 0;
    for (const Cells& y : ys)
        for (const Cells& z : zs)
            if (all_zero(mul(y, s, t, z, s, q)) && all_zero(mul(z, t, s, y, t, q))) ++cnt;
    return cnt;
}

std::uint64_t count_cross_symmetric(int r, int s, int t, U64 q, U64 budget) {
    if (r < 1 || s < 0 || t < 0) throw std::invalid_argument("count_cross_symmetric: bad shape");
    check_prime(q);
    if (s == 0 || t == 0) return 1;
    require_budget(q, 2L * s * t * r, budget, "W");
    const auto ys = all_matrices(s, t, q);
    const auto zs = all_matrices(t, s, q);

    std::vector<std::size_t> yi(r), zi(r);
    U64 cnt = 0;
    std::function<void(int)> rec = [&](int level) {
        if (level == r) {
            ++cnt;
            return;
        }
        for (std::size_t a = 0; a < ys.size(); ++a) {
            for (std::size_t b = 0; b < zs.size(); ++b) {
                bool ok = true;
                for (int i = 0; i < level && ok; ++i)
                    ok = mul(ys[yi[i]], s, t, zs[b], s, q) == mul(ys[a], s, t, zs[zi[i]], s, q);
                if (!ok) continue;
                yi[level] = a;
                zi[level] = b;
                rec(level + 1);
            }
        }
    };
    rec(0);
    return cnt;
}

std::uint64_t count_rank_stratum(int c, int m, int l, U64 q, U64 budget) {
    if (c < 0 || m < 0 || l < 0 || 2 * m + l > c)
        throw std::invalid_argument("count_rank_stratum: need 2m + l <= c");
    check_prime(q);
    if (c == 0) return 1;  // the empty matrix, rank conditions vacuous
    require_budget(q, static_cast<long>(c) * c, budget, "V");
    const int target1 = c - m - l, target2 = c - 2 * m - l;
    U64 cnt = 0;
    Cells u(static_cast<std::size_t>(c) * c, 0);
    while (true) {
        if (rank_mod(u, c, c, q) == target1 &&
            rank_mod(mul(u, c, c, u, c, q), c, c, q) == target2)
            ++cnt;
        long i = 0;
        const long cells = static_cast<long>(c) * c;
        while (i < cells && u[i] + 1 == q) u[i++] = 0;
        if (i == cells) break;
        ++u[i];
    }
    return cnt;
}

namespace {

struct CnilContext {
    int n;
    U64 q;
    int r;
    U64 budget;
    U64 work = 0;
    U64 count = 0;
    PrimeField field;

    CnilContext(int n, U64 q, int r, U64 budget)
        : n(n), q(q), r(r), budget(budget), field(q) {}

    void charge() {
        if (++work > budget) throw BudgetExceeded("Cnil: enumeration work exceeds budget");
    }

    bool nilpotent(const Cells& x) const {
        Cells p = x;
        for (int i = 1; i < n; ++i) p = mul(p, n, n, x, n, q);
        return all_zero(p);
    }

    Cells bracket(const Cells& x, const Cells& y) const {
        Cells xy = mul(x, n, n, y, n, q), yx = mul(y, n, n, x, n, q);
        for (std::size_t k = 0; k < xy.size(); ++k)
            xy[k] = static_cast<std::uint32_t>((xy[k] + q - yx[k]) % q);
        return xy;
    }

    /// Basis of {v in span(basis) : [y, v] = 0}.
    std::vector<Cells> centralize(const std::vector<Cells>& basis, const Cells& y) const {
        FpMatrix sys(field, static_cast<std::size_t>(n) * n, basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const Cells br = bracket(y, basis[j]);
            for (std::size_t i = 0; i < br.size(); ++i) sys.at(i, j) = br[i];
        }
        std::vector<Cells> out;
        for (const FpMatrix& coeff : kernel_basis(sys)) {
            Cells v(static_cast<std::size_t>(n) * n, 0);
            for (std::size_t j = 0; j < basis.size(); ++j) {
                const U64 cj = coeff.at(j, 0);
                if (cj == 0) continue;
                for (std::size_t k = 0; k < v.size(); ++k)
                    v[k] = static_cast<std::uint32_t>((v[k] + cj * basis[j][k]) % q);
            }
            out.push_back(std::move(v));
        }
        return out;
    }

    void visit(const Cells& y, const std::vector<Cells>& basis, int level) {
        charge();
        if (!nilpotent(y)) return;
        if (level == r) {
            ++count;
            return;
        }
        const auto next = centralize(basis, y);
        enumerate_span(next, level + 1);
    }

    void enumerate_span(const std::vector<Cells>& basis, int level) {
        Cells acc(static_cast<std::size_t>(n) * n, 0);
        span_rec(basis, 0, acc, level);
    }

    void span_rec(const std::vector<Cells>& basis, std::size_t idx, const Cells& acc, int level) {
        if (idx == basis.size()) {
            visit(acc, basis, level);
            return;
        }
        Cells next = acc;
        for (U64 coeff = 0; coeff < q; ++coeff) {
            span_rec(basis, idx + 1, next, level);
            if (coeff + 1 < q)
                for (std::size_t k = 0; k < next.size(); ++k)
                    next[k] = static_cast<std::uint32_t>((next[k] + basis[idx][k]) % q);
        }
    }
};

}  // namespace

std::uint64_t count_commuting_nilpotent(int n, int r, U64 q, U64 budget) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("count_commuting_nilpotent: only n <= 3 is enumerable");
    if (r < 1) throw std::invalid_argument("count_commuting_nilpotent: need r >= 1");
    check_prime(q);
    require_budget(q, static_cast<long>(n) * n, budget, "Cnil");

    CnilContext ctx(n, q, r, budget);
    std::vector<Cells> full;
    for (int i = 0; i < n * n; ++i) {
        Cells e(static_cast<std::size_t>(n) * n, 0);
        e[i] = 1;
        full.push_back(std::move(e));
    }
    ctx.enumerate_span(full, 1);
    return ctx.count;
}

Rat fit_dimension(const std::vector<std::pair<U64, U64>>& samples) {
    if (samples.size() < 2) throw std::invalid_argument("fit_dimension: need >= 2 samples");
    for (const auto& [q, c] : samples)
        if (c == 0) throw std::invalid_argument("fit_dimension: zero count");
    double acc = 0;
    int pairs = 0;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const auto& [q1, c1] = samples[i];
        const auto& [q2, c2] = samples[i + 1];
        if (q2 <= q1) throw std::invalid_argument("fit_dimension: moduli must increase");
        acc += (std::log(static_cast<double>(c2)) - std::log(static_cast<double>(c1))) /
               (std::log(static_cast<double>(q2)) - std::log(static_cast<double>(q1)));
        ++pairs;
    }
    Rat slope(static_cast<long>(std::llround(acc / pairs * 1000.0)), 1000);
    slope.canonicalize();
    return slope;
}

std::optional<long> known_dimension(const std::string& variety, const std::vector<long>& params) {
    if (variety == "U" && params.size() == 2) return params[0] * params[1];
    if (variety == "W" && params.size() == 3) {
        const long r = params[0], s = params[1], t = params[2];
        if (s == 0 || t == 0) return 0;
        if (r == 1) return 2 * s * t;  // no constraints with a single pair
        if (t == 1) {
            if (s == 1) return r + 1;
            return r >= 3 ? r * s : 2 * s + 1;
        }
        return std::nullopt;  // only upper bounds are known
    }
    if (variety == "V" && params.size() == 3) {
        const long c = params[0], m = params[1], l = params[2];
        return c * c - (2 * m * m + 2 * m * l + l * l);
    }
    if (variety == "Cnil" && params.size() == 2) {
        const long n = params[0], r = params[1];
        if (n <= 3) return (n - 1) * (r + n - 1);
        return std::nullopt;
    }
    return std::nullopt;
}

CountReport run_count(const std::string& variety, const std::vector<long>& params,
                      const std::vector<U64>& qs, std::optional<long> claimed_dim,
                      const Rat& tolerance, U64 budget) {
    CountReport rep;
    rep.variety = variety;
    rep.params = params;
    rep.tolerance = tolerance;
    rep.claimed_dim = claimed_dim ? claimed_dim : known_dimension(variety, params);

    std::vector<U64> sorted = qs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    for (U64 q : sorted) {
        try {
            U64 c = 0;
            if (variety == "U")
                c = count_mutually_annihilating(static_cast<int>(params.at(0)),
                                                static_cast<int>(params.at(1)), q, budget);
            else if (variety == "W")
                c = count_cross_symmetric(static_cast<int>(params.at(0)),
                                          static_cast<int>(params.at(1)),
                                          static_cast<int>(params.at(2)), q, budget);
            else if (variety == "V")
                c = count_rank_stratum(static_cast<int>(params.at(0)),
                                       static_cast<int>(params.at(1)),
                                       static_cast<int>(params.at(2)), q, budget);
            else if (variety == "Cnil")
                c = count_commuting_nilpotent(static_cast<int>(params.at(0)),
                                              static_cast<int>(params.at(1)), q, budget);
            else
                throw std::invalid_argument("unknown variety '" + variety + "'");
            rep.samples.push_back({q, c});
        } catch (const BudgetExceeded&) {
            rep.skipped_q.push_back(q);
        }
    }

    if (rep.samples.size() >= 2) rep.fitted_dim = fit_dimension(rep.samples);
    rep.note =
        "point-count slope at small q is a heuristic dimension estimate, not a proof";
    if (!rep.skipped_q.empty()) rep.note += "; some moduli skipped by enumeration budget";

    if (rep.fitted_dim && rep.claimed_dim) {
        Rat diff = *rep.fitted_dim - Rat(*rep.claimed_dim);
        if (sgn(diff) < 0) diff = -diff;
        rep.verdict = diff <= tolerance ? "PASS" : "FAIL";
    } else {
        rep.verdict = "INFO";
    }
    return rep;
}

}  // namespace nilcomm
