#include "nilcomm/components.hpp"

#include <string>

#include "nilcomm/rng.hpp"

namespace nilcomm {

namespace {

long floor_quarter_square(long n) { return n * n / 4; }

void check_established_range(int n, int r) {
    if (n < 4 || r < 7)
        throw OutOfEstablishedRange("formula not established for n=" + std::to_string(n) +
                                    ", r=" + std::to_string(r) + " (needs n >= 4, r >= 7)");
}

}  // namespace

template <class F>
BlockNilradical<F> block_nilradical(F field, int n, int s) {
    if (s < 0 || s > n) throw std::invalid_argument("block_nilradical: need 0 <= s <= n");
    BlockNilradical<F> u{n, s, {}};
    for (int i = 0; i < s; ++i)
        for (int j = s; j < n; ++j) u.basis.push_back(Matrix<F>::unit(field, n, i, j));
    return u;
}

long block_component_dim(int n, int s, int r) {
    if (s < 0 || s > n || r < 1) throw std::invalid_argument("block_component_dim: bad input");
    return static_cast<long>(r + 1) * s * (n - s);
}

NilpotentCommutingDim nilpotent_commuting_dim(int n, int r) {
    check_established_range(n, r);
    return {static_cast<long>(r + 1) * floor_quarter_square(n), n % 2 == 0 ? 1 : 2};
}

long gl_commuting_dim(int n, int r) {
    check_established_range(n, r);
    if (n == 4 && r == 7) return 40;
    return static_cast<long>(r + 1) * floor_quarter_square(n) + r;
}

long sl_commuting_dim(int n, int r, std::uint64_t p) {
    check_established_range(n, r);
    if (p == 2 || p == 3 || !is_prime_u64(p))
        throw std::invalid_argument("sl_commuting_dim: p must be a prime other than 2, 3");
    if (n % static_cast<int>(p) == 0) return gl_commuting_dim(n, r);
    if (n == 4 && r == 7) return 33;
    return static_cast<long>(r + 1) * floor_quarter_square(n);
}

long regular_component_dim(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("regular_component_dim: need n, r >= 1");
    return static_cast<long>(n - 1) * (r + n - 1);
}

long generic_component_dim(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("generic_component_dim: need n, r >= 1");
    return static_cast<long>(n) * n + static_cast<long>(r - 1) * n;
}

CrossoverLists crossover_lists(int n_max, int r_max) {
    if (n_max < 4 || r_max < 4) throw std::invalid_argument("crossover_lists: need bounds >= 4");
    CrossoverLists lists;
    for (int n = 4; n <= n_max; ++n)
        for (int r = 4; r <= r_max; ++r) {
            const long block = static_cast<long>(r + 1) * floor_quarter_square(n);
            if (regular_component_dim(n, r) > block) lists.nilpotent_regular.push_back({n, r});
            if (generic_component_dim(n, r) > block + r) lists.ordinary_generic.push_back({n, r});
        }
    return lists;
}

template <class F>
bool tuple_in_block_closure(const std::vector<Matrix<F>>& tuple, int s) {
    if (tuple.empty()) throw std::invalid_argument("tuple_in_block_closure: empty tuple");
    const F field = tuple.front().field();
    const std::size_t n = tuple.front().rows();
    if (s < 0 || static_cast<std::size_t>(s) > n)
        throw std::invalid_argument("tuple_in_block_closure: need 0 <= s <= n");
    for (const auto& x : tuple) {
        tuple.front().check_same_field(x);
        if (!x.square() || x.rows() != n)
            throw std::invalid_argument("tuple_in_block_closure: sizes differ");
    }
    for (const auto& x : tuple)
        for (const auto& y : tuple)
            if (!(x * y).is_zero()) return false;

    const std::size_t r = tuple.size();
    Matrix<F> stacked_rows(field, r * n, n);
    Matrix<F> stacked_cols(field, n, r * n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                stacked_rows.at(i * n + u, v) = tuple[i].at(u, v);
                stacked_cols.at(u, i * n + v) = tuple[i].at(u, v);
            }
    return rank(stacked_rows) <= n - static_cast<std::size_t>(s) &&
           rank(stacked_cols) <= static_cast<std::size_t>(s);
}

namespace {

JacobianResult jacobian_sample(int n, int s, int r, std::uint64_t seed, int attempt) {
    SplitMix64 rng(seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(attempt));
    RationalField field;
    const int u_dim = s * (n - s);

    // y_i in u_{s,n-s} with integer entries in {-9..9}.
    std::vector<RatMatrix> ys;
    for (int i = 0; i < r; ++i) {
        RatMatrix y(field, n, n);
        for (int a = 0; a < s; ++a)
            for (int b = s; b < n; ++b) y.at(a, b) = Rat(rng.range(-9, 9));
        ys.push_back(std::move(y));
    }

    // Differential of (g, v_1..v_r) -> (g v_i g^{-1}) at (1, y): rows are the
    // r*n^2 output coordinates, columns are A in gl_n followed by the v_i in u.
    const std::size_t cols = static_cast<std::size_t>(n) * n + static_cast<std::size_t>(r) * u_dim;
    RatMatrix jac(field, static_cast<std::size_t>(r) * n * n, cols);
    for (int i = 0; i < r; ++i)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                const std::size_t row =
                    static_cast<std::size_t>(i) * n * n + static_cast<std::size_t>(u) * n + v;
                // [A, y_i]_{uv} depends on row u and column v of A.
                for (int q = 0; q < n; ++q) {
                    jac.at(row, static_cast<std::size_t>(u) * n + q) += ys[i].at(q, v);
                    jac.at(row, static_cast<std::size_t>(q) * n + v) -= ys[i].at(u, q);
                }
                if (u < s && v >= s) {
                    const std::size_t vcol = static_cast<std::size_t>(n) * n +
                                             static_cast<std::size_t>(i) * u_dim +
                                             static_cast<std::size_t>(u) * (n - s) + (v - s);
                    jac.at(row, vcol) += 1;
                }
            }
    return {static_cast<long>(rank(jac)), attempt + 1, seed};
}

}  // namespace

JacobianResult jacobian_component_dim(int n, int s, int r, std::uint64_t seed) {
    if (n < 1 || s < 0 || s > n || r < 1)
        throw std::invalid_argument("jacobian_component_dim: bad input");
    const long target = block_component_dim(n, s, r);
    JacobianResult best{-1, 0, seed};
    for (int attempt = 0; attempt < 5; ++attempt) {
        JacobianResult res = jacobian_sample(n, s, r, seed, attempt);
        if (res.rank > best.rank) best = res;
        if (best.rank == target) break;
    }
    return best;
}

template BlockNilradical<RationalField> block_nilradical(RationalField, int, int);
template BlockNilradical<PrimeField> block_nilradical(PrimeField, int, int);
template bool tuple_in_block_closure(const std::vector<RatMatrix>&, int);
template bool tuple_in_block_closure(const std::vector<FpMatrix>&, int);

}  // namespace nilcomm
