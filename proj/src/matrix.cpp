#include "nilcomm/matrix.hpp"

#include <algorithm>

namespace nilcomm {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "q" || s == "Q" || s == "rationals") return rationals();
    if (s.rfind("p:", 0) == 0) {
        std::uint64_t p = std::stoull(s.substr(2));
        return prime(p);
    }
    throw std::invalid_argument("field spec must be 'q' or 'p:<prime>', got '" + s + "'");
}

std::string FieldSpec::str() const {
    return kind == Kind::rationals ? "q" : "p:" + std::to_string(p);
}

namespace detail {

std::vector<Int> integer_row(const RatMatrix& m, std::size_t i) {
    Int l(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    std::vector<Int> row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Rat& x = m.at(i, j);
        row[j] = x.get_num() * (l / x.get_den());
    }
    return row;
}

std::size_t bareiss_rank(std::vector<std::vector<Int>>& a) {
    std::size_t m = a.size();
    if (m == 0) return 0;
    const std::size_t n = a[0].size();
    Int prev(1);
    std::size_t rk = 0;
    while (rk < m && rk < n) {
        // Pivot of minimal absolute value; keeps intermediate minors small.
        std::size_t pi = 0, pj = 0;
        bool found = false;
        for (std::size_t i = rk; i < m; ++i)
            for (std::size_t j = rk; j < n; ++j) {
                if (sgn(a[i][j]) == 0) continue;
                if (!found || mpz_cmpabs(a[i][j].get_mpz_t(), a[pi][pj].get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(a[rk], a[pi]);
        if (pj != rk)
            for (std::size_t i = 0; i < m; ++i) std::swap(a[i][rk], a[i][pj]);
        const Int piv = a[rk][rk];
        for (std::size_t i = rk + 1; i < m; ++i) {
            for (std::size_t j = rk + 1; j < n; ++j) {
                Int t = a[i][j] * piv - a[i][rk] * a[rk][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
            a[i][rk] = 0;
        }
        // Drop rows that became zero; only the rank is wanted.
        for (std::size_t i = m; i-- > rk + 1;) {
            bool zero = true;
            for (std::size_t j = rk + 1; j < n && zero; ++j) zero = sgn(a[i][j]) == 0;
            if (zero) {
                std::swap(a[i], a[m - 1]);
                a.pop_back();
                --m;
            }
        }
        prev = piv;
        ++rk;
    }
    return rk;
}

}  // namespace detail

std::size_t rank(const RatMatrix& m) {
    std::vector<std::vector<Int>> a;
    a.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(detail::integer_row(m, i));
    return detail::bareiss_rank(a);
}

std::size_t rank(const FpMatrix& m) {
    const PrimeField& f = m.field();
    std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
    std::size_t rk = 0;
    for (std::size_t c = 0; c < m.cols() && rk < m.rows(); ++c) {
        std::size_t piv = rk;
        while (piv < m.rows() && a[piv][c] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[rk], a[piv]);
        const std::uint64_t inv = f.inv(a[rk][c]);
        for (std::size_t j = c; j < m.cols(); ++j) a[rk][j] = f.mul(a[rk][j], inv);
        for (std::size_t i = rk + 1; i < m.rows(); ++i) {
            if (a[i][c] == 0) continue;
            const std::uint64_t fmul = a[i][c];
            for (std::size_t j = c; j < m.cols(); ++j)
                a[i][j] = f.sub(a[i][j], f.mul(fmul, a[rk][j]));
        }
        ++rk;
    }
    return rk;
}

template <class F>
std::vector<Matrix<F>> kernel_basis(const Matrix<F>& m) {
    using Elem = typename F::Elem;
    const F& f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();

    std::vector<std::vector<Elem>> a(rows, std::vector<Elem>(cols, f.zero()));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

    // Reduced row echelon form with recorded pivot columns.
    std::vector<std::size_t> pivot_col;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t piv = rk;
        while (piv < rows && f.is_zero(a[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(a[rk], a[piv]);
        const Elem inv = f.inv(a[rk][c]);
        for (std::size_t j = c; j < cols; ++j) a[rk][j] = f.mul(a[rk][j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rk || f.is_zero(a[i][c])) continue;
            const Elem fac = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] = f.sub(a[i][j], f.mul(fac, a[rk][j]));
        }
        pivot_col.push_back(c);
        ++rk;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<Matrix<F>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        Matrix<F> v(f, cols, 1);
        v.at(fc, 0) = f.one();
        for (std::size_t r = 0; r < rk; ++r) v.at(pivot_col[r], 0) = f.neg(a[r][fc]);
        basis.push_back(std::move(v));
    }
    return basis;
}

template std::vector<RatMatrix> kernel_basis(const RatMatrix&);
template std::vector<FpMatrix> kernel_basis(const FpMatrix&);

}  // namespace nilcomm
