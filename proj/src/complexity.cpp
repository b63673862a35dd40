#include "nilcomm/complexity.hpp"

#include <stdexcept>

#include "nilcomm/components.hpp"

namespace nilcomm {

void ComplexityQuery::validate() const {
    if (n < 4 || r < 7)
        throw std::invalid_argument("complexity query out of range: need n >= 4, r >= 7");
    if (p <= 3 || !is_prime_u64(p))
        throw std::invalid_argument("complexity query: p must be a prime > 3");
}

long frobenius_kernel_complexity(const ComplexityQuery& q) {
    q.validate();
    return static_cast<long>(q.r + 1) * (static_cast<long>(q.n) * q.n / 4);
}

long chevalley_p_rank_sln(int n, int r) {
    if (n < 2 || r < 0) throw std::invalid_argument("chevalley_p_rank_sln: need n >= 2, r >= 0");
    return static_cast<long>(r) * (static_cast<long>(n) * n / 4);
}

RatioCheck complexity_ratio_check(int n, int r, std::uint64_t p) {
    const ComplexityQuery q{n, r, p};
    const long kernel = frobenius_kernel_complexity(q);
    RatioCheck check;
    check.finite_group = chevalley_p_rank_sln(n, r);
    check.scaled_kernel = Rat(r, r + 1) * Rat(kernel);
    check.scaled_kernel.canonicalize();
    check.equal = Rat(check.finite_group) == check.scaled_kernel;
    return check;
}

std::vector<long> WeightDigits::reassemble() const {
    std::vector<long> out(lambda.size(), 0);
    long power = 1;
    for (int i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += digits[i][k] * power;
        power *= static_cast<long>(p);
    }
    return out;
}

WeightDigits p_adic_decompose(const std::vector<long>& lambda, std::uint64_t p, int r) {
    if (!is_prime_u64(p)) throw std::invalid_argument("p_adic_decompose: p must be prime");
    if (r < 1) throw std::invalid_argument("p_adic_decompose: need r >= 1");
    long bound = 1;
    for (int i = 0; i < r; ++i) {
        if (bound > static_cast<long>(1e15) / static_cast<long>(p))
            throw std::invalid_argument("p_adic_decompose: p^r too large");
        bound *= static_cast<long>(p);
    }
    for (long v : lambda)
        if (v < 0 || v >= bound)
            throw std::invalid_argument("p_adic_decompose: weight is not p^r-restricted");

    WeightDigits wd{lambda, p, r, {}};
    std::vector<long> rest = lambda;
    for (int i = 0; i < r; ++i) {
        std::vector<long> digit(lambda.size());
        for (std::size_t k = 0; k < rest.size(); ++k) {
            digit[k] = rest[k] % static_cast<long>(p);
            rest[k] /= static_cast<long>(p);
        }
        wd.digits.push_back(std::move(digit));
    }
    return wd;
}

std::optional<bool> frobenius_matches_nilpotent_dim(int n, int r, std::uint64_t p) {
    const ComplexityQuery q{n, r, p};
    q.validate();
    if (p <= static_cast<std::uint64_t>(n)) return std::nullopt;  // restricted nullcone case not computed
    return frobenius_kernel_complexity(q) == nilpotent_commuting_dim(n, r).dim;
}

}  // namespace nilcomm
