#include "nilcomm/nilpotent.hpp"

#include <stdexcept>

namespace nilcomm {

namespace {

std::vector<BlockGroup> grouped_layout(const Partition& lambda) {
    std::vector<BlockGroup> layout;
    int offset = 0;
    for (int size = lambda.max_part(); size >= 1; --size) {
        const int mult = lambda.multiplicity(size);
        if (mult == 0) continue;
        layout.push_back({size, mult, offset});
        offset += size * mult;
    }
    return layout;
}

}  // namespace

template <class F>
StandardNilpotent<F> standard_nilpotent(const Partition& lambda, F field) {
    const auto layout = grouped_layout(lambda);
    Matrix<F> m(field, lambda.n(), lambda.n());
    for (const BlockGroup& g : layout) {
        // I_{mult} blocks on the superdiagonal of the i*mult sized group.
        for (int blockrow = 0; blockrow + 1 < g.part; ++blockrow)
            for (int k = 0; k < g.mult; ++k) {
                const int row = g.offset + blockrow * g.mult + k;
                const int col = g.offset + (blockrow + 1) * g.mult + k;
                m.at(row, col) = field.one();
            }
    }
    return {lambda, std::move(m), layout};
}

Cocharacter associated_cocharacter(const Partition& lambda) {
    std::vector<int> weights(lambda.n());
    for (const BlockGroup& g : grouped_layout(lambda))
        for (int blockrow = 0; blockrow < g.part; ++blockrow)
            for (int k = 0; k < g.mult; ++k)
                weights[g.offset + blockrow * g.mult + k] = g.part - 1 - 2 * blockrow;
    return {std::move(weights)};
}

template <class F>
GradedCentralizer<F> graded_centralizer(const StandardNilpotent<F>& x) {
    const F field = x.matrix.field();
    const std::size_t n = x.matrix.rows();
    const Cocharacter cochar = associated_cocharacter(x.partition);
    const auto& w = cochar.weights;

    // Matrix positions grouped by cocharacter weight w_u - w_v.
    std::map<int, std::vector<std::pair<std::size_t, std::size_t>>> positions;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) positions[w[u] - w[v]].push_back({u, v});

    GradedCentralizer<F> result{x, cochar, {}};
    for (const auto& [weight, unknowns] : positions) {
        // ad(x) raises weight by 2, so [x,y] = 0 restricted to weight-w y
        // only involves the weight-(w+2) positions as equations.
        auto eq_it = positions.find(weight + 2);
        std::vector<std::pair<std::size_t, std::size_t>> equations =
            eq_it == positions.end() ? std::vector<std::pair<std::size_t, std::size_t>>{}
                                     : eq_it->second;

        Matrix<F> sys(field, equations.size(), unknowns.size());
        for (std::size_t col = 0; col < unknowns.size(); ++col) {
            const auto [p, q] = unknowns[col];
            for (std::size_t row = 0; row < equations.size(); ++row) {
                const auto [u, v] = equations[row];
                // Coefficient of y_{pq} in (x y - y x)_{uv}.
                typename F::Elem coeff = field.zero();
                if (q == v) coeff = field.add(coeff, x.matrix.at(u, p));
                if (p == u) coeff = field.sub(coeff, x.matrix.at(q, v));
                sys.at(row, col) = coeff;
            }
        }

        std::vector<Matrix<F>> basis;
        for (const Matrix<F>& k : kernel_basis(sys)) {
            Matrix<F> y(field, n, n);
            for (std::size_t col = 0; col < unknowns.size(); ++col)
                y.at(unknowns[col].first, unknowns[col].second) = k.at(col, 0);
            basis.push_back(std::move(y));
        }
        if (!basis.empty()) result.components.emplace(weight, std::move(basis));
    }
    return result;
}

bool pencil_in_orbit_closure(const RatMatrix& em, const RatMatrix& y) {
    em.check_same_field(y);
    if (!y.square() || y.rows() != em.rows())
        throw std::invalid_argument("pencil test: y must match the size of e");
    if (!is_nilpotent(em)) throw std::invalid_argument("pencil test: e must be nilpotent");
    if (!commutator(em, y).is_zero())
        throw std::invalid_argument("pencil test: y must centralize e");
    if (!is_nilpotent(y)) throw std::invalid_argument("pencil test: y must be nilpotent");

    const std::size_t n = em.rows();
    std::vector<std::size_t> rank_e_pow(n + 1);
    {
        RatMatrix p = em;
        for (std::size_t s = 1; s <= n; ++s) {
            rank_e_pow[s] = rank(p);
            if (s < n) p = p * em;
        }
    }

    // eta = 0 reproduces e itself; the pure-y point covers xi = 0.
    for (std::size_t s = 1; s <= n; ++s)
        if (rank(mat_pow(y, s)) > rank_e_pow[s]) return false;
    const std::size_t eta_max = n * n;
    for (std::size_t eta = 1; eta <= eta_max; ++eta) {
        RatMatrix m = em + y.scaled(Rat(static_cast<long>(eta)));
        RatMatrix p = m;
        for (std::size_t s = 1; s <= n; ++s) {
            // Minors of (e + eta*y)^s have degree <= s*n, so the points
            // eta = 0..s*n decide the power-s condition for all scalars.
            if (eta <= s * n && rank(p) > rank_e_pow[s]) return false;
            if (s < n) p = p * m;
        }
    }
    return true;
}

bool pencil_in_orbit_closure(const StandardNilpotent<RationalField>& e, const RatMatrix& y) {
    return pencil_in_orbit_closure(e.matrix, y);
}

bool pencil_charp_degeneration(std::uint64_t p) {
    if (p == 2) throw std::invalid_argument("characteristic 2 is excluded");
    PrimeField field(p);

    const auto e = standard_nilpotent(Partition{static_cast<int>(p), static_cast<int>(p)}, field);
    const FpMatrix e0 = weight_zero_unit(e, 0, 0, 1);

    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) {
            FpMatrix m = e0.scaled(a) + e.matrix.scaled(b);
            if (!mat_pow(m, p).is_zero()) return false;
        }
    return true;
}

template <class F>
Matrix<F> weight_zero_unit(const StandardNilpotent<F>& x, std::size_t group, std::size_t row,
                           std::size_t col) {
    if (group >= x.layout.size()) throw std::invalid_argument("weight_zero_unit: group index");
    const BlockGroup& g = x.layout[group];
    if (row >= static_cast<std::size_t>(g.mult) || col >= static_cast<std::size_t>(g.mult))
        throw std::invalid_argument("weight_zero_unit: position outside gl_{a_i}");
    const F field = x.matrix.field();
    Matrix<F> m(field, x.matrix.rows(), x.matrix.cols());
    // Delta_i(E_{row,col}): one copy of E_{row,col} per block row of the group.
    for (int blockrow = 0; blockrow < g.part; ++blockrow)
        m.at(g.offset + blockrow * g.mult + row, g.offset + blockrow * g.mult + col) = field.one();
    return m;
}

template StandardNilpotent<RationalField> standard_nilpotent(const Partition&, RationalField);
template StandardNilpotent<PrimeField> standard_nilpotent(const Partition&, PrimeField);
template GradedCentralizer<RationalField> graded_centralizer(const StandardNilpotent<RationalField>&);
template GradedCentralizer<PrimeField> graded_centralizer(const StandardNilpotent<PrimeField>&);
template RatMatrix weight_zero_unit(const StandardNilpotent<RationalField>&, std::size_t,
                                    std::size_t, std::size_t);
template FpMatrix weight_zero_unit(const StandardNilpotent<PrimeField>&, std::size_t, std::size_t,
                                   std::size_t);

}  // namespace nilcomm
