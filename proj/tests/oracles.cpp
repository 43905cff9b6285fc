#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

using cmc::Monomial;

namespace {

void extend(std::size_t n, int d, std::size_t i, Exponents& cur, std::vector<Exponents>& out) {
    if (i + 1 == n) {
        cur[i] = d;
        out.push_back(cur);
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[i] = e;
        extend(n, d - e, i + 1, cur, out);
    }
}

Exponents exponents_of(const Monomial& m, std::size_t n) {
    Exponents e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = m[i];
    return e;
}

std::map<Exponents, std::size_t> index_of(const std::vector<Exponents>& basis) {
    std::map<Exponents, std::size_t> idx;
    for (std::size_t k = 0; k < basis.size(); ++k) idx.emplace(basis[k], k);
    return idx;
}

// Rows m * g for every generator g of degree <= d and monomial m.
std::vector<Row> multiples(const RingPtr& R, const std::vector<Polynomial>& gens, int d) {
    std::vector<Row> rows;
    for (const auto& g : gens) {
        if (g.is_zero() || g.degree() > d) continue;
        for (const auto& m : monomials(R->nvars(), d - g.degree()))
            rows.push_back(coordinates(g * Polynomial::monomial(R, Monomial(m), R->field().one()), d));
    }
    return rows;
}

// Removes from v its components along the pivots of a reduced echelon basis.
void reduce(Row& v, const std::vector<Row>& basis, const std::vector<std::size_t>& pivots, const Field& F) {
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const Scalar c = v[pivots[r]];
        if (F.is_zero(c)) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(c, basis[r][j]));
    }
}

} // namespace

std::vector<Exponents> monomials(std::size_t n, int d) {
    std::vector<Exponents> out;
    if (d < 0) return out;
    if (n == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Exponents cur(n, 0);
    extend(n, d, 0, cur, out);
    return out;
}

std::vector<std::size_t> echelon(std::vector<Row>& rows, const Field& F) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t width = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && F.is_zero(rows[p][c])) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const Scalar inv = F.inv(rows[r][c]);
        for (auto& x : rows[r]) x = F.mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || F.is_zero(rows[i][c])) continue;
            const Scalar f = rows[i][c];
            for (std::size_t j = 0; j < width; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::size_t rank(std::vector<Row> rows, const Field& F) { return echelon(rows, F).size(); }

std::vector<Row> left_kernel(const std::vector<Row>& rows, std::size_t width, const Field& F) {
    // Augment with the identity and read off the combinations that vanish.
    const std::size_t k = rows.size();
    std::vector<Row> aug;
    for (std::size_t i = 0; i < k; ++i) {
        Row r = rows[i];
        r.resize(width, F.zero());
        for (std::size_t j = 0; j < k; ++j) r.push_back(i == j ? F.one() : F.zero());
        aug.push_back(std::move(r));
    }
    auto piv = echelon(aug, F);
    std::vector<Row> out;
    for (std::size_t i = 0; i < piv.size(); ++i)
        if (piv[i] >= width) out.emplace_back(aug[i].begin() + static_cast<long>(width), aug[i].end());
    return out;
}

Row coordinates(const Polynomial& f, int d) {
    const auto& R = f.ring();
    auto basis = monomials(R->nvars(), d);
    auto idx = index_of(basis);
    Row row(basis.size(), R->field().zero());
    for (const auto& t : f.terms()) {
        if (t.mono.degree() != d) throw std::invalid_argument("coordinates of a non-homogeneous polynomial");
        row[idx.at(exponents_of(t.mono, R->nvars()))] = t.coeff;
    }
    return row;
}

bool member(const Polynomial& f, const std::vector<Polynomial>& gens) {
    if (f.is_zero()) return true;
    const Field& F = f.field();
    auto rows = multiples(f.ring(), gens, f.degree());
    const std::size_t r = rank(rows, F);
    rows.push_back(coordinates(f, f.degree()));
    return rank(std::move(rows), F) == r;
}

long hilbert_function(const RingPtr& ring, const std::vector<Polynomial>& gens, int d) {
    const long total = static_cast<long>(monomials(ring->nvars(), d).size());
    return total - static_cast<long>(rank(multiples(ring, gens, d), ring->field()));
}

std::vector<mpq_class> interpolate(const std::vector<std::pair<long, long>>& points) {
    std::vector<mpq_class> out(points.size(), 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        // Lagrange basis polynomial for point i, expanded in the monomial basis.
        std::vector<mpq_class> basis{1};
        mpq_class denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            std::vector<mpq_class> next(basis.size() + 1, 0);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * points[j].first;
            }
            basis = std::move(next);
            denom *= points[i].first - points[j].first;
        }
        for (std::size_t k = 0; k < basis.size(); ++k) out[k] += basis[k] * points[i].second / denom;
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

std::vector<mpq_class> hilbert_polynomial(const RingPtr& ring, const std::vector<Polynomial>& gens, int from) {
    std::vector<std::pair<long, long>> pts;
    for (int d = from; d <= from + static_cast<int>(ring->nvars()); ++d) pts.emplace_back(d, hilbert_function(ring, gens, d));
    return interpolate(pts);
}

std::size_t tangent_dimension(const std::vector<Polynomial>& gens, int top) {
    const auto& R = gens.front().ring();
    const Field& F = R->field();
    const std::size_t n = R->nvars();
    // Unknown h_i = sum_k c_{i,k} mu_k over the monomials of degree deg(g_i).
    std::vector<std::size_t> offset;
    std::size_t unknowns = 0;
    for (const auto& g : gens) {
        offset.push_back(unknowns);
        unknowns += monomials(n, g.degree()).size();
    }
    std::vector<Row> conditions;
    for (int e = 0; e <= top; ++e) {
        // The multiples in degree e, labelled by (generator, monomial).
        std::vector<std::pair<std::size_t, Exponents>> labels;
        std::vector<Row> rows;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].degree() > e) continue;
            for (const auto& m : monomials(n, e - gens[i].degree())) {
                labels.emplace_back(i, m);
                rows.push_back(coordinates(gens[i] * Polynomial::monomial(R, Monomial(m), F.one()), e));
            }
        }
        if (rows.empty()) continue;
        const std::size_t width = monomials(n, e).size();
        auto relations = left_kernel(rows, width, F);
        std::vector<Row> ideal_part = rows;
        auto pivots = echelon(ideal_part, F);
        for (const auto& lambda : relations) {
            // Column (i,k): residue of sum_m lambda_{i,m} m mu_k modulo I_e.
            std::vector<Row> cols(unknowns, Row(width, F.zero()));
            for (std::size_t r = 0; r < labels.size(); ++r) {
                if (F.is_zero(lambda[r])) continue;
                const auto& [i, m] = labels[r];
                const auto mus = monomials(n, gens[i].degree());
                for (std::size_t k = 0; k < mus.size(); ++k) {
                    Exponents prod(n);
                    for (std::size_t v = 0; v < n; ++v) prod[v] = m[v] + mus[k][v];
                    auto row = coordinates(Polynomial::monomial(R, Monomial(prod), lambda[r]), e);
                    auto& col = cols[offset[i] + k];
                    for (std::size_t j = 0; j < width; ++j) col[j] = F.add(col[j], row[j]);
                }
            }
            for (auto& c : cols) reduce(c, ideal_part, pivots, F);
            for (std::size_t j = 0; j < width; ++j) {
                Row cond(unknowns);
                bool any = false;
                for (std::size_t u = 0; u < unknowns; ++u) {
                    cond[u] = cols[u][j];
                    any = any || !F.is_zero(cond[u]);
                }
                if (any) conditions.push_back(std::move(cond));
            }
        }
    }
    const std::size_t solutions = unknowns - (conditions.empty() ? 0 : rank(std::move(conditions), F));
    std::size_t trivial = 0;
    for (const auto& g : gens) {
        const int d = g.degree();
        trivial += monomials(n, d).size() - static_cast<std::size_t>(hilbert_function(R, gens, d));
    }
    return solutions - trivial;
}

Polynomial leibniz_determinant(const cmc::PolyMatrix& M) {
    const std::size_t n = M.rows();
    if (n != M.cols()) throw std::invalid_argument("square matrix expected");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial det(M.ring());
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Polynomial term = Polynomial::constant(M.ring(), inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n; ++i) term = term * M(i, perm[i]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

bool same_homogeneous_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
    for (const auto& f : a)
        if (!member(f, b)) return false;
    for (const auto& f : b)
        if (!member(f, a)) return false;
    return true;
}

} // namespace oracle
