#include "gradalg/graded_algebra.hpp"

#include <algorithm>
#include <numeric>

namespace gradalg {

SparseVec sparse_normalize(SparseVec v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    for (auto& [idx, c] : v) {
        if (!out.empty() && out.back().first == idx)
            out.back().second += c;
        else
            out.emplace_back(idx, c);
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    }
    return out;
}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
    SparseVec v = a;
    v.insert(v.end(), b.begin(), b.end());
    return sparse_normalize(std::move(v));
}

SparseVec sparse_scale(const SparseVec& a, const CyclotomicNumber& c) {
    if (c.is_zero()) return {};
    SparseVec v;
    for (const auto& [idx, x] : a) v.emplace_back(idx, x * c);
    return sparse_normalize(std::move(v));
}

GradedAlgebra::GradedAlgebra(long conductor, FiniteGroup grading_group,
                             std::vector<int> grading,
                             std::vector<std::vector<SparseVec>> structure, SparseVec identity)
    : conductor_(conductor),
      group_(std::move(grading_group)),
      grading_(std::move(grading)),
      structure_(std::move(structure)),
      identity_(sparse_normalize(std::move(identity))) {
    int n = dim();
    if (n == 0) throw std::invalid_argument("GradedAlgebra: empty basis");
    if (static_cast<int>(structure_.size()) != n)
        throw std::invalid_argument("GradedAlgebra: structure table size mismatch");
    for (auto& row : structure_) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("GradedAlgebra: structure table size mismatch");
        for (auto& v : row) v = sparse_normalize(v);
    }
    for (int b : grading_)
        if (b < 0 || b >= group_.order())
            throw std::invalid_argument("GradedAlgebra: grading out of range");

    // Grading compatibility: b_i b_j supported in degree grading(i)*grading(j).
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int expect = group_.mul(grading_[i], grading_[j]);
            for (const auto& [k, c] : structure_[i][j])
                if (grading_[k] != expect)
                    throw std::invalid_argument("GradedAlgebra: grading incompatibility");
        }
    // Associativity on all basis triples.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& ij = structure_[i][j];
            for (int k = 0; k < n; ++k) {
                SparseVec left;
                for (const auto& [t, c] : ij)
                    left = sparse_add(left, sparse_scale(structure_[t][k], c));
                SparseVec right;
                for (const auto& [t, c] : structure_[j][k])
                    right = sparse_add(right, sparse_scale(structure_[i][t], c));
                if (left != right)
                    throw std::invalid_argument("GradedAlgebra: structure is not associative");
            }
        }
    // Unitality and identity degree.
    for (const auto& [k, c] : identity_)
        if (grading_[k] != FiniteGroup::identity)
            throw std::invalid_argument("GradedAlgebra: identity must have degree e");
    for (int i = 0; i < n; ++i) {
        SparseVec unit{{i, CyclotomicNumber::one(conductor_)}};
        if (multiply(identity_, unit) != unit || multiply(unit, identity_) != unit)
            throw std::invalid_argument("GradedAlgebra: designated identity is not a unit");
    }
}

SparseVec GradedAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
    SparseVec out;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y) {
            auto scaled = sparse_scale(structure_[i][j], ci * cj);
            out = sparse_add(out, scaled);
        }
    return out;
}

GradedAlgebra twisted_group_algebra(const AbelianGroup& h, const Cocycle2H& alpha) {
    if (!(alpha.H == h)) throw std::invalid_argument("twisted_group_algebra: group mismatch");
    require_cocycle(alpha);
    std::size_t sz = h.element_count();
    FiniteGroup gh = group_from_abelian(h);
    std::vector<int> grading(sz);
    std::iota(grading.begin(), grading.end(), 0);
    std::vector<std::vector<SparseVec>> structure(sz, std::vector<SparseVec>(sz));
    for (std::size_t a = 0; a < sz; ++a)
        for (std::size_t b = 0; b < sz; ++b)
            structure[a][b] = {{gh.mul(static_cast<int>(a), static_cast<int>(b)),
                                zeta_power(alpha.n, alpha.table[a][b])}};
    SparseVec identity{{0, CyclotomicNumber::one(alpha.n)}};
    return GradedAlgebra(alpha.n, gh, grading, structure, identity);
}

std::vector<SparseVec> center_basis(const GradedAlgebra& a) {
    int n = a.dim();
    long cond = a.conductor();
    // z = sum x_j b_j with z b_i - b_i z = 0 for all i: one equation per (i, k).
    CycMat rows;
    for (int i = 0; i < n; ++i) {
        std::vector<CycVec> coeff(n, CycVec(n, CyclotomicNumber::zero(cond)));
        for (int j = 0; j < n; ++j) {
            for (const auto& [k, c] : a.basis_product(j, i)) coeff[k][j] += c;
            for (const auto& [k, c] : a.basis_product(i, j)) coeff[k][j] -= c;
        }
        for (int k = 0; k < n; ++k) {
            bool nonzero = false;
            for (const auto& c : coeff[k]) nonzero = nonzero || !c.is_zero();
            if (nonzero) rows.push_back(coeff[k]);
        }
    }
    std::vector<SparseVec> out;
    if (rows.empty()) {
        for (int j = 0; j < n; ++j) out.push_back({{j, CyclotomicNumber::one(cond)}});
        return out;
    }
    for (const auto& v : nullspace(rows)) {
        SparseVec s;
        for (int j = 0; j < n; ++j)
            if (!v[j].is_zero()) s.emplace_back(j, v[j]);
        out.push_back(std::move(s));
    }
    return out;
}

bool radical_is_zero(const GradedAlgebra& a) {
    int n = a.dim();
    long cond = a.conductor();
    // tr(L_{b_k}) = sum_l coefficient of b_l in b_k b_l.
    CycVec basis_trace(n, CyclotomicNumber::zero(cond));
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            for (const auto& [t, c] : a.basis_product(k, l))
                if (t == l) basis_trace[k] += c;
    CycMat gram(n, CycVec(n, CyclotomicNumber::zero(cond)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [t, c] : a.basis_product(i, j)) gram[i][j] += c * basis_trace[t];
    return matrix_rank(gram) == static_cast<std::size_t>(n);
}

bool is_central_simple(const GradedAlgebra& a) {
    return radical_is_zero(a) && center_basis(a).size() == 1;
}

// ---------------------------------------------------------------------------
// BSZ algebras
// ---------------------------------------------------------------------------

void require_bsz(const BSZPresentation& p) {
    if (p.h_elements.empty() || p.h_elements[0] != FiniteGroup::identity)
        throw std::invalid_argument("BSZ: subgroup must be sorted and contain the identity");
    if (!std::is_sorted(p.h_elements.begin(), p.h_elements.end()))
        throw std::invalid_argument("BSZ: subgroup must be sorted and contain the identity");
    for (int x : p.h_elements)
        if (x < 0 || x >= p.G.order()) throw std::invalid_argument("BSZ: bad subgroup index");
    auto pos_of = [&](int g) {
        auto it = std::lower_bound(p.h_elements.begin(), p.h_elements.end(), g);
        if (it == p.h_elements.end() || *it != g)
            throw std::invalid_argument("BSZ: subgroup is not closed under products");
        return static_cast<std::size_t>(it - p.h_elements.begin());
    };
    std::size_t hs = p.h_elements.size();
    if (p.alpha.size() != hs) throw std::invalid_argument("BSZ: alpha table size mismatch");
    for (const auto& row : p.alpha)
        if (row.size() != hs) throw std::invalid_argument("BSZ: alpha table size mismatch");
    if (p.n < 1) throw std::invalid_argument("BSZ: root order must be positive");
    auto val = [&](std::int64_t v) { return ((v % p.n) + p.n) % p.n; };
    for (std::size_t i = 0; i < hs; ++i)
        if (val(p.alpha[0][i]) != 0 || val(p.alpha[i][0]) != 0)
            throw std::invalid_argument("BSZ: alpha is not normalized");
    for (std::size_t i = 0; i < hs; ++i)
        for (std::size_t j = 0; j < hs; ++j) {
            std::size_t ij = pos_of(p.G.mul(p.h_elements[i], p.h_elements[j]));
            for (std::size_t k = 0; k < hs; ++k) {
                std::size_t jk = pos_of(p.G.mul(p.h_elements[j], p.h_elements[k]));
                if (val(p.alpha[i][j] + p.alpha[ij][k] - p.alpha[j][k] - p.alpha[i][jk]) != 0)
                    throw std::invalid_argument("BSZ: alpha violates the cocycle identity");
            }
        }
    if (p.tuple.empty() || p.tuple[0] != FiniteGroup::identity)
        throw std::invalid_argument("BSZ: tuple must start with the identity");
    for (int g : p.tuple)
        if (g < 0 || g >= p.G.order()) throw std::invalid_argument("BSZ: bad tuple entry");
}

std::vector<std::vector<std::int64_t>> bsz_alpha_from_cocycle(const FiniteGroup& g,
                                                              const std::vector<int>& h_elements,
                                                              const Cocycle2H& alpha) {
    auto dec = abelian_decomposition(g, h_elements);
    if (!(dec.type == alpha.H))
        throw std::invalid_argument("bsz_alpha_from_cocycle: cocycle group mismatch");
    std::size_t hs = h_elements.size();
    std::vector<std::vector<std::int64_t>> table(hs, std::vector<std::int64_t>(hs));
    for (std::size_t i = 0; i < hs; ++i)
        for (std::size_t j = 0; j < hs; ++j)
            table[i][j] = alpha.table[dec.index_by_element.at(h_elements[i])]
                                     [dec.index_by_element.at(h_elements[j])];
    return table;
}

GradedAlgebra bsz_algebra(const BSZPresentation& p) {
    require_bsz(p);
    int s = static_cast<int>(p.tuple.size());
    int hs = static_cast<int>(p.h_elements.size());
    int dim = hs * s * s;
    auto pos_of = [&](int g) {
        return static_cast<int>(std::lower_bound(p.h_elements.begin(), p.h_elements.end(), g) -
                                p.h_elements.begin());
    };
    auto flat = [&](int h, int i, int j) { return h * s * s + i * s + j; };
    std::vector<int> grading(dim);
    for (int h = 0; h < hs; ++h)
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j)
                grading[flat(h, i, j)] =
                    p.G.mul(p.G.mul(p.G.inverse(p.tuple[i]), p.h_elements[h]), p.tuple[j]);
    std::vector<std::vector<SparseVec>> structure(dim, std::vector<SparseVec>(dim));
    for (int h1 = 0; h1 < hs; ++h1)
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j)
                for (int h2 = 0; h2 < hs; ++h2)
                    for (int k = 0; k < s; ++k)
                        for (int l = 0; l < s; ++l) {
                            if (j != k) continue;
                            int prod = pos_of(p.G.mul(p.h_elements[h1], p.h_elements[h2]));
                            structure[flat(h1, i, j)][flat(h2, k, l)] = {
                                {flat(prod, i, l), zeta_power(p.n, p.alpha[h1][h2])}};
                        }
    SparseVec identity;
    for (int i = 0; i < s; ++i)
        identity.emplace_back(flat(0, i, i), CyclotomicNumber::one(p.n));
    return GradedAlgebra(p.n, p.G, grading, structure, identity);
}

HomogeneousDims homogeneous_dims(const GradedAlgebra& a) {
    HomogeneousDims out;
    out.dims.assign(a.grading_group().order(), 0);
    for (int i = 0; i < a.dim(); ++i) ++out.dims[a.degree(i)];
    out.faithful = std::all_of(out.dims.begin(), out.dims.end(), [](int d) { return d > 0; });
    return out;
}

namespace {

// Row-reduced spanning set for subspace growth with exact membership tests.
class SpanBuilder {
public:
    explicit SpanBuilder(int dim, long conductor) : dim_(dim), cond_(conductor) {}

    std::size_t rank() const { return rows_.size(); }

    // Returns true when the vector enlarged the span.
    bool insert(const SparseVec& sv) {
        CycVec v(dim_, CyclotomicNumber::zero(cond_));
        for (const auto& [i, c] : sv) v[i] = c;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (v[pivots_[r]].is_zero()) continue;
            auto f = v[pivots_[r]];
            for (int k = 0; k < dim_; ++k) v[k] = v[k] - f * rows_[r][k];
        }
        int pivot = -1;
        for (int k = 0; k < dim_; ++k)
            if (!v[k].is_zero()) {
                pivot = k;
                break;
            }
        if (pivot < 0) return false;
        auto inv = v[pivot].inverse();
        for (int k = 0; k < dim_; ++k) v[k] = v[k] * inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
        return true;
    }

private:
    int dim_;
    long cond_;
    std::vector<CycVec> rows_;
    std::vector<int> pivots_;
};

}  // namespace

bool is_graded_simple(const GradedAlgebra& a) {
    int n = a.dim();
    for (int seed = 0; seed < n; ++seed) {
        SpanBuilder span(n, a.conductor());
        std::vector<SparseVec> queue{{{seed, CyclotomicNumber::one(a.conductor())}}};
        span.insert(queue[0]);
        while (!queue.empty() && span.rank() < static_cast<std::size_t>(n)) {
            auto v = std::move(queue.back());
            queue.pop_back();
            for (int i = 0; i < n; ++i) {
                SparseVec unit{{i, CyclotomicNumber::one(a.conductor())}};
                for (auto prod : {a.multiply(unit, v), a.multiply(v, unit)}) {
                    if (prod.empty()) continue;
                    if (span.insert(prod)) queue.push_back(std::move(prod));
                }
            }
        }
        if (span.rank() < static_cast<std::size_t>(n)) return false;
    }
    return true;
}

GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b) {
    if (!(a.grading_group() == b.grading_group()))
        throw std::invalid_argument("direct_sum: grading groups differ");
    long cond = std::lcm(a.conductor(), b.conductor());
    int na = a.dim(), nb = b.dim();
    std::vector<int> grading(na + nb);
    for (int i = 0; i < na; ++i) grading[i] = a.degree(i);
    for (int i = 0; i < nb; ++i) grading[na + i] = b.degree(i);
    std::vector<std::vector<SparseVec>> structure(na + nb, std::vector<SparseVec>(na + nb));
    auto shift = [&](const SparseVec& v, int off) {
        SparseVec out;
        for (const auto& [i, c] : v) out.emplace_back(i + off, c.promoted(cond));
        return out;
    };
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) structure[i][j] = shift(a.basis_product(i, j), 0);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            structure[na + i][na + j] = shift(b.basis_product(i, j), na);
    SparseVec identity = shift(a.identity_element(), 0);
    auto idb = shift(b.identity_element(), na);
    identity.insert(identity.end(), idb.begin(), idb.end());
    return GradedAlgebra(cond, a.grading_group(), grading, structure, identity);
}

}  // namespace gradalg
