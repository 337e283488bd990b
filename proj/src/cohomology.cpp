#include "gradalg/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gradalg {

namespace {

std::int64_t emod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::int64_t to_i64(const Int& x) { return x.get_si(); }

std::int64_t exponent_of(const AbelianGroup& h) { return to_i64(h.exponent()); }

}  // namespace

bool Bicharacter::is_trivial() const {
    for (const auto& row : E)
        for (auto x : row)
            if (x % exponent_of(H) != 0) return false;
    return true;
}

Bicharacter trivial_bicharacter(const AbelianGroup& h) {
    return Bicharacter{h, std::vector<std::vector<std::int64_t>>(
                              h.rank(), std::vector<std::int64_t>(h.rank(), 0))};
}

bool bicharacter_valid(const Bicharacter& phi) {
    std::size_t k = phi.H.rank();
    std::int64_t n = exponent_of(phi.H);
    if (phi.E.size() != k) return false;
    for (const auto& row : phi.E)
        if (row.size() != k) return false;
    for (std::size_t i = 0; i < k; ++i) {
        if (emod(phi.E[i][i], n) != 0) return false;
        for (std::size_t j = 0; j < k; ++j) {
            if (emod(phi.E[i][j] + phi.E[j][i], n) != 0) return false;
            std::int64_t g = std::gcd(to_i64(phi.H.invariant_factors()[i]),
                                      to_i64(phi.H.invariant_factors()[j]));
            if (emod(phi.E[i][j], n / g) != 0) return false;
        }
    }
    return true;
}

void require_bicharacter(const Bicharacter& phi) {
    if (!bicharacter_valid(phi))
        throw std::invalid_argument("bicharacter violates alternation or well-definedness");
}

std::int64_t phi_exponent(const Bicharacter& phi, const AbelianElement& a,
                          const AbelianElement& b) {
    std::int64_t n = exponent_of(phi.H);
    Int acc = 0;
    for (std::size_t i = 0; i < phi.H.rank(); ++i)
        for (std::size_t j = 0; j < phi.H.rank(); ++j)
            acc += Int(phi.E[i][j]) * a.coords[i] * b.coords[j];
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(), Int(n).get_mpz_t());
    return to_i64(r);
}

bool cocycle_valid(const Cocycle2H& alpha) {
    std::size_t sz = alpha.H.element_count();
    if (alpha.n < 1) return false;
    if (alpha.table.size() != sz) return false;
    for (const auto& row : alpha.table)
        if (row.size() != sz) return false;
    for (std::size_t i = 0; i < sz; ++i)
        if (emod(alpha.table[0][i], alpha.n) != 0 || emod(alpha.table[i][0], alpha.n) != 0)
            return false;
    // alpha(h1,h2) alpha(h1h2,h3) == alpha(h2,h3) alpha(h1,h2h3) as exponents.
    std::vector<std::vector<std::size_t>> sum(sz, std::vector<std::size_t>(sz));
    for (std::size_t i = 0; i < sz; ++i) {
        auto ei = element_at(alpha.H, i);
        for (std::size_t j = 0; j < sz; ++j)
            sum[i][j] = element_index(alpha.H, add(alpha.H, ei, element_at(alpha.H, j)));
    }
    for (std::size_t a = 0; a < sz; ++a)
        for (std::size_t b = 0; b < sz; ++b)
            for (std::size_t c = 0; c < sz; ++c) {
                std::int64_t lhs = alpha.table[a][b] + alpha.table[sum[a][b]][c];
                std::int64_t rhs = alpha.table[b][c] + alpha.table[a][sum[b][c]];
                if (emod(lhs - rhs, alpha.n) != 0) return false;
            }
    return true;
}

void require_cocycle(const Cocycle2H& alpha) {
    if (!cocycle_valid(alpha))
        throw std::invalid_argument("cocycle violates normalization or the cocycle identity");
}

AbelianGroup schur_multiplier(const AbelianGroup& h) {
    std::vector<Int> factors;
    for (std::size_t i = 0; i < h.rank(); ++i)
        for (std::size_t j = i + 1; j < h.rank(); ++j)
            factors.push_back(gcd(h.invariant_factors()[i], h.invariant_factors()[j]));
    return AbelianGroup(factors);
}

Bicharacter commutator_form(const Cocycle2H& alpha) {
    const auto& h = alpha.H;
    std::int64_t nh = exponent_of(h);
    std::size_t k = h.rank();
    Bicharacter phi = trivial_bicharacter(h);
    for (std::size_t i = 0; i < k; ++i) {
        auto ei = zero_element(h);
        ei.coords[i] = 1;
        std::size_t ii = element_index(h, ei);
        for (std::size_t j = 0; j < k; ++j) {
            auto ej = zero_element(h);
            ej.coords[j] = 1;
            std::size_t jj = element_index(h, ej);
            std::int64_t diff = emod(alpha.table[ii][jj] - alpha.table[jj][ii], alpha.n);
            // zeta_n^diff must lie in mu_{n_H} for a valid cocycle.
            if ((diff * nh) % alpha.n != 0)
                throw std::logic_error("commutator_form: value outside mu_{n_H}");
            phi.E[i][j] = emod(diff * nh / alpha.n, nh);
        }
    }
    require_bicharacter(phi);
    return phi;
}

Cocycle2H cocycle_from_bicharacter(const Bicharacter& phi) {
    require_bicharacter(phi);
    const auto& h = phi.H;
    std::int64_t nh = exponent_of(h);
    std::size_t sz = h.element_count();
    Cocycle2H alpha{h, nh,
                    std::vector<std::vector<std::int64_t>>(sz, std::vector<std::int64_t>(sz, 0))};
    for (std::size_t a = 0; a < sz; ++a) {
        auto ea = element_at(h, a);
        for (std::size_t b = 0; b < sz; ++b) {
            auto eb = element_at(h, b);
            Int acc = 0;
            for (std::size_t i = 0; i < h.rank(); ++i)
                for (std::size_t j = i + 1; j < h.rank(); ++j)
                    acc += Int(phi.E[i][j]) * ea.coords[i] * eb.coords[j];
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(), Int(nh).get_mpz_t());
            alpha.table[a][b] = to_i64(r);
        }
    }
    return alpha;
}

CoboundaryWitness is_coboundary(const Cocycle2H& alpha) {
    std::size_t sz = alpha.H.element_count();
    // Unknowns c(h), h in H; equations c(h1) + c(h2) - c(h1 h2) = t(h1,h2)
    // mod n, plus c(identity) = 0.
    ModMat a;
    ModRow b;
    for (std::size_t i = 0; i < sz; ++i) {
        auto ei = element_at(alpha.H, i);
        for (std::size_t j = 0; j < sz; ++j) {
            std::size_t ij = element_index(alpha.H, add(alpha.H, ei, element_at(alpha.H, j)));
            ModRow row(sz, 0);
            row[i] += 1;
            row[j] += 1;
            row[ij] -= 1;
            a.push_back(std::move(row));
            b.push_back(emod(alpha.table[i][j], alpha.n));
        }
    }
    ModRow pin(sz, 0);
    pin[0] = 1;
    a.push_back(pin);
    b.push_back(0);
    auto sol = solve_mod(a, b, alpha.n);
    if (!sol) return {};
    return CoboundaryWitness{true, *sol};
}

bool is_invariant(const Bicharacter& phi, const std::vector<IntMatrixHom>& auts) {
    std::size_t k = phi.H.rank();
    std::int64_t n = exponent_of(phi.H);
    for (const auto& f : auts) {
        if (!(f.source == phi.H) || !(f.target == phi.H))
            throw std::invalid_argument("is_invariant: automorphism group mismatch");
        for (std::size_t i = 0; i < k; ++i) {
            auto ei = zero_element(phi.H);
            ei.coords[i] = 1;
            auto ai = apply(f, ei);
            for (std::size_t j = 0; j < k; ++j) {
                auto ej = zero_element(phi.H);
                ej.coords[j] = 1;
                auto aj = apply(f, ej);
                if (emod(phi_exponent(phi, ai, aj) - phi.E[i][j], n) != 0) return false;
            }
        }
    }
    return true;
}

bool q_invariant(const Bicharacter& phi, const Extension& ext) {
    if (!(ext.H == phi.H)) throw std::invalid_argument("q_invariant: group mismatch");
    return is_invariant(phi, ext.action);
}

std::vector<Bicharacter> enumerate_bicharacters(const AbelianGroup& h,
                                                const std::vector<IntMatrixHom>& auts) {
    std::size_t k = h.rank();
    std::int64_t n = exponent_of(h);
    struct Slot {
        std::size_t i, j;
        std::int64_t step, count;
    };
    std::vector<Slot> slots;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            std::int64_t g = std::gcd(to_i64(h.invariant_factors()[i]),
                                      to_i64(h.invariant_factors()[j]));
            slots.push_back(Slot{i, j, n / g, g});
        }
    std::vector<Bicharacter> out;
    std::vector<std::int64_t> odo(slots.size(), 0);
    while (true) {
        Bicharacter phi = trivial_bicharacter(h);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            std::int64_t v = odo[s] * slots[s].step;
            phi.E[slots[s].i][slots[s].j] = v;
            phi.E[slots[s].j][slots[s].i] = emod(-v, n);
        }
        require_bicharacter(phi);
        if (is_invariant(phi, auts)) out.push_back(std::move(phi));
        std::size_t s = slots.size();
        while (s > 0) {
            --s;
            if (++odo[s] < slots[s].count) break;
            odo[s] = 0;
            if (s == 0) return out;
        }
        if (slots.empty()) return out;
    }
}

std::vector<Bicharacter> enumerate_invariant_bicharacters(const Extension& ext) {
    return enumerate_bicharacters(ext.H, ext.action);
}

SubgroupOfH radical(const Bicharacter& phi) {
    require_bicharacter(phi);
    const auto& h = phi.H;
    std::size_t k = h.rank();
    Int nh = h.exponent();

    // Lattice {s in Z^k : E^T s == 0 mod n_H} via SNF of E^T; columns of V
    // scaled by n_H / gcd(d_i, n_H) generate it (relations diag(m) included).
    SubgroupOfH out;
    if (k > 0) {
        IntMat et(k, std::vector<Int>(k, 0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) et[i][j] = phi.E[j][i];
        auto snf = smith_normal_form(et);
        auto diag = snf.diagonal();
        for (std::size_t i = 0; i < k; ++i) {
            Int di = i < diag.size() ? diag[i] : Int(0);
            Int scale = nh / gcd(di, nh);
            std::vector<Int> col(k);
            for (std::size_t r = 0; r < k; ++r) col[r] = snf.v[r][i] * scale;
            out.generators.push_back(reduce_element(h, col));
        }
    }

    // Element closure and abstract type.
    std::set<std::size_t> elems{element_index(h, zero_element(h))};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::size_t> cur(elems.begin(), elems.end());
        for (auto i : cur)
            for (const auto& g : out.generators) {
                auto s = add(h, element_at(h, i), g);
                if (elems.insert(element_index(h, s)).second) grew = true;
            }
    }
    for (auto i : elems) out.elements.push_back(element_at(h, i));

    // Sanity: every member annihilates every basis vector under phi.
    for (const auto& s : out.elements)
        for (std::size_t j = 0; j < k; ++j) {
            auto ej = zero_element(h);
            ej.coords[j] = 1;
            if (phi_exponent(phi, s, ej) != 0)
                throw std::logic_error("radical: nullspace computation failed");
        }

    if (out.elements.size() == 1) {
        out.type = AbelianGroup();
    } else {
        auto gh = group_from_abelian(h);
        std::vector<int> idx;
        for (const auto& s : out.elements)
            idx.push_back(static_cast<int>(element_index(h, s)));
        out.type = abelian_decomposition(gh, idx).type;
    }
    return out;
}

bool is_nondegenerate(const Bicharacter& phi) { return radical(phi).elements.size() == 1; }

}  // namespace gradalg
