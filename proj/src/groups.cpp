#include "gradalg/groups.hpp"

#include <algorithm>
#include <cctype>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

namespace gradalg {

FiniteGroup::FiniteGroup() : FiniteGroup({{0}}, {"e"}) {}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> cayley, std::vector<std::string> names)
    : cayley_(std::move(cayley)), names_(std::move(names)) {
    int n = static_cast<int>(cayley_.size());
    if (n == 0) throw std::invalid_argument("FiniteGroup: empty table");
    for (const auto& row : cayley_) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("FiniteGroup: table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw std::invalid_argument("FiniteGroup: entry out of range");
    }
    for (int a = 0; a < n; ++a) {
        if (cayley_[0][a] != a || cayley_[a][0] != a)
            throw std::invalid_argument("FiniteGroup: index 0 is not an identity");
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int b = 0; b < n; ++b) {
            if (seen_row[cayley_[a][b]] || seen_col[cayley_[b][a]])
                throw std::invalid_argument("FiniteGroup: row or column is not a permutation");
            seen_row[cayley_[a][b]] = true;
            seen_col[cayley_[b][a]] = true;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (cayley_[cayley_[a][b]][c] != cayley_[a][cayley_[b][c]])
                    throw std::invalid_argument("FiniteGroup: table is not associative");
    inverse_.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (cayley_[a][b] == 0) inverse_[a] = b;
    if (names_.empty()) {
        for (int a = 0; a < n; ++a) names_.push_back("g" + std::to_string(a));
    }
    if (static_cast<int>(names_.size()) != n)
        throw std::invalid_argument("FiniteGroup: name count mismatch");
}

int FiniteGroup::element_order(int a) const {
    int x = a, ord = 1;
    while (x != 0) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

bool FiniteGroup::is_abelian() const {
    int n = order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group: order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
        names.push_back(a == 0 ? "e" : "c" + std::to_string(a));
    }
    return FiniteGroup(t, names);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int na = a.order(), nb = b.order();
    int n = na * nb;
    // (x, y) -> x + na * y, first coordinate fastest.
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1)
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2)
                    t[x1 + na * y1][x2 + na * y2] = a.mul(x1, x2) + na * b.mul(y1, y2);
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y)
            names[x + na * y] = "(" + a.name_of(x) + "," + b.name_of(y) + ")";
    return FiniteGroup(t, names);
}

FiniteGroup dihedral_d4() {
    // r^i s^j with index i + 4j; s r = r^-1 s.
    auto idx = [](int i, int j) { return i + 4 * j; };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int i1 = 0; i1 < 4; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 4; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i = ((i1 + (j1 ? 4 - i2 : i2)) % 4 + 4) % 4;
                    int j = (j1 + j2) % 2;
                    t[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
                }
    return FiniteGroup(t, {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"});
}

FiniteGroup quaternion_q8() {
    // 0..7 = 1, i, j, k, -1, -i, -j, -k.
    auto pack = [](int sign, int axis) { return axis + (sign ? 4 : 0); };
    // axis products: table[a][b] = (sign, axis) for a*b with axes 0=1,1=i,2=j,3=k.
    static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sa = a / 4, xa = a % 4, sb = b / 4, xb = b % 4;
            int axis = axis_mul[xa][xb];
            int sign = (sa + sb + sign_mul[xa][xb]) % 2;
            t[a][b] = pack(sign, axis);
        }
    return FiniteGroup(t, {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

FiniteGroup symmetric_s3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto find = [&](const std::array<int, 3>& q) {
        return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> q;
            for (int x = 0; x < 3; ++x) q[x] = perms[a][perms[b][x]];
            t[a][b] = find(q);
        }
    return FiniteGroup(t, {"e", "(12)", "(01)", "(012)", "(021)", "(02)"});
}

FiniteGroup group_from_abelian(const AbelianGroup& h) {
    std::size_t n = h.element_count();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (std::size_t a = 0; a < n; ++a) {
        auto ea = element_at(h, a);
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < ea.coords.size(); ++i)
            os << (i ? " " : "") << ea.coords[i].get_str();
        os << "]";
        names[a] = os.str();
        for (std::size_t b = 0; b < n; ++b)
            t[a][b] = static_cast<int>(element_index(h, add(h, ea, element_at(h, b))));
    }
    return FiniteGroup(t, names);
}

std::optional<FiniteGroup> named_group(const std::string& name) {
    std::string s;
    for (char c : name)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(std::tolower(c));
    if (s == "d4") return dihedral_d4();
    if (s == "q8") return quaternion_q8();
    if (s == "s3") return symmetric_s3();
    // Z_n or products Z_a x Z_b x ...
    std::vector<int> factors;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != 'z') return std::nullopt;
        ++pos;
        if (pos < s.size() && s[pos] == '_') ++pos;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) return std::nullopt;
        factors.push_back(std::stoi(s.substr(start, pos - start)));
        if (pos < s.size()) {
            if (s[pos] != 'x') return std::nullopt;
            ++pos;
        }
    }
    if (factors.empty()) return std::nullopt;
    FiniteGroup g = cyclic_group(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, cyclic_group(factors[i]));
    return g;
}

// ---------------------------------------------------------------------------
// Subgroups
// ---------------------------------------------------------------------------

bool Subgroup::contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens) {
    std::set<int> s{FiniteGroup::identity};
    for (int x : gens) {
        if (x < 0 || x >= g.order()) throw std::invalid_argument("subgroup_generated: bad index");
        s.insert(x);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur)
                if (s.insert(g.mul(a, b)).second) grew = true;
    }
    return Subgroup{g, std::vector<int>(s.begin(), s.end())};
}

Subgroup full_subgroup(const FiniteGroup& g) {
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup{g, all};
}

bool is_normal(const FiniteGroup& g, const std::vector<int>& elements) {
    for (int x : elements)
        for (int a = 0; a < g.order(); ++a)
            if (!std::binary_search(elements.begin(), elements.end(), g.conjugate(a, x)))
                return false;
    return true;
}

bool is_abelian_subset(const FiniteGroup& g, const std::vector<int>& elements) {
    for (int a : elements)
        for (int b : elements)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

Subgroup center(const FiniteGroup& g) {
    std::vector<int> z;
    for (int a = 0; a < g.order(); ++a) {
        bool central = true;
        for (int b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
        if (central) z.push_back(a);
    }
    return Subgroup{g, z};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    int n = g.order();
    if (n > 64) throw std::domain_error("all_subgroups: order > 64 not supported");
    auto close_mask = [&](std::uint64_t m) {
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < n; ++a) {
                if (!(m >> a & 1)) continue;
                for (int b = 0; b < n; ++b) {
                    if (!(m >> b & 1)) continue;
                    int c = g.mul(a, b);
                    if (!(m >> c & 1)) {
                        m |= 1ULL << c;
                        grew = true;
                    }
                }
            }
        }
        return m;
    };
    std::set<std::uint64_t> found{1ULL};  // trivial subgroup
    std::vector<std::uint64_t> queue{1ULL};
    while (!queue.empty()) {
        std::uint64_t m = queue.back();
        queue.pop_back();
        for (int x = 1; x < n; ++x) {
            if (m >> x & 1) continue;
            std::uint64_t joined = close_mask(m | (1ULL << x) | 1ULL);
            if (found.insert(joined).second) queue.push_back(joined);
        }
    }
    std::vector<Subgroup> out;
    for (std::uint64_t m : found) {
        std::vector<int> e;
        for (int a = 0; a < n; ++a)
            if (m >> a & 1) e.push_back(a);
        out.push_back(Subgroup{g, e});
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

std::vector<NormalAbelianSubgroup> normal_abelian_subgroups(const FiniteGroup& g) {
    std::vector<NormalAbelianSubgroup> out;
    for (auto& s : all_subgroups(g)) {
        if (!is_abelian_subset(g, s.elements)) continue;
        if (!is_normal(g, s.elements)) continue;
        auto dec = abelian_decomposition(g, s.elements);
        out.push_back(NormalAbelianSubgroup{std::move(s), dec.type});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Abelian decomposition
// ---------------------------------------------------------------------------

namespace {

// Recursive invariant-factor decomposition of an abelian set of elements
// under the multiplication function mul. Returns factors (ascending) and
// matching generators.
struct DecompRec {
    std::vector<Int> factors;
    std::vector<int> gens;
};

int pow_elem(const FiniteGroup& g, int x, long e) {
    int acc = FiniteGroup::identity;
    long n = e;
    int base = x;
    if (n < 0) {
        base = g.inverse(x);
        n = -n;
    }
    while (n > 0) {
        if (n & 1) acc = g.mul(acc, base);
        base = g.mul(base, base);
        n >>= 1;
    }
    return acc;
}

DecompRec decompose_rec(const FiniteGroup& g, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    if (elements.size() <= 1) return {};
    long m = 1;
    for (int x : elements) m = std::lcm(m, static_cast<long>(g.element_order(x)));
    int top = -1;
    for (int x : elements)
        if (g.element_order(x) == m) {
            top = x;
            break;
        }
    // Cosets of <top>; representative = smallest member.
    std::vector<int> cyc;
    for (int x = top, k = 0; k == 0 || x != top; x = g.mul(x, top), ++k) cyc.push_back(x);
    std::map<int, int> rep;  // element -> coset representative
    for (int x : elements) {
        if (rep.count(x)) continue;
        std::vector<int> coset;
        for (int c : cyc) coset.push_back(g.mul(x, c));
        int r = *std::min_element(coset.begin(), coset.end());
        for (int y : coset) rep[y] = r;
    }
    std::vector<int> reps;
    for (auto& [x, r] : rep)
        if (x == r) reps.push_back(r);

    // Quotient acts through representatives; find its decomposition, then lift.
    // Build a scratch group on the representatives.
    std::map<int, int> pos;
    for (std::size_t i = 0; i < reps.size(); ++i) pos[reps[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> qt(reps.size(), std::vector<int>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j)
            qt[i][j] = pos.at(rep.at(g.mul(reps[i], reps[j])));
    // Identity coset representative must sit at index 0.
    int id_pos = pos.at(rep.at(FiniteGroup::identity));
    if (id_pos != 0) {
        // Relabel so the identity coset is index 0.
        std::vector<int> perm(reps.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[0], perm[id_pos]);
        std::vector<int> inv_perm(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i) inv_perm[perm[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> qt2(reps.size(), std::vector<int>(reps.size()));
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = 0; j < reps.size(); ++j)
                qt2[inv_perm[i]][inv_perm[j]] = inv_perm[qt[i][j]];
        qt = qt2;
        std::vector<int> reps2(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i) reps2[inv_perm[i]] = reps[i];
        reps = reps2;
    }
    FiniteGroup q(qt);
    std::vector<int> qelems(reps.size());
    std::iota(qelems.begin(), qelems.end(), 0);
    DecompRec sub = decompose_rec(q, qelems);

    DecompRec out;
    for (std::size_t i = 0; i < sub.factors.size(); ++i) {
        long r = sub.factors[i].get_si();
        int y = reps[sub.gens[i]];  // lift of the quotient generator
        // y^r lies in <top>: find t with y^r = top^t, then correct by top^(-t/r).
        int yr = pow_elem(g, y, r);
        long t = -1;
        int acc = FiniteGroup::identity;
        for (long k = 0; k < m; ++k) {
            if (acc == yr) {
                t = k;
                break;
            }
            acc = g.mul(acc, top);
        }
        if (t < 0 || t % r != 0) throw std::logic_error("abelian_decomposition: lift failed");
        int lifted = g.mul(y, pow_elem(g, top, -(t / r)));
        if (g.element_order(lifted) != r)
            throw std::logic_error("abelian_decomposition: lifted order mismatch");
        out.factors.push_back(sub.factors[i]);
        out.gens.push_back(lifted);
    }
    out.factors.push_back(Int(m));
    out.gens.push_back(top);
    return out;
}

}  // namespace

AbelianElement AbelianDecomposition::coords_of(int parent_element) const {
    auto it = index_by_element.find(parent_element);
    if (it == index_by_element.end())
        throw std::invalid_argument("coords_of: element not in subgroup");
    return element_at(type, it->second);
}

int AbelianDecomposition::element_of(const AbelianElement& a) const {
    return element_by_index.at(element_index(type, a));
}

AbelianDecomposition abelian_decomposition(const FiniteGroup& g,
                                           const std::vector<int>& elements) {
    if (!is_abelian_subset(g, elements))
        throw std::invalid_argument("abelian_decomposition: subgroup is not abelian");
    auto closed = subgroup_generated(g, elements);
    if (closed.elements.size() != elements.size())
        throw std::invalid_argument("abelian_decomposition: set is not closed");
    DecompRec rec = decompose_rec(g, elements);
    AbelianDecomposition out;
    out.type = AbelianGroup(rec.factors);
    if (out.type.invariant_factors() != rec.factors)
        throw std::logic_error("abelian_decomposition: factors not in canonical order");
    out.generators = rec.gens;
    std::size_t n = out.type.element_count();
    out.element_by_index.resize(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        auto coords = element_at(out.type, idx);
        int e = FiniteGroup::identity;
        for (std::size_t i = 0; i < rec.gens.size(); ++i)
            e = g.mul(e, pow_elem(g, rec.gens[i], coords.coords[i].get_si()));
        out.element_by_index[idx] = e;
        out.index_by_element[e] = idx;
    }
    if (out.index_by_element.size() != n || n != elements.size())
        throw std::logic_error("abelian_decomposition: enumeration is not bijective");
    return out;
}

AbelianDecomposition canonical_decomposition(const AbelianGroup& h) {
    AbelianDecomposition out;
    out.type = h;
    std::size_t n = h.element_count();
    for (std::size_t i = 0; i < h.rank(); ++i) {
        auto e = zero_element(h);
        e.coords[i] = 1;
        out.generators.push_back(static_cast<int>(element_index(h, e)));
    }
    out.element_by_index.resize(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        out.element_by_index[idx] = static_cast<int>(idx);
        out.index_by_element[static_cast<int>(idx)] = idx;
    }
    return out;
}

IntMatrixHom conjugation_on_subgroup(const FiniteGroup& g, const AbelianDecomposition& dec,
                                     int by) {
    std::size_t k = dec.type.rank();
    IntMat m(k, std::vector<Int>(k, 0));
    for (std::size_t j = 0; j < k; ++j) {
        int image = g.conjugate(by, dec.generators[j]);
        auto c = dec.coords_of(image);  // throws if conjugation leaves the subgroup
        for (std::size_t i = 0; i < k; ++i) m[i][j] = c.coords[i];
    }
    return IntMatrixHom{dec.type, dec.type, m};
}

// ---------------------------------------------------------------------------
// Extensions
// ---------------------------------------------------------------------------

CocycleReport validate_cocycle_beta(const Extension& ext) {
    int nq = ext.Q.order();
    if (static_cast<int>(ext.action.size()) != nq)
        return {false, "action table must have one entry per element of Q"};
    if (static_cast<int>(ext.beta.size()) != nq)
        return {false, "beta table must be |Q| x |Q|"};
    for (const auto& row : ext.beta)
        if (static_cast<int>(row.size()) != nq) return {false, "beta table must be |Q| x |Q|"};
    for (int q = 0; q < nq; ++q) {
        const auto& f = ext.action[q];
        if (!(f.source == ext.H) || !(f.target == ext.H))
            return {false, "action entries must be endomorphisms of H"};
        if (!is_well_defined(f)) return {false, "action matrix violates well-definedness"};
        if (!is_automorphism(f)) return {false, "action entry is not an automorphism"};
    }
    for (int q1 = 0; q1 < nq; ++q1)
        for (int q2 = 0; q2 < nq; ++q2) {
            auto composed = compose(ext.action[q1], ext.action[q2]);
            if (!hom_equal(composed, ext.action[ext.Q.mul(q1, q2)]))
                return {false, "action is not a homomorphism at pair (" + std::to_string(q1) +
                                   "," + std::to_string(q2) + ")"};
        }
    for (int q = 0; q < nq; ++q) {
        if (!element_in_group(ext.H, ext.beta[0][q]) || !element_in_group(ext.H, ext.beta[q][0]))
            return {false, "beta values must be reduced elements of H"};
        if (ext.beta[0][q] != zero_element(ext.H) || ext.beta[q][0] != zero_element(ext.H))
            return {false, "beta is not normalized at q=" + std::to_string(q)};
    }
    for (int q1 = 0; q1 < nq; ++q1)
        for (int q2 = 0; q2 < nq; ++q2) {
            if (!element_in_group(ext.H, ext.beta[q1][q2]))
                return {false, "beta values must be reduced elements of H"};
            for (int q3 = 0; q3 < nq; ++q3) {
                auto lhs = add(ext.H, apply(ext.action[q1], ext.beta[q2][q3]),
                               ext.beta[q1][ext.Q.mul(q2, q3)]);
                auto rhs = add(ext.H, ext.beta[ext.Q.mul(q1, q2)][q3], ext.beta[q1][q2]);
                if (!(lhs == rhs))
                    return {false, "cocycle identity fails at triple (" + std::to_string(q1) +
                                       "," + std::to_string(q2) + "," + std::to_string(q3) + ")"};
            }
        }
    return {true, ""};
}

Extension split_extension(const AbelianGroup& h, const FiniteGroup& q,
                          std::vector<IntMatrixHom> action) {
    Extension ext{h, q, std::move(action), {}};
    ext.beta.assign(q.order(), std::vector<AbelianElement>(q.order(), zero_element(h)));
    return ext;
}

Extension trivial_action_extension(const AbelianGroup& h, const FiniteGroup& q,
                                   std::vector<std::vector<AbelianElement>> beta) {
    Extension ext{h, q, {}, std::move(beta)};
    ext.action.assign(q.order(), identity_hom(h));
    return ext;
}

int extension_element_index(const Extension& ext, const AbelianElement& h, int q) {
    return q * static_cast<int>(ext.H.element_count()) +
           static_cast<int>(element_index(ext.H, h));
}

std::pair<AbelianElement, int> extension_element_parts(const Extension& ext, int g) {
    int nh = static_cast<int>(ext.H.element_count());
    return {element_at(ext.H, static_cast<std::size_t>(g % nh)), g / nh};
}

FiniteGroup build_extension_group(const Extension& ext) {
    auto report = validate_cocycle_beta(ext);
    if (!report.ok) throw std::invalid_argument("build_extension_group: " + report.message);
    int nh = static_cast<int>(ext.H.element_count());
    int nq = ext.Q.order();
    int n = nh * nq;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (int g1 = 0; g1 < n; ++g1) {
        auto [h1, q1] = extension_element_parts(ext, g1);
        names[g1] = "(" + std::to_string(g1 % nh) + "," + ext.Q.name_of(q1) + ")";
        for (int g2 = 0; g2 < n; ++g2) {
            auto [h2, q2] = extension_element_parts(ext, g2);
            auto h = add(ext.H, add(ext.H, h1, apply(ext.action[q1], h2)), ext.beta[q1][q2]);
            t[g1][g2] = extension_element_index(ext, h, ext.Q.mul(q1, q2));
        }
    }
    FiniteGroup g(t, names);
    // H embeds as {(h, e)} and must be normal.
    std::vector<int> embedded(nh);
    std::iota(embedded.begin(), embedded.end(), 0);
    if (!is_normal(g, embedded))
        throw std::logic_error("build_extension_group: embedded H is not normal");
    return g;
}

std::vector<IntMatrixHom> conjugation_action_on_H(const Extension& ext) {
    FiniteGroup g = build_extension_group(ext);
    std::size_t k = ext.H.rank();
    int nh = static_cast<int>(ext.H.element_count());
    std::vector<IntMatrixHom> out;
    out.reserve(g.order());
    for (int a = 0; a < g.order(); ++a) {
        IntMat m(k, std::vector<Int>(k, 0));
        for (std::size_t j = 0; j < k; ++j) {
            auto ej = zero_element(ext.H);
            ej.coords[j] = 1;
            int x = extension_element_index(ext, ej, 0);
            int y = g.conjugate(a, x);
            if (y / nh != 0) throw std::logic_error("conjugation_action_on_H: left H");
            auto c = element_at(ext.H, static_cast<std::size_t>(y % nh));
            for (std::size_t i = 0; i < k; ++i) m[i][j] = c.coords[i];
        }
        out.push_back(IntMatrixHom{ext.H, ext.H, m});
    }
    return out;
}

std::string describe(const AbelianGroup& h) {
    if (h.is_trivial()) return "1";
    std::string s;
    for (std::size_t i = 0; i < h.rank(); ++i) {
        if (i) s += "x";
        s += "Z" + h.invariant_factors()[i].get_str();
    }
    return s;
}

}  // namespace gradalg
