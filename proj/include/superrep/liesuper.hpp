#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superrep/jordan.hpp"
#include "superrep/tensor.hpp"

namespace superrep {

// Lie superalgebra by structure constants. Brackets are stored only for
// i <= j; the i > j case is generated by super antisymmetry.
struct LieSuperAlgebra {
    std::vector<std::pair<std::string, Parity>> basis;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Rational>>>
        structure;  // [b_i, b_j] = sum c b_k, keyed by (i, j) with i <= j

    std::size_t dim() const { return basis.size(); }
    Parity parity(std::size_t i) const { return basis[i].second; }
    const std::string& name(std::size_t i) const { return basis[i].first; }

    std::optional<std::size_t> index_of(const std::string& n) const {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].first == n) return i;
        return std::nullopt;
    }

    // dense coefficient vector of [b_i, b_j], any order of i, j
    std::vector<Rational> bracket_basis(std::size_t i, std::size_t j) const {
        std::vector<Rational> out(dim());
        bool flip = i > j;
        auto it = structure.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
        if (it == structure.end()) return out;
        Rational sgn(1);
        if (flip && koszul(parity(i), parity(j)) > 0) sgn = Rational(-1);
        for (const auto& [k, c] : it->second) out[k] += sgn * c;
        return out;
    }

    // canonical position of basis element i in the even-then-odd space order
    std::size_t canonical_pos(std::size_t i) const {
        std::size_t pos = 0;
        if (parity(i) == Parity::Even) {
            for (std::size_t j = 0; j < i; ++j)
                if (parity(j) == Parity::Even) ++pos;
        } else {
            for (const auto& b : basis)
                if (b.second == Parity::Even) ++pos;
            for (std::size_t j = 0; j < i; ++j)
                if (parity(j) == Parity::Odd) ++pos;
        }
        return pos;
    }

    SuperSpace underlying_space() const {
        SuperSpace v;
        for (const auto& [n, p] : basis)
            (p == Parity::Even ? v.even : v.odd).push_back(n);
        return v;
    }
};

using AlgebraPtr = std::shared_ptr<const LieSuperAlgebra>;

struct AlgebraElement {
    AlgebraPtr algebra;
    std::vector<Rational> coeffs;

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }
    // true if the support lies in the given parity (zero counts as both)
    bool is_homogeneous(Parity p) const {
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (!coeffs[i].is_zero() && algebra->parity(i) != p) return false;
        return true;
    }
    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
        AlgebraElement r = a;
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
        return r;
    }
    friend AlgebraElement operator*(const Rational& s, const AlgebraElement& a) {
        AlgebraElement r = a;
        for (auto& c : r.coeffs) c *= s;
        return r;
    }
};

inline AlgebraElement zero_element(const AlgebraPtr& alg) {
    return {alg, std::vector<Rational>(alg->dim())};
}
inline AlgebraElement basis_element(const AlgebraPtr& alg, std::size_t i) {
    AlgebraElement e = zero_element(alg);
    e.coeffs[i] = 1;
    return e;
}
inline AlgebraElement named_element(const AlgebraPtr& alg,
                                    const std::vector<std::pair<std::string, Rational>>& terms) {
    AlgebraElement e = zero_element(alg);
    for (const auto& [n, c] : terms) {
        auto idx = alg->index_of(n);
        if (!idx) throw error("unknown basis element \"" + n + "\"");
        e.coeffs[*idx] += c;
    }
    return e;
}

inline AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
    const LieSuperAlgebra& g = *a.algebra;
    AlgebraElement out = zero_element(a.algebra);
    for (std::size_t i = 0; i < g.dim(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.dim(); ++j) {
            if (b.coeffs[j].is_zero()) continue;
            Rational f = a.coeffs[i] * b.coeffs[j];
            auto bk = g.bracket_basis(i, j);
            for (std::size_t k = 0; k < g.dim(); ++k)
                if (!bk[k].is_zero()) out.coeffs[k] += f * bk[k];
        }
    }
    return out;
}

// Representation by one parity-homogeneous matrix per basis element, on a
// superspace in canonical basis order.
struct Representation {
    AlgebraPtr algebra;
    SuperSpace space;
    std::vector<HomMap> action;

    const HomMap& act(std::size_t i) const { return action[i]; }
};

inline Matrix act_matrix(const Representation& rep, const AlgebraElement& x) {
    Matrix m = Matrix::zero(rep.space.dim(), rep.space.dim());
    for (std::size_t i = 0; i < x.coeffs.size(); ++i)
        if (!x.coeffs[i].is_zero()) m = m + x.coeffs[i] * rep.action[i].mat();
    return m;
}

inline HomMap act_map(const Representation& rep, const AlgebraElement& x, Parity p) {
    if (!x.is_homogeneous(p)) throw error("element is not parity-homogeneous");
    return HomMap(rep.space, rep.space, p, act_matrix(rep, x));
}

// --- validity -------------------------------------------------------------

// Every violated antisymmetry / parity / Jacobi identity, one message each;
// empty means valid.
inline std::vector<std::string> validate(const LieSuperAlgebra& g) {
    std::vector<std::string> bad;
    std::size_t n = g.dim();
    for (const auto& [ij, terms] : g.structure) {
        auto [i, j] = ij;
        if (i > j) bad.push_back("structure key with i > j at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
        Parity want = g.parity(i) + g.parity(j);
        for (const auto& [k, c] : terms)
            if (!c.is_zero() && g.parity(k) != want)
                bad.push_back("bracket [" + g.name(i) + "," + g.name(j) +
                              "] does not respect parity");
    }
    // [y, y] = 0 for even y is forced by antisymmetry
    for (std::size_t i = 0; i < n; ++i) {
        if (g.parity(i) != Parity::Even) continue;
        auto d = g.bracket_basis(i, i);
        for (const auto& c : d)
            if (!c.is_zero()) {
                bad.push_back("[" + g.name(i) + "," + g.name(i) + "] nonzero for even element");
                break;
            }
    }
    // super Jacobi: [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
    auto elem = [&](std::size_t i) {
        AlgebraElement e{nullptr, std::vector<Rational>(n)};
        e.coeffs[i] = 1;
        return e;
    };
    auto bk = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[j].is_zero()) continue;
                Rational f = a[i] * b[j];
                auto v = g.bracket_basis(i, j);
                for (std::size_t k = 0; k < n; ++k)
                    if (!v[k].is_zero()) out[k] += f * v[k];
            }
        }
        return out;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                auto lhs = bk(elem(a).coeffs, g.bracket_basis(b, c));
                auto r1 = bk(g.bracket_basis(a, b), elem(c).coeffs);
                auto r2 = bk(elem(b).coeffs, g.bracket_basis(a, c));
                int sgn = koszul(g.parity(a), g.parity(b));
                bool ok = true;
                for (std::size_t k = 0; k < n; ++k) {
                    Rational rhs = r1[k] + (sgn < 0 ? -r2[k] : r2[k]);
                    if (lhs[k] != rhs) ok = false;
                }
                if (!ok)
                    bad.push_back("Jacobi fails on (" + g.name(a) + "," + g.name(b) + "," +
                                  g.name(c) + ")");
            }
    return bad;
}

inline std::vector<std::string> validate(const Representation& rep) {
    std::vector<std::string> bad;
    const LieSuperAlgebra& g = *rep.algebra;
    if (rep.action.size() != g.dim()) return {"action size does not match basis"};
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (rep.action[i].parity() != g.parity(i))
            bad.push_back("action parity mismatch at " + g.name(i));
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i; j < g.dim(); ++j) {
            Matrix lhs = Matrix::zero(rep.space.dim(), rep.space.dim());
            auto bk = g.bracket_basis(i, j);
            for (std::size_t k = 0; k < g.dim(); ++k)
                if (!bk[k].is_zero()) lhs = lhs + bk[k] * rep.action[k].mat();
            Matrix rhs = rep.action[i].mat() * rep.action[j].mat();
            Matrix ji = rep.action[j].mat() * rep.action[i].mat();
            rhs = koszul(g.parity(i), g.parity(j)) < 0 ? rhs + ji : rhs - ji;
            if (!(lhs == rhs))
                bad.push_back("homomorphism fails on [" + g.name(i) + "," + g.name(j) + "]");
        }
    return bad;
}

inline void require_valid_rep(const Representation& rep, const char* what) {
    auto bad = validate(rep);
    if (!bad.empty()) throw error(std::string(what) + ": invalid representation: " + bad.front());
}

// --- constructors ----------------------------------------------------------

namespace detail {
inline std::string unit_name(std::size_t i, std::size_t j, std::size_t total) {
    if (total <= 9) return "E" + std::to_string(i + 1) + std::to_string(j + 1);
    return "E" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}
}  // namespace detail

// gl(m|n) with matrix-unit basis E_ij (even units first) and its defining
// representation on k^{m|n}, which is faithful.
inline std::pair<AlgebraPtr, Representation> gl_superalgebra(std::size_t m, std::size_t n) {
    if (m + n == 0) throw error("gl_superalgebra: m = n = 0");
    std::size_t d = m + n;
    auto blk = [&](std::size_t i) { return i < m ? Parity::Even : Parity::Odd; };
    auto g = std::make_shared<LieSuperAlgebra>();
    std::vector<std::vector<std::size_t>> idx(d, std::vector<std::size_t>(d));
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Parity p = blk(i) + blk(j);
                if ((pass == 0) != (p == Parity::Even)) continue;
                idx[i][j] = g->basis.size();
                g->basis.emplace_back(detail::unit_name(i, j, d), p);
                units.emplace_back(i, j);
            }
    auto par = [&](std::size_t a) { return g->parity(a); };
    for (std::size_t a = 0; a < g->dim(); ++a)
        for (std::size_t b = a; b < g->dim(); ++b) {
            auto [i, j] = units[a];
            auto [k, l] = units[b];
            std::map<std::size_t, Rational> terms;
            if (j == k) terms[idx[i][l]] += 1;
            if (l == i) terms[idx[k][j]] -= Rational(koszul(par(a), par(b)));
            std::vector<std::pair<std::size_t, Rational>> t;
            for (const auto& [kk, c] : terms)
                if (!c.is_zero()) t.emplace_back(kk, c);
            if (!t.empty()) g->structure[{a, b}] = std::move(t);
        }
    SuperSpace v;
    for (std::size_t i = 0; i < m; ++i) v.even.push_back("v" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) v.odd.push_back("v" + std::to_string(m + i + 1));
    Representation rep{g, v, {}};
    for (std::size_t a = 0; a < g->dim(); ++a) {
        auto [i, j] = units[a];
        Matrix e = Matrix::zero(d, d);
        e(i, j) = 1;
        rep.action.emplace_back(v, v, par(a), std::move(e));
    }
    return {g, rep};
}

// osp(1|2): basis {h, E, F, X, Y} with E = [Y,Y]/2, F = [X,X]/2 and the
// defining relations [h,X] = -2X, [h,Y] = 2Y, [Y,X] = h.
inline const AlgebraPtr& osp12() {
    static const AlgebraPtr g = [] {
        auto a = std::make_shared<LieSuperAlgebra>();
        a->basis = {{"h", Parity::Even},
                    {"E", Parity::Even},
                    {"F", Parity::Even},
                    {"X", Parity::Odd},
                    {"Y", Parity::Odd}};
        auto set = [&](std::size_t i, std::size_t j,
                       std::vector<std::pair<std::size_t, Rational>> t) {
            a->structure[{i, j}] = std::move(t);
        };
        // remaining constants follow from Jacobi; indices h=0 E=1 F=2 X=3 Y=4
        set(0, 1, {{1, 4}});
        set(0, 2, {{2, -4}});
        set(0, 3, {{3, -2}});
        set(0, 4, {{4, 2}});
        set(1, 2, {{0, -2}});
        set(1, 3, {{4, -2}});
        set(2, 4, {{3, 2}});
        set(3, 3, {{2, 2}});
        set(3, 4, {{0, 1}});
        set(4, 4, {{1, 2}});
        return a;
    }();
    return g;
}

// The (k+1|k)-dimensional simple osp(1|2)-module on chain basis a_0..a_{2k}:
// X a_j = a_{j+1}, h a_j = (2k-2j) a_j, Y a_j = c_j a_{j-1} with c_0 = 0 and
// c_{j+1} + c_j = 2k - 2j. `shift` moves a_0 to the odd part.
inline Representation osp_simple(std::size_t k, Parity shift = Parity::Even) {
    std::size_t len = 2 * k + 1;
    SuperSpace v;
    std::vector<std::size_t> canon(len);
    for (int pass = 0; pass < 2; ++pass)
        for (std::size_t j = 0; j < len; ++j) {
            Parity p = parity_of(j) + shift;
            if ((pass == 0) != (p == Parity::Even)) continue;
            canon[j] = (pass == 0) ? v.even.size() : v.even.size() + v.odd.size();
            (p == Parity::Even ? v.even : v.odd).push_back("a" + std::to_string(j));
        }
    Matrix mx = Matrix::zero(len, len), mh = Matrix::zero(len, len), my = Matrix::zero(len, len);
    std::vector<Rational> c(len + 1);
    for (std::size_t j = 0; j + 1 <= len; ++j)
        c[j + 1] = Rational(2 * (long long)k - 2 * (long long)j) - c[j];
    for (std::size_t j = 0; j < len; ++j) {
        if (j + 1 < len) mx(canon[j + 1], canon[j]) = 1;
        mh(canon[j], canon[j]) = Rational(2 * (long long)k - 2 * (long long)j);
        if (j > 0) my(canon[j - 1], canon[j]) = c[j];
    }
    Representation rep{osp12(), v, {}};
    rep.action.emplace_back(v, v, Parity::Even, mh);
    rep.action.emplace_back(v, v, Parity::Even, my * my);  // E = [Y,Y]/2
    rep.action.emplace_back(v, v, Parity::Even, mx * mx);  // F = [X,X]/2
    rep.action.emplace_back(v, v, Parity::Odd, mx);
    rep.action.emplace_back(v, v, Parity::Odd, my);
    require_valid_rep(rep, "osp_simple");
    return rep;
}

// g acting on itself; the space uses the canonical even-then-odd order of the
// basis.
inline Representation adjoint_rep(const AlgebraPtr& alg) {
    const LieSuperAlgebra& g = *alg;
    SuperSpace v = g.underlying_space();
    std::vector<std::size_t> cpos(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) cpos[i] = g.canonical_pos(i);
    Representation rep{alg, v, {}};
    for (std::size_t i = 0; i < g.dim(); ++i) {
        Matrix m = Matrix::zero(g.dim(), g.dim());
        for (std::size_t j = 0; j < g.dim(); ++j) {
            auto bk = g.bracket_basis(i, j);
            for (std::size_t k = 0; k < g.dim(); ++k)
                if (!bk[k].is_zero()) m(cpos[k], cpos[j]) = bk[k];
        }
        rep.action.emplace_back(v, v, g.parity(i), std::move(m));
    }
    return rep;
}

// true iff b -> rho(b) has trivial kernel
inline bool is_faithful(const Representation& rep) {
    std::size_t n = rep.space.dim();
    Matrix stacked(n * n, rep.algebra->dim());
    for (std::size_t i = 0; i < rep.algebra->dim(); ++i)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                stacked(r * n + c, i) = rep.action[i].mat()(r, c);
    return kernel_basis(stacked).cols() == 0;
}

// --- representation constructions ------------------------------------------

inline void require_same_algebra(const Representation& a, const Representation& b) {
    if (a.algebra != b.algebra && !(a.algebra && b.algebra && a.algebra->basis == b.algebra->basis))
        throw error("representations are over different algebras");
}

inline Representation rep_tensor(const Representation& a, const Representation& b) {
    require_same_algebra(a, b);
    Representation r{a.algebra, tensor(a.space, b.space), {}};
    HomMap ida = HomMap::identity(a.space), idb = HomMap::identity(b.space);
    for (std::size_t i = 0; i < a.action.size(); ++i)
        r.action.push_back(tensor_maps(a.action[i], idb) + tensor_maps(ida, b.action[i]));
    return r;
}

inline Representation rep_dual(const Representation& a) {
    Representation r{a.algebra, dual(a.space), {}};
    for (const auto& f : a.action) r.action.push_back(Rational(-1) * dual_map(f));
    return r;
}

inline Representation rep_direct_sum(const Representation& a, const Representation& b) {
    require_same_algebra(a, b);
    Representation r{a.algebra, direct_sum(a.space, b.space), {}};
    for (std::size_t i = 0; i < a.action.size(); ++i)
        r.action.push_back(direct_sum_maps(a.action[i], b.action[i]));
    return r;
}

inline Representation rep_parity_shift(const Representation& a) {
    Representation r{a.algebra, parity_shift(a.space), {}};
    for (const auto& f : a.action) r.action.push_back(parity_shift(f));
    return r;
}

// --- minuscule element data --------------------------------------------------

// Element-level shadow of the minuscule supergroup: y = [x,x] with the
// Jordan-Chevalley split of its action.
struct MinusculeData {
    AlgebraElement x;
    AlgebraElement y;  // [x, x]
    Matrix y_s, y_n;   // rho(y) = y_s + y_n on the chosen representation
};

inline MinusculeData minuscule_data(const Representation& rep, const AlgebraElement& x) {
    if (!x.is_homogeneous(Parity::Odd)) throw error("minuscule_data: element must be odd");
    AlgebraElement y = bracket(x, x);
    Matrix rx = act_matrix(rep, x);
    Matrix ry = act_matrix(rep, y);
    if (!(ry == Rational(2) * (rx * rx)))
        throw error("minuscule_data: rho([x,x]) != 2 rho(x)^2 (invalid representation?)");
    auto jc = jordan_chevalley(ry);
    if (!(jc.s * rx == rx * jc.s) || !(jc.n * rx == rx * jc.n))
        throw error("minuscule_data: parts do not commute with rho(x)");
    return {x, std::move(y), std::move(jc.s), std::move(jc.n)};
}

}  // namespace superrep
