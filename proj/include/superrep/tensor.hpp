#pragma once

#include "superrep/superspace.hpp"

namespace superrep {

// Tensor product space. The pair basis v_i (x) w_j is ordered
// lexicographically (v index major) and then re-sorted into the even/odd
// blocks by parity sum; canon_of_lex records the permutation.
struct TensorSpace {
    SuperSpace space;
    std::vector<std::size_t> canon_of_lex;  // lex index -> canonical index
};

inline TensorSpace tensor_space(const SuperSpace& v, const SuperSpace& w) {
    TensorSpace t;
    std::vector<std::size_t> evens, odds;
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j) {
            std::string name = v.label(i) + "*" + w.label(j);
            if (v.parity(i) + w.parity(j) == Parity::Even) {
                evens.push_back(i * w.dim() + j);
                t.space.even.push_back(std::move(name));
            } else {
                odds.push_back(i * w.dim() + j);
                t.space.odd.push_back(std::move(name));
            }
        }
    t.canon_of_lex.resize(v.dim() * w.dim());
    for (std::size_t k = 0; k < evens.size(); ++k) t.canon_of_lex[evens[k]] = k;
    for (std::size_t k = 0; k < odds.size(); ++k) t.canon_of_lex[odds[k]] = evens.size() + k;
    return t;
}

inline SuperSpace tensor(const SuperSpace& v, const SuperSpace& w) {
    return tensor_space(v, w).space;
}

// (f (x) g)(v (x) w) = (-1)^{|g||v|} f(v) (x) g(w)
inline HomMap tensor_maps(const HomMap& f, const HomMap& g) {
    TensorSpace src = tensor_space(f.source(), g.source());
    TensorSpace dst = tensor_space(f.target(), g.target());
    std::size_t gs = g.source().dim(), gt = g.target().dim();
    Matrix m(dst.space.dim(), src.space.dim());
    for (std::size_t i = 0; i < f.source().dim(); ++i) {
        int sgn = koszul(g.parity(), f.source().parity(i));
        for (std::size_t j = 0; j < gs; ++j) {
            std::size_t c = src.canon_of_lex[i * gs + j];
            for (std::size_t r1 = 0; r1 < f.target().dim(); ++r1) {
                const Rational& fv = f.mat()(r1, i);
                if (fv.is_zero()) continue;
                for (std::size_t r2 = 0; r2 < gt; ++r2) {
                    const Rational& gv = g.mat()(r2, j);
                    if (gv.is_zero()) continue;
                    Rational val = fv * gv;
                    m(dst.canon_of_lex[r1 * gt + r2], c) = sgn < 0 ? -val : val;
                }
            }
        }
    }
    return HomMap(src.space, dst.space, f.parity() + g.parity(), std::move(m));
}

// symmetry morphism b_{V,W}: v (x) w -> (-1)^{|v||w|} w (x) v
inline HomMap braiding(const SuperSpace& v, const SuperSpace& w) {
    TensorSpace src = tensor_space(v, w);
    TensorSpace dst = tensor_space(w, v);
    Matrix m(dst.space.dim(), src.space.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j) {
            int sgn = koszul(v.parity(i), w.parity(j));
            m(dst.canon_of_lex[j * v.dim() + i], src.canon_of_lex[i * w.dim() + j]) =
                Rational(sgn);
        }
    return HomMap(src.space, dst.space, Parity::Even, std::move(m));
}

// Dual space: same graded dimensions, dual-basis labels.
inline SuperSpace dual(const SuperSpace& v) {
    SuperSpace d;
    for (const auto& l : v.even) d.even.push_back(l + "'");
    for (const auto& l : v.odd) d.odd.push_back(l + "'");
    return d;
}

// f*: W* -> V* for f: V -> W, with (f* phi)(v) = (-1)^{|f||phi|} phi(f(v)).
inline HomMap dual_map(const HomMap& f) {
    SuperSpace src = dual(f.target()), dst = dual(f.source());
    Matrix m(dst.dim(), src.dim());
    for (std::size_t j = 0; j < src.dim(); ++j) {
        int sgn = koszul(f.parity(), f.target().parity(j));
        for (std::size_t i = 0; i < dst.dim(); ++i) {
            const Rational& val = f.mat()(j, i);
            if (!val.is_zero()) m(i, j) = sgn < 0 ? -val : val;
        }
    }
    return HomMap(std::move(src), std::move(dst), f.parity(), std::move(m));
}

inline SuperSpace unit_space() { return SuperSpace{{"1"}, {}}; }

// ev: V (x) V* -> 1, v (x) phi -> phi(v)
inline HomMap evaluation_map(const SuperSpace& v) {
    TensorSpace src = tensor_space(v, dual(v));
    Matrix m(1, src.space.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        m(0, src.canon_of_lex[i * v.dim() + i]) = 1;
    return HomMap(src.space, unit_space(), Parity::Even, std::move(m));
}

inline SuperSpace direct_sum(const SuperSpace& v, const SuperSpace& w) {
    SuperSpace s = v;
    s.even.insert(s.even.end(), w.even.begin(), w.even.end());
    s.odd.insert(s.odd.end(), w.odd.begin(), w.odd.end());
    return s;
}

inline HomMap direct_sum_maps(const HomMap& f, const HomMap& g) {
    if (f.parity() != g.parity()) throw error("direct_sum_maps: parity mismatch");
    SuperSpace src = direct_sum(f.source(), g.source());
    SuperSpace dst = direct_sum(f.target(), g.target());
    // canonical index in the sum of index i of the left/right summand
    auto emb = [](const SuperSpace& part, const SuperSpace& other, bool left, std::size_t i) {
        if (part.parity(i) == Parity::Even)
            return left ? i : other.even_dim() + i;
        std::size_t off = part.even_dim();
        std::size_t sum_even = part.even_dim() + other.even_dim();
        return left ? sum_even + (i - off) : sum_even + other.odd_dim() + (i - off);
    };
    Matrix m(dst.dim(), src.dim());
    for (std::size_t r = 0; r < f.target().dim(); ++r)
        for (std::size_t c = 0; c < f.source().dim(); ++c)
            if (!f.mat()(r, c).is_zero())
                m(emb(f.target(), g.target(), true, r), emb(f.source(), g.source(), true, c)) =
                    f.mat()(r, c);
    for (std::size_t r = 0; r < g.target().dim(); ++r)
        for (std::size_t c = 0; c < g.source().dim(); ++c)
            if (!g.mat()(r, c).is_zero())
                m(emb(g.target(), f.target(), false, r), emb(g.source(), f.source(), false, c)) =
                    g.mat()(r, c);
    return HomMap(std::move(src), std::move(dst), f.parity(), std::move(m));
}

}  // namespace superrep
