#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>

#include "superrep/subquotient.hpp"

namespace superrep {

// Odd nilpotent endomorphism; nilpotency is checked at construction.
struct OddNilpotent {
    SuperSpace space;
    HomMap x;

    explicit OddNilpotent(HomMap op) : space(op.source()), x(std::move(op)) {
        if (!x.is_endo() || x.parity() != Parity::Odd)
            throw error("odd nilpotent: operator must be an odd endomorphism");
        Matrix p = Matrix::identity(space.dim());
        for (std::size_t i = 0; i <= space.dim() && !p.is_zero(); ++i) p = x.mat() * p;
        if (!p.is_zero()) throw error("odd nilpotent: operator is not nilpotent");
    }
};

// A block of length k+1 with top parity eps is the indecomposable module
// Pi^eps M_k: chain a_0..a_k, x a_j = a_{j+1}, parity(a_j) = j + eps.
struct Block {
    std::size_t length;
    Parity top;
    friend bool operator<(const Block& a, const Block& b) {
        return a.length != b.length ? a.length < b.length : a.top < b.top;
    }
    friend bool operator==(const Block& a, const Block& b) = default;
};

struct Chain {
    Matrix vectors;  // dim x length, column j is a_j
    Parity top;
    std::size_t length;
};

struct BlockDecomposition {
    std::map<Block, std::size_t> mult;
    std::vector<Chain> chains;  // present only when produced by adapted_basis

    std::size_t total_dim() const {
        std::size_t d = 0;
        for (const auto& [b, m] : mult) d += b.length * m;
        return d;
    }
    friend bool operator==(const BlockDecomposition& a, const BlockDecomposition& b) {
        return a.mult == b.mult;
    }
};

namespace detail {

// dims of x^p(V_eps) for p = 0,1,... until the image vanishes
inline std::array<std::vector<std::size_t>, 2> graded_image_dims(const OddNilpotent& op) {
    std::array<std::vector<std::size_t>, 2> r;
    const Matrix& x = op.x.mat();
    for (int eps = 0; eps < 2; ++eps) {
        std::size_t lo = eps == 0 ? 0 : op.space.even_dim();
        std::size_t hi = eps == 0 ? op.space.even_dim() : op.space.dim();
        Matrix img(op.space.dim(), hi - lo);
        for (std::size_t j = lo; j < hi; ++j) img(j, j - lo) = 1;
        while (true) {
            r[eps].push_back(img.cols());
            if (img.cols() == 0) break;
            img = span_basis(x * img);
        }
    }
    return r;
}

}  // namespace detail

// Block multiset from graded ranks: the number of blocks of length >= l with
// top parity eps is dim x^{l-1}(V_eps) - dim x^l(V_eps).
inline BlockDecomposition block_multiplicities(const OddNilpotent& op) {
    auto dims = detail::graded_image_dims(op);
    auto r = [&](std::size_t p, int eps) {
        const auto& v = dims[eps & 1];
        return p < v.size() ? v[p] : 0;
    };
    BlockDecomposition out;
    std::size_t maxlen = std::max(dims[0].size(), dims[1].size());
    for (std::size_t l = 1; l < maxlen; ++l)
        for (int eps = 0; eps < 2; ++eps) {
            std::size_t at_least_l = r(l - 1, eps) - r(l, eps);
            std::size_t at_least_l1 = r(l, eps + 1) - r(l + 1, eps + 1);
            if (at_least_l > at_least_l1)
                out.mult[{l, static_cast<Parity>(eps)}] = at_least_l - at_least_l1;
        }
    if (out.total_dim() != op.space.dim())
        throw error("block_multiplicities: internal defect, dimensions do not add up");
    return out;
}

// Greedy chain extraction: process lengths in decreasing order, picking
// pure-parity top vectors from Ker(x^l) that are independent of
// Ker(x^{l-1}) + previously chosen chains. Candidate order is the canonical
// pivot-ascending one, or a seeded shuffle when `shuffle` is given (used to
// test canonicity of everything built from the chains).
inline BlockDecomposition adapted_basis(
    const OddNilpotent& op,
    const std::optional<std::vector<std::size_t>>& shuffle_seed_order = std::nullopt) {
    std::size_t n = op.space.dim();
    std::vector<Matrix> powers{Matrix::identity(n)};
    while (!powers.back().is_zero()) powers.push_back(op.x.mat() * powers.back());
    std::size_t maxlen = powers.size() - 1;  // nilpotency index

    EchelonSpan chosen(n);
    BlockDecomposition out;
    for (std::size_t l = maxlen; l >= 1; --l) {
        EchelonSpan blocked(n);
        if (l >= 2) blocked.insert_cols(kernel_basis(powers[l - 1]));
        blocked.insert_cols(chosen.basis());
        GradedSubspace top_space = graded_span(op.space, kernel_basis(powers[l]));
        std::vector<std::size_t> order(top_space.basis.cols());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        if (shuffle_seed_order) {
            order.clear();
            for (std::size_t i : *shuffle_seed_order)
                if (i < top_space.basis.cols()) order.push_back(i);
            for (std::size_t i = 0; i < top_space.basis.cols(); ++i)
                if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
        }
        for (std::size_t oi : order) {
            std::vector<Rational> v = top_space.basis.col(oi);
            if (!blocked.insert(v)) continue;
            Chain c;
            c.length = l;
            c.top = op.space.parity(top_space.pivots[oi]);
            c.vectors = Matrix(n, l);
            Matrix vcolumn = Matrix::column(v);
            for (std::size_t j = 0; j < l; ++j) {
                c.vectors.set_col(j, vcolumn.col(0));
                chosen.insert(vcolumn.col(0));
                vcolumn = op.x.mat() * vcolumn;
            }
            out.mult[{l, c.top}] += 1;
            out.chains.push_back(std::move(c));
        }
        if (l == 1) break;
    }
    if (chosen.dim() != n) throw error("adapted_basis: internal defect, chains fail to span");
    return out;
}

// Neat: every block has odd length, i.e. nonzero superdimension.
inline bool is_neat_on(const OddNilpotent& op) {
    for (const auto& [b, m] : block_multiplicities(op).mult)
        if (b.length % 2 == 0) return false;
    return true;
}

// Canonical increasing filtration attached to an odd nilpotent, stored as
// canonical graded subspaces per integer level.
struct Filtration {
    SuperSpace space;
    std::map<int, GradedSubspace> levels;  // from the zero space up to the full space

    int min_level() const { return levels.begin()->first; }
    int max_level() const { return levels.rbegin()->first; }
    const GradedSubspace& at(int i) const {
        if (i <= min_level()) return levels.begin()->second;
        if (i >= max_level()) return levels.rbegin()->second;
        return levels.at(i);
    }
    // graded dims of Gr^i
    std::pair<std::size_t, std::size_t> gr_dims(int i) const {
        const GradedSubspace &hi = at(i), &lo = at(i - 1);
        return {hi.space.even_dim() - lo.space.even_dim(),
                hi.space.odd_dim() - lo.space.odd_dim()};
    }
};

namespace detail {

inline void verify_deligne(const Filtration& f, const OddNilpotent& op) {
    int top = f.max_level();
    std::vector<Matrix> powers{Matrix::identity(op.space.dim())};
    for (int i = 1; i <= std::max(top, 0); ++i) powers.push_back(op.x.mat() * powers.back());
    for (int i = f.min_level(); i <= top; ++i) {
        // x F^i inside F^{i-2}
        EchelonSpan lower(op.space.dim());
        lower.insert_cols(f.at(i - 2).basis);
        if (!lower.contains_cols(op.x.mat() * f.at(i).basis))
            throw error("deligne_filtration: internal defect, x F^i not in F^{i-2}");
    }
    for (int i = 0; i <= top; ++i) {
        // x^i: Gr^i -> Pi^i Gr^{-i} bijective
        auto [ge, go] = f.gr_dims(i);
        auto [me, mo] = f.gr_dims(-i);
        bool flip = i % 2 != 0;
        if (ge != (flip ? mo : me) || go != (flip ? me : mo))
            throw error("deligne_filtration: internal defect, graded dims of Gr^i and Gr^{-i}");
        Matrix img = powers[static_cast<std::size_t>(i)] * f.at(i).basis;
        EchelonSpan target(op.space.dim());
        target.insert_cols(f.at(-i).basis);
        if (!target.contains_cols(img))
            throw error("deligne_filtration: internal defect, x^i F^i not in F^{-i}");
        EchelonSpan span(op.space.dim());
        span.insert_cols(f.at(-i - 1).basis);
        span.insert_cols(img);
        if (span.dim() != f.at(-i).space.dim())
            throw error("deligne_filtration: internal defect, x^i not onto Gr^{-i}");
    }
}

}  // namespace detail

// Built from the block normal form: on a chain of length k+1 the vector
// a_j = x^j a_0 first appears in F^{k-2j}. Both filtration axioms are
// verified exactly before returning.
inline Filtration deligne_filtration(
    const OddNilpotent& op,
    const std::optional<std::vector<std::size_t>>& shuffle_seed_order = std::nullopt) {
    BlockDecomposition bd = adapted_basis(op, shuffle_seed_order);
    int top = 0;
    for (const auto& c : bd.chains) top = std::max(top, static_cast<int>(c.length) - 1);
    Filtration f;
    f.space = op.space;
    for (int i = -top - 1; i <= top; ++i) {
        EchelonSpan es(op.space.dim());
        for (const auto& c : bd.chains) {
            int k = static_cast<int>(c.length) - 1;
            for (int j = 0; j < static_cast<int>(c.length); ++j)
                if (k - 2 * j <= i) es.insert(c.vectors.col(static_cast<std::size_t>(j)));
        }
        f.levels.emplace(i, graded_span(op.space, es.basis()));
    }
    detail::verify_deligne(f, op);
    return f;
}

namespace detail {

// chain basis as one matrix, with its inverse
struct ChainFrame {
    std::vector<Chain> chains;
    Matrix c;     // columns: all chain vectors, chain by chain
    Matrix cinv;
};

inline ChainFrame build_chain_frame(const OddNilpotent& op) {
    ChainFrame fr;
    fr.chains = adapted_basis(op).chains;
    std::size_t n = op.space.dim();
    fr.c = Matrix(n, n);
    std::size_t col = 0;
    for (const auto& ch : fr.chains)
        for (std::size_t j = 0; j < ch.length; ++j) fr.c.set_col(col++, ch.vectors.col(j));
    auto inv = solve_multi(fr.c, Matrix::identity(n));
    if (!inv) throw error("chain frame: internal defect, chain matrix not invertible");
    fr.cinv = *inv;
    return fr;
}

}  // namespace detail

// h acting by k-2j on each length-(k+1) chain; satisfies [h, x] = -2x.
// Defined for neat operators only (all chain weights even).
inline HomMap grading_operator(const OddNilpotent& op) {
    if (!is_neat_on(op)) throw error("grading defined only for neat operators");
    auto fr = detail::build_chain_frame(op);
    std::size_t n = op.space.dim();
    Matrix d = Matrix::zero(n, n);
    std::size_t col = 0;
    for (const auto& ch : fr.chains) {
        long k = static_cast<long>(ch.length) - 1;
        for (long j = 0; j <= k; ++j, ++col) d(col, col) = Rational(k - 2 * j);
    }
    HomMap h(op.space, op.space, Parity::Even, fr.c * d * fr.cinv);
    HomMap bracket = super_bracket(h, op.x);
    if (!(bracket.mat() == Rational(-2) * op.x.mat()))
        throw error("grading_operator: internal defect, [h, x] != -2x");
    return h;
}

}  // namespace superrep
