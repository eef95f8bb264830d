#pragma once

#include "superrep/liesuper.hpp"
#include "superrep/nilform.hpp"

namespace superrep {

// Object of the semisimple category Rep(OSp(1|2)): a multiset of simples
// Pi^shift M~_{2k}, kept in canonical sorted order (k ascending, Even before
// Odd). The zero object is the empty multiset.
struct SemisimpleObject {
    std::map<std::pair<std::size_t, Parity>, std::size_t> summands;  // (k, shift) -> mult

    bool is_zero() const { return summands.empty(); }
    void add(std::size_t k, Parity shift, std::size_t mult) {
        if (mult) summands[{k, shift}] += mult;
    }
    // graded dimension: sum of mult * (k+1|k), swapped under the shift
    std::pair<std::size_t, std::size_t> graded_dims() const {
        std::size_t e = 0, o = 0;
        for (const auto& [ks, m] : summands) {
            auto [k, shift] = ks;
            if (shift == Parity::Even) {
                e += m * (k + 1);
                o += m * k;
            } else {
                e += m * k;
                o += m * (k + 1);
            }
        }
        return {e, o};
    }
    long sdim() const {
        long s = 0;
        for (const auto& [ks, m] : summands)
            s += (ks.second == Parity::Even ? 1 : -1) * static_cast<long>(m);
        return s;
    }
    friend bool operator==(const SemisimpleObject& a, const SemisimpleObject& b) = default;
};

// Formal multiset of indecomposables Pi^shift M_{length-1}; identified with
// BlockDecomposition multiplicities.
struct Ga11Object {
    std::map<std::pair<std::size_t, Parity>, std::size_t> summands;  // (length, shift) -> mult

    void add(std::size_t length, Parity shift, std::size_t mult) {
        if (mult) summands[{length, shift}] += mult;
    }
    static Ga11Object from_blocks(const BlockDecomposition& b) {
        Ga11Object o;
        for (const auto& [blk, m] : b.mult) o.add(blk.length, blk.top, m);
        return o;
    }
    std::pair<std::size_t, std::size_t> graded_dims() const {
        std::size_t e = 0, o = 0;
        for (const auto& [ls, m] : summands) {
            auto [len, shift] = ls;
            std::size_t tops = (len + 1) / 2, others = len / 2;
            if (shift == Parity::Even) {
                e += m * tops;
                o += m * others;
            } else {
                e += m * others;
                o += m * tops;
            }
        }
        return {e, o};
    }
    friend bool operator==(const Ga11Object& a, const Ga11Object& b) = default;
};

// Drop every even-length block (superdimension zero); send a block of length
// 2k+1 with shift eps to Pi^eps M~_{2k}.
inline SemisimpleObject semisimplify(const Ga11Object& b) {
    SemisimpleObject out;
    for (const auto& [ls, m] : b.summands)
        if (ls.first % 2 == 1) out.add((ls.first - 1) / 2, ls.second, m);
    return out;
}
inline SemisimpleObject semisimplify(const BlockDecomposition& b) {
    return semisimplify(Ga11Object::from_blocks(b));
}

// Phi_x for nilpotent odd x: restrict to the chosen element and semisimplify.
inline SemisimpleObject phi_nilpotent(const Representation& rep, const AlgebraElement& x) {
    if (!x.is_homogeneous(Parity::Odd)) throw error("phi_nilpotent: element must be odd");
    Matrix rx = act_matrix(rep, x);
    Matrix p = Matrix::identity(rx.rows());
    for (std::size_t i = 0; i <= rx.rows() && !p.is_zero(); ++i) p = rx * p;
    if (!p.is_zero()) throw error("element not nilpotent; use phi_general");
    OddNilpotent op(HomMap(rep.space, rep.space, Parity::Odd, rx));
    return semisimplify(block_multiplicities(op));
}

// Phi_x for arbitrary odd x, via the minuscule element data: restrict x to
// M^{y_s} = Ker(y_s), where it acts nilpotently, and semisimplify.
inline SemisimpleObject phi_general(const Representation& rep, const AlgebraElement& x) {
    if (!x.is_homogeneous(Parity::Odd)) throw error("phi_general: element must be odd");
    MinusculeData md = minuscule_data(rep, x);
    GradedSubspace fixed = graded_span(rep.space, kernel_basis(md.y_s));
    HomMap rx = act_map(rep, x, Parity::Odd);
    EchelonSpan inside(rep.space.dim());
    inside.insert_cols(fixed.basis);
    if (!inside.contains_cols(rx.mat() * fixed.basis))
        throw error("phi_general: internal defect, Ker(y_s) not x-stable");
    HomMap restricted = restrict_to_subspace(rx, fixed);
    OddNilpotent op(restricted);  // nilpotency verified by the constructor
    return semisimplify(block_multiplicities(op));
}

// The explicit osp(1|2)-action on Gr^ev of a neat operator: h acts by the
// grading, X by Gr(x) (equal to x in the chain basis), Y by the per-block
// recurrence, E and F derived.
inline Representation T_functor(const OddNilpotent& op) {
    if (!is_neat_on(op)) throw error("T_functor: operator is not neat");
    auto fr = detail::build_chain_frame(op);
    std::size_t n = op.space.dim();
    Matrix d = Matrix::zero(n, n), ychain = Matrix::zero(n, n);
    std::size_t col = 0;
    for (const auto& ch : fr.chains) {
        long k = static_cast<long>(ch.length) - 1;
        Rational c(0);
        for (long j = 0; j <= k; ++j, ++col) {
            d(col, col) = Rational(k - 2 * j);
            if (j > 0) ychain(col - 1, col) = c;
            c = Rational(k - 2 * j) - c;
        }
    }
    Matrix h = fr.c * d * fr.cinv;
    Matrix y = fr.c * ychain * fr.cinv;
    const Matrix& x = op.x.mat();
    Representation rep{osp12(), op.space, {}};
    rep.action.emplace_back(op.space, op.space, Parity::Even, h);
    rep.action.emplace_back(op.space, op.space, Parity::Even, y * y);
    rep.action.emplace_back(op.space, op.space, Parity::Even, x * x);
    rep.action.emplace_back(op.space, op.space, Parity::Odd, x);
    rep.action.emplace_back(op.space, op.space, Parity::Odd, y);
    require_valid_rep(rep, "T_functor");
    return rep;
}

// Closed-form Clebsch-Gordan rules for tensor products of indecomposables,
// with parity shifts composed additively.
inline Ga11Object ga11_fusion(std::size_t left_len, Parity left_shift, std::size_t right_len,
                              Parity right_shift) {
    if (left_len == 0 || right_len == 0) throw error("ga11_fusion: block length must be >= 1");
    Parity sigma = left_shift + right_shift;
    long rl = static_cast<long>(left_len) - 1, rr = static_cast<long>(right_len) - 1;
    Ga11Object out;
    auto pi = [&](long extra) { return sigma + (extra % 2 ? Parity::Odd : Parity::Even); };
    if (rl % 2 == 0 && rr % 2 == 0) {
        long k = rl / 2, m = rr / 2;
        for (long s = std::labs(k - m); s <= k + m; ++s)
            out.add(static_cast<std::size_t>(2 * s + 1), pi(k + m - s), 1);
    } else if (rl % 2 == 1 && rr % 2 == 1) {
        long k = (rl - 1) / 2, m = (rr - 1) / 2;
        for (long s = std::labs(k - m); s <= k + m; ++s) {
            out.add(static_cast<std::size_t>(2 * s + 2), sigma, 1);
            out.add(static_cast<std::size_t>(2 * s + 2), sigma + Parity::Odd, 1);
        }
    } else {
        // one factor M_{2k+1}, the other M_{2m}
        long k = (rl % 2 == 1) ? (rl - 1) / 2 : (rr - 1) / 2;
        long m = (rl % 2 == 1) ? rr / 2 : rl / 2;
        long lo = std::min(std::labs(k - m), std::labs(k - m + 1));
        for (long s = lo; s <= k + m; ++s)
            out.add(static_cast<std::size_t>(2 * s + 2), pi(k + m - s), 1);
    }
    return out;
}

inline Ga11Object ga11_fusion(const Ga11Object& a, const Ga11Object& b) {
    Ga11Object out;
    for (const auto& [ls1, m1] : a.summands)
        for (const auto& [ls2, m2] : b.summands) {
            Ga11Object f = ga11_fusion(ls1.first, ls1.second, ls2.first, ls2.second);
            for (const auto& [ls, m] : f.summands) out.add(ls.first, ls.second, m * m1 * m2);
        }
    return out;
}

// M~_{2k} (x) M~_{2m} = sum_{s=|k-m|}^{k+m} Pi^{k+m-s} M~_{2s}
inline SemisimpleObject osp_fusion(std::size_t k_left, Parity left_shift, std::size_t k_right,
                                   Parity right_shift) {
    Parity sigma = left_shift + right_shift;
    long k = static_cast<long>(k_left), m = static_cast<long>(k_right);
    SemisimpleObject out;
    for (long s = std::labs(k - m); s <= k + m; ++s)
        out.add(static_cast<std::size_t>(s),
                sigma + ((k + m - s) % 2 ? Parity::Odd : Parity::Even), 1);
    return out;
}

inline SemisimpleObject osp_fusion(const SemisimpleObject& a, const SemisimpleObject& b) {
    SemisimpleObject out;
    for (const auto& [ks1, m1] : a.summands)
        for (const auto& [ks2, m2] : b.summands) {
            SemisimpleObject f = osp_fusion(ks1.first, ks1.second, ks2.first, ks2.second);
            for (const auto& [ks, m] : f.summands) out.add(ks.first, ks.second, m * m1 * m2);
        }
    return out;
}

}  // namespace superrep
