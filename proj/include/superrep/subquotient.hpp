#pragma once

#include "superrep/superspace.hpp"

namespace superrep {

// Graded subspace of an ambient superspace, with the canonical RREF-derived
// basis. For a graded subspace every RREF row is parity-pure, and rows with
// even pivots precede rows with odd pivots, so the basis columns are already
// in canonical (even block, odd block) order.
struct GradedSubspace {
    SuperSpace ambient;
    SuperSpace space;   // the subspace with labels taken from pivot coordinates
    Matrix basis;       // ambient.dim() x space.dim(), canonical columns
    std::vector<std::size_t> pivots;
};

inline GradedSubspace graded_span(const SuperSpace& ambient, const Matrix& columns) {
    if (columns.rows() != ambient.dim()) throw error("graded_span: ambient dimension mismatch");
    EchelonSpan es(ambient.dim());
    es.insert_cols(columns);
    Matrix basis = es.basis();
    GradedSubspace s;
    s.ambient = ambient;
    s.pivots = es.pivots();
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        Parity p = ambient.parity(s.pivots[j]);
        for (std::size_t i = 0; i < basis.rows(); ++i)
            if (!basis(i, j).is_zero() && ambient.parity(i) != p)
                throw error("subspace not graded");
        if (p == Parity::Even)
            s.space.even.push_back(ambient.label(s.pivots[j]));
        else
            s.space.odd.push_back(ambient.label(s.pivots[j]));
    }
    s.basis = std::move(basis);
    return s;
}

// Coordinates of ambient vectors (columns) in the subspace basis; errors if
// some column is not contained.
inline Matrix coords_in(const GradedSubspace& s, const Matrix& vecs) {
    auto sol = solve_multi(s.basis, vecs);
    if (!sol) throw error("coords_in: vector not in subspace");
    return *sol;
}

// Restriction of an endomorphism to an invariant graded subspace.
inline HomMap restrict_to_subspace(const HomMap& f, const GradedSubspace& s) {
    if (!f.is_endo() || f.source() != s.ambient)
        throw error("restrict_to_subspace: map is not an endomorphism of the ambient space");
    return HomMap(s.space, s.space, f.parity(), coords_in(s, f.mat() * s.basis));
}

// Quotient of the ambient space by a graded subspace. The canonical quotient
// basis is the image of the standard basis vectors at non-pivot coordinates.
struct QuotientSpace {
    GradedSubspace sub;
    SuperSpace space;                     // the quotient
    std::vector<std::size_t> free_idx;    // ambient coordinates representing the quotient basis
    Matrix projection;                    // space.dim() x ambient.dim()
    Matrix lift;                          // ambient.dim() x space.dim(), section of projection
};

inline QuotientSpace quotient_by_subspace(const SuperSpace& ambient, const Matrix& sub_columns) {
    QuotientSpace q;
    q.sub = graded_span(ambient, sub_columns);
    std::vector<bool> is_pivot(ambient.dim(), false);
    for (std::size_t p : q.sub.pivots) is_pivot[p] = true;
    for (std::size_t i = 0; i < ambient.dim(); ++i)
        if (!is_pivot[i]) {
            q.free_idx.push_back(i);
            if (ambient.parity(i) == Parity::Even)
                q.space.even.push_back(ambient.label(i));
            else
                q.space.odd.push_back(ambient.label(i));
        }
    // A vector reduces mod the subspace by eliminating its pivot coordinates;
    // what is left lives on the free coordinates.
    q.projection = Matrix(q.free_idx.size(), ambient.dim());
    for (std::size_t j = 0; j < q.free_idx.size(); ++j) q.projection(j, q.free_idx[j]) = 1;
    for (std::size_t r = 0; r < q.sub.pivots.size(); ++r)
        for (std::size_t j = 0; j < q.free_idx.size(); ++j)
            q.projection(j, q.sub.pivots[r]) = -q.sub.basis(q.free_idx[j], r);
    q.lift = Matrix(ambient.dim(), q.free_idx.size());
    for (std::size_t j = 0; j < q.free_idx.size(); ++j) q.lift(q.free_idx[j], j) = 1;
    return q;
}

// Induced map on the quotient; requires f(sub) contained in sub.
inline HomMap quotient_map(const HomMap& f, const QuotientSpace& q) {
    if (!f.is_endo() || f.source() != q.sub.ambient)
        throw error("quotient_map: map is not an endomorphism of the ambient space");
    EchelonSpan sub(q.sub.ambient.dim());
    sub.insert_cols(q.sub.basis);
    if (!sub.contains_cols(f.mat() * q.sub.basis))
        throw error("quotient_map: subspace is not invariant");
    return HomMap(q.space, q.space, f.parity(), q.projection * f.mat() * q.lift);
}

}  // namespace superrep
