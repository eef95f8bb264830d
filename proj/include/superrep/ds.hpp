#pragma once

#include "superrep/functors.hpp"

namespace superrep {

// Duflo-Serganova module M_x = Ker x / Im x for square-zero odd x, with the
// induced maps of the algebra basis elements that commute with x.
struct DsModule {
    SuperSpace space;
    std::vector<std::pair<std::string, HomMap>> action;
};

namespace detail {

struct Subquotient {
    GradedSubspace ker;    // Ker x inside the ambient space
    QuotientSpace quot;    // quotient of ker by Im x (in ker coordinates)

    SuperSpace space() const { return quot.space; }
    // induced map of an ambient endomorphism commuting with x
    HomMap induce(const HomMap& f) const {
        HomMap on_ker = restrict_to_subspace(f, ker);
        return quotient_map(on_ker, quot);
    }
};

inline Subquotient ker_mod_im(const SuperSpace& space, const Matrix& x) {
    Subquotient s{graded_span(space, kernel_basis(x)), {}};
    Matrix im_in_ker = coords_in(s.ker, span_basis(x));  // Im x lies inside Ker x
    s.quot = quotient_by_subspace(s.ker.space, im_in_ker);
    return s;
}

}  // namespace detail

// DS functor on a module: requires rho([x,x]) = 0 exactly.
inline DsModule ds_module(const Representation& rep, const AlgebraElement& x) {
    if (!x.is_homogeneous(Parity::Odd)) throw error("ds_module: element must be odd");
    Matrix rx = act_matrix(rep, x);
    if (!(rx * rx).is_zero()) throw error("DS requires square-zero element");
    auto sq = detail::ker_mod_im(rep.space, rx);
    DsModule out{sq.space(), {}};
    const LieSuperAlgebra& g = *rep.algebra;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        AlgebraElement bi = basis_element(rep.algebra, i);
        if (!bracket(bi, x).is_zero()) continue;
        out.action.emplace_back(g.name(i), sq.induce(rep.action[i]));
    }
    return out;
}

// DS on the algebra itself: g_x = Ker ad_x / Im ad_x with the induced
// bracket; Jacobi is verified before returning.
inline AlgebraPtr ds_algebra(const AlgebraPtr& alg, const AlgebraElement& x) {
    if (!x.is_homogeneous(Parity::Odd)) throw error("ds_algebra: element must be odd");
    if (!bracket(x, x).is_zero()) throw error("DS requires square-zero element");
    const LieSuperAlgebra& g = *alg;
    Representation ad = adjoint_rep(alg);
    Matrix adx = act_matrix(ad, x);
    auto sq = detail::ker_mod_im(ad.space, adx);

    // lift subquotient basis vectors back to algebra elements
    SuperSpace qspace = sq.space();
    std::size_t qdim = qspace.dim();
    Matrix lift_ambient = sq.ker.basis * sq.quot.lift;  // ambient coords of quotient basis
    std::vector<std::size_t> basis_of_canonical(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) basis_of_canonical[g.canonical_pos(i)] = i;
    auto lift_element = [&](std::size_t q) {
        AlgebraElement e = zero_element(alg);
        for (std::size_t r = 0; r < g.dim(); ++r)
            e.coeffs[basis_of_canonical[r]] = lift_ambient(r, q);
        return e;
    };

    auto result = std::make_shared<LieSuperAlgebra>();
    for (std::size_t q = 0; q < qdim; ++q)
        result->basis.emplace_back(qspace.label(q), qspace.parity(q));
    // project [lift(i), lift(j)] back to the subquotient
    auto project_element = [&](const AlgebraElement& e) {
        Matrix v(g.dim(), 1);
        for (std::size_t i = 0; i < g.dim(); ++i) v(g.canonical_pos(i), 0) = e.coeffs[i];
        Matrix in_ker = coords_in(sq.ker, v);  // requires the bracket to live in Ker ad_x
        return sq.quot.projection * in_ker;
    };
    for (std::size_t i = 0; i < qdim; ++i) {
        AlgebraElement li = lift_element(i);
        for (std::size_t j = i; j < qdim; ++j) {
            Matrix c = project_element(bracket(li, lift_element(j)));
            std::vector<std::pair<std::size_t, Rational>> terms;
            for (std::size_t k = 0; k < qdim; ++k)
                if (!c(k, 0).is_zero()) terms.emplace_back(k, c(k, 0));
            if (!terms.empty()) result->structure[{i, j}] = std::move(terms);
        }
    }
    auto bad = validate(*result);
    if (!bad.empty()) throw error("ds_algebra: induced bracket invalid: " + bad.front());
    return result;
}

}  // namespace superrep
