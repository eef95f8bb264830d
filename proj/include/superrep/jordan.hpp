#pragma once

#include <utility>
#include <vector>

#include "superrep/linalg.hpp"
#include "superrep/polynomial.hpp"

namespace superrep {

// Monic minimal polynomial, found as the first linear dependence among
// I, m, m^2, ... (Krylov-style, with combination tracking).
inline Polynomial min_poly(const Matrix& m) {
    if (!m.is_square()) throw error("min_poly: non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Polynomial({Rational(1)});  // empty algebra: 1 annihilates
    std::size_t nn = n * n;

    auto vec = [&](const Matrix& a) {
        std::vector<Rational> v(nn);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v[i * n + j] = a(i, j);
        return v;
    };

    // reduced residuals of the power vectors, with the combination that
    // produced each residual from the raw powers
    std::vector<std::vector<Rational>> rows, combos;
    std::vector<std::size_t> pivots;
    Matrix power = Matrix::identity(n);
    for (std::size_t d = 0;; ++d) {
        std::vector<Rational> v = vec(power);
        std::vector<Rational> combo(d + 1);
        combo[d] = 1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Rational f = v[pivots[i]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < nn; ++j) v[j] -= f * rows[i][j];
            for (std::size_t j = 0; j < combos[i].size(); ++j) combo[j] -= f * combos[i][j];
        }
        std::size_t p = 0;
        while (p < nn && v[p].is_zero()) ++p;
        if (p == nn) return Polynomial(std::move(combo));  // monic: combo[d] = 1 untouched
        Rational inv = v[p].inverse();
        for (auto& x : v) x *= inv;
        for (auto& x : combo) x *= inv;
        rows.push_back(std::move(v));
        combos.push_back(std::move(combo));
        pivots.push_back(p);
        power = power * m;
    }
}

// Monic p / gcd(p, p').
inline Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw error("squarefree_part: zero input");
    Polynomial g = poly_gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

struct JordanChevalley {
    Matrix s;  // semisimple part, a polynomial in the input
    Matrix n;  // nilpotent part
};

namespace detail {

// inverse of a modulo mu in Q[t]/(mu), by extended Euclid
inline Polynomial inverse_mod(const Polynomial& a, const Polynomial& mu) {
    Polynomial r0 = mu, r1 = divmod(a, mu).second;
    Polynomial s0, s1 = Polynomial({Rational(1)});
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        Polynomial s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw error("JC did not converge");  // non-unit: defect signal
    return divmod(r0.leading().inverse() * s0, mu).second;
}

// p(z) for polynomials, reduced modulo mu (Horner in Q[t]/(mu))
inline Polynomial compose_mod(const Polynomial& p, const Polynomial& z, const Polynomial& mu) {
    Polynomial acc;
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = divmod(acc * z + Polynomial::constant(p.coeff(i)), mu).second;
    return acc;
}

}  // namespace detail

// Jordan-Chevalley decomposition m = s + n via the squarefree Newton
// iteration z <- z - p(z)/p'(z) in the commutative algebra k[m], p the
// squarefree part of the minimal polynomial. Never needs eigenvalues.
inline JordanChevalley jordan_chevalley(const Matrix& m) {
    if (!m.is_square()) throw error("jordan_chevalley: non-square matrix");
    if (m.rows() == 0) return {m, m};
    Polynomial mu = min_poly(m);
    Polynomial p = squarefree_part(mu);
    std::size_t bound = static_cast<std::size_t>(mu.degree());  // multiplicity bound
    std::size_t iters = 1;
    while ((1u << (iters - 1)) < bound) ++iters;  // ceil(log2(bound)) + 1

    Polynomial z = divmod(Polynomial::t(), mu).second;
    Polynomial dp = p.derivative();
    for (std::size_t it = 0; it < iters; ++it) {
        Polynomial pz = detail::compose_mod(p, z, mu);
        Polynomial dpz = detail::compose_mod(dp, z, mu);
        Polynomial inv = detail::inverse_mod(dpz, mu);
        z = divmod(z - pz * inv, mu).second;
    }
    Matrix s = z.eval(m);
    if (!p.eval(s).is_zero()) throw error("JC did not converge");
    return {s, m - s};
}

}  // namespace superrep
