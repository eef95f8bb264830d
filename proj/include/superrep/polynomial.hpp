#pragma once

#include <utility>
#include <vector>

#include "superrep/matrix.hpp"

namespace superrep {

// Univariate polynomial over the rationals; coefficients ascending, trailing
// zeros stripped, zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { strip(); }

    static Polynomial constant(const Rational& r) { return Polynomial({r}); }
    static Polynomial t() { return Polynomial({Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        std::vector<Rational> r(p.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * p.c_[i];
        return Polynomial(std::move(r));
    }

    // quotient, remainder with deg(rem) < deg(divisor)
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw error("polynomial: division by zero polynomial");
        std::vector<Rational> rem = a.c_;
        std::vector<Rational> quo;
        long db = b.degree();
        Rational lead_inv = b.leading().inverse();
        while (static_cast<long>(rem.size()) - 1 >= db) {
            Rational f = rem.back() * lead_inv;
            std::size_t shift = rem.size() - 1 - db;
            if (quo.size() < shift + 1) quo.resize(shift + 1);
            quo[shift] = f;
            for (long i = 0; i <= db; ++i) rem[shift + i] -= f * b.c_[i];
            while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        }
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational((long long)i) * c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial monic() const {
        if (is_zero()) throw error("polynomial: monic of zero polynomial");
        return leading().inverse() * *this;
    }

    Rational eval(const Rational& x) const {
        Rational acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Matrix eval(const Matrix& m) const {
        if (!m.is_square()) throw error("polynomial: evaluation needs a square matrix");
        Matrix acc = Matrix::zero(m.rows(), m.cols());
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * m;
            for (std::size_t d = 0; d < m.rows(); ++d) acc(d, d) += c_[i];
        }
        return acc;
    }

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

}  // namespace superrep
