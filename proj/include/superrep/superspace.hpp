#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "superrep/linalg.hpp"

namespace superrep {

enum class Parity : unsigned char { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}
inline Parity parity_of(std::size_t j) { return static_cast<Parity>(j & 1); }
// Koszul sign (-1)^{ab}
inline int koszul(Parity a, Parity b) {
    return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}
inline std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

// Z/2-graded vector space with named basis; canonical basis order is the
// even block followed by the odd block.
struct SuperSpace {
    std::vector<std::string> even;
    std::vector<std::string> odd;

    std::size_t even_dim() const { return even.size(); }
    std::size_t odd_dim() const { return odd.size(); }
    std::size_t dim() const { return even.size() + odd.size(); }
    long sdim() const { return static_cast<long>(even.size()) - static_cast<long>(odd.size()); }

    Parity parity(std::size_t i) const { return i < even.size() ? Parity::Even : Parity::Odd; }
    const std::string& label(std::size_t i) const {
        return i < even.size() ? even[i] : odd[i - even.size()];
    }

    friend bool operator==(const SuperSpace& a, const SuperSpace& b) = default;

    static SuperSpace anonymous(std::size_t e, std::size_t o, const std::string& prefix = "v") {
        SuperSpace v;
        for (std::size_t i = 0; i < e; ++i) v.even.push_back(prefix + std::to_string(i));
        for (std::size_t i = 0; i < o; ++i) v.odd.push_back(prefix + std::to_string(e + i));
        return v;
    }
};

// (even count, odd count, sdim)
inline std::tuple<std::size_t, std::size_t, long> superdim(const SuperSpace& v) {
    return {v.even_dim(), v.odd_dim(), v.sdim()};
}

inline SuperSpace parity_shift(const SuperSpace& v) { return SuperSpace{v.odd, v.even}; }

// Parity-homogeneous linear map between superspaces. Matrix is target-dim x
// source-dim in canonical basis order; entry (r, c) is the coefficient of
// target basis vector r in the image of source basis vector c. Blocks
// forbidden by the parity are exactly zero (enforced at construction).
class HomMap {
public:
    HomMap(SuperSpace source, SuperSpace target, Parity parity, Matrix mat)
        : src_(std::move(source)), dst_(std::move(target)), par_(parity), m_(std::move(mat)) {
        if (m_.rows() != dst_.dim() || m_.cols() != src_.dim())
            throw error("hommap: matrix shape does not match spaces");
        for (std::size_t r = 0; r < m_.rows(); ++r)
            for (std::size_t c = 0; c < m_.cols(); ++c)
                if (dst_.parity(r) != src_.parity(c) + par_ && !m_(r, c).is_zero())
                    throw error("hommap: nonzero entry in parity-forbidden block");
    }

    static HomMap identity(const SuperSpace& v) {
        return HomMap(v, v, Parity::Even, Matrix::identity(v.dim()));
    }
    static HomMap zero(const SuperSpace& src, const SuperSpace& dst, Parity p) {
        return HomMap(src, dst, p, Matrix::zero(dst.dim(), src.dim()));
    }

    const SuperSpace& source() const { return src_; }
    const SuperSpace& target() const { return dst_; }
    Parity parity() const { return par_; }
    const Matrix& mat() const { return m_; }
    bool is_endo() const { return src_ == dst_; }

    friend bool operator==(const HomMap& a, const HomMap& b) = default;

    friend HomMap operator+(const HomMap& a, const HomMap& b) {
        if (a.src_ != b.src_ || a.dst_ != b.dst_ || a.par_ != b.par_)
            throw error("hommap: incompatible sum");
        return HomMap(a.src_, a.dst_, a.par_, a.m_ + b.m_);
    }
    friend HomMap operator-(const HomMap& a, const HomMap& b) {
        if (a.src_ != b.src_ || a.dst_ != b.dst_ || a.par_ != b.par_)
            throw error("hommap: incompatible difference");
        return HomMap(a.src_, a.dst_, a.par_, a.m_ - b.m_);
    }
    friend HomMap operator*(const Rational& c, const HomMap& f) {
        return HomMap(f.src_, f.dst_, f.par_, c * f.m_);
    }

private:
    SuperSpace src_, dst_;
    Parity par_;
    Matrix m_;
};

// f after g; parities add.
inline HomMap compose(const HomMap& f, const HomMap& g) {
    if (g.target() != f.source()) throw error("compose: shape mismatch");
    return HomMap(g.source(), f.target(), f.parity() + g.parity(), f.mat() * g.mat());
}

// supercommutator [f, g] = f g - (-1)^{|f||g|} g f
inline HomMap super_bracket(const HomMap& f, const HomMap& g) {
    HomMap fg = compose(f, g), gf = compose(g, f);
    if (koszul(f.parity(), g.parity()) < 0) return fg + gf;
    return fg - gf;
}

// trace on the even block minus trace on the odd block
inline Rational supertrace(const HomMap& f) {
    if (f.parity() != Parity::Even || !f.is_endo()) throw error("supertrace undefined");
    Rational t;
    const SuperSpace& v = f.source();
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (v.parity(i) == Parity::Even)
            t += f.mat()(i, i);
        else
            t -= f.mat()(i, i);
    }
    return t;
}

// Same map with the even/odd blocks of source and target swapped; an
// involution on the nose. The parity of the map is unchanged.
inline HomMap parity_shift(const HomMap& f) {
    SuperSpace s = parity_shift(f.source()), t = parity_shift(f.target());
    auto perm = [](const SuperSpace& old_sp, std::size_t i) {
        // index in the shifted space of old basis vector i
        return old_sp.parity(i) == Parity::Even ? old_sp.odd_dim() + i
                                                : i - old_sp.even_dim();
    };
    Matrix m(t.dim(), s.dim());
    for (std::size_t r = 0; r < f.mat().rows(); ++r)
        for (std::size_t c = 0; c < f.mat().cols(); ++c)
            if (!f.mat()(r, c).is_zero())
                m(perm(f.target(), r), perm(f.source(), c)) = f.mat()(r, c);
    return HomMap(std::move(s), std::move(t), f.parity(), std::move(m));
}

}  // namespace superrep
