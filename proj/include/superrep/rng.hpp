#pragma once

#include <cstdint>
#include <random>

#include "superrep/superspace.hpp"

namespace superrep {

// Deterministic seeded sampler; mt19937_64 output is standard-mandated, so
// the same seed gives the same stream everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(g_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational small_rational(long long num_bound, long long den_bound = 1) {
        return Rational(uniform(-num_bound, num_bound), uniform(1, den_bound));
    }
    std::vector<std::size_t> shuffled(std::size_t n) {
        std::vector<std::size_t> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = i;
        for (std::size_t i = n; i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, (long long)i - 1))]);
        return v;
    }

private:
    std::mt19937_64 g_;
};

// Random odd nilpotent on an (e|o)-dimensional space: the image of each basis
// vector is a random combination of strictly later opposite-parity vectors in
// a random total order, so the operator is nilpotent by construction.
inline OddNilpotent random_odd_nilpotent(std::size_t e, std::size_t o, Rng& rng,
                                         long long bound = 3) {
    SuperSpace v = SuperSpace::anonymous(e, o);
    std::size_t n = v.dim();
    std::vector<std::size_t> order = rng.shuffled(n);  // order[i] = position of i
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    Matrix m(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
            if (v.parity(r) != v.parity(c) && pos[r] > pos[c]) m(r, c) = rng.uniform(-bound, bound);
    return OddNilpotent(HomMap(v, v, Parity::Odd, std::move(m)));
}

inline AlgebraElement random_odd_element(const AlgebraPtr& alg, Rng& rng, long long bound = 3) {
    AlgebraElement x = zero_element(alg);
    for (std::size_t i = 0; i < alg->dim(); ++i)
        if (alg->parity(i) == Parity::Odd) x.coeffs[i] = rng.uniform(-bound, bound);
    return x;
}

}  // namespace superrep
