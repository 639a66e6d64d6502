#pragma once

#include <random>

#include "coxaff/golden.hpp"
#include "coxaff/matrix.hpp"

namespace coxaff::testing {

inline Golden tau() { return Golden::tau(); }
inline Golden sigma() { return Golden::sigma(); }

inline Golden g(long a, long b = 0) { return Golden(Rational(a), Rational(b)); }
inline Golden gq(long an, long ad, long bn = 0, long bd = 1) {
    return Golden(Rational(an, ad), Rational(bn, bd));
}

// small random golden rationals, deterministic seed
class Rng {
public:
    explicit Rng(unsigned seed = 0x5eed) : eng_(seed) {}

    Rational rational(long max_num = 8, long max_den = 4) {
        std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
        return Rational(num(eng_), den(eng_));
    }

    Golden golden(long max_num = 8, long max_den = 4) {
        return Golden(rational(max_num, max_den), rational(max_num, max_den));
    }

    Golden nonzero_golden() {
        for (;;) {
            Golden v = golden();
            if (!v.is_zero()) return v;
        }
    }

    GMatrix matrix(std::size_t n) {
        GMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = golden(4, 3);
        return m;
    }

    long integer(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng_);
    }

private:
    std::mt19937_64 eng_;
};

// independent determinant oracle: cofactor (Laplace) expansion
inline Golden det_cofactor(const GMatrix& m) {
    std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    Golden acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Golden term = m.at(0, j) * det_cofactor(m.minor_matrix(0, j));
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace coxaff::testing
