#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace coxaff {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * Element of the field Q[tau], tau = (1+sqrt5)/2, tau^2 = tau + 1.
 *
 * Stored as a + b*tau with exact rational components, always canonical
 * (cpp_rational keeps fractions reduced with positive denominator).
 * Equality is componentwise; ordering and positivity use the exact sign
 * of the primary embedding tau -> (1+sqrt5)/2, never floating point.
 */
class Golden {
public:
    Golden() = default;
    Golden(long v) : a_(v) {}
    Golden(Rational a) : a_(std::move(a)) {}
    Golden(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Golden tau() { return Golden(Rational(0), Rational(1)); }
    static Golden sigma() { return Golden(Rational(1), Rational(-1)); }  // 1 - tau

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    // true iff both components are integers (a Z[tau] element)
    bool is_zt_integer() const;
    // Z[tau] element with norm +-1, i.e. +-tau^k
    bool is_unit() const;

    Golden operator-() const { return Golden(-a_, -b_); }
    Golden operator+(const Golden& o) const { return Golden(a_ + o.a_, b_ + o.b_); }
    Golden operator-(const Golden& o) const { return Golden(a_ - o.a_, b_ - o.b_); }
    Golden operator*(const Golden& o) const;
    Golden operator/(const Golden& o) const;
    Golden& operator+=(const Golden& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Golden& operator-=(const Golden& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Golden& operator*=(const Golden& o) { *this = *this * o; return *this; }

    bool operator==(const Golden& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Golden& o) const { return !(*this == o); }
    // total order by primary embedding (exact)
    bool operator<(const Golden& o) const { return (*this - o).sign() < 0; }

    // Galois conjugate tau -> 1 - tau; an involution and ring homomorphism.
    Golden conjugate() const { return Golden(a_ + b_, -b_); }
    // field norm x * conjugate(x); rational and multiplicative
    Rational norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }
    Golden inverse() const;

    // Exact sign in the primary embedding: -1, 0, +1.
    int sign() const;
    // sign under the conjugate embedding tau -> (1-sqrt5)/2
    int sign_conjugate() const { return conjugate().sign(); }
    bool is_totally_positive() const { return sign() > 0 && sign_conjugate() > 0; }

    // Numeric embeddings; for ordering, positivity and rendering only.
    double embed() const;
    double embed_conjugate() const;

    // Canonical text form: "2-1t", "3/4+1/2t", "5", "1t".  parse() accepts
    // this grammar plus the sugar "tau", "tau^k", "t".
    std::string str() const;
    static Golden parse(const std::string& text);
    static std::optional<Golden> try_parse(const std::string& text);

private:
    Rational a_;  // rational part
    Rational b_;  // coefficient of tau
};

// tau^k for any signed k; tau^{-1} = tau - 1
Golden tau_pow(long k);

// rational sqrt if r is a square, else nullopt
std::optional<Rational> rational_sqrt(const Rational& r);
// sqrt in Q[tau] (primary-positive branch) if one exists
std::optional<Golden> golden_sqrt(const Golden& g);

std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& text);

inline Golden operator*(long s, const Golden& g) { return Golden(Rational(s)) * g; }

}  // namespace coxaff
