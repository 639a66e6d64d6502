#include "coxaff/golden.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace coxaff {

namespace {
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
const double kPhiConj = (1.0 - std::sqrt(5.0)) / 2.0;
}  // namespace

Golden Golden::operator*(const Golden& o) const {
    // (a + b tau)(c + d tau) = (ac + bd) + (ad + bc + bd) tau
    Rational ac = a_ * o.a_;
    Rational bd = b_ * o.b_;
    return Golden(ac + bd, a_ * o.b_ + b_ * o.a_ + bd);
}

Golden Golden::inverse() const {
    Rational n = norm();
    if (n == 0)
        throw std::domain_error("Golden: division by zero");
    Golden c = conjugate();
    return Golden(c.a() / n, c.b() / n);
}

Golden Golden::operator/(const Golden& o) const { return *this * o.inverse(); }

bool Golden::is_zt_integer() const {
    return denominator(a_) == 1 && denominator(b_) == 1;
}

bool Golden::is_unit() const {
    if (!is_zt_integer()) return false;
    Rational n = norm();
    return n == 1 || n == -1;
}

int Golden::sign() const {
    // value = (s + t*sqrt5)/2 with s = 2a + b, t = b
    Rational s = 2 * a_ + b_;
    const Rational& t = b_;
    int ss = s.sign(), ts = t.sign();
    if (ts == 0) return ss;
    if (ss == 0) return ts;
    if (ss == ts) return ss;
    // opposite signs: compare s^2 against 5 t^2 (sqrt5 irrational, no tie)
    return (s * s > 5 * t * t) ? ss : ts;
}

double Golden::embed() const {
    return a_.convert_to<double>() + b_.convert_to<double>() * kPhi;
}

double Golden::embed_conjugate() const {
    return a_.convert_to<double>() + b_.convert_to<double>() * kPhiConj;
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

std::string Golden::str() const {
    if (b_ == 0) return rational_str(a_);
    std::string bs = rational_str(b_ < 0 ? Rational(-b_) : b_) + "t";
    if (a_ == 0) return (b_ < 0 ? "-" : "") + bs;
    return rational_str(a_) + (b_ < 0 ? "-" : "+") + bs;
}

Golden tau_pow(long k) {
    Golden result(1);
    Golden step = k >= 0 ? Golden::tau() : Golden(Rational(-1), Rational(1));
    for (long i = 0, n = k >= 0 ? k : -k; i < n; ++i) result *= step;
    return result;
}

namespace {

// INT[/INT] starting at pos; returns nullopt on syntax error
std::optional<Rational> scan_rational(const std::string& s, size_t& pos) {
    size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = s[pos++] == '-';
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) { pos = start; return std::nullopt; }
    BigInt num(s.substr(digits, pos - digits));
    if (neg) num = -num;
    BigInt den(1);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) { pos = start; return std::nullopt; }
        den = BigInt(s.substr(dstart, pos - dstart));
        if (den == 0) { pos = start; return std::nullopt; }
    }
    return Rational(num, den);
}

bool scan_tau_symbol(const std::string& s, size_t& pos) {
    if (s.compare(pos, 3, "tau") == 0) { pos += 3; return true; }
    if (pos < s.size() && s[pos] == 't') { ++pos; return true; }
    return false;
}

}  // namespace

std::optional<Golden> Golden::try_parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return std::nullopt;

    // sugar: tau, tau^k, -tau^k
    bool neg = false;
    size_t p = 0;
    if (s[0] == '-') { neg = true; p = 1; }
    else if (s[0] == '+') { p = 1; }
    if (s.compare(p, 3, "tau") == 0) {
        size_t q = p + 3;
        Golden v = Golden::tau();
        if (q < s.size() && s[q] == '^') {
            ++q;
            size_t e = q;
            if (e < s.size() && (s[e] == '+' || s[e] == '-')) ++e;
            while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
            if (e == s.size() && e > q) {
                v = tau_pow(std::stol(s.substr(q, e - q)));
                return neg ? -v : v;
            }
            return std::nullopt;
        }
        if (q == s.size()) return neg ? -v : v;
        return std::nullopt;
    }

    // grammar: RAT [ (+|-) RAT 't' ]  |  RAT 't'  |  [+-] 't'
    size_t pos = 0;
    auto first = scan_rational(s, pos);
    if (!first) {
        // bare "t" / "-t"
        size_t q = 0;
        bool n2 = false;
        if (s[q] == '-') { n2 = true; ++q; }
        else if (s[q] == '+') ++q;
        if (q < s.size() && scan_tau_symbol(s, q) && q == s.size())
            return Golden(Rational(0), Rational(n2 ? -1 : 1));
        return std::nullopt;
    }
    if (pos == s.size()) return Golden(*first);
    if (scan_tau_symbol(s, pos)) {
        if (pos != s.size()) return std::nullopt;
        return Golden(Rational(0), *first);  // "3/4t"
    }
    // expect signed second term ending in t
    if (s[pos] != '+' && s[pos] != '-') return std::nullopt;
    auto second = scan_rational(s, pos);
    if (!second) {
        // "2+t" / "2-t"
        bool n2 = s[pos] == '-';
        ++pos;
        if (pos < s.size() && scan_tau_symbol(s, pos) && pos == s.size())
            return Golden(*first, Rational(n2 ? -1 : 1));
        return std::nullopt;
    }
    if (!scan_tau_symbol(s, pos) || pos != s.size()) return std::nullopt;
    return Golden(*first, *second);
}

Golden Golden::parse(const std::string& text) {
    auto v = try_parse(text);
    if (!v) throw std::invalid_argument("cannot parse golden rational: '" + text + "'");
    return *v;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    size_t pos = 0;
    auto r = scan_rational(s, pos);
    if (!r || pos != s.size())
        throw std::invalid_argument("cannot parse rational: '" + text + "'");
    return *r;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rational(0);
    BigInt n = numerator(r), d = denominator(r);
    BigInt sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

std::optional<Golden> golden_sqrt(const Golden& g) {
    if (g.is_zero()) return Golden(0);
    if (g.sign() < 0 || g.sign_conjugate() < 0) return std::nullopt;
    const Rational A = g.a(), B = g.b();
    // (p + q tau)^2 = (p^2 + q^2) + (2pq + q^2) tau
    if (B == 0) {
        if (auto p = rational_sqrt(A)) return Golden(*p);
        // q = -2p branch: p^2 + 4p^2 = A
        if (auto p = rational_sqrt(A / 5)) {
            Golden root(*p, -2 * *p);
            return root.sign() > 0 ? root : -root;
        }
        return std::nullopt;
    }
    // eliminate p: 5 q^4 - (4A + 2B) q^2 + B^2 = 0
    Rational half_tr = (4 * A + 2 * B);
    Rational disc = half_tr * half_tr - 20 * B * B;
    auto sd = rational_sqrt(disc);
    if (!sd) return std::nullopt;
    for (int branch : {+1, -1}) {
        Rational u = (half_tr + branch * *sd) / 10;  // u = q^2
        if (u <= 0) continue;
        auto q = rational_sqrt(u);
        if (!q) continue;
        for (int qs : {+1, -1}) {
            Rational qq = qs * *q;
            Rational p = (B - u) / (2 * qq);
            Golden root(p, qq);
            if (root * root == g) return root.sign() > 0 ? root : -root;
        }
    }
    return std::nullopt;
}

}  // namespace coxaff
