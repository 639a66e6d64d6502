#include "coxaff/affine.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace coxaff {

namespace {
const long kOrbitWalk = 64;  // tau-orbit walk radius for canonicalization
}

GroupId family_group(Family f) {
    switch (f) {
        case Family::h3_2fold:
        case Family::h3_3fold:
        case Family::h3_5fold: return GroupId::H3;
        case Family::h2_highest:
        case Family::h2_bisector: return GroupId::H2;
        default: return GroupId::H4;
    }
}

std::string family_name(Family f) {
    switch (f) {
        case Family::h3_2fold: return "h3-2fold";
        case Family::h3_3fold: return "h3-3fold";
        case Family::h3_5fold: return "h3-5fold";
        case Family::h2_highest: return "h2-highest";
        case Family::h2_bisector: return "h2-bisector";
        case Family::h4_a1: return "h4-a1";
        case Family::h4_a2: return "h4-a2";
        case Family::h4_a3: return "h4-a3";
        case Family::h4_a4: return "h4-a4";
    }
    return "?";
}

Family parse_family(GroupId g, const std::string& axis) {
    std::string s;
    for (char c : axis) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (g == GroupId::H3) {
        if (s == "2fold") return Family::h3_2fold;
        if (s == "3fold") return Family::h3_3fold;
        if (s == "5fold") return Family::h3_5fold;
    } else if (g == GroupId::H2) {
        if (s == "highest") return Family::h2_highest;
        if (s == "bisector") return Family::h2_bisector;
    } else {
        if (s == "a1" || s == "highest") return Family::h4_a1;
        if (s == "a2") return Family::h4_a2;
        if (s == "a3") return Family::h4_a3;
        if (s == "a4") return Family::h4_a4;
    }
    throw std::invalid_argument("no family '" + axis + "' for group " + group_name(g));
}

std::vector<std::size_t> family_slots(Family f) {
    switch (f) {
        case Family::h3_2fold: return {2};
        case Family::h3_3fold: return {3};
        case Family::h3_5fold: return {1};
        case Family::h2_highest: return {1, 2};
        case Family::h2_bisector: return {1};
        case Family::h4_a1: return {1};
        case Family::h4_a2: return {2};
        case Family::h4_a3: return {3};
        case Family::h4_a4: return {4};
    }
    return {};
}

Golden constraint_zt_target(Family f) {
    const Golden tau = Golden::tau();
    switch (f) {
        case Family::h3_2fold:
        case Family::h3_3fold:
        case Family::h2_highest:
        case Family::h4_a1: return Golden(2) - tau;
        case Family::h3_5fold:
        case Family::h2_bisector: return Golden(3) - tau;
        case Family::h4_a2: return Golden(7) - Golden(4) * tau;
        case Family::h4_a3:
        case Family::h4_a4: return Golden(5) - Golden(3) * tau;
    }
    throw std::invalid_argument("unknown family");
}

Rational constraint_rational_factor(Family f) {
    switch (f) {
        case Family::h3_3fold: return Rational(4, 3);
        case Family::h3_5fold: return Rational(4, 5);
        case Family::h4_a2: return Rational(1, 5);
        case Family::h4_a3: return Rational(1, 3);
        case Family::h4_a4: return Rational(1, 2);
        default: return Rational(1);
    }
}

Golden constraint_constant(Family f) {
    return Golden(constraint_rational_factor(f)) * constraint_zt_target(f);
}

ExtendedCartan extend(const ExtensionSpec& spec) {
    GroupId g = family_group(spec.family);
    std::size_t n = rank(g);
    GMatrix base = cartan_matrix(g);
    GMatrix m(n + 1, n + 1);
    m.at(0, 0) = Golden(2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i + 1, j + 1) = base.at(i, j);
    for (std::size_t slot : family_slots(spec.family)) {
        m.at(0, slot) = spec.x;
        m.at(slot, 0) = spec.y;
    }
    return ExtendedCartan{spec, m, m.det()};
}

ConsistencyReport consistency_check(const GMatrix& ext) {
    ConsistencyReport rep;
    if (!ext.is_square() || ext.rows() < 2)
        throw std::invalid_argument("consistency_check: need a square extended matrix");
    std::size_t n = ext.rows();
    bool equal_pair = false;
    for (std::size_t i = 1; i < n; ++i) {
        const Golden& up = ext.at(0, i);
        const Golden& down = ext.at(i, 0);
        if (up.is_zero() != down.is_zero()) {
            rep.ratio_ok = false;
            rep.notes.push_back("zero pairing violated at index " + std::to_string(i));
            continue;
        }
        if (up.is_zero()) continue;
        Golden r = down / up;  // A_i0 / A_0i
        if (!rep.ratio) {
            rep.ratio = r;
        } else if (*rep.ratio != r) {
            rep.ratio_ok = false;
            rep.notes.push_back("ratio at index " + std::to_string(i) + " is " + r.str() +
                                ", expected " + rep.ratio->str());
        }
        if (up == down) equal_pair = true;
    }
    if (equal_pair && !ext.is_symmetric()) {
        rep.corollary_ok = false;
        rep.notes.push_back("an equal pair A_0k = A_k0 exists but the matrix is asymmetric");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Golden prod = ext.at(i, j) * ext.at(j, i);
            if ((prod - Golden(4)).sign() > 0) {
                rep.angle_ok = false;
                rep.notes.push_back("angle bound violated at (" + std::to_string(i) + "," +
                                    std::to_string(j) + "): A_ij A_ji = " + prod.str());
            }
        }
    return rep;
}

RootGeometry root_geometry(const Golden& x, const Golden& y) {
    if (x.is_zero() || y.is_zero())
        throw std::invalid_argument("root_geometry: zero entry");
    return RootGeometry{x / y, x * y * Golden(Rational(1, 4))};
}

std::string Quadruplet::str() const {
    std::ostringstream os;
    os << "(" << a << "," << b << ";" << c << "," << d << ")";
    return os.str();
}

Quadruplet fib_step(const Quadruplet& q, int direction) {
    Quadruplet r = q;
    if (direction >= 0) {
        r.a = q.b;
        r.b = q.a + q.b;
        r.c = q.d - q.c;
        r.d = q.c;
    } else {
        r.a = q.b - q.a;
        r.b = q.a;
        r.c = q.d;
        r.d = q.c + q.d;
    }
    return r;
}

Quadruplet fib_power(const Quadruplet& q, long k) {
    // x_k = tau^{-k} x_0, so positive k applies the inverse substitution
    Quadruplet r = q;
    int dir = k > 0 ? -1 : +1;
    for (long i = 0, n = k >= 0 ? k : -k; i < n; ++i) r = fib_step(r, dir);
    return r;
}

Quadruplet swap_quadruplet(const Quadruplet& q) {
    Quadruplet r = q;
    std::swap(r.a, r.c);
    std::swap(r.b, r.d);
    std::swap(r.gamma, r.delta);
    return r;
}

namespace {

using QuadTuple = std::tuple<BigInt, BigInt, BigInt, BigInt>;

QuadTuple quad_tuple(const Quadruplet& q) { return {q.a, q.b, q.c, q.d}; }

// visits the orbit window q_offset = fib_step^offset(q), offset in [-W, W]
template <typename F>
void walk_orbit(const Quadruplet& q, F&& visit) {
    Quadruplet up = q, down = q;
    visit(0L, q);
    for (long s = 1; s <= kOrbitWalk; ++s) {
        up = fib_step(up, +1);
        down = fib_step(down, -1);
        visit(s, up);
        visit(-s, down);
    }
}

}  // namespace

Quadruplet canonical_base(const Quadruplet& q) {
    Quadruplet best = q;
    BigInt best_l1 = q.l1();
    walk_orbit(q, [&](long, const Quadruplet& m) {
        BigInt l1 = m.l1();
        if (l1 < best_l1 || (l1 == best_l1 && quad_tuple(m) < quad_tuple(best))) {
            best = m;
            best_l1 = l1;
        }
    });
    return best;
}

std::optional<Quadruplet> symmetric_member(const Quadruplet& q) {
    std::optional<Quadruplet> found;
    walk_orbit(q, [&](long, const Quadruplet& m) {
        if (m.symmetric() && !found) found = m;
    });
    return found;
}

FibonacciFamily make_family(const Quadruplet& base, long kmin, long kmax) {
    if (kmin > kmax) throw std::invalid_argument("make_family: empty k range");
    FibonacciFamily fam;
    fam.base = base;
    for (long k = kmin; k <= kmax; ++k) fam.members.push_back({k, fib_power(base, k)});
    return fam;
}

namespace {

struct RawSolution {
    BigInt a, b, c, d;
};

std::vector<RawSolution> brute_scan(const Golden& target, long bound, Exec exec) {
    // factor target = z * w over Z[tau] by scanning z = a + b tau and
    // dividing; both factors must be negative in the primary embedding
    const long width = 2 * bound + 1;
    std::vector<std::vector<RawSolution>> rows(width);
    auto scan_row = [&](long ai) {
        long a = ai - bound;
        auto& out = rows[ai];
        for (long b = -bound; b <= bound; ++b) {
            Golden z{Rational(a), Rational(b)};
            if (z.is_zero() || z.sign() >= 0) continue;
            Golden w = target / z;
            if (!w.is_zt_integer() || w.sign() >= 0) continue;
            BigInt c = numerator(w.a()), d = numerator(w.b());
            if (abs(c) > bound || abs(d) > bound) continue;
            out.push_back(RawSolution{BigInt(a), BigInt(b), c, d});
        }
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long ai = 0; ai < width; ++ai) scan_row(ai);
    } else {
        for (long ai = 0; ai < width; ++ai) scan_row(ai);
    }
    std::vector<RawSolution> flat;
    for (auto& r : rows)
        for (auto& s : r) flat.push_back(std::move(s));
    return flat;
}

}  // namespace

std::vector<SolutionOrbit> solve_constraint(const Golden& target, long bound, Exec exec) {
    if (bound < 1) throw std::invalid_argument("solve_constraint: bound must be >= 1");
    if (!target.is_zt_integer() || target.sign() <= 0) return {};

    auto raw = brute_scan(target, bound, exec);

    std::map<QuadTuple, SolutionOrbit> orbits;
    std::map<QuadTuple, std::map<QuadTuple, long>> offsets;  // base -> member -> fib offset
    for (const auto& s : raw) {
        Quadruplet q{s.a, s.b, s.c, s.d};
        Quadruplet base = canonical_base(q);
        QuadTuple bk = quad_tuple(base);
        auto it = orbits.find(bk);
        if (it == orbits.end()) {
            SolutionOrbit orb;
            orb.base = base;
            auto sym = symmetric_member(base);
            orb.has_symmetric = sym.has_value();
            orb.anchor = sym ? *sym : base;
            it = orbits.emplace(bk, std::move(orb)).first;
            auto& offmap = offsets[bk];
            walk_orbit(base, [&](long off, const Quadruplet& m) {
                offmap.emplace(quad_tuple(m), off);
            });
        }
        // offset o means x = tau^o x_base; family index k has x_k = tau^{-k} x_anchor
        auto& offmap = offsets[bk];
        long o_member = offmap.at(quad_tuple(q));
        long o_anchor = offmap.at(quad_tuple(it->second.anchor));
        it->second.members.push_back({o_anchor - o_member, q});
    }

    std::vector<SolutionOrbit> out;
    for (auto& [key, orb] : orbits) {
        std::sort(orb.members.begin(), orb.members.end(),
                  [](const FamilyMember& x, const FamilyMember& y) { return x.k < y.k; });
        out.push_back(std::move(orb));
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        QuadTuple sk = quad_tuple(canonical_base(swap_quadruplet(out[i].base)));
        for (std::size_t j = 0; j < out.size(); ++j)
            if (quad_tuple(out[j].base) == sk) out[i].swap_partner = static_cast<int>(j);
    }
    return out;
}

namespace {

// length^2 = rho^2 tau^{2k} m for some integer k and positive rational rho
std::optional<std::pair<Rational, long>> decompose(const Golden& length_sq, const Golden& m) {
    Golden e = length_sq / m;
    for (long k = -kOrbitWalk; k <= kOrbitWalk; ++k) {
        Golden r = e * tau_pow(-2 * k);
        if (!r.is_rational() || r.a() <= 0) continue;
        if (auto rho = rational_sqrt(r.a())) return std::make_pair(*rho, k);
    }
    return std::nullopt;
}

}  // namespace

LengthClass classify_length(const Quadruplet& q, Family f) {
    LengthClass lc;
    lc.length_sq = root_geometry(q.x(), q.y()).length_sq;
    const Golden tau = Golden::tau();
    const Golden one(1);
    const Rational half(1, 2);

    struct Candidate {
        Golden m;
        std::string series;
    };
    std::vector<Candidate> candidates;
    switch (f) {
        case Family::h3_2fold:
        case Family::h2_highest:
        case Family::h4_a1:
        case Family::h4_a3:
        case Family::h4_a4:
            candidates.push_back({one, "tau^k"});
            break;
        case Family::h3_3fold:
            candidates.push_back({Golden(Rational(3, 4)), "(sqrt3/2) tau^k"});
            break;
        case Family::h3_5fold:
            candidates.push_back({(Golden(2) + tau) * Golden(Rational(1, 4)), "5fold-second"});
            candidates.push_back(
                {Golden(Rational(5, 4)) * (Golden(3) - tau), "5fold-first"});
            break;
        case Family::h2_bisector:
            candidates.push_back({Golden(3) - tau, "sqrt(3-tau) tau^k"});
            break;
        case Family::h4_a2:
            candidates.push_back({Golden(3) - tau, "a2-lucas"});
            candidates.push_back({(Golden(3) - tau) * Golden(Rational(1, 5)), "a2-lucas/5"});
            break;
    }

    for (const auto& cand : candidates) {
        auto dec = decompose(lc.length_sq, cand.m);
        if (!dec) continue;
        lc.classified = true;
        lc.series = cand.series;
        lc.rho = dec->first;
        lc.k = dec->second;
        // exact axis-vector coefficient where the translation stays in-field
        if (cand.series == "tau^k" && family_group(f) != GroupId::H4) {
            lc.axis_coefficient = Golden(lc.rho) * tau_pow(lc.k);  // multiple of T2 / alpha_H
        } else if (f == Family::h3_3fold) {
            lc.axis_coefficient = Golden(lc.rho * half) * tau_pow(lc.k);  // multiple of T3
        } else if (cand.series == "5fold-second") {
            lc.axis_coefficient = Golden(lc.rho * half) * tau_pow(lc.k);  // multiple of T5
        } else if (cand.series == "5fold-first") {
            // sqrt5 = 2 tau - 1 folds the series into Q[tau] multiples of T5,
            // using (3-tau) tau^2 = 2+tau
            lc.axis_coefficient =
                Golden(lc.rho * half) * (Golden(2) * tau - one) * tau_pow(lc.k - 1);
        } else if (f == Family::h2_bisector) {
            lc.axis_coefficient = Golden(lc.rho) * tau_pow(lc.k);  // multiple of 2w
        }
        return lc;
    }
    return lc;  // unclassified: raw length^2 only
}

SymmetrizeResult symmetrize(const GMatrix& m) {
    SymmetrizeResult res;
    if (!m.is_square()) throw std::invalid_argument("symmetrize: matrix must be square");
    std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m.at(i, j).is_zero() != m.at(j, i).is_zero()) {
                res.witness = "zero pairing violated at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")";
                return res;
            }

    std::vector<Golden> d(n);
    std::vector<bool> visited(n, false);
    // propagate d_i = (A_ij / A_ji) d_j over the diagram graph; start each
    // component at its largest index so base roots get d = 1
    for (std::size_t start = n; start-- > 0;) {
        if (visited[start]) continue;
        d[start] = Golden(1);
        visited[start] = true;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            std::size_t j = stack.back();
            stack.pop_back();
            for (std::size_t i = 0; i < n; ++i) {
                if (i == j || m.at(i, j).is_zero()) continue;
                Golden di = (m.at(i, j) / m.at(j, i)) * d[j];
                if (!visited[i]) {
                    d[i] = di;
                    visited[i] = true;
                    stack.push_back(i);
                } else if (d[i] != di) {
                    res.witness = "inconsistent ratio cycle through (" + std::to_string(i) +
                                  "," + std::to_string(j) + ")";
                    return res;
                }
            }
        }
    }

    res.symmetrisable = true;
    res.d = d;
    res.d_positive = true;
    for (const auto& di : d)
        if (di.sign() <= 0) res.d_positive = false;
    GMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s.at(i, j) = m.at(i, j) * d[j];
    if (!s.is_symmetric())
        throw std::logic_error("symmetrize: propagation produced an asymmetric S");
    res.s = s;
    auto minors = s.leading_minors();
    res.psd = true;
    for (const auto& mi : minors)
        if (mi.sign() < 0) res.psd = false;
    res.det_zero = minors.back().is_zero();
    return res;
}

CornerRoot coxeter_corner_root(Family f) {
    const Golden tau = Golden::tau();
    Golden scale;  // d_0 = scale * x^2
    switch (f) {
        case Family::h3_2fold: scale = tau * tau; break;
        case Family::h3_3fold: scale = Golden(Rational(3, 4)) * tau * tau; break;
        case Family::h3_5fold: scale = (tau + Golden(2)) * Golden(Rational(1, 4)); break;
        default:
            throw std::invalid_argument("coxeter_corner_root: only the H3 families");
    }
    CornerRoot cr;
    cr.x_sq = scale.inverse();
    if (auto root = golden_sqrt(cr.x_sq)) {
        cr.in_field = true;
        cr.x = -*root;  // the unique negative choice
    }
    return cr;
}

std::vector<SolutionOrbit> family_orbits(Family f, const Rational& gamma,
                                         const Rational& delta, long bound) {
    if (gamma <= 0 || delta <= 0)
        throw std::invalid_argument("family_orbits: multipliers must be positive");
    auto orbits = solve_constraint(constraint_zt_target(f), bound);
    for (auto& orb : orbits) {
        auto set = [&](Quadruplet& q) {
            q.gamma = gamma;
            q.delta = delta;
        };
        set(orb.base);
        set(orb.anchor);
        for (auto& m : orb.members) set(m.q);
    }
    return orbits;
}

std::vector<LengthPreset> named_presets() {
    // windows quoted as length exponents e; members use k = -e
    return {
        {Family::h3_2fold, Rational(1), Rational(1), -2, 2, 0},
        {Family::h3_2fold, Rational(1, 2), Rational(2), -3, 3, 0},
        {Family::h3_2fold, Rational(3, 2), Rational(2, 3), -1, 1, 0},
        {Family::h3_3fold, Rational(3, 4), Rational(1), -2, 0, 0},
        {Family::h3_3fold, Rational(1), Rational(3, 4), -2, 0, 0},
        {Family::h3_3fold, Rational(1, 4), Rational(3), -2, 0, 0},
        {Family::h3_5fold, Rational(1), Rational(4, 5), -2, 1, 1},
        {Family::h3_5fold, Rational(2), Rational(2, 5), -1, 0, 1},
    };
}

}  // namespace coxaff
