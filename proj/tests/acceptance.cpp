// Acceptance suite: one line per criterion, exact checks unless a numeric
// tolerance is stated.  Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "coxaff/affine.hpp"
#include "coxaff/coxeter.hpp"
#include "coxaff/geometry.hpp"
#include "coxaff/pointarray.hpp"

using namespace coxaff;

namespace {

int failures = 0;
std::vector<std::string> notes;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int idx, const char* name, bool ok) {
    std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", idx, name);
    for (const auto& n : notes) std::printf("       %s\n", n.c_str());
    notes.clear();
    if (!ok) ++failures;
}

void note(const std::string& s) { notes.push_back(s); }

Golden g(long a, long b = 0) { return Golden(Rational(a), Rational(b)); }
Golden gq(long n, long d) { return Golden(Rational(n, d)); }
const Golden tau = Golden::tau();
const Golden sigma = Golden::sigma();

Quadruplet quad(long a, long b, long c, long d) {
    return Quadruplet{BigInt(a), BigInt(b), BigInt(c), BigInt(d)};
}

bool criterion1_cartan() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = cartan_matrix(GroupId::H2) == GMatrix{{g(2), -tau}, {-tau, g(2)}};
    ok = ok && cartan_matrix(GroupId::H3) ==
                   GMatrix{{g(2), g(-1), g(0)}, {g(-1), g(2), -tau}, {g(0), -tau, g(2)}};
    ok = ok && cartan_matrix(GroupId::H4) == GMatrix{{g(2), g(-1), g(0), g(0)},
                                                     {g(-1), g(2), g(-1), g(0)},
                                                     {g(0), g(-1), g(2), -tau},
                                                     {g(0), g(0), -tau, g(2)}};
    ok = ok && cartan_matrix(GroupId::H2).det() == g(3) - tau;
    ok = ok && cartan_matrix(GroupId::H3).det() == g(4) - g(2) * tau;
    double dt = seconds_since(t0);
    if (dt >= 1e-3) {
        note("determinant time " + std::to_string(dt * 1e3) + " ms (budget 1 ms)");
        ok = false;
    }
    return ok;
}

bool criterion2_fig2() {
    bool ok = true;
    for (Family fam : {Family::h2_highest, Family::h3_2fold, Family::h4_a1}) {
        ExtendedCartan ext = extend({fam, sigma, sigma});
        auto rep = check_km_rules(ext.matrix);
        if (!(rep.all() && ext.det.is_zero())) {
            note(family_name(fam) + ": symmetric extension violates a rule");
            ok = false;
        }
    }
    return ok;
}

bool criterion3_solver() {
    auto t0 = std::chrono::steady_clock::now();
    auto o1 = solve_constraint(g(2) - tau, 12);
    auto o2 = solve_constraint(g(3) - tau, 12);
    auto o3 = solve_constraint(g(5, -3), 12);
    auto o4 = solve_constraint(g(7, -4), 12);
    double dt = seconds_since(t0);

    bool ok = o1.size() == 1 && o1[0].base.same_integers(quad(-2, 1, -1, 0)) &&
              o1[0].has_symmetric && o1[0].anchor.same_integers(quad(1, -1, 1, -1));
    if (!ok) note("xy = 2-t: expected the single orbit of (1,-1;1,-1) with base (-2,1;-1,0)");

    bool ok2 = o2.size() == 2 && o2[0].base.same_integers(quad(-3, 1, -1, 0)) &&
               o2[1].base.same_integers(quad(-1, 0, -3, 1)) && o2[0].swap_partner == 1;
    if (!ok2) note("xy = 3-t: expected two independent orbits (-3,1;-1,0) and (-1,0;-3,1)");

    bool ok3 = false;
    for (const auto& orb : o3)
        for (const auto& m : orb.members)
            if (m.q.same_integers(quad(-2, 1, -2, 1))) ok3 = true;
    if (!ok3) note("xy = 5-3t: symmetric solution (-2,1;-2,1) missing");

    auto contains = [](const std::vector<SolutionOrbit>& orbits, const Quadruplet& q) {
        for (const auto& orb : orbits)
            for (const auto& m : orb.members)
                if (m.q.same_integers(q)) return true;
        return false;
    };
    bool ok4 = o4.size() == 2 && contains(o4, quad(-1, 0, -7, 4)) &&
               contains(o4, quad(-7, 4, -1, 0));
    if (!ok4) note("xy = 7-4t: expected two orbits through (-1,0;-7,4) and (-7,4;-1,0)");
    else
        note("xy = 7-4t: orbits reported by minimal-sum bases (-3,1;-2,1) / (-2,1;-3,1); "
             "the quoted quadruplets are members (see README)");

    if (dt >= 1.0) {
        note("solver time " + std::to_string(dt) + " s (budget 1 s at bound 12)");
        return false;
    }
    return ok && ok2 && ok3 && ok4;
}

bool criterion4_fibonacci() {
    bool ok = fib_step(quad(-2, 1, -1, 0), +1).same_integers(quad(1, -1, 1, -1));
    if (!ok) note("fib_step(-2,1;-1,0) != (1,-1;1,-1)");

    // oracle equivalence: every brute-force solution at bound 12 lies in a
    // reported tau-orbit
    for (const Golden& target : {g(2) - tau, g(3) - tau, g(5, -3), g(7, -4)}) {
        auto orbits = solve_constraint(target, 12);
        std::set<std::string> reported;
        for (const auto& orb : orbits)
            for (const auto& m : orb.members) reported.insert(m.q.str());
        std::size_t oracle_count = 0;
        for (long a = -12; a <= 12; ++a)
            for (long b = -12; b <= 12; ++b) {
                Golden zx = g(a, b);
                if (zx.is_zero() || zx.sign() >= 0) continue;
                for (long c = -12; c <= 12; ++c)
                    for (long d = -12; d <= 12; ++d) {
                        Golden zy = g(c, d);
                        if (zy.is_zero() || zy.sign() >= 0) continue;
                        if (zx * zy != target) continue;
                        ++oracle_count;
                        if (!reported.count(quad(a, b, c, d).str())) {
                            note("missing solution (" + std::to_string(a) + "," +
                                 std::to_string(b) + ";" + std::to_string(c) + "," +
                                 std::to_string(d) + ")");
                            ok = false;
                        }
                    }
            }
        if (reported.size() != oracle_count) {
            note("solver reported " + std::to_string(reported.size()) + " solutions, oracle " +
                 std::to_string(oracle_count));
            ok = false;
        }
    }
    return ok;
}

bool criterion5_lengths() {
    bool ok = true;
    auto length_set = [](const Rational& gamma, const Rational& delta, long klo, long khi,
                         Family fam) {
        Quadruplet anchor{BigInt(1), BigInt(-1), BigInt(1), BigInt(-1), gamma, delta};
        std::set<std::string> lengths;
        for (long k = klo; k <= khi; ++k)
            lengths.insert(classify_length(fib_power(anchor, k), fam).length_sq.str());
        return lengths;
    };
    auto expect_set = [](const Rational& rho, long elo, long ehi) {
        std::set<std::string> s;
        for (long e = elo; e <= ehi; ++e)
            s.insert((Golden(rho * rho) * tau_pow(2 * e)).str());
        return s;
    };
    if (length_set(Rational(1), Rational(1), -2, 2, Family::h3_2fold) !=
        expect_set(Rational(1), -2, 2)) {
        note("2-fold gamma=1 length set wrong");
        ok = false;
    }
    if (length_set(Rational(1, 2), Rational(2), -3, 3, Family::h3_2fold) !=
        expect_set(Rational(1, 2), -3, 3)) {
        note("2-fold gamma=1/2 length set wrong");
        ok = false;
    }
    if (length_set(Rational(3, 2), Rational(2, 3), -1, 1, Family::h3_2fold) !=
        expect_set(Rational(3, 2), -1, 1)) {
        note("2-fold gamma=3/2 length set wrong");
        ok = false;
    }

    // 5-fold second series, gamma = 1: axis coefficients 1/2 {tau^-1 .. tau^2}
    Quadruplet base5{BigInt(-1), BigInt(0), BigInt(-3), BigInt(1), Rational(1),
                     Rational(4, 5)};
    std::set<std::string> coeffs, expect5;
    for (long k = -2; k <= 1; ++k) {
        auto lc = classify_length(fib_power(base5, k), Family::h3_5fold);
        if (!lc.classified || !lc.axis_coefficient) {
            note("5-fold member did not classify");
            return false;
        }
        coeffs.insert(lc.axis_coefficient->str());
    }
    for (long e = -1; e <= 2; ++e)
        expect5.insert((Golden(Rational(1, 2)) * tau_pow(e)).str());
    if (coeffs != expect5) {
        note("5-fold second-series coefficient set wrong");
        ok = false;
    }

    Quadruplet q3{BigInt(1), BigInt(-1), BigInt(1), BigInt(-1), Rational(3, 4), Rational(1)};
    if (classify_length(q3, Family::h3_3fold).length_sq != Golden(Rational(3, 4))) {
        note("3-fold example length^2 != 3/4");
        ok = false;
    }
    return ok;
}

bool criterion6_symmetrisation() {
    bool ok = true;
    struct Case {
        Family fam;
        Golden x;
        Golden d0;  // paper diagonal entry after y = c/x
    };
    Golden x2 = -tau_pow(3);
    Golden x3 = Golden(Rational(1, 2)) * (g(1) - tau);
    Golden x5 = -(g(3) - tau);
    std::vector<Case> cases{{Family::h3_2fold, x2, tau * tau * x2 * x2},
                            {Family::h3_3fold, x3, Golden(Rational(3, 4)) * tau * tau * x3 * x3},
                            {Family::h3_5fold, x5, (tau + g(2)) * Golden(Rational(1, 4)) * x5 * x5}};
    for (const auto& c : cases) {
        Golden y = constraint_constant(c.fam) / c.x;
        ExtendedCartan ext = extend({c.fam, c.x, y});
        auto res = symmetrize(ext.matrix);
        if (!(res.ok() && res.psd && res.det_zero)) {
            note(family_name(c.fam) + ": S = A D not PSD/singular");
            ok = false;
            continue;
        }
        if (res.d[0] != c.d0) {
            note(family_name(c.fam) + ": diagonal entry != paper value");
            ok = false;
        }
        if (res.s.at(0, 0) != g(2) * c.d0) {
            note(family_name(c.fam) + ": corner entry != 2 d0");
            ok = false;
        }
    }
    auto cr = coxeter_corner_root(Family::h3_2fold);
    if (!(cr.in_field && cr.x == sigma)) {
        note("2-fold corner root != sigma");
        ok = false;
    }
    return ok;
}

bool criterion7_groups() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = generate_group(GroupId::H2).size() == 10;
    ok = ok && generate_group(GroupId::H3).size() == 120;
    auto h4 = generate_group(GroupId::H4);
    ok = ok && h4.size() == 14400;
    double dt = seconds_since(t0);
    if (dt >= 60.0) {
        note("H4 closure took " + std::to_string(dt) + " s (budget 60 s)");
        ok = false;
    }
    ok = ok && root_system(GroupId::H2).size() == 10;
    ok = ok && root_system(GroupId::H3).size() == 30;
    ok = ok && root_system(GroupId::H4).size() == 120;
    GMatrix b = gram_matrix(cartan_matrix(GroupId::H4));
    for (const auto& m : h4)
        if (m.transpose() * b * m != b) {
            note("an H4 element does not preserve the Gram form");
            return false;
        }
    for (GroupId gid : {GroupId::H2, GroupId::H3}) {
        GMatrix bg = gram_matrix(cartan_matrix(gid));
        for (const auto& m : generate_group(gid))
            if (m.transpose() * bg * m != bg) {
                note("a " + group_name(gid) + " element does not preserve the Gram form");
                return false;
            }
    }
    return ok;
}

bool criterion8_operators() {
    bool ok = true;
    const H3Basis& basis = h3_constants();
    for (const GVec* axis : {&basis.t2, &basis.t3, &basis.t5}) {
        AffineOperator t = compose(affine_reflection(*axis), reflection_op(*axis));
        if (!(t.is_pure_translation() && t.shift == *axis)) {
            note("r^aff o r is not the translation by alpha");
            ok = false;
        }
    }
    GVec a0 = vec_scale(Golden(Rational(1, 2)), basis.t3);
    auto twists = twists_about(a0);
    std::size_t pure = 0;
    for (const auto& tw : twists) {
        if (tw.op.linear.apply(a0) != a0 || tw.op.shift != vec_neg(a0)) {
            note("twist with wrong axis action or shift");
            ok = false;
        }
        if (tw.pure_translation) ++pure;
    }
    if (!(twists.size() == 6 && pure == 1)) {
        note("3-fold stabilizer: expected one pure translation among six choices");
        ok = false;
    }

    struct Pair {
        const GVec* axis;
        const GVec* root;
        Family fam;
        Golden expect;
    };
    std::vector<Pair> pairs{{&basis.t2, &basis.a2, Family::h3_2fold, (g(2) - tau) * Golden(Rational(1, 4))},
                            {&basis.t3, &basis.a3, Family::h3_3fold, (g(2) - tau) * Golden(Rational(1, 3))},
                            {&basis.t5, &basis.a1, Family::h3_5fold, (g(3) - tau) * Golden(Rational(1, 5))}};
    for (const auto& p : pairs) {
        Golden ip = dot(*p.axis, *p.root);
        Golden cos_sq = ip * ip / (dot(*p.axis, *p.axis) * dot(*p.root, *p.root));
        if (cos_sq != p.expect || cos_sq != constraint_constant(p.fam) * Golden(Rational(1, 4))) {
            note(family_name(p.fam) + ": Cartesian cos^2 != xy/4");
            ok = false;
        }
    }
    return ok;
}

bool criterion9_arrays() {
    bool ok = true;
    auto card = [&](H2ArrayAxis axis, const Golden& L, double* dt = nullptr) {
        auto t0 = std::chrono::steady_clock::now();
        auto n = generate_array(seed("pentagon"), h2_translation(axis, L)).cardinality();
        if (dt) *dt = seconds_since(t0);
        return n;
    };
    struct Cell {
        H2ArrayAxis axis;
        Golden L;
        std::size_t expect;
        const char* label;
    };
    std::vector<Cell> cells{
        {H2ArrayAxis::highest, gq(23, 17), 30, "generic"},
        {H2ArrayAxis::bisector, tau, 25, "sqrt(2+tau)"},
        {H2ArrayAxis::bisector, g(1), 25, "sqrt(3-tau)"},
        {H2ArrayAxis::highest, tau_pow(-1), 25, "-sigma"},
        {H2ArrayAxis::highest, tau, 25, "tau"},
        {H2ArrayAxis::highest, g(1), 20, "1 (symmetric case)"},
    };
    for (const auto& c : cells) {
        double dt = 0;
        std::size_t n = card(c.axis, c.L, &dt);
        if (dt >= 1.0) {
            note(std::string(c.label) + ": array took " + std::to_string(dt) + " s");
            ok = false;
        }
        if (n != c.expect) {
            note(std::string(c.label) + ": cardinality " + std::to_string(n) + ", expected " +
                 std::to_string(c.expect));
            ok = false;
        }
    }
    if (!ok)
        note("the sqrt(3-tau) translation equals the pentagon vertex, the same "
             "configuration the caption pins to 20 via the symmetric case; both seed "
             "conventions were checked against the exact oracle (see README)");
    return ok;
}

bool criterion10_angles() {
    double c1 = ((g(2) - tau) * Golden(Rational(1, 4))).embed();
    double e1 = std::cos(2.0 * M_PI / 5.0);
    bool ok = std::fabs(c1 - e1 * e1) < 1e-12;
    double c2 = ((g(3) - tau) * Golden(Rational(1, 4))).embed();
    double e2 = std::cos(3.0 * M_PI / 10.0);
    ok = ok && std::fabs(c2 - e2 * e2) < 1e-12;
    if (!ok) note("embedded cos^2 does not match the stated angles to 1e-12");
    return ok;
}

bool criterion11_ring() {
    bool ok = tau * sigma == g(-1);
    ok = ok && (g(3) - tau) * (g(2) + tau) == g(5);
    ok = ok && (g(3) - tau) * tau * tau == g(2) + tau;
    ok = ok && (g(2) - tau) * (g(2) - tau) == g(5, -3);
    ok = ok && (g(2) - tau) * (g(3) - tau) == g(7, -4);
    if (!ok) note("a golden-ring identity failed");
    return ok;
}

}  // namespace

int main() {
    report(1, "Cartan fidelity (Fig-1 matrices, exact determinants, < 1 ms)",
           criterion1_cartan());
    report(2, "symmetric affine extensions satisfy all Kac-Moody rules", criterion2_fig2());
    report(3, "solver ground truth at bound 12 (< 1 s)", criterion3_solver());
    report(4, "Fibonacci closure and oracle equivalence", criterion4_fibonacci());
    report(5, "translation length lists (exact)", criterion5_lengths());
    report(6, "symmetrisation S = A D and corner root", criterion6_symmetrisation());
    report(7, "group engine: orders, roots, Gram preservation (< 60 s)", criterion7_groups());
    report(8, "affine operators: translations, twists, cos^2 cross-checks",
           criterion8_operators());
    report(9, "H2 point-array cardinality table (< 1 s per array)", criterion9_arrays());
    report(10, "angle identities at 1e-12", criterion10_angles());
    report(11, "golden ring identities (exact)", criterion11_ring());

    std::printf("%d of 11 criteria passed\n", 11 - failures);
    return failures;
}
