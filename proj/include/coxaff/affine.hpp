#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxaff/coxeter.hpp"
#include "coxaff/exec.hpp"

namespace coxaff {

// The nine extension families: one per admissible affine-root direction.
// The affine row/column sits at index 0 of the extended matrix; `slot`
// below names the base simple root(s) it pairs with (1-based in the
// extended indexing).
enum class Family {
    h3_2fold,
    h3_3fold,
    h3_5fold,
    h2_highest,
    h2_bisector,
    h4_a1,
    h4_a2,
    h4_a3,
    h4_a4,
};

GroupId family_group(Family f);
std::string family_name(Family f);
Family parse_family(GroupId g, const std::string& axis);
std::vector<std::size_t> family_slots(Family f);

// Exact constant c with det(extend) = 0  <=>  x y = c.
Golden constraint_constant(Family f);
// c = factor * target with target in Z[tau]; gamma*delta must equal
// `factor` for the determinant constraint to hold on Z[tau] quadruplets.
Rational constraint_rational_factor(Family f);
Golden constraint_zt_target(Family f);

struct ExtensionSpec {
    Family family;
    Golden x, y;  // x at (0, slot), y at (slot, 0)
};

struct ExtendedCartan {
    ExtensionSpec spec;
    GMatrix matrix;      // (rank+1) x (rank+1)
    Golden det;
    bool is_affine() const { return det.is_zero(); }
    GMatrix base() const { return matrix.minor_matrix(0, 0); }
};

ExtendedCartan extend(const ExtensionSpec& spec);

// Lemma check: all nonzero pairs in row/column 0 share the ratio
// A_i0/A_0i; Corollary trigger (any equal pair forces full symmetry);
// angle bound A_ij A_ji <= 4 in the primary embedding.
struct ConsistencyReport {
    bool ratio_ok = true;
    bool corollary_ok = true;
    bool angle_ok = true;
    std::optional<Golden> ratio;
    std::vector<std::string> notes;
    bool pass() const { return ratio_ok && corollary_ok && angle_ok; }
};

ConsistencyReport consistency_check(const GMatrix& ext);

// length^2 = x/y (unit-length base roots), cos^2 = x y / 4.
struct RootGeometry {
    Golden length_sq;
    Golden cos_sq;
};

RootGeometry root_geometry(const Golden& x, const Golden& y);

// Solution x = gamma (a + b tau), y = delta (c + d tau) of a determinant
// constraint; the integer quadruplet evolves under the Fibonacci
// substitution, the rational multipliers are fixed.
struct Quadruplet {
    BigInt a, b, c, d;
    Rational gamma = 1, delta = 1;

    Golden zx() const { return Golden(Rational(a), Rational(b)); }
    Golden zy() const { return Golden(Rational(c), Rational(d)); }
    Golden x() const { return Golden(gamma) * zx(); }
    Golden y() const { return Golden(delta) * zy(); }
    BigInt l1() const { return abs(a) + abs(b) + abs(c) + abs(d); }
    bool symmetric() const { return a == c && b == d; }
    bool same_integers(const Quadruplet& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    std::string str() const;
};

// (a,b;c,d) -> (b, a+b; d-c, c) for direction +1 (multiplies x by tau,
// y by 1/tau); direction -1 applies the inverse (b-a, a; d, c+d).
Quadruplet fib_step(const Quadruplet& q, int direction);

// Member k of the Fibonacci family: x_k = tau^{-k} x_0, y_k = tau^k y_0.
Quadruplet fib_power(const Quadruplet& q, long k);

Quadruplet swap_quadruplet(const Quadruplet& q);

// Representative with minimal |a|+|b|+|c|+|d| along the tau-orbit
// (lexicographic (a,b,c,d) on ties) -- the paper's minimality criterion.
Quadruplet canonical_base(const Quadruplet& q);

// Symmetric member (a,b) == (c,d) of the orbit, when one exists.
std::optional<Quadruplet> symmetric_member(const Quadruplet& q);

struct FamilyMember {
    long k;
    Quadruplet q;
};

struct FibonacciFamily {
    Quadruplet base;
    std::vector<FamilyMember> members;
};

FibonacciFamily make_family(const Quadruplet& base, long kmin, long kmax);

// One tau-orbit of solutions of x y = target.
struct SolutionOrbit {
    Quadruplet base;                  // canonical (minimal-sum) representative
    Quadruplet anchor;                // symmetric member if any, else base
    bool has_symmetric = false;
    std::vector<FamilyMember> members;  // in-bound solutions, k relative to anchor
    int swap_partner = -1;              // index of the swapped orbit (may be self)
};

// All quadruplets with |a|,|b|,|c|,|d| <= bound, (a+b tau)(c+d tau) = target
// and both factors negative in the primary embedding, grouped into
// tau-orbits.  Empty when target is not a Z[tau] integer or not totally
// factorable at the bound.
std::vector<SolutionOrbit> solve_constraint(const Golden& target, long bound,
                                            Exec exec = Exec::parallel);

// Structured translation length: length^2 = rho^2 tau^{2k} m with the
// family's norm factor m; axis_coefficient gives the exact multiple of the
// axis vector (T2 / T3 / T5 / 2w) realizing the affine root when in-field.
struct LengthClass {
    Golden length_sq;
    bool classified = false;
    std::string series;
    Rational rho;
    long k = 0;
    std::optional<Golden> axis_coefficient;
};

LengthClass classify_length(const Quadruplet& q, Family f);

// Right-diagonal symmetrisation S = A * D with D positive in the primary
// embedding, found by propagating the ratios d_i = (A_ij / A_ji) d_j.
struct SymmetrizeResult {
    bool symmetrisable = false;
    bool d_positive = false;
    bool psd = false;
    bool det_zero = false;
    std::vector<Golden> d;
    GMatrix s;
    std::string witness;
    bool ok() const { return symmetrisable && d_positive; }
};

SymmetrizeResult symmetrize(const GMatrix& m);

// The unique negative x with corner entry 2 d_0(x) = 2; in-field only for
// the 2-fold family (x = sigma, recovering the symmetric extension).
struct CornerRoot {
    bool in_field = false;
    Golden x;
    Golden x_sq;
};

CornerRoot coxeter_corner_root(Family f);

// Anchored orbits for a family at given multipliers, in deterministic
// order (the paper's first series sorts first).
std::vector<SolutionOrbit> family_orbits(Family f, const Rational& gamma,
                                         const Rational& delta, long bound = 12);

struct LengthPreset {
    Family family;
    Rational gamma, delta;
    long kmin, kmax;
    int series;  // which orbit (0-based) the preset refers to
};

std::vector<LengthPreset> named_presets();

}  // namespace coxaff
