#pragma once

#include <vector>

#include "coxaff/coxeter.hpp"

namespace coxaff {

// Exact affine map v -> linear*v + shift over Q[tau] coordinates.
struct AffineOperator {
    GMatrix linear;
    GVec shift;

    GVec operator()(const GVec& v) const { return vec_add(linear.apply(v), shift); }
    bool is_pure_translation() const { return linear.is_identity(); }
    bool is_identity() const;
    std::string key() const { return linear.key() + "|" + vec_key(shift); }
};

// f after g: v -> f(g(v))
AffineOperator compose(const AffineOperator& f, const AffineOperator& g);
AffineOperator inverse(const AffineOperator& op);
AffineOperator translation_op(const GVec& t);

// Cartesian H3 data: simple roots alpha_1=(0,1,0), alpha_2=-1/2(-sigma,1,tau),
// alpha_3=(0,0,1) and the symmetry axes T2=(1,0,0), T3=(tau,0,sigma),
// T5=(tau,-1,0) in the opening cone (nonpositive products with all simple
// roots).
struct H3Basis {
    GVec a1, a2, a3;
    GVec t2, t3, t5;
};

const H3Basis& h3_constants();

enum class Axis { twofold, threefold, fivefold };
int axis_order(Axis a);
const GVec& axis_vector(Axis a);
Axis parse_axis(const std::string& name);  // "2fold" | "3fold" | "5fold"
std::string axis_name(Axis a);

// Reflection in the plane through the origin perpendicular to alpha.
GMatrix reflection_matrix(const GVec& alpha);
AffineOperator reflection_op(const GVec& alpha);

// r^aff_alpha v = alpha + v - 2(alpha,v)/(alpha,alpha) alpha; fixes the
// plane (x, alpha) = |alpha|^2/2 at distance |alpha|/2 from the origin.
AffineOperator affine_reflection(const GVec& alpha0);

// The 120 Cartesian H3 matrices (closure of the three simple reflections).
const std::vector<GMatrix>& cartesian_h3_group();

struct AxisStabilizer {
    std::vector<GMatrix> fixing;     // M t = t
    std::vector<GMatrix> reversing;  // M t = -t
    std::size_t size() const { return fixing.size() + reversing.size(); }
};

AxisStabilizer axis_stabilizer(const GVec& axis);

// Pure rotations of H3 fixing the axis vector, sorted by rotation angle
// (exact trace/orientation comparison); sizes 2 / 3 / 5.
std::vector<GMatrix> axis_rotations(const GVec& axis, int order);

// g composed with the parallel-plane translation of Fig-2 type:
// r_{a0} r^aff_{a0} = (v -> v - a0), so the result is (g, -a0).
// Requires g * a0 == a0 (vector-fixing stabilizer element).
AffineOperator twist_translation(const GVec& alpha0, const GMatrix& g);

struct TwistOp {
    AffineOperator op;
    bool pure_translation;
    bool proper_rotation;  // det(linear) = +1
};

// All twist operators from the vector-fixing stabilizer of alpha0's axis
// (2n choices; exactly one is the pure translation v - alpha0).
std::vector<TwistOp> twists_about(const GVec& alpha0);

// H2 handled in root-basis coordinates: highest root tau(a1+a2) of length 1;
// bisector direction w = a1 + (tau/2) a2 with (w, a2) = 0, |w|^2 = (3-tau)/4,
// so the translation of length sqrt(3-tau) tau^k is the vector 2 tau^k w.
struct H2Plane {
    GMatrix gram;
    GVec highest;
    GVec bisector_w;
    Golden w_norm_sq;
};

H2Plane h2_plane();

// Gram inner product for root-basis vectors
Golden gram_dot(const GMatrix& gram, const GVec& u, const GVec& v);

}  // namespace coxaff
