#include "coxaff/geometry.hpp"

#include <algorithm>

namespace coxaff {

bool AffineOperator::is_identity() const {
    if (!linear.is_identity()) return false;
    for (const auto& c : shift)
        if (!c.is_zero()) return false;
    return true;
}

AffineOperator compose(const AffineOperator& f, const AffineOperator& g) {
    return AffineOperator{f.linear * g.linear, vec_add(f.linear.apply(g.shift), f.shift)};
}

AffineOperator inverse(const AffineOperator& op) {
    GMatrix li = op.linear.inverse();
    return AffineOperator{li, vec_neg(li.apply(op.shift))};
}

AffineOperator translation_op(const GVec& t) {
    return AffineOperator{GMatrix::identity(t.size()), t};
}

const H3Basis& h3_constants() {
    static const H3Basis basis = [] {
        const Golden z(0), one(1), tau = Golden::tau(), sig = Golden::sigma();
        const Golden half(Rational(1, 2));
        H3Basis b;
        b.a1 = {z, one, z};
        b.a2 = {half * sig, -half, -half * tau};  // -1/2(-sigma, 1, tau)
        b.a3 = {z, z, one};
        b.t2 = {one, z, z};
        b.t3 = {tau, z, sig};
        b.t5 = {tau, -one, z};
        return b;
    }();
    return basis;
}

int axis_order(Axis a) {
    switch (a) {
        case Axis::twofold: return 2;
        case Axis::threefold: return 3;
        case Axis::fivefold: return 5;
    }
    throw std::invalid_argument("unknown axis");
}

const GVec& axis_vector(Axis a) {
    const H3Basis& b = h3_constants();
    switch (a) {
        case Axis::twofold: return b.t2;
        case Axis::threefold: return b.t3;
        case Axis::fivefold: return b.t5;
    }
    throw std::invalid_argument("unknown axis");
}

Axis parse_axis(const std::string& name) {
    if (name == "2fold" || name == "2") return Axis::twofold;
    if (name == "3fold" || name == "3") return Axis::threefold;
    if (name == "5fold" || name == "5") return Axis::fivefold;
    throw std::invalid_argument("unknown axis '" + name + "' (expected 2fold, 3fold or 5fold)");
}

std::string axis_name(Axis a) {
    switch (a) {
        case Axis::twofold: return "2fold";
        case Axis::threefold: return "3fold";
        case Axis::fivefold: return "5fold";
    }
    return "?";
}

GMatrix reflection_matrix(const GVec& alpha) {
    Golden n2 = dot(alpha, alpha);
    if (n2.is_zero())
        throw std::invalid_argument("reflection_matrix: zero vector");
    std::size_t n = alpha.size();
    Golden scale = Golden(2) / n2;
    GMatrix m = GMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) -= scale * alpha[i] * alpha[j];
    return m;
}

AffineOperator reflection_op(const GVec& alpha) {
    return AffineOperator{reflection_matrix(alpha), GVec(alpha.size())};
}

AffineOperator affine_reflection(const GVec& alpha0) {
    return AffineOperator{reflection_matrix(alpha0), alpha0};
}

const std::vector<GMatrix>& cartesian_h3_group() {
    static const std::vector<GMatrix> group = [] {
        const H3Basis& b = h3_constants();
        std::vector<GMatrix> gens{reflection_matrix(b.a1), reflection_matrix(b.a2),
                                  reflection_matrix(b.a3)};
        return closure(gens);
    }();
    return group;
}

AxisStabilizer axis_stabilizer(const GVec& axis) {
    AxisStabilizer st;
    GVec neg = vec_neg(axis);
    for (const auto& m : cartesian_h3_group()) {
        GVec img = m.apply(axis);
        if (img == axis)
            st.fixing.push_back(m);
        else if (img == neg)
            st.reversing.push_back(m);
    }
    return st;
}

namespace {

// exact comparison of rotation angles in [0, 2pi) about a common axis
struct AngleKey {
    Golden cos2;  // 2 cos(theta) = trace - 1
    int sin_sign;
};

AngleKey angle_key(const GMatrix& m, const GVec& axis) {
    Golden tr = m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
    AngleKey k{tr - Golden(1), 0};
    // v not parallel to the axis
    for (std::size_t i = 0; i < 3; ++i) {
        GVec v(3);
        v[i] = Golden(1);
        Golden vpar = dot(v, axis);
        GVec perp = vec_sub(vec_scale(dot(axis, axis), v), vec_scale(vpar, axis));
        bool nonzero = false;
        for (const auto& c : perp) nonzero = nonzero || !c.is_zero();
        if (!nonzero) continue;
        GVec mv = m.apply(v);
        // triple product axis . (v x Mv) carries the sign of sin(theta)
        GMatrix t{{axis[0], axis[1], axis[2]}, {v[0], v[1], v[2]}, {mv[0], mv[1], mv[2]}};
        k.sin_sign = t.det().sign();
        return k;
    }
    throw std::logic_error("angle_key: degenerate axis");
}

bool angle_less(const AngleKey& x, const AngleKey& y) {
    // angle in [0, pi] when sin >= 0 (cos descending), (pi, 2pi) after
    bool xh = x.sin_sign >= 0, yh = y.sin_sign >= 0;
    if (xh != yh) return xh;
    if (x.cos2 == y.cos2) return false;
    return xh ? y.cos2 < x.cos2 : x.cos2 < y.cos2;
}

}  // namespace

std::vector<GMatrix> axis_rotations(const GVec& axis, int order) {
    AxisStabilizer st = axis_stabilizer(axis);
    std::vector<GMatrix> rots;
    for (const auto& m : st.fixing)
        if (m.det() == Golden(1)) rots.push_back(m);
    if (static_cast<int>(rots.size()) != order)
        throw std::invalid_argument("axis_rotations: not a symmetry axis of the requested order");
    std::sort(rots.begin(), rots.end(), [&](const GMatrix& a, const GMatrix& b) {
        return angle_less(angle_key(a, axis), angle_key(b, axis));
    });
    return rots;
}

AffineOperator twist_translation(const GVec& alpha0, const GMatrix& g) {
    if (g.apply(alpha0) != alpha0)
        throw std::invalid_argument("twist_translation: g does not fix the axis vector");
    // r_{a0} then r^aff_{a0} is the pure translation v -> v - a0
    AffineOperator trans = compose(reflection_op(alpha0), affine_reflection(alpha0));
    return compose(AffineOperator{g, GVec(alpha0.size())}, trans);
}

std::vector<TwistOp> twists_about(const GVec& alpha0) {
    AxisStabilizer st = axis_stabilizer(alpha0);
    std::vector<TwistOp> out;
    for (const auto& g : st.fixing) {
        AffineOperator op = twist_translation(alpha0, g);
        out.push_back(TwistOp{op, op.is_pure_translation(), g.det() == Golden(1)});
    }
    std::sort(out.begin(), out.end(), [](const TwistOp& a, const TwistOp& b) {
        return a.op.key() < b.op.key();
    });
    return out;
}

H2Plane h2_plane() {
    const Golden tau = Golden::tau();
    H2Plane p;
    p.gram = gram_matrix(cartan_matrix(GroupId::H2));
    p.highest = {tau, tau};
    p.bisector_w = {Golden(1), Golden(Rational(1, 2)) * tau};
    p.w_norm_sq = Golden(3) - tau;
    p.w_norm_sq = p.w_norm_sq * Golden(Rational(1, 4));
    return p;
}

Golden gram_dot(const GMatrix& gram, const GVec& u, const GVec& v) {
    return dot(u, gram.apply(v));
}

}  // namespace coxaff
