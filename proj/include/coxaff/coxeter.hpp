#pragma once

#include <string>
#include <vector>

#include "coxaff/exec.hpp"
#include "coxaff/matrix.hpp"

namespace coxaff {

enum class GroupId { H2, H3, H4 };

std::size_t rank(GroupId g);
std::string group_name(GroupId g);
GroupId parse_group(const std::string& name);  // "h2" / "H3" / ...

using GVec = std::vector<Golden>;

Golden dot(const GVec& u, const GVec& v);
GVec vec_add(const GVec& u, const GVec& v);
GVec vec_sub(const GVec& u, const GVec& v);
GVec vec_neg(const GVec& u);
GVec vec_scale(const Golden& s, const GVec& u);
std::string vec_key(const GVec& u);

// Cartan matrices of Fig-1 type: H2 off-diagonal -tau, H3 chain -1,-tau,
// H4 chain -1,-1,-tau.  Diagonal 2 everywhere, symmetric.
GMatrix cartan_matrix(GroupId g);

// Gram matrix B = A/2 under the unit-root-length convention (a_i, a_i) = 1.
GMatrix gram_matrix(const GMatrix& cartan);

// Matrix of r_{alpha_i} on root-basis coordinates, i in [0, rank).
GMatrix simple_reflection(GroupId g, std::size_t i);

// Closure of a generator set under products; deduplicated exactly and
// returned sorted by canonical serialization (deterministic).
std::vector<GMatrix> closure(const std::vector<GMatrix>& generators,
                             Exec exec = Exec::parallel);

// Orbit of seed vectors under the group generated by `generators`.
std::vector<GVec> vector_orbit(const std::vector<GVec>& seeds,
                               const std::vector<GMatrix>& generators,
                               Exec exec = Exec::parallel);

// The full reflection group in the simple-root basis: |H2|=10, |H3|=120,
// |H4|=14400.
std::vector<GMatrix> generate_group(GroupId g, Exec exec = Exec::parallel);

// Root system as orbit of the simple roots; unit length, closed under
// negation.  |H2|=10, |H3|=30, |H4|=120.
std::vector<GVec> root_system(GroupId g, Exec exec = Exec::parallel);

std::vector<GVec> positive_roots(GroupId g);

// The unique positive root dominating all others coefficientwise.
GVec highest_root(GroupId g);

// Kac-Moody-type extension rules, checked exactly with witnesses:
//   1. diagonal entries 2
//   2. off-diagonal <= 0 and A_ij = 0 <=> A_ji = 0
//   3. Z[tau]-valued entries (strict); qtau_valued is the relaxed reading
//   4. det A = 0
struct KmRuleReport {
    bool diagonal_two = true;
    bool offdiag_ok = true;
    bool zt_valued = true;
    bool qtau_valued = true;
    bool det_zero = true;
    Golden det_value;
    std::vector<std::string> witnesses;

    bool all(bool relax_zt = false) const {
        return diagonal_two && offdiag_ok && (relax_zt ? qtau_valued : zt_valued) && det_zero;
    }
};

KmRuleReport check_km_rules(const GMatrix& m);

}  // namespace coxaff
