#include "coxaff/coxeter.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coxaff {

std::size_t rank(GroupId g) {
    switch (g) {
        case GroupId::H2: return 2;
        case GroupId::H3: return 3;
        case GroupId::H4: return 4;
    }
    throw std::invalid_argument("unknown group");
}

std::string group_name(GroupId g) {
    switch (g) {
        case GroupId::H2: return "h2";
        case GroupId::H3: return "h3";
        case GroupId::H4: return "h4";
    }
    return "?";
}

GroupId parse_group(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "h2") return GroupId::H2;
    if (s == "h3") return GroupId::H3;
    if (s == "h4") return GroupId::H4;
    throw std::invalid_argument("unknown group '" + name + "' (expected h2, h3 or h4)");
}

Golden dot(const GVec& u, const GVec& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dot: size mismatch");
    Golden s;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

GVec vec_add(const GVec& u, const GVec& v) {
    GVec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
    return r;
}

GVec vec_sub(const GVec& u, const GVec& v) {
    GVec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
    return r;
}

GVec vec_neg(const GVec& u) {
    GVec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = -u[i];
    return r;
}

GVec vec_scale(const Golden& s, const GVec& u) {
    GVec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = s * u[i];
    return r;
}

std::string vec_key(const GVec& u) {
    std::string k;
    for (const auto& c : u) {
        k += c.str();
        k += ';';
    }
    return k;
}

GMatrix cartan_matrix(GroupId g) {
    const Golden two(2), mone(-1), zero(0);
    const Golden mtau = -Golden::tau();
    switch (g) {
        case GroupId::H2:
            return GMatrix{{two, mtau}, {mtau, two}};
        case GroupId::H3:
            return GMatrix{{two, mone, zero}, {mone, two, mtau}, {zero, mtau, two}};
        case GroupId::H4:
            return GMatrix{{two, mone, zero, zero},
                           {mone, two, mone, zero},
                           {zero, mone, two, mtau},
                           {zero, zero, mtau, two}};
    }
    throw std::invalid_argument("unknown group");
}

GMatrix gram_matrix(const GMatrix& cartan) {
    return cartan.scaled(Golden(Rational(1, 2)));
}

GMatrix simple_reflection(GroupId g, std::size_t i) {
    std::size_t n = rank(g);
    if (i >= n) throw std::out_of_range("simple_reflection: index out of range");
    GMatrix a = cartan_matrix(g);
    GMatrix m = GMatrix::identity(n);
    // r_i(alpha_j) = alpha_j - A_ij alpha_i, so row i of M is e_i - A.row(i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) -= a.at(i, j);
    return m;
}

namespace {

// Level-synchronous BFS closure.  The parallel path computes each level's
// candidate products concurrently, then merges in slot order so the result
// set (and the sorted output) is independent of thread count.
template <typename Elem, typename Prod, typename Key>
std::vector<Elem> bfs_closure(std::vector<Elem> frontier,
                              std::size_t n_gen, Prod prod, Key keyfn, Exec exec) {
    std::unordered_map<std::string, std::size_t> seen;
    std::vector<Elem> out;
    for (const auto& e : frontier) {
        auto k = keyfn(e);
        if (seen.emplace(std::move(k), out.size()).second) out.push_back(e);
    }
    frontier = out;
    while (!frontier.empty()) {
        const std::size_t m = frontier.size() * n_gen;
        std::vector<std::pair<std::string, Elem>> cand(m);
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
            for (long long idx = 0; idx < static_cast<long long>(m); ++idx) {
                const auto& f = frontier[static_cast<std::size_t>(idx) / n_gen];
                Elem p = prod(static_cast<std::size_t>(idx) % n_gen, f);
                cand[idx].first = keyfn(p);
                cand[idx].second = std::move(p);
            }
        } else {
            for (std::size_t idx = 0; idx < m; ++idx) {
                const auto& f = frontier[idx / n_gen];
                Elem p = prod(idx % n_gen, f);
                cand[idx].first = keyfn(p);
                cand[idx].second = std::move(p);
            }
        }
        std::vector<Elem> next;
        for (auto& c : cand) {
            if (seen.emplace(std::move(c.first), out.size()).second) {
                out.push_back(c.second);
                next.push_back(std::move(c.second));
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [&](const Elem& x, const Elem& y) {
        return keyfn(x) < keyfn(y);
    });
    return out;
}

}  // namespace

std::vector<GMatrix> closure(const std::vector<GMatrix>& generators, Exec exec) {
    if (generators.empty()) return {};
    std::size_t n = generators.front().rows();
    std::vector<GMatrix> frontier{GMatrix::identity(n)};
    return bfs_closure(
        frontier, generators.size(),
        [&](std::size_t gi, const GMatrix& f) { return generators[gi] * f; },
        [](const GMatrix& m) { return m.key(); }, exec);
}

std::vector<GVec> vector_orbit(const std::vector<GVec>& seeds,
                               const std::vector<GMatrix>& generators, Exec exec) {
    if (seeds.empty()) return {};
    return bfs_closure(
        seeds, generators.size(),
        [&](std::size_t gi, const GVec& v) { return generators[gi].apply(v); },
        [](const GVec& v) { return vec_key(v); }, exec);
}

std::vector<GMatrix> generate_group(GroupId g, Exec exec) {
    std::vector<GMatrix> gens;
    for (std::size_t i = 0; i < rank(g); ++i) gens.push_back(simple_reflection(g, i));
    return closure(gens, exec);
}

std::vector<GVec> root_system(GroupId g, Exec exec) {
    std::size_t n = rank(g);
    std::vector<GVec> seeds;
    for (std::size_t i = 0; i < n; ++i) {
        GVec e(n);
        e[i] = Golden(1);
        seeds.push_back(std::move(e));
    }
    std::vector<GMatrix> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(simple_reflection(g, i));
    return vector_orbit(seeds, gens, exec);
}

std::vector<GVec> positive_roots(GroupId g) {
    std::vector<GVec> out;
    for (const auto& r : root_system(g)) {
        bool pos = true;
        for (const auto& c : r)
            if (c.sign() < 0) { pos = false; break; }
        if (pos) out.push_back(r);
    }
    return out;
}

GVec highest_root(GroupId g) {
    auto pos = positive_roots(g);
    for (const auto& cand : pos) {
        bool dominates = true;
        for (const auto& other : pos) {
            for (std::size_t i = 0; i < cand.size() && dominates; ++i)
                if ((cand[i] - other[i]).sign() < 0) dominates = false;
            if (!dominates) break;
        }
        if (dominates) return cand;
    }
    throw std::logic_error("highest_root: no dominating positive root found");
}

KmRuleReport check_km_rules(const GMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("check_km_rules: matrix must be square");
    KmRuleReport rep;
    std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (m.at(i, i) != Golden(2)) {
            rep.diagonal_two = false;
            std::ostringstream os;
            os << "rule 1: A[" << i << "][" << i << "] = " << m.at(i, i).str() << " != 2";
            rep.witnesses.push_back(os.str());
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const Golden& v = m.at(i, j);
            if (v.sign() > 0) {
                rep.offdiag_ok = false;
                rep.witnesses.push_back("rule 2: A[" + std::to_string(i) + "][" +
                                        std::to_string(j) + "] = " + v.str() + " > 0");
            }
            if (i < j && (v.is_zero() != m.at(j, i).is_zero())) {
                rep.offdiag_ok = false;
                rep.witnesses.push_back("rule 2: zero pairing violated at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
            }
            if (!v.is_zt_integer()) {
                rep.zt_valued = false;
                rep.witnesses.push_back("rule 3: A[" + std::to_string(i) + "][" +
                                        std::to_string(j) + "] = " + v.str() +
                                        " not in Z[tau]");
            }
        }
    rep.det_value = m.det();
    if (!rep.det_value.is_zero()) {
        rep.det_zero = false;
        rep.witnesses.push_back("rule 4: det = " + rep.det_value.str() + " != 0");
    }
    return rep;
}

}  // namespace coxaff
