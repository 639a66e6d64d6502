#include "coxaff/pointarray.hpp"

#include <algorithm>
#include <unordered_set>

namespace coxaff {

SeedConfig seed(const std::string& name) {
    if (name == "pentagon") {
        SeedConfig cfg;
        cfg.group = GroupId::H2;
        cfg.name = name;
        for (std::size_t i = 0; i < 2; ++i)
            cfg.generators.push_back(simple_reflection(GroupId::H2, i));
        H2Plane plane = h2_plane();
        GVec vertex = vec_scale(Golden(2), plane.bisector_w);  // |2w| = sqrt(3-tau)
        cfg.points = vector_orbit({vertex}, cfg.generators);
        return cfg;
    }
    if (name == "icosidodecahedron") {
        SeedConfig cfg;
        cfg.group = GroupId::H3;
        cfg.name = name;
        const H3Basis& b = h3_constants();
        cfg.generators = {reflection_matrix(b.a1), reflection_matrix(b.a2),
                          reflection_matrix(b.a3)};
        cfg.points = vector_orbit({b.a1, b.a2, b.a3}, cfg.generators);
        return cfg;
    }
    throw std::invalid_argument("unknown seed '" + name +
                                "' (expected pentagon or icosidodecahedron)");
}

PointArray generate_array(const SeedConfig& cfg, const GVec& t, Exec exec) {
    if (t.size() != rank(cfg.group))
        throw std::invalid_argument("generate_array: translation dimension mismatch");
    std::vector<GVec> orbit_t = vector_orbit({t}, cfg.generators, exec);

    const std::size_t np = cfg.points.size(), no = orbit_t.size();
    std::vector<std::pair<std::string, GVec>> cand(np * no);
    auto fill = [&](std::size_t idx) {
        GVec p = vec_add(cfg.points[idx / no], orbit_t[idx % no]);
        cand[idx].first = vec_key(p);
        cand[idx].second = std::move(p);
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long long idx = 0; idx < static_cast<long long>(cand.size()); ++idx)
            fill(static_cast<std::size_t>(idx));
    } else {
        for (std::size_t idx = 0; idx < cand.size(); ++idx) fill(idx);
    }

    std::unordered_set<std::string> seen;
    PointArray arr{cfg, t, {}};
    for (const auto& p : cfg.points) {
        if (seen.insert(vec_key(p)).second) arr.points.push_back(p);
    }
    for (auto& c : cand)
        if (seen.insert(std::move(c.first)).second) arr.points.push_back(std::move(c.second));
    std::sort(arr.points.begin(), arr.points.end(),
              [](const GVec& x, const GVec& y) { return vec_key(x) < vec_key(y); });
    return arr;
}

GVec h2_translation(H2ArrayAxis axis, const Golden& length) {
    H2Plane plane = h2_plane();
    if (axis == H2ArrayAxis::bisector)
        return vec_scale(Golden(2) * length, plane.bisector_w);
    // highest-root axis: lengths are in circumradius units; the
    // configuration (pentagon with a vertex along the translation) is
    // realized on the vertex ray, where "length L" is the vector 2 L w
    return vec_scale(Golden(2) * length, plane.bisector_w);
}

GVec h3_translation(Axis axis, const Golden& coeff) {
    return vec_scale(coeff, axis_vector(axis));
}

std::vector<ScanRow> cardinality_scan(const SeedConfig& cfg,
                                      const std::vector<GVec>& translations,
                                      const std::vector<Golden>& lengths, Exec exec) {
    if (translations.size() != lengths.size())
        throw std::invalid_argument("cardinality_scan: size mismatch");
    std::vector<ScanRow> rows;
    for (std::size_t i = 0; i < translations.size(); ++i) {
        PointArray arr = generate_array(cfg, translations[i], exec);
        rows.push_back({lengths[i], dot(translations[i], translations[i]), arr.cardinality()});
    }
    std::sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) {
        return (a.t_norm_sq - b.t_norm_sq).sign() < 0;
    });
    return rows;
}

std::vector<ScanRow> h2_cardinality_scan(H2ArrayAxis axis,
                                         const std::vector<Golden>& lengths, Exec exec) {
    SeedConfig cfg = seed("pentagon");
    std::vector<GVec> ts;
    for (const auto& L : lengths) ts.push_back(h2_translation(axis, L));
    auto rows = cardinality_scan(cfg, ts, lengths, exec);
    if (axis == H2ArrayAxis::highest) {
        // lengths on this axis are quoted in circumradius units
        for (auto& r : rows) r.t_norm_sq = r.length * r.length;
    }
    return rows;
}

std::vector<ScanRow> h3_cardinality_scan(Axis axis, const std::vector<Golden>& coeffs,
                                         Exec exec) {
    SeedConfig cfg = seed("icosidodecahedron");
    std::vector<GVec> ts;
    for (const auto& c : coeffs) ts.push_back(h3_translation(axis, c));
    return cardinality_scan(cfg, ts, coeffs, exec);
}

}  // namespace coxaff
