#include "coxaff/json_io.hpp"

#include <cmath>
#include <sstream>

namespace coxaff {

Json golden_to_json(const Golden& g) {
    return Json{{"a", rational_str(g.a())}, {"b", rational_str(g.b())}};
}

Golden golden_from_json(const Json& j) {
    if (j.is_string()) return Golden::parse(j.get<std::string>());
    if (j.is_number_integer()) return Golden(Rational(j.get<long long>()));
    if (j.is_object())
        return Golden(parse_rational(j.at("a").get<std::string>()),
                      parse_rational(j.at("b").get<std::string>()));
    throw std::invalid_argument("golden_from_json: expected object, string or integer");
}

Json vec_to_json(const GVec& v) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(golden_to_json(c));
    return a;
}

GVec vec_from_json(const Json& j) {
    GVec v;
    for (const auto& c : j) v.push_back(golden_from_json(c));
    return v;
}

Json matrix_to_json(const GMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(golden_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

GMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("matrix_from_json: expected a nonempty array of rows");
    std::size_t rows = j.size(), cols = j.at(0).size();
    GMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols)
            throw std::invalid_argument("matrix_from_json: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = golden_from_json(j.at(i).at(c));
    }
    return m;
}

Json extended_to_json(const ExtendedCartan& ext) {
    return Json{{"family", family_name(ext.spec.family)},
                {"group", group_name(family_group(ext.spec.family))},
                {"x", golden_to_json(ext.spec.x)},
                {"y", golden_to_json(ext.spec.y)},
                {"det", golden_to_json(ext.det)},
                {"matrix", matrix_to_json(ext.matrix)}};
}

Json operator_to_json(const AffineOperator& op) {
    return Json{{"linear", matrix_to_json(op.linear)},
                {"shift", vec_to_json(op.shift)},
                {"pure_translation", op.is_pure_translation()}};
}

Json km_report_to_json(const KmRuleReport& rep) {
    return Json{{"rule1_diagonal_two", rep.diagonal_two},
                {"rule2_offdiagonal", rep.offdiag_ok},
                {"rule3_ztau_valued", rep.zt_valued},
                {"rule3_qtau_relaxed", rep.qtau_valued},
                {"rule4_det_zero", rep.det_zero},
                {"det", golden_to_json(rep.det_value)},
                {"witnesses", rep.witnesses}};
}

Json consistency_to_json(const ConsistencyReport& rep) {
    Json j{{"ratio_consistent", rep.ratio_ok},
           {"corollary", rep.corollary_ok},
           {"angle_bound", rep.angle_ok},
           {"notes", rep.notes}};
    if (rep.ratio) j["ratio"] = golden_to_json(*rep.ratio);
    return j;
}

Json symmetrize_to_json(const SymmetrizeResult& res) {
    Json j{{"symmetrisable", res.symmetrisable},
           {"d_positive", res.d_positive},
           {"positive_semidefinite", res.psd},
           {"det_zero", res.det_zero}};
    if (res.symmetrisable) {
        Json d = Json::array();
        for (const auto& di : res.d) d.push_back(golden_to_json(di));
        j["d"] = std::move(d);
        j["s"] = matrix_to_json(res.s);
    } else {
        j["witness"] = res.witness;
    }
    return j;
}

Json quadruplet_to_json(const Quadruplet& q) {
    return Json{{"a", q.a.str()}, {"b", q.b.str()}, {"c", q.c.str()}, {"d", q.d.str()},
                {"gamma", rational_str(q.gamma)}, {"delta", rational_str(q.delta)},
                {"x", golden_to_json(q.x())}, {"y", golden_to_json(q.y())}};
}

Json orbit_to_json(const SolutionOrbit& orb) {
    Json members = Json::array();
    for (const auto& m : orb.members) {
        Json jm = quadruplet_to_json(m.q);
        jm["k"] = m.k;
        members.push_back(std::move(jm));
    }
    return Json{{"base", quadruplet_to_json(orb.base)},
                {"anchor", quadruplet_to_json(orb.anchor)},
                {"has_symmetric", orb.has_symmetric},
                {"swap_partner", orb.swap_partner},
                {"members", std::move(members)}};
}

Json length_class_to_json(const LengthClass& lc) {
    Json j{{"length_sq", golden_to_json(lc.length_sq)}, {"classified", lc.classified}};
    if (lc.classified) {
        j["series"] = lc.series;
        j["rho"] = rational_str(lc.rho);
        j["k"] = lc.k;
        if (lc.axis_coefficient) j["axis_coefficient"] = golden_to_json(*lc.axis_coefficient);
    }
    return j;
}

Json array_to_json(const PointArray& arr) {
    Json pts = Json::array();
    for (const auto& p : arr.points) pts.push_back(vec_to_json(p));
    return Json{{"group", group_name(arr.seed.group)},
                {"seed", arr.seed.name},
                {"translation", vec_to_json(arr.translation)},
                {"cardinality", arr.cardinality()},
                {"points", std::move(pts)}};
}

std::string array_to_csv(const PointArray& arr) {
    std::ostringstream os;
    std::size_t dim = rank(arr.seed.group);
    for (std::size_t i = 0; i < dim; ++i) os << (i ? "," : "") << "c" << i + 1;
    os << "\n";
    for (const auto& p : arr.points) {
        for (std::size_t i = 0; i < dim; ++i) os << (i ? "," : "") << p[i].str();
        os << "\n";
    }
    return os.str();
}

std::string roots_to_csv(const std::vector<GVec>& roots) {
    std::ostringstream os;
    if (roots.empty()) return "";
    for (std::size_t i = 0; i < roots.front().size(); ++i)
        os << (i ? "," : "") << "c" << i + 1;
    os << "\n";
    for (const auto& r : roots) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i].str();
        os << "\n";
    }
    return os.str();
}

std::string array_to_svg(const PointArray& arr) {
    if (arr.seed.group != GroupId::H2)
        throw std::invalid_argument("array_to_svg: SVG output is 2D (H2 arrays only)");
    // root basis -> Cartesian embedding: a1 = (1,0), a2 = (-tau/2, sqrt(3-tau)/2)
    const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
    const double a2x = -tau / 2.0, a2y = std::sqrt(3.0 - tau) / 2.0;
    std::vector<std::pair<double, double>> xy;
    double extent = 1.0;
    for (const auto& p : arr.points) {
        double u = p[0].embed(), v = p[1].embed();
        double x = u + v * a2x, y = v * a2y;
        extent = std::max({extent, std::fabs(x), std::fabs(y)});
        xy.emplace_back(x, y);
    }
    std::unordered_map<std::string, bool> in_seed;
    for (const auto& p : arr.seed.points) in_seed[vec_key(p)] = true;

    const double size = 640.0, margin = 24.0;
    const double scale = (size / 2.0 - margin) / extent;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
       << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < arr.points.size(); ++i) {
        double cx = size / 2.0 + xy[i].first * scale;
        double cy = size / 2.0 - xy[i].second * scale;
        bool seed_pt = in_seed.count(vec_key(arr.points[i])) > 0;
        os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\""
           << (seed_pt ? 6.0 : 4.0) << "\" fill=\"" << (seed_pt ? "#c0392b" : "#2c3e50")
           << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace coxaff
