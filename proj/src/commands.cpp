#include "coxaff/commands.hpp"

#include <sstream>

namespace coxaff::cmd {

namespace {

std::string orbit_summary(const SolutionOrbit& orb) {
    std::ostringstream os;
    os << "base " << orb.base.str();
    if (orb.has_symmetric) os << ", symmetric anchor " << orb.anchor.str();
    os << ", " << orb.members.size() << " solution(s) in bound";
    if (orb.swap_partner >= 0) os << ", swap -> orbit " << orb.swap_partner;
    return os.str();
}

Family axis_family(GroupId g, const std::string& axis) { return parse_family(g, axis); }

// the anchored orbit a CLI request refers to; series is 1-based
const SolutionOrbit& pick_orbit(const std::vector<SolutionOrbit>& orbits, int series) {
    if (orbits.empty())
        throw std::runtime_error("no solution orbits for this family at the default bound");
    if (series < 1 || static_cast<std::size_t>(series) > orbits.size())
        throw std::invalid_argument("series index out of range (this family has " +
                                    std::to_string(orbits.size()) + " orbit(s))");
    return orbits[static_cast<std::size_t>(series - 1)];
}

}  // namespace

KRange parse_krange(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        long k = std::stol(s);
        return {k, k};
    }
    KRange r{std::stol(s.substr(0, pos)), std::stol(s.substr(pos + 2))};
    if (r.lo > r.hi) throw std::invalid_argument("empty k range '" + s + "'");
    return r;
}

Result roots_cmd(GroupId g, const std::string& format) {
    auto roots = root_system(g);
    Result res;
    res.json = Json{{"group", group_name(g)}, {"count", roots.size()}};
    Json arr = Json::array();
    for (const auto& r : roots) arr.push_back(vec_to_json(r));
    res.json["roots"] = std::move(arr);
    if (format == "csv") {
        res.text = roots_to_csv(roots);
    } else if (format == "json") {
        res.text = res.json.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << group_name(g) << ": " << roots.size() << " roots (root-basis coordinates)\n";
        for (const auto& r : roots) {
            os << "  (";
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? ", " : "") << r[i].str();
            os << ")\n";
        }
        res.text = os.str();
    }
    return res;
}

Result group_cmd(GroupId g, bool count_only) {
    auto elems = generate_group(g);
    Result res;
    res.json = Json{{"group", group_name(g)}, {"order", elems.size()}};
    if (count_only) {
        res.text = std::to_string(elems.size()) + "\n";
        return res;
    }
    Json arr = Json::array();
    for (const auto& m : elems) arr.push_back(matrix_to_json(m));
    res.json["elements"] = std::move(arr);
    res.text = "|" + group_name(g) + "| = " + std::to_string(elems.size()) + "\n";
    return res;
}

Result enumerate_cmd(GroupId g, const std::string& axis, KRange k, const Rational& gamma,
                     std::optional<Rational> delta, int series, long bound) {
    Family fam = axis_family(g, axis);
    Rational dlt = delta ? *delta : constraint_rational_factor(fam) / gamma;
    auto orbits = family_orbits(fam, gamma, dlt, bound);
    const SolutionOrbit& orb = pick_orbit(orbits, series);

    Result res;
    res.json = Json{{"family", family_name(fam)},
                    {"constraint", golden_to_json(constraint_constant(fam))},
                    {"zt_target", golden_to_json(constraint_zt_target(fam))},
                    {"gamma", rational_str(gamma)},
                    {"delta", rational_str(dlt)},
                    {"orbit_count", orbits.size()},
                    {"anchor", quadruplet_to_json(orb.anchor)},
                    {"base", quadruplet_to_json(orb.base)}};
    Json rows = Json::array();
    std::ostringstream os;
    os << family_name(fam) << "  gamma=" << rational_str(gamma)
       << " delta=" << rational_str(dlt) << "  anchor " << orb.anchor.str() << "\n";
    for (long kk = k.lo; kk <= k.hi; ++kk) {
        Quadruplet q = fib_power(orb.anchor, kk);
        ExtendedCartan ext = extend({fam, q.x(), q.y()});
        LengthClass lc = classify_length(q, fam);
        Json row = extended_to_json(ext);
        row["k"] = kk;
        row["quadruplet"] = quadruplet_to_json(q);
        row["length"] = length_class_to_json(lc);
        rows.push_back(std::move(row));
        os << "  k=" << kk << "  " << q.str() << "  x=" << q.x().str()
           << "  y=" << q.y().str() << "  length^2=" << lc.length_sq.str()
           << (ext.is_affine() ? "  det=0" : "  det=" + ext.det.str()) << "\n";
    }
    res.json["members"] = std::move(rows);
    res.text = os.str();
    return res;
}

Result solve_cmd(const std::string& target, long bound) {
    Golden t = Golden::parse(target);
    auto orbits = solve_constraint(t, bound);
    Result res;
    res.json = Json{{"target", golden_to_json(t)}, {"bound", bound},
                    {"orbit_count", orbits.size()}};
    Json arr = Json::array();
    std::ostringstream os;
    os << "xy = " << t.str() << ", bound " << bound << ": " << orbits.size()
       << " tau-orbit(s)\n";
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        arr.push_back(orbit_to_json(orbits[i]));
        os << "  orbit " << i << ": " << orbit_summary(orbits[i]) << "\n";
    }
    res.json["orbits"] = std::move(arr);
    res.text = os.str();
    return res;
}

Result verify_cmd(const Json& doc) {
    GMatrix m = doc.is_array() ? matrix_from_json(doc) : matrix_from_json(doc.at("matrix"));
    KmRuleReport km = check_km_rules(m);
    ConsistencyReport cons = consistency_check(m);
    SymmetrizeResult sym = symmetrize(m);
    Result res;
    res.json = Json{{"km_rules", km_report_to_json(km)},
                    {"consistency", consistency_to_json(cons)},
                    {"symmetrisation", symmetrize_to_json(sym)}};
    std::ostringstream os;
    os << "rule 1 (diagonal 2):      " << (km.diagonal_two ? "pass" : "FAIL") << "\n"
       << "rule 2 (off-diagonal):    " << (km.offdiag_ok ? "pass" : "FAIL") << "\n"
       << "rule 3 (Z[tau] entries):  " << (km.zt_valued ? "pass" : "FAIL (Q[tau] relaxation)")
       << "\n"
       << "rule 4 (det = 0):         "
       << (km.det_zero ? "pass" : "FAIL, det = " + km.det_value.str()) << "\n"
       << "consistency lemma:        " << (cons.pass() ? "pass" : "FAIL") << "\n"
       << "symmetrisable:            " << (sym.ok() ? "yes" : "no") << "\n";
    for (const auto& w : km.witnesses) os << "  " << w << "\n";
    for (const auto& n : cons.notes) os << "  " << n << "\n";
    res.text = os.str();
    return res;
}

Result op_cmd(const std::string& axis, long k, const Rational& gamma, int series,
              const std::string& emit, long bound) {
    Family fam = axis_family(GroupId::H3, axis);
    Rational dlt = constraint_rational_factor(fam) / gamma;
    auto orbits = family_orbits(fam, gamma, dlt, bound);
    const SolutionOrbit& orb = pick_orbit(orbits, series);
    Quadruplet q = fib_power(orb.anchor, k);
    LengthClass lc = classify_length(q, fam);
    if (!lc.classified || !lc.axis_coefficient)
        throw std::runtime_error("family member has no in-field axis realization");
    Axis ax = parse_axis(axis);
    GVec alpha0 = vec_scale(*lc.axis_coefficient, axis_vector(ax));

    Result res;
    res.json = Json{{"family", family_name(fam)},
                    {"k", k},
                    {"quadruplet", quadruplet_to_json(q)},
                    {"length", length_class_to_json(lc)},
                    {"alpha0", vec_to_json(alpha0)},
                    {"alpha0_norm_sq", golden_to_json(dot(alpha0, alpha0))}};
    std::ostringstream os;
    os << family_name(fam) << " k=" << k << "  alpha0 = " << lc.axis_coefficient->str()
       << " * " << axis_name(ax) << "\n";
    if (emit == "orbit") {
        auto twists = twists_about(alpha0);
        Json arr = Json::array();
        std::size_t pure = 0;
        for (const auto& t : twists) {
            Json jt = operator_to_json(t.op);
            jt["proper_rotation"] = t.proper_rotation;
            arr.push_back(std::move(jt));
            if (t.pure_translation) ++pure;
        }
        res.json["twists"] = std::move(arr);
        os << "  " << twists.size() << " stabilizer twists, " << pure
           << " pure translation(s)\n";
    } else {
        AffineOperator raff = affine_reflection(alpha0);
        AffineOperator trans = compose(reflection_op(alpha0), raff);
        res.json["affine_reflection"] = operator_to_json(raff);
        res.json["translation"] = operator_to_json(trans);
        os << "  affine reflection plane at distance |alpha0|/2, translation shift -alpha0\n";
    }
    res.text = os.str();
    return res;
}

Result array_cmd(GroupId g, const std::string& seed_name, const std::string& axis,
                 const std::vector<std::string>& lengths, const std::string& format) {
    if (lengths.empty()) throw std::invalid_argument("array: need at least one --length");
    SeedConfig cfg = seed(seed_name);
    if (cfg.group != g)
        throw std::invalid_argument("seed '" + seed_name + "' belongs to group " +
                                    group_name(cfg.group));
    std::vector<Golden> ls;
    for (const auto& s : lengths) ls.push_back(Golden::parse(s));

    Result res;
    if (lengths.size() > 1) {
        std::vector<ScanRow> rows;
        if (g == GroupId::H2) {
            H2ArrayAxis ax = axis == "bisector" ? H2ArrayAxis::bisector : H2ArrayAxis::highest;
            if (axis != "bisector" && axis != "highest")
                throw std::invalid_argument("H2 axis must be highest or bisector");
            rows = h2_cardinality_scan(ax, ls);
        } else {
            rows = h3_cardinality_scan(parse_axis(axis), ls);
        }
        Json arr = Json::array();
        std::ostringstream os;
        os << "length  |t|^2  cardinality\n";
        for (const auto& r : rows) {
            arr.push_back(Json{{"length", golden_to_json(r.length)},
                               {"t_norm_sq", golden_to_json(r.t_norm_sq)},
                               {"cardinality", r.cardinality}});
            os << r.length.str() << "  " << r.t_norm_sq.str() << "  " << r.cardinality
               << "\n";
        }
        res.json = Json{{"seed", seed_name}, {"axis", axis}, {"scan", std::move(arr)}};
        if (format == "svg")
            throw std::invalid_argument("array: svg output needs a single --length");
        res.text = format == "json" ? res.json.dump(2) + "\n" : os.str();
        return res;
    }

    GVec t;
    if (g == GroupId::H2) {
        if (axis == "bisector") t = h2_translation(H2ArrayAxis::bisector, ls[0]);
        else if (axis == "highest") t = h2_translation(H2ArrayAxis::highest, ls[0]);
        else throw std::invalid_argument("H2 axis must be highest or bisector");
    } else {
        t = h3_translation(parse_axis(axis), ls[0]);
    }
    PointArray arr = generate_array(cfg, t);
    res.json = array_to_json(arr);
    res.json["axis"] = axis;
    if (format == "csv") res.text = array_to_csv(arr);
    else if (format == "svg") res.text = array_to_svg(arr);
    else res.text = res.json.dump(2) + "\n";
    return res;
}

Result lengths_cmd(GroupId g, const std::string& axis, std::optional<Rational> gamma,
                   std::optional<Rational> delta, std::optional<KRange> k, long bound) {
    Family fam = axis_family(g, axis);
    std::vector<LengthPreset> presets;
    if (gamma) {
        LengthPreset p{fam, *gamma, delta ? *delta : constraint_rational_factor(fam) / *gamma,
                       k ? k->lo : -2, k ? k->hi : 2, 0};
        // a named preset fixes the series and default window
        for (const auto& np : named_presets())
            if (np.family == fam && np.gamma == *gamma && (!delta || np.delta == *delta)) {
                p.delta = delta ? *delta : np.delta;
                if (!k) { p.kmin = np.kmin; p.kmax = np.kmax; }
                p.series = np.series;
            }
        presets.push_back(p);
    } else {
        for (const auto& np : named_presets())
            if (np.family == fam) presets.push_back(np);
        if (presets.empty())
            presets.push_back({fam, Rational(1), constraint_rational_factor(fam),
                               k ? k->lo : -2, k ? k->hi : 2, 0});
    }

    Result res;
    res.json = Json{{"family", family_name(fam)}};
    Json tables = Json::array();
    std::ostringstream os;
    for (const auto& p : presets) {
        auto orbits = family_orbits(fam, p.gamma, p.delta, bound);
        const SolutionOrbit& orb = pick_orbit(orbits, p.series + 1);
        os << family_name(fam) << "  gamma=" << rational_str(p.gamma)
           << " delta=" << rational_str(p.delta) << "  k=" << p.kmin << ".." << p.kmax
           << "\n";
        Json rows = Json::array();
        for (long kk = p.kmin; kk <= p.kmax; ++kk) {
            Quadruplet q = fib_power(orb.anchor, kk);
            LengthClass lc = classify_length(q, fam);
            Json row = length_class_to_json(lc);
            row["k"] = kk;
            rows.push_back(std::move(row));
            os << "  k=" << kk << "  length^2 = " << lc.length_sq.str();
            if (lc.classified) {
                os << "   [" << lc.series << ", rho=" << rational_str(lc.rho)
                   << ", tau^" << lc.k << "]";
                if (lc.axis_coefficient)
                    os << "  axis coeff " << lc.axis_coefficient->str();
            }
            os << "\n";
        }
        tables.push_back(Json{{"gamma", rational_str(p.gamma)},
                              {"delta", rational_str(p.delta)},
                              {"kmin", p.kmin},
                              {"kmax", p.kmax},
                              {"rows", std::move(rows)}});
    }
    res.json["tables"] = std::move(tables);
    res.text = os.str();
    return res;
}

}  // namespace coxaff::cmd
