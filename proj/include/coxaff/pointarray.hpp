#pragma once

#include <string>
#include <vector>

#include "coxaff/coxeter.hpp"
#include "coxaff/exec.hpp"
#include "coxaff/geometry.hpp"

namespace coxaff {

// Group-invariant seed configuration.  The pentagon lives in H2 root-basis
// coordinates (orbit of the vertex 2w on the bisector mirror ray,
// circumradius sqrt(3-tau), the in-field normalization); the
// icosidodecahedron is the 30 Cartesian roots of H3.
struct SeedConfig {
    GroupId group;
    std::string name;
    std::vector<GVec> points;
    std::vector<GMatrix> generators;
};

SeedConfig seed(const std::string& name);

struct PointArray {
    SeedConfig seed;
    GVec translation;
    std::vector<GVec> points;  // deduplicated, canonical order
    std::size_t cardinality() const { return points.size(); }
};

// P union { p + g t : p in P, g in the group }, exact dedup.
PointArray generate_array(const SeedConfig& cfg, const GVec& t,
                          Exec exec = Exec::parallel);

enum class H2ArrayAxis { highest, bisector };

// Translation vector for a requested axis/length.  Lengths are exact
// Q[tau] values in the axis's natural unit: on the highest-root axis the
// unit is the pentagon circumradius (t = alpha_H itself at length 1, the
// symmetric-extension case); on the bisector the unit is sqrt(3-tau), so
// length L means the root-basis vector 2 L w.
GVec h2_translation(H2ArrayAxis axis, const Golden& length);
GVec h3_translation(Axis axis, const Golden& coeff);  // t = coeff * T_axis

struct ScanRow {
    Golden length;      // requested length (axis units)
    Golden t_norm_sq;   // |t|^2 of the realized translation vector
    std::size_t cardinality;
};

std::vector<ScanRow> cardinality_scan(const SeedConfig& cfg,
                                      const std::vector<GVec>& translations,
                                      const std::vector<Golden>& lengths,
                                      Exec exec = Exec::parallel);

std::vector<ScanRow> h2_cardinality_scan(H2ArrayAxis axis,
                                         const std::vector<Golden>& lengths,
                                         Exec exec = Exec::parallel);
std::vector<ScanRow> h3_cardinality_scan(Axis axis,
                                         const std::vector<Golden>& coeffs,
                                         Exec exec = Exec::parallel);

}  // namespace coxaff
