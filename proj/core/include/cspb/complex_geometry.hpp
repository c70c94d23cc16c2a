#pragma once

#include <functional>

#include "cspb/algebra.hpp"
#include "cspb/errors.hpp"

namespace cspb {

// Imaginary source displacement a and imaginary time b (units with c = 1).
// The time-like condition |a| < |b| is enforced where fields are built, not
// here: the geometry is well defined for any a.
struct SourceConfig {
    Vec3 a{0, 0, 0};
    double b = 0;

    double a_mag() const { return norm(a); }
    // guard radius around the focal circle; zero when a vanishes
    double focal_guard() const { return 1e-9 * a_mag(); }
    // guard distance from the branch-cut disk
    double disk_guard() const { return 1e-9 * a_mag(); }
    bool timelike() const { return a_mag() < std::abs(b); }
};

enum class BranchKind { StandardDisk, UpperHemispheroid, LowerHemispheroid, GeneralMembrane };

// Branch cut spanning the focal circle. The complex distance reverses sign
// inside the volume swept when deforming the disk to the cut membrane.
struct BranchCut {
    BranchKind kind = BranchKind::StandardDisk;
    double alpha = 0;                                // hemispheroid radius
    std::function<bool(const Vec3&)> inside;         // membrane swept-volume predicate

    static BranchCut standard_disk() { return {}; }
    static BranchCut upper_hemispheroid(double alpha);
    static BranchCut lower_hemispheroid(double alpha);
    static BranchCut membrane(std::function<bool(const Vec3&)> inside_volume);
};

// rt = p - i q. |p| <= r, |q| <= a, and p >= 0 on the standard branch.
struct ComplexDistance {
    double p = 0;
    double q = 0;
    BranchKind branch = BranchKind::StandardDisk;

    cplx rtilde() const { return {p, -q}; }
};

struct SpheroidalPoint {
    double p = 0;   // >= 0
    double q = 0;   // in [-a, a]
    double phi = 0; // azimuth about the a-axis, [0, 2pi)
};

enum class Region { Interior, Shell, Exterior };

struct RegionInfo {
    Region region;
    double p;          // radial spheroidal coordinate of the point
    double dist_focal; // |rt|, distance proxy to the focal circle
};

// Gradient field n = grad p, its squared magnitude and divergence. n is the
// paper's unnormalized spheroid normal.
struct NormalField {
    Vec3 n;
    double n2;
    double div_n;
};

// Standard branch of sqrt((r - ia)·(r - ia)); on the open disk the value is
// the limit from the a·r > 0 side, so q >= 0 there.
ComplexDistance complex_distance(const Vec3& r, const SourceConfig& cfg);

ComplexDistance branch_distance(const Vec3& r, const SourceConfig& cfg, const BranchCut& cut);

SpheroidalPoint spheroidal_coords(const Vec3& r, const SourceConfig& cfg);

// Inverse of spheroidal_coords; requires a > 0 and p >= 0, |q| <= a.
Vec3 cartesian(const SpheroidalPoint& pt, const SourceConfig& cfg);

NormalField normal_field(const Vec3& r, const SourceConfig& cfg);

RegionInfo classify_region(const Vec3& r, const SourceConfig& cfg, double alpha, double eps);

// Orthonormal frame {e1, e2, axis} with axis = a/|a| (z when a = 0); fixes the
// azimuth origin deterministically. e1 reduces to x for a along z.
struct AzimuthFrame {
    Vec3 e1, e2, axis;
};
AzimuthFrame azimuth_frame(const SourceConfig& cfg);

// Everything the closed-form field evaluators need at one point, chained
// through the complex distance. Throws SingularLocusError inside the focal
// guard radius.
struct GeomJet {
    double p, q;
    cplx rt;        // p - iq
    CVec3 u_vec;    // r - ia
    cplx u;         // rt^2, computed as u_vec·u_vec (no branch)
    double m;       // p^2 + q^2
    Vec3 n;         // grad p
    Vec3 grad_q;
    double n2;
    double div_n;   // 2p / m
    CVec3 grad_rt;  // u_vec / rt
    Mat3c hess_rt;  // (I - grad_rt⊗grad_rt)/rt
};
GeomJet geometry_jet(const Vec3& r, const SourceConfig& cfg);

}  // namespace cspb
