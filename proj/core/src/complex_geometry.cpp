#include "cspb/complex_geometry.hpp"

#include <cmath>

namespace cspb {

BranchCut BranchCut::upper_hemispheroid(double alpha) {
    if (!(alpha > 0)) throw ValidationError("branch-cut-invalid", "hemispheroid radius must be positive");
    BranchCut c;
    c.kind = BranchKind::UpperHemispheroid;
    c.alpha = alpha;
    return c;
}

BranchCut BranchCut::lower_hemispheroid(double alpha) {
    BranchCut c = upper_hemispheroid(alpha);
    c.kind = BranchKind::LowerHemispheroid;
    return c;
}

BranchCut BranchCut::membrane(std::function<bool(const Vec3&)> inside_volume) {
    if (!inside_volume) throw ValidationError("branch-cut-invalid", "membrane predicate must be callable");
    BranchCut c;
    c.kind = BranchKind::GeneralMembrane;
    c.inside = std::move(inside_volume);
    return c;
}

ComplexDistance complex_distance(const Vec3& r, const SourceConfig& cfg) {
    const double ar = dot(cfg.a, r);
    const cplx w(dot(r, r) - dot(cfg.a, cfg.a), -2.0 * ar);
    cplx s = std::sqrt(w);  // principal branch: Re s >= 0, so p >= 0
    ComplexDistance d;
    d.p = s.real();
    d.q = -s.imag();
    // On the open disk (p = 0) take the limit from the a·r > 0 side: q >= 0.
    if (d.p == 0.0 && d.q < 0.0) d.q = -d.q;
    return d;
}

namespace {

bool inside_swept_volume(const Vec3& r, const SourceConfig& cfg, const BranchCut& cut, double p) {
    switch (cut.kind) {
        case BranchKind::StandardDisk:
            return false;
        case BranchKind::UpperHemispheroid:
        case BranchKind::LowerHemispheroid: {
            const double a = cfg.a_mag();
            if (!(a > 0))
                throw ValidationError("branch-cut-invalid",
                                      "hemispheroid cuts need a nonzero displacement a");
            const double zeta = dot(cfg.a, r) / a;  // component along the a-axis
            if (p >= cut.alpha) return false;
            return cut.kind == BranchKind::UpperHemispheroid ? zeta > 0 : zeta < 0;
        }
        case BranchKind::GeneralMembrane:
            return cut.inside(r);
    }
    return false;
}

}  // namespace

ComplexDistance branch_distance(const Vec3& r, const SourceConfig& cfg, const BranchCut& cut) {
    ComplexDistance d = complex_distance(r, cfg);
    if (inside_swept_volume(r, cfg, cut, d.p)) {
        d.p = -d.p;
        d.q = -d.q;
    }
    d.branch = cut.kind;
    return d;
}

AzimuthFrame azimuth_frame(const SourceConfig& cfg) {
    const double a = cfg.a_mag();
    AzimuthFrame f;
    f.axis = a > 0 ? cfg.a / a : Vec3{0, 0, 1};
    const Vec3 xhat{1, 0, 0}, yhat{0, 1, 0};
    Vec3 cand = xhat - dot(xhat, f.axis) * f.axis;
    if (norm2(cand) < 1e-24) cand = yhat - dot(yhat, f.axis) * f.axis;
    f.e1 = normalized(cand);
    f.e2 = cross(f.axis, f.e1);
    return f;
}

SpheroidalPoint spheroidal_coords(const Vec3& r, const SourceConfig& cfg) {
    const ComplexDistance d = complex_distance(r, cfg);
    const AzimuthFrame f = azimuth_frame(cfg);
    SpheroidalPoint pt;
    pt.p = d.p;
    pt.q = d.q;
    pt.phi = std::atan2(dot(r, f.e2), dot(r, f.e1));
    if (pt.phi < 0) pt.phi += 2.0 * pi;
    return pt;
}

Vec3 cartesian(const SpheroidalPoint& pt, const SourceConfig& cfg) {
    const double a = cfg.a_mag();
    if (!(a > 0)) throw ValidationError("coordinates-invalid", "inverse map needs a > 0");
    if (pt.p < 0) throw ValidationError("coordinates-invalid", "p must be nonnegative");
    if (std::abs(pt.q) > a)
        throw ValidationError("coordinates-invalid", "|q| must not exceed a");
    const AzimuthFrame f = azimuth_frame(cfg);
    const double rho = std::sqrt((pt.p * pt.p + a * a) * (a * a - pt.q * pt.q)) / a;
    const double zeta = pt.p * pt.q / a;
    return rho * std::cos(pt.phi) * f.e1 + rho * std::sin(pt.phi) * f.e2 + zeta * f.axis;
}

NormalField normal_field(const Vec3& r, const SourceConfig& cfg) {
    const ComplexDistance d = complex_distance(r, cfg);
    const double m = d.p * d.p + d.q * d.q;
    const double guard = cfg.focal_guard();
    if (m <= guard * guard) throw SingularLocusError(std::sqrt(m));
    NormalField nf;
    nf.n = (d.p * r + d.q * cfg.a) / m;
    nf.n2 = (d.p * d.p + dot(cfg.a, cfg.a)) / m;
    nf.div_n = 2.0 * d.p / m;
    return nf;
}

RegionInfo classify_region(const Vec3& r, const SourceConfig& cfg, double alpha, double eps) {
    if (!(eps > 0 && eps < alpha))
        throw ValidationError("epsilon-bounds-violated", "require 0 < eps < alpha");
    const ComplexDistance d = complex_distance(r, cfg);
    RegionInfo info;
    info.p = d.p;
    info.dist_focal = std::hypot(d.p, d.q);
    if (d.p < alpha - eps)
        info.region = Region::Interior;
    else if (d.p > alpha + eps)
        info.region = Region::Exterior;
    else
        info.region = Region::Shell;
    return info;
}

GeomJet geometry_jet(const Vec3& r, const SourceConfig& cfg) {
    const ComplexDistance d = complex_distance(r, cfg);
    GeomJet g;
    g.p = d.p;
    g.q = d.q;
    g.rt = d.rtilde();
    g.m = d.p * d.p + d.q * d.q;
    const double guard = cfg.focal_guard();
    if (g.m <= guard * guard) throw SingularLocusError(std::sqrt(g.m));
    g.u_vec = CVec3(r) - iu * CVec3(cfg.a);
    g.u = dot(g.u_vec, g.u_vec);
    g.n = (d.p * r + d.q * cfg.a) / g.m;
    g.grad_q = (d.p * cfg.a - d.q * r) / g.m;
    g.n2 = (d.p * d.p + dot(cfg.a, cfg.a)) / g.m;
    g.div_n = 2.0 * d.p / g.m;
    const cplx inv_rt = 1.0 / g.rt;
    g.grad_rt = g.u_vec * inv_rt;
    g.hess_rt = Mat3c::identity(inv_rt);
    g.hess_rt += Mat3c::outer(g.grad_rt, g.grad_rt) * (-inv_rt);
    return g;
}

}  // namespace cspb
