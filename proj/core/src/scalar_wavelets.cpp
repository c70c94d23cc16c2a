#include "cspb/scalar_wavelets.hpp"

#include <cmath>

namespace cspb {

namespace {

// derivatives of V(w) = g~(tau - w)/w in w and t, orders as in RadialJet
struct KernelTable {
    cplx V0, V1, V2, Vt0, Vt1, Vtt0;
};

KernelTable kernel_table(const DrivingSignal& sig, cplx tau, cplx w) {
    const auto d = sig.analytic_derivs(tau - w, 2);
    const cplx inv = 1.0 / w;
    const cplx inv2 = inv * inv;
    const cplx inv3 = inv2 * inv;
    KernelTable k;
    k.V0 = d[0] * inv;
    k.V1 = -d[1] * inv - d[0] * inv2;
    k.V2 = d[2] * inv + 2.0 * d[1] * inv2 + 2.0 * d[0] * inv3;
    k.Vt0 = d[1] * inv;
    k.Vt1 = -d[2] * inv - d[1] * inv2;
    k.Vtt0 = d[2] * inv;
    return k;
}

double series_threshold(const SourceConfig& cfg) {
    const double a = cfg.a_mag();
    return 1e-4 * (a > 0 ? a : std::abs(cfg.b));
}

// Near the focal circle the +/- average loses all precision, so Psi_1 is
// evaluated through its even expansion
//   Psi_1 = -sum_k g~^(2k+1)(tau) u^k / (2k+1)!,  u = rt^2 = (r-ia)·(r-ia),
// which never touches the branch of the square root.
constexpr int kSeriesTerms = 4;  // k = 0..3; next term is O((|rt|/scale)^8)

WaveJet internal_series_jet(const WaveletParams& wp, const Vec3& r, double t) {
    const CVec3 u_vec = CVec3(r) - iu * CVec3(wp.cfg.a);
    const cplx u = dot(u_vec, u_vec);
    const cplx tau(t, -wp.cfg.b);
    const auto d = wp.sig.analytic_derivs(tau, 2 * kSeriesTerms + 1);

    cplx c[kSeriesTerms], ct[kSeriesTerms], ctt[kSeriesTerms], upow[kSeriesTerms];
    double fact = 1.0;  // (2k+1)!
    for (int k = 0; k < kSeriesTerms; ++k) {
        if (k > 0) fact *= (2.0 * k) * (2.0 * k + 1.0);
        c[k] = -d[static_cast<std::size_t>(2 * k + 1)] / fact;
        ct[k] = -d[static_cast<std::size_t>(2 * k + 2)] / fact;
        ctt[k] = -d[static_cast<std::size_t>(2 * k + 3)] / fact;
        upow[k] = (k == 0) ? cplx(1.0) : upow[k - 1] * u;
    }

    cplx W0{}, Wu{}, Wuu{}, Wt{}, Wtu{}, Wtt{};
    for (int k = 0; k < kSeriesTerms; ++k) {
        W0 += c[k] * upow[k];
        Wt += ct[k] * upow[k];
        Wtt += ctt[k] * upow[k];
        if (k >= 1) {
            Wu += static_cast<double>(k) * c[k] * upow[k - 1];
            Wtu += static_cast<double>(k) * ct[k] * upow[k - 1];
        }
        if (k >= 2) Wuu += static_cast<double>(k * (k - 1)) * c[k] * upow[k - 2];
    }

    WaveJet jet;
    jet.val = W0;
    jet.grad = 2.0 * Wu * u_vec;
    jet.hess = Mat3c::outer(u_vec, u_vec) * (4.0 * Wuu) + Mat3c::identity(2.0 * Wu);
    jet.dt = Wt;
    jet.grad_dt = 2.0 * Wtu * u_vec;
    jet.dtt = Wtt;
    return jet;
}

void check_disk_guard(const WaveletParams& wp, const GeomJet& gj) {
    if (gj.p <= wp.cfg.disk_guard()) throw DiskCutError();
}

}  // namespace

cplx wavelet_at_distance(const WaveletParams& wp, cplx rtilde, double t) {
    const cplx tau(t, -wp.cfg.b);
    return wp.sig.analytic(tau - rtilde) / rtilde;
}

cplx wavelet(const WaveletParams& wp, const Vec3& r, double t) {
    const ComplexDistance d = branch_distance(r, wp.cfg, wp.cut);
    const double guard = wp.cfg.focal_guard();
    const double m = std::hypot(d.p, d.q);
    if (m <= guard || m == 0.0) throw SingularLocusError(m);
    // only the standard branch is discontinuous across the disk itself
    if (wp.cut.kind == BranchKind::StandardDisk && d.p <= wp.cfg.disk_guard()) throw DiskCutError();
    return wavelet_at_distance(wp, d.rtilde(), t);
}

WaveletPairJets wavelet_pair_jets(const WaveletParams& wp, const GeomJet& gj, double t) {
    const cplx tau(t, -wp.cfg.b);
    const KernelTable kp = kernel_table(wp.sig, tau, gj.rt);
    const KernelTable km = kernel_table(wp.sig, tau, -gj.rt);
    WaveletPairJets out;
    // k-th rt-derivative of V(-rt) picks up (-1)^k
    out.even.X0 = 0.5 * (kp.V0 + km.V0);
    out.even.X1 = 0.5 * (kp.V1 - km.V1);
    out.even.X2 = 0.5 * (kp.V2 + km.V2);
    out.even.Xt0 = 0.5 * (kp.Vt0 + km.Vt0);
    out.even.Xt1 = 0.5 * (kp.Vt1 - km.Vt1);
    out.even.Xtt0 = 0.5 * (kp.Vtt0 + km.Vtt0);
    out.odd.X0 = 0.5 * (kp.V0 - km.V0);
    out.odd.X1 = 0.5 * (kp.V1 + km.V1);
    out.odd.X2 = 0.5 * (kp.V2 - km.V2);
    out.odd.Xt0 = 0.5 * (kp.Vt0 - km.Vt0);
    out.odd.Xt1 = 0.5 * (kp.Vt1 + km.Vt1);
    out.odd.Xtt0 = 0.5 * (kp.Vtt0 - km.Vtt0);
    return out;
}

WaveJet assemble_spatial(const RadialJet& x, const GeomJet& gj) {
    WaveJet jet;
    jet.val = x.X0;
    jet.grad = x.X1 * gj.grad_rt;
    jet.hess = Mat3c::outer(gj.grad_rt, gj.grad_rt) * x.X2 + gj.hess_rt * x.X1;
    jet.dt = x.Xt0;
    jet.grad_dt = x.Xt1 * gj.grad_rt;
    jet.dtt = x.Xtt0;
    return jet;
}

cplx internal_field(const WaveletParams& wp, const Vec3& r, double t) {
    return internal_field_jet(wp, r, t).val;
}

WaveJet internal_field_jet(const WaveletParams& wp, const Vec3& r, double t) {
    const ComplexDistance d = complex_distance(r, wp.cfg);
    const double thr = series_threshold(wp.cfg);
    if (std::hypot(d.p, d.q) < thr) return internal_series_jet(wp, r, t);
    const GeomJet gj = geometry_jet(r, wp.cfg);
    return assemble_spatial(wavelet_pair_jets(wp, gj, t).even, gj);
}

cplx external_field(const WaveletParams& wp, const Vec3& r, double t) {
    const GeomJet gj = geometry_jet(r, wp.cfg);
    check_disk_guard(wp, gj);
    return wavelet_at_distance(wp, gj.rt, t);
}

WaveJet external_field_jet(const WaveletParams& wp, const Vec3& r, double t) {
    const GeomJet gj = geometry_jet(r, wp.cfg);
    check_disk_guard(wp, gj);
    const cplx tau(t, -wp.cfg.b);
    const KernelTable k = kernel_table(wp.sig, tau, gj.rt);
    RadialJet x{k.V0, k.V1, k.V2, k.Vt0, k.Vt1, k.Vtt0};
    return assemble_spatial(x, gj);
}

cplx jump_field(const WaveletParams& wp, const Vec3& r, double t) {
    const GeomJet gj = geometry_jet(r, wp.cfg);
    check_disk_guard(wp, gj);
    return wavelet_pair_jets(wp, gj, t).odd.X0;
}

cplx jump_field_deriv(const WaveletParams& wp, const Vec3& r, double t) {
    const GeomJet gj = geometry_jet(r, wp.cfg);
    check_disk_guard(wp, gj);
    return wavelet_pair_jets(wp, gj, t).odd.X1;
}

}  // namespace cspb
