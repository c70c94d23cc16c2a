#pragma once

#include "cspb/analytic_signal.hpp"
#include "cspb/complex_geometry.hpp"

namespace cspb {

// Source configuration + driving signal + branch cut. Construction enforces
// the time-like condition a < |b| that keeps g~(tau - rt) off the real axis.
struct WaveletParams {
    SourceConfig cfg;
    DrivingSignal sig;
    BranchCut cut;

    WaveletParams(SourceConfig c, DrivingSignal s, BranchCut b = BranchCut::standard_disk())
        : cfg(c), sig(std::move(s)), cut(std::move(b)) {
        if (!cfg.timelike())
            throw ValidationError("timelike-condition-violated",
                                  "require |a| < |b| for any field evaluation");
    }
};

// Closed-form jet of a complex scalar spacetime field: value, spatial
// gradient and Hessian, first and second time derivatives, mixed grad of dt.
struct WaveJet {
    cplx val{};
    CVec3 grad{};
    Mat3c hess{};
    cplx dt{};
    CVec3 grad_dt{};
    cplx dtt{};

    cplx laplacian() const { return hess.trace(); }
    cplx box() const { return dtt - hess.trace(); }  // wave operator d_tt - lap
};

// Derivatives of a scalar with respect to the complex distance rt and time.
// X1, X2 are first/second complex rt-derivatives; Xt*, Xtt* carry one or two
// time derivatives.
struct RadialJet {
    cplx X0{}, X1{}, X2{};
    cplx Xt0{}, Xt1{};
    cplx Xtt0{};
};

// Psi_1-type (even in rt) and Psi_J-type (odd in rt) radial jets at a point.
struct WaveletPairJets {
    RadialJet even;  // internal field Psi_1 and rt/t derivatives
    RadialJet odd;   // jump field Psi_J; odd.X1 is Psi_J' of the jump formulas
};

// Psi_B = g~(tau - rt_B)/rt_B for the params' branch cut.
cplx wavelet(const WaveletParams& wp, const Vec3& r, double t);

// Psi at an explicitly given complex distance (branch experiments, tests).
cplx wavelet_at_distance(const WaveletParams& wp, cplx rtilde, double t);

// Psi_1 = (Psi(rt) + Psi(-rt))/2: branch-independent, regular everywhere
// including the focal circle and the disk.
cplx internal_field(const WaveletParams& wp, const Vec3& r, double t);
WaveJet internal_field_jet(const WaveletParams& wp, const Vec3& r, double t);

// Psi_2 = Psi on the standard branch. Guarded near the focal circle and the
// disk, where it is singular/discontinuous.
cplx external_field(const WaveletParams& wp, const Vec3& r, double t);
WaveJet external_field_jet(const WaveletParams& wp, const Vec3& r, double t);

// Psi_J = (Psi(rt) - Psi(-rt))/2 and its complex rt-derivative
// Psi_J' = (Psi'(rt) + Psi'(-rt))/2. Guards as for Psi_2.
cplx jump_field(const WaveletParams& wp, const Vec3& r, double t);
cplx jump_field_deriv(const WaveletParams& wp, const Vec3& r, double t);

// Even/odd radial jets at a guarded point (used by the shell source).
WaveletPairJets wavelet_pair_jets(const WaveletParams& wp, const GeomJet& gj, double t);

// Chain a radial jet through the complex-distance geometry.
WaveJet assemble_spatial(const RadialJet& x, const GeomJet& gj);

}  // namespace cspb
