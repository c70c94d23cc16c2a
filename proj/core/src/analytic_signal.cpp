#include "cspb/analytic_signal.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace cspb {

namespace {
constexpr int kMaxOrder = 16;

double factorial(int n) {
    double f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}
}  // namespace

DrivingSignal DrivingSignal::cauchy(int order) {
    if (order < 0) throw ValidationError("signal-spec-invalid", "cauchy order must be nonnegative");
    DrivingSignal s;
    s.kind_ = Kind::Cauchy;
    s.order_ = order;
    return s;  // support of the delta-derivative family is {0}
}

DrivingSignal DrivingSignal::tabulated(std::vector<std::pair<double, double>> samples) {
    if (samples.size() < 2)
        throw ValidationError("signal-spec-invalid", "tabulated signal needs at least two samples");
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (!(samples[i].first > samples[i - 1].first))
            throw ValidationError("signal-spec-invalid", "sample times must be strictly increasing");
    DrivingSignal s;
    s.kind_ = Kind::Tabulated;
    s.pts_ = std::move(samples);
    s.support_min_ = s.pts_.front().first;
    s.support_max_ = s.pts_.back().first;
    return s;
}

DrivingSignal DrivingSignal::tabulated_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("signal-file-error", "cannot open " + path);
    std::vector<std::pair<double, double>> samples;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double t, g;
        if (ls >> t >> g) samples.emplace_back(t, g);
    }
    if (samples.size() < 2)
        throw ValidationError("signal-file-error", path + ": need at least two (t, g) rows");
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (!(samples[i].first > samples[i - 1].first))
            throw ValidationError("signal-file-error", path + ": sample times must be strictly increasing");
    return tabulated(std::move(samples));
}

double DrivingSignal::sample(double t) const {
    if (kind_ != Kind::Tabulated)
        throw ValidationError("signal-spec-invalid", "sample() is defined for tabulated signals only");
    if (t <= support_min_ || t >= support_max_) {
        if (t == support_min_) return pts_.front().second;
        if (t == support_max_) return pts_.back().second;
        return 0.0;
    }
    // locate segment by binary search
    std::size_t lo = 0, hi = pts_.size() - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        (pts_[mid].first <= t ? lo : hi) = mid;
    }
    const auto [u, gu] = pts_[lo];
    const auto [v, gv] = pts_[hi];
    return gu + (gv - gu) * (t - u) / (v - u);
}

void DrivingSignal::check_singular(cplx tau) const {
    if (tau.imag() != 0.0) return;
    const double t = tau.real();
    if (kind_ == Kind::Cauchy) {
        if (t == 0.0) throw SingularEvaluationError();
    } else if (t >= support_min_ && t <= support_max_) {
        throw SingularEvaluationError();
    }
}

std::vector<cplx> DrivingSignal::analytic_derivs(cplx tau, int max_order) const {
    if (max_order < 0 || max_order > kMaxOrder)
        throw ValidationError("signal-spec-invalid", "derivative order out of range");
    check_singular(tau);
    std::vector<cplx> out(static_cast<std::size_t>(max_order) + 1);

    if (kind_ == Kind::Cauchy) {
        // g~^(k)(tau) = (-1)^(n+k) (n+k)! / (2 pi i tau^(n+k+1))
        const cplx inv_tau = 1.0 / tau;
        cplx pw = inv_tau;
        for (int j = 0; j < order_; ++j) pw *= inv_tau;
        const cplx base = 1.0 / (2.0 * pi * iu);
        for (int k = 0; k <= max_order; ++k) {
            const int m = order_ + k;
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            out[static_cast<std::size_t>(k)] = sign * factorial(m) * base * pw;
            pw *= inv_tau;
        }
        return out;
    }

    // Tabulated: exact integrals of the piecewise-linear signal against
    // 1/(tau - t')^m. With L0 = log(tau-u) - log(tau-v) and
    //   I0_m = [(tau-v)^(1-m) - (tau-u)^(1-m)]/(m-1),  I0_1 = L0,
    //   I1_m = (tau-u) I0_m - I0_(m-1),
    // the segment contribution to \int g (tau-t')^(-m) dt' is
    //   g_u I0_m + s I1_m,  s = (g_v - g_u)/(v - u),
    // and for m = 1 it reduces to (g_u + s(tau-u)) L0 - s (v-u).
    std::vector<cplx> moments(static_cast<std::size_t>(max_order) + 1);
    for (std::size_t seg = 0; seg + 1 < pts_.size(); ++seg) {
        const auto [u, gu] = pts_[seg];
        const auto [v, gv] = pts_[seg + 1];
        const double slope = (gv - gu) / (v - u);
        const cplx zu = tau - u, zv = tau - v;
        const cplx L0 = std::log(zu) - std::log(zv);

        moments[0] += (gu + slope * zu) * L0 - slope * (v - u);
        if (max_order == 0) continue;

        const cplx inv_zu = 1.0 / zu, inv_zv = 1.0 / zv;
        cplx pu = inv_zu, pv = inv_zv;  // (tau-u)^(1-m), (tau-v)^(1-m) for m = 2
        cplx I0_prev = L0;              // I0_(m-1)
        for (int m = 2; m <= max_order + 1; ++m) {
            const cplx I0 = (pv - pu) / static_cast<double>(m - 1);
            const cplx I1 = zu * I0 - I0_prev;
            moments[static_cast<std::size_t>(m - 1)] += gu * I0 + slope * I1;
            I0_prev = I0;
            pu *= inv_zu;
            pv *= inv_zv;
        }
    }
    const cplx base = 1.0 / (2.0 * pi * iu);
    for (int k = 0; k <= max_order; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        out[static_cast<std::size_t>(k)] = sign * factorial(k) * base * moments[static_cast<std::size_t>(k)];
    }
    return out;
}

cplx DrivingSignal::analytic_deriv(cplx tau, int order) const {
    return analytic_derivs(tau, order)[static_cast<std::size_t>(order)];
}

std::pair<double, double> DrivingSignal::smoothed_parts(double t, double b) const {
    const cplx g = analytic(cplx(t, -b));
    return {g.real(), g.imag()};
}

}  // namespace cspb
