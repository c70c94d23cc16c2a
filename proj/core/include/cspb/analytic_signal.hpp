#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cspb/algebra.hpp"
#include "cspb/errors.hpp"

namespace cspb {

// tau = t - i b
struct ComplexTime {
    double t = 0;
    double b = 0;
    cplx tau() const { return {t, -b}; }
};

// A driving signal g together with its analytic signal
//   g~(tau) = (1/2 pi i) \int g(t') dt' / (tau - t').
//
// Two variants:
//  * cauchy(n): g~ is the n-th derivative of the Cauchy kernel 1/(2 pi i tau),
//    i.e. the driving signal is the n-th delta derivative at t = 0.
//  * tabulated: g is piecewise linear through the given samples and zero
//    outside their range; the Cauchy integral is evaluated exactly segment by
//    segment, so there is no quadrature error even for small |Im tau|.
class DrivingSignal {
  public:
    enum class Kind { Cauchy, Tabulated };

    static DrivingSignal cauchy(int order);
    static DrivingSignal tabulated(std::vector<std::pair<double, double>> samples);
    // two-column text file (t, g), strictly increasing t, '#' comments
    static DrivingSignal tabulated_from_file(const std::string& path);

    Kind kind() const { return kind_; }
    int cauchy_order() const { return order_; }
    double support_min() const { return support_min_; }
    double support_max() const { return support_max_; }

    cplx analytic(cplx tau) const { return analytic_deriv(tau, 0); }
    cplx analytic(const ComplexTime& ct) const { return analytic(ct.tau()); }

    // d^order g~ / d tau^order; orders up to 16 are supported
    cplx analytic_deriv(cplx tau, int order) const;
    cplx analytic_deriv(const ComplexTime& ct, int order) const { return analytic_deriv(ct.tau(), order); }

    // all orders 0..max_order in one pass (shared per-segment work)
    std::vector<cplx> analytic_derivs(cplx tau, int max_order) const;

    // g~(t - ib) = g_b + i gbar_b
    std::pair<double, double> smoothed_parts(double t, double b) const;

    // g(t) for tabulated signals (zero outside the samples)
    double sample(double t) const;

  private:
    DrivingSignal() = default;
    void check_singular(cplx tau) const;

    Kind kind_ = Kind::Cauchy;
    int order_ = 0;
    std::vector<std::pair<double, double>> pts_;
    double support_min_ = 0, support_max_ = 0;
};

}  // namespace cspb
