#pragma once

#include <stdexcept>
#include <string>

namespace cspb {

// Base for errors raised where a closed-form evaluator refuses to produce a
// value (guard loci). Grid sweeps catch this type and mark the cell excluded.
class EvaluationGuard : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Point within the guard radius of the focal circle C (where the complex
// distance vanishes and wavelet denominators blow up).
class SingularLocusError : public EvaluationGuard {
  public:
    explicit SingularLocusError(double dist)
        : EvaluationGuard("evaluation within guard radius of the focal circle"), distance(dist) {}
    double distance;
};

// Point within the guard distance of the branch-cut disk D (p ~ 0); fields
// that jump across the disk are not evaluated there.
class DiskCutError : public EvaluationGuard {
  public:
    DiskCutError() : EvaluationGuard("evaluation on the branch-cut disk") {}
};

// Analytic signal requested at a real time inside the support of g.
class SingularEvaluationError : public EvaluationGuard {
  public:
    SingularEvaluationError() : EvaluationGuard("analytic signal evaluated on the support of g") {}
};

// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(double achieved_rel, const std::string& what_arg)
        : std::runtime_error(what_arg), achieved(achieved_rel) {}
    double achieved;  // relative tolerance actually reached
};

// Input-contract violation. `slug` is the stable machine-readable identifier
// the CLI prints on stderr ("error: <slug>").
class ValidationError : public std::runtime_error {
  public:
    ValidationError(std::string slug_, const std::string& detail)
        : std::runtime_error(slug_ + ": " + detail), slug(std::move(slug_)) {}
    std::string slug;
};

}  // namespace cspb
