#pragma once

#include "orbitgeo/ode.hpp"
#include "orbitgeo/so_algebra.hpp"

#include <memory>
#include <vector>

namespace orbitgeo {

// One fiber-coefficient function t -> x_rs(t), with two analytic derivatives.
class CurveSpec {
  public:
    enum class Kind { Constant, TrigPair, RotatingFrame, ObliqueScalar, ObliqueSystem, NumericSamples };

    CurveSpec() : CurveSpec(constant(0.0)) {}

    static CurveSpec constant(double value);

    // cos_amp * cos(omega t) + sin_amp * sin(omega t)
    static CurveSpec trig_pair(double cos_amp, double sin_amp, double omega);

    // Component (0 or 1) of R(sign * t) (p(t), q(t)) where p' = sign*alpha*q,
    // q' = -sign*beta*p from (p0, q0), and R is the standard 2x2 rotation.
    // alpha*beta must be nonnegative (the pair then oscillates at sqrt(alpha*beta)).
    static CurveSpec rotating_frame(int component, double p0, double q0, double alpha, double beta, int sign);

    // Solution of x'' = -mu x (x')^2 from (x0, v0), evaluated by inverting the
    // first integral x' = v0 e^{mu x0^2/2} e^{-mu x^2/2} with adaptive quadrature
    // and safeguarded Newton iteration.
    static CurveSpec oblique_scalar(double mu, double x0, double v0);

    // Components of the coupled system x_k'' = -(sum_l mu_l (x_l')^2) x_k,
    // integrated once over [t0, t1] and shared by the returned specs.
    static std::vector<CurveSpec> oblique_system(const std::vector<double>& mus, const std::vector<double>& x0s,
                                                 const std::vector<double>& v0s, double t0, double t1,
                                                 double rtol = 1e-11, double atol = 1e-13);

    // Uniform samples with fourth-order finite-difference derivatives; values
    // off the grid come from cubic Hermite interpolation.
    static CurveSpec numeric_samples(double t0, double dt, std::vector<double> values);

    Kind kind() const { return kind_; }
    bool is_zero_constant() const { return kind_ == Kind::Constant && a_ == 0.0; }

    double value(double t) const;
    double deriv1(double t) const;
    double deriv2(double t) const;

  private:
    struct Samples {
        double t0 = 0.0, dt = 0.0;
        std::vector<double> y, d1, d2;
    };

    Kind kind_ = Kind::Constant;
    // Meaning by kind: Constant a; TrigPair a,b,w; RotatingFrame a=p0, b=q0,
    // w=alpha, w2=beta, sign, component; ObliqueScalar a=x0, b=v0, w=mu;
    // ObliqueSystem component + shared trajectory; NumericSamples shared samples.
    double a_ = 0.0, b_ = 0.0, w_ = 0.0, w2_ = 0.0;
    int sign_ = 1, component_ = 0;
    std::shared_ptr<const Trajectory> traj_;
    std::shared_ptr<const std::vector<double>> mus_;
    std::shared_ptr<const Samples> samples_;
};

// Fiber coefficients along the base curve exp(t w_ij), one CurveSpec per basis
// index, defaulting to the zero constant.
struct FieldAlongBase {
    int n = 0;
    int base_i = 0, base_j = 0;
    std::vector<CurveSpec> coeffs;

    FieldAlongBase() = default;
    FieldAlongBase(int n_, int i, int j);

    CurveSpec& coeff(int i, int j);
    const CurveSpec& coeff(int i, int j) const;

    AlgebraVector eval(double t) const;
    AlgebraVector eval_d1(double t) const;
    AlgebraVector eval_d2(double t) const;
};

}  // namespace orbitgeo
