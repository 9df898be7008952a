#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "niducc/errors.hpp"

namespace niducc {

struct MinimizeOptions {
  double grad_tol = 1e-10;       // stop when ||g||_inf <= grad_tol
  std::size_t max_evals = 50000;
  double c1 = 1e-4;              // Armijo
  double c2 = 0.9;               // curvature
  double step_max = 1e3;
};

struct MinimizeResult {
  Eigen::VectorXd theta;
  double value = 0.0;
  double grad_norm = 0.0;        // infinity norm at theta
  std::size_t evaluations = 0;
  std::size_t iterations = 0;
  bool converged = false;
  std::string stop_reason;
};

/// value-and-gradient callable
using Objective = std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)>;
/// invoked once per accepted iterate with the evaluation index that produced it
using AcceptCallback = std::function<void(std::size_t, double)>;

namespace detail {

inline double cubic_minimizer(double a, double fa, double da, double b, double fb,
                              double db) {
  const double d1 = da + db - 3.0 * (fa - fb) / (a - b);
  const double disc = d1 * d1 - da * db;
  if (disc < 0) return std::numeric_limits<double>::quiet_NaN();
  const double d2 = std::copysign(std::sqrt(disc), b - a);
  const double denom = db - da + 2.0 * d2;
  if (denom == 0) return std::numeric_limits<double>::quiet_NaN();
  return b - (b - a) * (db + d2 - d1) / denom;
}

}  // namespace detail

/// Quasi-Newton minimization: BFGS inverse-Hessian updates with a strong
/// Wolfe line search (bracket + cubic-interpolation zoom).  Each objective
/// call evaluates value and gradient together and counts as one evaluation.
inline MinimizeResult minimize(const Objective& objective, Eigen::VectorXd theta,
                               const MinimizeOptions& opts = {},
                               const AcceptCallback& on_accept = nullptr) {
  if (opts.grad_tol <= 0) throw ConfigError("gradient tolerance must be positive");
  const Eigen::Index m = theta.size();
  MinimizeResult res;
  std::size_t evals = 0;

  auto eval = [&](const Eigen::VectorXd& x, Eigen::VectorXd& g) -> double {
    if (evals >= opts.max_evals)
      throw OptimizerError("evaluation cap reached inside line search");
    ++evals;
    double v = objective(x, g);
    if (!std::isfinite(v) || !g.allFinite())
      throw OptimizerError("objective or gradient is not finite");
    return v;
  };

  Eigen::VectorXd g(m), g_new(m);
  double f = eval(theta, g);
  if (on_accept) on_accept(evals, f);
  Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(m, m);

  auto done = [&](const char* why, bool ok) {
    res.theta = theta;
    res.value = f;
    res.grad_norm = g.lpNorm<Eigen::Infinity>();
    res.evaluations = evals;
    res.converged = ok;
    res.stop_reason = why;
    return res;
  };

  bool reset_used = false;
  for (std::size_t iter = 0;; ++iter) {
    res.iterations = iter;
    if (g.lpNorm<Eigen::Infinity>() <= opts.grad_tol) return done("gradient tolerance", true);
    if (evals >= opts.max_evals) return done("evaluation cap", false);

    Eigen::VectorXd d = -(hinv * g);
    double dphi0 = g.dot(d);
    if (dphi0 >= 0) {
      // fall back to steepest descent once, then give up
      if (reset_used) return done("no descent direction", false);
      hinv.setIdentity();
      d = -g;
      dphi0 = g.dot(d);
      reset_used = true;
      if (dphi0 >= 0) return done("gradient is numerically zero", false);
    }

    // --- strong Wolfe line search ---
    const double f0 = f;
    double alpha_prev = 0.0, f_prev = f0, dphi_prev = dphi0;
    double alpha = 1.0;
    if (iter == 0) {
      const double gnorm = g.norm();
      if (gnorm > 1.0) alpha = std::min(1.0, 1.01 / gnorm);
    }
    double alpha_acc = -1.0, f_acc = 0.0;
    Eigen::VectorXd x_acc, g_acc;
    std::size_t eval_acc = 0;
    bool bracketed = false;
    double lo = 0, f_lo = 0, d_lo = 0, hi = 0, f_hi = 0, d_hi = 0;
    Eigen::VectorXd x_lo, g_lo_v;

    Eigen::VectorXd x_try(m);
    try {
      for (int i = 0; i < 30 && !bracketed && alpha_acc < 0; ++i) {
        x_try = theta + alpha * d;
        double fa = eval(x_try, g_new);
        double dphia = g_new.dot(d);
        if (fa > f0 + opts.c1 * alpha * dphi0 || (i > 0 && fa >= f_prev)) {
          lo = alpha_prev; f_lo = f_prev; d_lo = dphi_prev;
          x_lo = theta + lo * d;
          hi = alpha; f_hi = fa; d_hi = dphia;
          bracketed = true;
          break;
        }
        if (std::abs(dphia) <= -opts.c2 * dphi0) {
          alpha_acc = alpha; f_acc = fa; x_acc = x_try; g_acc = g_new;
          eval_acc = evals;
          break;
        }
        if (dphia >= 0) {
          lo = alpha; f_lo = fa; d_lo = dphia;
          x_lo = x_try;
          hi = alpha_prev; f_hi = f_prev; d_hi = dphi_prev;
          bracketed = true;
          break;
        }
        alpha_prev = alpha; f_prev = fa; dphi_prev = dphia;
        alpha = std::min(2.0 * alpha, opts.step_max);
      }

      for (int i = 0; i < 30 && bracketed; ++i) {
        double mid = detail::cubic_minimizer(lo, f_lo, d_lo, hi, f_hi, d_hi);
        const double span = hi - lo;
        const double safe_lo = lo + 0.1 * span, safe_hi = lo + 0.9 * span;
        if (!std::isfinite(mid) || mid < std::min(safe_lo, safe_hi) ||
            mid > std::max(safe_lo, safe_hi))
          mid = lo + 0.5 * span;
        if (std::abs(span) * std::max(1.0, std::abs(lo)) < 1e-16) break;
        x_try = theta + mid * d;
        double fm = eval(x_try, g_new);
        double dphim = g_new.dot(d);
        if (fm > f0 + opts.c1 * mid * dphi0 || fm >= f_lo) {
          hi = mid; f_hi = fm; d_hi = dphim;
        } else {
          if (std::abs(dphim) <= -opts.c2 * dphi0) {
            alpha_acc = mid; f_acc = fm; x_acc = x_try; g_acc = g_new;
            eval_acc = evals;
            break;
          }
          if (dphim * span >= 0) {
            hi = lo; f_hi = f_lo; d_hi = d_lo;
          }
          lo = mid; f_lo = fm; d_lo = dphim;
          x_lo = x_try;
        }
      }
    } catch (const OptimizerError&) {
      return done("evaluation cap", false);
    }

    if (alpha_acc < 0) {
      // Wolfe conditions unreachable (flat to machine precision); fall back
      // to the best bracketed point that still decreases f.
      if (bracketed && f_lo < f0 && lo > 0) {
        alpha_acc = lo; f_acc = f_lo; x_acc = x_lo;
        try {
          f_acc = eval(x_lo, g_new);
        } catch (const OptimizerError&) {
          return done("evaluation cap", false);
        }
        g_acc = g_new;
        eval_acc = evals;
      } else {
        if (g.lpNorm<Eigen::Infinity>() <= opts.grad_tol)
          return done("gradient tolerance", true);
        if (!reset_used) {
          hinv.setIdentity();
          reset_used = true;
          continue;
        }
        return done("line search stalled", false);
      }
    }

    const Eigen::VectorXd s = x_acc - theta;
    const Eigen::VectorXd y = g_acc - g;
    theta = x_acc;
    f = f_acc;
    g = g_acc;
    reset_used = false;
    if (on_accept) on_accept(eval_acc, f);

    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      const double rho = 1.0 / sy;
      // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
      const Eigen::VectorXd hy = hinv * y;
      const double yhy = y.dot(hy);
      hinv.noalias() += (rho * rho * yhy + rho) * (s * s.transpose());
      hinv.noalias() -= rho * (hy * s.transpose() + s * hy.transpose());
    }
  }
}

}  // namespace niducc
