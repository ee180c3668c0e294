#pragma once

#include <optional>
#include <string>
#include <vector>

#include "septool/separatrix.hpp"

namespace septool {

enum class GevreyVerdict { Divergent, ConvergentLike, Inconclusive };
std::string verdict_name(GevreyVerdict v);

struct Window {
  int first = 10;
  int last = 40;  // inclusive; clipped to the known coefficients
};

/// Least-squares fit log|c_n| ~ n log A + s (n log n - n) + C over the nonzero
/// coefficients of the window.
struct GevreyReport {
  double s_hat = 0;
  double log_a = 0;
  double constant = 0;
  double residual = 0;   // RMS of the fit, natural log units
  double condition = 0;  // 2-norm condition number of the design matrix
  int first = 0, last = 0;
  int points = 0;
  bool geometric_bound = false;
  bool identically_zero = false;
  GevreyVerdict verdict = GevreyVerdict::Inconclusive;
};

struct GevreyThresholds {
  double divergent_s = 0.5;
  double max_residual = 0.5;
  double convergent_s = 0.25;
  int min_points = 12;
};

GevreyReport gevrey_fit(const Series1& coeffs, const Window& window = {}, const GevreyThresholds& th = {});

/// n, log|c_n| rows over the nonzero coefficients of the window.
std::string gevrey_csv(const Series1& coeffs, const Window& window = {});

struct BorelReport {
  double radius = 0;  // +inf when entire
  bool entire = false;
  int points = 0;
};

/// Root test on c_n/n!: radius ~ 1/limsup |c_n/n!|^(1/n) over the upper half of the window.
BorelReport borel_radius(const Series1& coeffs, const Window& window = {});

/// -alpha(-z) (1 + z + z^2 + ...) known below order n + 1.
Series1 elizarov_coeffs(const Series1& alpha, int n);

enum class ElizarovVerdict { Nonzero, Zero, Inconclusive };
std::string verdict_name(ElizarovVerdict v);

struct ElizarovResult {
  Series1 c;
  int n = 0;                           // last index summed
  std::vector<Rational> partial_sums;  // S_2 .. S_n
  std::optional<Rational> limit;       // when c_k is eventually constant
  Rational tail_bound;                 // bound on |S - S_n| otherwise
  ElizarovVerdict verdict = ElizarovVerdict::Inconclusive;
  const Rational& last() const { return partial_sums.back(); }
};

/// S_N = -sum_{k=2}^{N} c_k k/(k+1)!.
ElizarovResult elizarov_derivative(const Series1& alpha, int n);

struct CrossCheck {
  Rational delta;
  int order = 0;
  Series1 separatrix;  // weak separatrix w = s(z) of xi_{delta alpha}
  GevreyReport gevrey;
  ElizarovResult elizarov;
  bool agree = false;
};

/// Weak separatrix of xi_{delta*alpha} to order n (coefficients through z^n),
/// its Gevrey fit, and the Elizarov verdict for alpha.
CrossCheck divergence_cross_check(const Series1& alpha, const Rational& delta, int n, const Window& window = {});

}  // namespace septool
