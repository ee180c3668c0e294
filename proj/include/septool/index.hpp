#pragma once

#include <string>
#include <vector>

#include "septool/field.hpp"

namespace septool {

enum class IndexMethod { Winding, Tangency, Bendixson };
std::string method_name(IndexMethod m);

/// Exact point of the circle with the field value there. half 0 covers angles
/// [-pi/2, pi/2] via r((1-t^2)/(1+t^2), 2t/(1+t^2)); half 1 is its negation.
struct CircleSample {
  int half = 0;
  Rational t;
  Rational x, y;
  Rational a, b;
};

struct IndexReport {
  int index = 0;
  IndexMethod method = IndexMethod::Winding;
  Rational radius;
  int samples = 0;
  bool certified = false;
  Rational min_norm_bound;  // rational lower bound of |F| on the circle
  int attempts = 1;         // radii tried (perturbation retries)
  std::string caveat;
  std::vector<CircleSample> trace;  // filled when requested
};

struct WindingOptions {
  bool keep_samples = false;
  int max_retries = 5;  // radius *= 9/10 after ZeroOnCircle
  int initial_arcs = 16;
};

/// Degree of F/|F| on the circle of the given radius. Arcs are bisected until
/// a Lipschitz bound keeps F inside the half-plane of its value at the arc
/// start; arcs shorter than `tolerance` (in the t parameter) or a norm bound
/// not above `tolerance` give ZeroOnCircle.
IndexReport winding_index(const PlanarField& f, const Rational& radius, const Rational& tolerance,
                          const WindingOptions& options = {});

/// 1 + (i - e)/2.
int index_from_tangencies(int interior, int exterior);
/// 1 + (e - h)/2.
int bendixson_index(int elliptic, int hyperbolic);

/// winding_index at radius, radius/2, radius/4, ... until three consecutive
/// values agree.
IndexReport radius_stabilized_index(const PlanarField& f, const Rational& tolerance,
                                    const Rational& radius = Rational(1, 4), int max_radii = 10);

/// half,t,x,y,A,B rows (decimal) for plotting.
std::string samples_csv(const IndexReport& report);

}  // namespace septool
