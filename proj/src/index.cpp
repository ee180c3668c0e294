#include "septool/index.hpp"

#include <cstdio>
#include <sstream>

namespace septool {

namespace {

struct Evaluator {
  Series2 a, b;
  Rational lipschitz;  // bound on |dF/dtheta| over the circle, both components
  Rational radius;

  Evaluator(const PlanarField& f, const Rational& r) : a(f[0].as_exact()), b(f[1].as_exact()), radius(r) {
    for (const auto* s : {&a, &b})
      for (const auto& [e, c] : s->terms()) {
        int d = e[0] + e[1];
        lipschitz += c.abs() * Rational(d) * r.pow(static_cast<unsigned>(d));
      }
  }

  CircleSample at(int half, const Rational& t) const {
    CircleSample s;
    s.half = half;
    s.t = t;
    Rational den = Rational(1) + t * t;
    Rational sign = half == 0 ? Rational(1) : Rational(-1);
    s.x = sign * radius * (Rational(1) - t * t) / den;
    s.y = sign * radius * Rational(2) * t / den;
    s.a = a.evaluate({s.x, s.y});
    s.b = b.evaluate({s.x, s.y});
    return s;
  }
};

// Half-open quadrants so that every nonzero vector has exactly one.
int quadrant(const CircleSample& s) {
  int sa = s.a.sign(), sb = s.b.sign();
  if (sa > 0 && sb >= 0) return 0;
  if (sa <= 0 && sb > 0) return 1;
  if (sa < 0 && sb <= 0) return 2;
  return 3;
}

struct Outcome {
  bool ok = false;
  int quarter_turns = 0;
  int samples = 0;
  Rational min_bound;
  std::vector<CircleSample> trace;
};

Outcome attempt(const PlanarField& f, const Rational& radius, const Rational& tolerance, const WindingOptions& opt) {
  Evaluator ev(f, radius);
  Outcome out;
  bool have_bound = false;
  const Rational two(2);
  for (int half = 0; half < 2; ++half) {
    // stack of arcs [t0, t1], processed left to right
    std::vector<std::pair<CircleSample, Rational>> stack;
    const Rational step = two / Rational(opt.initial_arcs);
    for (int k = opt.initial_arcs - 1; k >= 0; --k) {
      Rational t0 = Rational(-1) + step * Rational(k);
      stack.emplace_back(ev.at(half, t0), t0 + step);
    }
    while (!stack.empty()) {
      auto [s0, t1] = stack.back();
      stack.pop_back();
      const Rational dt = t1 - s0.t;
      // |dtheta/dt| <= 2 and |F(p) - F(q)| <= L |theta_p - theta_q|.
      // Requiring rho <= |F(p)|/2 keeps the norm bound away from zero.
      const Rational rho = ev.lipschitz * two * dt;
      const Rational norm2 = s0.a * s0.a + s0.b * s0.b;
      if (Rational(4) * rho * rho >= norm2) {
        if (dt < tolerance) return out;
        Rational mid = (s0.t + t1) / two;
        stack.emplace_back(ev.at(half, mid), t1);
        stack.emplace_back(s0, mid);
        continue;
      }
      CircleSample s1 = ev.at(half, t1);
      int d = ((quadrant(s1) - quadrant(s0)) % 4 + 4) % 4;
      if (d == 2) fail(Errc::ZeroOnCircle, "inconsistent quadrant step");  // excluded by the half-plane bound
      out.quarter_turns += d == 1 ? 1 : (d == 3 ? -1 : 0);
      Rational bound = (norm2 - rho * rho) / (s0.a.abs() + s0.b.abs() + rho);
      if (!have_bound || bound < out.min_bound) out.min_bound = bound;
      have_bound = true;
      ++out.samples;
      if (opt.keep_samples) out.trace.push_back(s0);
    }
  }
  if (out.min_bound <= tolerance) return out;
  if (out.quarter_turns % 4 != 0) fail(Errc::ZeroOnCircle, "quarter turns do not close up");
  out.ok = true;
  return out;
}

}  // namespace

std::string method_name(IndexMethod m) {
  switch (m) {
    case IndexMethod::Winding: return "winding";
    case IndexMethod::Tangency: return "tangency-formula";
    case IndexMethod::Bendixson: return "bendixson";
  }
  return "?";
}

IndexReport winding_index(const PlanarField& f, const Rational& radius, const Rational& tolerance,
                          const WindingOptions& options) {
  if (radius.sign() <= 0) fail(Errc::InvalidArgument, "radius must be positive");
  if (tolerance.sign() <= 0) fail(Errc::InvalidArgument, "tolerance must be positive");
  Rational r = radius;
  for (int k = 0; k <= options.max_retries; ++k) {
    Outcome o = attempt(f, r, tolerance, options);
    if (o.ok) {
      IndexReport rep;
      rep.index = o.quarter_turns / 4;
      rep.radius = r;
      rep.samples = o.samples;
      rep.min_norm_bound = o.min_bound;
      rep.attempts = k + 1;
      rep.certified = f.exact();
      if (!f.exact())
        rep.caveat = "field known below order " + std::to_string(f.trunc()) +
                     "; the unknown tail is not bounded, so the value is not certified";
      rep.trace = std::move(o.trace);
      return rep;
    }
    r = r * Rational(9, 10);
  }
  fail(Errc::ZeroOnCircle, "no zero-free certificate on the circle of radius " + radius.str() + " after " +
                               std::to_string(options.max_retries) + " perturbations");
}

int index_from_tangencies(int interior, int exterior) {
  if (interior < 0 || exterior < 0) fail(Errc::InvalidArgument, "tangency counts must be non-negative");
  if ((interior - exterior) % 2 != 0) fail(Errc::ParityError, "i - e must be even");
  return 1 + (interior - exterior) / 2;
}

int bendixson_index(int elliptic, int hyperbolic) {
  if (elliptic < 0 || hyperbolic < 0) fail(Errc::InvalidArgument, "sector counts must be non-negative");
  if ((elliptic - hyperbolic) % 2 != 0) fail(Errc::ParityError, "e - h must be even");
  return 1 + (elliptic - hyperbolic) / 2;
}

IndexReport radius_stabilized_index(const PlanarField& f, const Rational& tolerance, const Rational& radius,
                                    int max_radii) {
  Rational r = radius;
  std::vector<IndexReport> runs;
  for (int k = 0; k < max_radii; ++k, r = r / Rational(2)) {
    runs.push_back(winding_index(f, r, tolerance));
    const std::size_t n = runs.size();
    if (n >= 3 && runs[n - 1].index == runs[n - 2].index && runs[n - 2].index == runs[n - 3].index) {
      IndexReport rep = runs.back();
      rep.certified = runs[n - 1].certified && runs[n - 2].certified && runs[n - 3].certified;
      rep.attempts = static_cast<int>(n);
      return rep;
    }
  }
  fail(Errc::NoStabilization, "index did not stabilize over " + std::to_string(max_radii) + " radii");
}

std::string samples_csv(const IndexReport& report) {
  std::ostringstream os;
  os << "half,t,x,y,A,B\n";
  char buf[64];
  auto num = [&](const Rational& q) {
    std::snprintf(buf, sizeof buf, "%.15g", q.to_double());
    return std::string(buf);
  };
  for (const auto& s : report.trace)
    os << s.half << ',' << num(s.t) << ',' << num(s.x) << ',' << num(s.y) << ',' << num(s.a) << ',' << num(s.b)
       << '\n';
  return os.str();
}

}  // namespace septool
