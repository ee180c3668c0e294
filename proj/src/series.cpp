#include "septool/series.hpp"

namespace septool {

Series1 series1(const std::string& var, const std::vector<Rational>& coeffs, int trunc) {
  Series1::Terms terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) terms[{static_cast<int>(i)}] = coeffs[i];
  return Series1({var}, std::move(terms), trunc);
}

}  // namespace septool
