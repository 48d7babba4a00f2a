#include "ruelle/ruelle.hpp"

namespace ruelle {

cplx ruelle_log_factor(const LengthSpectrum& spec, cplx z) {
  cplx acc = 0.0;
  for (int j = 0; j <= 2 * spec.n; ++j) {
    const cplx v = log_S_j(spec, j, z + static_cast<double>(j));
    acc += j % 2 == 0 ? -v : v;
  }
  return acc;
}

cplx ruelle_log_direct(const LengthSpectrum& spec, cplx z) {
  cplx acc = 0.0;
  for (const auto& e : spec.entries) acc += e.trace_rho / static_cast<double>(e.k) * std::exp(-z * e.length());
  return acc;
}

cplx ruelle_log(const LengthSpectrum& spec, cplx z, LogRPath path) {
  return path == LogRPath::Factor ? ruelle_log_factor(spec, z) : ruelle_log_direct(spec, z);
}

cplx funceq_residual(const LengthSpectrum& spec, const FuncEqReport& report, cplx z, LogRPath path) {
  return ruelle_log(spec, z, path) - ruelle_log(spec, -z, path) - report.exponent(z);
}

}  // namespace ruelle
