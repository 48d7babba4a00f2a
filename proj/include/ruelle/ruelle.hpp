#pragma once

#include "ruelle/geodesics.hpp"
#include "ruelle/traceformula.hpp"

namespace ruelle {

enum class LogRPath { Factor, Direct };

/// log R(z) = sum_j (-1)^{j+1} log S_j(z + j).
cplx ruelle_log_factor(const LengthSpectrum& spec, cplx z);
/// log R(z) = sum over entries of Tr rho(gamma) / k * e^{-z l(gamma)}; every
/// power must be listed as its own entry with its own trace.
cplx ruelle_log_direct(const LengthSpectrum& spec, cplx z);
cplx ruelle_log(const LengthSpectrum& spec, cplx z, LogRPath path = LogRPath::Factor);

/// log R(z) - log R(-z) - [prefactor X(z) + 4 sum_j (-1)^j delta z]. Only a
/// diagnostic on truncated spectra.
cplx funceq_residual(const LengthSpectrum& spec, const FuncEqReport& report, cplx z,
                     LogRPath path = LogRPath::Factor);

}  // namespace ruelle
