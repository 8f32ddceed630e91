#pragma once

namespace bcfrac::special {

/// Gamma function (std::tgamma). Throws DomainError at the poles 0, -1, -2, ...
/// and NumericError on overflow.
double gamma(double x);

/// log|Gamma(x)| (std::lgamma), same domain checks.
double log_gamma(double x);

}  // namespace bcfrac::special
