#include "bcfrac/gamma.hpp"

#include <cmath>
#include <string>

#include "bcfrac/errors.hpp"

namespace bcfrac::special {

namespace {

void check_argument(double x, const char* name) {
    if (std::isnan(x)) throw DomainError(std::string(name) + ": NaN argument");
    if (x <= 0.0 && x == std::floor(x)) throw DomainError(std::string(name) + ": pole at nonpositive integer");
}

}  // namespace

double gamma(double x) {
    check_argument(x, "gamma");
    const double g = std::tgamma(x);
    if (!std::isfinite(g)) throw NumericError("gamma: overflow");
    return g;
}

double log_gamma(double x) {
    check_argument(x, "log_gamma");
    return std::lgamma(x);
}

}  // namespace bcfrac::special
