#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bcfrac/weighted_bicomplex.hpp"

namespace bcfrac {

/// Builds a field from its value and Wirtinger derivatives d/dz, d/dzbar;
/// the real partials follow as d/dx = dz + dzbar, d/dy = i (dz - dzbar).
ComplexField wirtinger_field(ComplexFn value, ComplexFn dz, ComplexFn dzbar);

/// Names of the closed test-field set, in a fixed order:
/// one, z, z2, zbar, z_plus_3, mixed.
const std::vector<std::string>& registry_names();

bool registry_contains(std::string_view name);

/// Bicomplex product field for a registry name. "mixed" is conj(z1) e + z2 e†;
/// every other entry uses the same complex function on both components.
/// Throws ConfigError for an unknown name.
BCProductField registry_field(std::string_view name);

/// Complex field for component l (1 or 2) of a registry entry.
ComplexField registry_component(std::string_view name, int l);

}  // namespace bcfrac
