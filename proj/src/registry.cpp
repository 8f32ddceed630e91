#include "bcfrac/registry.hpp"

#include <algorithm>

#include "bcfrac/errors.hpp"

namespace bcfrac {

namespace {

const Complex kI(0.0, 1.0);

ComplexFn constant_fn(Complex c) {
    return [c](Complex) { return c; };
}

ComplexField field_one() { return wirtinger_field(constant_fn(1.0), constant_fn(0.0), constant_fn(0.0)); }

ComplexField field_z() {
    return wirtinger_field([](Complex z) { return z; }, constant_fn(1.0), constant_fn(0.0));
}

ComplexField field_z2() {
    return wirtinger_field([](Complex z) { return z * z; }, [](Complex z) { return 2.0 * z; }, constant_fn(0.0));
}

ComplexField field_zbar() {
    return wirtinger_field([](Complex z) { return std::conj(z); }, constant_fn(0.0), constant_fn(1.0));
}

ComplexField field_z_plus_3() {
    return wirtinger_field([](Complex z) { return z + 3.0; }, constant_fn(1.0), constant_fn(0.0));
}

}  // namespace

ComplexField wirtinger_field(ComplexFn value, ComplexFn dz, ComplexFn dzbar) {
    ComplexField f;
    f.value = std::move(value);
    f.dx = [dz, dzbar](Complex z) { return dz(z) + dzbar(z); };
    f.dy = [dz, dzbar](Complex z) { return kI * (dz(z) - dzbar(z)); };
    return f;
}

const std::vector<std::string>& registry_names() {
    static const std::vector<std::string> names{"one", "z", "z2", "zbar", "z_plus_3", "mixed"};
    return names;
}

bool registry_contains(std::string_view name) {
    const auto& names = registry_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

ComplexField registry_component(std::string_view name, int l) {
    if (l != 1 && l != 2) throw DomainError("registry_component: component must be 1 or 2");
    if (name == "one") return field_one();
    if (name == "z") return field_z();
    if (name == "z2") return field_z2();
    if (name == "zbar") return field_zbar();
    if (name == "z_plus_3") return field_z_plus_3();
    if (name == "mixed") return l == 1 ? field_zbar() : field_z();
    throw ConfigError("unknown test field '" + std::string(name) + "'");
}

BCProductField registry_field(std::string_view name) {
    return {registry_component(name, 1), registry_component(name, 2)};
}

}  // namespace bcfrac
