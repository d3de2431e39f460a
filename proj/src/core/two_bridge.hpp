#pragma once

#include <string_view>

#include "closed_forms.hpp"
#include "diagram.hpp"

namespace kstates {

enum class Method { closed, recurrence, classes, enumerate };

Method parse_method(std::string_view name);

/// B(n,r)(x) by the chosen route. For a single infinite argument the
/// closed route uses B(k,inf), the recurrence route the torus recurrence,
/// the class route x alpha_k + x^2, and enumeration the torus shadow.
IntPolynomial two_bridge_polynomial(ExtendedCount n, ExtendedCount r, Method method,
                                    const EnumerationOptions& opts = {});

} // namespace kstates
