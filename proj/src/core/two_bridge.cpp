#include "two_bridge.hpp"

#include <algorithm>
#include <string>

namespace kstates {

Method parse_method(std::string_view name) {
    if (name == "closed") return Method::closed;
    if (name == "recurrence") return Method::recurrence;
    if (name == "classes") return Method::classes;
    if (name == "enumerate") return Method::enumerate;
    throw Error(Errc::unknown_name, "unknown method '" + std::string(name) + "'");
}

IntPolynomial two_bridge_polynomial(ExtendedCount n, ExtendedCount r, Method method, const EnumerationOptions& opts) {
    if (n.is_infinite() && r.is_infinite())
        throw Error(Errc::unsupported, "C(inf, inf) is not defined for two-bridge shadows");

    if (method == Method::enumerate) {
        // Reject before building: the diagram alone is linear in n + r.
        const std::uint64_t crossings = std::uint64_t{n.is_finite() ? n.value() : 0} + (r.is_finite() ? r.value() : 0);
        const std::size_t cap = std::min(opts.max_crossings, kAbsoluteMaxCrossings);
        if (crossings > cap)
            throw Error(Errc::cap_exceeded, "too many crossings to enumerate: " + std::to_string(crossings) +
                                                " > cap " + std::to_string(cap));
        return state_polynomial(build_two_bridge(n, r), opts);
    }

    if (n.is_infinite() || r.is_infinite()) {
        const std::uint32_t k = n.is_infinite() ? r.value() : n.value();
        switch (method) {
        case Method::closed:
            return b_ninf(k);
        case Method::recurrence:
            return b_ninf_recurrence(k);
        case Method::classes:
            return shift_up(alpha(k), 1) + IntPolynomial::monomial(1, 2);
        case Method::enumerate:
            break;
        }
    }

    switch (method) {
    case Method::closed:
        return b_nr_closed(n.value(), r.value());
    case Method::recurrence:
        return b_nr_recurrence(n.value(), r.value());
    case Method::classes:
        return b_nr_classes(n.value(), r.value()).sum();
    case Method::enumerate:
        break;
    }
    throw Error(Errc::invalid_argument, "unhandled method");
}

} // namespace kstates
