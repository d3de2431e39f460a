#include "checked.hpp"

#include <algorithm>
#include <limits>

namespace kstates {

namespace {
__extension__ using Wide = __int128;
}

Int binomial(Int a, Int b) {
    if (a < 0 || b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    Int result = 1;
    for (Int i = 0; i < b; ++i) {
        // result * (a - i) is divisible by (i + 1) at every step.
        Wide wide = static_cast<Wide>(result) * (a - i) / (i + 1);
        if (wide > std::numeric_limits<Int>::max()) throw Error(Errc::overflow, "binomial coefficient overflows 64 bits");
        result = static_cast<Int>(wide);
    }
    return result;
}

Int pow2(Int e) {
    if (e < 0) throw Error(Errc::invalid_argument, "negative exponent");
    if (e > 62) throw Error(Errc::overflow, "2^e overflows 64 bits");
    return Int{1} << e;
}

} // namespace kstates
