#include "orbsw/basecase.hpp"

#include "orbsw/errors.hpp"

namespace orbsw {

BigInt sw_base(Int genus, Int d) {
    if (genus < 0) throw StructuralError("sw_base: genus must be >= 0");
    if (genus == 0)
        return d >= 0 ? BigInt(static_cast<long>(d + 1)) : BigInt(0);
    if (d < 0 || d > 2 * genus - 2) return 0;
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(2 * genus - 2),
                 static_cast<unsigned long>(d));
    return (d % 2 != 0) ? BigInt(-b) : b;
}

} // namespace orbsw
