#ifndef ORBSW_VERIFY_HPP
#define ORBSW_VERIFY_HPP

#include <string>
#include <vector>

namespace orbsw {

// Built-in cross-checks against the worked golden values this library
// was calibrated on. Each check is independent; names are stable.
struct VerifyCheck {
    std::string name;
    bool passed;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_passed() const;
    int passed_count() const;
};

VerifyReport run_verify_suite();

} // namespace orbsw

#endif
