#pragma once

#include <stdexcept>
#include <string>

namespace gseed {

/* Two failure families, matching the CLI exit-code contract:
 * input_error  -> exit 1 (bad operator text, inconsistent initial data,
 *                 out-of-range parameters, malformed documents)
 * verify_error -> exit 2 (an internal identity or tolerance check failed;
 *                 these indicate a broken run, never bad user input)
 */
struct gseed_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct input_error : gseed_error {
    using gseed_error::gseed_error;
};

struct verify_error : gseed_error {
    using gseed_error::gseed_error;
};

}  // namespace gseed
