#ifndef IFSAD_ERRORS_HPP
#define IFSAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ifsad {

// Error taxonomy. The CLI maps these onto exit codes:
//   config_error -> 2, input_error -> 3, model_error -> 4.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad parameter or configuration value (out-of-range alpha/beta, m < 1, ...).
struct config_error : error {
    using error::error;
};

// Malformed external input (unparseable rows, ragged CSV, NaN cells, ...).
struct input_error : error {
    using error::error;
};

// Model-level failures: inconsistent fuzzifiers, untrainable data, masked
// characteristics.
struct model_error : error {
    using error::error;
};

// A characteristic series that cannot be split into the requested number of
// intervals (too few distinct values, or fitted centers collided).
struct infeasible_partition_error : model_error {
    using model_error::model_error;
};

} // namespace ifsad

#endif
