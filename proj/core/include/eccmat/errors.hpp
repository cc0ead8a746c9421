#pragma once

#include <stdexcept>
#include <string>

namespace eccmat {

/// Error conditions raised by the library. The CLI maps malformed_* codes
/// (bad input text) to exit 2 and everything else to exit 3.
enum class errc {
    disconnected_input,
    self_loop,
    duplicate_edge,
    index_out_of_range,
    not_a_tree,
    malformed_graph6,
    malformed_json,
    malformed_family,
    unsupported_order,
    order_too_small,
    order_out_of_range,
    parameter_mismatch,
    parameter_out_of_range,
    even_diameter,
    convergence_failure,
    reducible_matrix,
};

const char* to_string(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw error(code, std::string(to_string(code)) + ": " + what);
}

} // namespace eccmat
