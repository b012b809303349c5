#ifndef BAMA_ERRORS_HPP
#define BAMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bama {

// Thrown when a divisor/modulus is zero or negative.
struct invalid_modulus : std::invalid_argument {
    explicit invalid_modulus(const std::string& msg) : std::invalid_argument(msg) {}
};

// Any structural damage in serialized data: truncation, bad lengths,
// out-of-range indices, impossible codes.
struct corrupt_stream : std::runtime_error {
    explicit corrupt_stream(const std::string& msg) : std::runtime_error(msg) {}
};

// A varint whose encoding exceeds the 10-byte limit of a 64-bit value.
struct varint_overflow : std::runtime_error {
    explicit varint_overflow(const std::string& msg) : std::runtime_error(msg) {}
};

// Container magic or version this build does not understand.
struct unsupported_format : std::runtime_error {
    explicit unsupported_format(const std::string& msg) : std::runtime_error(msg) {}
};

// Ratio of a zero-length input is undefined.
struct undefined_ratio : std::domain_error {
    explicit undefined_ratio(const std::string& msg) : std::domain_error(msg) {}
};

// Mean of an empty sample is undefined.
struct undefined_mean : std::domain_error {
    explicit undefined_mean(const std::string& msg) : std::domain_error(msg) {}
};

// Invalid or contradictory configuration (corpus specs, CLI parameters).
struct config_error : std::invalid_argument {
    explicit config_error(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace bama

#endif // BAMA_ERRORS_HPP
