#pragma once

#include <stdexcept>
#include <string>

namespace hcsim {

// Every failure mode in the library maps to one of these codes so callers
// (and the CLI exit-code contract) can dispatch without string matching.
enum class errc {
    non_divisible,
    non_integer_ratio,
    insufficient_tx_memory,
    dimension_too_small,
    bad_length,
    file_index_out_of_range,
    duplicate_label,
    too_large,
    infeasible_window,
    not_applicable,
    memory_violation,
    degenerate_channel,
    decode_failure,
    infeasible,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_divisible: return "NonDivisible";
        case errc::non_integer_ratio: return "NonIntegerRatio";
        case errc::insufficient_tx_memory: return "InsufficientTxMemory";
        case errc::dimension_too_small: return "DimensionTooSmall";
        case errc::bad_length: return "BadLength";
        case errc::file_index_out_of_range: return "FileIndexOutOfRange";
        case errc::duplicate_label: return "DuplicateLabel";
        case errc::too_large: return "TooLarge";
        case errc::infeasible_window: return "InfeasibleWindow";
        case errc::not_applicable: return "NotApplicable";
        case errc::memory_violation: return "MemoryViolation";
        case errc::degenerate_channel: return "DegenerateChannel";
        case errc::decode_failure: return "DecodeFailure";
        case errc::infeasible: return "Infeasible";
        case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

}  // namespace hcsim
