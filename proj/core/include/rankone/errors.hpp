#pragma once

#include <stdexcept>
#include <string>

namespace rankone {

// Coarse failure categories; the CLI maps them to exit codes
// (config -> 2, precision/arithmetic -> 3, cap -> 4).
enum class errc {
    config,
    precision,
    cap,
};

class Error : public std::runtime_error {
public:
    Error(errc category, std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message),
          category_(category),
          kind_(std::move(kind)) {}

    errc category() const { return category_; }
    const std::string& kind() const { return kind_; }

private:
    errc category_;
    std::string kind_;
};

[[noreturn]] inline void throw_config(const std::string& kind, const std::string& msg) {
    throw Error(errc::config, kind, msg);
}
[[noreturn]] inline void throw_precision(const std::string& kind, const std::string& msg) {
    throw Error(errc::precision, kind, msg);
}
[[noreturn]] inline void throw_cap(const std::string& kind, const std::string& msg) {
    throw Error(errc::cap, kind, msg);
}

}  // namespace rankone
