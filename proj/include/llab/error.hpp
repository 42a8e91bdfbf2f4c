#pragma once

#include <stdexcept>
#include <string>

namespace llab {

// Library-wide error with a kind that maps 1:1 onto CLI exit codes:
// input -> 2, resource -> 3. Bad arguments, violated preconditions, and
// out-of-scope requests are Kind::input; size-guard trips are Kind::resource.
class Error : public std::runtime_error {
public:
    enum class Kind { input, resource };

    Error(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

inline Error input_error(const std::string& message) {
    return Error(Error::Kind::input, message);
}

inline Error resource_error(const std::string& message) {
    return Error(Error::Kind::resource, message);
}

} // namespace llab
