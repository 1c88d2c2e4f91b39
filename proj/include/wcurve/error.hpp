#pragma once

#include <stdexcept>
#include <string>

namespace wcurve {

// Every failure raised by the library carries a short machine-readable kind
// (e.g. "GcdNotOne", "TableInvalid") next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

}  // namespace wcurve
