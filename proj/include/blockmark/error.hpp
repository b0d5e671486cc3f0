#pragma once

#include <stdexcept>
#include <string>

namespace blockmark {

/// Error for malformed key files and pixmap streams. The message names the
/// offending line or byte offset.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace blockmark
