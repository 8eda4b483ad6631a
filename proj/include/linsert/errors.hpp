#ifndef LINSERT_ERRORS_HPP
#define LINSERT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linsert {

/// Raised when an argument violates an operation's contract
/// (unknown symbol, malformed structure, inconsistent indices, ...).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a configured exploration cap is exceeded. Carries the cap so
/// callers can report it.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(const std::string& what, std::size_t cap)
        : std::runtime_error(what + " (cap: " + std::to_string(cap) + ")"), cap_(cap) {}

    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

/// Raised when textual input cannot be decoded; carries the symbol index of
/// the offending position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace linsert

#endif
