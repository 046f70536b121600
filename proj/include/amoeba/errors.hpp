#ifndef AMOEBA_ERRORS_HPP
#define AMOEBA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace amoeba {

/// Malformed textual input (graph6, edge list, cycle notation, expression).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A size cap or state budget was exceeded; never silently truncated.
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace amoeba

#endif
