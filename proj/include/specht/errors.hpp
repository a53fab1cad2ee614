#pragma once

#include <stdexcept>
#include <string>

namespace specht {

// Invalid input from a caller: malformed partition, e < 2, non-prime p, node
// outside a diagram, and so on. The CLI maps this to exit code 3.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// A cache file failed schema or invariant verification. CLI exit code 4.
class cache_error : public std::runtime_error {
public:
    explicit cache_error(const std::string& what) : std::runtime_error(what) {}
};

// A computed canonical-basis vector violated unitriangularity or positivity.
// This never happens unless the Fock-space action convention is broken, so it
// aborts the computation rather than returning corrupt decomposition numbers.
class convention_error : public std::logic_error {
public:
    explicit convention_error(const std::string& what)
        : std::logic_error("convention error: " + what) {}
};

} // namespace specht
