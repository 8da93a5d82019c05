#pragma once

#include <stdexcept>
#include <string>

namespace shivar {

// Bad (family, rank) pair.
class InvalidTypeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A coordinate vector that is not in +/-Phi+ where a root was required.
class NotARootError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A Phi+-tuple with the wrong length, or one that fails a required validity
// precondition (e.g. not an alcove tuple).
class InvalidTupleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotAdmissibleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotAdmittedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation refused because it would exceed a resource guard; the
// message names the flag that lifts the guard.
class ResourceGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated internal invariant. Always a bug, never a user error.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {
[[noreturn]] void internal_check_failed(const char* expr, const char* file, int line,
                                        const std::string& message);
}

#define SHIVAR_INTERNAL_CHECK(cond, message)                                              \
    do {                                                                                  \
        if (!(cond)) ::shivar::detail::internal_check_failed(#cond, __FILE__, __LINE__, (message)); \
    } while (0)

}  // namespace shivar
