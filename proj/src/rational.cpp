#include "shivar/rational.hpp"

#include <ostream>

#include "shivar/errors.hpp"

namespace shivar {

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num();
    if (r.den() != 1) os << '/' << r.den();
    return os;
}

namespace detail {

void internal_check_failed(const char* expr, const char* file, int line,
                           const std::string& message) {
    throw InternalError(std::string("internal invariant violated: ") + message + " [" + expr +
                        " at " + file + ":" + std::to_string(line) + "]");
}

}  // namespace detail

}  // namespace shivar
