#include "shivar/types.hpp"

#include <sstream>

namespace shivar {

std::vector<Int> to_key(const IntVector& v) {
    return std::vector<Int>(v.data(), v.data() + v.size());
}

std::vector<Int> to_key(const IntMatrix& m) {
    return std::vector<Int>(m.data(), m.data() + m.size());
}

std::size_t KeyHash::operator()(const std::vector<Int>& key) const noexcept {
    // FNV-1a over the raw entries
    std::size_t h = 1469598103934665603ull;
    for (Int x : key) {
        auto u = static_cast<std::uint64_t>(x);
        for (int b = 0; b < 8; ++b) {
            h ^= (u >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    }
    return h;
}

bool lex_less(const IntVector& a, const IntVector& b) {
    const auto n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

std::string format_tuple(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ')';
    return os.str();
}

std::string format_signs(const IntVector& signs) {
    std::ostringstream os;
    os << '(';
    for (Eigen::Index i = 0; i < signs.size(); ++i) {
        if (i) os << ", ";
        os << (signs[i] < 0 ? "-" : signs[i] > 0 ? "+" : "0");
    }
    os << ')';
    return os.str();
}

}  // namespace shivar
