#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace shivar {

// All alcove/root data is exact: integer coordinates in the simple-root
// basis, pairings routed through the Cartan matrix. No floating point.
using Int = std::int64_t;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

// Signed position of a root in the positive-root list: `index` into Phi+,
// `sign` = +1 for beta_index, -1 for -beta_index.
struct SignedIndex {
    int index;
    int sign;
};

// Flat copies usable as hash-map keys.
std::vector<Int> to_key(const IntVector& v);
std::vector<Int> to_key(const IntMatrix& m);

struct KeyHash {
    std::size_t operator()(const std::vector<Int>& key) const noexcept;
};

// Ascending lexicographic comparison, entry by entry.
bool lex_less(const IntVector& a, const IntVector& b);

// "(0, -1, 2)"
std::string format_tuple(const IntVector& v);
// "(0, -, +)"
std::string format_signs(const IntVector& signs);

}  // namespace shivar
