#include "shivar/affine_weyl.hpp"

#include <algorithm>

#include "shivar/linalg.hpp"
#include "shivar/shi_characterization.hpp"

namespace shivar {

namespace {

IntMatrix simple_reflection_matrix(const RootSystem& rs, int i) {
    // s_i(x) = x - (x, alpha_i^vee) alpha_i; on coordinates this subtracts
    // Cartan row i from entry i.
    IntMatrix m = IntMatrix::Identity(rs.rank(), rs.rank());
    m.row(i) -= rs.cartan().row(i);
    return m;
}

IntMatrix root_reflection_matrix(const RootSystem& rs, int root_idx) {
    const IntVector& beta = rs.positive_root(root_idx);
    const IntVector d = rs.coroot_coordinates(root_idx);
    IntMatrix m = IntMatrix::Identity(rs.rank(), rs.rank());
    m -= beta * (d.transpose() * rs.cartan());
    return m;
}

void check_tuple_length(const RootSystem& rs, const IntVector& v, const char* who) {
    if (v.size() != rs.num_positive_roots())
        throw InvalidTupleError(std::string(who) + ": tuple has length " +
                                std::to_string(v.size()) + ", expected " +
                                std::to_string(rs.num_positive_roots()) + " for " + rs.name());
}

void check_alcove_tuple(const RootSystem& rs, const IntVector& v, const char* who) {
    check_tuple_length(rs, v, who);
    const ShiValidator validator(rs);
    if (!validator.is_alcove_coroot_form(v))
        throw InvalidTupleError(std::string(who) + ": not an alcove tuple: " + format_tuple(v));
}

// iota(s_i w) from iota(w), no validity checking.
IntVector left_mul_shi_unchecked(const RootSystem& rs, int i, const IntVector& v) {
    const int m = rs.num_positive_roots();
    const bool affine = (i == 0);
    const std::vector<SignedIndex>& images =
        affine ? rs.reflection_images(rs.highest_short_root_index())
               : rs.simple_reflection_images(i - 1);
    const int special = affine ? rs.highest_short_root_index() : rs.simple_position(i - 1);
    const Int k_s = affine ? 1 : -1;  // k(s_i, beta) is nonzero only at `special`

    IntVector out(m);
    for (int k = 0; k < m; ++k) {
        const SignedIndex img = images[static_cast<std::size_t>(k)];
        out[k] = img.sign * v[img.index] + (k == special ? k_s : 0);
    }
    return out;
}

}  // namespace

AffineElement identity_element(const RootSystem& rs) {
    return AffineElement{IntVector::Zero(rs.rank()), IntMatrix::Identity(rs.rank(), rs.rank())};
}

AffineElement generator(const RootSystem& rs, int i) {
    if (i < 0 || i > rs.rank())
        throw std::out_of_range("generator index " + std::to_string(i) + " out of range 0.." +
                                std::to_string(rs.rank()));
    if (i == 0) return affine_reflection(rs, rs.highest_short_root_index(), 1);
    return AffineElement{IntVector::Zero(rs.rank()), simple_reflection_matrix(rs, i - 1)};
}

AffineElement affine_reflection(const RootSystem& rs, int root_idx, Int level) {
    return AffineElement{level * rs.positive_root(root_idx), root_reflection_matrix(rs, root_idx)};
}

AffineElement translation_element(const RootSystem& rs, const IntVector& x) {
    if (x.size() != rs.rank()) throw DimensionError("translation_element: wrong dimension");
    return AffineElement{x, IntMatrix::Identity(rs.rank(), rs.rank())};
}

AffineElement multiply(const AffineElement& a, const AffineElement& b) {
    return AffineElement{a.translation + a.finite * b.translation, a.finite * b.finite};
}

AffineElement inverse(const AffineElement& a) {
    IntMatrix inv = unimodular_inverse(a.finite);
    return AffineElement{-(inv * a.translation), std::move(inv)};
}

AffineElement from_word(const RootSystem& rs, std::span<const int> word) {
    AffineElement w = identity_element(rs);
    for (int i : word) w = multiply(w, generator(rs, i));
    return w;
}

IntVector shi_vector(const RootSystem& rs, const AffineElement& w) {
    const int m = rs.num_positive_roots();
    // k(wbar, beta) = -1 exactly when wbar^{-1}(beta) is negative, i.e. when
    // beta = -wbar(theta) for some positive theta.
    IntVector base = IntVector::Zero(m);
    for (int k = 0; k < m; ++k) {
        const IntVector image = w.finite * rs.positive_root(k);
        const SignedIndex s = rs.signed_root_index(image);
        if (s.sign < 0) base[s.index] = -1;
    }
    return base + pairing_all(rs, w.translation);
}

Int shi_length(const IntVector& shi) { return shi.cwiseAbs().sum(); }

Int length(const RootSystem& rs, const AffineElement& w) { return shi_length(shi_vector(rs, w)); }

IntVector sign_vector(const IntVector& shi) {
    IntVector s(shi.size());
    for (Eigen::Index i = 0; i < shi.size(); ++i) s[i] = shi[i] > 0 ? 1 : shi[i] < 0 ? -1 : 0;
    return s;
}

IntVector left_mul_shi(const RootSystem& rs, int i, const IntVector& v) {
    if (i < 0 || i > rs.rank())
        throw std::out_of_range("generator index " + std::to_string(i) + " out of range 0.." +
                                std::to_string(rs.rank()));
    check_alcove_tuple(rs, v, "left_mul_shi");
    return left_mul_shi_unchecked(rs, i, v);
}

std::vector<int> word_from_shi_vector(const RootSystem& rs, const IntVector& v) {
    check_alcove_tuple(rs, v, "word_from_shi_vector");
    std::vector<int> word;
    IntVector current = v;
    Int remaining = shi_length(current);
    word.reserve(static_cast<std::size_t>(remaining));
    while (remaining > 0) {
        bool found = false;
        for (int i = 0; i <= rs.rank(); ++i) {
            IntVector next = left_mul_shi_unchecked(rs, i, current);
            if (shi_length(next) < remaining) {
                word.push_back(i);
                current = std::move(next);
                --remaining;
                SHIVAR_INTERNAL_CHECK(shi_length(current) == remaining,
                                      "left descent did not reduce length by one");
                found = true;
                break;
            }
        }
        SHIVAR_INTERNAL_CHECK(found, "no left descent on a nonzero alcove tuple");
    }
    return word;
}

AffineElement element_from_shi_vector(const RootSystem& rs, const IntVector& v) {
    // v = iota(s_{i_1} ... s_{i_k}) for the descent word, so the product of
    // the recorded generators rebuilds the element.
    return from_word(rs, word_from_shi_vector(rs, v));
}

std::vector<int> word_of(const RootSystem& rs, const AffineElement& w) {
    return word_from_shi_vector(rs, shi_vector(rs, w));
}

}  // namespace shivar
