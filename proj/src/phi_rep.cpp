#include "shivar/phi_rep.hpp"

namespace shivar {

AffineIsometry identity_isometry(int dim) {
    return AffineIsometry{IntMatrix::Identity(dim, dim), IntVector::Zero(dim)};
}

IntMatrix reflection_matrix(const RootSystem& rs, int root_idx) {
    const int m = rs.num_positive_roots();
    IntMatrix l = IntMatrix::Zero(m, m);
    const std::vector<SignedIndex> images = rs.reflection_images(root_idx);
    for (int i = 0; i < m; ++i) {
        const SignedIndex img = images[static_cast<std::size_t>(i)];
        l(img.index, i) = img.sign;
    }
    return l;
}

IntVector reflection_offset(const RootSystem& rs, Int level, int root_idx) {
    const int m = rs.num_positive_roots();
    const IntVector& beta = rs.positive_root(root_idx);
    const std::vector<SignedIndex> images = rs.reflection_images(root_idx);
    IntVector v(m);
    for (int g = 0; g < m; ++g) {
        const SignedIndex img = images[static_cast<std::size_t>(g)];
        // (beta, s_beta(gamma)^vee), using (x, -theta^vee) = -(x, theta^vee)
        const Int pair = img.sign * pairing(rs, beta, img.index);
        v[g] = -level * pair + (img.sign < 0 ? -1 : 0);
    }
    return v;
}

AffineIsometry reflection_isometry(const RootSystem& rs, int root_idx, Int level) {
    return AffineIsometry{reflection_matrix(rs, root_idx), reflection_offset(rs, level, root_idx)};
}

AffineIsometry isometry_of(const RootSystem& rs, const AffineElement& w) {
    // Generators suffice: s_i = s_{alpha_i, 0} and s_0 = s_{theta_s, 1}.
    std::vector<AffineIsometry> gen;
    gen.reserve(static_cast<std::size_t>(rs.rank()) + 1);
    gen.push_back(reflection_isometry(rs, rs.highest_short_root_index(), 1));
    for (int i = 0; i < rs.rank(); ++i)
        gen.push_back(reflection_isometry(rs, rs.simple_position(i), 0));

    AffineIsometry f = identity_isometry(rs.num_positive_roots());
    for (int i : word_of(rs, w)) f = compose(f, gen[static_cast<std::size_t>(i)]);
    return f;
}

AffineIsometry compose(const AffineIsometry& a, const AffineIsometry& b) {
    if (a.linear.cols() != b.linear.rows())
        throw DimensionError("compose: isometry dimensions differ");
    return AffineIsometry{a.linear * b.linear, a.linear * b.translation + a.translation};
}

AffineIsometry inverse(const AffineIsometry& f) {
    IntMatrix lt = f.linear.transpose();
    return AffineIsometry{lt, -(lt * f.translation)};
}

IntVector apply(const AffineIsometry& f, const IntVector& point) {
    if (point.size() != f.linear.cols())
        throw DimensionError("apply: point has dimension " + std::to_string(point.size()) +
                             ", isometry expects " + std::to_string(f.linear.cols()));
    return f.linear * point + f.translation;
}

}  // namespace shivar
