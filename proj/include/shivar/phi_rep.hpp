#pragma once

#include "shivar/affine_weyl.hpp"
#include "shivar/root_system.hpp"

namespace shivar {

// Affine isometry of R^m acting on Shi tuples: x -> linear * x + translation.
// The linear part is always a signed permutation matrix, so the inverse is
// the transpose.
struct AffineIsometry {
    IntMatrix linear;
    IntVector translation;

    bool operator==(const AffineIsometry& o) const {
        return linear == o.linear && translation == o.translation;
    }
    bool operator!=(const AffineIsometry& o) const { return !(*this == o); }
};

AffineIsometry identity_isometry(int dim);

// Signed permutation of the reflection s_beta on Phi+: entry (j, i) is +1 when
// s_beta maps the i-th positive root to the j-th, -1 when it maps it to minus
// the j-th. Symmetric involution.
IntMatrix reflection_matrix(const RootSystem& rs, int root_idx);

// Offset of the affine reflection s_{beta, level} in tuple space: the entry at
// gamma is -level*(beta, s_beta(gamma)^vee), with an extra -1 when s_beta
// flips gamma to a negative root.
IntVector reflection_offset(const RootSystem& rs, Int level, int root_idx);

// F(s_{beta, level}): the isometry realizing left multiplication by the
// affine reflection on Shi tuples.
AffineIsometry reflection_isometry(const RootSystem& rs, int root_idx, Int level);

// F(w) for an arbitrary element, composed along its descent word. Satisfies
// F(uv) = F(u) F(v) and F(w)(iota(x)) = iota(wx).
AffineIsometry isometry_of(const RootSystem& rs, const AffineElement& w);

// a after b: (a o b)(x) = a(b(x)).
AffineIsometry compose(const AffineIsometry& a, const AffineIsometry& b);
AffineIsometry inverse(const AffineIsometry& f);

IntVector apply(const AffineIsometry& f, const IntVector& point);  // throws DimensionError

}  // namespace shivar
