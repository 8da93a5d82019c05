#pragma once

#include <span>
#include <vector>

#include "shivar/root_system.hpp"

namespace shivar {

// Element of the affine Weyl group in normal form tau_x * wbar: an integer
// lattice translation x (simple coordinates) followed by a finite Weyl part
// given as its matrix on simple coordinates. The normal form is unique, so
// equality is field-wise. Pure value type.
struct AffineElement {
    IntVector translation;
    IntMatrix finite;

    bool operator==(const AffineElement& o) const {
        return translation == o.translation && finite == o.finite;
    }
    bool operator!=(const AffineElement& o) const { return !(*this == o); }

    bool is_identity() const {
        return translation.isZero() && finite.isIdentity();
    }
};

AffineElement identity_element(const RootSystem& rs);

// Coxeter generators of the affine group: index 0 is the affine one,
// s_0 = tau_{theta_s} s_{theta_s} with theta_s the highest short root;
// indices 1..rank are the simple reflections.
AffineElement generator(const RootSystem& rs, int i);  // throws std::out_of_range

// s_{beta, level} = tau_{level * beta} s_beta for beta = positive_root(root_idx).
AffineElement affine_reflection(const RootSystem& rs, int root_idx, Int level);

AffineElement translation_element(const RootSystem& rs, const IntVector& x);

// Semidirect product law: (x, u)(y, v) = (x + u y, u v).
AffineElement multiply(const AffineElement& a, const AffineElement& b);
AffineElement inverse(const AffineElement& a);
AffineElement from_word(const RootSystem& rs, std::span<const int> word);

// The Shi coefficient tuple iota(w) = (k(w, beta))_{beta in Phi+} in canonical
// order: k(wbar, beta) in {0, -1} by the finite-part rule, shifted by the
// pairing of the translation with each coroot.
IntVector shi_vector(const RootSystem& rs, const AffineElement& w);

// Sum of |k| entries; equals the Coxeter length of the element.
Int shi_length(const IntVector& shi);
Int length(const RootSystem& rs, const AffineElement& w);

// Entrywise signs of a Shi tuple, values in {-1, 0, +1}.
IntVector sign_vector(const IntVector& shi);

// iota(s_i w) computed directly on the tuple, without building s_i w:
// k(s_i w, beta) = k(w, sbar_i(beta)) + k(s_i, beta), with the convention
// k(w, -gamma) = -k(w, gamma) when the reflected root is negative.
// Throws InvalidTupleError unless v is a valid alcove tuple.
IntVector left_mul_shi(const RootSystem& rs, int i, const IntVector& v);

// Inverse of the tuple bijection: the unique element with iota(w) = v.
// Throws InvalidTupleError unless v is a valid alcove tuple.
AffineElement element_from_shi_vector(const RootSystem& rs, const IntVector& v);

// Descent word: v = iota(s_{i_1} ... s_{i_k}) with k = shi_length(v).
// Ties broken by smallest generator index, so the word is deterministic.
std::vector<int> word_from_shi_vector(const RootSystem& rs, const IntVector& v);

std::vector<int> word_of(const RootSystem& rs, const AffineElement& w);

}  // namespace shivar
