#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "shivar/errors.hpp"
#include "shivar/rational.hpp"
#include "shivar/types.hpp"

namespace shivar {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);  // throws InvalidTypeError
char family_char(Family f) noexcept;

// "B2" <-> (Family::B, 2)
struct TypeName {
    Family family;
    int rank;
};
TypeName parse_type_name(const std::string& name);  // throws InvalidTypeError
std::string type_name(Family f, int rank);

// An irreducible crystallographic root system, built by closing the simple
// roots under simple reflections from the Cartan matrix. Everything is stored
// in simple-root coordinates; short roots are normalized to squared length 1.
//
// Cartan convention (frozen): cartan()(i, j) = <alpha_j, alpha_i^vee>, i.e.
// row i is the pairing functional (. , alpha_i^vee) on simple coordinates.
//
// Canonical order of Phi+: ascending height, then coordinates compared
// descending (first differing coordinate larger comes first). This lists the
// simple roots as alpha_1, ..., alpha_n at positions 0..n-1.
//
// Immutable after construction; safe to share read-only across threads.
class RootSystem {
public:
    RootSystem(Family family, int rank);  // throws InvalidTypeError

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }
    std::string name() const { return type_name(family_, rank_); }

    const IntMatrix& cartan() const noexcept { return cartan_; }

    int num_positive_roots() const noexcept { return static_cast<int>(roots_.size()); }
    const IntVector& positive_root(int k) const { return roots_.at(k).coords; }

    // Row k = coordinates of beta_k^vee over the simple coroots (the d-vector
    // with beta_k^vee = sum_i d_i alpha_i^vee).
    const IntMatrix& coroot_matrix() const noexcept { return coroot_matrix_; }
    IntVector coroot_coordinates(int k) const { return coroot_matrix_.row(k).transpose(); }

    Rational norm_sq(int k) const { return Rational(roots_.at(k).norm_sq); }
    Int height(int k) const { return roots_.at(k).height; }
    Int coheight(int k) const { return roots_.at(k).coheight; }

    int highest_root_index() const noexcept { return highest_root_; }
    int highest_short_root_index() const noexcept { return highest_short_root_; }
    IntVector highest_root_coefficients() const { return roots_.at(highest_root_).coords; }

    // Determinant of the Cartan matrix = order of the weight lattice modulo
    // the coroot lattice.
    Int index_of_connection() const noexcept { return index_of_connection_; }

    // Column j = omega_j in simple-root coordinates; (alpha_i^vee, omega_j) = delta_ij.
    const RationalMatrix& fundamental_weights() const noexcept { return weights_; }

    // |W| = f_Phi * n! * prod(c_i), evaluated exactly.
    Int finite_weyl_order() const;

    // Canonical position of alpha_i (0-based i in [0, rank)).
    int simple_position(int i) const { return simple_positions_.at(i); }

    bool is_positive_root(const IntVector& coords) const;
    int root_index(const IntVector& coords) const;            // -1 if not positive
    SignedIndex signed_root_index(const IntVector& coords) const;  // throws NotARootError
    int coroot_index(const IntVector& d) const;                // -1 if no root has d as coroot coords

    // Image of every positive root under s_{alpha_i} (0-based simple index).
    const std::vector<SignedIndex>& simple_reflection_images(int i) const {
        return simple_images_.at(i);
    }
    // Image of every positive root under s_{beta}, beta = positive_root(root_idx).
    std::vector<SignedIndex> reflection_images(int root_idx) const;

private:
    struct PosRoot {
        IntVector coords;
        Int norm_sq;    // in {1, 2, 3}
        Int height;
        IntVector coroot;
        Int coheight;
    };

    void build_cartan();
    void close_roots();
    void finish_tables();

    Family family_;
    int rank_;
    IntMatrix cartan_;
    IntVector simple_norms_;  // squared lengths of the simple roots
    std::vector<PosRoot> roots_;
    IntMatrix coroot_matrix_;
    std::vector<int> simple_positions_;
    std::vector<std::vector<SignedIndex>> simple_images_;
    int highest_root_ = -1;
    int highest_short_root_ = -1;
    Int index_of_connection_ = 0;
    RationalMatrix weights_;

    // coords key -> index, coroot key -> index
    std::unordered_map<std::vector<Int>, int, KeyHash> root_lookup_;
    std::unordered_map<std::vector<Int>, int, KeyHash> coroot_lookup_;
};

// (x, theta^vee) for a lattice vector x (simple coordinates) and theta given
// by index into Phi+ or by arbitrary +/-Phi+ coordinates.
Int pairing(const RootSystem& rs, const IntVector& x, int root_idx);
Int pairing(const RootSystem& rs, const IntVector& x, const IntVector& root_coords);

// All pairings at once: component k is (x, beta_k^vee).
IntVector pairing_all(const RootSystem& rs, const IntVector& x);

// s_theta(gamma) = gamma - (gamma, theta^vee) theta, both in +/-Phi+.
IntVector reflect(const RootSystem& rs, const IntVector& theta, const IntVector& gamma);

inline RootSystem build_root_system(Family family, int rank) { return RootSystem(family, rank); }

}  // namespace shivar
