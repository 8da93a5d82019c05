#pragma once

#include <vector>

#include "shivar/affine_weyl.hpp"
#include "shivar/phi_rep.hpp"
#include "shivar/root_system.hpp"
#include "shivar/shi_characterization.hpp"

namespace shivar {

// Coefficient matrix of the linear parts: row theta holds the coefficients of
// P_theta over the simple variables, which coincide with the coroot
// coordinates of theta. Simple rows are unit vectors.
const IntMatrix& linear_parts(const RootSystem& rs);

// lambda_theta = k(w, theta) - P_theta(simple entries of iota(w)); values lie
// in [0, coheight(theta) - 1], with 0 at every simple root.
IntVector lambda_vector(const RootSystem& rs, const AffineElement& w);
IntVector lambda_of_tuple(const RootSystem& rs, const IntVector& shi_tuple);

// Boundary conditions only: 0 <= v_theta <= coheight(theta) - 1 everywhere.
bool is_admissible(const RootSystem& rs, const IntVector& v);

// An admissible vector is admitted when it satisfies the alcove inequality
// system itself; admitted vectors index the irreducible components.
// Throws NotAdmissibleError if v is not admissible.
bool is_admitted(const RootSystem& rs, const IntVector& v);
bool is_admitted(const ShiValidator& validator, const IntVector& v);

// n! * prod of the highest-root coefficients.
Int component_count_formula(const RootSystem& rs);

struct FiniteElementEntry {
    AffineElement element;   // translation part zero
    std::vector<int> word;   // reduced word over the finite generators 1..n
};

struct ComponentTable {
    Family family;
    int rank = 0;
    std::vector<IntVector> admitted;  // sorted ascending lexicographic
    Int count = 0;
    Int formula_count = 0;
    // Parallel to `admitted` when computed: the finite Weyl elements whose
    // lambda vector equals the component's; exactly f_Phi per component.
    std::vector<std::vector<FiniteElementEntry>> representatives;

    int component_index(const IntVector& lambda) const;  // -1 if absent
    bool has_representatives() const { return !representatives.empty(); }
};

struct EnumerateOptions {
    bool allow_huge = false;            // required for E7/E8 and |W| > finite_group_guard
    bool with_representatives = true;
    Int finite_group_guard = 1000000;
};

// Enumerates the admitted vectors as the alcoves of the fundamental
// parallelepiped: breadth-first search from the identity over right
// multiplication, keeping the elements whose tuple vanishes at every simple
// root. Deterministic; output sorted. Throws ResourceGuardError for E7/E8
// unless allow_huge is set.
ComponentTable enumerate_admitted(const RootSystem& rs, const EnumerateOptions& options = {});

// w acting on a component: push the component's representative tuple through
// the isometry of the finite part of w and read off the lambda vector of the
// image. Translations act trivially. Throws NotAdmittedError.
IntVector act_on_component(const RootSystem& rs, const AffineElement& w, const IntVector& lambda);

// All elements of the finite Weyl group with the given lambda vector; exactly
// f_Phi of them. Throws NotAdmittedError / ResourceGuardError.
std::vector<FiniteElementEntry> finite_elements_in_component(const RootSystem& rs,
                                                             const IntVector& lambda,
                                                             Int guard = 1000000);

// Number of lattice orbits on the component's integral points: one per finite
// Weyl element in the component, so the count equals f_Phi.
Int lattice_orbits_in_component(const RootSystem& rs, const IntVector& lambda, Int guard = 1000000);

// lambda(s_i) for every Coxeter generator, index 0..rank.
std::vector<IntVector> generator_components(const RootSystem& rs);

// The finite Weyl group with reduced words, breadth-first order.
// Throws ResourceGuardError when |W| exceeds the guard.
std::vector<FiniteElementEntry> enumerate_finite_group(const RootSystem& rs, Int guard = 1000000);

}  // namespace shivar
