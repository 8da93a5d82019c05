#pragma once

#include <optional>
#include <vector>

#include "shivar/root_system.hpp"

namespace shivar {

// Indices into Phi+ of a constraint triple (alpha, beta, gamma), with
// alpha <= beta in canonical order.
struct AlcoveTriple {
    int a;
    int b;
    int g;
};

enum class Criterion { coroot, norm };

struct Violation {
    Criterion criterion;
    AlcoveTriple triple;
    bool upper;  // which of the two inequalities failed
};

std::string describe(const RootSystem& rs, const Violation& v);

// Decides whether an arbitrary Phi+-tuple of integers is the coefficient
// tuple of an alcove, by either of the two classical criteria:
//
//   coroot form: for every pair with gamma := (alpha^vee + beta^vee)^vee a
//   positive root,   k_a + k_b <= k_g <= k_a + k_b + 1.
//
//   norm form: for every pair with alpha + beta a positive root,
//   |a|^2 k_a + |b|^2 k_b + 1 <= |a+b|^2 (k_{a+b} + 1)
//                             <= |a|^2 k_a + |b|^2 k_b + |a|^2 + |b|^2 + |a+b|^2 - 1,
//   evaluated in exact rational arithmetic.
//
// The two criteria are implemented independently so that their agreement is a
// meaningful cross-check; each precomputes its triple set once per instance.
class ShiValidator {
public:
    explicit ShiValidator(const RootSystem& rs);
    // the validator only borrows the root system, so it must outlive this
    explicit ShiValidator(RootSystem&&) = delete;

    const RootSystem& root_system() const noexcept { return *rs_; }
    const std::vector<AlcoveTriple>& coroot_triples() const noexcept { return coroot_triples_; }
    const std::vector<AlcoveTriple>& norm_triples() const noexcept { return norm_triples_; }

    bool is_alcove_coroot_form(const IntVector& t) const;  // throws InvalidTupleError on length
    bool is_alcove_norm_form(const IntVector& t) const;

    std::optional<Violation> first_violation(Criterion c, const IntVector& t) const;

private:
    void check_length(const IntVector& t) const;

    const RootSystem* rs_;
    std::vector<AlcoveTriple> coroot_triples_;
    std::vector<AlcoveTriple> norm_triples_;
    std::vector<Rational> norms_;  // cached ||beta_k||^2
};

}  // namespace shivar
