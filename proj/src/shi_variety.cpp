#include "shivar/shi_variety.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

namespace shivar {

const IntMatrix& linear_parts(const RootSystem& rs) { return rs.coroot_matrix(); }

IntVector lambda_of_tuple(const RootSystem& rs, const IntVector& shi_tuple) {
    if (shi_tuple.size() != rs.num_positive_roots())
        throw InvalidTupleError("lambda_of_tuple: wrong tuple length for " + rs.name());
    IntVector simple_entries(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) simple_entries[i] = shi_tuple[rs.simple_position(i)];
    return shi_tuple - rs.coroot_matrix() * simple_entries;
}

IntVector lambda_vector(const RootSystem& rs, const AffineElement& w) {
    const IntVector lambda = lambda_of_tuple(rs, shi_vector(rs, w));
    for (int k = 0; k < rs.num_positive_roots(); ++k)
        SHIVAR_INTERNAL_CHECK(lambda[k] >= 0 && lambda[k] <= rs.coheight(k) - 1,
                              "lambda entry outside [0, coheight-1]");
    return lambda;
}

bool is_admissible(const RootSystem& rs, const IntVector& v) {
    if (v.size() != rs.num_positive_roots()) return false;
    for (int k = 0; k < rs.num_positive_roots(); ++k)
        if (v[k] < 0 || v[k] > rs.coheight(k) - 1) return false;
    return true;
}

bool is_admitted(const ShiValidator& validator, const IntVector& v) {
    if (!is_admissible(validator.root_system(), v))
        throw NotAdmissibleError("is_admitted: vector is not admissible: " + format_tuple(v));
    return validator.is_alcove_coroot_form(v);
}

bool is_admitted(const RootSystem& rs, const IntVector& v) {
    return is_admitted(ShiValidator(rs), v);
}

Int component_count_formula(const RootSystem& rs) {
    Int count = 1;
    for (int i = 2; i <= rs.rank(); ++i) count *= i;
    const IntVector c = rs.highest_root_coefficients();
    for (int i = 0; i < rs.rank(); ++i) count *= c[i];
    return count;
}

int ComponentTable::component_index(const IntVector& lambda) const {
    const auto it = std::lower_bound(admitted.begin(), admitted.end(), lambda, lex_less);
    if (it == admitted.end() || *it != lambda) return -1;
    return static_cast<int>(it - admitted.begin());
}

std::vector<FiniteElementEntry> enumerate_finite_group(const RootSystem& rs, Int guard) {
    const Int order = rs.finite_weyl_order();
    if (order > guard)
        throw ResourceGuardError("finite Weyl group of " + rs.name() + " has " +
                                 std::to_string(order) + " elements, above the guard of " +
                                 std::to_string(guard) + "; pass allow_huge to lift it");

    std::vector<FiniteElementEntry> out;
    out.reserve(static_cast<std::size_t>(order));
    std::unordered_set<std::vector<Int>, KeyHash> seen;
    std::deque<std::size_t> frontier;

    out.push_back(FiniteElementEntry{identity_element(rs), {}});
    seen.insert(to_key(out.front().element.finite));
    frontier.push_back(0);

    while (!frontier.empty()) {
        const std::size_t at = frontier.front();
        frontier.pop_front();
        for (int i = 1; i <= rs.rank(); ++i) {
            AffineElement next = multiply(out[at].element, generator(rs, i));
            auto key = to_key(next.finite);
            if (seen.count(key)) continue;
            std::vector<int> word = out[at].word;
            word.push_back(i);
            seen.insert(std::move(key));
            out.push_back(FiniteElementEntry{std::move(next), std::move(word)});
            frontier.push_back(out.size() - 1);
        }
    }
    SHIVAR_INTERNAL_CHECK(static_cast<Int>(out.size()) == order,
                          "finite group enumeration does not match |W| formula");
    return out;
}

ComponentTable enumerate_admitted(const RootSystem& rs, const EnumerateOptions& options) {
    if (rs.family() == Family::E && rs.rank() >= 7 && !options.allow_huge)
        throw ResourceGuardError("enumeration for " + rs.name() +
                                 " is gated; pass allow_huge (--allow-huge) to run it, or use "
                                 "the count formula");

    ComponentTable table;
    table.family = rs.family();
    table.rank = rs.rank();
    table.formula_count = component_count_formula(rs);

    // Alcoves of the fundamental parallelepiped: tuples vanishing at all
    // simple roots. The search stays inside that set; it is wall-connected.
    auto in_parallelepiped = [&](const IntVector& tuple) {
        for (int i = 0; i < rs.rank(); ++i)
            if (tuple[rs.simple_position(i)] != 0) return false;
        return true;
    };

    std::unordered_set<std::vector<Int>, KeyHash> seen;
    std::deque<AffineElement> frontier;

    const AffineElement e = identity_element(rs);
    seen.insert(to_key(shi_vector(rs, e)));
    frontier.push_back(e);
    table.admitted.push_back(shi_vector(rs, e));

    while (!frontier.empty()) {
        const AffineElement at = std::move(frontier.front());
        frontier.pop_front();
        for (int i = 0; i <= rs.rank(); ++i) {
            AffineElement next = multiply(at, generator(rs, i));
            IntVector tuple = shi_vector(rs, next);
            if (!in_parallelepiped(tuple)) continue;
            auto key = to_key(tuple);
            if (seen.count(key)) continue;
            seen.insert(std::move(key));
            // Simple entries vanish, so the tuple equals its own lambda vector.
            table.admitted.push_back(std::move(tuple));
            frontier.push_back(std::move(next));
        }
    }

    std::sort(table.admitted.begin(), table.admitted.end(), lex_less);
    table.count = static_cast<Int>(table.admitted.size());
    SHIVAR_INTERNAL_CHECK(table.count == table.formula_count,
                          "admitted count disagrees with n! * prod(c_i) for " + rs.name());

    if (options.with_representatives) {
        const Int guard = options.allow_huge ? std::numeric_limits<Int>::max()
                                             : options.finite_group_guard;
        table.representatives.resize(table.admitted.size());
        for (FiniteElementEntry& entry : enumerate_finite_group(rs, guard)) {
            const int idx = table.component_index(lambda_vector(rs, entry.element));
            SHIVAR_INTERNAL_CHECK(idx >= 0, "finite element in a non-admitted component");
            table.representatives[static_cast<std::size_t>(idx)].push_back(std::move(entry));
        }
        for (const auto& reps : table.representatives)
            SHIVAR_INTERNAL_CHECK(static_cast<Int>(reps.size()) == rs.index_of_connection(),
                                  "component does not hold exactly f_Phi finite elements");
    }
    return table;
}

namespace {

void require_admitted(const RootSystem& rs, const IntVector& lambda, const char* who) {
    if (!is_admissible(rs, lambda))
        throw NotAdmittedError(std::string(who) + ": vector is not admissible: " +
                               format_tuple(lambda));
    if (!ShiValidator(rs).is_alcove_coroot_form(lambda))
        throw NotAdmittedError(std::string(who) + ": vector is admissible but not admitted: " +
                               format_tuple(lambda));
}

}  // namespace

IntVector act_on_component(const RootSystem& rs, const AffineElement& w, const IntVector& lambda) {
    require_admitted(rs, lambda, "act_on_component");
    // The representative alcove of the component has tuple lambda itself, and
    // the action factors through the finite part.
    const AffineElement finite_part{IntVector::Zero(rs.rank()), w.finite};
    const IntVector image = apply(isometry_of(rs, finite_part), lambda);
    IntVector result = lambda_of_tuple(rs, image);
    SHIVAR_INTERNAL_CHECK(ShiValidator(rs).is_alcove_coroot_form(result),
                          "action image is not admitted");
    return result;
}

std::vector<FiniteElementEntry> finite_elements_in_component(const RootSystem& rs,
                                                             const IntVector& lambda, Int guard) {
    require_admitted(rs, lambda, "finite_elements_in_component");
    std::vector<FiniteElementEntry> out;
    for (FiniteElementEntry& entry : enumerate_finite_group(rs, guard)) {
        if (lambda_vector(rs, entry.element) == lambda) out.push_back(std::move(entry));
    }
    SHIVAR_INTERNAL_CHECK(static_cast<Int>(out.size()) == rs.index_of_connection(),
                          "component does not hold exactly f_Phi finite elements");
    return out;
}

Int lattice_orbits_in_component(const RootSystem& rs, const IntVector& lambda, Int guard) {
    // Each lattice orbit of integral points holds exactly one finite Weyl
    // element (two would differ by a nonzero translation, impossible in W).
    return static_cast<Int>(finite_elements_in_component(rs, lambda, guard).size());
}

std::vector<IntVector> generator_components(const RootSystem& rs) {
    std::vector<IntVector> out;
    out.reserve(static_cast<std::size_t>(rs.rank()) + 1);
    for (int i = 0; i <= rs.rank(); ++i) out.push_back(lambda_vector(rs, generator(rs, i)));
    return out;
}

}  // namespace shivar
