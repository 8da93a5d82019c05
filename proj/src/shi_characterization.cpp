#include "shivar/shi_characterization.hpp"

#include <sstream>

namespace shivar {

ShiValidator::ShiValidator(const RootSystem& rs) : rs_(&rs) {
    const int m = rs.num_positive_roots();
    for (int a = 0; a < m; ++a) {
        for (int b = a; b < m; ++b) {
            const int g_coroot =
                rs.coroot_index(rs.coroot_coordinates(a) + rs.coroot_coordinates(b));
            if (g_coroot >= 0) coroot_triples_.push_back(AlcoveTriple{a, b, g_coroot});
            const int g_norm = rs.root_index(rs.positive_root(a) + rs.positive_root(b));
            if (g_norm >= 0) norm_triples_.push_back(AlcoveTriple{a, b, g_norm});
        }
    }
    norms_.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) norms_.push_back(rs.norm_sq(k));
}

void ShiValidator::check_length(const IntVector& t) const {
    if (t.size() != rs_->num_positive_roots())
        throw InvalidTupleError("tuple has length " + std::to_string(t.size()) + ", expected " +
                                std::to_string(rs_->num_positive_roots()) + " for " + rs_->name());
}

bool ShiValidator::is_alcove_coroot_form(const IntVector& t) const {
    check_length(t);
    for (const AlcoveTriple& tr : coroot_triples_) {
        const Int lo = t[tr.a] + t[tr.b];
        if (t[tr.g] < lo || t[tr.g] > lo + 1) return false;
    }
    return true;
}

bool ShiValidator::is_alcove_norm_form(const IntVector& t) const {
    check_length(t);
    for (const AlcoveTriple& tr : norm_triples_) {
        const Rational& na = norms_[static_cast<std::size_t>(tr.a)];
        const Rational& nb = norms_[static_cast<std::size_t>(tr.b)];
        const Rational& ng = norms_[static_cast<std::size_t>(tr.g)];
        const Rational base = na * Rational(t[tr.a]) + nb * Rational(t[tr.b]);
        const Rational mid = ng * Rational(t[tr.g] + 1);
        if (mid < base + Rational(1)) return false;
        if (base + na + nb + ng - Rational(1) < mid) return false;
    }
    return true;
}

std::optional<Violation> ShiValidator::first_violation(Criterion c, const IntVector& t) const {
    check_length(t);
    if (c == Criterion::coroot) {
        for (const AlcoveTriple& tr : coroot_triples_) {
            const Int lo = t[tr.a] + t[tr.b];
            if (t[tr.g] < lo) return Violation{c, tr, false};
            if (t[tr.g] > lo + 1) return Violation{c, tr, true};
        }
        return std::nullopt;
    }
    for (const AlcoveTriple& tr : norm_triples_) {
        const Rational& na = norms_[static_cast<std::size_t>(tr.a)];
        const Rational& nb = norms_[static_cast<std::size_t>(tr.b)];
        const Rational& ng = norms_[static_cast<std::size_t>(tr.g)];
        const Rational base = na * Rational(t[tr.a]) + nb * Rational(t[tr.b]);
        const Rational mid = ng * Rational(t[tr.g] + 1);
        if (mid < base + Rational(1)) return Violation{c, tr, false};
        if (base + na + nb + ng - Rational(1) < mid) return Violation{c, tr, true};
    }
    return std::nullopt;
}

std::string describe(const RootSystem& rs, const Violation& v) {
    std::ostringstream os;
    os << (v.criterion == Criterion::coroot ? "coroot" : "norm") << "-form "
       << (v.upper ? "upper" : "lower") << " bound violated on (alpha, beta, gamma) = ("
       << format_tuple(rs.positive_root(v.triple.a)) << ", "
       << format_tuple(rs.positive_root(v.triple.b)) << ", "
       << format_tuple(rs.positive_root(v.triple.g)) << ")";
    return os.str();
}

}  // namespace shivar
