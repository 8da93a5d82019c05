#include "shivar/linalg.hpp"

#include "shivar/errors.hpp"

namespace shivar {

Int int_determinant(const IntMatrix& m) {
    SHIVAR_INTERNAL_CHECK(m.rows() == m.cols(), "determinant of non-square matrix");
    const Eigen::Index n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1;
    Int prev = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.row(k).swap(a.row(p));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                const Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                SHIVAR_INTERNAL_CHECK(t % prev == 0, "Bareiss division not exact");
                a(i, j) = t / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix int_adjugate(const IntMatrix& m) {
    SHIVAR_INTERNAL_CHECK(m.rows() == m.cols(), "adjugate of non-square matrix");
    const Eigen::Index n = m.rows();
    IntMatrix adj(n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            for (Eigen::Index r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (Eigen::Index c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mr, mc) = m(r, c);
                    ++mc;
                }
                ++mr;
            }
            const Int cof = int_determinant(minor);
            adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;  // transpose of cofactors
        }
    }
    return adj;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    const Int det = int_determinant(m);
    SHIVAR_INTERNAL_CHECK(det == 1 || det == -1, "matrix is not unimodular");
    IntMatrix inv = int_adjugate(m);
    if (det == -1) inv = -inv;
    return inv;
}

bool is_signed_permutation(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    const Eigen::Index n = m.rows();
    std::vector<int> col_hits(static_cast<std::size_t>(n), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
        int row_hits = 0;
        for (Eigen::Index j = 0; j < n; ++j) {
            const Int v = m(i, j);
            if (v == 0) continue;
            if (v != 1 && v != -1) return false;
            ++row_hits;
            ++col_hits[static_cast<std::size_t>(j)];
        }
        if (row_hits != 1) return false;
    }
    for (int c : col_hits)
        if (c != 1) return false;
    return true;
}

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

RationalVector to_rational(const IntVector& v) {
    RationalVector r(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

}  // namespace shivar
