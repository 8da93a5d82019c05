#include "shivar/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "shivar/linalg.hpp"

namespace shivar {

Family family_from_char(char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        case 'E': return Family::E;
        case 'F': return Family::F;
        case 'G': return Family::G;
        default: throw InvalidTypeError(std::string("unknown family '") + c + "'");
    }
}

char family_char(Family f) noexcept { return static_cast<char>(f); }

TypeName parse_type_name(const std::string& name) {
    if (name.size() < 2) throw InvalidTypeError("type name must look like A2, B3, E8: " + name);
    const Family family = family_from_char(name[0]);
    int rank = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            throw InvalidTypeError("bad rank in type name: " + name);
        rank = rank * 10 + (name[i] - '0');
        if (rank > 99) throw InvalidTypeError("bad rank in type name: " + name);
    }
    return TypeName{family, rank};
}

std::string type_name(Family f, int rank) { return family_char(f) + std::to_string(rank); }

namespace {

void validate_type(Family family, int rank) {
    bool ok = false;
    switch (family) {
        case Family::A: ok = rank >= 1; break;
        case Family::B: ok = rank >= 2; break;
        case Family::C: ok = rank >= 2; break;
        case Family::D: ok = rank >= 4; break;
        case Family::E: ok = rank >= 6 && rank <= 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
    }
    if (!ok || rank > 8)
        throw InvalidTypeError("not a valid irreducible type: " + type_name(family, rank) +
                               " (valid: A1..A8, B2..B8, C2..C8, D4..D8, E6..E8, F4, G2)");
}

Int classical_positive_count(Family family, Int n) {
    switch (family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return -1;
}

// Height ascending, then coordinates descending (first differing coordinate
// larger comes first). Lists the simples as alpha_1, ..., alpha_n.
bool canonical_before(const IntVector& a, Int ha, const IntVector& b, Int hb) {
    if (ha != hb) return ha < hb;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

}  // namespace

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
    validate_type(family, rank);
    build_cartan();
    close_roots();
    finish_tables();
}

void RootSystem::build_cartan() {
    const int n = rank_;
    cartan_ = IntMatrix::Zero(n, n);
    simple_norms_ = IntVector::Ones(n);
    for (int i = 0; i < n; ++i) cartan_(i, i) = 2;

    // edge (i, j) with cartan_(i, j) = <alpha_j, alpha_i^vee>
    auto chain_edge = [&](int i, int j) {
        cartan_(i, j) = -1;
        cartan_(j, i) = -1;
    };

    switch (family_) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
            break;
        case Family::B:
            // alpha_n short, all others long
            for (int i = 0; i + 2 < n; ++i) chain_edge(i, i + 1);
            cartan_(n - 2, n - 1) = -1;
            cartan_(n - 1, n - 2) = -2;
            for (int i = 0; i + 1 < n; ++i) simple_norms_[i] = 2;
            break;
        case Family::C:
            // alpha_n long, all others short
            for (int i = 0; i + 2 < n; ++i) chain_edge(i, i + 1);
            cartan_(n - 2, n - 1) = -2;
            cartan_(n - 1, n - 2) = -1;
            simple_norms_[n - 1] = 2;
            break;
        case Family::D:
            for (int i = 0; i + 3 < n; ++i) chain_edge(i, i + 1);
            chain_edge(n - 3, n - 2);
            chain_edge(n - 3, n - 1);
            break;
        case Family::E:
            // Bourbaki: node 2 hangs off node 4; chain 1-3-4-5-...-n
            chain_edge(0, 2);
            chain_edge(1, 3);
            chain_edge(2, 3);
            for (int i = 3; i + 1 < n; ++i) chain_edge(i, i + 1);
            break;
        case Family::F:
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            chain_edge(0, 1);
            cartan_(1, 2) = -1;
            cartan_(2, 1) = -2;
            chain_edge(2, 3);
            simple_norms_[0] = simple_norms_[1] = 2;
            break;
        case Family::G:
            // alpha_1 short, alpha_2 long
            cartan_(0, 1) = -3;
            cartan_(1, 0) = -1;
            simple_norms_[1] = 3;
            break;
    }

    // 2(alpha_i, alpha_j) = cartan_(i,j)*norm_i = cartan_(j,i)*norm_j
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            SHIVAR_INTERNAL_CHECK(
                cartan_(i, j) * simple_norms_[i] == cartan_(j, i) * simple_norms_[j],
                "Cartan matrix inconsistent with root lengths");
}

void RootSystem::close_roots() {
    const int n = rank_;
    std::unordered_map<std::vector<Int>, int, KeyHash> seen;
    std::deque<int> queue;

    auto add_root = [&](const IntVector& coords, Int norm) {
        const auto key = to_key(coords);
        if (seen.count(key)) return;
        PosRoot r;
        r.coords = coords;
        r.norm_sq = norm;
        r.height = coords.sum();
        roots_.push_back(std::move(r));
        seen.emplace(key, static_cast<int>(roots_.size()) - 1);
        queue.push_back(static_cast<int>(roots_.size()) - 1);
    };

    for (int i = 0; i < n; ++i) {
        IntVector e = IntVector::Zero(n);
        e[i] = 1;
        add_root(e, simple_norms_[i]);
    }

    // Orbit closure under simple reflections; reflections preserve length.
    while (!queue.empty()) {
        const int idx = queue.front();
        queue.pop_front();
        const IntVector coords = roots_[idx].coords;
        const Int norm = roots_[idx].norm_sq;
        const IntVector pair_values = cartan_ * coords;  // entry i = (coords, alpha_i^vee)
        for (int i = 0; i < n; ++i) {
            IntVector image = coords;
            image[i] -= pair_values[i];
            if ((image.array() >= 0).all() && image.sum() > 0) add_root(image, norm);
        }
    }

    std::sort(roots_.begin(), roots_.end(), [](const PosRoot& a, const PosRoot& b) {
        return canonical_before(a.coords, a.height, b.coords, b.height);
    });

    SHIVAR_INTERNAL_CHECK(
        static_cast<Int>(roots_.size()) == classical_positive_count(family_, rank_),
        "positive root count does not match the classical value for " + name());
}

void RootSystem::finish_tables() {
    const int n = rank_;
    const int m = num_positive_roots();

    root_lookup_.clear();
    for (int k = 0; k < m; ++k) root_lookup_.emplace(to_key(roots_[k].coords), k);

    simple_positions_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        IntVector e = IntVector::Zero(n);
        e[i] = 1;
        const auto it = root_lookup_.find(to_key(e));
        SHIVAR_INTERNAL_CHECK(it != root_lookup_.end(), "simple root missing from closure");
        simple_positions_[i] = it->second;
    }

    // coroot coordinates: theta = sum c_i alpha_i  =>  theta^vee = sum d_i alpha_i^vee
    // with d_i = c_i * ||alpha_i||^2 / ||theta||^2 (must be integral).
    coroot_matrix_ = IntMatrix::Zero(m, n);
    for (int k = 0; k < m; ++k) {
        PosRoot& r = roots_[k];
        r.coroot = IntVector::Zero(n);
        for (int i = 0; i < n; ++i) {
            const Int num = r.coords[i] * simple_norms_[i];
            SHIVAR_INTERNAL_CHECK(num % r.norm_sq == 0,
                                  "coroot coordinates not integral for " + name());
            r.coroot[i] = num / r.norm_sq;
            SHIVAR_INTERNAL_CHECK(r.coroot[i] >= 0, "negative coroot coordinate");
        }
        r.coheight = r.coroot.sum();
        coroot_matrix_.row(k) = r.coroot.transpose();
    }

    coroot_lookup_.clear();
    for (int k = 0; k < m; ++k) {
        const bool inserted = coroot_lookup_.emplace(to_key(roots_[k].coroot), k).second;
        SHIVAR_INTERNAL_CHECK(inserted, "coroot coordinates collide");
    }

    // highest root / highest short root (unique maxima by height)
    highest_root_ = m - 1;
    highest_short_root_ = -1;
    for (int k = m - 1; k >= 0; --k) {
        if (roots_[k].norm_sq == 1) {
            highest_short_root_ = k;
            break;
        }
    }
    SHIVAR_INTERNAL_CHECK(highest_short_root_ >= 0, "no short root found");
    SHIVAR_INTERNAL_CHECK(m < 2 || roots_[m - 1].height > roots_[m - 2].height,
                          "highest root is not unique");

    index_of_connection_ = int_determinant(cartan_);
    SHIVAR_INTERNAL_CHECK(index_of_connection_ > 0, "Cartan determinant not positive");

    // omega_j = column j of cartan^{-1}: (alpha_i^vee, omega_j) = (C * t_j)_i = delta_ij.
    const IntMatrix adj = int_adjugate(cartan_);
    weights_ = RationalMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) weights_(i, j) = Rational(adj(i, j), index_of_connection_);

    simple_images_.resize(n);
    for (int i = 0; i < n; ++i) {
        simple_images_[i].resize(m);
        for (int k = 0; k < m; ++k) {
            IntVector image = roots_[k].coords;
            image[i] -= (cartan_.row(i) * roots_[k].coords).value();
            simple_images_[i][k] = signed_root_index(image);
        }
    }
}

Int RootSystem::finite_weyl_order() const {
    Int order = index_of_connection_;
    for (int i = 2; i <= rank_; ++i) order *= i;
    const IntVector c = highest_root_coefficients();
    for (int i = 0; i < rank_; ++i) order *= c[i];
    return order;
}

bool RootSystem::is_positive_root(const IntVector& coords) const {
    return root_index(coords) >= 0;
}

int RootSystem::root_index(const IntVector& coords) const {
    if (coords.size() != rank_) return -1;
    const auto it = root_lookup_.find(to_key(coords));
    return it == root_lookup_.end() ? -1 : it->second;
}

SignedIndex RootSystem::signed_root_index(const IntVector& coords) const {
    int idx = root_index(coords);
    if (idx >= 0) return SignedIndex{idx, +1};
    idx = root_index(IntVector(-coords));
    if (idx >= 0) return SignedIndex{idx, -1};
    throw NotARootError("not a root of " + name() + ": " + format_tuple(coords));
}

int RootSystem::coroot_index(const IntVector& d) const {
    if (d.size() != rank_) return -1;
    const auto it = coroot_lookup_.find(to_key(d));
    return it == coroot_lookup_.end() ? -1 : it->second;
}

std::vector<SignedIndex> RootSystem::reflection_images(int root_idx) const {
    const int m = num_positive_roots();
    const IntVector& theta = positive_root(root_idx);
    std::vector<SignedIndex> images(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const IntVector image =
            roots_[k].coords - pairing(*this, roots_[k].coords, root_idx) * theta;
        images[static_cast<std::size_t>(k)] = signed_root_index(image);
    }
    return images;
}

Int pairing(const RootSystem& rs, const IntVector& x, int root_idx) {
    if (x.size() != rs.rank()) throw DimensionError("pairing: vector has wrong dimension");
    return (rs.coroot_matrix().row(root_idx) * (rs.cartan() * x)).value();
}

Int pairing(const RootSystem& rs, const IntVector& x, const IntVector& root_coords) {
    const SignedIndex s = rs.signed_root_index(root_coords);
    return s.sign * pairing(rs, x, s.index);
}

IntVector pairing_all(const RootSystem& rs, const IntVector& x) {
    if (x.size() != rs.rank()) throw DimensionError("pairing_all: vector has wrong dimension");
    return rs.coroot_matrix() * (rs.cartan() * x);
}

IntVector reflect(const RootSystem& rs, const IntVector& theta, const IntVector& gamma) {
    const SignedIndex st = rs.signed_root_index(theta);
    rs.signed_root_index(gamma);  // validate gamma as well
    // s_theta = s_{-theta}; use the positive representative.
    const IntVector& beta = rs.positive_root(st.index);
    const IntVector image = gamma - pairing(rs, gamma, st.index) * beta;
    SHIVAR_INTERNAL_CHECK(rs.root_index(image) >= 0 || rs.root_index(IntVector(-image)) >= 0,
                          "reflection left +/-Phi+");
    return image;
}

}  // namespace shivar
