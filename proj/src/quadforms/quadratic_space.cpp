#include "quadrilift/quadratic_space.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "quadrilift/error.hpp"

namespace quadrilift {

namespace {

void for_each_multiset(std::size_t size, std::size_t kinds,
                       const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> pick(size, 0);
    while (true) {
        if (visit(pick)) return;
        std::size_t i = size;
        while (i > 0 && pick[i - 1] + 1 == kinds) --i;
        if (i == 0) return;
        const std::size_t next = pick[i - 1] + 1;
        for (std::size_t j = i - 1; j < size; ++j) pick[j] = next;
    }
}

std::vector<Rational> concat(std::vector<Rational> a, const std::vector<Rational>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Every diagonal form of dimension `size` over the local field, up to isometry, is
/// congruent to one built from class representatives. Beyond dimension 3 the
/// invariants are realized after padding a ternary part with 1s.
void for_each_local_form(std::size_t size, const Place& place,
                         const std::function<bool(const std::vector<Rational>&)>& visit) {
    if (size == 0) {
        visit({});
        return;
    }
    if (place.is_real()) {
        for (std::size_t neg = 0; neg <= size; ++neg) {
            std::vector<Rational> form(size, Rational(1));
            for (std::size_t i = 0; i < neg; ++i) form[i] = -1;
            if (visit(form)) return;
        }
        return;
    }
    const auto reps = local_class_representatives(place);
    const std::size_t core = std::min<std::size_t>(size, 3);
    for_each_multiset(core, reps.size(), [&](const std::vector<std::size_t>& pick) {
        std::vector<Rational> form(size - core, Rational(1));
        for (auto i : pick) form.push_back(reps[i]);
        return visit(form);
    });
}

}  // namespace

QuadraticSpace::QuadraticSpace(std::vector<Rational> diag) : diag_(std::move(diag)) {
    if (diag_.empty()) throw DomainError("quadratic space must have dimension >= 1");
    for (const auto& a : diag_) {
        if (a.is_zero()) throw DomainError("quadratic space entries must be nonzero");
    }
}

Rational QuadraticSpace::value(const Vector& v) const { return bilinear(v, v); }

Rational QuadraticSpace::bilinear(const Vector& v, const Vector& w) const {
    if (v.size() != dim() || w.size() != dim()) throw PreconditionError("vector length does not match dimension");
    Rational s = 0;
    for (std::size_t i = 0; i < dim(); ++i) s += diag_[i] * v[i] * w[i];
    return s;
}

QuadraticSpace QuadraticSpace::operator+(const QuadraticSpace& other) const {
    return QuadraticSpace(concat(diag_, other.diag_));
}

std::string QuadraticSpace::to_string() const {
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < dim(); ++i) os << (i == 0 ? "" : ",") << diag_[i];
    os << '>';
    return os.str();
}

Matrix gram(const QuadraticSpace& q, const std::vector<Vector>& vectors) {
    Matrix g(vectors.size(), vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = i; j < vectors.size(); ++j) {
            g(i, j) = q.bilinear(vectors[i], vectors[j]);
            g(j, i) = g(i, j);
        }
    }
    return g;
}

Diagonalization diagonalize(const Matrix& beta) {
    if (!beta.is_symmetric()) throw PreconditionError("diagonalize expects a symmetric matrix");
    const std::size_t n = beta.rows();
    Matrix a = beta;
    Matrix t = Matrix::identity(n);
    auto swap_index = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
        for (std::size_t c = 0; c < n; ++c) std::swap(t(i, c), t(j, c));
    };
    // row_i += f * row_j together with the matching column operation.
    auto add_multiple = [&](std::size_t i, std::size_t j, const Rational& f) {
        for (std::size_t c = 0; c < n; ++c) a(i, c) += f * a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, i) += f * a(r, j);
        for (std::size_t c = 0; c < n; ++c) t(i, c) += f * t(j, c);
    };
    Diagonalization out;
    std::size_t k = 0;
    for (; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, piv).is_zero()) ++piv;
        if (piv == n) {
            bool found = false;
            for (std::size_t i = k; i < n && !found; ++i) {
                for (std::size_t j = i + 1; j < n && !found; ++j) {
                    if (!a(i, j).is_zero()) {
                        // a(i,i) = a(j,j) = 0 here, so the new a(i,i) is 2 a(i,j).
                        add_multiple(i, j, 1);
                        piv = i;
                        found = true;
                    }
                }
            }
            if (!found) break;
        }
        swap_index(k, piv);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a(r, k).is_zero()) continue;
            add_multiple(r, k, -a(r, k) / a(k, k));
        }
    }
    out.rank = k;
    for (std::size_t i = 0; i < k; ++i) out.diag.push_back(a(i, i));
    out.basis = std::move(t);
    return out;
}

SquareClass discriminant(const QuadraticSpace& q) {
    Rational d = 1;
    for (const auto& a : q.diag()) d *= a;
    return SquareClass(d);
}

LocalClass local_discriminant(const QuadraticSpace& q, const Place& place) {
    Rational d = 1;
    for (const auto& a : q.diag()) d *= a;
    return local_square_class(d, place);
}

int hasse(const QuadraticSpace& q, const Place& place) {
    int h = 1;
    for (std::size_t i = 0; i < q.dim(); ++i) {
        for (std::size_t j = i + 1; j < q.dim(); ++j) h *= hilbert(q[i], q[j], place);
    }
    return h;
}

std::size_t negative_index(const QuadraticSpace& q) {
    return static_cast<std::size_t>(std::count_if(q.diag().begin(), q.diag().end(),
                                                  [](const Rational& a) { return a.sign() < 0; }));
}

InvariantTriple invariants(const QuadraticSpace& q) {
    InvariantTriple out;
    out.dim = q.dim();
    out.disc = discriminant(q);
    for (const auto& place : bad_places(q.diag())) out.hasse[place] = hasse(q, place);
    return out;
}

bool is_isometric_local(const QuadraticSpace& q, const QuadraticSpace& qp, const Place& place) {
    if (q.dim() != qp.dim()) return false;
    if (place.is_real()) return negative_index(q) == negative_index(qp);
    return local_discriminant(q, place) == local_discriminant(qp, place) && hasse(q, place) == hasse(qp, place);
}

bool is_isotropic_local(const QuadraticSpace& q, const Place& place) {
    const std::size_t m = q.dim();
    if (m == 1) return false;
    if (place.is_real()) {
        const std::size_t neg = negative_index(q);
        return neg != 0 && neg != m;
    }
    Rational d = 1;
    for (const auto& a : q.diag()) d *= a;
    switch (m) {
        case 2:
            return is_local_square(-d, place);
        case 3:
            return hasse(q, place) == hilbert(-1, -d, place);
        case 4:
            return !is_local_square(d, place) || hasse(q, place) == hilbert(-1, -1, place);
        default:
            return true;
    }
}

AnisotropyReport anisotropy_report(const QuadraticSpace& q) {
    AnisotropyReport report;
    report.high_dimension = q.dim() >= 5;
    report.places_checked = bad_places(q.diag());
    for (const auto& place : report.places_checked) {
        if (!is_isotropic_local(q, place)) {
            report.anisotropic = true;
            report.witness = place;
            break;
        }
    }
    return report;
}

bool is_anisotropic_global(const QuadraticSpace& q) { return anisotropy_report(q).anisotropic; }

bool represents_value_local(const QuadraticSpace& q, const Rational& beta, const Place& place) {
    if (beta.is_zero()) throw DomainError("represents: beta must be nonzero");
    return is_isotropic_local(q + QuadraticSpace({-beta}), place);
}

std::optional<std::vector<Rational>> representation_complement(const QuadraticSpace& q, const Matrix& beta,
                                                               const Place& place) {
    if (!beta.is_symmetric()) throw PreconditionError("Gram matrix must be symmetric");
    if (beta.rows() == 0) throw PreconditionError("Gram matrix must be nonempty");
    if (beta.rows() > q.dim()) {
        throw PreconditionError("Gram matrix of size " + std::to_string(beta.rows()) +
                                " cannot embed in dimension " + std::to_string(q.dim()));
    }
    const auto diag = diagonalize(beta);
    if (diag.rank < beta.rows()) throw DegenerateGramError("degenerate Gram matrix " + beta.to_string());
    std::optional<std::vector<Rational>> found;
    for_each_local_form(q.dim() - beta.rows(), place, [&](const std::vector<Rational>& r) {
        if (is_isometric_local(q, QuadraticSpace(concat(diag.diag, r)), place)) {
            found = r;
            return true;
        }
        return false;
    });
    return found;
}

bool represents_gram_local(const QuadraticSpace& q, const Matrix& beta, const Place& place) {
    return representation_complement(q, beta, place).has_value();
}

std::vector<QuadraticSpace> local_form_classes(std::size_t n, const Place& place) {
    if (n == 0) throw PreconditionError("form classes need n >= 1");
    std::vector<QuadraticSpace> out;
    for_each_local_form(n, place, [&](const std::vector<Rational>& form) {
        QuadraticSpace candidate(form);
        const bool seen = std::any_of(out.begin(), out.end(), [&](const QuadraticSpace& s) {
            return is_isometric_local(s, candidate, place);
        });
        if (!seen) out.push_back(std::move(candidate));
        return false;
    });
    return out;
}

}  // namespace quadrilift
