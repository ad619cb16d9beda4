#include "quadrilift/orthogonal.hpp"

#include <functional>

#include "quadrilift/error.hpp"
#include "quadrilift/number_theory.hpp"

namespace quadrilift {

namespace {

/// Index of the first nonzero diagonal entry in a diagonalization, as an
/// anisotropic vector expressed in the given basis. Empty if the form is zero.
std::optional<Vector> anisotropic_in_span(const QuadraticSpace& q, const std::vector<Vector>& span) {
    if (span.empty()) return std::nullopt;
    const auto d = diagonalize(gram(q, span));
    if (d.rank == 0) return std::nullopt;
    Vector x(q.dim());
    for (std::size_t j = 0; j < span.size(); ++j) x = x + d.basis(0, j) * span[j];
    return x;
}

std::vector<Vector> combine(const std::vector<Vector>& basis, const std::vector<Vector>& coeffs, std::size_t m) {
    std::vector<Vector> out;
    for (const auto& c : coeffs) {
        Vector x(m);
        for (std::size_t j = 0; j < basis.size(); ++j) x = x + c[j] * basis[j];
        out.push_back(std::move(x));
    }
    return out;
}

/// Vectors of span(basis) orthogonal to x.
std::vector<Vector> orthogonal_in(const QuadraticSpace& q, const std::vector<Vector>& basis, const Vector& x) {
    Matrix row(1, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) row(0, j) = q.bilinear(x, basis[j]);
    return combine(basis, null_space(row), q.dim());
}

/// Calls visit on each nonzero integer vector in [-r, r]^k; stops when visit returns true.
bool for_each_small_vector(std::size_t k, long r, const std::function<bool(const Vector&)>& visit) {
    std::vector<long> c(k, -r);
    while (true) {
        bool nonzero = false;
        for (long x : c) nonzero = nonzero || x != 0;
        if (nonzero) {
            Vector v(k);
            for (std::size_t i = 0; i < k; ++i) v[i] = c[i];
            if (visit(v)) return true;
        }
        std::size_t i = 0;
        while (i < k && c[i] == r) c[i++] = -r;
        if (i == k) return false;
        ++c[i];
    }
}

/// f preserves span(basis) = U, is nondegenerate there, and fixes U-perp pointwise.
void factor_into(const QuadraticSpace& q, Matrix f, std::vector<Vector> basis, std::vector<Vector>& word,
                 int restarts) {
    const std::size_t m = q.dim();
    const Matrix id = Matrix::identity(m);
    while (!(f == id)) {
        if (basis.empty()) throw Error("cartan_dieudonne: nontrivial map on the zero subspace");
        const Matrix b = Matrix::from_columns(basis);
        const Matrix moved = (f - id) * b;
        const auto fixed = combine(basis, null_space(moved), m);
        if (auto x = anisotropic_in_span(q, fixed)) {
            basis = orthogonal_in(q, basis, *x);
            continue;
        }
        const Matrix g = q.gram_matrix();
        if (!(moved.transpose() * g * moved).is_zero()) {
            // q(x) q(fx - x) is a nonzero polynomial of degree <= 2 in each
            // coordinate, so it has a nonvanishing point on {-2..2}^k.
            Vector x;
            Vector u;
            for_each_small_vector(basis.size(), 2, [&](const Vector& c) {
                Vector cand = b * c;
                if (q.value(cand).is_zero()) return false;
                Vector diff = f * cand - cand;
                if (q.value(diff).is_zero()) return false;
                x = std::move(cand);
                u = std::move(diff);
                return true;
            });
            if (u.empty()) throw Error("cartan_dieudonne: no admissible vector found");
            word.push_back(u);
            f = reflection(q, u).matrix() * f;
            basis = orthogonal_in(q, basis, x);
            continue;
        }
        // q(fx - x) vanishes identically on U; one extra reflection moves f out of this case.
        if (restarts == 0) throw Error("cartan_dieudonne: did not terminate");
        --restarts;
        const auto w = anisotropic_in_span(q, basis);
        word.push_back(*w);
        f = reflection(q, *w).matrix() * f;
    }
}

}  // namespace

OrthogonalElement::OrthogonalElement(QuadraticSpace space, Matrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
    const std::size_t m = space_.dim();
    if (matrix_.rows() != m || matrix_.cols() != m) throw DomainError("orthogonal element has the wrong shape");
    const Matrix g = space_.gram_matrix();
    if (!(matrix_.transpose() * g * matrix_ == g)) throw DomainError("matrix does not preserve the quadratic form");
    det_ = determinant(matrix_).sign();
}

OrthogonalElement OrthogonalElement::identity(const QuadraticSpace& space) {
    return {space, Matrix::identity(space.dim())};
}

OrthogonalElement OrthogonalElement::minus_identity(const QuadraticSpace& space) {
    return {space, Matrix::identity(space.dim()) * Rational(-1)};
}

OrthogonalElement OrthogonalElement::operator*(const OrthogonalElement& rhs) const {
    if (!(space_ == rhs.space_)) throw PreconditionError("orthogonal elements of different spaces");
    return {space_, matrix_ * rhs.matrix_};
}

OrthogonalElement OrthogonalElement::inverse() const {
    // h^{-1} = G^{-1} h^T G
    const Matrix g = space_.gram_matrix();
    return {space_, quadrilift::inverse(g) * matrix_.transpose() * g};
}

OrthogonalElement reflection(const QuadraticSpace& q, const Vector& v) {
    const Rational qv = q.value(v);
    if (qv.is_zero()) throw DomainError("reflection in an isotropic vector");
    const std::size_t m = q.dim();
    Matrix r = Matrix::identity(m);
    const Rational scale = Rational(2) / qv;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) r(i, j) -= scale * v[i] * v[j] * q[j];
    }
    return {q, r};
}

OrthogonalElement word_product(const QuadraticSpace& q, const ReflectionWord& word) {
    OrthogonalElement h = OrthogonalElement::identity(q);
    for (const auto& u : word.vectors) h = h * reflection(q, u);
    return h;
}

ReflectionWord cartan_dieudonne(const OrthogonalElement& h) {
    const auto& q = h.space();
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < q.dim(); ++i) basis.push_back(unit_vector(q.dim(), i));
    ReflectionWord word;
    factor_into(q, h.matrix(), std::move(basis), word.vectors, static_cast<int>(q.dim()));
    return word;
}

Rational spinor_norm_value(const OrthogonalElement& h) {
    Rational prod = 1;
    for (const auto& u : cartan_dieudonne(h).vectors) prod *= h.space().value(u);
    return prod;
}

SquareClass spinor_norm(const OrthogonalElement& h) {
    std::vector<Rational> values;
    for (const auto& u : cartan_dieudonne(h).vectors) values.push_back(h.space().value(u));
    return SquareClass(Rational(squarefree_part_of_product(values)));
}

int chi_V(const QuadraticSpace& q, const Rational& a, const Place& place) {
    const std::size_t m = q.dim();
    Rational d = discriminant(q).as_rational();
    if ((m * (m - 1) / 2) % 2 == 1) d = -d;
    return hilbert(a, d, place);
}

int GlobalQuadCharacter::eps_at(const Place& place) const {
    const auto it = eps.find(place);
    return it == eps.end() ? 1 : it->second;
}

int xi_eval(const QuadCharacter& chi, const OrthogonalElement& h, const Place& place) {
    const std::size_t m = h.space().dim();
    if (m % 2 == 0) throw UnsupportedError("characters of even orthogonal groups are not implemented");
    if (chi.dim != m) throw PreconditionError("character dimension does not match the space");
    if (h.det() == 1) return hilbert(spinor_norm_value(h), chi.lambda, place);
    const auto h0 = OrthogonalElement::minus_identity(h.space()) * h;
    return chi.eps * hilbert(spinor_norm_value(h0), chi.lambda, place);
}

bool xi_trivial_on_stabilizer(const QuadraticSpace& q, const QuadCharacter& chi, const std::vector<Vector>& vectors,
                              const Place& place) {
    const std::size_t m = q.dim();
    if (!vectors.empty()) {
        const auto d = diagonalize(gram(q, vectors));
        if (d.rank < vectors.size()) throw DegenerateGramError("stabilizer of vectors with a degenerate Gram matrix");
    }
    Matrix constraints(vectors.size(), m);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = 0; j < m; ++j) constraints(i, j) = vectors[i].at(j) * q[j];
    }
    const std::vector<Vector> w = vectors.empty() ? std::vector<Vector>{} : null_space(constraints);
    std::vector<Vector> complement = w;
    if (vectors.empty()) {
        for (std::size_t i = 0; i < m; ++i) complement.push_back(unit_vector(m, i));
    }
    if (complement.empty()) return true;

    const auto d = diagonalize(gram(q, complement));
    std::vector<Vector> orth;
    for (std::size_t i = 0; i < d.rank; ++i) {
        Vector x(m);
        for (std::size_t j = 0; j < complement.size(); ++j) x = x + d.basis(i, j) * complement[j];
        orth.push_back(std::move(x));
    }
    const QuadraticSpace wq(d.diag);

    std::vector<LocalClass> targets;
    for (const auto& c : local_class_representatives(place)) {
        if (represents_value_local(wq, c, place)) targets.push_back(local_square_class(c, place));
    }
    std::map<LocalClass, Vector> witness;
    const std::size_t k = orth.size();
    for (long r = 1; r <= 12 && witness.size() < targets.size(); ++r) {
        double box = 1;
        for (std::size_t i = 0; i < k; ++i) box *= static_cast<double>(2 * r + 1);
        if (r > 1 && box > 2e5) break;
        for_each_small_vector(k, r, [&](const Vector& c) {
            Rational value = 0;
            for (std::size_t i = 0; i < k; ++i) value += c[i] * c[i] * d.diag[i];
            if (value.is_zero()) return false;
            const auto cls = local_square_class(value, place);
            if (witness.count(cls) == 0 && std::find(targets.begin(), targets.end(), cls) != targets.end()) {
                Vector u(m);
                for (std::size_t i = 0; i < k; ++i) u = u + c[i] * orth[i];
                witness.emplace(cls, std::move(u));
            }
            return witness.size() == targets.size();
        });
    }
    if (witness.size() < targets.size()) throw Error("stabilizer check: could not realize every represented class");

    std::vector<OrthogonalElement> gens;
    for (const auto& [cls, u] : witness) gens.push_back(reflection(q, u));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (xi_eval(chi, gens[i], place) != 1) return false;
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (xi_eval(chi, gens[i] * gens[j], place) != 1) return false;
        }
    }
    return true;
}

}  // namespace quadrilift
