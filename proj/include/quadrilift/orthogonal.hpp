#pragma once

#include <map>
#include <vector>

#include "quadrilift/quadratic_space.hpp"

namespace quadrilift {

/// Exact isometry h of a diagonal space acting on column vectors: h^T G h = G.
class OrthogonalElement {
public:
    /// Throws DomainError unless the matrix preserves the form.
    OrthogonalElement(QuadraticSpace space, Matrix matrix);
    static OrthogonalElement identity(const QuadraticSpace& space);
    static OrthogonalElement minus_identity(const QuadraticSpace& space);

    const QuadraticSpace& space() const { return space_; }
    const Matrix& matrix() const { return matrix_; }
    /// +1 or -1.
    int det() const { return det_; }

    /// Throws PreconditionError if the spaces differ.
    OrthogonalElement operator*(const OrthogonalElement& rhs) const;
    OrthogonalElement inverse() const;

    friend bool operator==(const OrthogonalElement& a, const OrthogonalElement& b) {
        return a.space_ == b.space_ && a.matrix_ == b.matrix_;
    }

private:
    QuadraticSpace space_;
    Matrix matrix_;
    int det_ = 1;
};

/// h = tau_{u_1} ... tau_{u_k}.
struct ReflectionWord {
    std::vector<Vector> vectors;

    std::size_t size() const { return vectors.size(); }
};

/// tau_v(w) = w - 2 b(v, w) / q(v) v. Throws DomainError for isotropic v.
OrthogonalElement reflection(const QuadraticSpace& q, const Vector& v);

/// Product of the reflections in a word (identity for the empty word).
OrthogonalElement word_product(const QuadraticSpace& q, const ReflectionWord& word);

/// Factorization into at most dim reflections.
ReflectionWord cartan_dieudonne(const OrthogonalElement& h);

/// Square class of prod q(u_i) over a reflection factorization.
SquareClass spinor_norm(const OrthogonalElement& h);
/// The product prod q(u_i) itself, before reduction modulo squares.
Rational spinor_norm_value(const OrthogonalElement& h);

/// chi_V(a) = (a, (-1)^{m(m-1)/2} d(V)) at the place.
int chi_V(const QuadraticSpace& q, const Rational& a, const Place& place);

/// The character xi_{lambda, eps} of O(V) for odd dim V at one place.
struct QuadCharacter {
    Rational lambda = 1;
    int eps = 1;
    std::size_t dim = 1;
};

/// A character given by one global lambda and a sign at each place; places
/// absent from `eps` carry +1.
struct GlobalQuadCharacter {
    SquareClass lambda;
    std::map<Place, int> eps;
    std::size_t dim = 1;

    int eps_at(const Place& place) const;
    QuadCharacter at(const Place& place) const { return {lambda.as_rational(), eps_at(place), dim}; }
};

/// eps^{[det h = -1]} * (SN(det(h) h), lambda). Throws UnsupportedError in even
/// dimension and PreconditionError when the dimensions disagree.
int xi_eval(const QuadCharacter& chi, const OrthogonalElement& h, const Place& place);

/// Is xi trivial on the pointwise stabilizer of the vectors in O(V) at the place?
/// The stabilizer is O(W) for W the orthogonal complement, generated by
/// reflections in anisotropic vectors of W; xi is evaluated on such reflections
/// (one per local square class represented by W) and on their pairwise products.
/// Throws DegenerateGramError when the vectors have a singular Gram matrix.
bool xi_trivial_on_stabilizer(const QuadraticSpace& q, const QuadCharacter& chi, const std::vector<Vector>& vectors,
                              const Place& place);

}  // namespace quadrilift
