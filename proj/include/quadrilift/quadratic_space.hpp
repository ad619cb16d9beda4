#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadrilift/local_fields.hpp"
#include "quadrilift/matrix.hpp"

namespace quadrilift {

/// Nondegenerate diagonal quadratic form q(x) = sum a_i x_i^2 over Q.
class QuadraticSpace {
public:
    /// Throws DomainError on an empty list or a zero entry.
    explicit QuadraticSpace(std::vector<Rational> diag);

    std::size_t dim() const { return diag_.size(); }
    const std::vector<Rational>& diag() const { return diag_; }
    const Rational& operator[](std::size_t i) const { return diag_[i]; }

    /// q(v) = sum a_i v_i^2.
    Rational value(const Vector& v) const;
    /// b(v, w) = (q(v + w) - q(v) - q(w)) / 2 = sum a_i v_i w_i.
    Rational bilinear(const Vector& v, const Vector& w) const;
    Matrix gram_matrix() const { return Matrix::diagonal(diag_); }

    QuadraticSpace operator+(const QuadraticSpace& other) const;  ///< orthogonal sum
    std::string to_string() const;

    friend bool operator==(const QuadraticSpace&, const QuadraticSpace&) = default;

private:
    std::vector<Rational> diag_;
};

/// Gram matrix (b(v_i, v_j)) of a list of vectors.
Matrix gram(const QuadraticSpace& q, const std::vector<Vector>& vectors);

/// Result of symmetric Gaussian elimination: `basis * beta * basis^T` is diagonal
/// with `diag` (the nonzero entries) in its first `rank` positions and zeros after.
struct Diagonalization {
    std::vector<Rational> diag;
    Matrix basis;
    std::size_t rank = 0;
};

/// Exact congruence diagonalization of a symmetric matrix; degenerate input is allowed.
Diagonalization diagonalize(const Matrix& beta);

/// Product of the diagonal entries modulo squares.
SquareClass discriminant(const QuadraticSpace& q);
LocalClass local_discriminant(const QuadraticSpace& q, const Place& place);

/// Product over i < j of (a_i, a_j) at the place.
int hasse(const QuadraticSpace& q, const Place& place);

/// Number of negative entries.
std::size_t negative_index(const QuadraticSpace& q);

struct InvariantTriple {
    std::size_t dim = 0;
    SquareClass disc;
    /// Hasse invariant at Real, 2 and every prime dividing an entry; +1 elsewhere.
    std::map<Place, int> hasse;
};

InvariantTriple invariants(const QuadraticSpace& q);

/// Local isometry: dimension, local discriminant and Hasse invariant at finite
/// places; dimension and signature at the real place.
bool is_isometric_local(const QuadraticSpace& q, const QuadraticSpace& qp, const Place& place);

bool is_isotropic_local(const QuadraticSpace& q, const Place& place);

struct AnisotropyReport {
    bool anisotropic = false;
    /// Set for dim >= 5, where only the real place can be anisotropic.
    bool high_dimension = false;
    /// A place where q is anisotropic, when there is one.
    std::optional<Place> witness;
    std::vector<Place> places_checked;
};

/// Decided place by place over the bad set via the local-global principle.
AnisotropyReport anisotropy_report(const QuadraticSpace& q);
bool is_anisotropic_global(const QuadraticSpace& q);

/// True iff q represents beta over the completion. Throws DomainError for beta = 0.
bool represents_value_local(const QuadraticSpace& q, const Rational& beta, const Place& place);

/// If q contains a subspace with Gram matrix beta over the completion, returns a
/// diagonal complement r with q isometric to diag(beta) + r there; empty
/// otherwise. The complement of an n = m embedding is the empty list.
/// Throws DegenerateGramError for singular beta and PreconditionError when
/// beta is larger than q or not symmetric.
std::optional<std::vector<Rational>> representation_complement(const QuadraticSpace& q, const Matrix& beta,
                                                               const Place& place);

bool represents_gram_local(const QuadraticSpace& q, const Matrix& beta, const Place& place);

/// Representatives of the local isometry classes of nondegenerate n-dimensional forms.
std::vector<QuadraticSpace> local_form_classes(std::size_t n, const Place& place);

}  // namespace quadrilift
