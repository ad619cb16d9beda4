#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace quadrilift::weil {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Small matrix over F_p with entries kept in [0, p).
struct FpMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<long> a;

    FpMatrix() = default;
    FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
    static FpMatrix identity(std::size_t n);
    static FpMatrix from_rows(const std::vector<std::vector<long>>& rows, long p);

    long& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    long operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

FpMatrix mul(const FpMatrix& x, const FpMatrix& y, long p);
FpMatrix add(const FpMatrix& x, const FpMatrix& y, long p);
FpMatrix transpose(const FpMatrix& x);
FpMatrix scale(const FpMatrix& x, long c, long p);
long det(const FpMatrix& x, long p);
/// Throws DomainError for singular input.
FpMatrix inverse(const FpMatrix& x, long p);
long mod(long x, long p);
long legendre_symbol(long x, long p);

/// Schroedinger model of the Weil representation of Sp(2n, F_p) on functions
/// on V^n = (F_p^m)^n, for the form q(x) = sum a_i x_i^2 and psi(x) = exp(2 pi i x / p).
///
/// A state v in V^n is an m x n matrix; its index has digit v(i, j) at
/// position i * n + j in base p. Gram(v) = v^T diag(a) v.
class FiniteWeilModel {
public:
    /// p an odd prime <= 7, 1 <= m <= 3 nonzero entries mod p, n in {1, 2}.
    FiniteWeilModel(long p, std::vector<long> diag, std::size_t n);

    long p() const { return p_; }
    std::size_t m() const { return diag_.size(); }
    std::size_t n() const { return n_; }
    const std::vector<long>& diag() const { return diag_; }
    std::size_t size() const { return size_; }

    Complex psi(long x) const { return psi_[static_cast<std::size_t>(mod(x, p_))]; }
    FpMatrix state(std::size_t index) const;
    std::size_t index(const FpMatrix& v) const;
    FpMatrix gram(const FpMatrix& v) const;
    /// Gram matrix of every state, indexed like the state space.
    const std::vector<FpMatrix>& grams() const { return grams_; }

    /// Levi twist eta(x) = (x | p)^m.
    int eta(long x) const;
    /// prod_i (p^{-1/2} sum_x psi(a_i x^2))^n, of modulus 1.
    Complex gamma() const { return gamma_; }

private:
    long p_;
    std::vector<long> diag_;
    std::size_t n_;
    std::size_t size_;
    std::vector<Complex> psi_;
    std::vector<FpMatrix> grams_;
    Complex gamma_;
};

/// Product of structured factors, applied right to left like matrices.
class Operator {
public:
    struct Permutation {
        std::vector<std::size_t> source;  ///< out[i] = factor * in[source[i]]
        Complex factor;
    };
    struct Diagonal {
        std::vector<Complex> entries;
    };
    struct Fourier {
        long p;
        std::vector<long> coefficients;  ///< per digit: kernel psi(2 c v y) / sqrt(p)
        Complex factor;
    };
    using Stage = std::variant<Permutation, Diagonal, Fourier>;

    Operator() = default;
    Operator(std::size_t size, Stage stage) : size_(size), stages_{std::move(stage)} {}
    static Operator identity(std::size_t size) { return Operator(size); }

    std::size_t size() const { return size_; }
    CVector apply(const CVector& x) const;
    Operator operator*(const Operator& rhs) const;
    /// Dense matrix; PreconditionError above 2401 states.
    CMatrix dense() const;

private:
    explicit Operator(std::size_t size) : size_(size) {}
    std::size_t size_ = 0;
    std::vector<Stage> stages_;  ///< in application order
};

/// (m(a) phi)(v) = eta(det a) phi(v a).
Operator op_levi(const FiniteWeilModel& model, const FpMatrix& a);
/// (n(b) phi)(v) = psi(tr(b Gram(v))) phi(v) for symmetric b.
Operator op_unipotent(const FiniteWeilModel& model, const FpMatrix& b);
/// (w phi)(v) = gamma^{-1} p^{-mn/2} sum_y psi(2 b_q(v, y)) phi(y), b_q(v, y) = tr(v^T diag(a) y).
Operator op_weyl(const FiniteWeilModel& model);

struct Proportionality {
    bool proportional = false;
    Complex scalar;
    double residual = 0;
};

/// Tests A = c B with |c| = 1 on a few random vectors.
Proportionality compare_up_to_phase(const Operator& a, const Operator& b, std::mt19937_64& rng,
                                    double tol = 1e-9, int trials = 3);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// m(a) n(b) m(a)^{-1} = n(a b a^T), w m(a) w^{-1} = m(a^{-T}), w^2 ~ m(-1),
/// (w n(1))^3 ~ 1 and the homomorphism laws of m and n, up to modulus-1 scalars.
std::vector<CheckResult> relation_suite(const FiniteWeilModel& model, std::mt19937_64& rng);

/// Random generator words rewritten by one relation: the symplectic matrices agree
/// exactly and the operators agree up to a phase.
CheckResult random_word_check(const FiniteWeilModel& model, std::mt19937_64& rng, int words = 100);

Complex theta_sum(const FiniteWeilModel& model, const CVector& phi);
/// p^{-n(n+1)/2} sum_b psi(-tr(b beta)) theta(n(b) phi).
Complex fourier_coefficient(const FiniteWeilModel& model, const CVector& phi, const FpMatrix& beta);
/// sum of phi over {v : Gram(v) = beta}.
Complex level_set_sum(const FiniteWeilModel& model, const CVector& phi, const FpMatrix& beta);

/// Element of O(q)(F_p) with its determinant and the residue symbol of its spinor norm.
struct GroupElement {
    FpMatrix h;
    int det = 1;
    int spinor = 1;
};

/// Closure of the reflections; PreconditionError past 10^6 elements.
std::vector<GroupElement> orthogonal_group(const FiniteWeilModel& model);

struct OrbitCheck {
    bool transitive = false;
    std::size_t level_set_size = 0;
    std::size_t orbit_size = 0;
    std::size_t group_order = 0;
};

/// Is {v : Gram(v) = beta} a single O(q)(F_p)-orbit (vacuously so when empty)?
/// Throws PreconditionError for degenerate beta.
OrbitCheck orbit_transitivity_check(const FiniteWeilModel& model, const FpMatrix& beta);

/// Every symmetric n x n matrix over F_p with nonzero determinant.
std::vector<FpMatrix> nondegenerate_symmetric(long p, std::size_t n);

/// phi averaged over O(q)(F_p) against a character c: x -> sum_h c(h) phi(h^{-1} x).
CVector character_average(const FiniteWeilModel& model, const std::vector<GroupElement>& group, const CVector& phi,
                          int (*character)(const GroupElement&));

/// All invariant checks on one model, in a fixed order.
std::vector<CheckResult> run_weil_checks(const FiniteWeilModel& model, std::uint64_t seed);

}  // namespace quadrilift::weil
