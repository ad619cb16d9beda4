#include "quadrilift/weil.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "quadrilift/error.hpp"
#include "quadrilift/number_theory.hpp"

namespace quadrilift::weil {

namespace {

constexpr std::size_t kDenseCap = 2401;
constexpr std::size_t kGroupCap = 1000000;

CVector random_vector(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVector x(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = Complex(g(rng), g(rng));
    return x;
}

FpMatrix random_invertible(long p, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> e(0, p - 1);
    while (true) {
        FpMatrix a(n, n);
        for (auto& x : a.a) x = e(rng);
        if (det(a, p) != 0) return a;
    }
}

FpMatrix random_symmetric(long p, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> e(0, p - 1);
    FpMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) b(i, j) = b(j, i) = e(rng);
    }
    return b;
}

long trace_product(const FpMatrix& b, const FpMatrix& g, long p) {
    long t = 0;
    for (std::size_t i = 0; i < b.rows; ++i) {
        for (std::size_t j = 0; j < b.cols; ++j) t += b(i, j) * g(j, i);
    }
    return mod(t, p);
}

CheckResult proportional_check(std::string name, const std::vector<Proportionality>& runs) {
    CheckResult r{std::move(name), true, {}};
    double worst = 0;
    for (const auto& run : runs) {
        r.passed = r.passed && run.proportional;
        worst = std::max(worst, run.residual);
    }
    std::ostringstream os;
    os << runs.size() << " samples, worst residual " << worst;
    r.detail = os.str();
    return r;
}

/// Symplectic matrices for the generators, blocks [[A, B], [C, D]] of size n.
FpMatrix block(const FpMatrix& a, const FpMatrix& b, const FpMatrix& c, const FpMatrix& d) {
    const std::size_t n = a.rows;
    FpMatrix out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = a(i, j);
            out(i, n + j) = b(i, j);
            out(n + i, j) = c(i, j);
            out(n + i, n + j) = d(i, j);
        }
    }
    return out;
}

struct Generator {
    enum Kind { Levi, Unipotent, Weyl } kind;
    FpMatrix x;
};

FpMatrix symplectic(const Generator& g, long p, std::size_t n) {
    const FpMatrix id = FpMatrix::identity(n);
    const FpMatrix zero(n, n);
    switch (g.kind) {
        case Generator::Levi:
            return block(g.x, zero, zero, transpose(inverse(g.x, p)));
        case Generator::Unipotent:
            return block(id, g.x, zero, id);
        case Generator::Weyl:
            return block(zero, id, scale(id, -1, p), zero);
    }
    return {};
}

Operator realize(const FiniteWeilModel& model, const Generator& g) {
    switch (g.kind) {
        case Generator::Levi:
            return op_levi(model, g.x);
        case Generator::Unipotent:
            return op_unipotent(model, g.x);
        case Generator::Weyl:
            return op_weyl(model);
    }
    return Operator::identity(model.size());
}

/// One relation applied at some adjacent pair; false if none applies.
bool rewrite(std::vector<Generator>& word, long p, std::mt19937_64& rng) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        const auto k0 = word[i].kind;
        const auto k1 = word[i + 1].kind;
        if ((k0 == Generator::Levi && k1 == Generator::Unipotent) || (k0 == Generator::Weyl && k1 == Generator::Levi) ||
            (k0 == k1)) {
            spots.push_back(i);
        }
    }
    if (spots.empty()) return false;
    const std::size_t i = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    const Generator x = word[i];
    const Generator y = word[i + 1];
    const std::size_t n = x.x.rows;
    std::vector<Generator> replacement;
    if (x.kind == Generator::Levi && y.kind == Generator::Unipotent) {
        replacement = {{Generator::Unipotent, mul(mul(x.x, y.x, p), transpose(x.x), p)}, x};
    } else if (x.kind == Generator::Weyl && y.kind == Generator::Levi) {
        replacement = {{Generator::Levi, transpose(inverse(y.x, p))}, x};
    } else if (x.kind == Generator::Levi) {
        replacement = {{Generator::Levi, mul(x.x, y.x, p)}};
    } else if (x.kind == Generator::Unipotent) {
        replacement = {{Generator::Unipotent, add(x.x, y.x, p)}};
    } else {
        replacement = {{Generator::Levi, scale(FpMatrix::identity(n), -1, p)}};
    }
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(i), word.begin() + static_cast<std::ptrdiff_t>(i + 2));
    word.insert(word.begin() + static_cast<std::ptrdiff_t>(i), replacement.begin(), replacement.end());
    return true;
}

long inv_mod(long x, long p) {
    long r = 1;
    for (long e = p - 2, b = mod(x, p); e > 0; e >>= 1, b = b * b % p) {
        if ((e & 1) != 0) r = r * b % p;
    }
    return r;
}

CVector delta_at(std::size_t size, std::size_t at) {
    CVector v = CVector::Zero(static_cast<Eigen::Index>(size));
    v[static_cast<Eigen::Index>(at)] = 1;
    return v;
}

std::uint64_t key_of(const FpMatrix& h, long p) {
    std::uint64_t k = 0;
    for (long x : h.a) k = k * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(x);
    return k;
}

int det_character(const GroupElement& g) { return g.det; }
int spinor_character(const GroupElement& g) { return g.spinor; }
int product_character(const GroupElement& g) { return g.det * g.spinor; }

}  // namespace

long mod(long x, long p) {
    const long r = x % p;
    return r < 0 ? r + p : r;
}

long legendre_symbol(long x, long p) { return legendre(Integer(x), static_cast<std::uint64_t>(p)); }

FpMatrix FpMatrix::identity(std::size_t n) {
    FpMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<long>>& rows, long p) {
    FpMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (rows[i].size() != m.cols) throw PreconditionError("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = mod(rows[i][j], p);
    }
    return m;
}

FpMatrix mul(const FpMatrix& x, const FpMatrix& y, long p) {
    if (x.cols != y.rows) throw PreconditionError("F_p matrix product shape mismatch");
    FpMatrix out(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < y.cols; ++j) {
            long s = 0;
            for (std::size_t k = 0; k < x.cols; ++k) s += x(i, k) * y(k, j);
            out(i, j) = mod(s, p);
        }
    }
    return out;
}

FpMatrix add(const FpMatrix& x, const FpMatrix& y, long p) {
    FpMatrix out = x;
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = mod(x.a[i] + y.a[i], p);
    return out;
}

FpMatrix transpose(const FpMatrix& x) {
    FpMatrix t(x.cols, x.rows);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < x.cols; ++j) t(j, i) = x(i, j);
    }
    return t;
}

FpMatrix scale(const FpMatrix& x, long c, long p) {
    FpMatrix out = x;
    for (auto& v : out.a) v = mod(v * c, p);
    return out;
}

long det(const FpMatrix& x, long p) {
    if (x.rows != x.cols) throw PreconditionError("determinant of a non-square matrix");
    FpMatrix a = x;
    const std::size_t n = a.rows;
    long d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
            d = mod(-d, p);
        }
        d = mod(d * a(c, c), p);
        const long ivl = inv_mod(a(c, c), p);
        for (std::size_t i = c + 1; i < n; ++i) {
            const long f = mod(a(i, c) * ivl, p);
            for (std::size_t j = c; j < n; ++j) a(i, j) = mod(a(i, j) - f * a(c, j), p);
        }
    }
    return d;
}

FpMatrix inverse(const FpMatrix& x, long p) {
    const std::size_t n = x.rows;
    FpMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = x(i, j);
        aug(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && aug(piv, c) == 0) ++piv;
        if (piv == n) throw DomainError("singular matrix over F_p");
        for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(piv, j), aug(c, j));
        const long ivl = inv_mod(aug(c, c), p);
        for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) = mod(aug(c, j) * ivl, p);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug(i, c) == 0) continue;
            const long f = aug(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) = mod(aug(i, j) - f * aug(c, j), p);
        }
    }
    FpMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    }
    return out;
}

FiniteWeilModel::FiniteWeilModel(long p, std::vector<long> diag, std::size_t n) : p_(p), diag_(std::move(diag)), n_(n) {
    if (p < 3 || p > 7 || !is_prime(static_cast<std::uint64_t>(p))) {
        throw PreconditionError("finite Weil model needs an odd prime p <= 7");
    }
    if (diag_.empty() || diag_.size() > 3) throw PreconditionError("finite Weil model needs 1 <= m <= 3");
    if (n_ < 1 || n_ > 2) throw PreconditionError("finite Weil model needs n in {1, 2}");
    for (auto& a : diag_) {
        a = mod(a, p_);
        if (a == 0) throw DomainError("diagonal entries must be units mod p");
    }
    size_ = 1;
    for (std::size_t i = 0; i < m() * n_; ++i) size_ *= static_cast<std::size_t>(p_);
    for (long x = 0; x < p_; ++x) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(x) / static_cast<double>(p_);
        psi_.emplace_back(std::cos(angle), std::sin(angle));
    }
    grams_.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) grams_.push_back(gram(state(i)));
    gamma_ = 1;
    for (long a : diag_) {
        Complex g = 0;
        for (long x = 0; x < p_; ++x) g += psi(a * x * x);
        g /= std::sqrt(static_cast<double>(p_));
        for (std::size_t j = 0; j < n_; ++j) gamma_ *= g;
    }
}

FpMatrix FiniteWeilModel::state(std::size_t index) const {
    FpMatrix v(m(), n_);
    for (auto& x : v.a) {
        x = static_cast<long>(index % static_cast<std::size_t>(p_));
        index /= static_cast<std::size_t>(p_);
    }
    return v;
}

std::size_t FiniteWeilModel::index(const FpMatrix& v) const {
    std::size_t idx = 0;
    for (std::size_t k = v.a.size(); k > 0; --k) idx = idx * static_cast<std::size_t>(p_) + static_cast<std::size_t>(v.a[k - 1]);
    return idx;
}

FpMatrix FiniteWeilModel::gram(const FpMatrix& v) const {
    FpMatrix g(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            long s = 0;
            for (std::size_t k = 0; k < m(); ++k) s += v(k, i) * diag_[k] * v(k, j);
            g(i, j) = mod(s, p_);
        }
    }
    return g;
}

int FiniteWeilModel::eta(long x) const {
    const long l = legendre_symbol(x, p_);
    return m() % 2 == 0 ? 1 : static_cast<int>(l);
}

CVector Operator::apply(const CVector& x) const {
    if (static_cast<std::size_t>(x.size()) != size_) throw PreconditionError("state vector has the wrong size");
    CVector cur = x;
    for (const auto& stage : stages_) {
        if (const auto* perm = std::get_if<Permutation>(&stage)) {
            CVector next(cur.size());
            for (std::size_t i = 0; i < size_; ++i) next[static_cast<Eigen::Index>(i)] = perm->factor * cur[static_cast<Eigen::Index>(perm->source[i])];
            cur = std::move(next);
        } else if (const auto* diag = std::get_if<Diagonal>(&stage)) {
            for (std::size_t i = 0; i < size_; ++i) cur[static_cast<Eigen::Index>(i)] *= diag->entries[i];
        } else {
            const auto& f = std::get<Fourier>(stage);
            const auto p = static_cast<std::size_t>(f.p);
            std::size_t stride = 1;
            std::vector<Complex> kernel(p * p);
            std::vector<Complex> buffer(p);
            for (const long c : f.coefficients) {
                const double norm = 1.0 / std::sqrt(static_cast<double>(f.p));
                for (std::size_t v = 0; v < p; ++v) {
                    for (std::size_t y = 0; y < p; ++y) {
                        const long e = mod(2 * c * static_cast<long>(v) * static_cast<long>(y), f.p);
                        const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(f.p);
                        kernel[v * p + y] = Complex(std::cos(angle), std::sin(angle)) * norm;
                    }
                }
                for (std::size_t base = 0; base < size_; ++base) {
                    if ((base / stride) % p != 0) continue;
                    for (std::size_t v = 0; v < p; ++v) {
                        Complex s = 0;
                        for (std::size_t y = 0; y < p; ++y) s += kernel[v * p + y] * cur[static_cast<Eigen::Index>(base + y * stride)];
                        buffer[v] = s;
                    }
                    for (std::size_t v = 0; v < p; ++v) cur[static_cast<Eigen::Index>(base + v * stride)] = buffer[v];
                }
                stride *= p;
            }
            cur *= f.factor;
        }
    }
    return cur;
}

Operator Operator::operator*(const Operator& rhs) const {
    if (size_ != rhs.size_) throw PreconditionError("operators on different state spaces");
    Operator out(size_);
    out.stages_ = rhs.stages_;
    out.stages_.insert(out.stages_.end(), stages_.begin(), stages_.end());
    return out;
}

CMatrix Operator::dense() const {
    if (size_ > kDenseCap) throw PreconditionError("state space too large for a dense operator");
    CMatrix out(static_cast<Eigen::Index>(size_), static_cast<Eigen::Index>(size_));
    for (std::size_t j = 0; j < size_; ++j) {
        CVector e = CVector::Zero(static_cast<Eigen::Index>(size_));
        e[static_cast<Eigen::Index>(j)] = 1;
        out.col(static_cast<Eigen::Index>(j)) = apply(e);
    }
    return out;
}

Operator op_levi(const FiniteWeilModel& model, const FpMatrix& a) {
    const long p = model.p();
    if (a.rows != model.n() || a.cols != model.n()) throw PreconditionError("Levi element has the wrong size");
    const long d = det(a, p);
    if (d == 0) throw DomainError("Levi element must be invertible mod p");
    Operator::Permutation perm{std::vector<std::size_t>(model.size()), Complex(model.eta(d))};
    for (std::size_t i = 0; i < model.size(); ++i) perm.source[i] = model.index(mul(model.state(i), a, p));
    return {model.size(), perm};
}

Operator op_unipotent(const FiniteWeilModel& model, const FpMatrix& b) {
    if (b.rows != model.n() || b.cols != model.n() || !(transpose(b) == b)) {
        throw PreconditionError("unipotent element needs a symmetric n x n matrix");
    }
    Operator::Diagonal diag{std::vector<Complex>(model.size())};
    for (std::size_t i = 0; i < model.size(); ++i) {
        diag.entries[i] = model.psi(trace_product(b, model.grams()[i], model.p()));
    }
    return {model.size(), diag};
}

Operator op_weyl(const FiniteWeilModel& model) {
    Operator::Fourier f{model.p(), {}, 1.0 / model.gamma()};
    for (std::size_t k = 0; k < model.m() * model.n(); ++k) f.coefficients.push_back(model.diag()[k / model.n()]);
    return {model.size(), f};
}

Proportionality compare_up_to_phase(const Operator& a, const Operator& b, std::mt19937_64& rng, double tol,
                                    int trials) {
    Proportionality out;
    out.proportional = true;
    bool have_scalar = false;
    for (int t = 0; t < trials; ++t) {
        const CVector x = random_vector(a.size(), rng);
        const CVector ya = a.apply(x);
        const CVector yb = b.apply(x);
        if (!have_scalar) {
            const double nb = yb.squaredNorm();
            if (nb == 0) {
                out.proportional = false;
                out.residual = ya.norm();
                return out;
            }
            out.scalar = yb.dot(ya) / nb;
            have_scalar = true;
            out.residual = std::abs(std::abs(out.scalar) - 1.0);
        }
        out.residual = std::max(out.residual, (ya - out.scalar * yb).norm() / x.norm());
    }
    out.proportional = out.residual <= tol;
    return out;
}

std::vector<CheckResult> relation_suite(const FiniteWeilModel& model, std::mt19937_64& rng) {
    const long p = model.p();
    const std::size_t n = model.n();
    const Operator w = op_weyl(model);
    std::vector<Proportionality> conj_n;
    std::vector<Proportionality> conj_w;
    std::vector<Proportionality> levi_hom;
    std::vector<Proportionality> unip_hom;
    for (int i = 0; i < 4; ++i) {
        const FpMatrix a = random_invertible(p, n, rng);
        const FpMatrix a2 = random_invertible(p, n, rng);
        const FpMatrix b = random_symmetric(p, n, rng);
        const FpMatrix b2 = random_symmetric(p, n, rng);
        conj_n.push_back(compare_up_to_phase(op_levi(model, a) * op_unipotent(model, b) * op_levi(model, inverse(a, p)),
                                             op_unipotent(model, mul(mul(a, b, p), transpose(a), p)), rng));
        conj_w.push_back(compare_up_to_phase(w * op_levi(model, a), op_levi(model, transpose(inverse(a, p))) * w, rng));
        levi_hom.push_back(compare_up_to_phase(op_levi(model, a) * op_levi(model, a2), op_levi(model, mul(a, a2, p)), rng));
        unip_hom.push_back(
            compare_up_to_phase(op_unipotent(model, b) * op_unipotent(model, b2), op_unipotent(model, add(b, b2, p)), rng));
    }
    std::vector<CheckResult> out;
    out.push_back(proportional_check("levi_conjugates_unipotent", conj_n));
    out.push_back(proportional_check("weyl_conjugates_levi", conj_w));
    out.push_back(proportional_check("levi_homomorphism", levi_hom));
    out.push_back(proportional_check("unipotent_homomorphism", unip_hom));
    out.push_back(proportional_check(
        "weyl_square", {compare_up_to_phase(w * w, op_levi(model, scale(FpMatrix::identity(n), -1, p)), rng)}));
    const Operator wn = w * op_unipotent(model, FpMatrix::identity(n));
    out.push_back(
        proportional_check("weyl_unipotent_order_three", {compare_up_to_phase(wn * wn * wn, Operator::identity(model.size()), rng)}));
    return out;
}

CheckResult random_word_check(const FiniteWeilModel& model, std::mt19937_64& rng, int words) {
    const long p = model.p();
    const std::size_t n = model.n();
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<std::size_t> length(2, 4);
    CheckResult r{"random_words", true, {}};
    double worst = 0;
    int done = 0;
    while (done < words) {
        std::vector<Generator> word;
        const std::size_t len = length(rng);
        for (std::size_t i = 0; i < len; ++i) {
            switch (kind(rng)) {
                case 0:
                    word.push_back({Generator::Levi, random_invertible(p, n, rng)});
                    break;
                case 1:
                    word.push_back({Generator::Unipotent, random_symmetric(p, n, rng)});
                    break;
                default:
                    word.push_back({Generator::Weyl, FpMatrix::identity(n)});
            }
        }
        std::vector<Generator> rewritten = word;
        if (!rewrite(rewritten, p, rng)) continue;
        FpMatrix g1 = FpMatrix::identity(2 * n);
        FpMatrix g2 = g1;
        Operator o1 = Operator::identity(model.size());
        Operator o2 = o1;
        for (const auto& g : word) {
            g1 = mul(g1, symplectic(g, p, n), p);
            o1 = o1 * realize(model, g);
        }
        for (const auto& g : rewritten) {
            g2 = mul(g2, symplectic(g, p, n), p);
            o2 = o2 * realize(model, g);
        }
        const auto cmp = compare_up_to_phase(o1, o2, rng);
        worst = std::max(worst, cmp.residual);
        if (!(g1 == g2) || !cmp.proportional) r.passed = false;
        ++done;
    }
    std::ostringstream os;
    os << words << " words, worst residual " << worst;
    r.detail = os.str();
    return r;
}

Complex theta_sum(const FiniteWeilModel& model, const CVector& phi) {
    if (static_cast<std::size_t>(phi.size()) != model.size()) throw PreconditionError("state vector has the wrong size");
    return phi.sum();
}

std::vector<FpMatrix> all_symmetric(long p, std::size_t n) {
    std::vector<FpMatrix> out;
    const std::size_t slots = n * (n + 1) / 2;
    std::size_t total = 1;
    for (std::size_t i = 0; i < slots; ++i) total *= static_cast<std::size_t>(p);
    for (std::size_t code = 0; code < total; ++code) {
        FpMatrix b(n, n);
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                b(i, j) = b(j, i) = static_cast<long>(c % static_cast<std::size_t>(p));
                c /= static_cast<std::size_t>(p);
            }
        }
        out.push_back(std::move(b));
    }
    return out;
}

Complex fourier_coefficient(const FiniteWeilModel& model, const CVector& phi, const FpMatrix& beta) {
    const long p = model.p();
    const auto bs = all_symmetric(p, model.n());
    Complex total = 0;
    for (const auto& b : bs) {
        total += model.psi(-trace_product(b, beta, p)) * theta_sum(model, op_unipotent(model, b).apply(phi));
    }
    return total / static_cast<double>(bs.size());
}

Complex level_set_sum(const FiniteWeilModel& model, const CVector& phi, const FpMatrix& beta) {
    Complex s = 0;
    for (std::size_t i = 0; i < model.size(); ++i) {
        if (model.grams()[i] == beta) s += phi[static_cast<Eigen::Index>(i)];
    }
    return s;
}

std::vector<FpMatrix> nondegenerate_symmetric(long p, std::size_t n) {
    std::vector<FpMatrix> out;
    for (auto& b : all_symmetric(p, n)) {
        if (det(b, p) != 0) out.push_back(std::move(b));
    }
    return out;
}

std::vector<GroupElement> orthogonal_group(const FiniteWeilModel& model) {
    const long p = model.p();
    const std::size_t m = model.m();
    const auto& a = model.diag();
    std::vector<GroupElement> gens;
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= static_cast<std::size_t>(p);
    for (std::size_t code = 1; code < total; ++code) {
        std::vector<long> u(m);
        std::size_t c = code;
        for (auto& x : u) {
            x = static_cast<long>(c % static_cast<std::size_t>(p));
            c /= static_cast<std::size_t>(p);
        }
        long qu = 0;
        for (std::size_t i = 0; i < m; ++i) qu += a[i] * u[i] * u[i];
        qu = mod(qu, p);
        if (qu == 0) continue;
        const long scale2 = mod(2 * inv_mod(qu, p), p);
        FpMatrix r = FpMatrix::identity(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) r(i, j) = mod(r(i, j) - scale2 * u[i] * u[j] % p * a[j], p);
        }
        gens.push_back({r, -1, static_cast<int>(legendre_symbol(qu, p))});
    }
    std::unordered_map<std::uint64_t, std::size_t> seen;
    std::vector<GroupElement> group{{FpMatrix::identity(m), 1, 1}};
    seen.emplace(key_of(group[0].h, p), 0);
    for (std::size_t head = 0; head < group.size(); ++head) {
        for (const auto& g : gens) {
            GroupElement next{mul(g.h, group[head].h, p), g.det * group[head].det, g.spinor * group[head].spinor};
            if (seen.emplace(key_of(next.h, p), group.size()).second) {
                group.push_back(std::move(next));
                if (group.size() > kGroupCap) throw PreconditionError("orthogonal group enumeration exceeded 10^6 elements");
            }
        }
    }
    return group;
}

OrbitCheck orbit_transitivity_check(const FiniteWeilModel& model, const FpMatrix& beta) {
    const long p = model.p();
    if (beta.rows != model.n() || beta.cols != model.n() || !(transpose(beta) == beta)) {
        throw PreconditionError("beta must be a symmetric n x n matrix");
    }
    if (det(beta, p) == 0) throw PreconditionError("beta is degenerate mod p");
    OrbitCheck out;
    std::vector<std::size_t> level;
    for (std::size_t i = 0; i < model.size(); ++i) {
        if (model.grams()[i] == beta) level.push_back(i);
    }
    const auto group = orthogonal_group(model);
    out.group_order = group.size();
    out.level_set_size = level.size();
    if (level.empty()) {
        out.transitive = true;
        return out;
    }
    const FpMatrix v0 = model.state(level[0]);
    std::vector<bool> hit(model.size(), false);
    for (const auto& g : group) {
        const std::size_t idx = model.index(mul(g.h, v0, p));
        if (!hit[idx]) {
            hit[idx] = true;
            ++out.orbit_size;
        }
    }
    out.transitive = out.orbit_size == out.level_set_size;
    return out;
}

CVector character_average(const FiniteWeilModel& model, const std::vector<GroupElement>& group, const CVector& phi,
                          int (*character)(const GroupElement&)) {
    CVector out = CVector::Zero(phi.size());
    for (const auto& g : group) {
        const double c = character(g);
        for (std::size_t y = 0; y < model.size(); ++y) {
            // sum_h c(h) phi(h^{-1} x): each phi(y) lands on x = h y.
            out[static_cast<Eigen::Index>(model.index(mul(g.h, model.state(y), model.p())))] +=
                c * phi[static_cast<Eigen::Index>(y)];
        }
    }
    return out;
}

std::vector<CheckResult> run_weil_checks(const FiniteWeilModel& model, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const long p = model.p();
    const std::size_t n = model.n();
    std::vector<CheckResult> out;

    {
        CheckResult r{"unitarity", true, {}};
        double worst = 0;
        const std::vector<Operator> gens{op_levi(model, random_invertible(p, n, rng)),
                                         op_unipotent(model, random_symmetric(p, n, rng)), op_weyl(model)};
        for (const auto& g : gens) {
            for (int t = 0; t < 3; ++t) {
                const CVector x = random_vector(model.size(), rng);
                worst = std::max(worst, std::abs(g.apply(x).norm() - x.norm()) / x.norm());
            }
        }
        r.passed = worst <= 1e-9;
        std::ostringstream os;
        os << "worst relative norm change " << worst;
        r.detail = os.str();
        out.push_back(r);
    }

    for (auto& r : relation_suite(model, rng)) out.push_back(std::move(r));
    out.push_back(random_word_check(model, rng, 100));

    {
        CheckResult r{"theta_levi_equivariance", true, {}};
        for (int t = 0; t < 5; ++t) {
            const FpMatrix a = random_invertible(p, n, rng);
            const CVector phi = random_vector(model.size(), rng);
            const Complex lhs = theta_sum(model, op_levi(model, a).apply(phi));
            const Complex rhs = static_cast<double>(model.eta(det(a, p))) * theta_sum(model, phi);
            r.passed = r.passed && std::abs(lhs - rhs) <= 1e-9 * (1 + std::abs(rhs));
        }
        out.push_back(r);
    }

    {
        CheckResult r{"weyl_constant_to_delta", true, {}};
        const CVector one = CVector::Ones(static_cast<Eigen::Index>(model.size()));
        const CVector y = op_weyl(model).apply(one);
        const double expect = std::sqrt(static_cast<double>(model.size()));
        r.passed = std::abs(std::abs(y[0]) - expect) <= 1e-9 * expect && (y.norm() - std::abs(y[0])) <= 1e-9 * expect;
        out.push_back(r);
    }

    const auto symmetric = all_symmetric(p, n);
    {
        CheckResult r{"fourier_vs_level_set", true, {}};
        double worst = 0;
        std::uniform_int_distribution<std::size_t> pick(0, symmetric.size() - 1);
        for (int t = 0; t < 20; ++t) {
            const CVector phi = random_vector(model.size(), rng);
            std::vector<FpMatrix> betas;
            if (n == 1) {
                betas = symmetric;
            } else {
                betas = {symmetric[pick(rng)]};
            }
            for (const auto& beta : betas) {
                worst = std::max(worst, std::abs(fourier_coefficient(model, phi, beta) - level_set_sum(model, phi, beta)));
            }
        }
        r.passed = worst <= 1e-9;
        std::ostringstream os;
        os << "20 random phi, worst deviation " << worst;
        r.detail = os.str();
        out.push_back(r);
    }

    {
        CheckResult r{"vanishing_off_support", true, {}};
        int tested = 0;
        for (const auto& beta : symmetric) {
            bool represented = false;
            for (const auto& g : model.grams()) represented = represented || g == beta;
            if (represented) continue;
            if (n == 2 && tested >= 3) break;
            ++tested;
            for (int t = 0; t < 3; ++t) {
                const CVector phi = random_vector(model.size(), rng);
                r.passed = r.passed && std::abs(fourier_coefficient(model, phi, beta)) <= 1e-9;
            }
        }
        r.detail = std::to_string(tested) + " unrepresented beta";
        out.push_back(r);
    }

    const auto nondeg = nondegenerate_symmetric(p, n);
    {
        CheckResult r{"orbit_transitivity", true, {}};
        std::size_t order = 0;
        for (const auto& beta : nondeg) {
            const auto o = orbit_transitivity_check(model, beta);
            order = o.group_order;
            r.passed = r.passed && o.transitive;
        }
        r.detail = std::to_string(nondeg.size()) + " beta, |O| = " + std::to_string(order);
        out.push_back(r);
    }

    {
        CheckResult r{"stabilizer_character_vanishing", true, {}};
        const auto group = orthogonal_group(model);
        int tested = 0;
        int vanishing = 0;
        for (const auto& beta : nondeg) {
            std::size_t first = model.size();
            for (std::size_t i = 0; i < model.size() && first == model.size(); ++i) {
                if (model.grams()[i] == beta) first = i;
            }
            if (first == model.size()) continue;
            if (n == 2 && tested >= 2) break;
            ++tested;
            const FpMatrix v0 = model.state(first);
            for (auto* chi : {&det_character, &spinor_character, &product_character}) {
                bool trivial_on_stab = true;
                for (const auto& g : group) {
                    if (mul(g.h, v0, p) == v0 && chi(g) != 1) trivial_on_stab = false;
                }
                // Restricted to gamma0 the average is sum_{h gamma0 = x} chi(h) phi(x),
                // a multiple of sum_{s in Stab} chi(s).
                const CVector base = delta_at(model.size(), first);
                const CVector from_delta = character_average(model, group, base, chi).cwiseProduct(base);
                const CVector from_random =
                    character_average(model, group, random_vector(model.size(), rng), chi).cwiseProduct(base);
                const Complex cd = fourier_coefficient(model, from_delta, beta);
                const Complex cr = fourier_coefficient(model, from_random, beta);
                const double c = std::max(std::abs(cd), std::abs(cr));
                if (trivial_on_stab) {
                    r.passed = r.passed && std::abs(cd) > 0.5 && std::abs(cr) > 1e-6;
                } else {
                    ++vanishing;
                    r.passed = r.passed && c <= 1e-9;
                }
            }
        }
        r.detail = std::to_string(tested) + " beta, " + std::to_string(vanishing) + " vanishing cases";
        out.push_back(r);
    }
    return out;
}

}  // namespace quadrilift::weil
