#include "upbforge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace upbforge {

std::string to_string(Mode mode) { return mode == Mode::exact ? "exact" : "float"; }

Mode mode_from_string(const std::string& s) {
    if (s == "exact") return Mode::exact;
    if (s == "float") return Mode::floating;
    throw std::invalid_argument("unknown mode '" + s + "' (expected exact or float)");
}

QComplex& QComplex::operator+=(const QComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

QComplex& QComplex::operator-=(const QComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

QComplex& QComplex::operator*=(const QComplex& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

QComplex& QComplex::operator/=(const QComplex& o) {
    const mpq_class n = o.norm();
    if (sgn(n) == 0) throw std::domain_error("QComplex division by zero");
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string to_string(const QComplex& z) {
    if (sgn(z.imag()) == 0) return z.real().get_str();
    std::string s = sgn(z.real()) == 0 ? "" : z.real().get_str();
    if (sgn(z.imag()) > 0 && !s.empty()) s += "+";
    return s + z.imag().get_str() + "i";
}

namespace {

bool scalar_is_zero(const QComplex& z) { return z.is_zero(); }

double magnitude(const QComplex& z) { return std::abs(z.to_complex()); }
double magnitude(const FComplex& z) { return std::abs(z); }

template <Scalar T>
using Matrix = std::vector<std::vector<T>>;

// Reduced row echelon form in place. Returns the pivot column of each
// nonzero row, in order. Floating mode expects rows scaled to unit norm so
// that the absolute pivot threshold is meaningful.
std::vector<std::size_t> row_reduce(Matrix<QComplex>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && scalar_is_zero(m[sel][col])) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const QComplex inv = QComplex(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || scalar_is_zero(m[r][col])) continue;
            const QComplex f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::size_t> row_reduce(Matrix<FComplex>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        double best = 0.0;
        for (std::size_t r = row; r < m.size(); ++r) {
            if (std::abs(m[r][col]) > best) {
                best = std::abs(m[r][col]);
                sel = r;
            }
        }
        if (best <= kFloatTolerance) {
            for (std::size_t r = row; r < m.size(); ++r) m[r][col] = 0.0;
            continue;
        }
        std::swap(m[row], m[sel]);
        const FComplex inv = 1.0 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row) continue;
            const FComplex f = m[r][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <Scalar T>
void check_same_dim(std::span<const Vector<T>> vs, std::size_t dim) {
    for (const auto& v : vs) {
        if (v.dim() != dim) throw std::invalid_argument("vectors have mismatched dimensions");
    }
}

// Rows conj(v) (optionally unit-normalized): row . x == <v|x>.
template <Scalar T>
Matrix<T> conjugate_rows(std::span<const Vector<T>> vs) {
    Matrix<T> m;
    m.reserve(vs.size());
    for (const auto& v : vs) {
        std::vector<T> row(v.dim());
        for (std::size_t i = 0; i < v.dim(); ++i) row[i] = scalar_traits<T>::conj(v[i]);
        if constexpr (scalar_traits<T>::mode == Mode::floating) {
            const double n = norm(v);
            if (n == 0.0) continue;
            for (auto& x : row) x /= n;
        }
        m.push_back(std::move(row));
    }
    return m;
}

// Scales an exact vector by the lcm of its denominators so that every
// component becomes a Gaussian integer.
ExactVector clear_denominators(ExactVector v) {
    mpz_class l = 1;
    for (const auto& z : v.components()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.real().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.imag().get_den_mpz_t());
    }
    const QComplex s{mpq_class(l)};
    for (std::size_t i = 0; i < v.dim(); ++i) v[i] *= s;
    return v;
}

}  // namespace

template <Scalar T>
bool Vector<T>::is_zero() const {
    if constexpr (scalar_traits<T>::mode == Mode::exact) {
        return std::all_of(c_.begin(), c_.end(), [](const T& z) { return z.is_zero(); });
    } else {
        return std::all_of(c_.begin(), c_.end(), [](const T& z) { return z == 0.0; });
    }
}

template <Scalar T>
Vector<T> unit_vector(std::size_t dim, std::size_t i) {
    if (i >= dim) throw std::out_of_range("unit_vector index out of range");
    Vector<T> v(dim);
    v[i] = T(1);
    return v;
}

template <Scalar T>
T inner_product(const Vector<T>& a, const Vector<T>& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner_product: dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()) + ")");
    }
    T acc{};
    for (std::size_t i = 0; i < a.dim(); ++i) acc += scalar_traits<T>::conj(a[i]) * b[i];
    return acc;
}

template <Scalar T>
double norm(const Vector<T>& v) {
    double s = 0.0;
    for (const auto& z : v.components()) s += magnitude(z) * magnitude(z);
    return std::sqrt(s);
}

template <Scalar T>
bool is_orthogonal(const Vector<T>& a, const Vector<T>& b) {
    const T ip = inner_product(a, b);
    if constexpr (scalar_traits<T>::mode == Mode::exact) {
        return ip.is_zero();
    } else {
        return std::abs(ip) <= kFloatTolerance * norm(a) * norm(b);
    }
}

template <Scalar T>
std::size_t rank(std::span<const Vector<T>> vs) {
    if (vs.empty()) return 0;
    const std::size_t dim = vs.front().dim();
    check_same_dim(vs, dim);
    auto m = conjugate_rows(vs);
    return row_reduce(m, dim).size();
}

template <Scalar T>
std::vector<Vector<T>> orthocomplement_basis(std::span<const Vector<T>> vs, std::size_t dim) {
    check_same_dim(vs, dim);
    auto m = conjugate_rows(vs);
    const auto pivots = row_reduce(m, dim);

    std::vector<bool> is_pivot(dim, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<Vector<T>> basis;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        Vector<T> x(dim);
        x[free] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
        basis.push_back(std::move(x));
    }

    if constexpr (scalar_traits<T>::mode == Mode::exact) {
        for (auto& b : basis) b = clear_denominators(std::move(b));
    } else {
        // Modified Gram-Schmidt; the nullspace basis is already independent.
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                const FComplex p = inner_product(basis[j], basis[i]);
                for (std::size_t c = 0; c < dim; ++c) basis[i][c] -= p * basis[j][c];
            }
            const double n = norm(basis[i]);
            for (std::size_t c = 0; c < dim; ++c) basis[i][c] /= n;
        }
    }
    return basis;
}

template <Scalar T>
Vector<T> tensor(std::span<const Vector<T>> vs) {
    if (vs.empty()) throw std::invalid_argument("tensor of an empty list");
    std::vector<T> acc(vs.front().components().begin(), vs.front().components().end());
    for (std::size_t f = 1; f < vs.size(); ++f) {
        const auto& b = vs[f];
        std::vector<T> next;
        next.reserve(acc.size() * b.dim());
        for (const auto& x : acc) {
            for (const auto& y : b.components()) next.push_back(x * y);
        }
        acc = std::move(next);
    }
    return Vector<T>(std::move(acc));
}

FloatVector to_float(const ExactVector& v) {
    FloatVector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i].to_complex();
    return out;
}

std::optional<mpq_class> round_rational(double x, long max_denominator, double tolerance) {
    if (!std::isfinite(x)) return std::nullopt;
    // Convergents h/k of the continued fraction of x.
    long h_prev = 1, h = static_cast<long>(std::floor(x));
    long k_prev = 0, k = 1;
    double frac = x - std::floor(x);
    mpq_class best(h, k);
    for (int iter = 0; iter < 64; ++iter) {
        if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tolerance) {
            best = mpq_class(h, k);
            best.canonicalize();
            return best;
        }
        if (frac < 1e-15) break;
        const double inv = 1.0 / frac;
        if (inv > static_cast<double>(max_denominator) + 1.0) break;
        const long a = static_cast<long>(std::floor(inv));
        frac = inv - std::floor(inv);
        const long h_next = a * h + h_prev;
        const long k_next = a * k + k_prev;
        if (k_next > max_denominator) break;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tolerance) {
        best = mpq_class(h, k);
        best.canonicalize();
        return best;
    }
    return std::nullopt;
}

std::optional<ExactVector> round_to_exact(const FloatVector& v, long max_denominator,
                                          double tolerance) {
    ExactVector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        auto re = round_rational(v[i].real(), max_denominator, tolerance);
        auto im = round_rational(v[i].imag(), max_denominator, tolerance);
        if (!re || !im) return std::nullopt;
        out[i] = QComplex(*re, *im);
    }
    return out;
}

#define UPBFORGE_INSTANTIATE(T)                                                               \
    template class Vector<T>;                                                                 \
    template Vector<T> unit_vector<T>(std::size_t, std::size_t);                              \
    template T inner_product<T>(const Vector<T>&, const Vector<T>&);                          \
    template bool is_orthogonal<T>(const Vector<T>&, const Vector<T>&);                       \
    template double norm<T>(const Vector<T>&);                                                \
    template std::size_t rank<T>(std::span<const Vector<T>>);                                 \
    template std::vector<Vector<T>> orthocomplement_basis<T>(std::span<const Vector<T>>,      \
                                                             std::size_t);                    \
    template Vector<T> tensor<T>(std::span<const Vector<T>>);

UPBFORGE_INSTANTIATE(QComplex)
UPBFORGE_INSTANTIATE(FComplex)

#undef UPBFORGE_INSTANTIATE

}  // namespace upbforge
