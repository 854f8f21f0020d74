#pragma once

// Small dense complex linear algebra over two fields: exact Gaussian
// rationals (QComplex) and IEEE doubles (std::complex<double>).
//
// Every routine is a template over the scalar type, so mixing an exact
// vector with a floating one is rejected at compile time. Conversions
// between the two modes are explicit (to_float, round_to_exact).

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace upbforge {

enum class Mode { exact, floating };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& s);

/// Relative tolerance for floating orthogonality and pivoting:
/// |<a|b>| <= kFloatTolerance * |a| * |b| counts as zero.
inline constexpr double kFloatTolerance = 1e-9;

/// Complex number with arbitrary-precision rational parts. gmpxx keeps
/// every intermediate result canonical (lowest terms).
class QComplex {
public:
    QComplex() = default;
    QComplex(long re) : re_(re) {}  // NOLINT: integers convert implicitly
    QComplex(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    QComplex conj() const { return {re_, -im_}; }
    /// |z|^2, exact.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    QComplex& operator+=(const QComplex& o);
    QComplex& operator-=(const QComplex& o);
    QComplex& operator*=(const QComplex& o);
    QComplex& operator/=(const QComplex& o);

    friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
    friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
    friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
    friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }
    friend QComplex operator-(const QComplex& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const QComplex& a, const QComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::string to_string(const QComplex& z);

using FComplex = std::complex<double>;

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<QComplex> {
    static constexpr Mode mode = Mode::exact;
    static QComplex conj(const QComplex& z) { return z.conj(); }
};

template <>
struct scalar_traits<FComplex> {
    static constexpr Mode mode = Mode::floating;
    static FComplex conj(const FComplex& z) { return std::conj(z); }
};

template <class T>
concept Scalar = requires { scalar_traits<T>::mode; };

/// Fixed-dimension complex vector. States are kept unnormalized.
template <Scalar T>
class Vector {
public:
    using value_type = T;

    Vector() = default;
    explicit Vector(std::size_t dim) : c_(dim) {}
    Vector(std::initializer_list<T> init) : c_(init) {}
    explicit Vector(std::vector<T> components) : c_(std::move(components)) {}

    std::size_t dim() const { return c_.size(); }
    const T& operator[](std::size_t i) const { return c_[i]; }
    T& operator[](std::size_t i) { return c_[i]; }
    std::span<const T> components() const { return c_; }

    bool is_zero() const;

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<T> c_;
};

using ExactVector = Vector<QComplex>;
using FloatVector = Vector<FComplex>;

/// Standard basis vector e_i in C^dim.
template <Scalar T>
Vector<T> unit_vector(std::size_t dim, std::size_t i);

/// <a|b> = sum conj(a_l) b_l. Throws std::invalid_argument on dimension mismatch.
template <Scalar T>
T inner_product(const Vector<T>& a, const Vector<T>& b);

/// Exact: <a|b> == 0. Floating: |<a|b>| <= tol * |a| * |b|.
template <Scalar T>
bool is_orthogonal(const Vector<T>& a, const Vector<T>& b);

/// Euclidean norm, as a double in both modes.
template <Scalar T>
double norm(const Vector<T>& v);

/// Dimension of the span. Exact mode uses exact elimination; floating mode
/// normalizes every vector and treats pivots below kFloatTolerance as zero.
template <Scalar T>
std::size_t rank(std::span<const Vector<T>> vs);

/// Basis of {x : <v|x> = 0 for all v in vs} inside C^dim; size dim - rank(vs).
/// Floating-mode output is orthonormal.
template <Scalar T>
std::vector<Vector<T>> orthocomplement_basis(std::span<const Vector<T>> vs, std::size_t dim);

/// Kronecker product in the given order; the last factor varies fastest.
template <Scalar T>
Vector<T> tensor(std::span<const Vector<T>> vs);

FloatVector to_float(const ExactVector& v);

/// Best rational approximation p/q with q <= max_denominator (continued
/// fractions); nullopt if |x - p/q| exceeds tolerance.
std::optional<mpq_class> round_rational(double x, long max_denominator, double tolerance);

/// Component-wise rational rounding of a floating vector.
std::optional<ExactVector> round_to_exact(const FloatVector& v, long max_denominator = 1000,
                                          double tolerance = 1e-7);

}  // namespace upbforge
