#include "upbforge/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace upbforge::bounds {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("dimension product overflows 64 bits");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("bound overflows 64 bits");
    return r;
}

// Floor and ceiling division for a positive divisor.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

DimensionVector::DimensionVector(std::vector<int> dims) : dims_(std::move(dims)), total_(1) {
    if (dims_.size() < 2) throw std::invalid_argument("need at least two local dimensions");
    for (int d : dims_) {
        if (d < 2) throw std::invalid_argument("local dimensions must be >= 2");
        total_ = checked_mul(total_, d);
    }
    std::sort(dims_.begin(), dims_.end());
}

std::int64_t DimensionVector::cofactor_sum() const {
    std::int64_t s = 0;
    for (int d : dims_) s = checked_add(s, total_ / d);
    return s;
}

bool DimensionVector::any_even() const {
    return std::any_of(dims_.begin(), dims_.end(), [](int d) { return d % 2 == 0; });
}

std::string to_string(const DimensionVector& dv) {
    std::string s = "(";
    for (std::size_t i = 0; i < dv.dims().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(dv.dims()[i]);
    }
    return s + ")";
}

BennettBound bennett_bound(const DimensionVector& dv) {
    std::int64_t v = 1;
    for (int d : dv.dims()) v += d - 1;
    return {v, dv.any_even() && v % 2 == 1};
}

std::int64_t trivial_gupb_bound(const DimensionVector& dv) {
    const std::int64_t d1 = dv.min();
    const std::int64_t rest = dv.total() / d1;
    return d1 % 2 == 0 && rest % 2 == 0 ? d1 + rest : d1 + rest - 1;
}

std::int64_t demianowicz_bound(const DimensionVector& dv) {
    const std::int64_t q = dv.total() / dv.max();
    return q + floor_div(q - 2, dv.parties() - 1) + 1;
}

std::int64_t new_bound(const DimensionVector& dv) {
    return ceil_div(dv.cofactor_sum() - 1, dv.parties() - 1);
}

std::int64_t new_bound_floor_form(const DimensionVector& dv) {
    return floor_div(dv.cofactor_sum() - 2, dv.parties() - 1) + 1;
}

std::optional<std::int64_t> improved_bound(const DimensionVector& dv) {
    const std::int64_t numer = dv.cofactor_sum() - 1;
    const std::int64_t n1 = dv.parties() - 1;
    if (!dv.any_even() || numer % n1 != 0) return std::nullopt;
    const std::int64_t t = numer / n1;
    if (t % 2 == 0) return std::nullopt;
    return t + 1;
}

mpz_class nn_bound(int n) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("N^N bound needs an even N >= 4");
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    return (power - 1) / (n - 1) + 1;
}

std::int64_t BoundReport::best_gupb() const {
    std::int64_t best = std::max({trivial_gupb, demianowicz, new_bound});
    if (improved) best = std::max(best, *improved);
    return best;
}

BoundReport compare(const DimensionVector& dv) {
    const auto improved = improved_bound(dv);
    const std::int64_t nb = new_bound(dv);
    const std::int64_t dem = demianowicz_bound(dv);
    const std::int64_t triv = trivial_gupb_bound(dv);
    return BoundReport{
        dv,
        bennett_bound(dv),
        triv,
        dem,
        nb,
        improved.has_value(),
        improved,
        dv.min() >= 3,
        nb >= dem,
        nb > triv,
    };
}

std::vector<BoundReport> sweep(std::span<const DimensionVector> dims) {
    std::vector<BoundReport> out;
    out.reserve(dims.size());
    for (const auto& dv : dims) out.push_back(compare(dv));
    return out;
}

std::vector<DimensionVector> table1_dims() {
    return {
        DimensionVector({3, 3, 4}),       DimensionVector({3, 3, 5}),
        DimensionVector({3, 3, 3, 4}),    DimensionVector({3, 3, 4, 4}),
        DimensionVector({3, 3, 3, 3, 4}), DimensionVector({3, 3, 3, 4, 4}),
    };
}

NontrivialityCheck nontriviality(Family family, int p, int d_tilde) {
    if (p < 2) throw std::invalid_argument("family parameter p must be >= 2");
    std::vector<int> dims;
    if (family == Family::A) {
        dims = {2 * p, 2 * p, 3 * p - 1};
        d_tilde = 0;
    } else {
        if (d_tilde < 2 * p - 1 || d_tilde > 3 * p - 2) {
            throw std::invalid_argument("d_tilde must lie in [2p-1, 3p-2]");
        }
        dims = {2 * p - 1, d_tilde, 3 * p - 2};
    }
    DimensionVector dv(dims);
    const std::int64_t nb = new_bound(dv);
    const std::int64_t triv = trivial_gupb_bound(dv);
    return {family, p, d_tilde, dv, nb, triv, dv.min() + dv.total() / dv.min(), nb > triv};
}

}  // namespace upbforge::bounds
