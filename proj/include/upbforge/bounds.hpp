#pragma once

// Closed-form lower bounds on the size of UPBs and GUPBs. All arithmetic
// is integer-exact; 64-bit overflow raises std::overflow_error.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace upbforge::bounds {

/// Local dimensions d_1 <= ... <= d_N, N >= 2, every d_m >= 2. Input order
/// is free; the constructor sorts.
class DimensionVector {
public:
    explicit DimensionVector(std::vector<int> dims);

    int parties() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const { return dims_; }
    int min() const { return dims_.front(); }
    int max() const { return dims_.back(); }
    std::int64_t total() const { return total_; }
    /// sum_m D / d_m
    std::int64_t cofactor_sum() const;
    bool any_even() const;

private:
    std::vector<int> dims_;
    std::int64_t total_;
};

std::string to_string(const DimensionVector& dv);

struct BennettBound {
    std::int64_t value;   // sum (d_m - 1) + 1
    bool strict_applies;  // some d_m even and value odd
    std::int64_t effective() const { return value + (strict_applies ? 1 : 0); }
};

BennettBound bennett_bound(const DimensionVector& dv);

/// Bipartite bound applied to A_1 | A_2..A_N.
std::int64_t trivial_gupb_bound(const DimensionVector& dv);

/// D/d_max + floor((D/d_max - 2)/(N - 1)) + 1.
std::int64_t demianowicz_bound(const DimensionVector& dv);

/// ceil((sum_m D/d_m - 1)/(N - 1)).
std::int64_t new_bound(const DimensionVector& dv);

/// floor((sum_m D/d_m - 2)/(N - 1)) + 1, the floor form of new_bound.
std::int64_t new_bound_floor_form(const DimensionVector& dv);

/// new_bound + 1 when some d_m is even and sum D/d_m - 1 is an odd
/// multiple of N - 1; nullopt otherwise.
std::optional<std::int64_t> improved_bound(const DimensionVector& dv);

/// (N^N - 1)/(N - 1) + 1 for even N >= 4.
mpz_class nn_bound(int n);

struct BoundReport {
    DimensionVector dims;
    BennettBound bennett;
    std::int64_t trivial_gupb;
    std::int64_t demianowicz;
    std::int64_t new_bound;
    bool improved_applies;
    std::optional<std::int64_t> improved;
    bool gupb_admissible;  // all d_m >= 3
    bool new_dominates_demianowicz;
    bool new_beats_trivial;
    /// Largest applicable GUPB lower bound.
    std::int64_t best_gupb() const;
};

BoundReport compare(const DimensionVector& dv);
std::vector<BoundReport> sweep(std::span<const DimensionVector> dims);

/// The six dimension vectors of the published comparison table.
std::vector<DimensionVector> table1_dims();

enum class Family { A, B };

/// Family A: (2p, 2p, 3p - 1). Family B: (2p - 1, dt, 3p - 2), 2p - 1 <= dt <= 3p - 2.
struct NontrivialityCheck {
    Family family;
    int p;
    int d_tilde;  // family B only
    DimensionVector dims;
    std::int64_t new_bound;
    std::int64_t trivial_gupb;
    /// d_1 + D/d_1 (the trivial bound before the parity correction).
    std::int64_t trivial_side;
    bool nontrivial;  // new_bound > trivial_gupb
};

/// Throws std::invalid_argument for p < 2 or d_tilde outside [2p-1, 3p-2].
NontrivialityCheck nontriviality(Family family, int p, int d_tilde = 0);

}  // namespace upbforge::bounds
