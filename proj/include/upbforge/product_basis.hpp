#pragma once

// Sets of product states, their orthogonality graphs, and the
// graph-theoretic unextendibility test: a set of mutually orthogonal
// product states is a UPB exactly when no choice of one unsaturated vertex
// set per party covers every vertex.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "upbforge/graph.hpp"
#include "upbforge/linalg.hpp"

namespace upbforge {

/// One local vector per party.
template <Scalar T>
using ProductState = std::vector<Vector<T>>;

/// k product states over N >= 2 parties with local dimensions d_1..d_N.
/// Parties and states are 1-based in the public interface.
template <Scalar T>
class ProductStateSet {
public:
    ProductStateSet(std::vector<int> dims, std::vector<ProductState<T>> states);

    int parties() const { return static_cast<int>(dims_.size()); }
    int size() const { return static_cast<int>(states_.size()); }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int party) const;
    /// D = product of the local dimensions.
    std::int64_t total_dim() const;

    const std::vector<ProductState<T>>& states() const { return states_; }
    const Vector<T>& local(int state, int party) const;
    /// The k local vectors of one party, in state order.
    std::vector<Vector<T>> party_vectors(int party) const;
    /// Full tensor-product vector of one state.
    Vector<T> full_state(int state) const;

private:
    std::vector<int> dims_;
    std::vector<ProductState<T>> states_;
};

using ExactSet = ProductStateSet<QComplex>;
using FloatSet = ProductStateSet<FComplex>;
using AnySet = std::variant<ExactSet, FloatSet>;

FloatSet to_float(const ExactSet& set);

/// Raised when the local vectors of a party do not span C^{d_m}; any
/// vector in their orthocomplement extends the set.
class TriviallyExtendible : public std::runtime_error {
public:
    explicit TriviallyExtendible(int party)
        : std::runtime_error("local vectors of party " + std::to_string(party) +
                             " do not span the local space"),
          party_(party) {}
    int party() const { return party_; }

private:
    int party_;
};

/// Maximal unsaturated vertex set of one party together with a normal
/// vector psi: members are exactly the vertices whose local vector is
/// orthogonal to psi.
template <Scalar T>
struct UnsaturatedSet {
    VertexMask members = 0;
    Vector<T> normal;
};

template <Scalar T>
Graph orthogonality_graph(const ProductStateSet<T>& set, int party);

template <Scalar T>
std::vector<Graph> orthogonality_graphs(const ProductStateSet<T>& set);

/// True iff the union of the orthogonality graphs is K_k.
template <Scalar T>
bool mutual_orthogonality(const ProductStateSet<T>& set);

/// All inclusion-maximal unsaturated sets of one party, sorted by
/// descending size then ascending mask. Throws TriviallyExtendible.
template <Scalar T>
std::vector<UnsaturatedSet<T>> maximal_unsaturated_sets(const ProductStateSet<T>& set, int party);

enum class UpbFailure {
    none,
    not_mutually_orthogonal,
    spans_full_space,
    trivially_extendible,
    cover_found,
};

std::string to_string(UpbFailure f);

template <Scalar T>
struct UpbVerdict {
    bool is_upb = false;
    /// Verdicts computed in floating mode are numerical, not proofs.
    bool numerical = scalar_traits<T>::mode == Mode::floating;
    UpbFailure failure = UpbFailure::none;
    /// Product state orthogonal to every member, present whenever the set is
    /// orthogonal but extendible.
    std::optional<ProductState<T>> witness;
    std::optional<Edge> non_orthogonal_pair;
    std::optional<int> deficient_party;
    /// Per party, the unsaturated set used in the covering N-tuple (0 for
    /// parties left unconstrained).
    std::vector<VertexMask> cover;

    std::vector<Graph> graphs;
    /// Per party; empty for a party that does not span its local space.
    std::vector<std::vector<UnsaturatedSet<T>>> maximal_sets;
    /// degrees[m-1][v-1] = deg of v in G_m.
    std::vector<std::vector<int>> degrees;
};

template <Scalar T>
UpbVerdict<T> is_upb(const ProductStateSet<T>& set);

/// Exact check of <witness|state_i> = 0 for all i (tolerance-based in
/// floating mode).
template <Scalar T>
bool witness_is_orthogonal(const ProductStateSet<T>& set, const ProductState<T>& witness);

/// Upper bound on the size of any unsaturated set of party m in a UPB of
/// size k: k - 1 - sum_{i != m} (d_i - 1).
std::int64_t unsaturated_size_bound(std::span<const int> dims, int k, int party);

struct DegreeViolation {
    int party;
    int vertex;
    int degree;
    int lower;
    int upper;
};

struct DegreeBoundsReport {
    std::vector<int> lower;  // per party: d_m - 1
    std::vector<int> upper;  // per party: k - 1 - sum_{i != m}(d_i - 1)
    std::vector<DegreeViolation> violations;
    /// Every vertex degree equals both bounds (which forces lower == upper).
    bool tight = false;
};

template <Scalar T>
DegreeBoundsReport degree_bounds_check(const ProductStateSet<T>& set);

/// Split of the parties {1..N} into two nonempty sides.
struct Bipartition {
    std::vector<int> side1;
    std::vector<int> side2;
};

std::string to_string(const Bipartition& bp);

/// All 2^{N-1} - 1 bipartitions with party 1 on side1, ordered by |side1|
/// then lexicographically.
std::vector<Bipartition> enumerate_bipartitions(int parties);

/// Two-party set whose local vectors are the tensor products of each
/// side's members in ascending party order.
template <Scalar T>
ProductStateSet<T> group(const ProductStateSet<T>& set, const Bipartition& bp);

template <Scalar T>
struct BipartitionResult {
    Bipartition bipartition;
    UpbVerdict<T> verdict;
};

template <Scalar T>
struct GupbVerdict {
    bool is_gupb = false;
    std::vector<BipartitionResult<T>> results;
    /// Index into results of the first failing bipartition.
    std::optional<std::size_t> first_failure;
};

template <Scalar T>
GupbVerdict<T> is_gupb(const ProductStateSet<T>& set);

struct RegularityResult {
    int party;
    std::int64_t target_degree;  // k - D/d_m
    bool regular;
    std::vector<int> offending_vertices;
};

template <Scalar T>
std::vector<RegularityResult> check_minimal_gupb_regularity(const ProductStateSet<T>& set);

/// Sufficient conditions for a 13-state GUPB in C^3 x C^3 x C^3.
struct Prop7Report {
    bool union_complete = false;
    std::vector<bool> four_regular;  // per party
    bool condition1 = false;

    std::int64_t five_subsets_per_party = 0;
    std::vector<std::int64_t> rank_deficient_five_subsets;  // per party
    std::vector<std::optional<VertexMask>> first_bad_five_subset;
    bool condition2 = false;

    std::int64_t nine_subsets_per_pair = 0;
    std::vector<std::int64_t> rank_deficient_nine_subsets;  // per pair (1,2),(1,3),(2,3)
    std::vector<std::optional<VertexMask>> first_bad_nine_subset;
    bool condition3 = false;

    bool all() const { return condition1 && condition2 && condition3; }
};

/// Throws std::invalid_argument unless N = 3, dims = (3,3,3), k = 13.
template <Scalar T>
Prop7Report check_prop7(const ProductStateSet<T>& set);

/// The two fixed example UPBs with integer amplitudes:
/// 1 -> six states in C^2 x C^2 x C^2 x C^3, 2 -> eight states in C^2 x C^2 x C^3 x C^3.
ExactSet example_upb(int which);

}  // namespace upbforge
