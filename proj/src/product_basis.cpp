#include "upbforge/product_basis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "upbforge/parallel.hpp"

namespace upbforge {

namespace {

// Calls fn(mask) for every r-element subset of {0..n-1} (Gosper's hack).
template <class Fn>
void for_each_subset(int n, int r, Fn&& fn) {
    if (r < 0 || r > n) return;
    if (r == 0) {
        fn(VertexMask{0});
        return;
    }
    const VertexMask limit = all_vertices(n);
    VertexMask s = (VertexMask{1} << r) - 1;
    while (true) {
        fn(s);
        const VertexMask c = s & (~s + 1);
        const VertexMask rr = s + c;
        if (rr == 0 || (rr & ~limit) != 0) break;
        s = (((rr ^ s) >> 2) / c) | rr;
        if ((s & ~limit) != 0) break;
    }
}

template <Scalar T>
std::vector<Vector<T>> select(const std::vector<Vector<T>>& vs, VertexMask mask) {
    std::vector<Vector<T>> out;
    for (int v : mask_to_vertices(mask)) out.push_back(vs[static_cast<std::size_t>(v - 1)]);
    return out;
}

template <Scalar T>
std::size_t rank_of(const std::vector<Vector<T>>& vs) {
    return rank(std::span<const Vector<T>>(vs));
}

std::int64_t binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    std::int64_t b = 1;
    for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
    return b;
}

}  // namespace

std::string to_string(UpbFailure f) {
    switch (f) {
        case UpbFailure::none: return "none";
        case UpbFailure::not_mutually_orthogonal: return "not_mutually_orthogonal";
        case UpbFailure::spans_full_space: return "spans_full_space";
        case UpbFailure::trivially_extendible: return "trivially_extendible";
        case UpbFailure::cover_found: return "cover_found";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// ProductStateSet

template <Scalar T>
ProductStateSet<T>::ProductStateSet(std::vector<int> dims, std::vector<ProductState<T>> states)
    : dims_(std::move(dims)), states_(std::move(states)) {
    if (dims_.size() < 2) throw std::invalid_argument("a product-state set needs N >= 2 parties");
    if (states_.empty()) throw std::invalid_argument("a product-state set needs k >= 1 states");
    if (states_.size() > static_cast<std::size_t>(kMaxVertices)) {
        throw std::invalid_argument("at most 64 states are supported");
    }
    for (int d : dims_) {
        if (d < 1) throw std::invalid_argument("local dimensions must be positive");
    }
    for (std::size_t i = 0; i < states_.size(); ++i) {
        const auto& st = states_[i];
        if (st.size() != dims_.size()) {
            throw std::invalid_argument("state " + std::to_string(i + 1) + " has " +
                                        std::to_string(st.size()) + " local vectors, expected " +
                                        std::to_string(dims_.size()));
        }
        for (std::size_t m = 0; m < st.size(); ++m) {
            if (st[m].dim() != static_cast<std::size_t>(dims_[m])) {
                throw std::invalid_argument("state " + std::to_string(i + 1) + ", party " +
                                            std::to_string(m + 1) + ": dimension mismatch");
            }
            if (st[m].is_zero()) {
                throw std::invalid_argument("state " + std::to_string(i + 1) + ", party " +
                                            std::to_string(m + 1) + ": zero local vector");
            }
        }
    }
}

template <Scalar T>
int ProductStateSet<T>::dim(int party) const {
    if (party < 1 || party > parties()) throw std::out_of_range("party out of range");
    return dims_[static_cast<std::size_t>(party - 1)];
}

template <Scalar T>
std::int64_t ProductStateSet<T>::total_dim() const {
    return std::accumulate(dims_.begin(), dims_.end(), std::int64_t{1},
                           [](std::int64_t a, int d) { return a * d; });
}

template <Scalar T>
const Vector<T>& ProductStateSet<T>::local(int state, int party) const {
    if (state < 1 || state > size()) throw std::out_of_range("state out of range");
    if (party < 1 || party > parties()) throw std::out_of_range("party out of range");
    return states_[static_cast<std::size_t>(state - 1)][static_cast<std::size_t>(party - 1)];
}

template <Scalar T>
std::vector<Vector<T>> ProductStateSet<T>::party_vectors(int party) const {
    if (party < 1 || party > parties()) throw std::out_of_range("party out of range");
    std::vector<Vector<T>> out;
    out.reserve(states_.size());
    for (const auto& st : states_) out.push_back(st[static_cast<std::size_t>(party - 1)]);
    return out;
}

template <Scalar T>
Vector<T> ProductStateSet<T>::full_state(int state) const {
    if (state < 1 || state > size()) throw std::out_of_range("state out of range");
    return tensor(std::span<const Vector<T>>(states_[static_cast<std::size_t>(state - 1)]));
}

FloatSet to_float(const ExactSet& set) {
    std::vector<ProductState<FComplex>> states;
    for (const auto& st : set.states()) {
        ProductState<FComplex> f;
        for (const auto& v : st) f.push_back(to_float(v));
        states.push_back(std::move(f));
    }
    return {set.dims(), std::move(states)};
}

// ---------------------------------------------------------------------------
// Graphs and unsaturated sets

template <Scalar T>
Graph orthogonality_graph(const ProductStateSet<T>& set, int party) {
    const auto vs = set.party_vectors(party);
    Graph g(set.size());
    for (int i = 1; i <= set.size(); ++i) {
        for (int j = i + 1; j <= set.size(); ++j) {
            if (is_orthogonal(vs[static_cast<std::size_t>(i - 1)], vs[static_cast<std::size_t>(j - 1)])) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

template <Scalar T>
std::vector<Graph> orthogonality_graphs(const ProductStateSet<T>& set) {
    std::vector<Graph> gs;
    for (int m = 1; m <= set.parties(); ++m) gs.push_back(orthogonality_graph(set, m));
    return gs;
}

template <Scalar T>
bool mutual_orthogonality(const ProductStateSet<T>& set) {
    const auto gs = orthogonality_graphs(set);
    return graph_union(gs).edge_count() == complete_graph(set.size()).edge_count();
}

template <Scalar T>
std::vector<UnsaturatedSet<T>> maximal_unsaturated_sets(const ProductStateSet<T>& set, int party) {
    const auto vs = set.party_vectors(party);
    const int d = set.dim(party);
    const int k = set.size();
    if (rank_of(vs) < static_cast<std::size_t>(d)) throw TriviallyExtendible(party);

    // Every maximal unsaturated set spans a hyperplane, so it contains an
    // independent (d-1)-subset B and equals the set of vectors orthogonal to
    // the normal of span(B).
    std::vector<UnsaturatedSet<T>> found;
    for_each_subset(k, d - 1, [&](VertexMask b) {
        for (const auto& w : found) {
            if ((b & ~w.members) == 0) return;  // B lies in a known hyperplane
        }
        const auto sub = select(vs, b);
        if (rank_of(sub) != static_cast<std::size_t>(d - 1)) return;
        auto normals = orthocomplement_basis(std::span<const Vector<T>>(sub), static_cast<std::size_t>(d));
        UnsaturatedSet<T> w{0, std::move(normals.front())};
        for (int i = 1; i <= k; ++i) {
            if (is_orthogonal(w.normal, vs[static_cast<std::size_t>(i - 1)])) w.members |= vertex_bit(i);
        }
        found.push_back(std::move(w));
    });

    // Distinct hyperplanes give incomparable sets; the filter only matters
    // for floating inputs where tolerances can blur that.
    std::vector<UnsaturatedSet<T>> maximal;
    for (std::size_t i = 0; i < found.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < found.size() && !dominated; ++j) {
            if (i == j) continue;
            const VertexMask a = found[i].members, b = found[j].members;
            dominated = (a & ~b) == 0 && (a != b || j < i);
        }
        if (!dominated) maximal.push_back(found[i]);
    }
    std::sort(maximal.begin(), maximal.end(), [](const auto& x, const auto& y) {
        const int px = popcount(x.members), py = popcount(y.members);
        return px != py ? px > py : x.members < y.members;
    });
    return maximal;
}

// ---------------------------------------------------------------------------
// UPB decision

template <Scalar T>
bool witness_is_orthogonal(const ProductStateSet<T>& set, const ProductState<T>& witness) {
    if (witness.size() != static_cast<std::size_t>(set.parties())) return false;
    for (const auto& st : set.states()) {
        if constexpr (scalar_traits<T>::mode == Mode::exact) {
            QComplex prod(1);
            for (std::size_t m = 0; m < st.size(); ++m) prod *= inner_product(witness[m], st[m]);
            if (!prod.is_zero()) return false;
        } else {
            double prod = 1.0;
            for (std::size_t m = 0; m < st.size(); ++m) {
                prod *= std::abs(inner_product(witness[m], st[m])) / (norm(witness[m]) * norm(st[m]));
            }
            if (prod > kFloatTolerance) return false;
        }
    }
    return true;
}

namespace {

struct PartyChoices {
    int party;  // 0-based
    std::vector<VertexMask> masks;
    int max_size = 0;
    VertexMask union_all = 0;
};

// Depth-first search for one unsaturated set per party whose union is
// `target`. Parties are visited in `order`; returns the chosen mask per
// party on success (0 for parties never reached).
class CoverSearch {
public:
    CoverSearch(std::vector<PartyChoices> order, VertexMask target)
        : order_(std::move(order)), target_(target) {
        suffix_size_.assign(order_.size() + 1, 0);
        suffix_union_.assign(order_.size() + 1, 0);
        for (std::size_t i = order_.size(); i-- > 0;) {
            suffix_size_[i] = suffix_size_[i + 1] + order_[i].max_size;
            suffix_union_[i] = suffix_union_[i + 1] | order_[i].union_all;
        }
        chosen_.assign(order_.size(), 0);
    }

    std::optional<std::vector<VertexMask>> run() {
        if (!dfs(0, 0)) return std::nullopt;
        std::vector<VertexMask> per_party(order_.size(), 0);
        for (std::size_t i = 0; i < order_.size(); ++i) per_party[order_[i].party] = chosen_[i];
        return per_party;
    }

private:
    bool dfs(std::size_t depth, VertexMask covered) {
        const VertexMask remaining = target_ & ~covered;
        if (remaining == 0) {
            for (std::size_t i = depth; i < chosen_.size(); ++i) chosen_[i] = 0;
            return true;
        }
        if (depth == order_.size()) return false;
        if (popcount(remaining) > suffix_size_[depth]) return false;
        if ((remaining & ~suffix_union_[depth]) != 0) return false;

        std::vector<VertexMask> tried;
        for (VertexMask m : order_[depth].masks) {
            const VertexMask gain = m & remaining;
            bool redundant = false;
            for (VertexMask t : tried) {
                if ((gain & ~t) == 0) {
                    redundant = true;
                    break;
                }
            }
            if (redundant) continue;
            tried.push_back(gain);
            chosen_[depth] = m;
            if (dfs(depth + 1, covered | m)) return true;
        }
        return false;
    }

    std::vector<PartyChoices> order_;
    VertexMask target_;
    std::vector<int> suffix_size_;
    std::vector<VertexMask> suffix_union_;
    std::vector<VertexMask> chosen_;
};

}  // namespace

template <Scalar T>
UpbVerdict<T> is_upb(const ProductStateSet<T>& set) {
    UpbVerdict<T> v;
    const int n = set.parties();
    const int k = set.size();
    v.graphs = orthogonality_graphs(set);
    for (const auto& g : v.graphs) {
        std::vector<int> deg;
        for (int i = 1; i <= k; ++i) deg.push_back(g.degree(i));
        v.degrees.push_back(std::move(deg));
    }

    const Graph u = graph_union(v.graphs);
    for (int i = 1; i <= k && !v.non_orthogonal_pair; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            if (!u.has_edge(i, j)) {
                v.non_orthogonal_pair = Edge{i, j};
                break;
            }
        }
    }
    if (v.non_orthogonal_pair) {
        v.failure = UpbFailure::not_mutually_orthogonal;
        return v;
    }
    // k mutually orthogonal nonzero vectors span a k-dimensional subspace.
    if (k >= set.total_dim()) {
        v.failure = UpbFailure::spans_full_space;
        return v;
    }

    v.maximal_sets.resize(static_cast<std::size_t>(n));
    for (int m = 1; m <= n; ++m) {
        try {
            v.maximal_sets[static_cast<std::size_t>(m - 1)] = maximal_unsaturated_sets(set, m);
        } catch (const TriviallyExtendible&) {
            if (!v.deficient_party) v.deficient_party = m;
        }
    }

    auto unit_elsewhere = [&](int party, Vector<T> local) {
        ProductState<T> w;
        for (int m = 1; m <= n; ++m) {
            w.push_back(m == party ? local : unit_vector<T>(static_cast<std::size_t>(set.dim(m)), 0));
        }
        return w;
    };

    if (v.deficient_party) {
        const int m = *v.deficient_party;
        const auto vs = set.party_vectors(m);
        auto comp = orthocomplement_basis(std::span<const Vector<T>>(vs), static_cast<std::size_t>(set.dim(m)));
        v.failure = UpbFailure::trivially_extendible;
        v.witness = unit_elsewhere(m, std::move(comp.front()));
    } else {
        std::vector<PartyChoices> order;
        for (int m = 0; m < n; ++m) {
            PartyChoices pc{m, {}, 0, 0};
            for (const auto& w : v.maximal_sets[static_cast<std::size_t>(m)]) {
                pc.masks.push_back(w.members);
                pc.max_size = std::max(pc.max_size, popcount(w.members));
                pc.union_all |= w.members;
            }
            order.push_back(std::move(pc));
        }
        std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
            return a.masks.size() < b.masks.size();
        });
        auto cover = CoverSearch(std::move(order), all_vertices(k)).run();
        if (!cover) {
            v.is_upb = true;
            return v;
        }
        v.failure = UpbFailure::cover_found;
        v.cover = *cover;
        ProductState<T> w;
        for (int m = 1; m <= n; ++m) {
            const VertexMask chosen = v.cover[static_cast<std::size_t>(m - 1)];
            const auto& sets = v.maximal_sets[static_cast<std::size_t>(m - 1)];
            auto it = std::find_if(sets.begin(), sets.end(),
                                   [&](const auto& s) { return chosen != 0 && s.members == chosen; });
            w.push_back(it != sets.end() ? it->normal
                                         : unit_vector<T>(static_cast<std::size_t>(set.dim(m)), 0));
        }
        v.witness = std::move(w);
    }

    if (!witness_is_orthogonal(set, *v.witness)) {
        throw std::logic_error("internal error: extension witness is not orthogonal to the set");
    }
    return v;
}

std::int64_t unsaturated_size_bound(std::span<const int> dims, int k, int party) {
    if (party < 1 || party > static_cast<int>(dims.size())) throw std::out_of_range("party out of range");
    std::int64_t b = k - 1;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (static_cast<int>(i) != party - 1) b -= dims[i] - 1;
    }
    return b;
}

template <Scalar T>
DegreeBoundsReport degree_bounds_check(const ProductStateSet<T>& set) {
    DegreeBoundsReport r;
    r.tight = true;
    for (int m = 1; m <= set.parties(); ++m) {
        const Graph g = orthogonality_graph(set, m);
        const int lo = set.dim(m) - 1;
        const int hi = static_cast<int>(unsaturated_size_bound(set.dims(), set.size(), m));
        r.lower.push_back(lo);
        r.upper.push_back(hi);
        for (int i = 1; i <= set.size(); ++i) {
            const int deg = g.degree(i);
            if (deg < lo || deg > hi) r.violations.push_back({m, i, deg, lo, hi});
            if (deg != lo || deg != hi) r.tight = false;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Bipartitions and GUPB

std::string to_string(const Bipartition& bp) {
    auto side = [](const std::vector<int>& s) {
        std::string out;
        for (int p : s) out += "A" + std::to_string(p);
        return out;
    };
    return side(bp.side1) + "|" + side(bp.side2);
}

std::vector<Bipartition> enumerate_bipartitions(int parties) {
    if (parties < 2 || parties > 30) throw std::invalid_argument("bipartitions need 2..30 parties");
    std::vector<std::uint32_t> masks;  // bits over parties 2..N that join side1
    const std::uint32_t rest = (std::uint32_t{1} << (parties - 1)) - 1;
    for (std::uint32_t m = 0; m < rest; ++m) masks.push_back(m);
    std::vector<Bipartition> out;
    for (std::uint32_t m : masks) {
        Bipartition bp;
        bp.side1.push_back(1);
        for (int p = 2; p <= parties; ++p) {
            ((m >> (p - 2)) & 1U ? bp.side1 : bp.side2).push_back(p);
        }
        out.push_back(std::move(bp));
    }
    std::stable_sort(out.begin(), out.end(), [](const Bipartition& a, const Bipartition& b) {
        if (a.side1.size() != b.side1.size()) return a.side1.size() < b.side1.size();
        return a.side1 < b.side1;
    });
    return out;
}

template <Scalar T>
ProductStateSet<T> group(const ProductStateSet<T>& set, const Bipartition& bp) {
    const int n = set.parties();
    std::vector<int> seen(static_cast<std::size_t>(n + 1), 0);
    for (const auto* side : {&bp.side1, &bp.side2}) {
        if (side->empty()) throw std::invalid_argument("bipartition side is empty");
        for (int p : *side) {
            if (p < 1 || p > n) throw std::invalid_argument("bipartition names an unknown party");
            if (seen[static_cast<std::size_t>(p)]++) throw std::invalid_argument("bipartition sides overlap");
        }
    }
    for (int p = 1; p <= n; ++p) {
        if (!seen[static_cast<std::size_t>(p)]) throw std::invalid_argument("bipartition misses a party");
    }

    std::vector<int> side1 = bp.side1, side2 = bp.side2;
    std::sort(side1.begin(), side1.end());
    std::sort(side2.begin(), side2.end());
    auto side_dim = [&](const std::vector<int>& side) {
        int d = 1;
        for (int p : side) d *= set.dim(p);
        return d;
    };
    std::vector<ProductState<T>> states;
    for (const auto& st : set.states()) {
        ProductState<T> grouped;
        for (const auto* side : {&side1, &side2}) {
            std::vector<Vector<T>> members;
            for (int p : *side) members.push_back(st[static_cast<std::size_t>(p - 1)]);
            grouped.push_back(tensor(std::span<const Vector<T>>(members)));
        }
        states.push_back(std::move(grouped));
    }
    return ProductStateSet<T>({side_dim(side1), side_dim(side2)}, std::move(states));
}

template <Scalar T>
GupbVerdict<T> is_gupb(const ProductStateSet<T>& set) {
    const auto bps = enumerate_bipartitions(set.parties());
    GupbVerdict<T> out;
    std::vector<std::optional<UpbVerdict<T>>> verdicts(bps.size());
    parallel_for(bps.size(), [&](std::size_t i) { verdicts[i] = is_upb(group(set, bps[i])); });
    out.is_gupb = true;
    for (std::size_t i = 0; i < bps.size(); ++i) {
        if (!verdicts[i]->is_upb) {
            out.is_gupb = false;
            if (!out.first_failure) out.first_failure = i;
        }
        out.results.push_back({bps[i], std::move(*verdicts[i])});
    }
    return out;
}

template <Scalar T>
std::vector<RegularityResult> check_minimal_gupb_regularity(const ProductStateSet<T>& set) {
    std::vector<RegularityResult> out;
    const std::int64_t D = set.total_dim();
    for (int m = 1; m <= set.parties(); ++m) {
        const std::int64_t target = set.size() - D / set.dim(m);
        const Graph g = orthogonality_graph(set, m);
        RegularityResult r{m, target, false, {}};
        for (int v = 1; v <= set.size(); ++v) {
            if (g.degree(v) != target) r.offending_vertices.push_back(v);
        }
        r.regular = r.offending_vertices.empty();
        out.push_back(std::move(r));
    }
    return out;
}

template <Scalar T>
Prop7Report check_prop7(const ProductStateSet<T>& set) {
    if (set.parties() != 3 || set.dims() != std::vector<int>{3, 3, 3} || set.size() != 13) {
        throw std::invalid_argument("condition check needs 13 states in C^3 x C^3 x C^3");
    }
    Prop7Report r;
    const auto gs = orthogonality_graphs(set);
    r.union_complete = graph_union(gs).edge_count() == 78;
    r.condition1 = r.union_complete;
    for (const auto& g : gs) {
        r.four_regular.push_back(g.is_regular(4));
        r.condition1 = r.condition1 && r.four_regular.back();
    }

    // Six independent sweeps: three parties (rank of 5-subsets in C^3) and
    // three pairs (rank of 9-subsets of pairwise tensors in C^9).
    const std::array<std::array<int, 2>, 3> pairs{{{1, 2}, {1, 3}, {2, 3}}};
    std::array<std::vector<Vector<T>>, 6> families;
    for (int m = 1; m <= 3; ++m) families[static_cast<std::size_t>(m - 1)] = set.party_vectors(m);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto& fam = families[3 + p];
        for (int i = 1; i <= 13; ++i) {
            const std::array<Vector<T>, 2> two{set.local(i, pairs[p][0]), set.local(i, pairs[p][1])};
            fam.push_back(tensor(std::span<const Vector<T>>(two)));
        }
    }
    std::array<std::int64_t, 6> bad{};
    std::array<std::optional<VertexMask>, 6> first{};
    parallel_for(6, [&](std::size_t f) {
        const int size = f < 3 ? 5 : 9;
        const std::size_t target = f < 3 ? 3 : 9;
        for_each_subset(13, size, [&](VertexMask s) {
            if (rank_of(select(families[f], s)) != target) {
                ++bad[f];
                if (!first[f]) first[f] = s;
            }
        });
    });
    r.five_subsets_per_party = binomial(13, 5);
    r.nine_subsets_per_pair = binomial(13, 9);
    for (std::size_t f = 0; f < 3; ++f) {
        r.rank_deficient_five_subsets.push_back(bad[f]);
        r.first_bad_five_subset.push_back(first[f]);
        r.rank_deficient_nine_subsets.push_back(bad[3 + f]);
        r.first_bad_nine_subset.push_back(first[3 + f]);
    }
    r.condition2 = std::all_of(bad.begin(), bad.begin() + 3, [](auto b) { return b == 0; });
    r.condition3 = std::all_of(bad.begin() + 3, bad.end(), [](auto b) { return b == 0; });
    return r;
}

// ---------------------------------------------------------------------------
// Fixtures

ExactSet example_upb(int which) {
    auto v = [](std::initializer_list<long> xs) {
        ExactVector out(xs.size());
        std::size_t i = 0;
        for (long x : xs) out[i++] = QComplex(x);
        return out;
    };
    if (which == 1) {
        return ExactSet({2, 2, 2, 3},
                        {
                            {v({1, 0}), v({1, 0}), v({1, 0}), v({1, 0, 0})},
                            {v({1, 1}), v({1, 1}), v({1, 1}), v({0, 1, 0})},
                            {v({1, 2}), v({1, 2}), v({1, 2}), v({0, 0, 1})},
                            {v({0, 1}), v({2, -1}), v({1, -1}), v({1, 1, 1})},
                            {v({1, -1}), v({0, 1}), v({2, -1}), v({1, 2, -3})},
                            {v({2, -1}), v({1, -1}), v({0, 1}), v({5, -4, -1})},
                        });
    }
    if (which == 2) {
        return ExactSet({2, 2, 3, 3},
                        {
                            {v({1, 0}), v({1, 0}), v({1, 1, 1}), v({1, 1, 1})},
                            {v({1, 1}), v({1, 1}), v({1, 1, -2}), v({2, -1, -2})},
                            {v({1, 2}), v({0, 1}), v({4, 2, 3}), v({3, 6, -2})},
                            {v({1, 3}), v({1, -1}), v({2, -1, -2}), v({1, 1, -2})},
                            {v({0, 1}), v({1, 0}), v({1, 4, -1}), v({1, 4, -1})},
                            {v({1, -1}), v({1, 1}), v({2, 1, 6}), v({-8, 5, 3})},
                            {v({2, -1}), v({0, 1}), v({3, 6, -2}), v({4, 2, 3})},
                            {v({3, -1}), v({1, -1}), v({-8, 5, 3}), v({2, 1, 6})},
                        });
    }
    throw std::invalid_argument("unknown example " + std::to_string(which) + " (expected 1 or 2)");
}

#define UPBFORGE_INSTANTIATE(T)                                                                  \
    template class ProductStateSet<T>;                                                           \
    template Graph orthogonality_graph<T>(const ProductStateSet<T>&, int);                       \
    template std::vector<Graph> orthogonality_graphs<T>(const ProductStateSet<T>&);              \
    template bool mutual_orthogonality<T>(const ProductStateSet<T>&);                            \
    template std::vector<UnsaturatedSet<T>> maximal_unsaturated_sets<T>(const ProductStateSet<T>&, int); \
    template UpbVerdict<T> is_upb<T>(const ProductStateSet<T>&);                                 \
    template bool witness_is_orthogonal<T>(const ProductStateSet<T>&, const ProductState<T>&);   \
    template DegreeBoundsReport degree_bounds_check<T>(const ProductStateSet<T>&);               \
    template ProductStateSet<T> group<T>(const ProductStateSet<T>&, const Bipartition&);         \
    template GupbVerdict<T> is_gupb<T>(const ProductStateSet<T>&);                               \
    template std::vector<RegularityResult> check_minimal_gupb_regularity<T>(const ProductStateSet<T>&); \
    template Prop7Report check_prop7<T>(const ProductStateSet<T>&);

UPBFORGE_INSTANTIATE(QComplex)
UPBFORGE_INSTANTIATE(FComplex)

#undef UPBFORGE_INSTANTIATE

}  // namespace upbforge
