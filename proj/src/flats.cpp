#include "sumfree/flats.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

namespace sumfree {

std::string to_decimal(BigCount v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::uint32_t Subspace::reduce(std::uint32_t v) const {
    // Rows are fully reduced among themselves, so one pass clears every pivot.
    for (std::uint32_t r : rows) {
        const std::uint32_t pivot = std::uint32_t(1) << (std::bit_width(r) - 1);
        if (v & pivot) v ^= r;
    }
    return v;
}

std::vector<std::uint32_t> Subspace::points() const {
    std::vector<std::uint32_t> pts(std::size_t(1) << rows.size(), 0);
    for (std::size_t i = 1; i < pts.size(); ++i)
        pts[i] = pts[i & (i - 1)] ^ rows[std::countr_zero(i)];
    return pts;
}

Subspace canonicalize(int n, std::span<const std::uint32_t> vectors) {
    std::vector<std::uint32_t> basis;
    for (std::uint32_t v : vectors) {
        for (std::uint32_t r : basis) {
            const std::uint32_t pivot = std::uint32_t(1) << (std::bit_width(r) - 1);
            if (v & pivot) v ^= r;
        }
        if (!v) continue;
        const std::uint32_t pivot = std::uint32_t(1) << (std::bit_width(v) - 1);
        for (std::uint32_t& r : basis) {
            if (r & pivot) r ^= v;
        }
        basis.push_back(v);
    }
    std::sort(basis.begin(), basis.end(), std::greater<>());
    return Subspace{n, std::move(basis)};
}

int gf2_rank(std::span<const std::uint32_t> vectors) {
    std::uint32_t basis[32] = {};
    int rank = 0;
    for (std::uint32_t v : vectors) {
        while (v) {
            const int hb = std::bit_width(v) - 1;
            if (!basis[hb]) {
                basis[hb] = v;
                ++rank;
                break;
            }
            v ^= basis[hb];
        }
    }
    return rank;
}

std::vector<std::uint32_t> Flat::points() const {
    auto pts = direction.points();
    for (auto& p : pts) p ^= rep;
    return pts;
}

Flat flat_through(const Subspace& direction, std::uint32_t point) {
    return Flat{direction, direction.reduce(point)};
}

Subspace intersect(const Subspace& U, const Subspace& V) {
    // Zassenhaus: rows (u|u) and (v|0); echelon rows whose high half vanished
    // span the intersection.
    const int n = U.n;
    std::vector<std::uint64_t> basis(2 * n, 0);
    auto insert = [&](std::uint64_t row) {
        while (row) {
            const int hb = std::bit_width(row) - 1;
            if (!basis[hb]) {
                basis[hb] = row;
                return;
            }
            row ^= basis[hb];
        }
    };
    for (std::uint32_t u : U.rows) insert((std::uint64_t(u) << n) | u);
    for (std::uint32_t v : V.rows) insert(std::uint64_t(v) << n);
    std::vector<std::uint32_t> inter;
    for (int b = 0; b < n; ++b)
        if (basis[b]) inter.push_back(static_cast<std::uint32_t>(basis[b]));
    return canonicalize(n, inter);
}

std::optional<Flat> intersect(const Flat& A, const Flat& B) {
    // Nonempty iff rep_A + rep_B lies in U + V.
    std::vector<std::uint32_t> joint(A.direction.rows);
    joint.insert(joint.end(), B.direction.rows.begin(), B.direction.rows.end());
    const Subspace sum = canonicalize(A.direction.n, joint);
    if (!sum.contains(A.rep ^ B.rep)) return std::nullopt;
    Subspace dir = intersect(A.direction, B.direction);
    // Any common point works as the representative; scan the smaller flat.
    const Flat& small = A.dim() <= B.dim() ? A : B;
    const Flat& big = A.dim() <= B.dim() ? B : A;
    for (std::uint32_t p : small.points()) {
        if (big.direction.reduce(p ^ big.rep) == 0) return flat_through(dir, p);
    }
    return std::nullopt; // unreachable: membership established above
}

BigCount gaussian_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("gaussian_binomial requires 0 <= k <= n");
    BigCount num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= (BigCount(1) << (n - i)) - 1;
        den *= (BigCount(1) << (k - i)) - 1;
    }
    return num / den;
}

BigCount flat_count(int n, int k) {
    return (BigCount(1) << (n - k)) * gaussian_binomial(n, k);
}

namespace {

// Pivot positions of a k-bit mask, descending; row i of the RREF gets pivot i.
struct PivotLayout {
    int k = 0;
    int pivots[16];          // descending
    int free_pos[16][16];    // per row, ascending non-pivot positions below the pivot
    int free_cnt[16];
    int total_free = 0;

    void init(int n, std::uint32_t mask) {
        k = 0;
        total_free = 0;
        for (int b = n - 1; b >= 0; --b)
            if ((mask >> b) & 1) pivots[k++] = b;
        for (int i = 0; i < k; ++i) {
            free_cnt[i] = 0;
            for (int q = 0; q < pivots[i]; ++q) {
                if (!((mask >> q) & 1)) free_pos[i][free_cnt[i]++] = q;
            }
            total_free += free_cnt[i];
        }
    }

    void fill_rows(std::uint64_t c, std::vector<std::uint32_t>& rows) const {
        rows.resize(k);
        int off = 0;
        for (int i = 0; i < k; ++i) {
            std::uint32_t row = std::uint32_t(1) << pivots[i];
            for (int j = 0; j < free_cnt[i]; ++j) {
                if ((c >> (off + j)) & 1) row |= std::uint32_t(1) << free_pos[i][j];
            }
            off += free_cnt[i];
            rows[i] = row;
        }
    }
};

void check_args(int n, int k) {
    if (n < 1 || n > 16) throw std::invalid_argument("ambient dimension must be in [1,16]");
    if (k < 0 || k > n) throw std::invalid_argument("subspace dimension must be in [0,n]");
}

} // namespace

void for_each_subspace(int n, int k, const std::function<bool(const Subspace&)>& fn) {
    check_args(n, k);
    Subspace scratch{n, {}};
    if (k == 0) {
        fn(scratch);
        return;
    }
    PivotLayout layout;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        layout.init(n, mask);
        for (std::uint64_t c = 0; c < (std::uint64_t(1) << layout.total_free); ++c) {
            layout.fill_rows(c, scratch.rows);
            if (!fn(scratch)) return;
        }
    }
}

void for_each_flat(int n, int k, const std::function<bool(const Flat&)>& fn) {
    bool stop = false;
    Flat scratch;
    for_each_subspace(n, k, [&](const Subspace& U) {
        // Coset representatives: counter bits spread over non-pivot positions.
        std::uint32_t piv_mask = 0;
        for (std::uint32_t r : U.rows) piv_mask |= std::uint32_t(1) << (std::bit_width(r) - 1);
        int nonpiv[16];
        int cnt = 0;
        for (int q = 0; q < n; ++q)
            if (!((piv_mask >> q) & 1)) nonpiv[cnt++] = q;
        scratch.direction = U;
        for (std::uint64_t c = 0; c < (std::uint64_t(1) << cnt); ++c) {
            std::uint32_t rep = 0;
            for (int j = 0; j < cnt; ++j)
                if ((c >> j) & 1) rep |= std::uint32_t(1) << nonpiv[j];
            scratch.rep = rep;
            if (!fn(scratch)) {
                stop = true;
                return false;
            }
        }
        return !stop;
    });
}

std::vector<Subspace> enumerate_subspaces(int n, int k, const EnumerationCaps& caps) {
    if (gaussian_binomial(n, k) > caps.max_flats)
        throw CapExceeded("subspace count " + to_decimal(gaussian_binomial(n, k)) +
                          " exceeds cap " + std::to_string(caps.max_flats));
    std::vector<Subspace> out;
    out.reserve(static_cast<std::size_t>(gaussian_binomial(n, k)));
    for_each_subspace(n, k, [&](const Subspace& U) {
        out.push_back(U);
        return true;
    });
    return out;
}

std::vector<Flat> enumerate_flats(int n, int k, const EnumerationCaps& caps) {
    if (flat_count(n, k) > caps.max_flats)
        throw CapExceeded("flat count " + to_decimal(flat_count(n, k)) + " exceeds cap " +
                          std::to_string(caps.max_flats));
    std::vector<Flat> out;
    out.reserve(static_cast<std::size_t>(flat_count(n, k)));
    for_each_flat(n, k, [&](const Flat& A) {
        out.push_back(A);
        return true;
    });
    return out;
}

std::uint32_t witness(const VectorialFunction& F, const Flat& A) {
    const auto& rows = A.direction.rows;
    std::uint32_t x = A.rep;
    std::uint32_t acc = F(x);
    const std::uint64_t count = std::uint64_t(1) << rows.size();
    for (std::uint64_t i = 1; i < count; ++i) {
        x ^= rows[std::countr_zero(i)];
        acc ^= F(x);
    }
    return acc;
}

std::uint32_t witness(const VectorialFunction& F, const Subspace& U) {
    return witness(F, Flat{U, 0});
}

namespace {

struct WorkerHit {
    std::uint64_t index = ~std::uint64_t(0);
    Flat flat;
    std::uint64_t checked = 0;
};

// One shard of the sum-free sweep: subspaces with index % jobs == shard.
WorkerHit sumfree_worker(const VectorialFunction& F, int k, int jobs, int shard,
                         std::atomic<std::uint64_t>& global_best) {
    const int n = F.input_dim();
    const std::uint64_t cosets = std::uint64_t(1) << (n - k);
    const std::uint32_t* table = F.table().data();
    WorkerHit hit;
    std::uint64_t subspace_index = 0;
    for_each_subspace(n, k, [&](const Subspace& U) {
        const std::uint64_t my_index = subspace_index++;
        if (my_index % static_cast<std::uint64_t>(jobs) != static_cast<std::uint64_t>(shard))
            return true;
        if (my_index * cosets > global_best.load(std::memory_order_relaxed))
            return false; // someone earlier in canonical order already failed
        std::uint32_t piv_mask = 0;
        for (std::uint32_t r : U.rows) piv_mask |= std::uint32_t(1) << (std::bit_width(r) - 1);
        int nonpiv[16];
        int cnt = 0;
        for (int q = 0; q < n; ++q)
            if (!((piv_mask >> q) & 1)) nonpiv[cnt++] = q;
        const auto& rows = U.rows;
        const std::uint64_t span_count = std::uint64_t(1) << k;
        for (std::uint64_t c = 0; c < cosets; ++c) {
            std::uint32_t rep = 0;
            for (int j = 0; j < cnt; ++j)
                if ((c >> j) & 1) rep |= std::uint32_t(1) << nonpiv[j];
            std::uint32_t x = rep;
            std::uint32_t acc = table[x];
            for (std::uint64_t i = 1; i < span_count; ++i) {
                x ^= rows[std::countr_zero(i)];
                acc ^= table[x];
            }
            ++hit.checked;
            if (acc == 0) {
                hit.index = my_index * cosets + c;
                hit.flat = Flat{U, rep};
                // Publish so shards past this index can stop early.
                std::uint64_t cur = global_best.load(std::memory_order_relaxed);
                while (hit.index < cur &&
                       !global_best.compare_exchange_weak(cur, hit.index,
                                                          std::memory_order_relaxed)) {
                }
                return false; // first hit in this shard is its minimum
            }
        }
        return true;
    });
    return hit;
}

} // namespace

SumFreeResult is_sumfree(const VectorialFunction& F, int k, int jobs,
                         const EnumerationCaps& caps) {
    const int n = F.input_dim();
    if (k < 0 || k > n) throw std::invalid_argument("order k must be in [0,n]");
    if (flat_count(n, k) > caps.max_flats)
        throw CapExceeded("flat count " + to_decimal(flat_count(n, k)) + " exceeds cap " +
                          std::to_string(caps.max_flats));
    if (jobs < 1) jobs = 1;

    std::atomic<std::uint64_t> global_best{~std::uint64_t(0)};
    std::vector<WorkerHit> hits(jobs);
    if (jobs == 1) {
        hits[0] = sumfree_worker(F, k, 1, 0, global_best);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (int t = 0; t < jobs; ++t)
            threads.emplace_back([&, t] { hits[t] = sumfree_worker(F, k, jobs, t, global_best); });
        for (auto& th : threads) th.join();
    }

    SumFreeResult result;
    result.sum_free = true;
    for (const auto& h : hits) {
        result.flats_checked += h.checked;
        if (h.index != ~std::uint64_t(0) &&
            (result.sum_free || h.index < result.counterexample_index)) {
            result.sum_free = false;
            result.counterexample = h.flat;
            result.counterexample_index = h.index;
        }
    }
    return result;
}

OrderProfile order_profile(const VectorialFunction& F, int kmin, int kmax, int jobs,
                           const EnumerationCaps& caps) {
    OrderProfile profile;
    profile.n = F.input_dim();
    profile.m = F.output_dim();
    if (kmax < 0) kmax = profile.n;
    if (kmin < 0) kmin = 0;
    for (int k = kmin; k <= kmax; ++k) {
        try {
            const auto res = is_sumfree(F, k, jobs, caps);
            profile.per_k[k] = res.sum_free ? KStatus::member : KStatus::non_member;
            if (res.sum_free) profile.orders.insert(k);
        } catch (const CapExceeded&) {
            profile.per_k[k] = KStatus::cap_exceeded;
        }
    }
    return profile;
}

bool coset_witnesses_distinct(const VectorialFunction& F, const Subspace& U) {
    const int n = F.input_dim();
    std::uint32_t piv_mask = 0;
    for (std::uint32_t r : U.rows) piv_mask |= std::uint32_t(1) << (std::bit_width(r) - 1);
    int nonpiv[16];
    int cnt = 0;
    for (int q = 0; q < n; ++q)
        if (!((piv_mask >> q) & 1)) nonpiv[cnt++] = q;
    std::vector<std::uint32_t> seen;
    seen.reserve(std::size_t(1) << cnt);
    for (std::uint64_t c = 0; c < (std::uint64_t(1) << cnt); ++c) {
        std::uint32_t rep = 0;
        for (int j = 0; j < cnt; ++j)
            if ((c >> j) & 1) rep |= std::uint32_t(1) << nonpiv[j];
        seen.push_back(witness(F, Flat{U, rep}));
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

VectorialFunction derivative_restriction(const VectorialFunction& F,
                                         std::span<const std::uint32_t> dirs,
                                         const Subspace& W) {
    const int n = F.input_dim();
    const int j = static_cast<int>(dirs.size());
    if (W.n != n) throw std::invalid_argument("W lives in the wrong ambient dimension");
    if (gf2_rank(dirs) != j) throw std::invalid_argument("directions must be independent");
    if (W.dim() != n - j) throw std::invalid_argument("W must have dimension n - j");
    std::vector<std::uint32_t> all(dirs.begin(), dirs.end());
    all.insert(all.end(), W.rows.begin(), W.rows.end());
    if (gf2_rank(all) != n)
        throw std::invalid_argument("span(dirs) must be complementary to W");

    const VectorialFunction D = j == 0 ? F : F.higher_derivative(dirs);
    // Basis rows taken pivot-ascending: index bit i of the restricted input
    // selects the i-th lowest-pivot row of W.
    std::vector<std::uint32_t> basis(W.rows.rbegin(), W.rows.rend());
    std::vector<std::uint32_t> table(std::size_t(1) << (n - j), 0);
    std::vector<std::uint32_t> point(table.size(), 0);
    for (std::uint64_t y = 1; y < table.size(); ++y)
        point[y] = point[y & (y - 1)] ^ basis[std::countr_zero(y)];
    for (std::uint64_t y = 0; y < table.size(); ++y) table[y] = D(point[y]);
    return VectorialFunction(n - j, F.output_dim(), std::move(table));
}

} // namespace sumfree
