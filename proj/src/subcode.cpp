#include "sumfree/subcode.hpp"

#include <bit>
#include <unordered_map>

namespace sumfree {

BitMatrix value_matrix(const VectorialFunction& F) {
    const std::size_t length = std::size_t(1) << F.input_dim();
    BitMatrix m(static_cast<std::size_t>(F.output_dim()), length);
    for (std::uint32_t x = 0; x < length; ++x) {
        const std::uint32_t fx = F(x);
        for (int i = 0; i < F.output_dim(); ++i)
            if ((fx >> i) & 1) m.set(static_cast<std::size_t>(i), x, true);
    }
    return m;
}

SubcodeBundle build_subcode(const VectorialFunction& F, int r, const BuildOptions& opts) {
    const int n = F.input_dim();
    const int m = F.output_dim();
    if (r < 2 || r > n - 2) throw std::invalid_argument("build_subcode requires 2 <= r <= n-2");
    const int k = n - r;
    if (!opts.trust) {
        const auto sf = is_sumfree(F, k, opts.jobs, opts.caps);
        if (!sf.sum_free)
            throw NotSumFreeError("F is not " + std::to_string(k) + "th-order sum-free",
                                  *sf.counterexample);
        if (!F.is_nondegenerate(k)) {
            const auto v = F.low_degree_component(k);
            throw DegenerateError("F is degenerate at order " + std::to_string(k),
                                  v.value_or(0));
        }
    }

    const BitMatrix pcheck = BitMatrix::vstack(rm_parity_check(r, n), value_matrix(F));
    BinaryCode code = code_from_parity_check(pcheck);
    const std::size_t dim = code_dimension(code);
    ensure_generator(code);
    const std::size_t expected = static_cast<std::size_t>(rm_dimension(r, n) - m);
    if (!opts.trust && dim != expected)
        throw std::logic_error("subcode dimension " + std::to_string(dim) + " != expected " +
                               std::to_string(expected));
    return SubcodeBundle{r, n, m, std::move(code), F, Provenance::built_from_function, dim};
}

ExtractResult extract_function(BinaryCode code, int r) {
    const std::size_t length = code.length;
    if (length == 0 || (length & (length - 1)))
        throw std::invalid_argument("code length must be a power of two");
    const int n = std::countr_zero(length);
    if (r < 2 || r > n - 2) throw std::invalid_argument("extract_function requires 2 <= r <= n-2");

    const BitMatrix h = rm_parity_check(r, n);
    const BitMatrix& gen = ensure_generator(code);
    if (!gen.product_with_transpose_is_zero(h))
        throw std::invalid_argument("code is not a subcode of RM(r,n)");
    const int dim = static_cast<int>(gen.rank());
    const int m = rm_dimension(r, n) - dim;
    if (m < 0) throw std::logic_error("code dimension exceeds dim RM(r,n)");
    if (m > n)
        throw std::invalid_argument("codimension " + std::to_string(m) +
                                    " in RM(r,n) exceeds n; extraction undefined");
    ExtractResult out;
    out.codimension = m;
    if (m == 0) return out; // the code is RM(r,n) itself

    const BitMatrix& pcheck = ensure_parity_check(code);
    if (pcheck.rank() != length - static_cast<std::size_t>(dim))
        throw std::invalid_argument("parity check rank does not match code dimension");

    // Incremental elimination basis seeded with H; parity-check rows that
    // stay independent are the surplus rows, kept verbatim in order.
    std::vector<BitVec> basis;       // reduced rows
    std::vector<std::size_t> pivots; // basis[i] has leading column pivots[i]
    auto reduce = [&](BitVec v) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (v.get(pivots[i])) v ^= basis[i];
        return v;
    };
    auto insert = [&](const BitVec& reduced) {
        std::size_t pivot = 0;
        for (std::size_t c = 0; c < reduced.size(); ++c) {
            if (reduced.get(c)) {
                pivot = c;
                break;
            }
        }
        basis.push_back(reduced);
        pivots.push_back(pivot);
    };
    for (std::size_t i = 0; i < h.rows(); ++i) {
        const BitVec v = reduce(h.row(i));
        if (!v.is_zero()) insert(v);
    }
    std::vector<BitVec> surplus;
    for (std::size_t i = 0; i < pcheck.rows(); ++i) {
        const BitVec original = pcheck.row(i);
        const BitVec v = reduce(original);
        if (!v.is_zero()) {
            surplus.push_back(original);
            insert(v);
        }
    }
    if (static_cast<int>(surplus.size()) != m)
        throw std::logic_error("expected " + std::to_string(m) + " surplus rows, got " +
                               std::to_string(surplus.size()));

    std::vector<std::uint32_t> table(length, 0);
    for (std::uint32_t x = 0; x < length; ++x) {
        std::uint32_t fx = 0;
        for (int i = 0; i < m; ++i)
            if (surplus[static_cast<std::size_t>(i)].get(x)) fx |= 1u << i;
        table[x] = fx;
    }
    VectorialFunction F(n, m, std::move(table));

    BitMatrix completed = h;
    for (const auto& row : surplus) completed.append_row(row);
    BinaryCode rebuilt = code_from_parity_check(std::move(completed));
    const std::size_t rebuilt_dim = code_dimension(rebuilt);
    ensure_generator(rebuilt);
    out.bundle = SubcodeBundle{r,   n, m, std::move(rebuilt), std::move(F),
                               Provenance::extracted_from_code, rebuilt_dim};
    return out;
}

int min_distance_exhaustive(BinaryCode& code, const MinDistanceOptions& opts) {
    ensure_generator(code);
    if (code.generator->rank() != code.generator->rows())
        code.generator = code.generator->row_reduced(); // drop dependent rows
    const BitMatrix& gen = *code.generator;
    const std::size_t dim = gen.rows();
    if (dim == 0) throw std::invalid_argument("zero code has no nonzero codeword");
    if (dim > static_cast<std::size_t>(opts.dim_cap))
        throw CapExceeded("dimension " + std::to_string(dim) + " exceeds exhaustive cap " +
                          std::to_string(opts.dim_cap) + "; use certificate mode");

    // Gray-code sweep: one row XOR and one popcount per codeword.
    const std::size_t wpr = (code.length + 63) / 64;
    std::vector<std::uint64_t> cw(wpr, 0);
    std::size_t best = code.length + 1;
    const std::uint64_t total = std::uint64_t(1) << dim;
    for (std::uint64_t i = 1; i < total; ++i) {
        const auto row = gen.row_words(static_cast<std::size_t>(std::countr_zero(i)));
        std::size_t weight = 0;
        for (std::size_t w = 0; w < wpr; ++w) {
            cw[w] ^= row[w];
            weight += static_cast<std::size_t>(std::popcount(cw[w]));
        }
        if (weight < best) best = weight;
    }
    return static_cast<int>(best);
}

namespace {

// All k-spaces containing the (k-2)-space W, built by lifting the 2-spaces of
// the quotient onto W's non-pivot coordinates.
void for_each_superspace(const Subspace& w, int k,
                         const std::function<bool(const Subspace&)>& fn) {
    const int n = w.n;
    std::uint32_t piv_mask = 0;
    for (std::uint32_t r : w.rows) piv_mask |= std::uint32_t(1) << (std::bit_width(r) - 1);
    int nonpiv[16];
    int cnt = 0;
    for (int q = 0; q < n; ++q)
        if (!((piv_mask >> q) & 1)) nonpiv[cnt++] = q;
    // cnt == n - (k-2); quotient vectors live on the non-pivot positions.
    std::vector<std::uint32_t> stacked;
    bool stop = false;
    for_each_subspace(cnt, 2, [&](const Subspace& q) {
        stacked.assign(w.rows.begin(), w.rows.end());
        for (std::uint32_t qr : q.rows) {
            std::uint32_t lifted = 0;
            for (int j = 0; j < cnt; ++j)
                if ((qr >> j) & 1) lifted |= std::uint32_t(1) << nonpiv[j];
            stacked.push_back(lifted);
        }
        if (!fn(canonicalize(n, stacked))) stop = true;
        return !stop;
    });
}

} // namespace

DistanceCertificate certify_min_distance(const SubcodeBundle& bundle,
                                         std::uint64_t max_w_scanned, int jobs) {
    const int n = bundle.n, r = bundle.r;
    const int k = n - r;
    DistanceCertificate cert;
    cert.lower = 3 << (n - r - 1);

    // Lower bound: no minimum-weight codeword of RM(r,n) survives M_F.
    const auto sf = is_sumfree(bundle.F, k, jobs);
    if (!sf.sum_free)
        throw NotSumFreeError("bundle function fails the sum-free re-check",
                              *sf.counterexample);

    // Upper bound: scan (k-2)-spaces W; among the k-spaces through a fixed W,
    // equal witnesses force an intersection of dimension exactly k-2 (adjacent
    // flats always have distinct witnesses), giving a second-weight codeword.
    BinaryCode code = bundle.code;
    const BitMatrix& pcheck = ensure_parity_check(code);
    bool done = false;
    std::uint64_t scanned = 0;
    for_each_subspace(n, k - 2, [&](const Subspace& w) {
        if (scanned++ >= max_w_scanned) return false;
        std::unordered_map<std::uint32_t, Subspace> by_witness;
        for_each_superspace(w, k, [&](const Subspace& u) {
            const std::uint32_t om = witness(bundle.F, u);
            auto [it, inserted] = by_witness.try_emplace(om, u);
            if (inserted) return true;
            const Subspace& v = it->second;
            if (intersect(u, v).dim() != k - 2) return true; // met in dim k-1: skip
            BitVec cw = second_weight_codeword(Flat{u, 0}, Flat{v, 0});
            if (static_cast<int>(cw.popcount()) != 3 << (n - r - 1))
                throw std::logic_error("certificate codeword has unexpected weight");
            if (!pcheck.multiply(cw).is_zero())
                throw std::logic_error("certificate codeword fails the parity check");
            cert.upper = cert.lower;
            cert.complete = true;
            cert.witness_codeword = std::move(cw);
            cert.space_a = v;
            cert.space_b = u;
            cert.shared_witness = om;
            done = true;
            return false;
        });
        return !done;
    });
    cert.subspaces_scanned = scanned;
    return cert;
}

} // namespace sumfree
