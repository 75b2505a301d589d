#include "binsum/energy.hpp"

#include "binsum/rng.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace binsum {

// ---------------------------------------------------------------------------
// HypercubeSubset

HypercubeSubset::HypercubeSubset(unsigned d) : d_(d) {
    if (d < 1 || d > kMaxDimension) {
        throw DomainError("dimension must lie in 1..16");
    }
    words_.assign(((std::size_t{1} << d) + 63) / 64, 0);
}

HypercubeSubset HypercubeSubset::full(unsigned d) {
    HypercubeSubset out(d);
    for (std::uint32_t v = 0; v < out.vertex_count(); ++v) {
        out.insert(v);
    }
    return out;
}

HypercubeSubset HypercubeSubset::from_vertices(unsigned d, const std::vector<std::uint32_t>& vertices) {
    HypercubeSubset out(d);
    for (auto v : vertices) {
        out.insert(v);
    }
    return out;
}

HypercubeSubset HypercubeSubset::from_mask(unsigned d, std::uint64_t mask) {
    if (d > 6) {
        throw DomainError("64-bit masks cover d <= 6 only");
    }
    HypercubeSubset out(d);
    const std::uint32_t n = out.vertex_count();
    if (n < 64 && (mask >> n) != 0) {
        throw DomainError("mask has bits beyond 2^d vertices");
    }
    out.words_[0] = mask;
    return out;
}

HypercubeSubset HypercubeSubset::from_hex(unsigned d, const std::string& hex) {
    std::string digits = hex;
    if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
        digits = digits.substr(2);
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) {
            return std::isxdigit(c) != 0;
        })) {
        throw DomainError("malformed hexadecimal mask '" + hex + "'");
    }
    const ExactInt value(digits, 16);
    HypercubeSubset out(d);
    if (value != 0 && mpz_sizeinbase(value.get_mpz_t(), 2) > out.vertex_count()) {
        throw DomainError("mask has bits beyond 2^d vertices");
    }
    for (std::uint32_t v = 0; v < out.vertex_count(); ++v) {
        if (mpz_tstbit(value.get_mpz_t(), v)) {
            out.insert(v);
        }
    }
    return out;
}

HypercubeSubset HypercubeSubset::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) {
        throw DomainError("no vertices given");
    }
    const std::size_t d = rows.front().size();
    if (d < 1 || d > kMaxDimension) {
        throw DomainError("vertex strings must have 1..16 characters");
    }
    HypercubeSubset out(static_cast<unsigned>(d));
    for (const auto& row : rows) {
        if (row.size() != d) {
            throw DomainError("vertex '" + row + "' does not have dimension " + std::to_string(d));
        }
        std::uint32_t v = 0;
        for (std::size_t i = 0; i < d; ++i) {
            if (row[i] == '1') {
                v |= std::uint32_t{1} << i;
            } else if (row[i] != '0') {
                throw DomainError("vertex '" + row + "' is not a 0/1 string");
            }
        }
        out.insert(v);
    }
    return out;
}

void HypercubeSubset::insert(std::uint32_t v) {
    if (v >= vertex_count()) {
        throw DomainError("vertex code out of range");
    }
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void HypercubeSubset::erase(std::uint32_t v) {
    if (v < vertex_count()) {
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
}

std::size_t HypercubeSubset::size() const {
    std::size_t n = 0;
    for (auto w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

std::vector<std::uint32_t> HypercubeSubset::vertices() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < vertex_count(); ++v) {
        if (contains(v)) {
            out.push_back(v);
        }
    }
    return out;
}

std::string HypercubeSubset::hex() const {
    ExactInt value;
    for (auto v : vertices()) {
        mpz_setbit(value.get_mpz_t(), v);
    }
    return value.get_str(16);
}

bool HypercubeSubset::is_subset_of(const HypercubeSubset& other) const {
    if (other.d_ != d_) {
        return false;
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] & ~other.words_[w]) {
            return false;
        }
    }
    return true;
}

HypercubeSubset HypercubeSubset::product(const HypercubeSubset& other) const {
    HypercubeSubset out(d_ + other.d_);
    for (auto v : vertices()) {
        for (auto w : other.vertices()) {
            out.insert(v | (w << d_));
        }
    }
    return out;
}

HypercubeSubset HypercubeSubset::transformed(const std::vector<unsigned>& perm,
                                             std::uint32_t flips) const {
    std::vector<unsigned> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    std::vector<unsigned> identity(d_);
    std::iota(identity.begin(), identity.end(), 0U);
    if (sorted != identity) {
        throw DomainError("not a permutation of the coordinates");
    }
    HypercubeSubset out(d_);
    for (auto v : vertices()) {
        std::uint32_t w = 0;
        for (unsigned i = 0; i < d_; ++i) {
            w |= ((v >> perm[i]) & 1U) << i;
        }
        out.insert((w ^ flips) & (vertex_count() - 1));
    }
    return out;
}

std::string vertex_string(unsigned d, std::uint32_t v) {
    std::string s(d, '0');
    for (unsigned i = 0; i < d; ++i) {
        if ((v >> i) & 1U) {
            s[i] = '1';
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Tally kernels

std::size_t box_cells(unsigned d, unsigned k, std::size_t budget) {
    ExactInt cells;
    mpz_ui_pow_ui(cells.get_mpz_t(), k + 1, d);
    if (cells > ExactInt(static_cast<unsigned long>(budget))) {
        throw ResourceError("sum tally needs (k+1)^d = " + cells.get_str() +
                            " cells, over the budget of " + std::to_string(budget));
    }
    return static_cast<std::size_t>(cells.get_ui());
}

std::size_t SumTally::index(const std::vector<unsigned>& s) const {
    if (s.size() != d) {
        throw DomainError("lattice point has the wrong dimension");
    }
    std::size_t idx = 0;
    for (std::size_t i = d; i-- > 0;) {
        if (s[i] > k) {
            return counts.size();
        }
        idx = idx * (k + 1) + s[i];
    }
    return idx;
}

std::vector<unsigned> SumTally::point(std::size_t index) const {
    std::vector<unsigned> s(d);
    for (unsigned i = 0; i < d; ++i) {
        s[i] = static_cast<unsigned>(index % (k + 1));
        index /= k + 1;
    }
    return s;
}

ExactInt SumTally::mass() const {
    ExactInt total;
    for (const auto& c : counts) {
        total += c;
    }
    return total;
}

namespace {

struct Box {
    unsigned d;
    unsigned k;
    std::size_t cells;
    /// Box offset of every vertex code.
    std::vector<std::size_t> offset;
};

Box make_box(const HypercubeSubset& a, unsigned k, std::size_t budget) {
    if (k < 1) {
        throw DomainError("k must be at least 1");
    }
    if (a.empty()) {
        throw DomainError("the subset must be nonempty");
    }
    Box box{a.dimension(), k, box_cells(a.dimension(), k, budget), {}};
    box.offset.resize(a.vertex_count());
    for (std::uint32_t v = 0; v < a.vertex_count(); ++v) {
        std::size_t off = 0;
        std::size_t stride = 1;
        for (unsigned i = 0; i < box.d; ++i) {
            if ((v >> i) & 1U) {
                off += stride;
            }
            stride *= k + 1;
        }
        box.offset[v] = off;
    }
    return box;
}

// Reference kernel: push every nonzero count to its |A| successors.
template <class Count>
std::vector<Count> tally_scatter(const HypercubeSubset& a, const Box& box) {
    std::vector<std::size_t> steps;
    for (auto v : a.vertices()) {
        steps.push_back(box.offset[v]);
    }
    std::vector<Count> cur(box.cells, Count(0));
    for (auto s : steps) {
        cur[s] = 1;
    }
    std::vector<Count> next;
    for (unsigned j = 1; j < box.k; ++j) {
        next.assign(box.cells, Count(0));
        for (std::size_t idx = 0; idx < box.cells; ++idx) {
            if (cur[idx] == 0) {
                continue;
            }
            for (auto s : steps) {
                next[idx + s] += cur[idx];
            }
        }
        cur.swap(next);
    }
    return cur;
}

// Parallel kernel: cells are grouped into blocks by their top m coordinates.
// A target block receives only from the source blocks one step below it in
// those coordinates, so each thread owns its target blocks and the work is
// exactly that of the scatter.
template <class Count>
std::vector<Count> tally_blocked(const HypercubeSubset& a, const Box& box) {
    const std::size_t radix = box.k + 1;
    unsigned m = 0;
    std::size_t blocks = 1;
    while (m < box.d && blocks < 64) {
        ++m;
        blocks *= radix;
    }
    const unsigned low_dims = box.d - m;
    const std::size_t block_cells = box.cells / blocks;

    // Members grouped by their top m bits; low offsets stay inside a block.
    std::vector<std::vector<std::size_t>> groups(std::size_t{1} << m);
    for (auto v : a.vertices()) {
        groups[v >> low_dims].push_back(box.offset[v & ((std::uint32_t{1} << low_dims) - 1)]);
    }
    std::vector<std::size_t> high_offset(groups.size(), 0);
    for (std::size_t e = 0; e < groups.size(); ++e) {
        std::size_t stride = 1;
        for (unsigned i = 0; i < m; ++i, stride *= radix) {
            if ((e >> i) & 1U) {
                high_offset[e] += stride;
            }
        }
    }

    std::vector<Count> cur(box.cells, Count(0));
    for (auto v : a.vertices()) {
        cur[box.offset[v]] = 1;
    }
    std::vector<Count> next(box.cells, Count(0));
    const long n_blocks = static_cast<long>(blocks);
    for (unsigned j = 1; j < box.k; ++j) {
#pragma omp parallel for schedule(dynamic)
        for (long hb = 0; hb < n_blocks; ++hb) {
            const auto h = static_cast<std::size_t>(hb);
            std::uint32_t positive = 0;  // top coordinates of h that are >= 1
            std::size_t rest = h;
            for (unsigned i = 0; i < m; ++i, rest /= radix) {
                if (rest % radix > 0) {
                    positive |= std::uint32_t{1} << i;
                }
            }
            Count* target = next.data() + h * block_cells;
            std::fill(target, target + block_cells, Count(0));
            for (std::size_t e = 0; e < groups.size(); ++e) {
                if (groups[e].empty() || (e & ~static_cast<std::size_t>(positive)) != 0) {
                    continue;
                }
                const Count* source = cur.data() + (h - high_offset[e]) * block_cells;
                for (std::size_t low = 0; low < block_cells; ++low) {
                    if (source[low] == 0) {
                        continue;
                    }
                    for (auto off : groups[e]) {
                        target[low + off] += source[low];
                    }
                }
            }
        }
        cur.swap(next);
    }
    return cur;
}

template <class Count>
std::vector<Count> tally(const HypercubeSubset& a, const Box& box, Exec exec) {
    return exec == Exec::Serial ? tally_scatter<Count>(a, box) : tally_blocked<Count>(a, box);
}

ExactInt from_u128(unsigned __int128 v) {
    ExactInt out(static_cast<unsigned long>(v >> 64));
    out <<= 64;
    out += static_cast<unsigned long>(static_cast<std::uint64_t>(v));
    return out;
}

ExactInt square_sum(const std::vector<std::uint64_t>& counts, bool wide, Exec exec) {
    constexpr std::size_t kChunk = std::size_t{1} << 16;
    const std::size_t chunks = (counts.size() + kChunk - 1) / kChunk;
    if (!wide) {
        auto partial = indexed_map<unsigned __int128>(chunks, exec, [&](std::size_t c) {
            unsigned __int128 s = 0;
            const std::size_t end = std::min(counts.size(), (c + 1) * kChunk);
            for (std::size_t i = c * kChunk; i < end; ++i) {
                s += static_cast<unsigned __int128>(counts[i]) * counts[i];
            }
            return s;
        });
        unsigned __int128 total = 0;
        for (auto p : partial) {
            total += p;
        }
        return from_u128(total);
    }
    auto partial = indexed_map<ExactInt>(chunks, exec, [&](std::size_t c) {
        ExactInt s;
        const std::size_t end = std::min(counts.size(), (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i) {
            if (counts[i] != 0) {
                const ExactInt n(static_cast<unsigned long>(counts[i]));
                s += n * n;
            }
        }
        return s;
    });
    return std::accumulate(partial.begin(), partial.end(), ExactInt(0));
}

ExactInt square_sum(const std::vector<ExactInt>& counts, Exec exec) {
    constexpr std::size_t kChunk = std::size_t{1} << 12;
    const std::size_t chunks = (counts.size() + kChunk - 1) / kChunk;
    auto partial = indexed_map<ExactInt>(chunks, exec, [&](std::size_t c) {
        ExactInt s;
        const std::size_t end = std::min(counts.size(), (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i) {
            s += counts[i] * counts[i];
        }
        return s;
    });
    return std::accumulate(partial.begin(), partial.end(), ExactInt(0));
}

/// |A|^k fits in 64 bits, so no count can overflow.
bool fits_u64(std::size_t size, unsigned k) {
    ExactInt total;
    mpz_ui_pow_ui(total.get_mpz_t(), size, k);
    return mpz_sizeinbase(total.get_mpz_t(), 2) <= 64;
}

bool square_sum_fits_u128(std::size_t size, unsigned k) {
    ExactInt total;
    mpz_ui_pow_ui(total.get_mpz_t(), size, 2 * k);
    return mpz_sizeinbase(total.get_mpz_t(), 2) <= 127;
}

}  // namespace

SumTally sum_tally(const HypercubeSubset& a, unsigned k, const EnergyOptions& opts) {
    const Box box = make_box(a, k, opts.cell_budget);
    SumTally out{k, box.d, {}};
    out.counts.reserve(box.cells);
    if (fits_u64(a.size(), k)) {
        for (auto c : tally<std::uint64_t>(a, box, opts.exec)) {
            out.counts.emplace_back(static_cast<unsigned long>(c));
        }
    } else {
        out.counts = tally<ExactInt>(a, box, opts.exec);
    }
    return out;
}

ExactInt energy(const HypercubeSubset& a, unsigned k, const EnergyOptions& opts) {
    const Box box = make_box(a, k, opts.cell_budget);
    if (fits_u64(a.size(), k)) {
        return square_sum(tally<std::uint64_t>(a, box, opts.exec),
                          !square_sum_fits_u128(a.size(), k), opts.exec);
    }
    return square_sum(tally<ExactInt>(a, box, opts.exec), opts.exec);
}

ExactInt energy_bruteforce(const HypercubeSubset& a, unsigned k, std::uint64_t cap) {
    if (k < 1) {
        throw DomainError("k must be at least 1");
    }
    const auto verts = a.vertices();
    if (verts.empty()) {
        throw DomainError("the subset must be nonempty");
    }
    ExactInt tuples;
    mpz_ui_pow_ui(tuples.get_mpz_t(), verts.size(), 2 * k);
    if (tuples > ExactInt(static_cast<unsigned long>(cap))) {
        throw ResourceError("brute force needs |A|^{2k} = " + tuples.get_str() +
                            " tuples, over the cap of " + std::to_string(cap));
    }
    const unsigned d = a.dimension();
    const std::size_t n = verts.size();
    std::vector<std::size_t> pick(2 * k, 0);
    std::vector<int> diff(d);
    std::uint64_t count = 0;
    for (;;) {
        std::fill(diff.begin(), diff.end(), 0);
        for (unsigned t = 0; t < 2 * k; ++t) {
            const int sign = t < k ? 1 : -1;
            for (unsigned i = 0; i < d; ++i) {
                diff[i] += sign * static_cast<int>((verts[pick[t]] >> i) & 1U);
            }
        }
        if (std::all_of(diff.begin(), diff.end(), [](int x) { return x == 0; })) {
            ++count;
        }
        std::size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == n) {
            pick[pos++] = 0;
        }
        if (pos == pick.size()) {
            break;
        }
    }
    return ExactInt(static_cast<unsigned long>(count));
}

// ---------------------------------------------------------------------------
// Bound verification

EnergyReport energy_bound_report(std::size_t size, const ExactInt& e, unsigned k,
                                 const VerifyOptions& opts) {
    if (size == 0) {
        throw DomainError("the subset must be nonempty");
    }
    EnergyReport r;
    r.size = size;
    r.energy = e;
    r.precision = opts.prec;
    if (std::has_single_bit(size)) {
        // |A|^{p_k} = C(2k,k)^m for |A| = 2^m.
        const auto m = static_cast<unsigned long>(std::countr_zero(size));
        ExactInt bound;
        mpz_pow_ui(bound.get_mpz_t(), binomial(2 * k, k).get_mpz_t(), m);
        const int c = cmp(e, bound);
        r.verdict = c < 0 ? Verdict::CertainTrue : c == 0 ? Verdict::ExactEquality : Verdict::CertainFalse;
        r.bound = Interval::from_integer(bound, opts.prec);
        r.margin = c == 0 ? Interval(opts.prec)
                          : log2(*r.bound) - log2(Interval::from_integer(e, opts.prec));
        return r;
    }
    const VerificationReport v = escalate_report(
        [&](Precision prec) {
            const Interval rhs = pk(k, prec) * log2(Interval::from_int(static_cast<long>(size), prec));
            return compare_logs("", log2(Interval::from_integer(e, prec)), rhs);
        },
        opts.prec, opts.cap);
    r.verdict = v.verdict;
    r.margin = v.margin;
    r.precision = v.precision;
    r.bound = pow(ExactRational(static_cast<unsigned long>(size)), pk(k, v.precision), v.precision);
    return r;
}

EnergyReport verify_energy_bound(const HypercubeSubset& a, unsigned k, const VerifyOptions& opts,
                                 const EnergyOptions& eopts) {
    EnergyReport r = energy_bound_report(a.size(), energy(a, k, eopts), k, opts);
    r.case_id = "d=" + std::to_string(a.dimension()) + " k=" + std::to_string(k) + " mask=" + a.hex();
    return r;
}

ExhaustiveSummary exhaustive_verify(unsigned d, unsigned k, const VerifyOptions& opts,
                                    const EnergyOptions& eopts) {
    if (d < 1 || d > 4) {
        throw DomainError("exhaustive verification supports d in 1..4");
    }
    if (k < 1) {
        throw DomainError("k must be at least 1");
    }
    const std::uint64_t n_masks = (std::uint64_t{1} << (std::uint64_t{1} << d)) - 1;
    EnergyOptions inner = eopts;
    inner.exec = Exec::Serial;
    VerifyOptions inner_verify = opts;
    inner_verify.exec = Exec::Serial;
    const std::string prefix = "d=" + std::to_string(d) + " k=" + std::to_string(k) + " mask=";

    auto reports = indexed_map<EnergyReport>(n_masks, opts.exec, [&](std::size_t i) {
        const auto a = HypercubeSubset::from_mask(d, i + 1);
        EnergyReport r = energy_bound_report(a.size(), energy(a, k, inner), k, inner_verify);
        r.case_id = prefix + a.hex();
        return r;
    });

    ExhaustiveSummary s;
    s.d = d;
    s.k = k;
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        s.counts.add(r.verdict);
        if (r.verdict == Verdict::ExactEquality) {
            s.witnesses.push_back(HypercubeSubset::from_mask(d, i + 1).hex());
            // Equality means log2 E / log2 |A| = p_k, the largest possible ratio.
            if (r.size >= 2 && (!best || r.size > reports[*best].size)) {
                best = i;
            }
        }
        if (!is_pass(r.verdict)) {
            s.failures.push_back(r);
        }
    }
    if (!best) {
        // No equality witness: take the largest certified ratio midpoint.
        double best_ratio = -1;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (reports[i].size < 2) {
                continue;
            }
            const double ratio = mpz_get_d(reports[i].energy.get_mpz_t()) > 0
                                     ? std::log2(mpz_get_d(reports[i].energy.get_mpz_t())) /
                                           std::log2(static_cast<double>(reports[i].size))
                                     : 0;
            if (ratio > best_ratio) {
                best_ratio = ratio;
                best = i;
            }
        }
    }
    if (best) {
        const auto& r = reports[*best];
        s.maximizer = HypercubeSubset::from_mask(d, *best + 1).hex();
        s.max_ratio = log2(Interval::from_integer(r.energy, opts.prec)) /
                      log2(Interval::from_int(static_cast<long>(r.size), opts.prec));
    }
    return s;
}

RandomSummary random_verify(unsigned d, unsigned k, std::size_t n_samples, std::uint64_t seed,
                            const VerifyOptions& opts, const EnergyOptions& eopts) {
    if (d < 1 || d > kMaxDimension) {
        throw DomainError("dimension must lie in 1..16");
    }
    if (k < 1) {
        throw DomainError("k must be at least 1");
    }
    box_cells(d, k, eopts.cell_budget);
    EnergyOptions inner = eopts;
    inner.exec = Exec::Serial;
    VerifyOptions inner_verify = opts;
    inner_verify.exec = Exec::Serial;

    RandomSummary s;
    s.d = d;
    s.k = k;
    s.seed = seed;
    s.reports = indexed_map<EnergyReport>(n_samples, opts.exec, [&](std::size_t i) {
        Xoshiro256 rng(seed, i);
        const auto a = HypercubeSubset::random(d, rng);
        EnergyReport r = energy_bound_report(a.size(), energy(a, k, inner), k, inner_verify);
        r.case_id = "sample=" + std::to_string(i) + (d <= 6 ? " mask=" + a.hex() : "");
        return r;
    });
    for (const auto& r : s.reports) {
        s.counts.add(r.verdict);
    }
    return s;
}

}  // namespace binsum
