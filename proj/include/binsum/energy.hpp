#pragma once

// k-additive energy of subsets of the hypercube {0,1}^d.
//
// Vertex (x_1, ..., x_d) is encoded as the integer sum x_i 2^{i-1}; a subset is
// a bitmask over the 2^d vertex codes.

#include "binsum/certified.hpp"
#include "binsum/exec.hpp"
#include "binsum/verdict.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace binsum {

inline constexpr unsigned kMaxDimension = 16;

class HypercubeSubset {
public:
    /// The empty subset of {0,1}^d; d must lie in 1..16.
    explicit HypercubeSubset(unsigned d);

    static HypercubeSubset full(unsigned d);
    static HypercubeSubset from_vertices(unsigned d, const std::vector<std::uint32_t>& vertices);
    /// Low 2^d bits of `mask` (d <= 6).
    static HypercubeSubset from_mask(unsigned d, std::uint64_t mask);
    /// Hexadecimal mask, bit v set iff vertex v is present. A "0x" prefix is allowed.
    static HypercubeSubset from_hex(unsigned d, const std::string& hex);
    /// Vertices given as d-character strings over {0,1}; character i is x_{i+1}.
    static HypercubeSubset from_strings(const std::vector<std::string>& rows);

    unsigned dimension() const { return d_; }
    std::uint32_t vertex_count() const { return std::uint32_t{1} << d_; }
    bool contains(std::uint32_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(std::uint32_t v);
    void erase(std::uint32_t v);
    std::size_t size() const;
    bool empty() const { return size() == 0; }
    std::vector<std::uint32_t> vertices() const;
    std::string hex() const;
    bool is_subset_of(const HypercubeSubset& other) const;

    /// Cartesian product in dimension d + other.d; this subset supplies the low coordinates.
    HypercubeSubset product(const HypercubeSubset& other) const;
    /// Image under x -> (x_{perm[0]}, ..., x_{perm[d-1]}) xor flips.
    HypercubeSubset transformed(const std::vector<unsigned>& perm, std::uint32_t flips) const;

    /// Subset of dimension d drawn with every vertex present independently with
    /// probability 1/2, redrawn while empty.
    template <class Rng>
    static HypercubeSubset random(unsigned d, Rng& rng);

    const std::vector<std::uint64_t>& words() const { return words_; }
    bool operator==(const HypercubeSubset&) const = default;

private:
    unsigned d_;
    std::vector<std::uint64_t> words_;
};

std::string vertex_string(unsigned d, std::uint32_t v);

struct EnergyOptions {
    /// Largest admissible box (k+1)^d, in cells.
    std::size_t cell_budget = std::size_t{1} << 26;
    Exec exec = Exec::Parallel;
};

/// N_k(s) for s in the box {0..k}^d, stored in mixed radix k+1 with the first
/// coordinate least significant.
struct SumTally {
    unsigned k = 0;
    unsigned d = 0;
    std::vector<ExactInt> counts;

    std::size_t index(const std::vector<unsigned>& s) const;
    std::vector<unsigned> point(std::size_t index) const;
    /// N_k(s); zero outside the box.
    ExactInt at(const std::vector<unsigned>& s) const {
        const std::size_t i = index(s);
        return i < counts.size() ? counts[i] : ExactInt(0);
    }
    ExactInt mass() const;
};

/// Number of cells (k+1)^d; throws ResourceError over the budget.
std::size_t box_cells(unsigned d, unsigned k, std::size_t budget);

SumTally sum_tally(const HypercubeSubset& a, unsigned k, const EnergyOptions& opts = {});

/// E_k(A) = sum_s N_k(s)^2. Exec::Serial selects the scatter reference kernel,
/// Exec::Parallel the blocked OpenMP kernel.
ExactInt energy(const HypercubeSubset& a, unsigned k, const EnergyOptions& opts = {});

/// Direct count of 2k-tuples; requires |A|^{2k} <= cap.
ExactInt energy_bruteforce(const HypercubeSubset& a, unsigned k, std::uint64_t cap = 100000000);

struct EnergyReport {
    std::string case_id;
    std::size_t size = 0;
    ExactInt energy;
    Verdict verdict = Verdict::Undecided;
    /// p_k log2|A| - log2 E_k(A).
    std::optional<Interval> margin;
    Precision precision = kDefaultPrecision;
    /// |A|^{p_k}, for display.
    std::optional<Interval> bound;
};

/// E_k(A) <= |A|^{p_k}. When |A| = 2^m the comparison is the integer one
/// E_k(A) <= C(2k,k)^m, which can report ExactEquality.
EnergyReport verify_energy_bound(const HypercubeSubset& a, unsigned k, const VerifyOptions& opts = {},
                                 const EnergyOptions& eopts = {});
EnergyReport energy_bound_report(std::size_t size, const ExactInt& energy, unsigned k,
                                 const VerifyOptions& opts = {});

struct ExhaustiveSummary {
    unsigned d = 0;
    unsigned k = 0;
    VerdictCounts counts;
    /// Masks (as hex) of every ExactEquality subset, in mask order.
    std::vector<std::string> witnesses;
    /// Subset maximizing log2 E_k / log2 |A| over |A| >= 2; ties go to the
    /// larger |A| and then the smaller mask.
    std::string maximizer;
    std::optional<Interval> max_ratio;
    /// Reports that did not pass.
    std::vector<EnergyReport> failures;
};

ExhaustiveSummary exhaustive_verify(unsigned d, unsigned k, const VerifyOptions& opts = {},
                                    const EnergyOptions& eopts = {});

struct RandomSummary {
    unsigned d = 0;
    unsigned k = 0;
    std::uint64_t seed = 0;
    VerdictCounts counts;
    std::vector<EnergyReport> reports;
};

/// Sample i is drawn from the stream (seed, i), so the result does not depend
/// on the worker count.
RandomSummary random_verify(unsigned d, unsigned k, std::size_t n_samples, std::uint64_t seed,
                            const VerifyOptions& opts = {}, const EnergyOptions& eopts = {});

template <class Rng>
HypercubeSubset HypercubeSubset::random(unsigned d, Rng& rng) {
    HypercubeSubset out(d);
    const std::uint32_t n = out.vertex_count();
    do {
        for (std::size_t w = 0; w < out.words_.size(); ++w) {
            std::uint64_t bits = rng.next();
            if (n < 64) {
                bits &= (std::uint64_t{1} << n) - 1;
            }
            out.words_[w] = bits;
        }
    } while (out.empty());
    return out;
}

}  // namespace binsum
