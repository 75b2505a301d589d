#pragma once

#include "binsum/certified.hpp"
#include "binsum/exec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace binsum {

/// Outcome of verifying one claimed inequality. ExactEquality comes only from
/// algebraic fast paths, never from overlapping enclosures.
enum class Verdict { CertainTrue, CertainFalse, Undecided, ExactEquality };

const char* to_string(Verdict v);
Verdict to_verdict(Certainty c);

/// True for verdicts that confirm the claim.
inline bool is_pass(Verdict v) { return v == Verdict::CertainTrue || v == Verdict::ExactEquality; }

struct VerificationReport {
    std::string case_id;
    Verdict verdict = Verdict::Undecided;
    /// log2 of (right side / left side); positive when the claim holds.
    std::optional<Interval> margin;
    /// The evaluated quantity itself, for checks where that is informative.
    std::optional<Interval> value;
    Precision precision = kDefaultPrecision;
};

struct VerifyOptions {
    Precision prec = kDefaultPrecision;
    Precision cap = kDefaultPrecisionCap;
    Exec exec = Exec::Parallel;
};

struct VerdictCounts {
    std::size_t certain_true = 0;
    std::size_t certain_false = 0;
    std::size_t undecided = 0;
    std::size_t exact_equality = 0;

    void add(Verdict v);
    std::size_t total() const { return certain_true + certain_false + undecided + exact_equality; }
    bool all_pass() const { return certain_false == 0 && undecided == 0; }
};

VerdictCounts count_verdicts(const std::vector<VerificationReport>& reports);

/// Report for an algebraically exact equality: margin is exactly 0.
VerificationReport exact_equality(std::string case_id, Precision prec);

/// Verdict for "lhs <= rhs" from enclosures of log2(lhs) and log2(rhs).
VerificationReport compare_logs(std::string case_id, const Interval& log2_lhs,
                                const Interval& log2_rhs);

/// Re-runs `evaluate(prec)` doubling the precision while the verdict is
/// Undecided and the cap allows.
template <class Eval>
VerificationReport escalate_report(Eval&& evaluate, Precision prec, Precision cap) {
    VerificationReport r = evaluate(prec);
    while (r.verdict == Verdict::Undecided && prec * 2 <= cap) {
        prec *= 2;
        r = evaluate(prec);
    }
    return r;
}

}  // namespace binsum
