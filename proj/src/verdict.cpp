#include "binsum/verdict.hpp"

#include <utility>

namespace binsum {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::CertainTrue:
        return "CertainTrue";
    case Verdict::CertainFalse:
        return "CertainFalse";
    case Verdict::Undecided:
        return "Undecided";
    case Verdict::ExactEquality:
        return "ExactEquality";
    }
    return "?";
}

Verdict to_verdict(Certainty c) {
    switch (c) {
    case Certainty::CertainTrue:
        return Verdict::CertainTrue;
    case Certainty::CertainFalse:
        return Verdict::CertainFalse;
    default:
        return Verdict::Undecided;
    }
}

void VerdictCounts::add(Verdict v) {
    switch (v) {
    case Verdict::CertainTrue:
        ++certain_true;
        break;
    case Verdict::CertainFalse:
        ++certain_false;
        break;
    case Verdict::Undecided:
        ++undecided;
        break;
    case Verdict::ExactEquality:
        ++exact_equality;
        break;
    }
}

VerdictCounts count_verdicts(const std::vector<VerificationReport>& reports) {
    VerdictCounts c;
    for (const auto& r : reports) {
        c.add(r.verdict);
    }
    return c;
}

VerificationReport exact_equality(std::string case_id, Precision prec) {
    VerificationReport r;
    r.case_id = std::move(case_id);
    r.verdict = Verdict::ExactEquality;
    r.margin = Interval(prec);
    r.precision = prec;
    return r;
}

VerificationReport compare_logs(std::string case_id, const Interval& log2_lhs,
                                const Interval& log2_rhs) {
    VerificationReport r;
    r.case_id = std::move(case_id);
    r.verdict = to_verdict(certified_compare(log2_lhs, log2_rhs));
    r.margin = log2_rhs - log2_lhs;
    r.precision = std::max(log2_lhs.precision(), log2_rhs.precision());
    return r;
}

}  // namespace binsum
