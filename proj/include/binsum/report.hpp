#pragma once

// Per-case records and their text / JSON / CSV serialization.

#include "binsum/energy.hpp"
#include "binsum/verdict.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace binsum {

enum class ReportFormat { Text, Json, Csv };

ReportFormat parse_format(const std::string& name);

using Fields = std::vector<std::pair<std::string, std::string>>;

struct Record {
    std::string case_id;
    /// Absent for pure computations that claim nothing.
    std::optional<Verdict> verdict;
    /// log2 margin, lower endpoint rounded down.
    std::string margin;
    Precision precision = 0;
    Fields extra;
};

/// Exit status from the verdict multiset: 1 on any CertainFalse, else 2 on
/// any Undecided, else 0.
int exit_code(const VerdictCounts& counts);

class Report {
  public:
    Report(std::string command, Fields parameters, int digits);

    int digits() const { return digits_; }

    /// Appends a record; its verdict is counted unless `counted` is false
    /// (for records whose verdicts were already tallied in bulk).
    void add(Record record, bool counted = true);
    void add(const VerificationReport& r, Fields extra = {});
    void add(const EnergyReport& r);
    void tally(const VerdictCounts& counts);
    void note(std::string key, std::string value);
    void set_wall_time(double seconds) { wall_time_ = seconds; }

    const VerdictCounts& counts() const { return counts_; }
    const std::vector<Record>& records() const { return records_; }
    int exit_code() const { return binsum::exit_code(counts_); }

    /// "binsum <command> <parameters as flags>", enough to re-run the experiment.
    std::string invocation() const;

    void write(std::ostream& os, ReportFormat format) const;

  private:
    void write_text(std::ostream& os) const;
    void write_json(std::ostream& os) const;
    void write_csv(std::ostream& os) const;
    std::vector<std::string> extra_columns() const;

    std::string command_;
    Fields parameters_;
    int digits_;
    std::vector<Record> records_;
    VerdictCounts counts_;
    Fields notes_;
    std::optional<double> wall_time_;
};

/// Lower endpoint rounded down with the given significant digits; "0" for an
/// exact zero.
std::string margin_string(const Interval& margin, int digits);

}  // namespace binsum
