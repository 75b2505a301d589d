#include "binsum/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <iomanip>

namespace binsum {

ReportFormat parse_format(const std::string& name) {
    if (name == "text") {
        return ReportFormat::Text;
    }
    if (name == "json") {
        return ReportFormat::Json;
    }
    if (name == "csv") {
        return ReportFormat::Csv;
    }
    throw DomainError("unknown format '" + name + "' (expected text, json or csv)");
}

int exit_code(const VerdictCounts& counts) {
    if (counts.certain_false > 0) {
        return 1;
    }
    return counts.undecided > 0 ? 2 : 0;
}

std::string margin_string(const Interval& margin, int digits) {
    return margin.is_zero() ? "0" : margin.lower_string(digits);
}

Report::Report(std::string command, Fields parameters, int digits)
    : command_(std::move(command)), parameters_(std::move(parameters)), digits_(digits) {}

void Report::add(Record record, bool counted) {
    if (counted && record.verdict) {
        counts_.add(*record.verdict);
    }
    records_.push_back(std::move(record));
}

void Report::add(const VerificationReport& r, Fields extra) {
    Record rec;
    rec.case_id = r.case_id;
    rec.verdict = r.verdict;
    if (r.margin) {
        rec.margin = margin_string(*r.margin, digits_);
    }
    rec.precision = r.precision;
    if (r.value) {
        rec.extra.emplace_back("value_lo", r.value->lower_string(digits_));
        rec.extra.emplace_back("value_hi", r.value->upper_string(digits_));
    }
    for (auto& f : extra) {
        rec.extra.push_back(std::move(f));
    }
    add(std::move(rec));
}

void Report::add(const EnergyReport& r) {
    Record rec;
    rec.case_id = r.case_id;
    rec.verdict = r.verdict;
    if (r.margin) {
        rec.margin = margin_string(*r.margin, digits_);
    }
    rec.precision = r.precision;
    rec.extra.emplace_back("size", std::to_string(r.size));
    rec.extra.emplace_back("energy", r.energy.get_str());
    if (r.bound) {
        rec.extra.emplace_back("bound_lo", r.bound->lower_string(digits_));
        rec.extra.emplace_back("bound_hi", r.bound->upper_string(digits_));
    }
    add(std::move(rec));
}

void Report::tally(const VerdictCounts& c) {
    counts_.certain_true += c.certain_true;
    counts_.certain_false += c.certain_false;
    counts_.undecided += c.undecided;
    counts_.exact_equality += c.exact_equality;
}

void Report::note(std::string key, std::string value) { notes_.emplace_back(std::move(key), std::move(value)); }

std::string Report::invocation() const {
    std::string s = "binsum " + command_;
    for (const auto& [k, v] : parameters_) {
        s += " --" + k;
        if (!v.empty()) {
            s += " " + v;
        }
    }
    return s;
}

void Report::write(std::ostream& os, ReportFormat format) const {
    switch (format) {
    case ReportFormat::Text:
        write_text(os);
        break;
    case ReportFormat::Json:
        write_json(os);
        break;
    case ReportFormat::Csv:
        write_csv(os);
        break;
    }
}

namespace {

const char* verdict_name(const std::optional<Verdict>& v) { return v ? to_string(*v) : "-"; }

const char* result_name(int code) {
    switch (code) {
    case 0:
        return "PASS";
    case 1:
        return "FAIL";
    default:
        return "UNDECIDED";
    }
}

std::string wall_string(double seconds) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", seconds);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

}  // namespace

void Report::write_text(std::ostream& os) const {
    os << "# " << invocation() << "\n";
    for (const auto& r : records_) {
        os << std::left << std::setw(14) << verdict_name(r.verdict) << "  " << r.case_id;
        if (!r.margin.empty()) {
            os << "  margin=" << r.margin;
        }
        if (r.precision > 0) {
            os << "  prec=" << r.precision;
        }
        for (const auto& [k, v] : r.extra) {
            os << "  " << k << "=" << v;
        }
        os << "\n";
    }
    os << "summary: cases=" << counts_.total() << " certain_true=" << counts_.certain_true
       << " exact_equality=" << counts_.exact_equality << " certain_false=" << counts_.certain_false
       << " undecided=" << counts_.undecided << "\n";
    for (const auto& [k, v] : notes_) {
        os << k << ": " << v << "\n";
    }
    if (wall_time_) {
        os << "wall_time_s: " << wall_string(*wall_time_) << "\n";
    }
    os << "result: " << result_name(exit_code()) << " (exit " << exit_code() << ")\n";
}

void Report::write_json(std::ostream& os) const {
    using json = nlohmann::ordered_json;
    json doc;
    doc["command"] = invocation();
    json params = json::object();
    for (const auto& [k, v] : parameters_) {
        params[k] = v;
    }
    doc["parameters"] = params;
    doc["margin_digits"] = digits_;
    json records = json::array();
    for (const auto& r : records_) {
        json j;
        j["case"] = r.case_id;
        j["verdict"] = r.verdict ? json(to_string(*r.verdict)) : json(nullptr);
        j["margin_log2"] = r.margin.empty() ? json(nullptr) : json(r.margin);
        j["precision"] = r.precision;
        for (const auto& [k, v] : r.extra) {
            j[k] = v;
        }
        records.push_back(std::move(j));
    }
    doc["records"] = std::move(records);
    json summary;
    summary["cases"] = counts_.total();
    summary["certain_true"] = counts_.certain_true;
    summary["exact_equality"] = counts_.exact_equality;
    summary["certain_false"] = counts_.certain_false;
    summary["undecided"] = counts_.undecided;
    for (const auto& [k, v] : notes_) {
        summary[k] = v;
    }
    doc["summary"] = std::move(summary);
    if (wall_time_) {
        doc["wall_time_s"] = wall_string(*wall_time_);
    }
    doc["result"] = result_name(exit_code());
    doc["exit_code"] = exit_code();
    os << doc.dump(2) << "\n";
}

std::vector<std::string> Report::extra_columns() const {
    std::vector<std::string> cols;
    for (const auto& r : records_) {
        for (const auto& [k, v] : r.extra) {
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) {
                cols.push_back(k);
            }
        }
    }
    return cols;
}

void Report::write_csv(std::ostream& os) const {
    const auto cols = extra_columns();
    os << "case,verdict,margin_log2,precision";
    for (const auto& c : cols) {
        os << "," << csv_field(c);
    }
    os << "\n";
    for (const auto& r : records_) {
        os << csv_field(r.case_id) << "," << verdict_name(r.verdict) << "," << r.margin << ","
           << r.precision;
        for (const auto& c : cols) {
            auto it = std::find_if(r.extra.begin(), r.extra.end(), [&](const auto& f) { return f.first == c; });
            os << "," << (it == r.extra.end() ? "" : csv_field(it->second));
        }
        os << "\n";
    }
}

}  // namespace binsum
