#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qvertex/laurent_fraction.hpp"
#include "qvertex/series.hpp"

namespace qvertex {

/// Outcome of one identity on one instance.
struct ReportEntry {
    std::string identity;
    std::string instance;
    bool pass = false;
    std::string lhs;  // serialized only on failure
    std::string rhs;
    std::string note;  // optional extra information (e.g. discrepancy factor)
    bool informational = false;  // reported outcome, not counted as a failure
};

struct VerificationReport {
    std::string suite;
    std::map<std::string, std::string> params;
    std::vector<ReportEntry> entries;

    std::size_t passed() const;
    /// Failures that count against the exit code (informational ones excluded).
    std::size_t failed() const;
    std::size_t reported() const;
    bool ok() const { return failed() == 0; }
    void append(const VerificationReport& other);
};

ReportEntry make_entry(std::string identity, std::string instance, bool pass);
/// Compares two fractions by cross-multiplication and fills witnesses.
ReportEntry check_equal(std::string identity, std::string instance, const LaurentFraction& lhs,
                        const LaurentFraction& rhs);
ReportEntry check_equal(std::string identity, std::string instance, const QSeries& lhs, const QSeries& rhs);
ReportEntry check_equal(std::string identity, std::string instance, const QSeries2& lhs, const QSeries2& rhs);
ReportEntry check_equal(std::string identity, std::string instance, const LaurentPoly& lhs, const LaurentPoly& rhs);

/// Fault injection for exit-code tests: when set, check_equal perturbs the
/// left-hand side of the n-th comparison (1-based) of the process.
void set_injected_failure(long n);

}  // namespace qvertex
