#include "qvertex/report.hpp"

#include <algorithm>
#include <atomic>

namespace qvertex {

namespace {

std::atomic<long> inject_at{0};
std::atomic<long> comparisons{0};

bool should_perturb() {
    long target = inject_at.load();
    return target > 0 && comparisons.fetch_add(1) + 1 == target;
}

}  // namespace

void set_injected_failure(long n) {
    inject_at = n;
    comparisons = 0;
}

std::size_t VerificationReport::passed() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.pass; }));
}

std::size_t VerificationReport::failed() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass && !e.informational; }));
}

std::size_t VerificationReport::reported() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass && e.informational; }));
}

void VerificationReport::append(const VerificationReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

ReportEntry make_entry(std::string identity, std::string instance, bool pass) {
    ReportEntry e;
    e.identity = std::move(identity);
    e.instance = std::move(instance);
    e.pass = pass;
    return e;
}

ReportEntry check_equal(std::string identity, std::string instance, const LaurentFraction& lhs,
                        const LaurentFraction& rhs) {
    LaurentFraction l = should_perturb() ? lhs + LaurentFraction(Rat(1, 997)) : lhs;
    ReportEntry e = make_entry(std::move(identity), std::move(instance), lf_equal(l, rhs));
    if (!e.pass) {
        e.lhs = to_string(l);
        e.rhs = to_string(rhs);
        // A monomial ratio usually means a sign or normalisation slip.
        if (!l.is_zero() && !rhs.is_zero()) {
            LaurentFraction ratio = l / rhs;
            if (ratio.is_poly() && ratio.num().is_monomial())
                e.note = "lhs/rhs = " + to_string(ratio.num(), false);
        }
    }
    return e;
}

ReportEntry check_equal(std::string identity, std::string instance, const QSeries& lhs, const QSeries& rhs) {
    QSeries l = lhs;
    if (should_perturb()) l[0] += LaurentFraction(Rat(1, 997));
    ReportEntry e = make_entry(std::move(identity), std::move(instance), l.equals(rhs));
    if (!e.pass) {
        e.lhs = to_string(l);
        e.rhs = to_string(rhs);
    }
    return e;
}

ReportEntry check_equal(std::string identity, std::string instance, const QSeries2& lhs, const QSeries2& rhs) {
    QSeries2 l = lhs;
    if (should_perturb()) l[0][0] += LaurentFraction(Rat(1, 997));
    ReportEntry e = make_entry(std::move(identity), std::move(instance), l.equals(rhs));
    if (!e.pass) {
        e.lhs = to_string(l);
        e.rhs = to_string(rhs);
    }
    return e;
}

ReportEntry check_equal(std::string identity, std::string instance, const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly l = should_perturb() ? lhs + LaurentPoly(Rat(1, 997)) : lhs;
    ReportEntry e = make_entry(std::move(identity), std::move(instance), l == rhs);
    if (!e.pass) {
        e.lhs = to_string(l);
        e.rhs = to_string(rhs);
    }
    return e;
}

}  // namespace qvertex
