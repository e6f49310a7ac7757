#pragma once

#include "dsf/numeric.hpp"

#include <string>
#include <vector>

namespace dsf {

/// One failed identity.
struct FailureRecord {
    std::string suite;
    int m = 0;
    std::string label;               ///< which formula or row
    std::vector<long long> indices;  ///< (k, l), (i, l), (s, t), ...
    std::string expected;
    std::string got;
};

/// Outcome of an identity suite. Every check is counted; failures keep the
/// first kMaxStoredFailures records and count the rest.
class VerificationReport {
  public:
    static constexpr std::size_t kMaxStoredFailures = 200;

    explicit VerificationReport(std::string suite = {}) : suite_(std::move(suite)) {}

    const std::string& suite() const noexcept { return suite_; }
    std::size_t checks() const noexcept { return checks_; }
    std::size_t failure_count() const noexcept { return failure_count_; }
    const std::vector<FailureRecord>& failures() const noexcept { return failures_; }
    bool ok() const noexcept { return failure_count_ == 0; }
    /// Informational findings that are not failures.
    const std::vector<std::string>& notes() const noexcept { return notes_; }
    void note(std::string text) { notes_.push_back(std::move(text)); }

    /// Records one check; returns `passed`.
    bool check(bool passed, int m, std::string label, std::vector<long long> indices = {},
               std::string expected = {}, std::string got = {}) {
        ++checks_;
        if (!passed) {
            ++failure_count_;
            if (failures_.size() < kMaxStoredFailures)
                failures_.push_back({suite_, m, std::move(label), std::move(indices), std::move(expected),
                                     std::move(got)});
        }
        return passed;
    }

    template <class A, class B>
    bool expect_equal(const A& expected, const B& got, int m, std::string label, std::vector<long long> indices = {}) {
        const bool same = expected == got;
        if (same) return check(true, m, {}, {});
        return check(false, m, std::move(label), std::move(indices), render(expected), render(got));
    }

    void merge(const VerificationReport& other) {
        checks_ += other.checks_;
        failure_count_ += other.failure_count_;
        for (const auto& f : other.failures_)
            if (failures_.size() < kMaxStoredFailures) failures_.push_back(f);
        notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
    }

  private:
    template <class T>
    static std::string render(const T& v) {
        if constexpr (std::is_same_v<T, bool>)
            return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>)
            return v;
        else if constexpr (std::is_arithmetic_v<T>)
            return std::to_string(v);
        else
            return to_string(v);
    }

    std::string suite_;
    std::size_t checks_ = 0;
    std::size_t failure_count_ = 0;
    std::vector<FailureRecord> failures_;
    std::vector<std::string> notes_;
};

} // namespace dsf
