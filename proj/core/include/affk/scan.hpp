#pragma once

#include "affk/integer.hpp"
#include "affk/partition.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace affk {

/// Sign pattern a scanned coefficient is expected to follow.
enum class SignRule {
    nonnegative,
    /// (-1)^{|lambda|+|mu|} c >= 0.
    alternating,
    /// Only the coefficient on lambda itself (1) is expected.
    vanishing,
};

struct ScanEntry {
    Partition lambda;
    Partition mu;
    Integer coeff;
    /// False when the coefficient breaks the section's rule: a finding.
    bool ok = true;
};

struct ScanSection {
    /// Short symbol for the coefficients, e.g. "a^k".
    std::string name;
    std::string description;
    SignRule rule = SignRule::nonnegative;
    int k = 0;
    std::vector<ScanEntry> entries;
    /// Indices lambda scanned, with whether every entry for it is ok.
    std::vector<std::pair<Partition, bool>> lambdas;
};

struct ScanReport {
    std::string conjecture;
    int k = 0;
    int deg_max = 0;
    std::vector<ScanSection> sections;

    std::size_t coefficients() const;
    std::size_t findings() const;
};

/// G-in-dualks-positivity, gk-in-g-positivity, gk-branching-positivity,
/// s-in-Gk-positivity, kss-cancellation.
const std::vector<std::string>& scan_names();

/// Expands the families named by the conjecture up to degree deg_max and
/// records every coefficient. Violations become findings; nothing throws
/// on them. deg_max < 1 gives a report with no sections. Throws
/// InvalidInput on an unknown name or k < 1.
ScanReport run_scan(std::string_view conjecture, int k, int deg_max);

std::string_view sign_rule_name(SignRule rule);

std::string to_json(const ScanReport& report);
std::string to_text(const ScanReport& report);

/// Schema check of a JSON scan report; returns the problems found (empty
/// when valid).
std::vector<std::string> validate_scan_report_json(std::string_view text);

}  // namespace affk
