#pragma once

#include "affk/symfunc.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace affk {

/// Outcome of one instance of an identity check.
struct CheckResult {
    std::string instance;
    bool pass = true;
    /// Counterexample dump when pass is false.
    std::string detail;
};

struct VerifyReport {
    std::string check;
    std::optional<int> k;
    int deg_max = 0;
    std::vector<CheckResult> results;

    bool passed() const;
    std::size_t failures() const;
};

/// duality, omega, newton, k-newton, reduction-G, reduction-g,
/// pieri-consistency, kostka-symmetry, bijection.
const std::vector<std::string>& verify_check_names();

/// Runs one named check over every instance up to deg_max. newton and
/// k-newton ignore k; the others require it. Throws InvalidInput for an
/// unknown check or out-of-range parameters.
VerifyReport run_verify(std::string_view check, std::optional<int> k, int deg_max);

/// sum_{r=0}^{l} (-1)^r h_{l-r} e_r in the h basis; 1 at l = 0, else 0.
SymFunc newton_residual(int l);
/// sum_{r=0}^{l} sum_{j=0}^{r} (-1)^{j+r} C(r-2, j) g_{l-r} g_{1^{r-j}} in the
/// h basis; 1 at l = 0, -1 at l = 1, else 0.
SymFunc k_newton_residual(int l);

std::string to_json(const VerifyReport& report);
std::string to_text(const VerifyReport& report);

}  // namespace affk
