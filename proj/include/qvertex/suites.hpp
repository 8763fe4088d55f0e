#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qvertex/report.hpp"

namespace qvertex {

/// Sweep sizes; unset fields take the suite's default.
struct SuiteParams {
    std::optional<int> max_weight, qdeg, bdeg, fdeg, m, n;
};

/// A suite split into independent tasks whose reports concatenate in order.
struct SuitePlan {
    std::string name;
    std::map<std::string, std::string> params;
    std::vector<std::function<VerificationReport()>> tasks;
};

/// Suite names accepted by plan_suite, in the order `all` runs them.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name.
SuitePlan plan_suite(const std::string& name, const SuiteParams& params);
VerificationReport run_plan(const SuitePlan& plan, int threads);

/// kappa, hooks, contents and the hook-sum for |mu| <= max_weight; the hook
/// and pair-difference generating identity for |mu| <= summu_weight.
VerificationReport verify_partitions(int max_weight, int summu_weight);
/// Tableau oracle and LR symmetries at |mu| <= max_weight, principal
/// symmetries at max_weight + 2, the transposed skew rule at skew_weight,
/// skew Cauchy and chained sums through degree T.
VerificationReport verify_schur(int max_weight, int skew_weight, int T);
/// Normal form, fcoeff consistency, specializations, derivative identity and
/// distributivity of the pair reduction.
VerificationReport verify_prodred(int max_weight);

}  // namespace qvertex
