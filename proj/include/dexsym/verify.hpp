#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dexsym/json_io.hpp"

namespace dexsym::verify {

inline constexpr const char* kVersion = "0.1.0";

enum class CheckStatus { Pass, Fail };

/// One verified statement: what was claimed, whether the computation
/// agreed, and enough detail to chase a failure.
struct CheckRecord {
    std::string id;
    std::string claim;
    CheckStatus status = CheckStatus::Fail;
    std::string details;
};

struct CriterionReport {
    std::string id;
    std::string title;
    std::vector<CheckRecord> checks;
    bool passed() const;
};

struct VerifyOptions {
    std::vector<mpq_class> param_samples{-2, -1, 0, 1, 2};
    std::optional<std::string> only;  // substring filter on criterion ids
    std::uint64_t seed = 0x5eed0001u;
};

struct VerifyReport {
    std::string version;
    std::string catalog_digest;
    std::vector<CriterionReport> criteria;
    bool all_passed() const;
};

/// Runs the whole verification suite (catalog transcription sanity, the
/// classification results, the series theorems, oracle agreement, closure
/// properties, quotients, the graph classification, and the
/// anti-commutative equivalence), deterministically.
VerifyReport run_verification(const VerifyOptions& opts = {});

json report_to_json(const VerifyReport& r);

}  // namespace dexsym::verify
