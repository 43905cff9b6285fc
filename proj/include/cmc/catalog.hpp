#pragma once

// Named verification checks. Each check records labelled values and exact
// assertions; a check passes only when every assertion holds.

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cmc/field.hpp"

namespace cmc {

enum class CheckStatus { pass, fail, error };
std::string to_string(CheckStatus s);

struct VerificationReport {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    std::vector<std::pair<std::string, std::string>> details;
    std::chrono::duration<double> elapsed{0};
};

struct CatalogOptions {
    Field field = Field::rationals();
    std::uint64_t seed = 0;
    /// Run characteristic-sensitive checks over Q, F_2 and F_3 instead of
    /// `field` alone.
    bool all_characteristics = false;
    /// Cases per randomized property; the acceptance default is 200.
    int property_cases = 200;
};

/// Collects details and assertions for one check.
class CheckContext {
  public:
    explicit CheckContext(const CatalogOptions& opts) : options(opts) {}
    const CatalogOptions options;

    void note(const std::string& label, const std::string& value);
    /// Records `value` under `label` and fails the check when !ok.
    bool expect(const std::string& label, bool ok, const std::string& value = {});

    bool ok() const { return ok_; }
    std::vector<std::pair<std::string, std::string>> take_details() { return std::move(details_); }

    /// Fields to iterate for characteristic-sensitive checks.
    std::vector<Field> fields() const;

  private:
    std::vector<std::pair<std::string, std::string>> details_;
    bool ok_ = true;
};

struct CatalogEntry {
    std::string id;
    std::string summary;
    std::function<void(CheckContext&)> body;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_check(const std::string& id);

VerificationReport run_check(const CatalogEntry& entry, const CatalogOptions& opts);

/// Runs the checks on a thread pool. `emit` is called once per report, in
/// the order of `ids`, as soon as that report and all earlier ones are done.
std::vector<VerificationReport> run_checks(const std::vector<std::string>& ids, const CatalogOptions& opts,
                                           const std::function<void(const VerificationReport&)>& emit = {},
                                           unsigned threads = 0);

} // namespace cmc
