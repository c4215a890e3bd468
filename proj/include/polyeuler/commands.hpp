#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyeuler/errors.hpp"
#include "polyeuler/exact_series.hpp"

namespace polyeuler {

inline constexpr int report_schema = 1;
inline constexpr const char* cap_environment_variable = "POLYEULER_ENUM_CAP";

struct Command {
    std::string verb;
    std::string set;
    std::vector<std::size_t> ks;
    std::optional<std::size_t> k;
    std::optional<std::size_t> terms;
    std::optional<std::size_t> max_order;
    std::optional<std::uint64_t> finite;
    std::optional<std::string> b;
    std::optional<std::int64_t> chib;
    bool pairs = false;
    bool cells = false;
    std::string scope = "all";
    /// Brute-force enumeration cap (tuples, maps); module defaults when unset.
    std::optional<std::uint64_t> cap;
};

/// Validates and dispatches. Throws the module's Error on failure.
nlohmann::ordered_json run(const Command& command);

/// Report for an error, with its class.
nlohmann::ordered_json error_report(const Command& command, const Error& error);

/// 0 on success; 1 when a verify report has failures; 2..5 per error class.
int exit_code(const nlohmann::ordered_json& report);
int exit_code(ErrorKind kind);

std::string render_text(const nlohmann::ordered_json& report);

/// Reads the enumeration cap override from the environment, if set.
std::optional<std::uint64_t> cap_from_environment();

struct CheckResult {
    std::string module;
    std::string invariant;
    bool passed = false;
    std::string detail;
};

/// Runs the invariant checks of one module, or all of them.
/// Throws InputError for an unknown scope.
std::vector<CheckResult> verify_suite(const std::string& scope = "all");

const std::vector<std::string>& verify_scopes();

}  // namespace polyeuler
