#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace evoalg::cli {

// Exit codes shared by every command; stable for CI use.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kInputError = 2;

int cmd_info(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_derivations(const std::string& path, bool as_json, std::ostream& out, std::ostream& err);
int cmd_inner(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_decompose(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_catalog_list(std::ostream& out);

/// Verifies one family (args = {name, params...}) or, with empty args, the
/// whole catalog over its default parameter samples.
int cmd_catalog_verify(const std::vector<std::string>& args, bool as_json, std::uint64_t seed,
                       std::ostream& out, std::ostream& err);

}  // namespace evoalg::cli
