#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "biolink/harness/config.hpp"
#include "biolink/link/link_budget.hpp"

namespace biolink::harness {

enum class Command { LinkSweep, Table1, BerSweep, MacScenario1, MacScenario2, MacCdma, MacCompare };

std::span<const Command> all_commands();
std::string_view command_name(Command c);
/// Throws ConfigError for an unknown name.
Command parse_command(std::string_view name);
/// Comma-separated CSV header of the command's output.
std::string_view csv_header(Command c);
/// One line per command: name, header and a short description.
std::string schema_help();

/// Seed from, in order: the command-line value, the environment value, the
/// default. Both strings accept decimal or 0x-prefixed hex.
std::uint64_t resolve_seed(std::optional<std::string_view> cli, const char* env);
std::uint64_t parse_seed(std::string_view text);

link::LinkConfig make_link_config(const Params& p);
link::NoiseModel make_noise_model(const Params& p);

/// Runs a command and returns the full CSV text (header included). The text
/// depends only on (command, params, seed), not on params.workers.
std::string run(Command c, const Params& p, std::uint64_t seed);

}  // namespace biolink::harness
