// biolink: runs one link, BER or MAC study and writes its CSV.
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "biolink/harness/config.hpp"
#include "biolink/harness/run.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

std::string key_help() {
  std::string s = "\nConfig keys (key = value, # comments, lists comma separated):\n";
  for (const auto& k : biolink::harness::known_keys()) {
    std::string name(k.name);
    name.resize(std::max<std::size_t>(name.size() + 2, 26), ' ');
    s += "  " + name + std::string(k.help) + "\n";
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  namespace h = biolink::harness;

  CLI::App app{"Magnetic-induction biomote link, BER and MAC simulator"};
  std::string command;
  std::string config_path;
  std::string out_path = "-";
  std::optional<std::string> seed_text;
  std::vector<std::string> overrides;

  std::string names;
  for (auto c : h::all_commands()) names += (names.empty() ? "" : ", ") + std::string(h::command_name(c));
  app.add_option("command", command, "One of: " + names)->required();
  app.add_option("--config", config_path, "Config file; defaults apply when omitted");
  app.add_option("--out", out_path, "Output CSV path, - for stdout")->capture_default_str();
  app.add_option("--seed", seed_text, "Master seed (decimal or 0x hex); falls back to BIOLINK_SEED, then 0xB10B10");
  app.add_option("--set", overrides, "key=value override, repeatable")->take_all();
  app.footer(h::schema_help() + key_help() +
             "\nExit status: 0 ok, 2 configuration error, 3 runtime error.\n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  h::Command cmd{};
  h::Params params;
  std::uint64_t seed = 0;
  try {
    cmd = h::parse_command(command);
    if (!config_path.empty()) params = h::load_config(config_path);
    for (const auto& o : overrides) h::apply_override(params, o);
    seed = h::resolve_seed(seed_text ? std::optional<std::string_view>(*seed_text) : std::nullopt,
                           std::getenv("BIOLINK_SEED"));
  } catch (const h::ConfigError& e) {
    std::cerr << "biolink: " << e.what() << '\n';
    return kExitConfig;
  }

  std::string csv;
  try {
    csv = h::run(cmd, params, seed);
  } catch (const h::ConfigError& e) {
    std::cerr << "biolink " << command << ": " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "biolink " << command << ": " << e.what() << '\n';
    return kExitRuntime;
  }

  if (out_path == "-") {
    std::cout << csv << std::flush;
    return std::cout ? 0 : kExitRuntime;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  out << csv;
  out.close();
  if (!out) {
    std::cerr << "biolink: cannot write '" << out_path << "'\n";
    return kExitRuntime;
  }
  return 0;
}
