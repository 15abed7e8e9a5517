#include "stgame.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

// 0 = success, 1 = the input is semantically unusable (ties, bounds, broken
// structure), 2 = could not even read the request.
int exit_code(stg_status s) {
  switch (s) {
    case STG_OK:
      return 0;
    case STG_ERR_PARSE:
    case STG_ERR_USAGE:
      return 2;
    default:
      return 1;  // domain, invalid
  }
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    out = buf.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int emit(stg_status status, char** text) {
  if (status == STG_OK && *text) {
    std::fputs(*text, stdout);
    stg_string_free(*text);
    return 0;
  }
  std::fprintf(stderr, "error: %s\n", stg_last_error());
  return exit_code(status);
}

struct ParsedGame {
  stg_game* handle = nullptr;
  ~ParsedGame() { stg_game_free(handle); }
};

// Loads and parses, or prints the diagnostic and fills *rc.
bool load_game(const std::string& path, ParsedGame& g, int* rc) {
  std::string text;
  if (!read_input(path, text)) {
    std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
    *rc = 2;
    return false;
  }
  stg_status s = stg_game_parse(text.c_str(), &g.handle);
  if (s != STG_OK) {
    std::fprintf(stderr, "error: %s\n", stg_last_error());
    *rc = exit_code(s);
    return false;
  }
  return true;
}

// Routed around CLI11: correlation values like "-rt2/2" would be read as
// option clusters by any getopt-style parser, and the interface takes them as
// plain arguments.
int run_bell(int argc, char** argv) {
  char* text = nullptr;
  std::vector<std::string> args(argv + 2, argv + argc);
  if (args.size() == 1 && args[0] == "--help") {
    std::puts("Usage: stg bell --chsh E11 E12 E21 E22 | --scan | --game");
    std::puts("  --chsh   CHSH score and locality verdict for four correlations");
    std::puts("           (rationals, decimals, or the tokens rt2/2 and -rt2/2)");
    std::puts("  --scan   score all 16 deterministic local models");
    std::puts("  --game   print the two-wing laboratory as a game document");
    return 0;
  }
  if (args.size() == 1 && args[0] == "--scan") {
    stg_status s = stg_bell_scan(&text);
    return emit(s, &text);
  }
  if (args.size() == 1 && args[0] == "--game") {
    stg_status s = stg_bell_game(&text);
    return emit(s, &text);
  }
  if (args.size() == 5 && args[0] == "--chsh") {
    stg_status s =
        stg_bell_chsh(args[1].c_str(), args[2].c_str(), args[3].c_str(), args[4].c_str(), &text);
    return emit(s, &text);
  }
  std::fprintf(stderr, "error: expected --chsh E11 E12 E21 E22, --scan, or --game\n");
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc >= 2 && std::string(argv[1]) == "bell") return run_bell(argc, argv);

  CLI::App app{"spacetime game analyzer"};
  app.require_subcommand(1);
  app.set_version_flag("--version", stg_version());

  std::string file;
  std::string to = "extensive";
  std::string method;
  std::string free_choice_point;
  std::string semantics = "nash";
  bool trace = false;
  bool contextuality = false;
  unsigned nodes = 4, max_actions = 2, players = 2, count = 100, workers = 1;
  std::string density = "1/4";
  std::uint64_t seed = 1;

  auto* validate = app.add_subcommand("validate", "check a game document");
  validate->add_option("file", file, "game document ('-' for stdin)")->required();

  auto* outcomes = app.add_subcommand("outcomes", "list the possible histories with payoffs");
  outcomes->add_option("file", file)->required();

  auto* convert = app.add_subcommand("convert", "translate to another representation");
  convert->add_option("file", file)->required();
  convert->add_option("--to", to, "extensive | strategic | dot")->required();

  auto* solve = app.add_subcommand("solve", "compute an equilibrium");
  solve->add_option("file", file)->required();
  solve->add_option("--method", method, "nash | spe | ppe | pte")->required();
  solve->add_flag("--trace", trace, "show elimination rounds (pte/ppe)");

  auto* analyze = app.add_subcommand("analyze", "counterfactual structure of a game");
  analyze->add_option("file", file)->required();
  analyze->add_flag("--contextuality", contextuality, "how much of the game a resolution pins down");
  analyze->add_option("--free-choice", free_choice_point, "test free choice at this point");
  analyze->add_option("--semantics", semantics, "nash | transparent (with --free-choice)");

  // Listed for --help only; main() dispatches "bell" before parsing so that
  // negative correlation values survive.
  app.add_subcommand("bell", "two-wing measurement laboratory")
      ->prefix_command();

  auto* gen = app.add_subcommand("gen", "generate a random game document");
  gen->add_option("--nodes", nodes, "decision point count");
  gen->add_option("--max-actions", max_actions, "largest action set");
  gen->add_option("--players", players, "player count");
  gen->add_option("--density", density, "edge probability in [0,1]");
  gen->add_option("--seed", seed, "generator seed");

  auto* stats = app.add_subcommand("stats", "equilibrium statistics over generated games");
  stats->add_option("--count", count, "number of games");
  stats->add_option("--nodes", nodes, "decision point count");
  stats->add_option("--max-actions", max_actions, "largest action set");
  stats->add_option("--players", players, "player count");
  stats->add_option("--density", density, "edge probability in [0,1]");
  stats->add_option("--seed", seed, "stream seed");
  stats->add_option("--workers", workers, "worker threads (output is identical for any count)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  char* text = nullptr;

  if (validate->parsed()) {
    std::string doc;
    if (!read_input(file, doc)) {
      std::fprintf(stderr, "error: cannot read %s\n", file.c_str());
      return 2;
    }
    int errors = 0;
    stg_status s = stg_game_validate_text(doc.c_str(), &text, &errors);
    if (s != STG_OK) {
      std::fprintf(stderr, "error: %s\n", stg_last_error());
      return exit_code(s);
    }
    std::fputs(text, stdout);
    stg_string_free(text);
    return errors == 0 ? 0 : 1;
  }

  if (outcomes->parsed()) {
    ParsedGame g;
    int rc = 0;
    if (!load_game(file, g, &rc)) return rc;
    stg_status s = stg_game_outcomes(g.handle, &text);
    return emit(s, &text);
  }

  if (convert->parsed()) {
    ParsedGame g;
    int rc = 0;
    if (!load_game(file, g, &rc)) return rc;
    stg_status s = stg_game_convert(g.handle, to.c_str(), &text);
    return emit(s, &text);
  }

  if (solve->parsed()) {
    ParsedGame g;
    int rc = 0;
    if (!load_game(file, g, &rc)) return rc;
    stg_status s = stg_game_solve(g.handle, method.c_str(), trace ? 1 : 0, &text);
    return emit(s, &text);
  }

  if (analyze->parsed()) {
    if (contextuality != free_choice_point.empty()) {
      std::fprintf(stderr, "error: pick exactly one of --contextuality, --free-choice\n");
      return 2;
    }
    ParsedGame g;
    int rc = 0;
    if (!load_game(file, g, &rc)) return rc;
    stg_status s = contextuality
                       ? stg_game_contextuality(g.handle, &text)
                       : stg_game_free_choice(g.handle, free_choice_point.c_str(),
                                              semantics.c_str(), &text);
    return emit(s, &text);
  }

  if (gen->parsed()) {
    stg_status s = stg_generate(nodes, max_actions, players, density.c_str(), seed, &text);
    return emit(s, &text);
  }

  if (stats->parsed()) {
    stg_status s =
        stg_stats(count, nodes, max_actions, players, density.c_str(), seed, workers, &text);
    return emit(s, &text);
  }

  return 2;
}
