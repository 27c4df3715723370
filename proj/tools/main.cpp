#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "commands.hpp"
#include "kummerlab/errors.hpp"
#include "kummerlab/parallel.hpp"

namespace {

using nlohmann::json;

void emit_error(const std::string& kind, const std::string& message, const json& details = {}) {
  json err = {{"error", kind}, {"message", message}};
  if (!details.is_null()) err["details"] = details;
  std::cerr << err.dump() << '\n';
}

/// Appends options from a flat JSON object to argv.
/// Keys already given on the command line win.
std::vector<std::string> apply_config(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
    }
  }
  if (path.empty()) return out;
  std::ifstream in(path);
  if (!in) throw kummerlab::ValidationError("cannot open config file " + path);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::exception& e) {
    throw kummerlab::ValidationError("config file " + path + " is not valid JSON: " + e.what());
  }
  if (!cfg.is_object()) throw kummerlab::ValidationError("config file must hold a JSON object");
  std::set<std::string> given;
  for (const std::string& a : out) {
    if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') - 2));
  }
  std::vector<std::string> extra;
  for (const auto& [key, value] : cfg.items()) {
    if (given.count(key)) continue;
    const auto add = [&](const json& v) {
      extra.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    };
    if (value.is_boolean()) {
      if (value.get<bool>()) extra.push_back("--" + key);
      continue;
    }
    extra.push_back("--" + key);
    if (value.is_array()) {
      for (const json& v : value) add(v);
    } else {
      add(value);
    }
  }
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace kummerlab;
  CLI::App app{"Exact computations around smooth parts of binomial coefficients", "kummerlab"};
  cli::Globals globals;
  globals.workers = default_workers();
  app.add_option("--workers", globals.workers, "Worker threads (default: KUMMERLAB_WORKERS or 1)")
      ->check(CLI::Range(1u, 1024u));
  app.require_subcommand(1);
  cli::register_commands(app, globals);

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = apply_config(args);
    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    app.parse(rev);
    return globals.action ? globals.action() : 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("ValidationError", e.what());
    return cli::kExitValidation;
  } catch (const cli::Failure& e) {
    emit_error(e.kind, e.what(), e.details);
    return e.code;
  } catch (const BudgetExceeded& e) {
    emit_error(to_string(e.kind()), e.what());
    return cli::kExitBudget;
  } catch (const Error& e) {
    emit_error(to_string(e.kind()), e.what());
    return cli::kExitValidation;
  } catch (const std::exception& e) {
    emit_error("InternalError", e.what());
    return cli::kExitValidation;
  }
}
