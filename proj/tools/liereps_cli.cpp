#include "liereps/liereps.h"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

int fail(lr_status status) {
  std::cerr << "error: " << lr_last_error() << "\n";
  return static_cast<int>(status);
}

int finish(lr_status status, lr_report* const& report, bool json) {
  if (status != LR_OK) return fail(status);
  std::cout << (json ? lr_report_json(report) : lr_report_text(report));
  int ok = lr_report_ok(report);
  lr_report_free(report);
  if (!ok) {
    std::cerr << "error: self-check failed\n";
    return LR_ERR_INTERNAL;
  }
  return 0;
}

struct InputHandle {
  lr_input* ptr = nullptr;
  ~InputHandle() { lr_input_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irreducible representations of finite groups of Lie type in defining characteristic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lr_version()));

  std::string file, q, isogeny, type;
  std::vector<std::string> sample_q;
  bool json = false;
  std::size_t rank = 0, limit = 1000;
  int epsilon = 1;

  auto* analyze = app.add_subcommand("analyze", "Parameterize the group given by a JSON file");
  analyze->add_option("file", file, "input file")->required();
  analyze->add_option("--q", q, "prime power q");
  analyze->add_option("--sample-q", sample_q, "prime powers to evaluate when --q is absent");
  analyze->add_flag("--json", json, "machine-readable output");

  auto* catalog = app.add_subcommand("catalog", "Closed forms for a simple group");
  catalog->add_option("--type", type, "A, B, C, D or E")->required();
  catalog->add_option("--rank", rank, "rank l")->required();
  catalog->add_option("--isogeny", isogeny, "sc, adjoint, SO, HSpin or e=N")->required();
  catalog->add_option("--epsilon", epsilon, "1, -1 or 3");
  catalog->add_option("--q", q, "prime power q")->required();
  catalog->add_flag("--json", json, "machine-readable output");

  auto* enumerate = app.add_subcommand("enumerate", "List parameters (lambda, b, c)");
  enumerate->add_option("file", file, "input file")->required();
  enumerate->add_option("--q", q, "prime power q")->required();
  enumerate->add_option("--limit", limit, "maximum number of triples");
  enumerate->add_flag("--json", json, "machine-readable output");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return LR_ERR_USAGE;
  }

  lr_report* report = nullptr;
  if (*catalog) {
    if (type.size() != 1) {
      std::cerr << "error: --type must be a single letter\n";
      return LR_ERR_USAGE;
    }
    return finish(lr_catalog(type[0], rank, isogeny.c_str(), epsilon, q.c_str(), &report), report,
                  json);
  }
  if (*selftest) return finish(lr_selftest(0, &report), report, false);

  InputHandle input;
  if (lr_status s = lr_input_load(file.c_str(), &input.ptr); s != LR_OK) return fail(s);
  if (*analyze) {
    std::vector<const char*> samples;
    for (const auto& s : sample_q) samples.push_back(s.c_str());
    return finish(lr_analyze(input.ptr, q.empty() ? nullptr : q.c_str(), samples.data(),
                             samples.size(), &report),
                  report, json);
  }
  return finish(lr_enumerate(input.ptr, q.c_str(), limit, &report), report, json);
}
