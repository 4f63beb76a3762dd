#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "report.hpp"

using namespace symbio::cli;

int main(int argc, char** argv) {
  CLI::App app{"symbio: boundary algebra, Temperley-Lieb, bracket, folding, rewriting, quantum and Life tools"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  opts.workers = std::max(1u, std::thread::hardware_concurrency());
  RunReport report;

  app.add_flag("--json", opts.json, "Print a JSON report");
  app.add_flag("--timing", opts.timing, "Include wall-clock time (breaks byte-identical output)");
  app.add_option("--seed", opts.seed, "Seed for randomized commands");
  app.add_option("--workers", opts.workers, "Worker threads for parallel commands")->check(CLI::Range(1u, 1024u));
  app.add_option("--max-steps", opts.max_steps, "Step budget for iterative commands");
  app.add_option("--out", opts.out, "Write output to this file instead of stdout");

  register_algebra(app, opts, report);
  register_fold(app, opts, report);
  register_quantum(app, opts, report);
  register_life(app, opts, report);

  const auto start = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const std::string text = render_output(report, opts);
  if (opts.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write '" << opts.out << "'\n";
      return 1;
    }
    file << text;
  }
  return report.ok ? 0 : 1;
}
