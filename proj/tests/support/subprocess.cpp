#include "support/subprocess.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace berge::testing {
namespace {

std::string shell_quote(const std::string& s) {
  std::string quoted = "'";
  for (char ch : s) {
    if (ch == '\'') {
      quoted += "'\\''";
    } else {
      quoted += ch;
    }
  }
  quoted += "'";
  return quoted;
}

}  // namespace

std::filesystem::path cli_path() {
  const char* path = std::getenv("BERGE_CLI");
  if (!path || !*path) {
    throw std::runtime_error("BERGE_CLI must point at the berge binary");
  }
  return path;
}

CliResult run_cli(const std::vector<std::string>& args, const std::filesystem::path& workdir,
                  const std::vector<std::string>& env) {
  const std::filesystem::path out_file = workdir / ".cli-stdout";
  std::ostringstream command;
  command << "cd " << shell_quote(workdir.string()) << " && ";
  for (const auto& entry : env) command << entry << ' ';
  command << shell_quote(cli_path().string());
  for (const auto& arg : args) command << ' ' << shell_quote(arg);
  command << " > " << shell_quote(out_file.string()) << " 2> /dev/null";

  const int status = std::system(command.str().c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  std::filesystem::remove(out_file);
  return result;
}

TempDir::TempDir() {
  std::mt19937_64 rng(std::random_device{}());
  path_ = std::filesystem::temp_directory_path() /
          ("berge-test-" + std::to_string(rng()));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace berge::testing
