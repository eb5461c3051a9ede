#pragma once

// Runs the CLI golden cases listed in golden/cases.json through the real
// binary and compares stdout byte for byte and the exit code exactly.
// With MEETLESS_UPDATE_GOLDEN=1 the expected files are rewritten instead.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace meetless::golden {

struct Outcome {
  std::size_t cases = 0;
  std::vector<std::string> failures;
};

inline std::string quote(std::string const& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

inline std::string command_line(std::string const& bin,
                                nlohmann::json const& args) {
  std::string cmd = quote(bin);
  for (auto const& a : args) cmd += " " + quote(a.get<std::string>());
  return cmd;
}

inline std::string read_file(std::filesystem::path const& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs `cmd` with the shell; returns stdout and sets the exit status.
inline std::string capture(std::string const& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int const raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

inline Outcome run_all(std::string const& bin, std::filesystem::path const& dir) {
  Outcome o;
  bool const update = std::getenv("MEETLESS_UPDATE_GOLDEN") != nullptr;
  auto const cases = nlohmann::json::parse(read_file(dir / "cases.json"));
  for (auto const& c : cases) {
    ++o.cases;
    std::string const name = c.at("name");
    std::string env;
    if (c.contains("env")) {
      for (auto const& [k, v] : c["env"].items()) {
        env += k + "=" + quote(v.get<std::string>()) + " ";
      }
    }
    std::string cmd = "cd " + quote(dir.string()) + " && ";
    if (c.contains("pipe_from")) {
      cmd += command_line(bin, c["pipe_from"]) + " | ";
    }
    cmd += env + command_line(bin, c.at("args")) + " 2>/dev/null";
    int status = 0;
    auto const out = capture(cmd, status);
    int const want = c.at("exit");
    auto const expected_path = dir / "expected" / (name + ".out");
    if (update) {
      std::ofstream(expected_path, std::ios::binary) << out;
    }
    if (status != want) {
      o.failures.push_back(name + ": exit " + std::to_string(status) +
                           ", expected " + std::to_string(want));
      continue;
    }
    bool const is_json = c.value("format", "json") == "json";
    if (is_json && !out.empty() && !nlohmann::json::accept(out)) {
      o.failures.push_back(name + ": stdout is not valid JSON");
      continue;
    }
    if (!std::filesystem::exists(expected_path)) {
      o.failures.push_back(name + ": no expected output file");
      continue;
    }
    if (read_file(expected_path) != out) {
      o.failures.push_back(name + ": stdout differs from " +
                           expected_path.filename().string());
    }
  }
  return o;
}

}  // namespace meetless::golden
