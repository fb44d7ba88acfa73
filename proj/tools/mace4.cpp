// Command-line front end. Uses only the C API of the shared library.

#include <cstdio>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "mace4/mace4.h"

namespace {

void write_stdout(void*, const char* data, size_t len) {
  std::fwrite(data, 1, len, stdout);
  std::fflush(stdout);
}

std::string read_stdin() {
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

std::string base_name(const char* path) {
  std::string s = path ? path : "";
  auto slash = s.find_last_of('/');
  return slash == std::string::npos ? s : s.substr(slash + 1);
}

int run_tool(const std::string& name, int argc, const char* const* argv) {
  const std::string input = (name == "help") ? std::string() : read_stdin();
  int code = 1;
  mace4_status st =
      mace4_tool_run(name.c_str(), argc, argv, input.data(), input.size(), write_stdout, nullptr, &code);
  if (st != MACE4_OK) std::fprintf(stderr, "%s: %s\n", name.c_str(), mace4_last_error());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::string self = base_name(argv[0]);
  if (self != "mace4" && mace4_is_tool(self.c_str())) return run_tool(self, argc - 1, argv + 1);
  if (argc > 1 && mace4_is_tool(argv[1])) return run_tool(argv[1], argc - 2, argv + 2);

  mace4_session* session = mace4_session_create();
  if (!session) {
    std::fprintf(stderr, "mace4: %s\n", mace4_last_error());
    return 1;
  }
  int code = 1;
  if (mace4_session_set_args(session, argc - 1, argv + 1) != MACE4_OK) {
    std::fprintf(stderr, "mace4: %s\n(run \"mace4 help\" for the option list)\n",
                 mace4_session_last_error(session));
    mace4_session_destroy(session);
    return 1;
  }
  const std::string input = read_stdin();
  if (mace4_session_load(session, input.data(), input.size()) != MACE4_OK ||
      mace4_session_run(session, write_stdout, nullptr, &code) != MACE4_OK) {
    std::fprintf(stderr, "mace4: %s\n", mace4_session_last_error(session));
    mace4_session_destroy(session);
    return 1;
  }
  if (code == 1) std::fprintf(stderr, "mace4: %s\n", mace4_session_last_error(session));
  mace4_session_destroy(session);
  return code;
}
