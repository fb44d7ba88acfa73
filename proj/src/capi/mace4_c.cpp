#include "mace4/mace4.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "core/driver.hpp"
#include "core/errors.hpp"
#include "core/interp.hpp"
#include "core/options.hpp"
#include "core/tools.hpp"

namespace {

thread_local std::string g_last_error;

mace4_status fail(mace4_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Maps the active exception to a status code.
mace4_status translate(std::string* sink = nullptr) {
  mace4_status st = MACE4_ERR_FATAL;
  std::string message;
  try {
    throw;
  } catch (const mace4::ParseError& e) {
    st = MACE4_ERR_PARSE;
    message = e.what();
  } catch (const mace4::UsageError& e) {
    st = MACE4_ERR_USAGE;
    message = e.what();
  } catch (const mace4::MemoryLimitExceeded& e) {
    st = MACE4_ERR_MEMORY;
    message = e.what();
  } catch (const std::bad_alloc&) {
    st = MACE4_ERR_MEMORY;
    message = "out of memory";
  } catch (const std::exception& e) {
    message = e.what();
  } catch (...) {
    message = "unknown error";
  }
  if (sink) *sink = message;
  return fail(st, message);
}

}  // namespace

struct mace4_session {
  mace4::CommandLine command_line;
  std::string text;
  bool loaded = false;
  long long models = 0;
  std::string error;
};

struct mace4_interps {
  std::vector<mace4::Interpretation> items;
};

extern "C" {

const char* mace4_last_error(void) { return g_last_error.c_str(); }

const char* mace4_version(void) { return "1.0.0"; }

mace4_session* mace4_session_create(void) {
  try {
    return new mace4_session();
  } catch (...) {
    translate();
    return nullptr;
  }
}

void mace4_session_destroy(mace4_session* session) { delete session; }

mace4_status mace4_session_set_args(mace4_session* session, int argc, const char* const* argv) {
  if (!session || argc < 0 || (argc > 0 && !argv)) {
    return fail(MACE4_ERR_INVALID_ARGUMENT, "null session or argument vector");
  }
  try {
    std::vector<std::string> args;
    for (int i = 0; i < argc; ++i) {
      if (!argv[i]) return fail(MACE4_ERR_INVALID_ARGUMENT, "null argument");
      args.emplace_back(argv[i]);
    }
    session->command_line = mace4::parse_command_line(args);
    return MACE4_OK;
  } catch (...) {
    return translate(&session->error);
  }
}

mace4_status mace4_session_load(mace4_session* session, const char* text, size_t len) {
  if (!session || (!text && len > 0)) return fail(MACE4_ERR_INVALID_ARGUMENT, "null session or text");
  try {
    session->text.assign(text ? text : "", len);
    session->loaded = true;
    return MACE4_OK;
  } catch (...) {
    return translate(&session->error);
  }
}

mace4_status mace4_session_run(mace4_session* session, mace4_write_fn write, void* user,
                               int* exit_code) {
  if (!session || !exit_code) return fail(MACE4_ERR_INVALID_ARGUMENT, "null session or exit_code");
  if (!session->loaded) {
    session->error = "no input loaded";
    return fail(MACE4_ERR_STATE, session->error);
  }
  try {
    auto out = [&](std::string_view s) {
      if (write && !s.empty()) write(user, s.data(), s.size());
    };
    auto summary = mace4::run_text(session->text, session->command_line, out);
    session->models = summary.models;
    session->error = summary.error;
    if (!summary.error.empty()) g_last_error = summary.error;
    *exit_code = summary.exit_code;
    return MACE4_OK;
  } catch (...) {
    *exit_code = 1;
    return translate(&session->error);
  }
}

long long mace4_session_models(const mace4_session* session) {
  return session ? session->models : 0;
}

const char* mace4_session_last_error(const mace4_session* session) {
  return session ? session->error.c_str() : "";
}

mace4_interps* mace4_interps_parse(const char* text, size_t len) {
  if (!text && len > 0) {
    fail(MACE4_ERR_INVALID_ARGUMENT, "null text");
    return nullptr;
  }
  try {
    auto* h = new mace4_interps();
    try {
      h->items = mace4::read_interpretation_stream(std::string_view(text ? text : "", len));
    } catch (...) {
      delete h;
      throw;
    }
    return h;
  } catch (...) {
    translate();
    return nullptr;
  }
}

void mace4_interps_destroy(mace4_interps* interps) { delete interps; }

size_t mace4_interps_count(const mace4_interps* interps) {
  return interps ? interps->items.size() : 0;
}

int mace4_interps_domain_size(const mace4_interps* interps, size_t index) {
  if (!interps || index >= interps->items.size()) return -1;
  return interps->items[index].size;
}

mace4_status mace4_interps_isomorphic(const mace4_interps* interps, size_t a, size_t b,
                                      int* result) {
  if (!interps || !result || a >= interps->items.size() || b >= interps->items.size()) {
    return fail(MACE4_ERR_INVALID_ARGUMENT, "bad handle or index");
  }
  try {
    const auto& x = interps->items[a];
    const auto& y = interps->items[b];
    if (x.size != y.size || !mace4::same_signature(x, y)) {
      return fail(MACE4_ERR_FATAL, "interpretations have different signatures");
    }
    *result = mace4::isomorphic(x, y) ? 1 : 0;
    return MACE4_OK;
  } catch (...) {
    return translate();
  }
}

mace4_status mace4_interps_print(const mace4_interps* interps, size_t index, int portable,
                                 mace4_write_fn write, void* user) {
  if (!interps || !write || index >= interps->items.size()) {
    return fail(MACE4_ERR_INVALID_ARGUMENT, "bad handle, index or callback");
  }
  try {
    const auto& it = interps->items[index];
    std::string text = portable ? mace4::print_portable(it) + "\n" : mace4::print_standard(it);
    write(user, text.data(), text.size());
    return MACE4_OK;
  } catch (...) {
    return translate();
  }
}

int mace4_is_tool(const char* name) { return name && mace4::is_tool_name(name) ? 1 : 0; }

mace4_status mace4_tool_run(const char* name, int argc, const char* const* argv, const char* input,
                            size_t input_len, mace4_write_fn write, void* user, int* exit_code) {
  if (!name || !exit_code || argc < 0 || (argc > 0 && !argv) || (!input && input_len > 0)) {
    return fail(MACE4_ERR_INVALID_ARGUMENT, "invalid argument");
  }
  try {
    std::vector<std::string> args;
    for (int i = 0; i < argc; ++i) args.emplace_back(argv[i] ? argv[i] : "");
    std::string output;
    std::string error;
    *exit_code = mace4::run_tool(name, args, std::string_view(input ? input : "", input_len),
                                 output, error);
    if (write && !output.empty()) write(user, output.data(), output.size());
    if (*exit_code != 0) return fail(MACE4_ERR_USAGE, error);
    return MACE4_OK;
  } catch (...) {
    *exit_code = 1;
    return translate();
  }
}

}  // extern "C"
