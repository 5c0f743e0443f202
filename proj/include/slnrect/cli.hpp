#pragma once

#include <string>
#include <string_view>

#include "slnrect/config.hpp"
#include "slnrect/errors.hpp"

namespace slnrect {

/// Exit codes of the slnrectify tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_internal = 1,
  exit_parse = 2,
  exit_not_embedding = 3,
  exit_search = 4,
  exit_unsupported = 5,
  exit_replay = 6,
};

int exit_code_for(ErrorKind kind);

/// Outcome of one command: the exit code, the primary output (a file body
/// or a report) and diagnostics.
struct CommandResult {
  int code = exit_ok;
  std::string out;
  std::string err;
  /// Secondary artifact (the tame word of `lift3 --normalize`), else empty.
  std::string aux;
};

CommandResult cmd_verify(std::string_view curve_text, const RunConfig& cfg = {});
CommandResult cmd_rectify(std::string_view curve_text, const RunConfig& cfg = {});
CommandResult cmd_equiv(std::string_view f_text, std::string_view g_text, const RunConfig& cfg = {});
CommandResult cmd_apply(std::string_view word_text, std::string_view curve_text);
CommandResult cmd_verify_cert(std::string_view cert_text, const RunConfig& cfg = {});
CommandResult cmd_lift3(std::string_view triple_text, const RunConfig& cfg = {}, bool normalize = false);

}  // namespace slnrect
