#pragma once

#include <stdexcept>
#include <string>

namespace wdal {

/// Error categories; values double as CLI exit codes.
enum class ErrCode : int {
  config = 2,
  data = 3,
  runtime = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrCode code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  ErrCode code() const { return code_; }

 private:
  ErrCode code_;
};

[[noreturn]] inline void throw_config(const std::string& msg) { throw Error(ErrCode::config, msg); }
[[noreturn]] inline void throw_data(const std::string& msg) { throw Error(ErrCode::data, msg); }
[[noreturn]] inline void throw_runtime(const std::string& msg) { throw Error(ErrCode::runtime, msg); }

}  // namespace wdal
