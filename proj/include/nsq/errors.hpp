#pragma once

#include <stdexcept>
#include <string>

namespace nsq {

// Failure categories surfaced by the library.  The CLI maps these to exit
// codes, so additions here need a corresponding case in tools/nsq.cpp.
enum class errc {
  empty_input,
  non_positive_generator,
  overflow,
  not_an_element,
  infinite_complement,
  not_coprime,
  input_too_large,
  budget_exceeded,
  parameter_too_small,
  verification_failed,
  not_med,
  search_exhausted,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace nsq
