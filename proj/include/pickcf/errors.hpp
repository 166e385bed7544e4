// SPDX-License-Identifier: Apache-2.0
#ifndef PICKCF_ERRORS_HPP
#define PICKCF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pickcf {

enum class Errc {
  DataTooShort,
  PivotZero,
  NotAttainable,
  RankStructureBroken,
  NotInvertible,
  NotReducible,
  OrderTooLow,
  InvalidDerivative,
  CenterMismatch,
  PoleAtCenter,
  HigherOrderPole,
  NearPole,
  PoleAtNode,
  WrongParity,
  Unsolvable,
  EvaluationFailed,
  InvalidParameter,
  BadInput,
};

const char* errc_name(Errc c) noexcept;

/// Domain error carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace pickcf

#endif
