// SPDX-License-Identifier: Apache-2.0
#include "pickcf/rational.hpp"

#include <stdexcept>

#include "pickcf/errors.hpp"

namespace pickcf {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::DataTooShort: return "DataTooShort";
    case Errc::PivotZero: return "PivotZero";
    case Errc::NotAttainable: return "NotAttainable";
    case Errc::RankStructureBroken: return "RankStructureBroken";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotReducible: return "NotReducible";
    case Errc::OrderTooLow: return "OrderTooLow";
    case Errc::InvalidDerivative: return "InvalidDerivative";
    case Errc::CenterMismatch: return "CenterMismatch";
    case Errc::PoleAtCenter: return "PoleAtCenter";
    case Errc::HigherOrderPole: return "HigherOrderPole";
    case Errc::NearPole: return "NearPole";
    case Errc::PoleAtNode: return "PoleAtNode";
    case Errc::WrongParity: return "WrongParity";
    case Errc::Unsolvable: return "Unsolvable";
    case Errc::EvaluationFailed: return "EvaluationFailed";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) fail(Errc::BadInput, "empty rational literal");
  Rat r;
  try {
    r = Rat(s, 10);
  } catch (const std::invalid_argument&) {
    fail(Errc::BadInput, "malformed rational literal '" + s + "'");
  }
  if (sgn(r.get_den()) == 0) fail(Errc::BadInput, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

std::vector<Rat> rats_from_strings(const std::vector<std::string>& ss) {
  std::vector<Rat> out;
  out.reserve(ss.size());
  for (const auto& s : ss) out.push_back(rat_from_string(s));
  return out;
}

std::vector<std::string> rats_to_strings(const std::vector<Rat>& rs) {
  std::vector<std::string> out;
  out.reserve(rs.size());
  for (const auto& r : rs) out.push_back(rat_to_string(r));
  return out;
}

}  // namespace pickcf
