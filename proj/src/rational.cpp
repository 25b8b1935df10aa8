#include "grm/rational.hpp"

#include <charconv>

#include "grm/error.hpp"

namespace grm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::DepthMismatch: return "DepthMismatch";
    case ErrorCode::NonPositiveMember: return "NonPositiveMember";
    case ErrorCode::PosetMismatch: return "PosetMismatch";
    case ErrorCode::NonIntegerValues: return "NonIntegerValues";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::IterationBudgetExceeded: return "IterationBudgetExceeded";
    case ErrorCode::InvalidFiltration: return "InvalidFiltration";
    case ErrorCode::QuiverMismatch: return "QuiverMismatch";
    case ErrorCode::InvalidQuiver: return "InvalidQuiver";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ZeroRepresentation: return "ZeroRepresentation";
    case ErrorCode::HomSpaceTooLarge: return "HomSpaceTooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BoundTooTight: return "BoundTooTight";
    case ErrorCode::TruncatedCategory: return "TruncatedCategory";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t num = parse_int(text.substr(0, slash), text);
  std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace grm
