#include "inclusion/types.hpp"

namespace inclusion {

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Eag: return "eag";
    case Algorithm::As: return "as";
    case Algorithm::Eg: return "eg";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_name(const std::string& name) {
  if (name == "eag") return Algorithm::Eag;
  if (name == "as") return Algorithm::As;
  if (name == "eg") return Algorithm::Eg;
  return std::nullopt;
}

std::string envelope_verdict_name(EnvelopeVerdict v) {
  switch (v) {
    case EnvelopeVerdict::Pass: return "pass";
    case EnvelopeVerdict::Fail: return "fail";
    case EnvelopeVerdict::NotAssessable: return "not assessable";
  }
  return "?";
}

std::string stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::MaxIters: return "max_iters";
    case StopReason::TargetReached: return "target_reached";
    case StopReason::NonFinite: return "non_finite";
  }
  return "?";
}

}  // namespace inclusion
