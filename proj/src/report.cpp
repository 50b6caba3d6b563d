#include "dlcat/report.hpp"

namespace dlc {

std::string_view to_string(LawStatus status) noexcept {
  switch (status) {
    case LawStatus::pass:
      return "pass";
    case LawStatus::fail:
      return "fail";
    case LawStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

}  // namespace dlc
