#include "heapgames/report.hpp"

namespace heapgames {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "skipped";
  }
  return "?";
}

}  // namespace heapgames
