#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace eigenbound::cli {

enum class Suite { fast, full };

struct CheckRecord {
  std::string name;
  bool passed = false;
  std::size_t points = 0;
  std::size_t violations = 0;
  double worst = 0.0;  // largest error or violation seen, check-specific
  std::string detail;
  double seconds = 0.0;
};

struct VerifyReport {
  Suite suite = Suite::fast;
  std::vector<CheckRecord> checks;
  [[nodiscard]] bool passed() const;
};

/// Runs every check of the suite. A check that throws is recorded as failed
/// with the exception text; the remaining checks still run.
VerifyReport run_verify(Suite suite, const std::function<void(const CheckRecord&)>& progress = {});

void render_verify(const VerifyReport& r, std::ostream& os);
std::string verify_json(const VerifyReport& r);

}  // namespace eigenbound::cli
