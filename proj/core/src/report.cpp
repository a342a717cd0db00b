#include "vybe/report.hpp"

#include <sstream>

namespace vybe {

void CheckReport::absorb(const CheckReport& sub) {
  for (const auto& n : sub.notes_) notes_.push_back(sub.title_ + ": " + n);
  for (const auto& c : sub.components_)
    components_.push_back({sub.title_ + "/" + c.id, c.pass, c.witness});
  for (const auto& s : sub.coverage_) coverage_.push_back(sub.title_ + "/" + s);
  for (const auto& s : sub.skipped_) skipped_.push_back(sub.title_ + "/" + s);
}

bool CheckReport::all_components_pass() const {
  for (const auto& c : components_)
    if (!c.pass) return false;
  return true;
}

std::size_t CheckReport::failure_count() const {
  std::size_t n = 0;
  for (const auto& c : components_)
    if (!c.pass) ++n;
  return n;
}

const CheckComponent* CheckReport::first_failure() const {
  for (const auto& c : components_)
    if (!c.pass) return &c;
  return nullptr;
}

std::string CheckReport::text(bool include_coverage) const {
  std::ostringstream os;
  os << "== " << title_ << " ==\n";
  for (const auto& n : notes_) os << "note: " << n << "\n";
  for (const auto& c : components_) {
    os << (c.pass ? "[pass] " : "[FAIL] ") << c.id << "\n";
    if (!c.pass && !c.witness.empty()) os << "       witness: " << c.witness << "\n";
  }
  if (include_coverage) {
    os << "coverage (" << coverage_.size() << "):";
    for (const auto& s : coverage_) os << " " << s;
    os << "\n";
    if (!skipped_.empty()) {
      os << "skipped out-of-window (" << skipped_.size() << "):";
      for (const auto& s : skipped_) os << " " << s;
      os << "\n";
    }
  }
  os << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace vybe
