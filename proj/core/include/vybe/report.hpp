#pragma once

#include <string>
#include <vector>

namespace vybe {

/// One verified identity instance (or family): pass/fail plus, on failure, a
/// witness naming the offending inputs and both side values.
struct CheckComponent {
  std::string id;
  bool pass = true;
  std::string witness;  // empty when pass
};

/// Deterministic machine-checkable verdict. An overall pass requires every
/// component to pass and the coverage to be nonempty, so "nothing was checked"
/// can never read as success. Coverage lists exactly the instances checked;
/// skipped lists window gaps. Rendering order is stable, so equal inputs give
/// byte-identical reports.
class CheckReport {
 public:
  explicit CheckReport(std::string title) : title_(std::move(title)) {}

  void note(std::string s) { notes_.push_back(std::move(s)); }
  void add_pass(std::string id) { components_.push_back({std::move(id), true, {}}); }
  void add_fail(std::string id, std::string witness) {
    components_.push_back({std::move(id), false, std::move(witness)});
  }
  void add_component(CheckComponent c) { components_.push_back(std::move(c)); }
  void add_coverage(std::string s) { coverage_.push_back(std::move(s)); }
  void add_skip(std::string s) { skipped_.push_back(std::move(s)); }
  void absorb(const CheckReport& sub);

  const std::string& title() const { return title_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const std::vector<CheckComponent>& components() const { return components_; }
  const std::vector<std::string>& coverage() const { return coverage_; }
  const std::vector<std::string>& skipped() const { return skipped_; }

  bool all_components_pass() const;
  bool passed() const { return all_components_pass() && !coverage_.empty(); }
  std::size_t failure_count() const;
  const CheckComponent* first_failure() const;

  /// Plain-text rendering (one line per component; failures carry witnesses).
  std::string text(bool include_coverage = true) const;

 private:
  std::string title_;
  std::vector<std::string> notes_;
  std::vector<CheckComponent> components_;
  std::vector<std::string> coverage_;
  std::vector<std::string> skipped_;
};

}  // namespace vybe
