#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mixedbody/exactgeom/rat.hpp"

namespace mixedbody {

// One verified statement: both sides of an identity or inequality, the
// verdict, and on failure a witness describing the offending data.
struct Check {
  std::string name;
  exactgeom::Rat lhs;
  exactgeom::Rat rhs;
  bool pass = false;
  std::string note;
  std::optional<nlohmann::json> witness;
};

// Ordered collection of checks. A witness is kept exactly on failing
// checks: passing ones drop it, failing ones without one get a default
// carrying both sides.
class Report {
 public:
  explicit Report(std::string subject = {}) : subject_(std::move(subject)) {}

  void add(Check check);
  // Appends other's checks, prefixing their names with `prefix`.
  void merge(const Report& other, const std::string& prefix = {});
  void note(std::string text) { notes_.push_back(std::move(text)); }

  const std::string& subject() const { return subject_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }

  std::size_t cases() const { return checks_.size(); }
  std::size_t passes() const { return checks_.size() - failures(); }
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  const Check* first_failure() const;

 private:
  std::string subject_;
  std::vector<Check> checks_;
  std::vector<std::string> notes_;
};

}  // namespace mixedbody
