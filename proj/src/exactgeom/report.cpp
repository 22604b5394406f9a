#include "mixedbody/report.hpp"

#include <algorithm>

namespace mixedbody {

void Report::add(Check check) {
  if (check.pass) {
    check.witness.reset();
  } else if (!check.witness) {
    check.witness = nlohmann::json{{"lhs", check.lhs.str()}, {"rhs", check.rhs.str()}};
  }
  checks_.push_back(std::move(check));
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    Check copy = c;
    copy.name = prefix + copy.name;
    checks_.push_back(std::move(copy));
  }
  for (const auto& n : other.notes_) notes_.push_back(prefix + n);
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
}

const Check* Report::first_failure() const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; });
  return it == checks_.end() ? nullptr : &*it;
}

}  // namespace mixedbody
