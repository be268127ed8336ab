#include "report.hpp"

#include <sstream>

namespace nodalsplit::app {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kUndetermined: return "undetermined";
    case CheckStatus::kInfo: return "info";
  }
  return "?";
}

Check& Report::add(std::string name, CheckStatus status, std::string observed, std::string expected) {
  checks.push_back({std::move(name), status, std::move(observed), std::move(expected)});
  return checks.back();
}

Check& Report::expect(std::string name, const std::string& observed, const std::string& expected) {
  return add(std::move(name), observed == expected ? CheckStatus::kPass : CheckStatus::kFail, observed, expected);
}

Check& Report::expect_holds(std::string name, bool holds, std::string observed) {
  return add(std::move(name), holds ? CheckStatus::kPass : CheckStatus::kFail, std::move(observed));
}

Check& Report::info(std::string name, std::string observed) {
  return add(std::move(name), CheckStatus::kInfo, std::move(observed));
}

int Report::exit_code() const {
  bool undetermined = false;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::kFail) return 1;
    if (c.status == CheckStatus::kUndetermined) undetermined = true;
  }
  return undetermined ? 2 : 0;
}

std::string Report::verdict() const {
  switch (exit_code()) {
    case 0: return "PASS";
    case 1: return "FAIL";
    default: return "UNDETERMINED";
  }
}

std::string Report::human() const {
  std::ostringstream out;
  out << command;
  if (!subject.empty()) out << " " << subject;
  out << ": " << verdict() << "\n";
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    std::string tag = to_string(c.status);
    out << "  [" << tag << "]" << std::string(13 - tag.size(), ' ') << c.name << std::string(width - c.name.size(), ' ')
        << "  " << c.observed;
    if (c.status == CheckStatus::kFail && !c.expected.empty()) out << "  (expected " << c.expected << ")";
    out << "\n";
  }
  if (!notes.empty()) {
    out << "notes:\n";
    for (const auto& n : notes) out << "  - " << n << "\n";
  }
  return out.str();
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["subject"] = subject;
  j["verdict"] = verdict();
  j["exit_code"] = exit_code();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    cj["observed"] = c.observed;
    if (!c.expected.empty()) cj["expected"] = c.expected;
    j["checks"].push_back(cj);
  }
  j["notes"] = notes;
  j["data"] = data;
  return j.dump(2) + "\n";
}

}  // namespace nodalsplit::app
