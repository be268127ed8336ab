#pragma once

#include <concepts>
#include <string>
#include <vector>

#include "json.hpp"

namespace nodalsplit::app {

enum class CheckStatus { kPass, kFail, kUndetermined, kInfo };
const char* to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::kInfo;
  std::string observed;
  std::string expected;  // empty when nothing was claimed
};

// Output of one command. Rendering is a pure function of the contents, so
// equal inputs give byte-identical text.
struct Report {
  std::string command;
  std::string subject;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();

  Check& add(std::string name, CheckStatus status, std::string observed, std::string expected = {});
  // Pass when observed == expected, fail otherwise.
  Check& expect(std::string name, const std::string& observed, const std::string& expected);
  // Only a real bool: a string literal would otherwise convert to true.
  template <class B>
    requires std::same_as<B, bool>
  Check& expect(std::string name, B holds, std::string observed) {
    return expect_holds(std::move(name), holds, std::move(observed));
  }
  Check& expect_holds(std::string name, bool holds, std::string observed);
  Check& info(std::string name, std::string observed);

  // 1 if any check failed, else 2 if any was undetermined, else 0.
  int exit_code() const;
  std::string verdict() const;  // PASS / FAIL / UNDETERMINED
  std::string human() const;
  std::string json() const;
};

}  // namespace nodalsplit::app
