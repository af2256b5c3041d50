#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace z4dna {

struct Finding {
  std::string name;
  bool value = false;
  /// Asserted findings must hold; the rest are informational.
  bool asserted = false;
  std::optional<std::string> witness;
  std::string note;
};

/// Named findings about one code or construction.
struct PropertyReport {
  std::string descriptor;
  std::vector<Finding> findings;

  Finding& add(std::string name, bool value, bool asserted = false,
               std::optional<std::string> witness = std::nullopt, std::string note = {});
  const Finding* find(const std::string& name) const;
  bool value(const std::string& name) const; // throws std::out_of_range if absent
  bool holds() const;                        // every asserted finding true
  std::vector<const Finding*> failures() const;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

} // namespace z4dna
