#include "z4dna/report.hpp"

#include <sstream>
#include <stdexcept>

namespace z4dna {

Finding& PropertyReport::add(std::string name, bool value, bool asserted,
                             std::optional<std::string> witness, std::string note) {
  findings.push_back({std::move(name), value, asserted, std::move(witness), std::move(note)});
  return findings.back();
}

const Finding* PropertyReport::find(const std::string& name) const {
  for (const auto& f : findings)
    if (f.name == name) return &f;
  return nullptr;
}

bool PropertyReport::value(const std::string& name) const {
  const Finding* f = find(name);
  if (!f) throw std::out_of_range("no finding named " + name);
  return f->value;
}

bool PropertyReport::holds() const { return failures().empty(); }

std::vector<const Finding*> PropertyReport::failures() const {
  std::vector<const Finding*> out;
  for (const auto& f : findings)
    if (f.asserted && !f.value) out.push_back(&f);
  return out;
}

nlohmann::json PropertyReport::to_json() const {
  nlohmann::json j;
  j["code"] = descriptor;
  j["findings"] = nlohmann::json::array();
  for (const auto& f : findings) {
    nlohmann::json e{{"name", f.name}, {"value", f.value}, {"asserted", f.asserted}};
    if (f.witness) e["witness"] = *f.witness;
    if (!f.note.empty()) e["note"] = f.note;
    j["findings"].push_back(std::move(e));
  }
  return j;
}

std::string PropertyReport::to_text() const {
  std::ostringstream os;
  os << descriptor << '\n';
  for (const auto& f : findings) {
    os << "  " << (f.asserted ? (f.value ? "[ok]   " : "[FAIL] ") : "[info] ") << f.name << " = "
       << (f.value ? "true" : "false");
    if (!f.note.empty()) os << "  (" << f.note << ")";
    os << '\n';
    if (f.witness) os << "         witness: " << *f.witness << '\n';
  }
  return os.str();
}

} // namespace z4dna
