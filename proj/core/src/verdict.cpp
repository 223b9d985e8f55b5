#include "hopfkit/verdict.hpp"

#include <stdexcept>

#include "json.hpp"

namespace hopfkit {

Verdict& VerdictReport::add(std::string identity) {
  items_.emplace_back();
  items_.back().identity = std::move(identity);
  return items_.back();
}

void VerdictReport::fail(std::string identity, std::string reason) {
  Verdict& v = add(std::move(identity));
  v.checked = 1;
  v.failures = 1;
  v.witness = std::move(reason);
}

void VerdictReport::merge(const VerdictReport& other, const std::string& prefix) {
  for (const auto& v : other.items_) {
    items_.push_back(v);
    if (!prefix.empty()) items_.back().identity = prefix + items_.back().identity;
  }
  for (const auto& [k, v] : other.notes_) notes_[prefix + k] = v;
}

bool VerdictReport::passed() const {
  for (const auto& v : items_)
    if (!v.passed()) return false;
  return true;
}

const Verdict* VerdictReport::find(std::string_view identity) const {
  for (const auto& v : items_)
    if (v.identity == identity) return &v;
  return nullptr;
}

bool VerdictReport::passed(std::string_view identity) const {
  const Verdict* v = find(identity);
  if (!v) throw std::out_of_range("no verdict named " + std::string(identity));
  return v->passed();
}

std::string VerdictReport::to_json() const {
  nlohmann::ordered_json j;
  j["subject"] = subject_;
  j["passed"] = passed();
  auto& arr = j["identities"] = nlohmann::ordered_json::array();
  for (const auto& v : items_) {
    nlohmann::ordered_json e;
    e["identity"] = v.identity;
    e["passed"] = v.passed();
    e["checked"] = v.checked;
    e["failures"] = v.failures;
    if (!v.passed()) e["witness"] = v.witness;
    arr.push_back(std::move(e));
  }
  if (!notes_.empty()) {
    nlohmann::ordered_json n = nlohmann::ordered_json::object();
    for (const auto& [k, v] : notes_) n[k] = v;
    j["notes"] = std::move(n);
  }
  return j.dump(2);
}

std::string VerdictReport::summary() const {
  std::string s;
  for (const auto& v : items_) {
    s += v.passed() ? "PASS " : "FAIL ";
    s += v.identity + " (" + std::to_string(v.checked) + " cases";
    if (!v.passed()) s += ", " + std::to_string(v.failures) + " failing, first: " + v.witness;
    s += ")\n";
  }
  for (const auto& [k, v] : notes_) s += "note " + k + " = " + v + "\n";
  return s;
}

}  // namespace hopfkit
