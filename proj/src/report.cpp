#include "lck/report.hpp"

#include <sstream>

#include "json.hpp"

namespace lck {

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "fail";
}

}  // namespace

std::string render_json(const SuiteReport& rep) {
  nlohmann::ordered_json doc;
  doc["example"] = rep.example;
  doc["suite"] = rep.suite;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks)
    doc["checks"].push_back(nlohmann::ordered_json{
        {"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}, {"anchor", c.anchor}});
  doc["status"] = rep.pass() ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

std::string render_text(const SuiteReport& rep) {
  std::ostringstream os;
  os << "example: " << rep.example << "\n";
  os << "suite:   " << rep.suite << "\n";
  std::size_t width = 4;
  for (const auto& c : rep.checks) width = std::max(width, c.name.size());
  for (const auto& c : rep.checks) {
    os << "  [" << status_name(c.status) << "] " << c.name;
    for (std::size_t t = c.name.size(); t < width + 2; ++t) os << ' ';
    os << "(" << c.anchor << ")";
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  os << "status:  " << (rep.pass() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace lck
