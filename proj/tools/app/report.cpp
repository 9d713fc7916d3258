#include "app/report.hpp"

#include <algorithm>

namespace rhoqes::app {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::reported_discrepancy: return "reported-discrepancy";
    case Status::fail: return "fail";
  }
  return "fail";
}

const Check* Report::find(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.check_id == id) return &c;
  return nullptr;
}

bool Report::has_fail() const {
  return std::any_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::fail; });
}

nlohmann::json Report::to_json() const {
  std::vector<const Check*> sorted;
  for (const auto& c : checks_) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Check* a, const Check* b) { return a->check_id < b->check_id; });
  nlohmann::json arr = nlohmann::json::array();
  for (const auto* c : sorted)
    arr.push_back({{"check_id", c->check_id}, {"status", to_string(c->status)}, {"details", c->details}});
  return {{"version", 1}, {"checks", arr}};
}

}  // namespace rhoqes::app
