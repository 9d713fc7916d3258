#pragma once

#include "rhoqes/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace rhoqes::app {

enum class Status { pass, reported_discrepancy, fail };
std::string to_string(Status s);

struct Check {
  std::string check_id;
  Status status = Status::fail;
  nlohmann::json details = nlohmann::json::object();
};

class Report {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  void add(std::string id, Status s, nlohmann::json details = nlohmann::json::object()) {
    checks_.push_back({std::move(id), s, std::move(details)});
  }
  void append(const std::vector<Check>& cs) { checks_.insert(checks_.end(), cs.begin(), cs.end()); }

  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& id) const;
  bool has_fail() const;
  // {"version":1,"checks":[...]} sorted by check_id
  nlohmann::json to_json() const;

 private:
  std::vector<Check> checks_;
};

inline Status pass_if(bool ok) { return ok ? Status::pass : Status::fail; }

// Rationals are serialized as "p/q".
inline std::string pq(const Rational& r) { return to_pq(r); }

}  // namespace rhoqes::app
