#include "blf/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace blf {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

bool Report::pass() const {
  const bool betti_ok = std::all_of(betti.begin(), betti.end(),
                                    [](const BettiCell& c) { return !c.predicted || *c.predicted == c.computed; });
  return all_pass(checks) && betti_ok;
}

void Report::add(const std::vector<CheckResult>& more) { checks.insert(checks.end(), more.begin(), more.end()); }

void Report::add(const BettiReport& table) { betti.insert(betti.end(), table.cells.begin(), table.cells.end()); }

std::string to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["model"] = report.model;
  j["command"] = report.command;
  j["seed"] = report.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
  }
  j["betti"] = nlohmann::ordered_json::array();
  for (const auto& c : report.betti) {
    nlohmann::ordered_json row = {{"k", c.k}, {"degree", c.degree}, {"computed", c.computed}};
    row["predicted"] = c.predicted ? nlohmann::ordered_json(*c.predicted) : nlohmann::ordered_json(nullptr);
    row["kernel"] = c.kernel;
    row["image"] = c.image;
    j["betti"].push_back(std::move(row));
  }
  if (report.elapsed_seconds) j["elapsed_seconds"] = *report.elapsed_seconds;
  return j.dump(2) + "\n";
}

std::string to_csv(const Report& report) {
  std::ostringstream os;
  if (!report.betti.empty()) {
    os << "k,degree,computed,predicted,match\n";
    for (const auto& c : report.betti) {
      os << c.k << ',' << c.degree << ',' << c.computed << ',';
      if (c.predicted) {
        os << *c.predicted << ',' << (*c.predicted == c.computed ? "true" : "false");
      } else {
        os << ',';
      }
      os << '\n';
    }
    return os.str();
  }
  os << "name,pass,details\n";
  for (const auto& c : report.checks) {
    os << csv_field(c.name) << ',' << (c.pass ? "true" : "false") << ',' << csv_field(c.details) << '\n';
  }
  return os.str();
}

}  // namespace blf
