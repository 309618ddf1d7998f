// Acceptance run: executes scenarios/full.json twice and prints one
// PASS/FAIL line per criterion. Exit code 0 only if every line passes.
#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "iwalab/harness.hpp"

using namespace iwalab;
using nlohmann::json;

namespace {

struct Line {
  int id;
  std::string title;
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& why) {
    if (!cond) {
      ok = false;
      notes.push_back(why);
    }
  }
};

const json* find_result(const json& report, const std::string& name) {
  for (const auto& c : report["checks"])
    if (c["name"] == name) return &c;
  return nullptr;
}

// Every listed result present and passing.
void require_pass(Line& line, const json& report, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    const json* r = find_result(report, n);
    if (!r) {
      line.require(false, n + " missing from the report");
      continue;
    }
    if ((*r)["status"] != "pass") {
      std::string why = n + " is " + (*r)["status"].get<std::string>();
      const json& d = (*r)["data"];
      if (d.contains("failures") && !d["failures"].empty()) why += ": " + d["failures"][0].get<std::string>();
      line.require(false, why);
    }
  }
}

// Seconds per check label from the timing stream ("label: 1.23 s").
std::map<std::string, double> parse_timings(const std::string& text) {
  std::map<std::string, double> t;
  std::istringstream in(text);
  std::string row;
  while (std::getline(in, row)) {
    const auto colon = row.rfind(": ");
    if (colon == std::string::npos) continue;
    t[row.substr(0, colon)] = std::stod(row.substr(colon + 2));
  }
  return t;
}

void budget(Line& line, const std::map<std::string, double>& t, const std::vector<std::string>& labels,
            double seconds, bool each = true) {
  double total = 0;
  for (const auto& l : labels) {
    const auto it = t.find(l);
    if (it == t.end()) continue;
    total += it->second;
    if (each && it->second >= seconds)
      line.require(false, l + " took " + std::to_string(it->second) + " s, budget " + std::to_string(seconds) + " s");
  }
  if (!each && total >= seconds)
    line.require(false, "total " + std::to_string(total) + " s, budget " + std::to_string(seconds) + " s");
}

std::vector<std::string> per_case(const std::string& check) { return {check + "/gl2", check + "/quat"}; }

}  // namespace

int main() {
  const std::filesystem::path file = std::filesystem::path(IWALAB_SOURCE_DIR) / "scenarios" / "full.json";
  Scenario s;
  try {
    s = load_scenario(file);
  } catch (const std::exception& e) {
    std::cerr << "cannot load " << file << ": " << e.what() << "\n";
    return 2;
  }
  std::ostringstream timing_stream;
  const RunOutcome first = run_scenario(s, &timing_stream);
  const auto t = parse_timings(timing_stream.str());
  std::cerr << timing_stream.str();
  const json& rep = first.report;

  std::vector<Line> lines;

  {
    Line l{1, "maxideals: m_G^j equals the nu >= j span, j <= 8, both cases"};
    require_pass(l, rep, per_case("maxideals"));
    for (const auto& n : per_case("maxideals"))
      if (const json* r = find_result(rep, n)) l.require((*r)["data"]["cutoff"] == 8, n + " ran below weight 8");
    budget(l, t, per_case("maxideals"), 300);
    lines.push_back(l);
  }
  {
    Line l{2, "quaternion commutator formula for all 25 gamma"};
    require_pass(l, rep, {"commutator_formula"});
    if (const json* r = find_result(rep, "commutator_formula"))
      l.require((*r)["data"]["checked"] == 25, "checked " + (*r)["data"]["checked"].dump() + " values of gamma");
    budget(l, t, {"commutator_formula"}, 1);
    lines.push_back(l);
  }
  {
    Line l{3, "centrality of p-th powers through weights 8 and 12"};
    require_pass(l, rep, per_case("centrality"));
    budget(l, t, per_case("centrality"), 300);
    lines.push_back(l);
  }
  {
    Line l{4, "Hilbert series and the regular sequence c_0"};
    require_pass(l, rep, per_case("hilbert"));
    for (const auto& n : per_case("hilbert"))
      if (const json* r = find_result(rep, n)) {
        l.require((*r)["data"]["gr"] == json({1, 2, 4, 6, 9, 12, 16}), n + ": gr dims " + (*r)["data"]["gr"].dump());
        l.require((*r)["data"]["gr_mod_c"] == json({1, 2, 3, 4, 5, 6, 7}),
                  n + ": gr/c dims " + (*r)["data"]["gr_mod_c"].dump());
      }
    budget(l, t, per_case("hilbert"), 60);
    lines.push_back(l);
  }
  {
    Line l{5, "inclusion sandwich for k <= 3, 200 + 50 samples per k"};
    require_pass(l, rep, per_case("sandwich"));
    budget(l, t, per_case("sandwich"), 600);
    lines.push_back(l);
  }
  {
    Line l{6, "tau contract on every touched monomial"};
    require_pass(l, rep, per_case("tau_contract"));
    lines.push_back(l);
  }
  {
    Line l{7, "exponent transfer implications (i)-(v), >= 20 modules, three ideals"};
    require_pass(l, rep, per_case("exponent_transfer"));
    std::size_t modules = 0;
    for (const auto& n : per_case("exponent_transfer"))
      if (const json* r = find_result(rep, n)) modules += (*r)["data"]["modules"].get<std::size_t>();
    l.require(modules >= 20, "only " + std::to_string(modules) + " modules");
    budget(l, t, per_case("exponent_transfer"), 1800, false);
    lines.push_back(l);
  }
  {
    Line l{8, "restriction determinism on the module corpus"};
    require_pass(l, rep, per_case("restriction_determinism"));
    require_pass(l, rep, per_case("module_validity"));
    lines.push_back(l);
  }
  {
    Line l{9, "arithmetic unit oracle"};
    require_pass(l, rep, {"arithmetic_oracle"});
    if (const json* r = find_result(rep, "arithmetic_oracle")) {
      const json& d = (*r)["data"];
      l.require(d["teichmuller_2_mod_25"] == 7, "[2] mod 25");
      l.require(d["hensel_sqrt_21_mod_25"] == 11, "sqrt(21) mod 25");
      l.require(d["hensel_sqrt_6_mod_25"] == 16, "sqrt(6) mod 25");
      l.require(d["digits_B0A0"] == json({21, 6, 24}), "digits of B_0 A_0");
    }
    budget(l, t, {"arithmetic_oracle"}, 1);
    lines.push_back(l);
  }
  {
    Line l{10, "two seeded runs give byte-identical reports"};
    const RunOutcome second = run_scenario(s);
    l.require(report_text(first.report) == report_text(second.report), "reports differ");
    l.require(csv_summary(first) == csv_summary(second), "summaries differ");
    lines.push_back(l);
  }

  bool all = true;
  for (const auto& l : lines) {
    std::cout << (l.ok ? "PASS" : "FAIL") << " criterion " << l.id << ": " << l.title << "\n";
    for (const auto& n : l.notes) std::cout << "    " << n << "\n";
    all = all && l.ok;
  }
  return all ? 0 : 1;
}
