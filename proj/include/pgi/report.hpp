#ifndef PGI_REPORT_HPP
#define PGI_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace pgi {

enum class RowStatus { pass, fail, skip };

inline const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::pass: return "pass";
    case RowStatus::fail: return "fail";
    default: return "skip";
  }
}

// Per-group, per-claim verification rows.  A row passes iff expected matches
// computed; fail rows carry a witness.
struct VerificationReport {
  struct Row {
    std::string group_id;
    std::string claim_id;
    std::string expected;
    std::string computed;
    RowStatus status = RowStatus::pass;
    std::string witness;
  };

  std::vector<Row> rows;

  void add(std::string group_id, std::string claim_id, std::string expected, std::string computed,
           RowStatus status, std::string witness = "") {
    rows.push_back(Row{std::move(group_id), std::move(claim_id), std::move(expected), std::move(computed),
                       status, std::move(witness)});
  }

  void check(const std::string& group_id, const std::string& claim_id, const std::string& expected,
             const std::string& computed, const std::string& witness = "") {
    add(group_id, claim_id, expected, computed, expected == computed ? RowStatus::pass : RowStatus::fail,
        witness);
  }

  void skip(const std::string& group_id, const std::string& claim_id, const std::string& why) {
    add(group_id, claim_id, "", "", RowStatus::skip, why);
  }

  void merge(VerificationReport other) {
    rows.insert(rows.end(), std::make_move_iterator(other.rows.begin()),
                std::make_move_iterator(other.rows.end()));
  }

  int count(RowStatus s) const {
    int c = 0;
    for (const auto& r : rows)
      if (r.status == s) ++c;
    return c;
  }

  bool ok() const { return count(RowStatus::fail) == 0; }

  void write_tsv(std::ostream& os) const {
    os << "group_id\tclaim_id\texpected\tcomputed\tstatus\twitness\n";
    for (const auto& r : rows)
      os << r.group_id << '\t' << r.claim_id << '\t' << r.expected << '\t' << r.computed << '\t'
         << to_string(r.status) << '\t' << r.witness << '\n';
  }

  nlohmann::json to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows)
      rows_json.push_back({{"group_id", r.group_id},
                           {"claim_id", r.claim_id},
                           {"expected", r.expected},
                           {"computed", r.computed},
                           {"status", to_string(r.status)},
                           {"witness", r.witness}});
    return {{"rows", std::move(rows_json)},
            {"pass", count(RowStatus::pass)},
            {"fail", count(RowStatus::fail)},
            {"skip", count(RowStatus::skip)}};
  }
};

} // namespace pgi

#endif
