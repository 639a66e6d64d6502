#pragma once

#include <optional>
#include <string>

#include "coxaff/json_io.hpp"

namespace coxaff::cmd {

// Each subcommand produces a machine-readable document and a text view;
// the CLI decides which to print or write.
struct Result {
    Json json;
    std::string text;
};

struct KRange {
    long lo, hi;
};

KRange parse_krange(const std::string& s);  // "a..b" or single "k"

Result roots_cmd(GroupId g, const std::string& format);
Result group_cmd(GroupId g, bool count_only);

Result enumerate_cmd(GroupId g, const std::string& axis, KRange k, const Rational& gamma,
                     std::optional<Rational> delta, int series, long bound);

Result solve_cmd(const std::string& target, long bound);

Result verify_cmd(const Json& doc);

Result op_cmd(const std::string& axis, long k, const Rational& gamma, int series,
              const std::string& emit, long bound);

Result array_cmd(GroupId g, const std::string& seed_name, const std::string& axis,
                 const std::vector<std::string>& lengths, const std::string& format);

Result lengths_cmd(GroupId g, const std::string& axis, std::optional<Rational> gamma,
                   std::optional<Rational> delta, std::optional<KRange> k, long bound);

}  // namespace coxaff::cmd
