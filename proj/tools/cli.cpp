#include "cli.hpp"

#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "broomrank/broom.hpp"
#include "broomrank/enumeration.hpp"
#include "broomrank/oracle.hpp"
#include "broomrank/verify.hpp"

namespace broomrank::cli {

namespace {

using nlohmann::json;
namespace en = broomrank::enumeration;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PairArgs {
  int m = 0, p = 0, n = 0, q = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--m", m, "pendant leaves of the first broom")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--p", p, "handle length of the first broom")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--n", n, "pendant leaves of the second broom")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--q", q, "handle length of the second broom")->required()->check(CLI::NonNegativeNumber);
  }

  BroomPair pair() const { return BroomPair(m, p, n, q); }
};

json pair_json(const BroomPair& pair) {
  return {{"m", pair.m()}, {"p", pair.p()}, {"n", pair.n()}, {"q", pair.q()}};
}

// Whitney numbers can exceed 64 bits, so JSON carries them as decimal strings.
json seq_json(const IntSeq& s) {
  json arr = json::array();
  for (const auto& v : s.values()) arr.push_back(v.str());
  return arr;
}

json opt_json(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

int cmd_rank(const PairArgs& args, const std::string& method, const std::string& format,
             std::ostream& out, std::ostream& err) {
  const auto pair = args.pair();
  RankSequence r;
  if (method == "closed") r = rank_closed(pair);
  else if (method == "conv") r = rank_convolution(pair);
  else r = oracle::subtree_polynomial(oracle::merged_brooms(pair));

  if (format == "json") {
    out << json{{"canonical", pair_json(pair)}, {"method", method}, {"rank", seq_json(r.whitney)}}.dump()
        << '\n';
  } else if (format == "csv") {
    out << "i,r\n";
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(r.size()); ++i) out << i << ',' << r.at(i) << '\n';
  } else {
    err << "canonical " << pair.to_string() << '\n';
    out << r.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_classify(const PairArgs& args, const std::string& format, std::ostream& out, std::ostream& err) {
  const auto pair = args.pair();
  const auto theorem = classify_theorem(pair);
  const auto direct = classify_direct(pair);
  if (theorem.unimodal != direct.unimodal) {
    err << "internal error: classifiers disagree on " << pair.to_string() << '\n';
    return kExitInternal;
  }
  const auto condition = std::string(condition_tag(*theorem.matched_condition));
  if (format == "json") {
    json doc{{"canonical", pair_json(pair)},
             {"unimodal", theorem.unimodal},
             {"condition", condition},
             {"witness", nullptr}};
    if (direct.witness) doc["witness"] = *direct.witness;
    out << doc.dump() << '\n';
  } else {
    err << "canonical " << pair.to_string() << '\n';
    if (theorem.unimodal) out << "unimodal condition=" << condition << '\n';
    else out << "not-unimodal witness=" << direct.witness_string() << '\n';
  }
  return theorem.unimodal ? kExitOk : kExitNotUnimodal;
}

int cmd_enumerate(int i, bool non_unimodal, const std::string& format, std::ostream& out) {
  if (i < 2) throw UsageError("--i must be >= 2");
  const auto pairs = en::enumerate_quadruples(i, non_unimodal);
  if (format == "json") {
    json arr = json::array();
    for (const auto& pair : pairs) arr.push_back(pair_json(pair));
    out << json{{"i", i}, {"non_unimodal_only", non_unimodal}, {"pairs", arr}}.dump() << '\n';
  } else if (format == "csv") {
    out << "m,p,n,q\n";
    for (const auto& pair : pairs) out << pair.m() << ',' << pair.p() << ',' << pair.n() << ',' << pair.q() << '\n';
  } else {
    for (const auto& pair : pairs) out << pair.to_string() << '\n';
  }
  return kExitOk;
}

void write_bfile(const std::string& seq, int min_i, int max_i, int offset, const en::CostBounds& bounds,
                 std::ostream& out) {
  for (int i = min_i; i <= max_i; ++i) {
    const auto value = seq == "b" ? en::b_closed(i) : en::t_bruteforce(i, bounds);
    out << (i + offset) << ' ' << value << '\n';
  }
}

int cmd_count(int max_i, const std::string& format, const std::string& seq, const en::CostBounds& bounds,
              std::ostream& out, std::ostream& err) {
  if (max_i < 1) throw UsageError("--max-i must be >= 1");
  if (max_i > bounds.max_tree_vertices) {
    throw UsageError("--max-i " + std::to_string(max_i) + " exceeds the bound " +
                     std::to_string(bounds.max_tree_vertices) + " (set BROOMRANK_MAX_I to raise it)");
  }
  if (format == "bfile") {
    write_bfile(seq, 1, max_i, 0, bounds, out);
    return kExitOk;
  }
  const auto table = en::build_count_table(max_i, bounds);
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : table.rows) {
      rows.push_back({{"i", r.i},
                      {"a", r.a},
                      {"b_closed", r.b_closed},
                      {"b_recursive", opt_json(r.b_recursive)},
                      {"b_brute", r.b_brute},
                      {"t_brute", r.t_brute},
                      {"t_trees", r.t_trees},
                      {"t_table", opt_json(r.t_table)},
                      {"b_agree", r.b_agree},
                      {"t_status", std::string(en::table_status_name(r.t_status))}});
    }
    out << json{{"rows", rows}, {"b_agree", table.all_b_agree()}, {"t_table_ok", table.t_table_ok()}}.dump()
        << '\n';
  } else if (format == "csv") {
    out << "i,a,b_closed,b_recursive,b_brute,t_brute,t_trees,t_table,b_agree,t_status\n";
    for (const auto& r : table.rows) {
      out << r.i << ',' << r.a << ',' << r.b_closed << ','
          << (r.b_recursive ? std::to_string(*r.b_recursive) : "") << ',' << r.b_brute << ',' << r.t_brute
          << ',' << r.t_trees << ',' << (r.t_table ? std::to_string(*r.t_table) : "") << ','
          << (r.b_agree ? "yes" : "no") << ',' << en::table_status_name(r.t_status) << '\n';
    }
  } else {
    out << std::setw(4) << "i" << std::setw(7) << "a" << std::setw(10) << "b_closed" << std::setw(8) << "b_rec"
        << std::setw(9) << "b_brute" << std::setw(9) << "t_brute" << std::setw(9) << "t_trees" << std::setw(9)
        << "t_table" << "  status\n";
    for (const auto& r : table.rows) {
      out << std::setw(4) << r.i << std::setw(7) << r.a << std::setw(10) << r.b_closed << std::setw(8)
          << (r.b_recursive ? std::to_string(*r.b_recursive) : "-") << std::setw(9) << r.b_brute
          << std::setw(9) << r.t_brute << std::setw(9) << r.t_trees << std::setw(9)
          << (r.t_table ? std::to_string(*r.t_table) : "-") << "  " << (r.b_agree ? "b-ok" : "b-DISAGREE")
          << ' ' << en::table_status_name(r.t_status) << '\n';
    }
  }
  for (const auto& r : table.rows) {
    if (r.t_status == en::TableStatus::Flagged) {
      err << "note: published t_" << r.i << " = " << *r.t_table << " differs from computed " << r.t_brute
          << '\n';
    }
  }
  return table.all_b_agree() && table.t_table_ok() ? kExitOk : kExitFailure;
}

int cmd_bfile(const std::string& seq, int min_i, int max_i, int offset, const en::CostBounds& bounds,
              std::ostream& out) {
  if (min_i < 1 || max_i < min_i) throw UsageError("need 1 <= --min-i <= --max-i");
  if (seq == "t" && max_i > bounds.max_tree_vertices) {
    throw UsageError("--max-i " + std::to_string(max_i) + " exceeds the bound " +
                     std::to_string(bounds.max_tree_vertices) + " (set BROOMRANK_MAX_I to raise it)");
  }
  write_bfile(seq, min_i, max_i, offset, bounds, out);
  return kExitOk;
}

int cmd_verify(const std::string& level, unsigned jobs, const std::string& format, std::ostream& out) {
  verify::Options opts;
  opts.level = level == "full" ? verify::Level::Full : verify::Level::Quick;
  opts.jobs = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
  const auto report = verify::run_all(opts);
  if (format == "json") {
    json suites = json::array();
    for (const auto& s : report.suites) {
      suites.push_back({{"name", s.name},
                        {"cases", s.cases},
                        {"passed", s.passed},
                        {"counterexample", s.counterexample},
                        {"seconds", s.seconds}});
    }
    out << json{{"level", level}, {"passed", report.passed()}, {"suites", suites}}.dump() << '\n';
  } else {
    for (const auto& s : report.suites) {
      out << (s.passed ? "PASS " : "FAIL ") << s.name << " (" << s.cases << " cases, " << std::fixed
          << std::setprecision(3) << s.seconds << " s)\n";
      if (!s.passed) out << "  counterexample: " << s.counterexample << '\n';
    }
    out << (report.passed() ? "PASS" : "FAIL") << '\n';
  }
  return report.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank sequences and unimodality of merged broom trees", "broomrank"};
  app.require_subcommand(1);

  PairArgs pair_args;
  std::string method = "closed";
  std::string format = "plain";
  std::string level = "quick";
  std::string seq = "b";
  int vertices = 0, max_i = 0, min_i = 1, offset = 0;
  unsigned jobs = 1;
  bool non_unimodal = false;

  auto* rank = app.add_subcommand("rank", "print the rank sequence of B_{m,p}.B_{n,q}");
  pair_args.attach(rank);
  rank->add_option("--method", method, "closed | conv | oracle")
      ->check(CLI::IsMember({"closed", "conv", "oracle"}));
  rank->add_option("--format", format, "plain | json | csv")->check(CLI::IsMember({"plain", "json", "csv"}));

  auto* classify = app.add_subcommand("classify", "decide rank unimodality (exit 0 unimodal, 1 not)");
  pair_args.attach(classify);
  classify->add_option("--format", format, "plain | json")->check(CLI::IsMember({"plain", "json"}));

  auto* enumerate = app.add_subcommand("enumerate", "list canonical broom pairs on i vertices");
  enumerate->add_option("--i", vertices, "vertex count")->required();
  enumerate->add_flag("--non-unimodal", non_unimodal, "only pairs whose rank sequence is not unimodal");
  enumerate->add_option("--format", format, "plain | json | csv")->check(CLI::IsMember({"plain", "json", "csv"}));

  auto* count = app.add_subcommand("count", "tabulate a_i, b_i and t_i for i = 1..max-i");
  count->add_option("--max-i", max_i, "largest vertex count")->required();
  count->add_option("--format", format, "plain | json | csv | bfile")
      ->check(CLI::IsMember({"plain", "json", "csv", "bfile"}));
  count->add_option("--seq", seq, "sequence for bfile output: b | t")->check(CLI::IsMember({"b", "t"}));

  auto* bfile = app.add_subcommand("bfile", "write a b-file (\"index value\" per line)");
  bfile->add_option("--seq", seq, "b | t")->required()->check(CLI::IsMember({"b", "t"}));
  bfile->add_option("--max-i", max_i, "largest vertex count")->required();
  bfile->add_option("--min-i", min_i, "smallest vertex count (default 1)");
  bfile->add_option("--offset", offset, "added to every index (default 0)");

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("--level", level, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  verify_cmd->add_option("--format", format, "plain | json")->check(CLI::IsMember({"plain", "json"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto bounds = en::CostBounds::from_environment();
    if (*rank) return cmd_rank(pair_args, method, format, out, err);
    if (*classify) return cmd_classify(pair_args, format, out, err);
    if (*enumerate) return cmd_enumerate(vertices, non_unimodal, format, out);
    if (*count) return cmd_count(max_i, format, seq, bounds, out, err);
    if (*bfile) return cmd_bfile(seq, min_i, max_i, offset, bounds, out);
    if (*verify_cmd) return cmd_verify(level, jobs, format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace broomrank::cli
