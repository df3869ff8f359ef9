#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// that tests can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 internal invariant violation.

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "output.hpp"
#include "rigidchain/partitions.hpp"
#include "rigidchain/saturated.hpp"
#include "rigidchain/verify.hpp"

namespace rigidchain::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kInternal = 3 };

/// Number of steps in a `chain --row` line.
inline constexpr int kRowWidth = 14;

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using PlainRenderer = std::function<void(const OutputRecord&, std::ostream&)>;

inline void emit(const OutputRecord& record, const std::string& format, std::ostream& out,
                 const PlainRenderer& plain) {
  if (format == "json") {
    out << to_json(record).dump(2) << '\n';
  } else if (format == "csv") {
    out << to_csv(record);
  } else {
    plain(record, out);
  }
}

// Plain rendering: one comma-separated line per row, no header.
inline void plain_rows(const OutputRecord& record, std::ostream& out) {
  for (const auto& row : record.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << cell_text(row[k]);
    out << '\n';
  }
}

inline std::int64_t as_cell(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX)) throw std::overflow_error("value exceeds int64 range");
  return static_cast<std::int64_t>(v);
}

inline void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

inline void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output encoding")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
}

}  // namespace detail

struct SeqOptions {
  std::string kind;
  std::int64_t max_index = 14;
  std::string format = "plain";
  bool oeis = false;
};

inline int cmd_seq(const SeqOptions& opt, std::ostream& out) {
  detail::require(opt.max_index >= 0, "--max-index must be non-negative");
  detail::require(!opt.oeis || opt.kind == "c", "--oeis is only available for --kind c");
  const auto max_j = static_cast<std::uint64_t>(opt.max_index);

  std::vector<std::uint64_t> values;
  if (opt.kind == "b") {
    values = b_sequence(max_j);
  } else if (opt.kind == "a") {
    values = a_sequence(max_j);
  } else {
    for (std::uint64_t j = 0; j <= max_j; ++j) values.push_back(count_unrefinable(j));
  }

  if (opt.oeis) {
    for (std::uint64_t j = 0; j <= max_j; ++j) out << j << ' ' << values[j] << '\n';
    return kOk;
  }
  OutputRecord record;
  record.command = "seq";
  record.parameters = {{"kind", opt.kind}, {"max_index", std::to_string(opt.max_index)}};
  record.columns = {"j", opt.kind};
  for (std::uint64_t j = 0; j <= max_j; ++j) {
    record.rows.push_back({detail::as_cell(j), detail::as_cell(values[j])});
  }
  detail::emit(record, opt.format, out, detail::plain_rows);
  return kOk;
}

struct ChainOptions {
  int n = 0;
  int max_step = kRowWidth;
  bool row = false;
  std::string format = "plain";
};

inline int cmd_chain(const ChainOptions& opt, std::ostream& out) {
  detail::require(opt.n >= 2 && opt.n <= kMaxRank,
                  "--n must lie in 2.." + std::to_string(kMaxRank) + ", got " + std::to_string(opt.n));
  detail::require(opt.max_step >= 1, "--max-step must be at least 1");

  OutputRecord record;
  record.command = "chain";
  record.parameters = {{"n", std::to_string(opt.n)}};
  if (opt.row) {
    const auto report = chain(opt.n, kRowWidth);
    record.parameters["row"] = "true";
    record.columns.push_back("n");
    Row row{static_cast<std::int64_t>(opt.n)};
    const auto values = report.row(kRowWidth);
    for (int i = 1; i <= kRowWidth; ++i) {
      record.columns.push_back("i" + std::to_string(i));
      row.emplace_back(detail::as_cell(values[i - 1]));
    }
    record.rows.push_back(std::move(row));
    detail::emit(record, opt.format, out, [](const OutputRecord& r, std::ostream& os) {
      const auto& cells = r.rows.front();
      for (std::size_t k = 1; k < cells.size(); ++k) os << (k > 1 ? "," : "") << cell_text(cells[k]);
      os << '\n';
    });
    return kOk;
  }

  const auto report = chain(opt.n, opt.max_step);
  record.parameters["max_step"] = std::to_string(opt.max_step);
  record.parameters["stabilized_at"] = report.stabilized_at ? std::to_string(*report.stabilized_at) : "none";
  // Step 0 is measured against T, which has n rigid commutators.
  record.columns = {"i", "log2_index", "set_size"};
  for (std::size_t i = 0; i < report.set_sizes.size(); ++i) {
    const std::size_t index = i == 0 ? report.set_sizes[0] - static_cast<std::size_t>(opt.n)
                                     : report.log2_indices[i - 1];
    record.rows.push_back({detail::as_cell(i), detail::as_cell(index), detail::as_cell(report.set_sizes[i])});
  }
  detail::emit(record, opt.format, out, detail::plain_rows);
  return kOk;
}

struct TransversalOptions {
  int n = 0;
  std::string format = "plain";
};

inline int cmd_transversal(const TransversalOptions& opt, std::ostream& out) {
  detail::require(opt.n >= 3 && opt.n <= kMaxRank,
                  "--n must lie in 3.." + std::to_string(kMaxRank) + ", got " + std::to_string(opt.n));
  OutputRecord record;
  record.command = "transversal";
  record.parameters = {{"n", std::to_string(opt.n)}};
  record.columns = {"commutator", "bracket", "a", "sum", "mex"};
  for (auto r : transversal(opt.n)) {
    std::vector<Partition::Part> holes;
    for (int h : r.hole_list()) holes.push_back(static_cast<Partition::Part>(h));
    const Partition x(std::move(holes));
    record.rows.push_back({format(r), format_descending(r), static_cast<std::int64_t>(r.top()),
                           detail::as_cell(x.sum()), detail::as_cell(mex(x))});
  }
  detail::emit(record, opt.format, out, [](const OutputRecord& r, std::ostream& os) {
    for (const auto& row : r.rows) {
      os << cell_text(row[0]) << " = " << cell_text(row[1]) << " a=" << cell_text(row[2])
         << " sum=" << cell_text(row[3]) << " mex=" << cell_text(row[4]) << '\n';
    }
  });
  return kOk;
}

struct UnrefinableOptions {
  std::int64_t sum = 0;
  bool count = false;
  std::int64_t mex_filter = 0;  // 0: no filter
  std::string format = "plain";
};

inline int cmd_unrefinable(const UnrefinableOptions& opt, std::ostream& out) {
  detail::require(opt.sum >= 0, "--sum must be non-negative");
  detail::require(opt.mex_filter >= 0, "--mex must be positive");
  std::vector<Partition> found;
  for (auto& p : enumerate_unrefinable(static_cast<Partition::Part>(opt.sum))) {
    if (opt.mex_filter == 0 || mex(p) == static_cast<Partition::Part>(opt.mex_filter)) found.push_back(std::move(p));
  }

  OutputRecord record;
  record.command = "unrefinable";
  record.parameters = {{"sum", std::to_string(opt.sum)}, {"mode", opt.count ? "count" : "list"}};
  if (opt.mex_filter != 0) record.parameters["mex"] = std::to_string(opt.mex_filter);
  if (opt.count) {
    record.columns = {"sum", "count"};
    record.rows.push_back({opt.sum, detail::as_cell(found.size())});
    detail::emit(record, opt.format, out,
                 [](const OutputRecord& r, std::ostream& os) { os << cell_text(r.rows.front()[1]) << '\n'; });
    return kOk;
  }
  record.columns = {"partition", "parts", "mex"};
  for (const auto& p : found) {
    record.rows.push_back({to_string(p), detail::as_cell(p.size()), detail::as_cell(mex(p))});
  }
  detail::emit(record, opt.format, out, [](const OutputRecord& r, std::ostream& os) {
    for (const auto& row : r.rows) os << cell_text(row[0]) << '\n';
  });
  return kOk;
}

struct VerifyOptions {
  int n = 0;
  bool sym = false;
  std::string format = "plain";
};

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  detail::require(opt.n <= kMaxOracleRank, "oracle capped at n=" + std::to_string(kMaxOracleRank));
  detail::require(opt.n >= 3, "verify requires 3 <= n <= " + std::to_string(kMaxOracleRank));
  detail::require(!opt.sym || opt.n == 3, "--sym is only available at n=3");
  const auto report = verify_oracle(opt.n, opt.sym);

  OutputRecord record;
  record.command = "verify";
  record.parameters = {{"n", std::to_string(opt.n)}, {"sym", opt.sym ? "true" : "false"}};
  record.columns = {"check", "status", "detail"};
  for (const auto& c : report.checks) record.rows.push_back({c.name, c.passed ? "PASS" : "FAIL", c.detail});
  detail::emit(record, opt.format, out, [&](const OutputRecord& r, std::ostream& os) {
    for (const auto& row : r.rows) {
      os << cell_text(row[1]) << ' ' << cell_text(row[0]) << ": " << cell_text(row[2]) << '\n';
    }
    os << (report.all_passed() ? "all checks passed" : "verification FAILED") << '\n';
  });
  return report.all_passed() ? kOk : kMismatch;
}

/// Runs the CLI on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rigid commutators, normalizer chains and unrefinable partitions", "rigidchain"};
  app.require_subcommand(1);

  SeqOptions seq;
  auto* seq_cmd = app.add_subcommand("seq", "Print b_j, a_j or c_j for 0 <= j <= max-index");
  seq_cmd->add_option("--kind", seq.kind, "Sequence: b, a or c")->required()->check(CLI::IsMember({"b", "a", "c"}));
  seq_cmd->add_option("--max-index", seq.max_index, "Last index")->capture_default_str();
  auto* seq_format = seq_cmd->add_option("--format", seq.format, "Output encoding")
                         ->check(CLI::IsMember({"plain", "csv", "json"}))
                         ->capture_default_str();
  seq_cmd->add_flag("--oeis", seq.oeis, "Emit an OEIS b-file (kind c only)")->excludes(seq_format);

  ChainOptions ch;
  auto* chain_cmd = app.add_subcommand("chain", "Normalizer chain starting at T");
  chain_cmd->add_option("--n", ch.n, "Rank")->required();
  chain_cmd->add_option("--max-step", ch.max_step, "Last chain step computed")->capture_default_str();
  chain_cmd->add_flag("--row", ch.row, "Print log2 indices for i = 1..14 on one line");
  detail::add_format_option(chain_cmd, ch.format);

  TransversalOptions tr;
  auto* tr_cmd = app.add_subcommand("transversal", "Rigid commutators in N^{n-1} but not N^{n-2}");
  tr_cmd->add_option("--n", tr.n, "Rank")->required();
  detail::add_format_option(tr_cmd, tr.format);

  UnrefinableOptions un;
  bool list_flag = false;
  auto* un_cmd = app.add_subcommand("unrefinable", "Unrefinable partitions into distinct parts");
  un_cmd->add_option("--sum", un.sum, "Integer being partitioned")->required();
  auto* list_opt = un_cmd->add_flag("--list", list_flag, "List the partitions (default)");
  un_cmd->add_flag("--count", un.count, "Only count them")->excludes(list_opt);
  un_cmd->add_option("--mex", un.mex_filter, "Keep only partitions with this minimal excludant");
  detail::add_format_option(un_cmd, un.format);

  VerifyOptions ver;
  auto* ver_cmd = app.add_subcommand("verify", "Cross-check against brute-force permutation groups");
  ver_cmd->add_option("--n", ver.n, "Rank (3 or 4)")->required();
  ver_cmd->add_flag("--sym", ver.sym, "Also compare normalizers in Sym(8) (n=3 only)");
  detail::add_format_option(ver_cmd, ver.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (seq_cmd->parsed()) return cmd_seq(seq, out);
    if (chain_cmd->parsed()) return cmd_chain(ch, out);
    if (tr_cmd->parsed()) return cmd_transversal(tr, out);
    if (un_cmd->parsed()) {
      if (un.mex_filter == 0 && un_cmd->count("--mex") > 0) throw detail::UsageError("--mex must be positive");
      return cmd_unrefinable(un, out);
    }
    if (ver_cmd->parsed()) return cmd_verify(ver, out);
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace rigidchain::cli
