#include "nec/report.hpp"

#include <chrono>
#include <future>
#include <thread>

namespace nec {
namespace {

BatchRow run_row(const std::string& text, const SearchContext& ctx) {
  BatchRow row;
  row.signature = text;
  auto start = std::chrono::steady_clock::now();
  try {
    NecSignature sig = parse_signature(text);
    row.signature = render(sig);
    auto outcome = certify_signature(sig, ctx);
    row.status = outcome.status;
    row.detail = outcome.detail;
    if (outcome.cert) {
      row.recipe = outcome.cert->recipe;
      row.index = outcome.cert->image_order;
      row.genus = outcome.cert->kernel_genus;
    }
  } catch (const std::exception& e) {
    row.status = CertifyStatus::SearchFailed;
    row.detail = e.what();
  }
  row.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return row;
}

} // namespace

BatchReport run_batch(const std::vector<std::string>& lines, const SearchContext& ctx,
                      int threads) {
  std::vector<std::string> jobs;
  for (auto line : lines) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    std::size_t at = 0;
    while (at < line.size() && std::isspace(static_cast<unsigned char>(line[at]))) ++at;
    line = line.substr(at);
    if (!line.empty()) jobs.push_back(line);
  }
  if (threads <= 0)
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  BatchReport report;
  report.rows.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      report.rows[i] = run_row(jobs[i], ctx.child(i));
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return report;
}

std::vector<TableRow> solved_table_rows(const SearchContext& ctx) {
  // smallest admissible instance per solved row
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"s=0 (-), any periods", "(0;+;[2,3];{(-)})"},
      {"s=1 (n) odd n>2, all periods 2", "(0;+;[2,2];{(3)})"},
      {"s=2 (2,2), any periods", "(0;+;[3];{(2,2)})"},
      {"s=2 (n,n), r>=3 with an even period", "(0;+;[2,2,2];{(3,3)})"},
      {"s>=3 (2,2,...), r>=2", "(0;+;[2,2];{(2,2,2)})"},
      {"s>=4 (2,2,...), r=0", "(0;+;[-];{(2,2,2,3)})"},
      {"s=3 (2,2,n3), r=1, m or n3 even", "(0;+;[2];{(2,2,3)})"},
      {"s>=4 (2,2,...), r=1", "(0;+;[2];{(2,2,2,2)})"},
      {"s>=3 any, r>=2 with an even period", "(0;+;[2,2];{(2,3,3)})"},
      {"s>=3 any, r=1 with m = 2 mod 4", "(0;+;[2];{(2,3,3)})"},
  };
  std::vector<TableRow> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    TableRow row;
    row.label = rows[i].first;
    row.instance = rows[i].second;
    row.outcome = certify_signature(parse_signature(rows[i].second), ctx.child(9000 + i));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<TableRow> open_table_rows() {
  const std::vector<std::string> rows = {
      "s=1 (n): any periods except all-2 with odd n",
      "s=2 (n1,n2) with n1 != n2: any periods",
      "s=2 (n,n) with n > 2: r = 1 or 2, or r >= 3 with all periods odd",
      "s=3 all links > 2: r = 0",
      "s=3 (2,2,n3) with n3 odd: r = 1 with odd period",
      "s>=3 without a consecutive (2,2): any periods",
      "s>=3 any: r = 1 with period not 2 mod 4",
      "s>=3 any: r >= 2 with all periods odd",
  };
  std::vector<TableRow> out;
  for (const auto& label : rows) {
    TableRow row;
    row.label = label;
    row.open = true;
    out.push_back(std::move(row));
  }
  return out;
}

} // namespace nec
