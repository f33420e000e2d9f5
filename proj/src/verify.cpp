#include "fockda/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace fockda {

void VerificationReport::absorb(const VerificationReport& other) {
  cases_run += other.cases_run;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  elapsed_ms += other.elapsed_ms;
}

namespace {

nlohmann::ordered_json report_json(const VerificationReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  auto params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["cases_run"] = r.cases_run;
  auto fails = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) fails.push_back({{"witness", f.witness}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  j["failures"] = fails;
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace

std::string VerificationReport::to_json(bool include_timing) const { return report_json(*this, include_timing).dump(); }

std::string VerificationReport::to_text(std::size_t max_failures) const {
  std::ostringstream os;
  os << (passed() ? "PASS " : "FAIL ") << check;
  for (const auto& [k, v] : params) os << ' ' << k << '=' << v;
  os << "  cases=" << cases_run << " failures=" << failures.size();
  os.setf(std::ios::fixed);
  os.precision(1);
  os << " (" << elapsed_ms << " ms)\n";
  for (std::size_t i = 0; i < failures.size() && i < max_failures; ++i) {
    const auto& f = failures[i];
    os << "  witness: " << f.witness << "\n    lhs: " << f.lhs << "\n    rhs: " << f.rhs << '\n';
  }
  if (failures.size() > max_failures) os << "  ... " << failures.size() - max_failures << " more\n";
  return os.str();
}

std::string reports_to_json(const std::vector<VerificationReport>& reports, bool include_timing) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r, include_timing));
  return arr.dump();
}

VerificationReport grid_check(std::string name, std::vector<std::pair<std::string, std::string>> params,
                              std::size_t num_cases, std::size_t num_items,
                              const std::function<std::optional<Failure>(std::size_t, std::size_t)>& evaluate,
                              int jobs) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.check = std::move(name);
  report.params = std::move(params);
  const std::size_t total = num_cases * num_items;
  report.cases_run = static_cast<std::int64_t>(total);

  std::vector<std::pair<std::size_t, Failure>> found;
  std::mutex found_mutex;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    std::vector<std::pair<std::size_t, Failure>> local;
    try {
      for (std::size_t idx = next++; idx < total; idx = next++) {
        if (auto f = evaluate(idx / num_items, idx % num_items)) local.emplace_back(idx, std::move(*f));
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = total;
    }
    std::lock_guard lock(found_mutex);
    found.insert(found.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  };

  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(total, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  report.failures.reserve(found.size());
  for (auto& [idx, f] : found) report.failures.push_back(std::move(f));
  report.elapsed_ms = elapsed_ms_since(start);
  return report;
}

std::vector<std::pair<int, int>> square_mode_pairs(int bound) {
  std::vector<std::pair<int, int>> out;
  for (int m = -bound; m <= bound; ++m) {
    for (int n = -bound; n <= bound; ++n) out.emplace_back(m, n);
  }
  return out;
}

std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  // Clear denominators row by row, then run Bareiss over the integers.
  std::vector<std::vector<mpz_class>> a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != ncols) throw std::invalid_argument("exact_rank: ragged matrix");
    mpz_class l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
    std::vector<mpz_class> r;
    r.reserve(ncols);
    for (const auto& x : row) r.push_back(x.raw().get_num() * (l / x.raw().get_den()));
    a.push_back(std::move(r));
  }
  const std::size_t nrows = a.size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t pivot = rank;
    while (pivot < nrows && a[pivot][col] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < nrows; ++r) {
      for (std::size_t c = col + 1; c < ncols; ++c) {
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

double elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace fockda
