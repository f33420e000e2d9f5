#include <doctest.h>

#include "fockda/heisenberg.hpp"
#include "fockda/verify.hpp"

using namespace fockda;

namespace {
NeutralFamily corrupted_h() {
  return {"hbad", [](int n) {
            auto op = h_mode(n).as_operator();
            if (n == 2) op = op + op;
            return op;
          }};
}
}  // namespace

TEST_CASE("corrupted families are caught with witnesses") {
  const auto basis = enumerate_basis(Rational(3));
  const auto r = bracket_check(heisenberg_spec(corrupted_h()), square_mode_pairs(2), basis, {{"weight_cut", "3"}});
  CHECK_FALSE(r.passed());
  REQUIRE(!r.failures.empty());
  CHECK(r.failures.front().witness.find("hbad") != std::string::npos);
  CHECK(r.failures.front().lhs != r.failures.front().rhs);
  CHECK(r.to_text().rfind("FAIL heisenberg", 0) == 0);
}

TEST_CASE("cases_run is pairs times basis") {
  const auto basis = enumerate_basis(Rational(3));
  const auto r = bracket_check(heisenberg_spec(h_family()), square_mode_pairs(2), basis, {});
  CHECK(r.cases_run == static_cast<std::int64_t>(25 * basis.size()));
  CHECK(r.to_text().rfind("PASS heisenberg", 0) == 0);
}

TEST_CASE("results do not depend on the job count") {
  const auto basis = enumerate_basis(Rational(4));
  const auto one = bracket_check(heisenberg_spec(corrupted_h()), square_mode_pairs(3), basis, {}, 1);
  const auto four = bracket_check(heisenberg_spec(corrupted_h()), square_mode_pairs(3), basis, {}, 4);
  CHECK(one.failures == four.failures);
  CHECK(one.to_json(false) == four.to_json(false));
  const auto again = bracket_check(heisenberg_spec(corrupted_h()), square_mode_pairs(3), basis, {}, 3);
  CHECK(again.to_json(false) == one.to_json(false));
}

TEST_CASE("grid_check propagates exceptions") {
  CHECK_THROWS_AS(grid_check("boom", {}, 3, 3,
                             [](std::size_t c, std::size_t) -> std::optional<Failure> {
                               if (c == 2) throw std::runtime_error("boom");
                               return std::nullopt;
                             },
                             2),
                  std::runtime_error);
}

TEST_CASE("JSON layout") {
  VerificationReport r;
  r.check = "demo";
  r.params = {{"a", "1"}, {"b", "x"}};
  r.cases_run = 4;
  r.failures.push_back({"w", "1", "2"});
  CHECK(r.to_json(false) ==
        R"({"check":"demo","params":{"a":"1","b":"x"},"cases_run":4,"failures":[{"witness":"w","lhs":"1","rhs":"2"}]})");
  CHECK(r.to_json(true).find("\"elapsed_ms\"") != std::string::npos);
  CHECK(reports_to_json({r, r}, false).front() == '[');
  VerificationReport s = r;
  s.absorb(r);
  CHECK(s.cases_run == 8);
  CHECK(s.failures.size() == 2);
}

TEST_CASE("square mode pairs") {
  const auto p = square_mode_pairs(1);
  CHECK(p.size() == 9);
  CHECK(p.front() == std::pair{-1, -1});
  CHECK(p.back() == std::pair{1, 1});
}
