#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fockda/charged.hpp"
#include "fockda/expression.hpp"
#include "fockda/qchar.hpp"
#include "fockda/suites.hpp"

using namespace fockda;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_flag(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

/// Raw flag values; everything is validated before any computation.
struct Options {
  std::string target;
  std::optional<std::string> weight_cut;
  std::optional<std::string> max_index;
  std::optional<int> mmax;
  std::optional<int> kmax;
  std::optional<int> nmax;
  std::optional<std::string> lambda;
  std::optional<std::string> b;
  std::optional<std::string> family;
  int qmax = 10;
  std::string form = "trace";
  std::string which = "DA";
  std::string expr;
  bool json = false;
  int jobs = 0;
  std::string out;
};

Rational cut_or(const Options& o, int fallback) {
  return o.weight_cut ? rational_flag("--weight-cut", *o.weight_cut) : Rational(fallback);
}

std::vector<VerificationReport> run_verify(const Options& o, int jobs) {
  const Rational cut = cut_or(o, 8);
  if (cut < Rational(0)) throw UsageError("--weight-cut must be non-negative");
  std::optional<Rational> lambda;
  std::optional<Rational> b;
  if (o.lambda) lambda = rational_flag("--lambda", *o.lambda);
  if (o.b) b = rational_flag("--b", *o.b);
  std::optional<VirasoroFamily> family;
  if (o.family) {
    try {
      family = parse_virasoro_family(*o.family);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--family: ") + e.what());
    }
  }
  for (const auto* v : {&o.mmax, &o.kmax, &o.nmax}) {
    if (*v && **v < 0) throw UsageError("mode and degree bounds must be non-negative");
  }

  std::vector<VerificationReport> out;
  auto append = [&](std::vector<VerificationReport> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  if (o.target == "clifford") {
    const Rational max_index = o.max_index ? rational_flag("--max-index", *o.max_index) : Rational(15, 2);
    try {
      out.push_back(clifford_check(max_index, cut, jobs));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--max-index: ") + e.what());
    }
  } else if (o.target == "heisenberg") {
    const Rational hcut = cut_or(o, 10);
    append(heisenberg_suite(o.mmax.value_or(5), hcut, jobs));
    append(decomposition_suite(o.nmax.value_or(4), o.kmax.value_or(8), o.nmax.value_or(4), o.mmax.value_or(5),
                               std::min(o.nmax.value_or(3), 3), std::min(o.kmax.value_or(5), 5)));
  } else if (o.target == "virasoro") {
    const int mmax = o.mmax.value_or(4);
    if ((lambda || b) && family && *family != VirasoroFamily::lambda) {
      throw UsageError("--lambda and --b apply only to --family lambda");
    }
    if (family && *family != VirasoroFamily::lambda) {
      append(virasoro_suite(*family, {}, {}, mmax, cut, jobs));
    } else if (family || lambda || b) {
      append(virasoro_suite(VirasoroFamily::lambda, lambda.value_or(Rational(1, 2)), b.value_or(Rational(0)),
                            o.mmax.value_or(3), cut, jobs));
    } else {
      for (auto f : {VirasoroFamily::half, VirasoroFamily::half_tilde, VirasoroFamily::one, VirasoroFamily::one_tilde}) {
        append(virasoro_suite(f, {}, {}, mmax, cut, jobs));
      }
      for (auto [l, bb] : std::vector<std::pair<Rational, Rational>>{
               {Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1, 3), Rational(2, 5)},
               {Rational(1, 2), Rational(-1, 4)}, {Rational(1, 2), Rational(0)}}) {
        append(virasoro_suite(VirasoroFamily::lambda, l, bb, o.mmax.value_or(3), cut, jobs));
      }
    }
  } else if (o.target == "winf") {
    append(winf_suite(o.kmax.value_or(2), o.mmax.value_or(3), o.mmax.value_or(4), cut, jobs));
  } else if (o.target == "iso") {
    append(iso_checks(cut, o.mmax.value_or(4), jobs));
    const std::vector<Rational> lambdas = lambda ? std::vector<Rational>{*lambda}
                                                 : std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)};
    const std::vector<Rational> bs = b ? std::vector<Rational>{*b} : std::vector<Rational>{Rational(0), Rational(1, 3)};
    append(charged_suite(lambdas, bs, std::min(o.mmax.value_or(3), 3), cut, jobs));
  } else if (o.target == "identities") {
    append(identities_suite(o.mmax.value_or(4), cut, jobs));
  }
  return out;
}

void emit_reports(std::ostream& os, const std::vector<VerificationReport>& reports, bool json) {
  for (const auto& r : reports) {
    if (json) {
      os << r.to_json() << '\n';
    } else {
      os << r.to_text();
    }
  }
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification engine for neutral and charged free fermion Fock spaces"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Structured output, one record per line");
    sub->add_option("--jobs", o.jobs, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", o.out, "Write the report stream to FILE");
  };

  auto* verify = app.add_subcommand("verify", "Run an exact relation check");
  verify->add_option("target", o.target, "clifford, heisenberg, virasoro, winf, iso or identities")
      ->required()
      ->check(CLI::IsMember({"clifford", "heisenberg", "virasoro", "winf", "iso", "identities"}));
  verify->add_option("--weight-cut", o.weight_cut, "Largest basis weight, written p/2 or an integer");
  verify->add_option("--max-index", o.max_index, "Largest |m| for Clifford modes, written p/2");
  verify->add_option("--mmax", o.mmax, "Largest |mode| in bracket grids");
  verify->add_option("--kmax", o.kmax, "Largest k (W-infinity order or sector degree)");
  verify->add_option("--nmax", o.nmax, "Largest |charge| in sector checks");
  verify->add_option("--lambda", o.lambda, "lambda as p/q");
  verify->add_option("--b", o.b, "b as p/q");
  verify->add_option("--family", o.family, "half, half~, one, one~ or lambda");
  add_common(verify);

  auto* character = app.add_subcommand("character", "Character series in units of q^(1/2)");
  character->add_option("--qmax", o.qmax, "Largest power of q^(1/2)")->check(CLI::NonNegativeNumber);
  character->add_option("--form", o.form, "trace, product or sum")->check(CLI::IsMember({"trace", "product", "sum"}));
  add_common(character);

  auto* jacobi = app.add_subcommand("jacobi", "Check a Jacobi-type identity coefficientwise");
  jacobi->add_option("--which", o.which, "DA or A")->check(CLI::IsMember({"DA", "A"}));
  jacobi->add_option("--qmax", o.qmax, "Largest power of q")->check(CLI::NonNegativeNumber);
  add_common(jacobi);

  auto* decompose = app.add_subcommand("decompose", "Sector dimensions against partition counts");
  decompose->add_option("--nmax", o.nmax, "Largest |charge|");
  decompose->add_option("--kmax", o.kmax, "Largest degree");
  add_common(decompose);

  auto* apply = app.add_subcommand("apply", "Evaluate an operator expression on the vacuum");
  apply->add_option("expr", o.expr, "e.g. \"h[-1] phi[-1/2] |0>\"")->required();
  add_common(apply);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const int jobs = o.jobs > 0 ? o.jobs : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::ostringstream buffer;
  int code = 0;
  try {
    if (verify->parsed()) {
      const auto reports = run_verify(o, jobs);
      emit_reports(buffer, reports, o.json);
      code = all_passed(reports) ? 0 : kExitFail;
    } else if (character->parsed()) {
      const CharacterSeries s = o.form == "trace"     ? char_trace(Rational(o.qmax, 2))
                                : o.form == "product" ? char_product_form(o.qmax)
                                                      : char_sum_form(o.qmax);
      buffer << (o.json ? s.to_json() + "\n" : s.to_text());
    } else if (jacobi->parsed()) {
      const auto r = jacobi_check(o.which == "DA" ? JacobiKind::DA : JacobiKind::A, o.qmax);
      emit_reports(buffer, {r}, o.json);
      code = r.passed() ? 0 : kExitFail;
    } else if (decompose->parsed()) {
      const int nmax = o.nmax.value_or(4);
      const int kmax = o.kmax.value_or(8);
      if (nmax < 0 || kmax < 0) throw UsageError("--nmax and --kmax must be non-negative");
      for (const auto& row : decompose_table(nmax, kmax)) {
        if (o.json) {
          buffer << "{\"n\":" << row.n << ",\"k\":" << row.k << ",\"dim\":" << row.dim << ",\"p(k)\":" << row.partitions
                 << ",\"match\":" << (row.match() ? "true" : "false") << "}\n";
        } else {
          buffer << "n=" << row.n << " k=" << row.k << " dim=" << row.dim << " p(k)=" << row.partitions
                 << " match=" << (row.match() ? "yes" : "no") << '\n';
        }
        if (!row.match()) code = kExitFail;
      }
    } else if (apply->parsed()) {
      const auto s = evaluate_expression(o.expr);
      buffer << (o.json ? "{\"state\":\"" + render_state(s) + "\"}" : render_state(s)) << '\n';
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.out.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "cannot write " << o.out << '\n';
      return kExitUsage;
    }
    f << buffer.str();
  }
  return code;
}
