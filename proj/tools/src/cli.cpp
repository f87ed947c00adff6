#include "primod/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>

#include "primod/crt.hpp"
#include "primod/error.hpp"
#include "primod/oracle.hpp"
#include "primod/prime_level.hpp"
#include "primod/residue_tuple.hpp"
#include "primod/wheel.hpp"

namespace primod::cli {

namespace {

using nlohmann::json;

struct CommonOptions {
  unsigned level = 0;
  std::string format = "plain";
  unsigned jobs = 1;
  bool force = false;
};

void add_common_options(CLI::App* sub, CommonOptions& options) {
  sub->add_option("--level", options.level, "level n (number of prime moduli)")
      ->required();
  sub->add_option("--format", options.format, "output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->default_val("plain");
  sub->add_option("--jobs", options.jobs, "worker threads for enumeration")
      ->default_val(1u);
  sub->add_flag("--force", options.force, "lift the enumeration budget");
}

void require_format(const CommonOptions& options,
                    std::initializer_list<std::string_view> supported) {
  for (auto f : supported) {
    if (options.format == f) return;
  }
  throw DomainError("format '" + options.format + "' not supported by this command");
}

/// Canonical value rendering; the all-zeros class prints as the primorial
/// when the one-based range convention is requested.
std::string value_string(const BigInt& value, const PrimeLevel& level,
                         bool paper_convention) {
  if (paper_convention && value == 0) return level.primorial().str();
  return value.str();
}

json tuple_json(std::span<const Residue> residues) {
  json array = json::array();
  for (Residue r : residues) array.push_back(r);
  return array;
}

BigInt parse_integer(const std::string& text) {
  try {
    return BigInt(text);
  } catch (const std::exception&) {
    throw DomainError("not an integer: '" + text + "'");
  }
}

/// Primes sufficient to trial-divide any value below the primorial.
std::vector<std::uint64_t> classification_primes(const PrimeLevel& level) {
  const auto root = isqrt(level.primorial()).convert_to<std::uint64_t>();
  return oracle::sieve(std::max<std::uint64_t>(root + 1, 2)).primes();
}

std::string phi_factor_string(const PrimeLevel& level) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < level.n(); ++i) {
    if (i > 0) out << '*';
    out << level.primes()[i] - 1;
  }
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------------------
// convert

int cmd_convert(const CommonOptions& options, const std::string& integer_text,
                std::ostream& out) {
  require_format(options, {"plain", "json"});
  auto level = make_level(options.level);
  const BigInt k = parse_integer(integer_text);
  auto tuple = to_residues(k, level);
  if (options.format == "json") {
    json j;
    j["level"] = level->n();
    j["residues"] = tuple_json(tuple.residues());
    j["value"] = BigInt(k % level->primorial()).str();
    out << j.dump() << '\n';
  } else {
    out << tuple.to_string() << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// reconstruct

int cmd_reconstruct(const CommonOptions& options, const std::vector<Residue>& residues,
                    bool paper_convention, std::ostream& out) {
  require_format(options, {"plain", "json"});
  auto level = make_level(options.level);
  ResidueTuple tuple(level, residues);
  auto value = reconstruct(tuple, *crt_basis(level)).value();
  if (options.format == "json") {
    json j;
    j["level"] = level->n();
    j["residues"] = tuple_json(tuple.residues());
    j["value"] = value_string(value, *level, paper_convention);
    out << j.dump() << '\n';
  } else {
    out << value_string(value, *level, paper_convention) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// basis

int cmd_basis(const CommonOptions& options, std::ostream& out) {
  require_format(options, {"plain", "json"});
  auto level = make_level(options.level);
  auto basis = crt_basis(level);
  if (options.format == "json") {
    json j;
    j["level"] = level->n();
    j["primorial"] = level->primorial().str();
    json coefficients = json::array();
    for (const BigInt& v : basis->coefficients()) coefficients.push_back(v.str());
    j["coefficients"] = coefficients;
    out << j.dump() << '\n';
  } else {
    for (const BigInt& v : basis->coefficients()) out << v.str() << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateOptions {
  std::optional<std::uint64_t> limit;
  std::string sort = "canonical";
  bool paper_convention = false;
};

std::string render_record(const CandidateRecord& record, const std::string& format,
                          bool paper_convention) {
  const std::string value = value_string(record.value, record.tuple.level(),
                                         paper_convention);
  const auto kind = to_string(record.kind);
  const char* guaranteed = record.guaranteed ? "true" : "false";
  if (format == "json") {
    json j;
    j["tuple"] = tuple_json(record.tuple.residues());
    j["value"] = value;
    j["kind"] = kind;
    j["guaranteed"] = record.guaranteed;
    return j.dump();
  }
  if (format == "csv") {
    return '"' + record.tuple.to_string() + "\"," + value + ',' +
           std::string(kind) + ',' + guaranteed;
  }
  return record.tuple.to_string() + ' ' + value + ' ' +
         std::string(kind) + ' ' + guaranteed;
}

/// Enumerates and classifies the level in two position-2 partitions, merged
/// back into canonical order. Each worker stops once it has `cap` records;
/// the merged prefix of length `cap` is then identical to the sequential
/// stream's.
std::vector<CandidateRecord> enumerate_partitioned(
    const LevelPtr& level, const CrtBasis& basis,
    std::span<const std::uint64_t> primes, std::optional<std::uint64_t> cap) {
  std::vector<std::future<std::vector<CandidateRecord>>> futures;
  for (Residue r = level->prime(2) - 1; r >= 1; --r) {
    futures.push_back(std::async(std::launch::async, [&, r] {
      std::vector<CandidateRecord> records;
      auto stream = CoprimeEnumerator::with_prefix(level, {1, r});
      while (auto t = stream.next()) {
        if (cap && records.size() >= *cap) break;
        records.push_back(classify(*t, basis, primes));
      }
      return records;
    }));
  }
  std::vector<CandidateRecord> merged;
  for (auto& future : futures) {
    auto part = future.get();
    merged.insert(merged.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  return merged;
}

int cmd_enumerate(const CommonOptions& options, const EnumerateOptions& enumerate,
                  std::ostream& out) {
  auto level = make_level(options.level);
  const BigInt total = coprime_count(*level);

  // The budget covers the candidates this request must visit: everything,
  // unless a limit lets the canonical stream stop early.
  BigInt needed = total;
  if (enumerate.limit && enumerate.sort == "canonical" && *enumerate.limit < total) {
    needed = *enumerate.limit;
  }
  if (!options.force && needed > kDefaultEnumerationBudget) {
    throw BudgetError("enumeration of level " + std::to_string(level->n()) +
                          " needs " + needed.str() + " candidates, over the budget of " +
                          std::to_string(kDefaultEnumerationBudget) +
                          "; re-run with --force to proceed",
                      needed, BigInt(kDefaultEnumerationBudget));
  }

  auto basis = crt_basis(level);
  const auto primes = classification_primes(*level);

  if (options.format == "csv") out << "tuple,value,kind,guaranteed\n";

  const bool parallel = options.jobs > 1 && level->n() >= 2;
  if (!parallel && enumerate.sort == "canonical") {
    // Stream without materializing.
    std::uint64_t emitted = 0;
    auto stream = CoprimeEnumerator::full(level);
    while (auto t = stream.next()) {
      if (enumerate.limit && emitted >= *enumerate.limit) break;
      out << render_record(classify(*t, *basis, primes), options.format,
                           enumerate.paper_convention)
          << '\n';
      ++emitted;
    }
    return kOk;
  }

  std::vector<CandidateRecord> records;
  if (parallel) {
    const auto cap = enumerate.sort == "canonical" ? enumerate.limit : std::nullopt;
    records = enumerate_partitioned(level, *basis, primes, cap);
  } else {
    auto stream = CoprimeEnumerator::full(level);
    while (auto t = stream.next()) records.push_back(classify(*t, *basis, primes));
  }
  if (enumerate.sort == "ascending") {
    std::ranges::sort(records, [](const CandidateRecord& a, const CandidateRecord& b) {
      return a.value < b.value;
    });
  }
  std::uint64_t emitted = 0;
  for (const auto& record : records) {
    if (enumerate.limit && emitted >= *enumerate.limit) break;
    out << render_record(record, options.format, enumerate.paper_convention) << '\n';
    ++emitted;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// count

int cmd_count(const CommonOptions& options, std::ostream& out) {
  require_format(options, {"plain", "json"});
  auto level = make_level(options.level);
  if (!options.force) {
    try {
      check_enumeration_budget(*level, BigInt(kDefaultEnumerationBudget));
    } catch (const BudgetError& e) {
      throw BudgetError(std::string(e.what()) + "; re-run with --force to proceed",
                        e.required(), e.allowed());
    }
  }
  auto report = count_report(level, *crt_basis(level), classification_primes(*level),
                             std::nullopt);

  const std::string factors = phi_factor_string(*level);
  const std::string band_formula = factors + " - 1 - " + report.pm_prime_count.str() +
                                   " = " + report.band_prime_count.str();
  const std::string below_formula = std::to_string(level->n()) + " + " + factors +
                                    " - 1 - " + report.pm_prime_count.str() + " = " +
                                    report.below_primorial_count.str();

  if (options.format == "json") {
    json j;
    j["level"] = report.level_n;
    j["phi_count"] = report.phi_count.str();
    j["pm_prime_count"] = report.pm_prime_count.str();
    j["band_prime_count"] = report.band_prime_count.str();
    j["below_primorial_count"] = report.below_primorial_count.str();
    j["band_formula"] = band_formula;
    j["below_formula"] = below_formula;
    out << j.dump() << '\n';
  } else {
    out << "level: " << report.level_n << '\n'
        << "phi_count: " << report.phi_count.str() << '\n'
        << "pm_prime_count: " << report.pm_prime_count.str() << '\n'
        << "band_prime_count: " << report.band_prime_count.str() << '\n'
        << "below_primorial_count: " << report.below_primorial_count.str() << '\n'
        << "band: " << band_formula << '\n'
        << "below: " << below_formula << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
  std::string name;
  bool passed;
};

std::vector<CheckResult> verify_level(const LevelPtr& level) {
  std::vector<CheckResult> results;
  auto basis = crt_basis(level);
  const auto primorial = level->primorial().convert_to<std::uint64_t>();
  const auto primes = level->primes();

  bool basis_ok = true;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const BigInt& v = basis->coefficients()[i];
    if (v <= 0 || v >= level->primorial() || v % primes[i] != 1) basis_ok = false;
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (j != i && v % primes[j] != 0) basis_ok = false;
    }
  }
  results.push_back({"basis_coefficients", basis_ok});

  bool round_trip_ok = true;
  for (std::uint64_t k = 0; k < primorial; ++k) {
    if (reconstruct(to_residues(k, level), *basis).value() != k) {
      round_trip_ok = false;
      break;
    }
  }
  results.push_back({"round_trip", round_trip_ok});

  std::vector<std::uint64_t> values;
  auto stream = CoprimeEnumerator::full(level);
  while (auto t = stream.next()) {
    values.push_back(reconstruct(*t, *basis).value().convert_to<std::uint64_t>());
  }
  auto sorted = values;
  std::ranges::sort(sorted);
  const bool complete = BigInt(values.size()) == coprime_count(*level) &&
                        sorted == oracle::coprime_list(*level);
  results.push_back({"enumerator_completeness", complete});

  auto report = count_report(level, *basis, classification_primes(*level));
  auto table = oracle::sieve(std::max<std::uint64_t>(primorial, 2));
  const std::uint64_t p_next = next_prime(*level);
  const bool counts_ok =
      report.band_prime_count == BigInt(table.prime_count(p_next, primorial - 1)) &&
      report.below_primorial_count == BigInt(table.prime_count(2, primorial));
  results.push_back({"count_identities", counts_ok});

  bool guarantee_ok = true;
  for (std::uint64_t value : values) {
    if (value >= p_next && value < p_next * p_next && !table.is_prime(value)) {
      guarantee_ok = false;
    }
  }
  results.push_back({"prime_guarantee", guarantee_ok});

  return results;
}

int cmd_verify(const CommonOptions& options, std::ostream& out) {
  require_format(options, {"plain", "json"});
  if (options.level > 6) {
    throw DomainError("exhaustive verification supports levels 1..6, got " +
                      std::to_string(options.level));
  }
  auto level = make_level(options.level);
  auto results = verify_level(level);
  const bool all_passed =
      std::ranges::all_of(results, [](const CheckResult& r) { return r.passed; });

  if (options.format == "json") {
    json checks = json::array();
    for (const auto& r : results) {
      checks.push_back(json{{"name", r.name}, {"passed", r.passed}});
    }
    json j;
    j["level"] = level->n();
    j["checks"] = checks;
    j["passed"] = all_passed;
    out << j.dump() << '\n';
  } else {
    for (const auto& r : results) {
      out << r.name << ": " << (r.passed ? "PASS" : "FAIL") << '\n';
    }
  }
  return all_passed ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"residue-tuple arithmetic modulo the first n primes"};
  app.require_subcommand(1);

  CommonOptions convert_options;
  std::string convert_integer;
  auto* convert = app.add_subcommand("convert", "reduce an integer to its residue tuple");
  add_common_options(convert, convert_options);
  convert->add_option("integer", convert_integer, "nonnegative integer to reduce")
      ->required();

  CommonOptions reconstruct_options;
  std::vector<Residue> reconstruct_residues;
  bool reconstruct_paper = false;
  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "map a residue tuple back to its integer");
  add_common_options(reconstruct_cmd, reconstruct_options);
  reconstruct_cmd->add_option("residues", reconstruct_residues, "n residues, one per prime")
      ->required();
  reconstruct_cmd->add_flag("--paper-convention", reconstruct_paper,
                            "render the all-zeros class as the primorial instead of 0");

  CommonOptions basis_options;
  auto* basis_cmd =
      app.add_subcommand("basis", "print the level's reconstruction coefficients");
  add_common_options(basis_cmd, basis_options);

  CommonOptions enumerate_options;
  EnumerateOptions enumerate_extra;
  std::uint64_t enumerate_limit = 0;
  auto* enumerate_cmd = app.add_subcommand(
      "enumerate", "list all relative-prime candidates of the level");
  add_common_options(enumerate_cmd, enumerate_options);
  auto* limit_option =
      enumerate_cmd->add_option("--limit", enumerate_limit, "stop after this many rows");
  enumerate_cmd->add_option("--sort", enumerate_extra.sort, "row order")
      ->check(CLI::IsMember({"canonical", "ascending"}))
      ->default_val("canonical");
  enumerate_cmd->add_flag("--paper-convention", enumerate_extra.paper_convention,
                          "render the all-zeros class as the primorial instead of 0");

  CommonOptions count_options;
  auto* count_cmd = app.add_subcommand("count", "print the level's prime counts");
  add_common_options(count_cmd, count_options);

  CommonOptions verify_options;
  auto* verify_cmd = app.add_subcommand(
      "verify", "cross-check the level against the brute-force oracle");
  add_common_options(verify_cmd, verify_options);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("primod");
  for (const auto& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (app.got_subcommand(convert)) {
      return cmd_convert(convert_options, convert_integer, out);
    }
    if (app.got_subcommand(reconstruct_cmd)) {
      return cmd_reconstruct(reconstruct_options, reconstruct_residues,
                             reconstruct_paper, out);
    }
    if (app.got_subcommand(basis_cmd)) {
      return cmd_basis(basis_options, out);
    }
    if (app.got_subcommand(enumerate_cmd)) {
      if (limit_option->count() > 0) enumerate_extra.limit = enumerate_limit;
      return cmd_enumerate(enumerate_options, enumerate_extra, out);
    }
    if (app.got_subcommand(count_cmd)) {
      return cmd_count(count_options, out);
    }
    if (app.got_subcommand(verify_cmd)) {
      return cmd_verify(verify_options, out);
    }
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetRefusal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace primod::cli
