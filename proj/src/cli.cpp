#include "cyclotope/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclotope/decomposition.hpp"
#include "cyclotope/equinumerosity.hpp"
#include "cyclotope/symmetric_cycle.hpp"

namespace cyclotope::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Dense: return "dense";
    case Method::Fast: return "fast";
    case Method::Intervals: return "intervals";
    case Method::All: return "all";
  }
  return "?";
}

Json spectrum_json(const Spectrum& x) {
  Json coords = Json::array();
  for (int i = 1; i <= x.t(); ++i) coords.push_back(x(i));
  return coords;
}

Json terms_json(const Decomposition& d) {
  Json terms = Json::array();
  for (const auto& term : d.terms) terms.push_back(Json{{"sign", term.sign}, {"index", term.index}});
  return terms;
}

int run_decompose(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  const auto tope = Tope::parse(config.tope);
  Json record;
  record["t"] = tope.t();
  record["tope"] = tope.to_string();
  record["method"] = method_name(config.method);

  std::optional<Spectrum> x;
  bool agreement = true;
  switch (config.method) {
    case Method::Dense: x = spectrum_dense(tope); break;
    case Method::Fast: x = spectrum_fast(tope); break;
    case Method::Intervals: x = spectrum_intervals(tope); break;
    case Method::All: {
      const auto dense = spectrum_dense(tope);
      const auto fast = spectrum_fast(tope);
      const auto intervals = spectrum_intervals(tope);
      agreement = dense == fast && fast == intervals;
      x = fast;
      if (!agreement) {
        record["methods"] = Json{{"dense", spectrum_json(dense)},
                                 {"fast", spectrum_json(fast)},
                                 {"intervals", spectrum_json(intervals)}};
      }
      break;
    }
  }
  const auto d = decomposition_from_spectrum(*x);
  record["x"] = spectrum_json(*x);
  record["terms"] = terms_json(d);
  record["size"] = d.size();
  if (config.method == Method::All) record["agreement"] = agreement;
  out << record.dump() << '\n';
  if (!agreement) {
    err << "spectrum methods disagree for " << tope.to_string() << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

void write_stats(const CountTable& formula, const std::optional<CountTable>& enumerated, Format format,
                 std::ostream& out) {
  if (format == Format::Json) {
    // Hand-written so that counts stay exact integers of any length.
    out << "{\"t\":" << formula.t << ",\"rows\":[";
    for (std::size_t r = 0; r < formula.rows.size(); ++r) {
      const auto& row = formula.rows[r];
      out << (r ? "," : "") << "{\"j\":" << row.j << ",\"l\":" << row.l << ",\"count_formula\":" << row.count;
      if (enumerated) out << ",\"count_enum\":" << enumerated->rows[r].count;
      out << '}';
    }
    out << "]}\n";
    return;
  }
  out << "t,j,l,count_formula" << (enumerated ? ",count_enum" : "") << '\n';
  for (std::size_t r = 0; r < formula.rows.size(); ++r) {
    const auto& row = formula.rows[r];
    out << formula.t << ',' << row.j << ',' << row.l << ',' << row.count;
    if (enumerated) out << ',' << enumerated->rows[r].count;
    out << '\n';
  }
}

int run_stats(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  const auto formula = formula_statistics(config.t);
  std::optional<CountTable> enumerated;
  std::size_t mismatches = 0;
  if (config.enumerate) {
    enumerated = enumerate_statistics(config.t, config.enumeration_cap);
    for (std::size_t r = 0; r < formula.rows.size(); ++r) {
      if (formula.rows[r] != enumerated->rows[r]) ++mismatches;
    }
  }
  if (config.output.empty()) {
    write_stats(formula, enumerated, config.format, out);
  } else {
    std::ofstream file(config.output);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open output file " + config.output);
    write_stats(formula, enumerated, config.format, file);
  }
  if (mismatches) {
    err << mismatches << " formula/enumeration mismatches\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int run_equinum(const CommandConfig& config, std::ostream& out) {
  const auto tope = Tope::parse(config.tope);
  const auto subset = GroundSubset::parse(config.t, config.subset);
  const auto report = equal_size_criterion(tope, subset, config.oracle);
  Json record;
  record["t"] = config.t;
  record["tope"] = tope.to_string();
  record["subset"] = subset.to_string();
  record["case"] = report.boundary_split ? "i" : "ii";
  record["lhs_sum"] = report.lhs_sum;
  record["rhs"] = report.rhs;
  record["equal"] = report.equal;
  if (report.direct_equal) {
    record["direct_equal"] = *report.direct_equal;
    record["agreement"] = *report.direct_equal == report.equal;
  }
  out << record.dump() << '\n';
  return report.direct_equal && *report.direct_equal != report.equal ? kExitMismatch : kExitOk;
}

void write_matrix(const ScaledMatrix<>& m, std::ostream& out) {
  out << "denom: " << m.denom << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
}

int run_cycle(const CommandConfig& config, std::ostream& out) {
  switch (config.view) {
    case CycleView::Vertices: {
      const auto cycle = build_cycle(config.t);
      for (int k = 0; k < 2 * config.t; ++k) out << k << ' ' << cycle.vertex(k).to_string() << '\n';
      break;
    }
    case CycleView::Matrix: write_matrix(cycle_matrix(config.t), out); break;
    case CycleView::Inverse: write_matrix(inverse_rows(config.t), out); break;
    case CycleView::Omega: write_matrix(omega_matrix(config.t), out); break;
    case CycleView::Gram: write_matrix(gram_matrix(config.t), out); break;
  }
  return kExitOk;
}

std::int64_t median(std::vector<std::int64_t> samples) {
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

int run_bench(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  using Clock = std::chrono::steady_clock;
  std::mt19937_64 rng(config.seed);
  std::bernoulli_distribution coin(0.5);
  SignVector signs(config.t);
  for (int i = 0; i < config.t; ++i) signs[i] = coin(rng) ? std::int8_t{1} : std::int8_t{-1};
  const Tope tope(std::move(signs));
  const auto inverse = inverse_rows(config.t);

  std::vector<std::int64_t> dense_ns;
  std::vector<std::int64_t> fast_ns;
  bool agree = true;
  for (int r = 0; r < config.reps; ++r) {
    auto start = Clock::now();
    const auto dense = spectrum_dense(tope, inverse);
    dense_ns.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
    start = Clock::now();
    const auto fast = spectrum_fast(tope);
    fast_ns.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
    agree = agree && dense == fast;
  }
  const auto dense_median = median(dense_ns);
  const auto fast_median = std::max<std::int64_t>(1, median(fast_ns));
  out << "t: " << config.t << '\n'
      << "reps: " << config.reps << '\n'
      << "dense_median_ns: " << dense_median << '\n'
      << "fast_median_ns: " << fast_median << '\n'
      << "speedup: " << static_cast<double>(dense_median) / static_cast<double>(fast_median) << '\n'
      << "agreement: " << (agree ? "true" : "false") << '\n';
  if (!agree) {
    err << "dense and fast spectra disagree\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

void validate(const CommandConfig& config) {
  require_dimension(config.t);
  const bool needs_tope = config.subcommand == Subcommand::Decompose || config.subcommand == Subcommand::Equinum;
  if (needs_tope && static_cast<int>(config.tope.size()) != config.t) {
    throw Error(ErrorKind::InvalidArgument, "tope string length " + std::to_string(config.tope.size()) +
                                                " does not match t=" + std::to_string(config.t));
  }
  if (config.subcommand == Subcommand::Equinum && config.subset.empty()) {
    throw Error(ErrorKind::InvalidArgument, "equinum needs --subset");
  }
  if (config.enumeration_cap < 1 || config.oracle_max < 1 || config.reps < 1) {
    throw Error(ErrorKind::InvalidArgument, "caps and reps must be positive");
  }
}

ParseOutcome parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decompositions of hypercube vertices along the distinguished symmetric cycle", "cyclotope"};
  app.require_subcommand(1);
  CommandConfig config;

  const std::map<std::string, Method> methods{
      {"dense", Method::Dense}, {"fast", Method::Fast}, {"intervals", Method::Intervals}, {"all", Method::All}};
  const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};

  auto* decompose = app.add_subcommand("decompose", "Spectrum and decomposition of one tope (JSON)");
  decompose->add_option("--t", config.t, "Dimension")->required();
  decompose->add_option("--tope", config.tope, "Tope as a +/- string")->required();
  decompose->add_option("--method", config.method, "Spectrum route (default fast)")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case).description(""))
      ->option_text("dense|fast|intervals|all");

  auto* stats = app.add_subcommand("stats", "Counts by negative-part size j and decomposition size l");
  stats->add_option("--t", config.t, "Dimension")->required();
  stats->add_flag("--enumerate", config.enumerate, "Add exhaustive counts and cross-check");
  stats->add_option("--format", config.format, "Table format (default csv)")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->option_text("csv|json");
  stats->add_option("--output", config.output, "Write the table to this file");
  stats->add_option("--cap", config.enumeration_cap, "Largest t allowed for enumeration");

  auto* verify = app.add_subcommand("verify", "Run the invariant suites at one dimension");
  verify->add_option("--t", config.t, "Dimension")->required();
  verify->add_option("--oracle-max", config.oracle_max, "Largest t for the brute-force oracle");
  verify->add_option("--cap", config.enumeration_cap, "Largest t allowed for enumeration");

  auto* equinum = app.add_subcommand("equinum", "Decide |Q(T)| = |Q(-A T)| by the boundary-sum criterion");
  equinum->add_option("--t", config.t, "Dimension")->required();
  equinum->add_option("--tope", config.tope, "Tope as a +/- string")->required();
  equinum->add_option("--subset", config.subset, "Comma-separated elements of A, or none")->required();
  equinum->add_flag("--oracle", config.oracle, "Also compare decomposition sizes directly");

  auto* cycle = app.add_subcommand("cycle", "Print the cycle or one of its exact matrices");
  cycle->add_option("--t", config.t, "Dimension")->required();
  auto* as_matrix = cycle->add_flag("--matrix", "M, rows R^0..R^{t-1}");
  auto* as_inverse = cycle->add_flag("--inverse", "2*M^{-1}");
  auto* as_omega = cycle->add_flag("--omega", "4*M^{-1}(M^{-1})^T");
  auto* as_gram = cycle->add_flag("--gram", "M*M^T");
  as_matrix->excludes(as_inverse, as_omega, as_gram);
  as_inverse->excludes(as_omega, as_gram);
  as_omega->excludes(as_gram);

  auto* bench = app.add_subcommand("bench", "Median wall time of dense vs fast spectra");
  config.t = 2048;
  bench->add_option("--t", config.t, "Dimension");
  bench->add_option("--reps", config.reps, "Repetitions");
  bench->add_option("--seed", config.seed, "Seed for the random tope");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (decompose->parsed()) config.subcommand = Subcommand::Decompose;
  if (stats->parsed()) config.subcommand = Subcommand::Stats;
  if (verify->parsed()) config.subcommand = Subcommand::Verify;
  if (equinum->parsed()) config.subcommand = Subcommand::Equinum;
  if (cycle->parsed()) {
    config.subcommand = Subcommand::Cycle;
    if (*as_matrix) config.view = CycleView::Matrix;
    if (*as_inverse) config.view = CycleView::Inverse;
    if (*as_omega) config.view = CycleView::Omega;
    if (*as_gram) config.view = CycleView::Gram;
  }
  if (bench->parsed()) config.subcommand = Subcommand::Bench;
  return config;
}

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.subcommand) {
    case Subcommand::Decompose: return run_decompose(config, out, err);
    case Subcommand::Stats: return run_stats(config, out, err);
    case Subcommand::Verify:
      return verify_all(config.t, config.oracle_max, config.enumeration_cap, out) ? kExitOk : kExitMismatch;
    case Subcommand::Equinum: return run_equinum(config, out);
    case Subcommand::Cycle: return run_cycle(config, out);
    case Subcommand::Bench: return run_bench(config, out, err);
  }
  return kExitUsage;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto parsed = parse_command_line(argc, argv, out, err);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  const auto& config = std::get<CommandConfig>(parsed);
  try {
    validate(config);
    return run(config, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace cyclotope::cli
