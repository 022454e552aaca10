// splitspecies: counts, enumerates, classifies and decomposes split graphs.
//
// Exit status: 0 success, 1 a verification found a discrepancy, 2 usage
// error, 3 invalid or oversized input.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "random_suite.hpp"
#include "splitspecies/json_io.hpp"

namespace ss = splitspecies;
using ss::Json;

namespace {

constexpr int kExitDiscrepancy = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

constexpr int kMaxFormulaOrder = 1000;
constexpr int kMaxChainOrder = 400;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ss::fail(ss::ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<std::string> tag_names() {
  std::vector<std::string> out;
  for (auto tag : ss::kAllClassTags) out.emplace_back(ss::to_string(tag));
  return out;
}

ss::ClassTag tag_of(const std::string& name) {
  const auto tag = ss::parse_class_tag(name);
  if (!tag) throw UsageError("unknown class " + name);
  return *tag;
}

// ---- count ---------------------------------------------------------------

struct CountArgs {
  std::string cls;
  bool labeled = false;
  bool unlabeled = false;
  int n = -1;
  int max_n = -1;
  std::string format = "text";
  bool census = false;
  bool oracle = false;
};

const ss::RationalSeries* chain_member(const ss::LabeledChain& chain, ss::ClassTag tag) {
  switch (tag) {
    case ss::ClassTag::Unbalanced: return &chain.unbalanced;
    case ss::ClassTag::Balanced: return &chain.balanced;
    case ss::ClassTag::KCanonical:
    case ss::ClassTag::SCanonical: return &chain.k_canonical;
    case ss::ClassTag::Ambiguous: return &chain.ambiguous;
    case ss::ClassTag::ColoredSplit:
    case ss::ClassTag::BicoloredNoIsolatedGreen: return &chain.colored_split;
    default: return nullptr;
  }
}

ss::CountTable labeled_table(ss::ClassTag tag, int lo, int hi, bool oracle) {
  ss::CountTable table(std::string(ss::to_string(tag)), true);
  if (oracle) {
    for (int n = lo; n <= hi; ++n)
      table.set(n, ss::count_labeled(n, tag),
                tag == ss::ClassTag::AllGraphs ? ss::Provenance::Formula : ss::Provenance::Oracle);
    return table;
  }
  switch (tag) {
    case ss::ClassTag::AllGraphs:
    case ss::ClassTag::Bicolored:
    case ss::ClassTag::Split:
      if (hi > kMaxFormulaOrder)
        ss::fail(ss::ErrorCode::TooLarge, "closed-form counts are limited to n <= " + std::to_string(kMaxFormulaOrder));
      for (int n = lo; n <= hi; ++n) {
        mpz_class value = tag == ss::ClassTag::Bicolored ? ss::bicolored_labeled(n)
                          : tag == ss::ClassTag::Split   ? ss::split_labeled(n)
                                                         : ss::count_labeled(n, tag);
        table.set(n, std::move(value), ss::Provenance::Formula);
      }
      return table;
    default: break;
  }
  if (hi > kMaxChainOrder)
    ss::fail(ss::ErrorCode::TooLarge, "series-chain counts are limited to n <= " + std::to_string(kMaxChainOrder));
  const ss::LabeledChain chain = ss::derive_labeled_chain(hi);
  const auto counts = chain_member(chain, tag)->counts();
  for (int n = lo; n <= hi; ++n) table.set(n, counts[static_cast<std::size_t>(n)].get_num(), ss::Provenance::SeriesChain);
  return table;
}

ss::CountTable unlabeled_table(ss::ClassTag tag, int lo, int hi) {
  ss::CountTable table(std::string(ss::to_string(tag)), false);
  if (hi > ss::max_enumeration_order(tag))
    ss::fail(ss::ErrorCode::TooLarge, "unlabeled " + std::string(ss::to_string(tag)) + " counts are limited to n <= " +
                                          std::to_string(ss::max_enumeration_order(tag)));
  for (int n = lo; n <= hi; ++n)
    table.set(n, mpz_class(static_cast<unsigned long>(ss::count_unlabeled(n, tag))), ss::Provenance::Oracle);
  return table;
}

void print_census(const ss::Census& census, const std::string& format) {
  if (format == "json") return print(ss::to_json(census));
  if (format == "csv") {
    std::cout << "n,tag,labeled,unlabeled\n";
    for (const auto& row : census.rows)
      std::cout << census.n << ',' << row.tag << ',' << row.labeled.get_str() << ',' << row.unlabeled << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& row : census.rows) width = std::max(width, row.tag.size());
  for (const auto& row : census.rows)
    std::cout << row.tag << std::string(width - row.tag.size() + 2, ' ') << row.labeled.get_str() << ' '
              << row.unlabeled << '\n';
}

int run_count(const CountArgs& a) {
  if (a.census) {
    if (a.n < 0 || a.max_n >= 0) throw UsageError("--census needs --n");
    if (!a.cls.empty() || a.labeled || a.unlabeled || a.oracle)
      throw UsageError("--census reports every class; drop --class/--labeled/--unlabeled/--oracle");
    print_census(ss::class_census(a.n), a.format);
    return 0;
  }
  if (a.cls.empty()) throw UsageError("--class is required");
  if ((a.n < 0) == (a.max_n < 0)) throw UsageError("give exactly one of --n and --max-n");
  if (a.unlabeled && a.oracle) throw UsageError("unlabeled counts always come from enumeration; drop --oracle");
  const ss::ClassTag tag = tag_of(a.cls);
  const int lo = a.n >= 0 ? a.n : 0;
  const int hi = a.n >= 0 ? a.n : a.max_n;
  const ss::CountTable table = a.unlabeled ? unlabeled_table(tag, lo, hi) : labeled_table(tag, lo, hi, a.oracle);

  if (a.format == "json") {
    print(ss::to_json(table));
  } else if (a.format == "csv") {
    std::cout << "n,count,provenance\n";
    for (const auto& [n, e] : table.entries())
      std::cout << n << ',' << e.value.get_str() << ',' << ss::to_string(e.provenance) << '\n';
  } else if (a.n >= 0) {
    std::cout << table.find(a.n)->value.get_str() << '\n';
  } else {
    for (const auto& [n, e] : table.entries()) std::cout << n << ' ' << e.value.get_str() << '\n';
  }
  return 0;
}

// ---- enumerate / classify / biject ----------------------------------------

int run_enumerate(const std::string& cls, int n, const std::string& format) {
  const ss::ClassTag tag = tag_of(cls);
  if (format == "json") {
    Json all = Json::array();
    ss::for_each_labeled(n, tag, [&](const ss::Structure& s) { all.push_back(ss::to_json(s)); });
    std::cout << all.dump() << '\n';
  } else {
    ss::for_each_labeled(n, tag, [](const ss::Structure& s) { std::cout << ss::to_json(s).dump() << '\n'; });
  }
  return 0;
}

Json partition_json(const ss::KSPartition& p) {
  return Json{{"clique", ss::to_json(p.clique)}, {"stable", ss::to_json(p.stable)}};
}

int run_classify(const std::string& path) {
  const ss::Graph g = ss::graph_from_json(ss::parse_structure_document(read_file(path)));
  const ss::SwingReport report = ss::swing_report(g);
  Json out = Json::object();
  out["graph"] = ss::to_json(g);
  out["class"] = std::string(ss::to_string(ss::classify(report)));
  out["swing_report"] = ss::to_json(report);
  Json partitions = Json::array();
  for (const auto& p : ss::ks_partitions(g)) partitions.push_back(partition_json(p));
  out["ks_partitions"] = std::move(partitions);
  const auto canonical = ss::canonical_partition(g);
  out["canonical_partition"] = canonical ? partition_json(*canonical) : Json(nullptr);
  print(out);
  return 0;
}

const std::vector<std::string> kMaps = {"uk-decompose",  "uk-compose",        "amb-decompose",    "amb-compose",
                                        "cuk-decompose", "cuk-compose",       "split-to-bicolored",
                                        "bicolored-to-split"};

int run_biject(const std::string& map, const std::string& path) {
  const Json in = ss::parse_structure_document(read_file(path));
  Json out;
  if (map == "uk-decompose") out = ss::to_json(ss::uk_decompose(ss::graph_from_json(in)));
  else if (map == "uk-compose") {
    const auto parts = ss::k_canonical_parts_from_json(in);
    out = ss::to_json(ss::uk_compose(parts.swings, parts.rest));
  } else if (map == "amb-decompose") out = ss::to_json(ss::amb_decompose(ss::graph_from_json(in)));
  else if (map == "amb-compose") {
    const auto parts = ss::ambiguous_parts_from_json(in);
    out = ss::to_json(ss::amb_compose(parts.swing, parts.rest));
  } else if (map == "cuk-decompose") out = ss::to_json(ss::cuk_decompose(ss::colored_from_json(in)));
  else if (map == "cuk-compose") {
    const auto parts = ss::colored_k_canonical_parts_from_json(in);
    out = ss::to_json(ss::cuk_compose(parts.swings, parts.rest));
  } else if (map == "split-to-bicolored") out = ss::to_json(ss::split_to_bicolored(ss::colored_from_json(in)));
  else out = ss::to_json(ss::bicolored_to_split(ss::bicolored_from_json(in)));
  print(out);
  return 0;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  int max_n = -1;
  std::uint64_t seed = 1;
  int samples = 1000;
  std::string cache;
};

Json discrepancies_json(const std::vector<ss::Discrepancy>& list) {
  Json out = Json::array();
  for (const auto& d : list) out.push_back({{"n", d.n}, {"check", d.check}, {"expected", d.expected}, {"actual", d.actual}});
  return out;
}

int run_identities(int max_n) {
  if (max_n > 7) ss::fail(ss::ErrorCode::TooLarge, "the identities suite is limited to n <= 7");
  Json censuses = Json::array();
  std::vector<ss::Census> tables;
  bool passed = true;
  for (int n = 0; n <= max_n; ++n) {
    tables.push_back(ss::tabulate_census(n));
    Json identities = Json::array();
    for (const auto& r : ss::census_identities(tables.back())) {
      identities.push_back({{"name", r.name}, {"holds", r.holds}});
      passed = passed && r.holds;
    }
    censuses.push_back({{"n", n}, {"identities", std::move(identities)}});
  }
  const auto discrepancies = ss::oracle_discrepancies(tables, std::min(max_n, 6), max_n);
  passed = passed && discrepancies.empty();

  Json out = Json::object();
  out["suite"] = "identities";
  out["max_n"] = max_n;
  out["censuses"] = std::move(censuses);
  out["oracle_discrepancies"] = discrepancies_json(discrepancies);
  out["passed"] = passed;
  print(out);
  return passed ? 0 : kExitDiscrepancy;
}

int run_formulas(int max_n, const std::string& cache_path) {
  std::optional<ss::CountTable> cache;
  if (!cache_path.empty()) {
    if (std::filesystem::exists(cache_path)) {
      cache = ss::count_table_from_json(ss::parse_structure_document(read_file(cache_path)));
      if (cache->kind() != "split-bp" || !cache->labeled())
        ss::fail(ss::ErrorCode::ParseError, cache_path + " is not a labeled split-bp table");
    } else {
      cache.emplace("split-bp", true);
    }
  }
  ss::CrossCheckOptions options;
  options.bp_cache = cache ? &*cache : nullptr;
  const ss::CrossCheckReport report = ss::cross_check(max_n, options);
  if (cache) {
    std::ofstream(cache_path) << ss::to_json(*cache).dump(2) << '\n';
  }
  Json out = Json::object();
  out["suite"] = "formulas";
  const Json body = ss::to_json(report);
  for (const auto& [key, value] : body.items()) out[key] = value;
  out["passed"] = report.discrepancies.empty();
  print(out);
  return report.discrepancies.empty() ? 0 : kExitDiscrepancy;
}

int run_verify(const VerifyArgs& a) {
  if (a.suite == "identities") return run_identities(a.max_n < 0 ? 6 : a.max_n);
  if (!a.cache.empty() && a.suite != "formulas") throw UsageError("--cache applies to the formulas suite");
  if (a.suite == "formulas") return run_formulas(a.max_n < 0 ? 318 : a.max_n, a.cache);
  const int max_n = a.max_n < 0 ? 7 : a.max_n;
  if (max_n < 1) throw UsageError("--max-n must be at least 1 for the random suite");
  if (max_n > ss::kMaxVertices) ss::fail(ss::ErrorCode::TooLarge, "random graphs are limited to 16 vertices");
  const Json report = ss::cli::run_random_suite(a.seed, a.samples, max_n);
  print(report);
  return report["passed"].get<bool>() ? 0 : kExitDiscrepancy;
}

// ---- asym ------------------------------------------------------------------

int run_asym(int max_n, const std::string& format, int bits, int unlabeled_max) {
  std::vector<mpz_class> split_tilde;
  std::vector<mpz_class> bicolored_tilde;
  for (int n = 0; n <= unlabeled_max; ++n) {
    const ss::Census census = ss::tabulate_census(n);
    split_tilde.emplace_back(static_cast<unsigned long>(census.at(ss::ClassTag::Split).unlabeled));
    bicolored_tilde.emplace_back(static_cast<unsigned long>(census.at(ss::ClassTag::Bicolored).unlabeled));
  }
  const ss::RatioReport report = ss::ratio_report(max_n, split_tilde, bits);
  if (format == "csv") {
    std::cout << ss::ratio_report_csv(report);
    return 0;
  }
  Json out = ss::to_json(report);
  out["bits"] = bits;
  if (max_n >= 2) out["inequalities"] = ss::to_json(ss::check_b_ratio(max_n, split_tilde, bicolored_tilde));
  print(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting, enumeration and bijections for split graphs"};
  app.require_subcommand(1);

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Count labeled or unlabeled structures of a class");
  count_cmd->add_option("--class", count.cls, "Class tag")->check(CLI::IsMember(tag_names()));
  auto* labeled_flag = count_cmd->add_flag("--labeled", count.labeled, "Labeled counts (default)");
  count_cmd->add_flag("--unlabeled", count.unlabeled, "Unlabeled counts, by canonical forms")->excludes(labeled_flag);
  auto* n_opt = count_cmd->add_option("--n", count.n, "Single size")->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--max-n", count.max_n, "All sizes 0..max-n")->check(CLI::NonNegativeNumber)->excludes(n_opt);
  count_cmd->add_option("--format", count.format)->check(CLI::IsMember({"text", "csv", "json"}));
  count_cmd->add_flag("--census", count.census, "Every class at size --n, labeled and unlabeled");
  count_cmd->add_flag("--oracle", count.oracle, "Count labeled structures by exhaustive enumeration");

  std::string enum_class;
  int enum_n = 0;
  std::string enum_format = "jsonl";
  auto* enum_cmd = app.add_subcommand("enumerate", "List every labeled structure of a class");
  enum_cmd->add_option("--class", enum_class)->required()->check(CLI::IsMember(tag_names()));
  enum_cmd->add_option("--n", enum_n)->required()->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--format", enum_format)->check(CLI::IsMember({"jsonl", "json"}));

  std::string classify_path;
  auto* classify_cmd = app.add_subcommand("classify", "Split class and swing vertices of a graph");
  classify_cmd->add_option("--graph", classify_path, "Graph file (JSON or edge-list text)")->required();

  std::string map;
  std::string biject_path;
  auto* biject_cmd = app.add_subcommand("biject", "Apply one direction of a bijection");
  biject_cmd->add_option("--map", map)->required()->check(CLI::IsMember(kMaps));
  biject_cmd->add_option("--graph,--input", biject_path, "Input document (JSON or edge-list text)")->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", verify.suite)->required()->check(CLI::IsMember({"identities", "formulas", "random"}));
  verify_cmd->add_option("--max-n", verify.max_n)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--samples", verify.samples)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--cache", verify.cache, "JSON file of previously computed Bína–Přibil values");

  int asym_max_n = 200;
  std::string asym_format = "csv";
  int asym_bits = ss::kDefaultBits;
  int asym_unlabeled = 6;
  auto* asym_cmd = app.add_subcommand("asym", "Ratios against the asymptotic formulas");
  asym_cmd->add_option("--max-n", asym_max_n)->check(CLI::Range(1, 400));
  asym_cmd->add_option("--format", asym_format)->check(CLI::IsMember({"csv", "json"}));
  asym_cmd->add_option("--bits", asym_bits)->check(CLI::Range(64, 1 << 16));
  asym_cmd->add_option("--unlabeled-max", asym_unlabeled, "Unlabeled rows from enumeration up to this n (-1: none)")
      ->check(CLI::Range(-1, 7));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*count_cmd) return run_count(count);
    if (*enum_cmd) return run_enumerate(enum_class, enum_n, enum_format);
    if (*classify_cmd) return run_classify(classify_path);
    if (*biject_cmd) return run_biject(map, biject_path);
    if (*verify_cmd) return run_verify(verify);
    if (*asym_cmd) return run_asym(asym_max_n, asym_format, asym_bits, asym_unlabeled);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ss::SpeciesError& e) {
    std::cerr << "error (" << ss::to_string(e.code()) << "): " << e.what() << '\n';
    return e.code() == ss::ErrorCode::IdentityViolation ? kExitDiscrepancy : kExitInput;
  }
  return kExitUsage;
}
