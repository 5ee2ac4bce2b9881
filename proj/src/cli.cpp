#include "qfock/cli.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace qfock {

nlohmann::json cache_to_json(const ColumnCache& cache) {
  nlohmann::json cols = nlohmann::json::array();
  for (const auto& c : cache.columns()) cols.push_back(to_json(*c));
  return {{"format", kCacheFormat}, {"columns", cols}};
}

void cache_from_json(const nlohmann::json& j, ColumnCache& cache) {
  if (!j.is_object() || !j.contains("format") || j["format"] != kCacheFormat)
    throw CacheFormatError(std::string("not a column cache of format ") + kCacheFormat);
  for (const auto& c : j.at("columns")) cache.insert(column_from_json(c));
}

std::string cache_dump(const ColumnCache& cache) { return cache_to_json(cache).dump() + "\n"; }

void save_cache(const ColumnCache& cache, const std::string& path) {
  const std::string text = cache_dump(cache);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << text;
    if (!f) throw std::runtime_error("write to " + tmp + " failed");
  }
  std::filesystem::rename(tmp, path);
}

void load_cache(const std::string& path, ColumnCache& cache) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw CacheFormatError(path + ": " + e.what());
  }
  cache_from_json(j, cache);
}

std::string default_cache_path() {
  const char* env = std::getenv("QFOCK_CACHE");
  return env ? env : "";
}

std::string render_column(const CanonicalColumn& col) {
  std::string out;
  for (auto it = col.entries.rbegin(); it != col.entries.rend(); ++it)
    out += it->first.to_string() + ": " + it->second.to_string() + "\n";
  return out;
}

namespace {

std::string latex_poly(const LaurentPoly& p) {
  static const std::regex power(R"(\^(-?[0-9]+))");
  return std::regex_replace(p.to_string(), power, "^{$1}");
}

}  // namespace

std::string render_matrix(const DecompositionMatrix& dm, const std::string& format) {
  std::ostringstream os;
  const size_t k = dm.labels.size();
  if (format == "csv") {
    os << "\"\"";
    for (const auto& l : dm.labels) os << ",\"" << l.to_string() << '"';
    os << '\n';
    for (size_t r = 0; r < k; ++r) {
      os << '"' << dm.labels[r].to_string() << '"';
      for (size_t c = 0; c < k; ++c) os << ',' << dm.entry[r][c].to_string();
      os << '\n';
    }
  } else if (format == "json") {
    nlohmann::json labels = nlohmann::json::array(), rows = nlohmann::json::array();
    for (const auto& l : dm.labels) labels.push_back(l.parts());
    for (size_t r = 0; r < k; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (size_t c = 0; c < k; ++c) {
        nlohmann::json e;
        to_json(e, dm.entry[r][c]);
        row.push_back(e);
      }
      rows.push_back(row);
    }
    os << nlohmann::json{{"n", dm.n}, {"size", dm.m}, {"labels", labels}, {"entries", rows}}.dump(2) << '\n';
  } else if (format == "latex") {
    os << "\\begin{tabular}{c|" << std::string(k, 'c') << "}\n";
    for (const auto& l : dm.labels) os << " & $" << l.to_string() << "$";
    os << " \\\\\n\\hline\n";
    for (size_t r = 0; r < k; ++r) {
      os << '$' << dm.labels[r].to_string() << '$';
      for (size_t c = 0; c < k; ++c) os << " & $" << latex_poly(dm.entry[r][c]) << '$';
      os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
  } else {
    throw std::invalid_argument("unknown matrix format " + format);
  }
  return os.str();
}

namespace {

std::pair<int, int> parse_rows(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("rows must look like LO:HI, got " + text);
  return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

void maybe_load(const std::string& path, ColumnCache& cache) {
  if (!path.empty() && std::filesystem::exists(path)) load_cache(path, cache);
}

struct VerifyArgs {
  std::string suite;
  int n = 2;
  std::vector<int> s;
  int max_size = 6;
  int p = 5;
  std::string runners;
  bool shape = false;
};

CheckReport run_suite(const VerifyArgs& a, ColumnCache& cache) {
  const std::vector<int> charges = a.s.empty() ? std::vector<int>{0, 1} : a.s;
  std::vector<RunnerTuple> tuples;
  if (!a.runners.empty()) {
    tuples.push_back(RunnerTuple::parse(a.runners));
  } else {
    for (int r : {2, 3})
      for (const auto& t : runner_tuples(a.n, r)) tuples.push_back(t);
  }
  CheckReport rep;
  rep.theorem = a.suite;
  rep.parameters = {{"max_size", a.max_size}, {"s", charges}};
  if (a.suite == "relations") {
    rep.parameters["n"] = a.n;
    for (int s : charges) rep.merge(check_relations(FockContext{a.n, s}, a.max_size));
  } else if (a.suite == "columns") {
    rep.parameters = {{"n", a.n}, {"max_size", a.max_size}};
    rep.merge(verify_columns(a.n, a.max_size, true, cache));
  } else if (a.suite == "bar") {
    rep.parameters["n"] = a.n;
    for (int s : charges) rep.merge(verify_bar_symmetry(a.n, s, a.max_size, cache));
  } else if (a.suite == "decomp" || a.suite == "runner") {
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& t : tuples) ts.push_back(t.to_string());
    rep.parameters["runner_tuples"] = ts;
    for (const auto& t : tuples)
      for (int s : charges) {
        if (a.suite == "decomp") {
          rep.merge(verify_decomp(t, s, a.max_size, BeadChoice::Rightmost, cache));
        } else {
          for (int m = 0; m <= a.max_size; ++m) rep.merge(verify_runner_removal(t, s, m, cache));
        }
      }
  } else if (a.suite == "fk") {
    rep.parameters["shape"] = a.shape;
    for (int s : charges) rep.merge(verify_fk(s, a.max_size, a.shape, cache));
  } else if (a.suite == "lbt") {
    rep.parameters = {{"p", a.p}, {"max_size", a.max_size}};
    rep.merge(verify_lbt(a.p, a.max_size, cache));
  } else if (a.suite == "moves") {
    rep.parameters = {{"p", a.p}, {"max_size", a.max_size}};
    rep.merge(verify_moves(a.p, a.max_size, 2, cache));
  } else if (a.suite == "branching") {
    rep.parameters["p"] = a.p;
    for (int s : charges) rep.merge(verify_branching(a.p, s, a.max_size, cache));
  } else {
    throw std::invalid_argument("unknown suite " + a.suite);
  }
  return rep;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-decomposition numbers of the level-1 Fock space", "qfock"};
  app.require_subcommand(1);

  std::string cache_path = default_cache_path();

  int n = 2, s = 0, size = 0;
  std::string mu_text, format;

  auto* column = app.add_subcommand("column", "print the column of G(mu)");
  column->add_option("--n", n, "level")->required()->check(CLI::Range(2, 64));
  column->add_option("--mu", mu_text, "partition, e.g. (3,1^2)")->required();
  column->add_option("--format", format, "text or json")->default_val("text")->check(CLI::IsMember({"text", "json"}));
  column->add_option("--cache", cache_path, "column cache to read")->default_val(cache_path);

  auto* dmatrix = app.add_subcommand("dmatrix", "decomposition matrix of one size");
  dmatrix->add_option("--n", n, "level")->required()->check(CLI::Range(2, 64));
  dmatrix->add_option("--size", size, "partition size")->required()->check(CLI::NonNegativeNumber);
  dmatrix->add_option("--format", format, "csv, json or latex")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "json", "latex"}));
  dmatrix->add_option("--cache", cache_path, "column cache to read")->default_val(cache_path);

  std::string runners, rows;
  auto* abacus = app.add_subcommand("abacus", "draw the abacus of a partition");
  abacus->add_option("--n", n, "number of runners")->required()->check(CLI::Range(1, 64));
  abacus->add_option("--mu", mu_text, "partition")->required();
  abacus->add_option("--s", s, "charge")->default_val(0);
  abacus->add_option("--runners", runners, "runner tuple for section separators, e.g. 4,2,3");
  abacus->add_option("--rows", rows, "inclusive row window LO:HI");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification suite, print a JSON report");
  verify->add_option("--suite", va.suite, "suite")
      ->required()
      ->check(CLI::IsMember({"relations", "columns", "bar", "decomp", "runner", "fk", "lbt", "moves", "branching"}));
  verify->add_option("--n", va.n, "level")->default_val(2)->check(CLI::Range(2, 64));
  verify->add_option("--s", va.s, "charges (default 0 and 1)");
  verify->add_option("--max-size", va.max_size, "largest partition size")->default_val(6);
  verify->add_option("--p", va.p, "level for lbt, moves and branching")->default_val(5);
  verify->add_option("--runners", va.runners, "a single runner tuple instead of all 2- and 3-part tuples");
  verify->add_flag("--shape", va.shape, "fk: also check the monomial and 2^#cups shape");
  verify->add_option("--cache", cache_path, "column cache to read")->default_val(cache_path);

  std::string cache_file = default_cache_path();
  auto* cache = app.add_subcommand("cache", "manage the persistent column cache");
  cache->add_option("--file", cache_file, "cache file (default $QFOCK_CACHE)");
  cache->require_subcommand(1);
  int warm_n = 2, warm_size = 0;
  auto* warm = cache->add_subcommand("warm", "compute and persist all columns up to a size");
  warm->add_option("--n", warm_n, "level")->required()->check(CLI::Range(2, 64));
  warm->add_option("--size", warm_size, "largest partition size")->required()->check(CLI::NonNegativeNumber);
  auto* stats = cache->add_subcommand("stats", "column counts per level");
  auto* exp = cache->add_subcommand("export", "print the cache in canonical form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  ColumnCache local;
  try {
    if (column->parsed()) {
      Partition mu = Partition::parse(mu_text);
      maybe_load(cache_path, local);
      auto col = canonical_column(mu, n, local);
      if (format == "json")
        out << to_json(*col).dump(2) << '\n';
      else
        out << render_column(*col);
      return 0;
    }
    if (dmatrix->parsed()) {
      maybe_load(cache_path, local);
      out << render_matrix(decomposition_matrix(n, size, local), format);
      return 0;
    }
    if (abacus->parsed()) {
      Partition mu = Partition::parse(mu_text);
      RenderOptions opt;
      if (!runners.empty()) {
        opt.sections = RunnerTuple::parse(runners);
        if (opt.sections->n() != n) throw std::invalid_argument("runner tuple " + runners + " does not sum to n");
      }
      if (!rows.empty()) opt.rows = parse_rows(rows);
      out << render_abacus(beta_set(mu, s), n, opt);
      return 0;
    }
    if (verify->parsed()) {
      maybe_load(cache_path, local);
      CheckReport rep = run_suite(va, local);
      out << rep.to_json().dump(2) << '\n';
      return rep.ok() ? 0 : 1;
    }
    if (cache->parsed()) {
      if (cache_file.empty()) throw std::invalid_argument("no cache file: pass --file or set QFOCK_CACHE");
      maybe_load(cache_file, local);
      if (warm->parsed()) {
        const size_t before = local.size();
        for (int m = 0; m <= warm_size; ++m)
          for (const auto& mu : partitions_of(m)) canonical_column(mu, warm_n, local);
        save_cache(local, cache_file);
        out << "warm: " << local.size() - before << " new columns, " << local.size() << " total\n";
      } else if (stats->parsed()) {
        std::map<int, std::map<int, int>> counts;
        for (const auto& c : local.columns()) ++counts[c->n][c->mu.size()];
        out << "columns: " << local.size() << '\n';
        for (const auto& [lvl, by_size] : counts) {
          out << "n=" << lvl << ':';
          for (const auto& [m, k] : by_size) out << ' ' << m << '=' << k;
          out << '\n';
        }
      } else if (exp->parsed()) {
        out << cache_dump(local);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace qfock
