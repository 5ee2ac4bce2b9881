#pragma once

#include "qfock/fk2.hpp"

#include <iosfwd>
#include <string>

namespace qfock {

inline constexpr const char* kCacheFormat = "qfock-columns/1";

struct CacheFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"format": kCacheFormat, "columns": [...]} with columns ordered by (n, mu).
nlohmann::json cache_to_json(const ColumnCache& cache);
// Refuses anything whose format tag is not kCacheFormat.
void cache_from_json(const nlohmann::json& j, ColumnCache& cache);
// Canonical text: compact dump plus a trailing newline.
std::string cache_dump(const ColumnCache& cache);
void save_cache(const ColumnCache& cache, const std::string& path);
void load_cache(const std::string& path, ColumnCache& cache);

// $QFOCK_CACHE, or empty.
std::string default_cache_path();

// Column text: one "lambda: d" line per entry, decreasing lex.
std::string render_column(const CanonicalColumn& col);
std::string render_matrix(const DecompositionMatrix& dm, const std::string& format);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qfock
