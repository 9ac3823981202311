#pragma once

#include "dweb/degree.hpp"
#include "dweb/poly.hpp"
#include "dweb/web.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace dweb {

struct Evaluation {
  LaurentPoly poly;
  std::uint64_t coloring_count = 0;
  std::map<int, std::uint64_t> histogram;  // degree -> number of colorings
};

struct EvalOptions {
  int threads = 1;
  bool use_cache = true;
  /// Custom tables bypass the cache.
  const SingularTables *tables = nullptr;
};

/// State sum over all colorings.
Evaluation evaluate(const Web &web, int N, const EvalOptions &opts = {});
LaurentPoly evaluate_poly(const Web &web, int N, const EvalOptions &opts = {});

/// Process-wide evaluation cache; persisted to $DWEB_CACHE_DIR when set.
class EvalCache {
public:
  static EvalCache &instance();
  bool lookup(const std::string &key, int N, Evaluation &out);
  void store(const std::string &key, int N, const Evaluation &ev);
  void clear();
  std::size_t size() const;
};

/// Environment variable naming the on-disk cache directory.
inline constexpr const char *kCacheDirEnv = "DWEB_CACHE_DIR";

/// Default thread count for parallel evaluation (settable by the CLI).
void set_default_threads(int n);
int default_threads();

}  // namespace dweb
