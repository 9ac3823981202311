#include "dweb/evaluate.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace dweb {

namespace {

std::atomic<int> g_threads{1};

using Histogram = std::map<int, std::uint64_t>;

Histogram histogram_of(const Web &web, int N, const SingularTables &tables, const std::vector<int> &roots) {
  Histogram h;
  const DegreeContext ctx(web, N, tables);
  ColoringSearch(web, N).run(
      [&](const Coloring &c) {
        ++h[ctx.degree(c)];
        return true;
      },
      roots);
  return h;
}

std::uint64_t fnv1a(const std::string &s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string serialize_eval(const std::string &key, int N, const Evaluation &ev) {
  std::ostringstream os;
  os << "dweb-eval 1 " << N << " " << ev.coloring_count << " " << ev.histogram.size();
  for (const auto &[d, n] : ev.histogram) os << " " << d << " " << n;
  os << "\n" << key;
  return os.str();
}

bool deserialize_eval(const std::string &text, const std::string &key, int N, Evaluation &ev) {
  std::istringstream is(text);
  std::string tag;
  int version = 0, n = 0;
  std::size_t k = 0;
  if (!(is >> tag >> version >> n >> ev.coloring_count >> k) || tag != "dweb-eval" || version != 1 || n != N) return false;
  ev.histogram.clear();
  for (std::size_t i = 0; i < k; ++i) {
    int d = 0;
    std::uint64_t c = 0;
    if (!(is >> d >> c)) return false;
    ev.histogram[d] = c;
  }
  is.get();
  std::string rest((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  if (rest != key) return false;
  ev.poly = LaurentPoly();
  for (const auto &[d, c] : ev.histogram) ev.poly += LaurentPoly::monomial(d, BigInt(c));
  return true;
}

struct CacheState {
  std::mutex mu;
  std::unordered_map<std::string, Evaluation> mem;
};

CacheState &cache_state() {
  static CacheState s;
  return s;
}

std::filesystem::path cache_file(const std::string &key, int N) {
  const char *dir = std::getenv(kCacheDirEnv);
  if (!dir || !*dir) return {};
  std::ostringstream name;
  name << std::hex << fnv1a(key) << "_n" << std::dec << N << ".eval";
  return std::filesystem::path(dir) / name.str();
}

}  // namespace

void set_default_threads(int n) { g_threads = n < 1 ? 1 : n; }
int default_threads() { return g_threads; }

EvalCache &EvalCache::instance() {
  static EvalCache c;
  return c;
}

bool EvalCache::lookup(const std::string &key, int N, Evaluation &out) {
  auto &s = cache_state();
  const std::string k = std::to_string(N) + "|" + key;
  {
    std::lock_guard lock(s.mu);
    if (auto it = s.mem.find(k); it != s.mem.end()) {
      out = it->second;
      return true;
    }
  }
  const auto path = cache_file(key, N);
  if (path.empty()) return false;
  std::ifstream in(path);
  if (!in) return false;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (!deserialize_eval(text, key, N, out)) return false;
  std::lock_guard lock(s.mu);
  s.mem[k] = out;
  return true;
}

void EvalCache::store(const std::string &key, int N, const Evaluation &ev) {
  auto &s = cache_state();
  {
    std::lock_guard lock(s.mu);
    s.mem[std::to_string(N) + "|" + key] = ev;
  }
  const auto path = cache_file(key, N);
  if (path.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  // Write then rename so concurrent readers never see a partial file.
  const auto tmp = path.string() + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << serialize_eval(key, N, ev);
  }
  std::filesystem::rename(tmp, path, ec);
}

void EvalCache::clear() {
  auto &s = cache_state();
  std::lock_guard lock(s.mu);
  s.mem.clear();
}

std::size_t EvalCache::size() const {
  auto &s = cache_state();
  std::lock_guard lock(s.mu);
  return s.mem.size();
}

Evaluation evaluate(const Web &web, int N, const EvalOptions &opts) {
  if (N < 1) throw std::invalid_argument("evaluate: N must be positive");
  const bool cacheable = opts.use_cache && opts.tables == nullptr;
  std::string key;
  Evaluation ev;
  if (cacheable) {
    key = canonical_key(web);
    if (EvalCache::instance().lookup(key, N, ev)) return ev;
  }
  const SingularTables &tables = opts.tables ? *opts.tables : default_tables();
  const ColoringSearch search(web, N);
  const int roots = search.root_choices();
  const int threads = std::max(1, std::min(opts.threads > 1 ? opts.threads : default_threads(), roots));
  Histogram h;
  if (threads <= 1) {
    h = histogram_of(web, N, tables, {});
  } else {
    std::vector<Histogram> parts(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          std::vector<int> mine;
          for (int r = t; r < roots; r += threads) mine.push_back(r);
          parts[t] = histogram_of(web, N, tables, mine);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto &th : pool) th.join();
    for (auto &e : errors)
      if (e) std::rethrow_exception(e);
    for (const auto &p : parts)
      for (const auto &[d, n] : p) h[d] += n;
  }
  ev.histogram = std::move(h);
  for (const auto &[d, n] : ev.histogram) {
    ev.coloring_count += n;
    ev.poly += LaurentPoly::monomial(d, BigInt(n));
  }
  if (cacheable) EvalCache::instance().store(key, N, ev);
  return ev;
}

LaurentPoly evaluate_poly(const Web &web, int N, const EvalOptions &opts) { return evaluate(web, N, opts).poly; }

}  // namespace dweb
