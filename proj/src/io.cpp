#include "rdca/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace rdca {

namespace {

// Shortest decimal form that round-trips the double, so file output is
// byte-stable across runs and platforms with the same FP semantics.
std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::vector<long long> read_ints(const std::string& text,
                                 const char* what) {
  std::istringstream in(text);
  std::vector<long long> out;
  long long v = 0;
  while (in >> v) out.push_back(v);
  if (!in.eof()) {
    std::string tok;
    in.clear();
    in >> tok;
    throw ParseError(std::string(what) + ": non-numeric token '" + tok + "'");
  }
  return out;
}

int narrow(long long v, const char* what) {
  if (v < -1000000 || v > 1000000)
    throw ParseError(std::string(what) + ": value out of range");
  return static_cast<int>(v);
}

}  // namespace

std::string to_text(const ReactionFunction& f) {
  std::ostringstream out;
  out << f.capacity() << ' ' << f.viability() << '\n';
  const auto& v = f.values();
  for (std::size_t i = 0; i < v.size(); ++i)
    out << v[i] << (i + 1 == v.size() ? '\n' : ' ');
  return out.str();
}

ReactionFunction parse_reaction(const std::string& text) {
  const auto nums = read_ints(text, "reaction");
  if (nums.size() < 2) throw ParseError("reaction: missing capacity/threshold");
  const int K = narrow(nums[0], "reaction capacity");
  const int a = narrow(nums[1], "reaction threshold");
  if (K < 1 || static_cast<long long>(nums.size()) != 2 + K + 1)
    throw ParseError("reaction: expected " + std::to_string(K + 1) +
                     " table values");
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(K) + 1);
  for (std::size_t i = 2; i < nums.size(); ++i)
    values.push_back(narrow(nums[i], "reaction value"));
  return ReactionFunction::from_table(K, a, std::move(values));
}

ReactionFunction load_reaction(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open reaction file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_reaction(buf.str());
}

std::string to_text(const WaveProfile& w) {
  std::ostringstream out;
  out << w.capacity() << ' ' << w.transition_index();
  for (int v : w.core()) out << ' ' << v;
  out << '\n';
  return out.str();
}

WaveProfile parse_profile(const std::string& text) {
  const auto nums = read_ints(text, "profile");
  if (nums.size() < 2) throw ParseError("profile: missing capacity/length");
  const int K = narrow(nums[0], "profile capacity");
  const int N = narrow(nums[1], "profile transition index");
  if (N < 1 || static_cast<long long>(nums.size()) != 2 + (N - 1))
    throw ParseError("profile: expected " + std::to_string(N - 1) +
                     " core values");
  std::vector<int> core;
  core.reserve(static_cast<std::size_t>(N) - 1);
  for (std::size_t i = 2; i < nums.size(); ++i)
    core.push_back(narrow(nums[i], "profile value"));
  return WaveProfile(std::move(core), K);
}

std::string to_text(const HigherOrderWave& hw) {
  std::ostringstream out;
  out << hw.shift << ' ' << hw.period << ' ' << hw.gamma_num << ' '
      << hw.gamma_den << '\n';
  for (const auto& w : hw.orbit) {
    const auto p = extract_profile(w);
    if (!p) throw IoError("orbit state is not a monotone front");
    out << to_text(*p);
  }
  return out.str();
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  os << "K,a,delta,lambda,replicate,seed,kind,c,m,gamma_num,gamma_den\n";
  for (const auto& r : result.records) {
    const auto& c = r.result;
    os << result.capacity << ',' << r.viability << ',' << r.delta << ','
       << format_double(r.lambda) << ',' << r.replicate << ',' << r.seed
       << ',' << to_token(c.kind) << ',' << c.shift << ',' << c.period << ','
       << c.gamma_num << ',' << c.gamma_den << '\n';
  }
}

namespace {

template <class T, class Fmt>
std::string join(const std::vector<T>& xs, Fmt fmt) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += fmt(xs[i]);
  }
  return out;
}

}  // namespace

void write_sweep_meta(std::ostream& os, const SweepResult& result) {
  const auto& cfg = result.config;
  os << "K=" << result.capacity << '\n';
  os << "a_values="
     << join(result.viability_values,
             [](int v) { return std::to_string(v); })
     << '\n';
  os << "delta_values="
     << join(result.delta_values, [](int v) { return std::to_string(v); })
     << '\n';
  os << "format=rdca-sweep-v1\n";
  os << "jobs=" << result.jobs << '\n';
  os << "lambda_values="
     << join(result.lambda_values, [](double v) { return format_double(v); })
     << '\n';
  os << "master_seed=" << cfg.master_seed << '\n';
  os << "max_period=" << cfg.max_period << '\n';
  os << "replicates=" << cfg.replicates << '\n';
  os << "total_steps=" << cfg.total_steps << '\n';
  os << "transient_steps=" << cfg.transient_steps << '\n';
  os << "window_length=" << cfg.window_length << '\n';
}

void write_pgm(std::ostream& os, const std::vector<std::vector<int>>& rows,
               int capacity) {
  if (rows.empty() || rows.front().empty())
    throw InvalidParams("cannot render an empty trajectory");
  if (capacity < 1) throw InvalidParams("capacity must be >= 1");
  const std::size_t width = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != width)
      throw InvalidParams("trajectory rows must have equal width");
  os << "P5\n" << width << ' ' << rows.size() << "\n255\n";
  for (const auto& r : rows)
    for (int u : r)
      os.put(static_cast<char>(static_cast<unsigned char>(255 * u / capacity)));
}

std::string render_text(const std::vector<std::vector<int>>& rows,
                        int capacity) {
  static const char ramp[] = " .:-=+*#%@";
  constexpr int levels = 9;  // indices 0..9
  if (capacity < 1) throw InvalidParams("capacity must be >= 1");
  std::string out;
  for (const auto& r : rows) {
    for (int u : r) out += ramp[u * levels / capacity];
    out += '\n';
  }
  return out;
}

}  // namespace rdca
