#pragma once
// Small shared utilities: a deterministic cross-platform RNG (so verification
// trials are reproducible from (seed, trial) alone), and complex number
// parsing/formatting used by the CLI and report writers.

#include <cctype>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace glpair::util {

using cplx = std::complex<double>;

/// splitmix64 step; the standard 64-bit finalizer-based generator.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Deterministic RNG.  Identical output on every platform (no reliance on
/// implementation-defined distributions), cheap to fork per trial.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ^ 0xD1B54A32D192ED03ull) {
    // Warm up so small seeds do not produce small first outputs.
    (void)splitmix64(state_);
    (void)splitmix64(state_);
  }

  /// Independent stream for one trial of one suite: mixing is injective in
  /// (seed, trial), so running trials concurrently or out of order cannot
  /// change any trial's data.
  [[nodiscard]] static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (0x9E3779B97F4A7C15ull * (trial + 1));
    return Rng(splitmix64(s));
  }

  [[nodiscard]] std::uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform double in [0, 1) with 53 random bits.
  [[nodiscard]] double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  [[nodiscard]] double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi] inclusive.
  [[nodiscard]] int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(next_u64() % span);
  }

  [[nodiscard]] int sign() { return (next_u64() & 1) ? 1 : -1; }

  [[nodiscard]] cplx box(double re_lo, double re_hi, double im_lo, double im_hi) {
    return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
  }

 private:
  std::uint64_t state_;
};

/// Format with 15 significant digits; pure reals print without an "i" part.
[[nodiscard]] inline std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

[[nodiscard]] inline std::string format_complex(const cplx& z) {
  if (z.imag() == 0.0) return format_real(z.real());
  std::string s = format_real(z.real());
  s += (z.imag() < 0 || std::isnan(z.imag())) ? "-" : "+";
  s += format_real(std::abs(z.imag()));
  s += "i";
  return s;
}

/// Parse "a", "bi", or "a+bi" / "a-bi" (scientific notation allowed).
[[nodiscard]] inline cplx parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  const bool has_i = s.back() == 'i' || s.back() == 'I';
  std::string body = has_i ? s.substr(0, s.size() - 1) : s;

  // Find the sign that separates real and imaginary parts: a '+'/'-' that is
  // not the leading character and not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }

  const auto to_double = [](const std::string& t) -> double {
    if (t.empty() || t == "+") return 1.0;  // bare "i" / "+i"
    if (t == "-") return -1.0;              // bare "-i"
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end == nullptr || *end != '\0')
      throw std::invalid_argument("bad numeric literal: '" + t + "'");
    return v;
  };

  if (!has_i) {
    if (split != std::string::npos)
      throw std::invalid_argument("bad complex literal: '" + text + "'");
    return {to_double(body), 0.0};
  }
  if (split == std::string::npos) return {0.0, to_double(body)};
  return {to_double(body.substr(0, split)), to_double(body.substr(split))};
}

/// Parse a comma-separated list of complex numbers.
[[nodiscard]] inline std::vector<cplx> parse_complex_list(const std::string& text) {
  std::vector<cplx> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(parse_complex(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

/// Parse a comma-separated list of integers (parities, indices).
[[nodiscard]] inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(std::stoi(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

/// Relative difference |a-b| / max(|a|,|b|,floor); symmetric and safe at 0.
[[nodiscard]] inline double rel_err(const cplx& a, const cplx& b, double floor = 1e-300) {
  const double scale = std::max({std::abs(a), std::abs(b), floor});
  return std::abs(a - b) / scale;
}

}  // namespace glpair::util
